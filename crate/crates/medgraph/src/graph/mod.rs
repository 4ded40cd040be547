//! Graphs, distances, intervals, convex and gated sets, graph powers.

mod triangles;

pub use triangles::{
    enumerate_quasi_medians, greedy_quasi_median, is_metric_triangle, is_strongly_equilateral,
    j_set, jcirc_set, m_set, s_set, MetricTriangle,
};

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A set of vertices of a graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// All-pairs hop distances, stored row-major as 16-bit integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v] as u32
    }

    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Checks zero diagonal, symmetry, adjacency and the triangle inequality.
    pub fn check_metric(&self, g: &Graph) -> bool {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                let duv = self.get(u, v);
                if (duv == 0) != (u == v) || duv != self.get(v, u) {
                    return false;
                }
                if (duv == 1) != g.adjacent(u, v) {
                    return false;
                }
                for w in 0..n {
                    if self.get(u, w) > duv + self.get(v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A finite simple connected undirected graph on vertices `0..n`.
///
/// The distance matrix is computed by breadth-first search on first use and
/// cached; the graph is immutable afterwards.
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
    dist: OnceLock<DistMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        let dist = OnceLock::new();
        if let Some(d) = self.dist.get() {
            let _ = dist.set(d.clone());
        }
        Graph { n: self.n, adj: self.adj.clone(), name: self.name.clone(), dist }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("m", &self.edge_count())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops,
    /// out-of-range endpoints and disconnected results are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Graph { n, adj, name: None, dist: OnceLock::new() };
        if !g.is_connected_subset(&VertexSet::full(n)) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn bfs(&self, s: usize, row: &mut [u16]) {
        row.fill(u16::MAX);
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let dx = row[x];
            for &y in &self.adj[x] {
                if row[y] == u16::MAX {
                    row[y] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    /// The all-pairs distance matrix.
    pub fn dist(&self) -> &DistMatrix {
        self.dist.get_or_init(|| {
            let n = self.n;
            let mut d = vec![0u16; n * n];
            if n >= 64 {
                d.par_chunks_mut(n).enumerate().for_each(|(s, row)| self.bfs(s, row));
            } else {
                d.chunks_mut(n).enumerate().for_each(|(s, row)| self.bfs(s, row));
            }
            DistMatrix { n, d }
        })
    }

    /// Distance between `u` and `v`.
    #[inline]
    pub fn d(&self, u: usize, v: usize) -> u32 {
        self.dist().get(u, v)
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.dist().row(v).iter().copied().max().unwrap_or(0) as u32
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    /// Unordered pairs `u < v` with `lo <= d(u,v) <= hi`, in lexicographic order.
    pub fn pairs_at_distance(&self, lo: u32, hi: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let d = self.d(u, v);
                if lo <= d && d <= hi {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn in_interval(&self, u: usize, v: usize, w: usize) -> bool {
        self.d(u, w) + self.d(w, v) == self.d(u, v)
    }

    /// `I(u,v)`: vertices on some shortest `u`-`v` path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&w| self.in_interval(u, v, w)))
    }

    /// `I(u,v)` without `u` and `v`.
    pub fn interior_interval(&self, u: usize, v: usize) -> VertexSet {
        let mut s = self.interval(u, v);
        s.remove(u);
        s.remove(v);
        s
    }

    /// Closed ball of radius `r` around `v`.
    pub fn ball(&self, v: usize, r: u32) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&x| self.d(v, x) <= r))
    }

    /// The `p`-th power: `u ~ v` iff `1 <= d(u,v) <= p`.
    pub fn power(&self, p: u32) -> Graph {
        assert!(p >= 1, "power requires p >= 1");
        let edges = self.pairs_at_distance(1, p);
        let g = Graph::build(self.n, &edges).expect("power of a connected graph is connected");
        match &self.name {
            Some(name) => g.with_name(format!("{name}^{p}")),
            None => g,
        }
    }

    /// Whether `s` contains `I(x,y)` for all `x, y` in `s`.
    pub fn is_convex_set(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if (0..self.n).any(|w| !s.contains(w) && self.in_interval(x, y, w)) {
                    return false;
                }
            }
        }
        true
    }

    /// Gate map of `s` if `s` is gated: entry `x` is the gate of `x`
    /// (itself for members of `s`).
    pub fn gate_map(&self, s: &VertexSet) -> Option<Vec<usize>> {
        if s.is_empty() {
            return None;
        }
        let members = s.to_vec();
        let mut gates = vec![usize::MAX; self.n];
        for (x, slot) in gates.iter_mut().enumerate() {
            if s.contains(x) {
                *slot = x;
                continue;
            }
            let dmin = members.iter().map(|&y| self.d(x, y)).min()?;
            let mut nearest = members.iter().copied().filter(|&y| self.d(x, y) == dmin);
            let gate = nearest.next()?;
            if nearest.next().is_some() {
                return None;
            }
            if !members.iter().all(|&y| self.in_interval(x, y, gate)) {
                return None;
            }
            *slot = gate;
        }
        Some(gates)
    }

    pub fn is_gated_set(&self, s: &VertexSet) -> bool {
        self.gate_map(s).is_some()
    }

    /// Whether `s` induces a connected subgraph (the empty set counts as connected).
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else { return true };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if s.contains(y) && !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let side: Vec<bool> = (0..self.n).map(|v| self.d(0, v) % 2 == 1).collect();
        let ok = self.edges().iter().all(|&(u, v)| side[u] != side[v]);
        ok.then_some(side)
    }

    /// Subgraph induced by `vs`, relabelled in the given order. Returns
    /// `None` if it is disconnected.
    pub fn induced(&self, vs: &[usize]) -> Option<Graph> {
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(vs.len(), &edges).ok()
    }

    /// Whether `f` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &Graph, f: &[usize]) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() || f.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &x in f {
            if x >= self.n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        self.edges().iter().all(|&(u, v)| other.adjacent(f[u], f[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::build(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(Graph::build(2, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let g = Graph::build(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn distances_and_intervals() {
        let c6 = cycle(6);
        assert_eq!(c6.d(0, 3), 3);
        assert_eq!(c6.interval(0, 3).len(), 6);
        assert!(c6.dist().check_metric(&c6));
        let p4 = path(4);
        assert_eq!(p4.interval(0, 3).to_vec(), vec![0, 1, 2, 3]);
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.interior_interval(0, 1).is_empty());
    }

    #[test]
    fn powers() {
        let c6 = cycle(6);
        let sq = c6.power(2);
        assert_eq!(sq.neighbors(0), &[1, 2, 4, 5]);
        assert_eq!(c6.power(1), c6);
        let p4 = path(4);
        assert_eq!(p4.power(3).edge_count(), 6);
    }

    #[test]
    fn convex_and_gated() {
        let c6 = cycle(6);
        assert!(c6.is_convex_set(&VertexSet::from_vertices(6, [0, 1, 2])));
        assert!(!c6.is_convex_set(&VertexSet::from_vertices(6, [0, 3])));
        assert!(c6.is_convex_set(&c6.vertices()));
        assert!(!c6.is_gated_set(&VertexSet::from_vertices(6, [0, 1, 2, 3])));
        assert!(c6.is_gated_set(&VertexSet::from_vertices(6, [4])));
        assert!(c6.is_gated_set(&c6.vertices()));
        // An edge of C_6 is gated.
        let gates = c6.gate_map(&VertexSet::from_vertices(6, [0, 1])).unwrap();
        assert_eq!(gates, vec![0, 1, 1, 1, 0, 0]);
    }
}
