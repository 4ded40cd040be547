//! Benzenoid systems on the hexagonal grid and their three-tree embedding.
//!
//! Hexagons are given by axial coordinates `(a, b)`. Hexagon centres and
//! corners live on the triangular lattice: hexagon `(a, b)` is centred at
//! `(2a + b, b - a)` and its corners are the six unit neighbours of the
//! centre. Edge directions fall into three parallelism classes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

type Pt = (i64, i64);

const CORNERS: [Pt; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
const HEX_NEIGHBOURS: [Pt; 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Hexagon set in axial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenzenoidSpec {
    pub hexagons: BTreeSet<Pt>,
}

impl BenzenoidSpec {
    pub fn new(hexagons: impl IntoIterator<Item = Pt>) -> Self {
        BenzenoidSpec { hexagons: hexagons.into_iter().collect() }
    }

    pub fn single() -> Self {
        Self::new([(0, 0)])
    }

    /// Linear chain of `k` hexagons.
    pub fn linear(k: i64) -> Self {
        Self::new((0..k).map(|a| (a, 0)))
    }

    /// Four hexagons with one kink.
    pub fn bent_chain() -> Self {
        Self::new([(0, 0), (1, 0), (1, 1), (1, 2)])
    }

    /// Six hexagons around an empty cell.
    pub fn ring() -> Self {
        Self::new(HEX_NEIGHBOURS)
    }

    fn validate(&self) -> Result<()> {
        let hex = &self.hexagons;
        let Some(&start) = hex.iter().next() else {
            return Err(Error::DisconnectedHexagons);
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((a, b)) = queue.pop_front() {
            for (da, db) in HEX_NEIGHBOURS {
                let c = (a + da, b + db);
                if hex.contains(&c) && seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        if seen.len() != hex.len() {
            return Err(Error::DisconnectedHexagons);
        }
        // flood the complement from outside a padded bounding box
        let amin = hex.iter().map(|h| h.0).min().unwrap() - 1;
        let amax = hex.iter().map(|h| h.0).max().unwrap() + 1;
        let bmin = hex.iter().map(|h| h.1).min().unwrap() - 1;
        let bmax = hex.iter().map(|h| h.1).max().unwrap() + 1;
        let inside = |(a, b): Pt| amin <= a && a <= amax && bmin <= b && b <= bmax;
        let mut outside = BTreeSet::from([(amin, bmin)]);
        let mut queue = VecDeque::from([(amin, bmin)]);
        while let Some((a, b)) = queue.pop_front() {
            for (da, db) in HEX_NEIGHBOURS {
                let c = (a + da, b + db);
                if inside(c) && !hex.contains(&c) && outside.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        let cells = ((amax - amin + 1) * (bmax - bmin + 1)) as usize;
        if outside.len() + hex.len() != cells {
            return Err(Error::HoleDetected);
        }
        Ok(())
    }
}

/// A benzenoid graph with its parallelism classes and tree factors.
#[derive(Clone, Debug)]
pub struct BenzenoidGraph {
    pub graph: Graph,
    /// Triangular-lattice coordinates of each vertex.
    pub coords: Vec<Pt>,
    /// Edges `(u, v)` with `u < v` and their class `0`, `1` or `2`.
    pub edge_classes: BTreeMap<(usize, usize), u8>,
    /// Tree factors `T_1, T_2, T_3`.
    pub trees: [Graph; 3],
    /// `φ(v)`: the vertex of each tree factor containing `v`.
    pub phi: Vec<[usize; 3]>,
    /// Vertex sets of the hexagons.
    pub hexagons: Vec<Vec<usize>>,
    /// Incomplete hexagons as vertex paths.
    pub incomplete_hexagons: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub isometric: bool,
    pub pairs_checked: usize,
}

fn direction_class(d: Pt) -> u8 {
    match d {
        (1, 0) | (-1, 0) => 0,
        (0, 1) | (0, -1) => 1,
        (1, -1) | (-1, 1) => 2,
        _ => unreachable!("not a lattice unit vector"),
    }
}

fn centre((a, b): Pt) -> Pt {
    (2 * a + b, b - a)
}

fn hex_corners(h: Pt) -> [Pt; 6] {
    let c = centre(h);
    CORNERS.map(|(dx, dy)| (c.0 + dx, c.1 + dy))
}

/// Builds the benzenoid of `spec`.
pub fn benzenoid(spec: &BenzenoidSpec) -> Result<BenzenoidGraph> {
    spec.validate()?;
    let coords: Vec<Pt> = spec
        .hexagons
        .iter()
        .flat_map(|&h| hex_corners(h))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<Pt, usize> = coords.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edge_classes = BTreeMap::new();
    let mut hexagons = Vec::new();
    for &h in &spec.hexagons {
        let cs = hex_corners(h);
        let ids: Vec<usize> = cs.iter().map(|p| index[p]).collect();
        for k in 0..6 {
            let (p, q) = (cs[k], cs[(k + 1) % 6]);
            let (a, b) = (index[&p], index[&q]);
            edge_classes.insert((a.min(b), a.max(b)), direction_class((q.0 - p.0, q.1 - p.1)));
        }
        let mut sorted = ids;
        sorted.sort_unstable();
        hexagons.push(sorted);
    }
    let edges: Vec<(usize, usize)> = edge_classes.keys().copied().collect();
    let graph = Graph::build(coords.len(), &edges)?.with_name("benzenoid");

    let mut phi = vec![[0usize; 3]; coords.len()];
    let trees = [0u8, 1, 2].map(|class| {
        let (comp, tree) = tree_factor(&graph, &edge_classes, class);
        for (v, &c) in comp.iter().enumerate() {
            phi[v][class as usize] = c;
        }
        tree
    });
    let incomplete_hexagons = find_incomplete_hexagons(&graph, &edge_classes, &hexagons);
    Ok(BenzenoidGraph { graph, coords, edge_classes, trees, phi, hexagons, incomplete_hexagons })
}

/// Components of `G - E_class` and the tree on them joined by `E_class`.
fn tree_factor(g: &Graph, classes: &BTreeMap<(usize, usize), u8>, class: u8) -> (Vec<usize>, Graph) {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if classes[&(x.min(y), x.max(y))] != class && comp[y] == usize::MAX {
                    comp[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    let tree_edges: Vec<(usize, usize)> = classes
        .iter()
        .filter(|(_, &c)| c == class)
        .map(|(&(a, b), _)| (comp[a], comp[b]))
        .collect();
    let tree = Graph::build(count, &tree_edges).expect("contracting a connected graph keeps it connected");
    (comp, tree)
}

fn find_incomplete_hexagons(
    g: &Graph,
    classes: &BTreeMap<(usize, usize), u8>,
    hexagons: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    let class = |a: usize, b: usize| classes[&(a.min(b), a.max(b))];
    let mut out = BTreeSet::new();
    for x0 in 0..g.n() {
        for &x1 in g.neighbors(x0) {
            for &x2 in g.neighbors(x1) {
                if x2 == x0 {
                    continue;
                }
                for &x3 in g.neighbors(x2) {
                    if x3 == x1 || x3 == x0 {
                        continue;
                    }
                    let cs = [class(x0, x1), class(x1, x2), class(x2, x3)];
                    if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
                        continue;
                    }
                    let path = [x0, x1, x2, x3];
                    if hexagons.iter().any(|h| path.iter().all(|v| h.contains(v))) {
                        continue;
                    }
                    let p = if x0 < x3 { path.to_vec() } else { path.iter().rev().copied().collect() };
                    out.insert(p);
                }
            }
        }
    }
    out.into_iter().collect()
}

impl BenzenoidGraph {
    /// Checks `d_G(u,v) = Σ d_{T_i}(φ_i(u), φ_i(v))` on all pairs.
    pub fn verify_embedding(&self) -> EmbeddingCheck {
        let n = self.graph.n();
        let mut isometric = true;
        for u in 0..n {
            for v in u + 1..n {
                let s: u32 = (0..3).map(|i| self.trees[i].d(self.phi[u][i], self.phi[v][i])).sum();
                isometric &= s == self.graph.d(u, v);
            }
        }
        EmbeddingCheck { isometric, pairs_checked: n * (n - 1) / 2 }
    }

    /// Whether every hexagon and incomplete hexagon is gated.
    pub fn hexagons_gated(&self) -> bool {
        self.hexagons
            .iter()
            .chain(&self.incomplete_hexagons)
            .all(|h| self.graph.is_gated_set(&VertexSet::from_vertices(self.graph.n(), h.iter().copied())))
    }

    pub fn class_of(&self, a: usize, b: usize) -> Option<u8> {
        self.edge_classes.get(&(a.min(b), a.max(b))).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hexagon() {
        let b = benzenoid(&BenzenoidSpec::single()).unwrap();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (6, 6));
        for c in 0..3 {
            assert_eq!(b.edge_classes.values().filter(|&&x| x == c).count(), 2);
            assert_eq!(b.trees[c as usize].n(), 2);
        }
        assert!(b.verify_embedding().isometric);
        assert!(b.incomplete_hexagons.is_empty());
        assert!(b.hexagons_gated());
    }

    #[test]
    fn naphthalene_and_friends() {
        let b = benzenoid(&BenzenoidSpec::linear(2)).unwrap();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (10, 11));
        assert!(b.verify_embedding().isometric);
        assert!(b.incomplete_hexagons.is_empty());
        assert!(b.hexagons_gated());
        let bent = benzenoid(&BenzenoidSpec::bent_chain()).unwrap();
        assert!(!bent.incomplete_hexagons.is_empty());
        for spec in [BenzenoidSpec::linear(3), BenzenoidSpec::bent_chain()] {
            let b = benzenoid(&spec).unwrap();
            assert!(b.verify_embedding().isometric);
            assert!(b.hexagons_gated());
        }
    }

    #[test]
    fn validation() {
        assert_eq!(benzenoid(&BenzenoidSpec::ring()).unwrap_err(), Error::HoleDetected);
        assert_eq!(
            benzenoid(&BenzenoidSpec::new([(0, 0), (3, 3)])).unwrap_err(),
            Error::DisconnectedHexagons
        );
    }
}
