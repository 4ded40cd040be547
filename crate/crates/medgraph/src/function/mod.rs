//! Profiles, median functions, and peakless/convex behaviour of vertex
//! functions along geodesics and in graph powers.

mod conditions;
mod geodesic;

pub use conditions::{
    check_loz, check_wc, check_wp, is_p_weakly_convex, is_p_weakly_convex_all_pairs,
    is_p_weakly_peakless, is_p_weakly_peakless_all_pairs,
};
pub use geodesic::{
    find_peakless_p_geodesic, is_convex_on_string, is_locally_peakless_on_string,
    is_peakless_on_string, GeodesicString,
};

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::rational::{fmt_q, Q};
use crate::{Error, Result};

/// Nonnegative rational weights with finite nonempty support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    weights: BTreeMap<usize, Q>,
}

impl Profile {
    /// Builds a profile; zero weights are dropped, repeated vertices add up.
    pub fn new(weights: impl IntoIterator<Item = (usize, Q)>) -> Result<Profile> {
        let mut map: BTreeMap<usize, Q> = BTreeMap::new();
        for (v, w) in weights {
            if w.is_negative() {
                return Err(Error::Precondition(format!("negative weight at vertex {v}")));
            }
            *map.entry(v).or_insert_with(Q::zero) += w;
        }
        map.retain(|_, w| !w.is_zero());
        if map.is_empty() {
            return Err(Error::Precondition("profile has empty support".into()));
        }
        Ok(Profile { weights: map })
    }

    pub fn from_ints(weights: &[(usize, i64)]) -> Result<Profile> {
        Profile::new(weights.iter().map(|&(v, w)| (v, Q::from_integer(w.into()))))
    }

    /// Weight 1 on each listed vertex.
    pub fn indicator(vs: impl IntoIterator<Item = usize>) -> Result<Profile> {
        Profile::new(vs.into_iter().map(|v| (v, Q::from_integer(1.into()))))
    }

    pub fn weight(&self, v: usize) -> Q {
        self.weights.get(&v).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.weights.iter().map(|(&v, w)| (v, w))
    }

    pub fn support(&self) -> Vec<usize> {
        self.weights.keys().copied().collect()
    }

    pub fn total(&self) -> Q {
        self.weights.values().sum()
    }

    /// Fails if the support leaves `0..g.n()`.
    pub fn check_support(&self, g: &Graph) -> Result<()> {
        match self.weights.keys().next_back() {
            Some(&v) if v >= g.n() => Err(Error::ProfileSupportOutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }

    /// Weights scaled by the common denominator, as integers.
    pub fn to_integers(&self) -> BTreeMap<usize, num_bigint::BigInt> {
        let den = crate::rational::common_denominator(self.weights.values());
        self.weights
            .iter()
            .map(|(&v, w)| (v, (w * Q::from_integer(den.clone())).to_integer()))
            .collect()
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.weights.iter().map(|(v, w)| (v.to_string(), fmt_q(w))))
    }
}

/// A rational value on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<Q>,
}

impl VertexFunction {
    pub fn new(values: Vec<Q>) -> Self {
        VertexFunction { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        VertexFunction { values: values.iter().map(|&x| Q::from_integer(x.into())).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn min_value(&self) -> Option<&Q> {
        self.values.iter().min()
    }

    /// Vertices attaining the minimum.
    pub fn argmin(&self) -> VertexSet {
        let n = self.values.len();
        match self.min_value() {
            Some(m) => VertexSet::from_vertices(n, (0..n).filter(|&x| &self.values[x] == m)),
            None => VertexSet::empty(0),
        }
    }

    fn check_graph(&self, g: &Graph) {
        assert_eq!(self.values.len(), g.n(), "function is not defined on every vertex");
    }
}

impl std::ops::Index<usize> for VertexFunction {
    type Output = Q;
    fn index(&self, v: usize) -> &Q {
        &self.values[v]
    }
}

/// `F_π(x) = Σ π(u) d(u,x)`.
pub fn median_value(g: &Graph, pi: &Profile, x: usize) -> Q {
    pi.iter().map(|(u, w)| w * Q::from_integer(g.d(u, x).into())).sum()
}

/// `F_π` on every vertex.
pub fn median_function(g: &Graph, pi: &Profile) -> VertexFunction {
    VertexFunction::new((0..g.n()).map(|x| median_value(g, pi, x)).collect())
}

/// `Med(π)`, the minimizers of `F_π`.
pub fn median_set(g: &Graph, pi: &Profile) -> VertexSet {
    median_function(g, pi).argmin()
}

/// Local minima of `f` in `G^p`: `f(x) <= f(y)` whenever `1 <= d(x,y) <= p`.
pub fn local_minima_p(g: &Graph, f: &VertexFunction, p: u32) -> VertexSet {
    f.check_graph(g);
    let n = g.n();
    VertexSet::from_vertices(
        n,
        (0..n).filter(|&x| (0..n).all(|y| x == y || g.d(x, y) > p || f[x] <= f[y])),
    )
}

/// `lMed^p(π)`, the local medians in `G^p`.
pub fn local_median_set_p(g: &Graph, pi: &Profile, p: u32) -> VertexSet {
    local_minima_p(g, &median_function(g, pi), p)
}

/// Whether every local minimum of `f` in `G^p` is a global minimum.
pub fn is_unimodal_on_power(g: &Graph, f: &VertexFunction, p: u32) -> bool {
    local_minima_p(g, f, p) == f.argmin()
}

/// `{x : f(x) <= alpha}`.
pub fn level_set(f: &VertexFunction, alpha: &Q) -> VertexSet {
    let n = f.len();
    VertexSet::from_vertices(n, (0..n).filter(|&x| &f[x] <= alpha))
}

/// Whether `s` is connected in `G^p`.
pub fn is_p_connected(g: &Graph, s: &VertexSet, p: u32) -> bool {
    let Some(start) = s.first() else { return true };
    let mut seen = VertexSet::empty(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in s.iter() {
            if !seen.contains(y) && g.d(x, y) <= p {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    seen.len() == s.len()
}

/// Whether every pair of `s` at distance at least `p+1` has an interior
/// interval vertex in `s`.
pub fn is_p_isometric(g: &Graph, s: &VertexSet, p: u32) -> bool {
    let members = s.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if g.d(x, y) > p
                && !members.iter().any(|&w| w != x && w != y && g.in_interval(x, y, w))
            {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn path(n: usize) -> Graph {
        Graph::build(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn profile_validation() {
        assert!(Profile::from_ints(&[(0, 0)]).is_err());
        assert!(Profile::from_ints(&[(0, -1)]).is_err());
        let p = Profile::from_ints(&[(2, 1), (0, 3), (2, 1), (1, 0)]).unwrap();
        assert_eq!(p.support(), vec![0, 2]);
        assert_eq!(p.weight(2), q(2));
        assert!(p.check_support(&path(2)).is_err());
        assert!(p.check_support(&path(3)).is_ok());
    }

    #[test]
    fn p3_endpoints() {
        let g = path(3);
        let pi = Profile::indicator([0, 2]).unwrap();
        assert_eq!(median_value(&g, &pi, 1), q(2));
        assert_eq!(median_set(&g, &pi).to_vec(), vec![0, 1, 2]);
        assert_eq!(local_median_set_p(&g, &pi, 1).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn c7_cycle_profile() {
        let g = cycle(7);
        let pi = Profile::from_ints(&[(0, 3), (3, 3), (5, 1)]).unwrap();
        let med = median_set(&g, &pi);
        assert_eq!(med.to_vec(), vec![0, 3]);
        assert!(!is_p_connected(&g, &med, 2));
        assert!(is_p_connected(&g, &med, 3));
    }

    #[test]
    fn connectivity_and_isometry() {
        let g = cycle(7);
        let all = g.vertices();
        for p in 1..4 {
            assert!(is_p_connected(&g, &all, p));
            assert!(is_p_isometric(&g, &all, p));
        }
        let s = VertexSet::from_vertices(7, [0, 3]);
        assert!(!is_p_isometric(&g, &s, 2));
        let f = VertexFunction::from_ints(&[0, 1, 2, 3, 3, 2, 1]);
        assert_eq!(level_set(&f, &q(1)).to_vec(), vec![0, 1, 6]);
    }
}
