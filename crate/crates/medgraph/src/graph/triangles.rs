//! Metric triangles, quasi-medians and the sets `J`, `M`, `J°`, `S`.

use serde::Serialize;

use super::{Graph, VertexSet};
use crate::{Error, Result};

/// Three vertices whose pairwise intervals meet only at the corners.
/// `size` is set only when all three sides have the same length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MetricTriangle {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub size: Option<u32>,
}

impl MetricTriangle {
    pub fn new(g: &Graph, v1: usize, v2: usize, v3: usize) -> Self {
        let (a, b, c) = (g.d(v1, v2), g.d(v2, v3), g.d(v1, v3));
        let size = (a == b && b == c).then_some(a);
        MetricTriangle { v1, v2, v3, size }
    }

    pub fn corners(&self) -> [usize; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Side lengths `(d(v1,v2), d(v2,v3), d(v1,v3))`.
    pub fn sides(&self, g: &Graph) -> (u32, u32, u32) {
        (g.d(self.v1, self.v2), g.d(self.v2, self.v3), g.d(self.v1, self.v3))
    }
}

/// `I(a,b) ∩ I(a,c) = {a}` for each corner `a`.
pub fn is_metric_triangle(g: &Graph, v1: usize, v2: usize, v3: usize) -> bool {
    let corner_ok = |a: usize, b: usize, c: usize| {
        (0..g.n()).all(|w| w == a || !(g.in_interval(a, b, w) && g.in_interval(a, c, w)))
    };
    corner_ok(v1, v2, v3) && corner_ok(v2, v1, v3) && corner_ok(v3, v1, v2)
}

fn common_interval(g: &Graph, a: usize, b: usize, c: usize) -> Vec<usize> {
    (0..g.n()).filter(|&w| g.in_interval(a, b, w) && g.in_interval(a, c, w)).collect()
}

/// All quasi-medians of the triple `(x, y, z)`, in lexicographic order of
/// `(v1, v2, v3)` where `v1` is attached to `x`, `v2` to `y`, `v3` to `z`.
pub fn enumerate_quasi_medians(g: &Graph, x: usize, y: usize, z: usize) -> Vec<MetricTriangle> {
    let a = common_interval(g, x, y, z);
    let b = common_interval(g, y, x, z);
    let c = common_interval(g, z, x, y);
    let mut out = Vec::new();
    for &v1 in &a {
        for &v2 in &b {
            if g.d(x, v1) + g.d(v1, v2) + g.d(v2, y) != g.d(x, y) {
                continue;
            }
            for &v3 in &c {
                if g.d(y, v2) + g.d(v2, v3) + g.d(v3, z) != g.d(y, z)
                    || g.d(z, v3) + g.d(v3, v1) + g.d(v1, x) != g.d(z, x)
                {
                    continue;
                }
                if is_metric_triangle(g, v1, v2, v3) {
                    out.push(MetricTriangle::new(g, v1, v2, v3));
                }
            }
        }
    }
    out
}

fn farthest(g: &Graph, from: usize, candidates: impl Iterator<Item = usize>) -> usize {
    let mut best: Option<(u32, usize)> = None;
    for w in candidates {
        let d = g.d(from, w);
        if best.map_or(true, |(bd, _)| d > bd) {
            best = Some((d, w));
        }
    }
    best.expect("candidate set contains the base vertex").1
}

/// The greedy quasi-median: `v1` farthest from `x` in `I(x,y) ∩ I(x,z)`, then
/// `v2` farthest from `y` in `I(y,v1) ∩ I(y,z)`, then `v3` farthest from `z`
/// in `I(z,v1) ∩ I(z,v2)`. Ties go to the smallest index.
pub fn greedy_quasi_median(g: &Graph, x: usize, y: usize, z: usize) -> MetricTriangle {
    let n = g.n();
    let v1 = farthest(g, x, (0..n).filter(|&w| g.in_interval(x, y, w) && g.in_interval(x, z, w)));
    let v2 = farthest(g, y, (0..n).filter(|&w| g.in_interval(y, v1, w) && g.in_interval(y, z, w)));
    let v3 = farthest(g, z, (0..n).filter(|&w| g.in_interval(z, v1, w) && g.in_interval(z, v2, w)));
    MetricTriangle::new(g, v1, v2, v3)
}

/// Whether every corner is at distance `size` from the whole opposite side.
pub fn is_strongly_equilateral(g: &Graph, t: &MetricTriangle) -> Result<bool> {
    let k = match t.size {
        Some(k) => k,
        None => {
            let (a, b, c) = t.sides(g);
            if a == b && b == c {
                a
            } else {
                return Err(Error::NotEquilateral);
            }
        }
    };
    let [a, b, c] = t.corners();
    let side_ok = |i: usize, j: usize, l: usize| {
        (0..g.n()).all(|x| !g.in_interval(j, l, x) || g.d(i, x) == k)
    };
    Ok(side_ok(a, b, c) && side_ok(b, a, c) && side_ok(c, a, b))
}

/// `J(u,v)`: vertices `z` with `I(z,u) ∩ I(z,v) = {z}`.
pub fn j_set(g: &Graph, u: usize, v: usize) -> VertexSet {
    let n = g.n();
    VertexSet::from_vertices(
        n,
        (0..n).filter(|&z| (0..n).all(|w| w == z || !(g.in_interval(z, u, w) && g.in_interval(z, v, w)))),
    )
}

/// `M(u,v)`: members of `J(u,v)` equidistant from `u` and `v`.
pub fn m_set(g: &Graph, u: usize, v: usize) -> VertexSet {
    let j = j_set(g, u, v);
    VertexSet::from_vertices(g.n(), j.iter().filter(|&z| g.d(u, z) == g.d(v, z)))
}

/// `J°(u,v) = J(u,v) \ M(u,v)`.
pub fn jcirc_set(g: &Graph, u: usize, v: usize) -> VertexSet {
    j_set(g, u, v).difference(&m_set(g, u, v))
}

/// `S(u,v)`: vertices `z` such that some quasi-median of `(z,u,v)` is
/// strongly equilateral.
pub fn s_set(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    if u == v || g.adjacent(u, v) {
        return Err(Error::Precondition(format!("S({u},{v}) needs nonadjacent distinct vertices")));
    }
    let n = g.n();
    let mut out = VertexSet::empty(n);
    for z in 0..n {
        let hit = enumerate_quasi_medians(g, z, u, v)
            .iter()
            .any(|t| t.size.is_some() && is_strongly_equilateral(g, t) == Ok(true));
        if hit {
            out.insert(z);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn c6_triangle() {
        let g = cycle(6);
        let qm = enumerate_quasi_medians(&g, 0, 2, 4);
        assert_eq!(qm, vec![MetricTriangle { v1: 0, v2: 2, v3: 4, size: Some(2) }]);
        assert_eq!(greedy_quasi_median(&g, 0, 2, 4), qm[0]);
        // d(0,3) = 3 on the side 2..4
        assert_eq!(is_strongly_equilateral(&g, &qm[0]), Ok(false));
    }

    #[test]
    fn c5_triangle_is_not_equilateral() {
        let g = cycle(5);
        let t = greedy_quasi_median(&g, 0, 2, 4);
        assert_eq!(t.corners(), [0, 2, 4]);
        assert_eq!(t.size, None);
        assert_eq!(t.sides(&g), (2, 2, 1));
        assert_eq!(is_strongly_equilateral(&g, &t), Err(Error::NotEquilateral));
    }

    #[test]
    fn k3_triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = greedy_quasi_median(&g, 0, 1, 2);
        assert_eq!(t.size, Some(1));
        assert_eq!(is_strongly_equilateral(&g, &t), Ok(true));
    }

    #[test]
    fn j_and_m_on_c4() {
        let g = cycle(4);
        assert_eq!(j_set(&g, 0, 2).len(), 4);
        assert_eq!(m_set(&g, 0, 2).to_vec(), vec![1, 3]);
        assert!(jcirc_set(&g, 0, 2).to_vec() == vec![0, 2]);
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(j_set(&k2, 0, 1).to_vec(), vec![0, 1]);
    }

    #[test]
    fn s_set_on_c5() {
        let g = cycle(5);
        // z = 0,2 lie on the pair; z = 1 is the midpoint; z = 3,4 see a (2,2,1) triangle
        let s = s_set(&g, 0, 2).unwrap();
        assert_eq!(s.to_vec(), vec![0, 1, 2]);
    }
}
