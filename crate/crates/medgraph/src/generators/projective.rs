//! Point-line incidence graph of `PG(2,q)` with two apex vertices.

use crate::graph::Graph;
use crate::{Error, Result};

/// The graph `G_q` and the positions of its parts.
#[derive(Clone, Debug)]
pub struct ProjectiveGraph {
    pub graph: Graph,
    /// Number of points (= number of lines) `q^2 + q + 1`.
    pub points: usize,
    /// Apex adjacent to all points.
    pub u: usize,
    /// Apex adjacent to all lines.
    pub v: usize,
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Normalised nonzero vectors of `F_q^3` (first nonzero entry 1), in
/// lexicographic order.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Points are `0..N`, lines `N..2N`, then `u = 2N` and `v = 2N + 1`, where
/// `N = q^2 + q + 1`. A point lies on a line when their dot product vanishes
/// mod `q`.
pub fn projective_incidence_graph(q: u64) -> Result<ProjectiveGraph> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q > 97 {
        return Err(Error::ParameterOutOfRange("projective plane needs q <= 97".into()));
    }
    let pts = projective_points(q);
    let n = pts.len();
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                edges.push((i, n + j));
            }
        }
    }
    let (u, v) = (2 * n, 2 * n + 1);
    edges.extend((0..n).map(|i| (u, i)));
    edges.extend((0..n).map(|j| (v, n + j)));
    let graph = Graph::build(2 * n + 2, &edges)?.with_name(format!("G{q}"));
    Ok(ProjectiveGraph { graph, points: n, u, v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano() {
        let pg = projective_incidence_graph(2).unwrap();
        assert_eq!(pg.graph.n(), 16);
        for i in 0..7 {
            assert_eq!(pg.graph.degree(i), 4); // 3 lines + u
            assert_eq!(pg.graph.degree(7 + i), 4); // 3 points + v
        }
        assert_eq!(pg.graph.d(pg.u, pg.v), 3);
    }

    #[test]
    fn q3() {
        let pg = projective_incidence_graph(3).unwrap();
        assert_eq!(pg.graph.n(), 28);
        assert_eq!(pg.graph.degree(pg.points), 5);
        assert_eq!(projective_incidence_graph(4).unwrap_err(), Error::NotPrime(4));
    }
}
