//! Geodesic strings and the peakless p-geodesic construction.

use std::cmp::Ordering;

use serde::Serialize;

use super::{check_wp, VertexFunction};
use crate::graph::Graph;
use crate::rational::Q;
use crate::{Error, Result};

/// A vertex sequence lying in this order on one geodesic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicString {
    vertices: Vec<usize>,
}

impl GeodesicString {
    /// Validates `d(w_0,w_j) = d(w_0,w_i) + d(w_i,w_j)` for `i < j`, with
    /// strictly increasing distance from `w_0`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<GeodesicString> {
        if vertices.is_empty() || vertices.iter().any(|&v| v >= g.n()) {
            return Err(Error::NotGeodesicString);
        }
        let w0 = vertices[0];
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let (a, b) = (vertices[i], vertices[j]);
                if g.d(w0, b) != g.d(w0, a) + g.d(a, b) || a == b {
                    return Err(Error::NotGeodesicString);
                }
            }
        }
        Ok(GeodesicString { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Largest distance between consecutive vertices.
    pub fn max_step(&self, g: &Graph) -> u32 {
        self.vertices.windows(2).map(|w| g.d(w[0], w[1])).max().unwrap_or(0)
    }
}

/// Values strictly decrease, stay constant, then strictly increase.
pub fn is_peakless_on_string(f: &VertexFunction, s: &GeodesicString) -> bool {
    let vals: Vec<&Q> = s.vertices.iter().map(|&v| &f[v]).collect();
    let mut i = 0;
    while i + 1 < vals.len() && vals[i] > vals[i + 1] {
        i += 1;
    }
    while i + 1 < vals.len() && vals[i] == vals[i + 1] {
        i += 1;
    }
    while i + 1 < vals.len() && vals[i] < vals[i + 1] {
        i += 1;
    }
    i + 1 >= vals.len()
}

/// Local form: `f(w_i) <= max` of its two neighbours, with equality only if
/// all three values agree.
pub fn is_locally_peakless_on_string(f: &VertexFunction, s: &GeodesicString) -> bool {
    s.vertices.windows(3).all(|t| {
        let (a, b, c) = (&f[t[0]], &f[t[1]], &f[t[2]]);
        let m = std::cmp::max(a, c);
        b < m || (a == b && b == c)
    })
}

/// `d(w_{i-1},w_{i+1}) f(w_i) <= d(w_{i+1},w_i) f(w_{i-1}) + d(w_{i-1},w_i) f(w_{i+1})`
/// on consecutive triples.
pub fn is_convex_on_string(g: &Graph, f: &VertexFunction, s: &GeodesicString) -> bool {
    let dq = |a: usize, b: usize| Q::from_integer(g.d(a, b).into());
    s.vertices.windows(3).all(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        dq(a, c) * &f[b] <= dq(c, b) * &f[a] + dq(a, b) * &f[c]
    })
}

/// A `p`-geodesic from `u` to `v` along which `f` is peakless, built by
/// splitting at the smallest-index minimizer of `f` on `I°(u,v)`.
pub fn find_peakless_p_geodesic(
    g: &Graph,
    f: &VertexFunction,
    u: usize,
    v: usize,
    p: u32,
) -> Result<GeodesicString> {
    if p == 0 {
        return Err(Error::Precondition("p must be at least 1".into()));
    }
    let path = peakless_path(g, f, u, v, p)?;
    let s = GeodesicString::new(g, path)?;
    if s.max_step(g) > p || !is_peakless_on_string(f, &s) {
        return Err(Error::NotPeakless { u, v });
    }
    Ok(s)
}

fn peakless_path(g: &Graph, f: &VertexFunction, u: usize, v: usize, p: u32) -> Result<Vec<usize>> {
    if u == v {
        return Ok(vec![u]);
    }
    if g.d(u, v) <= p {
        return Ok(vec![u, v]);
    }
    if f[u] > f[v] {
        let mut rev = peakless_path(g, f, v, u, p)?;
        rev.reverse();
        return Ok(rev);
    }
    if !check_wp(g, f, u, v)? {
        return Err(Error::NotPeakless { u, v });
    }
    let w = (0..g.n())
        .filter(|&w| w != u && w != v && g.in_interval(u, v, w))
        .min_by(|&a, &b| f[a].cmp(&f[b]).then(a.cmp(&b)))
        .expect("nonadjacent pair has nonempty interior");
    let mut path = peakless_path(g, f, u, w, p)?;
    let tail = peakless_path(g, f, w, v, p)?;
    path.extend_from_slice(&tail[1..]);
    if f[w].cmp(&f[u]) == Ordering::Greater {
        // drop the constant run after u: jump straight to its last vertex
        let start = path.iter().position(|&x| x == w).expect("w lies on the path");
        let mut m = start;
        while m + 1 < path.len() && f[path[m + 1]] == f[w] {
            m += 1;
        }
        if g.d(u, path[m]) > p {
            return Err(Error::NotPeakless { u, v });
        }
        let mut short = vec![u];
        short.extend_from_slice(&path[m..]);
        return Ok(short);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn path(n: usize) -> Graph {
        Graph::build(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn string_validation() {
        let g = path(4);
        assert!(GeodesicString::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(GeodesicString::new(&g, vec![0, 2, 3]).is_ok());
        assert!(GeodesicString::new(&g, vec![0, 2, 1]).is_err());
        assert!(GeodesicString::new(&g, vec![0, 0]).is_err());
    }

    #[test]
    fn peakless_and_convex_on_strings() {
        let g = path(4);
        let s = GeodesicString::new(&g, vec![0, 1, 2, 3]).unwrap();
        let lin = VertexFunction::from_ints(&[0, 1, 2, 3]);
        assert!(is_peakless_on_string(&lin, &s) && is_convex_on_string(&g, &lin, &s));
        let valley = VertexFunction::from_ints(&[2, 0, 0, 2]);
        assert!(is_peakless_on_string(&valley, &s) && is_convex_on_string(&g, &valley, &s));
        let p3 = path(3);
        let s3 = GeodesicString::new(&p3, vec![0, 1, 2]).unwrap();
        let peak = VertexFunction::from_ints(&[0, 1, 0]);
        assert!(!is_peakless_on_string(&peak, &s3));
        assert!(!is_locally_peakless_on_string(&peak, &s3));
    }

    #[test]
    fn monotone_path() {
        let g = path(5);
        let f = VertexFunction::new((0..5).map(q).collect());
        let s = find_peakless_p_geodesic(&g, &f, 0, 4, 1).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 2, 3, 4]);
        let s = find_peakless_p_geodesic(&g, &f, 4, 0, 1).unwrap();
        assert_eq!(s.vertices(), &[4, 3, 2, 1, 0]);
        let s = find_peakless_p_geodesic(&g, &f, 1, 3, 2).unwrap();
        assert_eq!(s.vertices(), &[1, 3]);
    }

    #[test]
    fn peak_is_reported() {
        let g = path(3);
        let f = VertexFunction::from_ints(&[0, 1, 0]);
        assert_eq!(find_peakless_p_geodesic(&g, &f, 0, 2, 1), Err(Error::NotPeakless { u: 0, v: 2 }));
    }

    #[test]
    fn plateau_jump() {
        // f rises from u onto a plateau; p = 2 lets the string skip it
        let g = path(5);
        let f = VertexFunction::from_ints(&[0, 5, 5, 6, 7]);
        let s = find_peakless_p_geodesic(&g, &f, 0, 4, 2).unwrap();
        assert!(is_peakless_on_string(&f, &s));
        assert!(s.max_step(&g) <= 2);
    }
}
