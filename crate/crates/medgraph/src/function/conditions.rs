//! The pair conditions WC, WP, Loz and their global p-versions.

use rayon::prelude::*;

use super::VertexFunction;
use crate::graph::Graph;
use crate::rational::Q;
use crate::{Error, Result};

fn require_nonadjacent(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u == v || g.adjacent(u, v) {
        Err(Error::Precondition(format!("pair ({u},{v}) must be distinct and nonadjacent")))
    } else {
        Ok(())
    }
}

fn interior(g: &Graph, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
    (0..g.n()).filter(move |&w| w != u && w != v && g.in_interval(u, v, w))
}

/// WC(u,v): some `w` in `I°(u,v)` has
/// `d(u,v) f(w) <= d(v,w) f(u) + d(u,w) f(v)`.
pub fn check_wc(g: &Graph, f: &VertexFunction, u: usize, v: usize) -> Result<bool> {
    require_nonadjacent(g, u, v)?;
    let duv = Q::from_integer(g.d(u, v).into());
    Ok(interior(g, u, v).any(|w| {
        let lhs = &duv * &f[w];
        let rhs = Q::from_integer(g.d(v, w).into()) * &f[u] + Q::from_integer(g.d(u, w).into()) * &f[v];
        lhs <= rhs
    }))
}

/// WP(u,v): some `w` in `I°(u,v)` has `f(w) <= max(f(u), f(v))`, with
/// equality only when `f(u) = f(w) = f(v)`.
pub fn check_wp(g: &Graph, f: &VertexFunction, u: usize, v: usize) -> Result<bool> {
    require_nonadjacent(g, u, v)?;
    let m = std::cmp::max(&f[u], &f[v]);
    Ok(interior(g, u, v).any(|w| &f[w] < m || (f[w] == f[u] && f[w] == f[v])))
}

/// Loz(u,v): some `w, w'` in `I°(u,v)` have `f(w) + f(w') <= f(u) + f(v)`.
pub fn check_loz(g: &Graph, f: &VertexFunction, u: usize, v: usize) -> Result<bool> {
    require_nonadjacent(g, u, v)?;
    let best = interior(g, u, v).map(|w| &f[w]).min();
    Ok(match best {
        Some(m) => m + m <= &f[u] + &f[v],
        None => false,
    })
}

type PairCheck = fn(&Graph, &VertexFunction, usize, usize) -> Result<bool>;

fn holds_on_pairs(g: &Graph, f: &VertexFunction, lo: u32, hi: u32, check: PairCheck) -> bool {
    g.pairs_at_distance(lo, hi)
        .par_iter()
        .all(|&(u, v)| check(g, f, u, v).expect("pairs at distance >= 2 are nonadjacent"))
}

/// WP on every pair with `p+1 <= d(u,v) <= 2p`.
pub fn is_p_weakly_peakless(g: &Graph, f: &VertexFunction, p: u32) -> bool {
    holds_on_pairs(g, f, p + 1, 2 * p, check_wp)
}

/// WC on every pair with `p+1 <= d(u,v) <= 2p`.
pub fn is_p_weakly_convex(g: &Graph, f: &VertexFunction, p: u32) -> bool {
    holds_on_pairs(g, f, p + 1, 2 * p, check_wc)
}

/// WP on every pair with `d(u,v) >= p+1`.
pub fn is_p_weakly_peakless_all_pairs(g: &Graph, f: &VertexFunction, p: u32) -> bool {
    holds_on_pairs(g, f, p + 1, u32::MAX, check_wp)
}

/// WC on every pair with `d(u,v) >= p+1`.
pub fn is_p_weakly_convex_all_pairs(g: &Graph, f: &VertexFunction, p: u32) -> bool {
    holds_on_pairs(g, f, p + 1, u32::MAX, check_wc)
}
