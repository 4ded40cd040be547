//! Companion/weight certificates for pairs at distance 2.

use num_traits::Zero;
use serde::Serialize;

use super::simplex::{phase1, Constraint, Phase1, Sense};
use crate::function::Profile;
use crate::graph::{jcirc_set, m_set, Graph};
use crate::rational::Q;
use crate::{Error, Result};

/// Default cap on `|I°(u,v)|` for the subset search.
pub const DEFAULT_INTERIOR_CAP: usize = 8;

/// A subset `S` of `I°(u,v)`, a weight `η` on `S` summing to 1, and a
/// companion for every member of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaBetaCertificate {
    pub s: Vec<usize>,
    pub eta: Profile,
    pub companions: Vec<(usize, usize)>,
}

/// Searches subsets `S ⊆ I°(u,v)` (in increasing bitmask order) for a
/// companion assignment and weight `η` such that
///
/// * each `s` has a companion `t` in `S` with
///   `d(s,x) + d(t,x) <= d(u,x) + d(v,x)` for all `x` in `M(u,v)`, and
///   `η(s) = η(t)` whenever `d(s,t) = 2`;
/// * every `x` in `J°(u,v)` has neighbours in `S` carrying at least half
///   the total weight.
pub fn alpha_beta_certificate(
    g: &Graph,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Option<AlphaBetaCertificate>> {
    if g.d(u, v) != 2 {
        return Err(Error::WrongDistance { expected: 2, found: g.d(u, v) });
    }
    let interior = g.interior_interval(u, v).to_vec();
    if interior.len() > cap {
        return Err(Error::InteriorTooLarge { size: interior.len(), cap });
    }
    let m = m_set(g, u, v).to_vec();
    let jc = jcirc_set(g, u, v).to_vec();
    let companion_ok = |s: usize, t: usize| {
        m.iter().all(|&x| g.d(s, x) + g.d(t, x) <= g.d(u, x) + g.d(v, x))
    };

    for mask in 1u32..(1u32 << interior.len()) {
        let s: Vec<usize> =
            (0..interior.len()).filter(|i| mask >> i & 1 == 1).map(|i| interior[i]).collect();
        // per member: a free companion, or the list of distance-2 options
        let mut fixed: Vec<(usize, usize)> = Vec::new();
        let mut choices: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut dead = false;
        for &a in &s {
            let ok: Vec<usize> = s.iter().copied().filter(|&b| companion_ok(a, b)).collect();
            if let Some(&b) = ok.iter().find(|&&b| g.d(a, b) <= 1) {
                fixed.push((a, b));
            } else if ok.is_empty() {
                dead = true;
                break;
            } else {
                choices.push((a, ok));
            }
        }
        if dead {
            continue;
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            let tied: Vec<(usize, usize)> =
                choices.iter().zip(&idx).map(|((a, opts), &i)| (*a, opts[i])).collect();
            if let Some(eta) = solve_weights(g, &s, &jc, &tied) {
                let mut companions = fixed.clone();
                companions.extend_from_slice(&tied);
                companions.sort_unstable();
                let eta = Profile::new(s.iter().copied().zip(eta)).expect("weights sum to 1");
                return Ok(Some(AlphaBetaCertificate { s, eta, companions }));
            }
            // next companion assignment
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].1.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(None)
}

fn solve_weights(g: &Graph, s: &[usize], jc: &[usize], tied: &[(usize, usize)]) -> Option<Vec<Q>> {
    let k = s.len();
    let pos = |x: usize| s.iter().position(|&y| y == x).expect("member of S");
    let one = Q::from_integer(1.into());
    let half = Q::new(1.into(), 2.into());
    let mut cs = vec![Constraint { coeffs: vec![one.clone(); k], sense: Sense::Eq, rhs: one.clone() }];
    for &x in jc {
        let coeffs = s.iter().map(|&a| if g.adjacent(a, x) { one.clone() } else { Q::zero() }).collect();
        cs.push(Constraint { coeffs, sense: Sense::Ge, rhs: half.clone() });
    }
    for &(a, b) in tied {
        let mut coeffs = vec![Q::zero(); k];
        coeffs[pos(a)] += &one;
        coeffs[pos(b)] -= &one;
        cs.push(Constraint { coeffs, sense: Sense::Eq, rhs: Q::zero() });
    }
    match phase1(k, &cs) {
        Phase1::Feasible(x) => Some(x),
        Phase1::Infeasible(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_pair() {
        // C_4: S = {1, 3}, each its own companion
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = alpha_beta_certificate(&g, 0, 2, DEFAULT_INTERIOR_CAP).unwrap().unwrap();
        assert!(!c.s.is_empty());
    }

    #[test]
    fn singleton_interior() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let c = alpha_beta_certificate(&g, 0, 2, DEFAULT_INTERIOR_CAP).unwrap().unwrap();
        assert_eq!(c.s, vec![1]);
        assert_eq!(c.eta.weight(1), Q::from_integer(1.into()));
    }

    #[test]
    fn wrong_distance_and_cap() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(alpha_beta_certificate(&g, 0, 1, 8), Err(Error::WrongDistance { .. })));
        assert!(matches!(alpha_beta_certificate(&g, 0, 2, 0), Err(Error::InteriorTooLarge { .. })));
    }
}
