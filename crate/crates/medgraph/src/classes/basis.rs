use rayon::prelude::*;
use serde::Serialize;

use super::{is_modular, ClassVerdict};
use crate::graph::Graph;
use crate::{Error, Result};

/// Induced squares `[a, b, c, d]` (cyclic order) with `a < c`, `b < d`
/// and `a` the smallest corner.
fn induced_squares(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for (a, c) in g.pairs_at_distance(2, 2) {
        let common: Vec<usize> = g.neighbors(a).iter().copied().filter(|&x| g.adjacent(x, c)).collect();
        for (i, &b) in common.iter().enumerate() {
            for &d in &common[i + 1..] {
                if !g.adjacent(b, d) && a < b.min(d) {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Positioning condition over induced squares. Witness `[u, a, b, c, d]`.
pub fn satisfies_pc(g: &Graph) -> ClassVerdict {
    let squares = induced_squares(g);
    let w = (0..g.n()).into_par_iter().find_map_first(|u| {
        squares.iter().find_map(|&[a, b, c, d]| {
            (g.d(u, a) + g.d(u, c) != g.d(u, b) + g.d(u, d)).then(|| vec![u, a, b, c, d])
        })
    });
    ClassVerdict::from_witness("pc", w)
}

/// Every 2-interval induces a subgraph of `K_{m×2}`: its complement is a
/// matching and the number of classes is at most `m`. Witness `[u, v]`.
pub fn satisfies_icm(g: &Graph, m: usize) -> ClassVerdict {
    let w = g.pairs_at_distance(2, 2).into_iter().find_map(|(u, v)| {
        let iv = g.interval(u, v).to_vec();
        let mut missing = 0;
        for (i, &x) in iv.iter().enumerate() {
            let non: usize = iv.iter().filter(|&&y| y != x && !g.adjacent(x, y)).count();
            if non > 1 {
                return Some(vec![u, v]);
            }
            missing += iv[i + 1..].iter().filter(|&&y| !g.adjacent(x, y)).count();
        }
        (iv.len() - missing > m).then(|| vec![u, v])
    });
    ClassVerdict::from_witness(&format!("ic{m}"), w)
}

/// Every pair at distance 2 lies on a square. Witness `[u, v]`.
pub fn is_thick(g: &Graph) -> ClassVerdict {
    let w = g.pairs_at_distance(2, 2).into_iter().find_map(|(u, v)| {
        let inner = g.interior_interval(u, v).to_vec();
        let square = inner.iter().enumerate().any(|(i, &s)| inner[i + 1..].iter().any(|&t| !g.adjacent(s, t)));
        (!square).then(|| vec![u, v])
    });
    ClassVerdict::from_witness("thick", w)
}

fn need_distance(g: &Graph, u: usize, v: usize, k: u32) -> Result<()> {
    match g.d(u, v) {
        d if d == k => Ok(()),
        d => Err(Error::WrongDistance { expected: k, found: d }),
    }
}

fn nbrs_in_interval(g: &Graph, x: usize, u: usize, v: usize) -> Vec<usize> {
    g.neighbors(x).iter().copied().filter(|&z| g.in_interval(u, v, z)).collect()
}

/// Condition (a) on a 3-interval.
pub fn check_condition_a(g: &Graph, u: usize, v: usize) -> Result<bool> {
    need_distance(g, u, v, 3)?;
    let nu = nbrs_in_interval(g, u, u, v);
    let nv = nbrs_in_interval(g, v, u, v);
    Ok(nu.iter().any(|&x| {
        nv.iter().any(|&y| {
            nv.iter().all(|&z| z == y || g.adjacent(x, z)) && nu.iter().all(|&z| z == x || g.adjacent(y, z))
        })
    }))
}

/// Condition (b) on a 4-interval.
pub fn check_condition_b(g: &Graph, u: usize, v: usize) -> Result<bool> {
    need_distance(g, u, v, 4)?;
    let nu = nbrs_in_interval(g, u, u, v);
    let nv = nbrs_in_interval(g, v, u, v);
    let mid: Vec<usize> = g.interior_interval(u, v).iter().filter(|&x| g.d(u, x) == 2).collect();
    let x_ok = mid.iter().any(|&x| nu.iter().all(|&z| g.adjacent(x, z)));
    let y_ok = mid.iter().any(|&y| nv.iter().all(|&z| g.adjacent(y, z)));
    Ok(x_ok && y_ok)
}

/// Condition (c) on a 4-interval.
pub fn check_condition_c(g: &Graph, u: usize, v: usize) -> Result<bool> {
    need_distance(g, u, v, 4)?;
    let nu = nbrs_in_interval(g, u, u, v);
    let nv = nbrs_in_interval(g, v, u, v);
    let mid: Vec<usize> = g.interior_interval(u, v).iter().filter(|&x| g.d(u, x) == 2).collect();
    let covers = |x: usize| mid.iter().all(|&z| g.adjacent(x, z));
    Ok(nu.iter().any(|&x| covers(x)) && nv.iter().any(|&y| covers(y)))
}

/// An edge inside one BFS layer, proving an odd cycle.
fn odd_edge(g: &Graph) -> Option<Vec<usize>> {
    g.edges().into_iter().find(|&(a, b)| g.d(0, a) == g.d(0, b)).map(|(a, b)| vec![a, b])
}

/// Bipartite, and for `d(u,v) >= 3` some `x != v` in `I(u,v)` is adjacent to
/// all neighbours of `v` in `I(u,v)`. Witness `[u, v]`, or an odd-cycle
/// edge for non-bipartite input.
pub fn is_bipartite_absolute_retract(g: &Graph) -> ClassVerdict {
    let name = "bar";
    if let Some(e) = odd_edge(g) {
        return ClassVerdict::fails(name, e);
    }
    let n = g.n();
    let w = (0..n).into_par_iter().find_map_first(|u| {
        (0..n).find_map(|v| {
            if g.d(u, v) < 3 {
                return None;
            }
            let nv = nbrs_in_interval(g, v, u, v);
            let ok = (0..n).any(|x| x != v && g.in_interval(u, v, x) && nv.iter().all(|&z| g.adjacent(x, z)));
            (!ok).then(|| vec![u, v])
        })
    });
    ClassVerdict::from_witness(name, w)
}

/// Both characterizations of bipartite absolute retracts side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsoluteRetractReport {
    /// Interval characterization.
    pub interval_condition: ClassVerdict,
    pub modular: bool,
    /// Modular and every induced `B_4`, `B_5` extends to its hat; `None`
    /// when the search exceeds its budget.
    pub extension_condition: Option<bool>,
    /// An induced `B_n` without extension: `a_1..a_n` then `b_1..b_n`.
    pub unextended: Option<Vec<usize>>,
    /// `Some(false)` flags disagreement between the two verdicts.
    pub agree: Option<bool>,
}

const EXTENSION_BUDGET: u64 = 2_000_000;

fn subsets(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, from: usize) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        subsets(items, k, out, cur, i + 1);
        cur.pop();
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

/// Searches induced `B_n` with sides `a` in `xs`, `b` in `ys` lacking an
/// extension. `Err(())` when over budget.
fn unextended_b(g: &Graph, xs: &[usize], ys: &[usize], n: usize) -> std::result::Result<Option<Vec<usize>>, ()> {
    if binom(xs.len(), n) > EXTENSION_BUDGET {
        return Err(());
    }
    let mut sides = Vec::new();
    subsets(xs, n, &mut sides, &mut Vec::new(), 0);
    let mut work = 0u64;
    for a in sides {
        // for each a_i, the b candidates missing exactly a_i
        let miss: Vec<Vec<usize>> = a
            .iter()
            .map(|&ai| {
                ys.iter()
                    .copied()
                    .filter(|&y| !g.adjacent(y, ai) && a.iter().filter(|&&aj| g.adjacent(y, aj)).count() == n - 1)
                    .collect()
            })
            .collect();
        if miss.iter().any(|m| m.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; n];
        loop {
            work += 1;
            if work > EXTENSION_BUDGET {
                return Err(());
            }
            let b: Vec<usize> = idx.iter().zip(&miss).map(|(&i, m)| m[i]).collect();
            let hat_a: Vec<usize> = xs.iter().copied().filter(|&x| b.iter().all(|&y| g.adjacent(x, y))).collect();
            let extends = ys.iter().any(|&y| {
                a.iter().all(|&x| g.adjacent(x, y)) && hat_a.iter().any(|&x| g.adjacent(x, y))
            });
            if !extends {
                let mut w = a.clone();
                w.extend(b);
                return Ok(Some(w));
            }
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < miss[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    Ok(None)
}

pub fn absolute_retract_report(g: &Graph) -> AbsoluteRetractReport {
    let interval_condition = is_bipartite_absolute_retract(g);
    let modular = is_modular(g).verdict;
    let (extension_condition, unextended) = match g.bipartition() {
        None => (Some(false), None),
        Some(_) if !modular => (Some(false), None),
        Some(colour) => {
            let xs: Vec<usize> = (0..g.n()).filter(|&v| colour[v]).collect();
            let ys: Vec<usize> = (0..g.n()).filter(|&v| !colour[v]).collect();
            let mut result = (Some(true), None);
            'outer: for n in [4, 5] {
                for (p, q) in [(&xs, &ys), (&ys, &xs)] {
                    match unextended_b(g, p, q, n) {
                        Err(()) => {
                            result = (None, None);
                            break 'outer;
                        }
                        Ok(Some(w)) => {
                            result = (Some(false), Some(w));
                            break 'outer;
                        }
                        Ok(None) => {}
                    }
                }
            }
            result
        }
    };
    let agree = extension_condition.map(|e| e == interval_condition.verdict);
    AbsoluteRetractReport { interval_condition, modular, extension_condition, unextended, agree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{b_hat_graph, cycle, halved_cube, hypercube, johnson, path};

    #[test]
    fn basis_graph_conditions() {
        let (j52, _) = johnson(5, 2).unwrap();
        assert!(satisfies_pc(&j52).verdict && satisfies_icm(&j52, 3).verdict && is_thick(&j52).verdict);
        let (h5, _) = halved_cube(5).unwrap();
        assert!(satisfies_pc(&h5).verdict && satisfies_icm(&h5, 4).verdict && is_thick(&h5).verdict);
        assert!(!satisfies_icm(&h5, 3).verdict);
        assert!(!is_thick(&path(3).unwrap()).verdict);
    }

    #[test]
    fn abc() {
        let c8 = cycle(8).unwrap();
        assert!(!check_condition_b(&c8, 0, 4).unwrap());
        assert!(!check_condition_c(&c8, 0, 4).unwrap());
        assert!(matches!(check_condition_a(&c8, 0, 4), Err(Error::WrongDistance { expected: 3, found: 4 })));
        let bh = b_hat_graph(4).unwrap();
        for (u, v) in bh.pairs_at_distance(3, 3) {
            assert!(check_condition_a(&bh, u, v).unwrap());
        }
        let p5 = path(5).unwrap();
        assert!(check_condition_b(&p5, 0, 4).unwrap());
    }

    #[test]
    fn absolute_retracts() {
        assert!(is_bipartite_absolute_retract(&b_hat_graph(4).unwrap()).verdict);
        assert!(!is_bipartite_absolute_retract(&cycle(6).unwrap()).verdict);
        assert!(!is_bipartite_absolute_retract(&cycle(5).unwrap()).verdict);
        assert!(is_bipartite_absolute_retract(&path(4).unwrap()).verdict);
        for g in [b_hat_graph(4).unwrap(), hypercube(3).unwrap().0, path(6).unwrap(), cycle(6).unwrap()] {
            let r = absolute_retract_report(&g);
            assert_eq!(r.agree, Some(true), "{:?}", g.name());
        }
        let r = absolute_retract_report(&hypercube(3).unwrap().0);
        assert_eq!(r.unextended.map(|w| w.len()), Some(8));
    }
}
