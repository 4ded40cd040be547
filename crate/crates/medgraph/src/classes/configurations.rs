use serde::Serialize;

use crate::graph::{jcirc_set, Graph};

/// Roles of a β-configuration: `a, b, c` are outer vertices in `J°(u,v)`
/// whose unique neighbour in `I°(u,v) = {s, t, w}` is `s`, `t`, `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaWitness {
    pub u: usize,
    pub v: usize,
    pub s: usize,
    pub t: usize,
    pub w: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl BetaWitness {
    pub fn tuple(&self) -> Vec<usize> {
        vec![self.u, self.v, self.s, self.t, self.w, self.a, self.b, self.c]
    }
}

/// Roles of an α-configuration of type 1, 2 or 3. `a` holds `a` (type 1)
/// or `a_1, a_2[, a_3]`; `w` is absent for the two-vertex type 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaWitness {
    pub kind: u8,
    pub u: usize,
    pub v: usize,
    pub s: usize,
    pub t: usize,
    pub w: Option<usize>,
    pub a: Vec<usize>,
    pub b: Option<usize>,
}

impl AlphaWitness {
    pub fn tuple(&self) -> Vec<usize> {
        let mut t = vec![self.u, self.v, self.s, self.t];
        t.extend(self.w);
        t.extend(&self.a);
        t.extend(self.b);
        t
    }
}

/// Pairs at distance 2 whose interior is 2 or 3 pairwise adjacent vertices.
fn clique_pairs(g: &Graph) -> Vec<(usize, usize, Vec<usize>)> {
    g.pairs_at_distance(2, 2)
        .into_iter()
        .filter_map(|(u, v)| {
            let s = g.interior_interval(u, v).to_vec();
            let clique = s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| g.adjacent(x, y)));
            ((2..=3).contains(&s.len()) && clique).then_some((u, v, s))
        })
        .collect()
}

fn personal_neighbor(g: &Graph, x: usize, s: &[usize]) -> Option<usize> {
    let mut it = s.iter().copied().filter(|&y| g.adjacent(x, y));
    match (it.next(), it.next()) {
        (Some(y), None) => Some(y),
        _ => None,
    }
}

/// Checks the defining constraints of `w` in `g`.
pub fn is_beta_witness(g: &Graph, w: &BetaWitness) -> bool {
    let mut s = g.interior_interval(w.u, w.v).to_vec();
    s.sort_unstable();
    let mut want = vec![w.s, w.t, w.w];
    want.sort_unstable();
    if g.d(w.u, w.v) != 2 || s != want {
        return false;
    }
    if !(g.adjacent(w.s, w.t) && g.adjacent(w.s, w.w) && g.adjacent(w.t, w.w)) {
        return false;
    }
    let jc = jcirc_set(g, w.u, w.v);
    [(w.a, w.s), (w.b, w.t), (w.c, w.w)].iter().all(|&(x, p)| {
        jc.contains(x) && personal_neighbor(g, x, &s) == Some(p) && (g.adjacent(x, w.u) || g.adjacent(x, w.v))
    })
}

/// Finds `u, v` with `I°(u,v)` three pairwise adjacent vertices each of
/// which is the personal neighbour of some vertex of `J°(u,v)`.
pub fn detect_beta_configuration(g: &Graph) -> Option<BetaWitness> {
    clique_pairs(g).into_iter().filter(|(_, _, s)| s.len() == 3).find_map(|(u, v, s)| {
        let jc = jcirc_set(g, u, v);
        let owner = |p: usize| {
            jc.iter().find(|&x| {
                personal_neighbor(g, x, &s) == Some(p) && (g.adjacent(x, u) || g.adjacent(x, v))
            })
        };
        Some(BetaWitness { u, v, s: s[0], t: s[1], w: s[2], a: owner(s[0])?, b: owner(s[1])?, c: owner(s[2])? })
    })
}

/// `d(a,u) = d(a,v) = 2`, distance 3 to `far` and 2 to every other
/// interior vertex.
fn far_from(g: &Graph, a: usize, u: usize, v: usize, interior: &[usize], far: usize) -> bool {
    g.d(a, u) == 2
        && g.d(a, v) == 2
        && interior.iter().all(|&x| g.d(a, x) == if x == far { 3 } else { 2 })
}

fn attached(g: &Graph, b: usize, u: usize, v: usize) -> bool {
    g.adjacent(b, u) || g.adjacent(b, v)
}

/// Checks the defining constraints of `w` in `g`.
pub fn is_alpha_witness(g: &Graph, w: &AlphaWitness) -> bool {
    let (u, v, s, t) = (w.u, w.v, w.s, w.t);
    let mut interior: Vec<usize> = vec![s, t];
    interior.extend(w.w);
    let mut got = g.interior_interval(u, v).to_vec();
    got.sort_unstable();
    let mut want = interior.clone();
    want.sort_unstable();
    if g.d(u, v) != 2 || got != want {
        return false;
    }
    if !interior.iter().enumerate().all(|(i, &x)| interior[i + 1..].iter().all(|&y| g.adjacent(x, y))) {
        return false;
    }
    match (w.kind, w.w, w.a.as_slice(), w.b) {
        (1, _, &[a], Some(b)) => {
            far_from(g, a, u, v, &interior, t)
                && g.adjacent(b, t)
                && !g.adjacent(b, s)
                && w.w.map_or(true, |x| !g.adjacent(b, x))
                && attached(g, b, u, v)
        }
        (2, Some(x), &[a1, a2], Some(b)) => {
            far_from(g, a1, u, v, &interior, t)
                && far_from(g, a2, u, v, &interior, x)
                && g.adjacent(b, t)
                && g.adjacent(b, x)
                && !g.adjacent(b, s)
                && attached(g, b, u, v)
        }
        (3, Some(x), &[a1, a2, a3], None) => {
            far_from(g, a1, u, v, &interior, t)
                && far_from(g, a2, u, v, &interior, x)
                && far_from(g, a3, u, v, &interior, s)
        }
        _ => false,
    }
}

/// Searches types 1, 2, 3 in that order over all role assignments.
pub fn detect_alpha_configuration(g: &Graph) -> Option<AlphaWitness> {
    let pairs = clique_pairs(g);
    let n = g.n();
    let far = |u: usize, v: usize, interior: &[usize], x: usize| -> Vec<usize> {
        (0..n).filter(|&a| far_from(g, a, u, v, interior, x)).collect()
    };
    // role orders: (s, t, w) over permutations of the interior
    let perms = |s: &[usize]| -> Vec<(usize, usize, Option<usize>)> {
        if s.len() == 2 {
            vec![(s[0], s[1], None), (s[1], s[0], None)]
        } else {
            let mut out = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        out.push((s[i], s[j], Some(s[3 - i - j])));
                    }
                }
            }
            out
        }
    };
    for kind in 1..=3u8 {
        for (u, v, interior) in &pairs {
            let (u, v) = (*u, *v);
            if kind > 1 && interior.len() != 3 {
                continue;
            }
            for (s, t, w) in perms(interior) {
                let found = match kind {
                    1 => far(u, v, interior, t).first().and_then(|&a| {
                        (0..n)
                            .find(|&b| {
                                g.adjacent(b, t)
                                    && !g.adjacent(b, s)
                                    && w.map_or(true, |x| !g.adjacent(b, x))
                                    && attached(g, b, u, v)
                            })
                            .map(|b| (vec![a], Some(b)))
                    }),
                    2 => {
                        let x = w.unwrap();
                        let a1 = far(u, v, interior, t).first().copied();
                        let a2 = far(u, v, interior, x).first().copied();
                        let b = (0..n).find(|&b| {
                            g.adjacent(b, t) && g.adjacent(b, x) && !g.adjacent(b, s) && attached(g, b, u, v)
                        });
                        match (a1, a2, b) {
                            (Some(a1), Some(a2), Some(b)) => Some((vec![a1, a2], Some(b))),
                            _ => None,
                        }
                    }
                    _ => {
                        let x = w.unwrap();
                        let a1 = far(u, v, interior, t).first().copied();
                        let a2 = far(u, v, interior, x).first().copied();
                        let a3 = far(u, v, interior, s).first().copied();
                        match (a1, a2, a3) {
                            (Some(a1), Some(a2), Some(a3)) => Some((vec![a1, a2, a3], None)),
                            _ => None,
                        }
                    }
                };
                if let Some((a, b)) = found {
                    return Some(AlphaWitness { kind, u, v, s, t, w, a, b });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{alpha_configuration, beta_all_to_u, beta_configuration, hypercube, AlphaKind, BetaExtras, Side};

    #[test]
    fn beta_round_trip() {
        let g = beta_all_to_u();
        let w = detect_beta_configuration(&g).unwrap();
        assert!(is_beta_witness(&g, &w));
        assert_eq!((w.u, w.v), (0, 1));
        let g = beta_configuration([Side::V, Side::U, Side::V], BetaExtras::ALL).unwrap();
        assert!(detect_beta_configuration(&g).is_some());
        assert!(detect_beta_configuration(&hypercube(3).unwrap().0).is_none());
    }

    #[test]
    fn alpha_round_trip() {
        for kind in [AlphaKind::Type1, AlphaKind::Type1Pair, AlphaKind::Type2, AlphaKind::Type3] {
            let (g, _) = alpha_configuration(kind).unwrap();
            let found = detect_alpha_configuration(&g).unwrap();
            assert!(found.kind <= kind.type_number(), "{kind:?}");
            assert!(is_alpha_witness(&g, &found));
        }
        assert!(detect_alpha_configuration(&hypercube(3).unwrap().0).is_none());
        assert!(detect_alpha_configuration(&beta_all_to_u()).is_none());
    }
}
