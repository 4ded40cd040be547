use rayon::prelude::*;

use super::ClassVerdict;
use crate::graph::Graph;

fn common_neighbors<'a>(g: &'a Graph, a: usize, b: usize) -> impl Iterator<Item = usize> + 'a {
    g.neighbors(a).iter().copied().filter(move |&x| g.adjacent(x, b))
}

/// Runs `f` on every vertex in parallel and returns the witness of the
/// smallest failing vertex.
fn first_failure<F>(g: &Graph, f: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync + Send,
{
    (0..g.n()).into_par_iter().find_map_first(f)
}

/// Witness `[u, v, w]`: `d(v,w) = 2` and no common neighbour `x` of `v, w`
/// has `2 d(u,x) <= d(u,v) + d(u,w)`.
pub fn is_meshed(g: &Graph) -> ClassVerdict {
    let pairs = g.pairs_at_distance(2, 2);
    let w = first_failure(g, |u| {
        pairs.iter().find_map(|&(v, w)| {
            let bound = g.d(u, v) + g.d(u, w);
            let ok = common_neighbors(g, v, w).any(|x| 2 * g.d(u, x) <= bound);
            (!ok).then(|| vec![u, v, w])
        })
    });
    ClassVerdict::from_witness("meshed", w)
}

fn triangle_condition(g: &Graph) -> Option<Vec<usize>> {
    let edges = g.edges();
    first_failure(g, |u| {
        edges.iter().find_map(|&(v, w)| {
            let k = g.d(u, v);
            if k == 0 || g.d(u, w) != k {
                return None;
            }
            let ok = common_neighbors(g, v, w).any(|x| g.d(u, x) + 1 == k);
            (!ok).then(|| vec![u, v, w])
        })
    })
}

fn quadrangle_condition(g: &Graph) -> Option<Vec<usize>> {
    let pairs = g.pairs_at_distance(2, 2);
    first_failure(g, |u| {
        pairs.iter().find_map(|&(v, w)| {
            let k = g.d(u, v);
            if k < 2 || g.d(u, w) != k {
                return None;
            }
            let z = common_neighbors(g, v, w).find(|&z| g.d(u, z) == k + 1)?;
            let ok = common_neighbors(g, v, w).any(|x| g.d(u, x) + 1 == k);
            (!ok).then(|| vec![u, v, w, z])
        })
    })
}

/// Triangle and quadrangle conditions. Witness `[u, v, w]` for a triangle
/// failure, `[u, v, w, z]` for a quadrangle failure.
pub fn is_weakly_modular(g: &Graph) -> ClassVerdict {
    ClassVerdict::from_witness("weakly-modular", triangle_condition(g).or_else(|| quadrangle_condition(g)))
}

/// Witness `[u, v, w]` with empty `I(u,v) ∩ I(v,w) ∩ I(w,u)`.
pub fn is_modular(g: &Graph) -> ClassVerdict {
    let n = g.n();
    let w = first_failure(g, |u| {
        for v in u + 1..n {
            for w in v + 1..n {
                let (a, b, c) = (g.d(u, v), g.d(v, w), g.d(w, u));
                let ok = (0..n).any(|x| {
                    let (xu, xv, xw) = (g.d(x, u), g.d(x, v), g.d(x, w));
                    xu + xv == a && xv + xw == b && xw + xu == c
                });
                if !ok {
                    return Some(vec![u, v, w]);
                }
            }
        }
        None
    });
    ClassVerdict::from_witness("modular", w)
}

/// Maximum cardinality search order; position `i` holds the `i`-th
/// visited vertex, ties to the smallest index.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        order.push(v);
        for &x in g.neighbors(v) {
            if !done[x] {
                weight[x] += 1;
            }
        }
    }
    order
}

/// Reverse MCS order checked as a perfect elimination ordering; a failure
/// yields a chordless cycle as witness.
pub fn is_chordal(g: &Graph) -> ClassVerdict {
    let n = g.n();
    let order = mcs_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // eliminate in reverse visiting order: earlier neighbours must form a clique
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| pos[x] < pos[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&x| pos[x]) else { continue };
        if earlier.iter().any(|&x| x != parent && !g.adjacent(x, parent)) {
            let cycle = chordless_cycle(g).expect("a non-chordal graph has a chordless cycle");
            return ClassVerdict::fails("chordal", cycle);
        }
    }
    ClassVerdict::holds("chordal")
}

/// Some induced cycle of length at least 4: for nonadjacent `x, y` in
/// `N(v)`, a shortest `x`-`y` path avoiding the rest of `N[v]` closes one.
fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &z in nb {
                    blocked[z] = z != x && z != y;
                }
                if let Some(p) = bfs_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn bfs_path(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut path = vec![t];
            let mut c = t;
            while c != s {
                c = prev[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// An induced cycle of exactly `len >= 4` vertices, listed from its
/// smallest vertex.
pub fn induced_cycle(g: &Graph, len: usize) -> Option<Vec<usize>> {
    assert!(len >= 4);
    fn extend(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().unwrap();
        let start = path[0];
        for &x in g.neighbors(last) {
            if x <= start || path.contains(&x) {
                continue;
            }
            // no chords back into the path except to the start on closing
            let closing = path.len() + 1 == len;
            let chord = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &p)| g.adjacent(p, x) && !(closing && i == 0));
            if chord {
                continue;
            }
            if closing {
                if g.adjacent(x, start) && path[1] < x {
                    path.push(x);
                    return true;
                }
                continue;
            }
            path.push(x);
            if extend(g, path, len) {
                return true;
            }
            path.pop();
        }
        false
    }
    (0..g.n()).find_map(|s| {
        let mut path = vec![s];
        extend(g, &mut path, len).then_some(path)
    })
}

/// Weakly modular without induced 4- and 5-cycles.
pub fn is_bridged(g: &Graph) -> ClassVerdict {
    let wm = is_weakly_modular(g);
    if !wm.verdict {
        return wm.renamed("bridged");
    }
    ClassVerdict::from_witness("bridged", induced_cycle(g, 4).or_else(|| induced_cycle(g, 5)))
}

/// Weakly modular without induced 4-cycles.
pub fn is_weakly_bridged(g: &Graph) -> ClassVerdict {
    let wm = is_weakly_modular(g);
    if !wm.verdict {
        return wm.renamed("weakly-bridged");
    }
    ClassVerdict::from_witness("weakly-bridged", induced_cycle(g, 4))
}

/// Every ball convex. Witness `[v, r, x, y, z]` with `x, y` in `B_r(v)`
/// and `z` in `I(x,y)` outside it.
pub fn has_convex_balls(g: &Graph) -> ClassVerdict {
    let n = g.n();
    let w = first_failure(g, |v| {
        for r in 1..g.eccentricity(v) {
            let ball: Vec<usize> = (0..n).filter(|&x| g.d(v, x) <= r).collect();
            for (i, &x) in ball.iter().enumerate() {
                for &y in &ball[i + 1..] {
                    let dxy = g.d(x, y);
                    if dxy < 2 {
                        continue;
                    }
                    if let Some(z) = (0..n).find(|&z| g.d(v, z) > r && g.d(x, z) + g.d(z, y) == dxy) {
                        return Some(vec![v, r as usize, x, y, z]);
                    }
                }
            }
        }
        None
    });
    ClassVerdict::from_witness("cb", w)
}

/// Witness `[u, v, a, b]`: `a, b` nonadjacent neighbours of `u` in `I(u,v)`.
pub fn satisfies_inc(g: &Graph) -> ClassVerdict {
    let n = g.n();
    let w = first_failure(g, |u| {
        for v in 0..n {
            if v == u || g.adjacent(u, v) {
                continue;
            }
            let nb: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| g.in_interval(u, v, x)).collect();
            for (i, &a) in nb.iter().enumerate() {
                if let Some(&b) = nb[i + 1..].iter().find(|&&b| !g.adjacent(a, b)) {
                    return Some(vec![u, v, a, b]);
                }
            }
        }
        None
    });
    ClassVerdict::from_witness("inc", w)
}

/// Witness `[v, x, y]`: `x ~ y` at common distance `k >= 2` from `v` with
/// neither a common neighbour at `k - 1` nor an induced pentagon
/// `x w z w' y` with `d(v,z) = k - 2`.
pub fn satisfies_tpc(g: &Graph) -> ClassVerdict {
    let edges = g.edges();
    let w = first_failure(g, |v| {
        edges.iter().find_map(|&(x, y)| {
            let k = g.d(v, x);
            if k < 2 || g.d(v, y) != k {
                return None;
            }
            if common_neighbors(g, x, y).any(|z| g.d(v, z) + 1 == k) {
                return None;
            }
            let down = |a: usize| g.neighbors(a).iter().copied().filter(move |&b| g.d(v, b) + 1 == k);
            let pentagon = down(x).any(|w1| {
                down(y).any(|w2| {
                    w1 != w2 && !g.adjacent(w1, w2) && common_neighbors(g, w1, w2).any(|z| g.d(v, z) + 2 == k)
                })
            });
            (!pentagon).then(|| vec![v, x, y])
        })
    });
    ClassVerdict::from_witness("tpc", w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{beta_all_to_u, complete, cycle, hypercube, johnson, path, projective_incidence_graph, wheel};

    #[test]
    fn meshed_examples() {
        assert!(is_meshed(&johnson(4, 2).unwrap().0).verdict);
        let c6 = is_meshed(&cycle(6).unwrap());
        assert!(!c6.verdict);
        assert_eq!(c6.witness.unwrap().len(), 3);
        assert!(is_meshed(&complete(5).unwrap()).verdict);
    }

    #[test]
    fn weak_modularity() {
        assert!(!is_weakly_modular(&cycle(5).unwrap()).verdict);
        assert!(is_weakly_modular(&complete(2).unwrap()).verdict);
        assert!(is_weakly_modular(&beta_all_to_u()).verdict);
        assert!(is_weakly_modular(&hypercube(3).unwrap().0).verdict);
    }

    #[test]
    fn modularity() {
        assert!(is_modular(&projective_incidence_graph(2).unwrap().graph).verdict);
        assert!(is_modular(&path(5).unwrap()).verdict);
        assert!(!is_modular(&complete(3).unwrap()).verdict);
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&beta_all_to_u()).verdict);
        assert!(is_chordal(&complete(4).unwrap()).verdict);
        let c4 = is_chordal(&cycle(4).unwrap());
        assert_eq!(c4.witness.unwrap().len(), 4);
        let c7 = is_chordal(&wheel(7).unwrap());
        assert_eq!(c7.witness.unwrap().len(), 7);
    }

    #[test]
    fn bridged_family() {
        let w5 = wheel(5).unwrap();
        assert!(!is_bridged(&w5).verdict);
        assert!(is_weakly_bridged(&w5).verdict);
        let c4 = cycle(4).unwrap();
        assert!(!is_bridged(&c4).verdict && !is_weakly_bridged(&c4).verdict);
        assert_eq!(induced_cycle(&cycle(6).unwrap(), 6), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(induced_cycle(&cycle(6).unwrap(), 5), None);
    }

    #[test]
    fn balls_inc_tpc() {
        let c5 = cycle(5).unwrap();
        assert!(has_convex_balls(&c5).verdict);
        assert!(satisfies_inc(&c5).verdict && satisfies_tpc(&c5).verdict);
        assert!(!has_convex_balls(&cycle(6).unwrap()).verdict);
        assert!(!satisfies_inc(&cycle(4).unwrap()).verdict);
        let k4 = complete(4).unwrap();
        assert!(satisfies_inc(&k4).verdict && satisfies_tpc(&k4).verdict);
    }
}
