//! Exhaustive enumeration of small connected graphs and trees up to
//! isomorphism.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest order supported by [`connected_graphs`].
pub const MAX_CONNECTED_ORDER: usize = 8;

fn bit(i: usize, j: usize) -> u64 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    1u64 << (b * (b - 1) / 2 + a)
}

/// Adjacency as bitmask rows.
fn rows(n: usize, code: u64) -> Vec<u32> {
    let mut r = vec![0u32; n];
    for b in 1..n {
        for a in 0..b {
            if code & bit(a, b) != 0 {
                r[a] |= 1 << b;
                r[b] |= 1 << a;
            }
        }
    }
    r
}

/// Ordered partition from colour refinement; isomorphism invariant.
fn refine(n: usize, rows: &[u32]) -> Vec<Vec<usize>> {
    let mut colour: Vec<usize> = (0..n).map(|v| rows[v].count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = (0..n).filter(|&x| rows[v] >> x & 1 == 1).map(|x| colour[x]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sig.iter().collect();
        let rank: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sig.iter().map(|s| rank.binary_search(&s).unwrap()).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = rank.len();
        colour = next;
        if after == before {
            break;
        }
    }
    let k = colour.iter().max().map_or(0, |&m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// Minimal code over all labelings that respect the refined cell order.
fn canonical_code(n: usize, code: u64) -> u64 {
    let r = rows(n, code);
    let cells = refine(n, &r);
    let mut best = u64::MAX;
    assign_cells(&cells, 0, 0, &mut vec![false; n], &mut vec![0; n], &r, &mut best);
    best
}

fn assign_cells(
    cells: &[Vec<usize>],
    ci: usize,
    next: usize,
    used: &mut [bool],
    pos: &mut [usize],
    r: &[u32],
    best: &mut u64,
) {
    if ci == cells.len() {
        let n = pos.len();
        let mut c = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                if r[a] >> b & 1 == 1 {
                    c |= bit(pos[a], pos[b]);
                }
            }
        }
        *best = (*best).min(c);
        return;
    }
    let cell = &cells[ci];
    let start: usize = cells[..ci].iter().map(Vec::len).sum();
    if next == start + cell.len() {
        assign_cells(cells, ci + 1, next, used, pos, r, best);
        return;
    }
    for &v in cell {
        if used[v] {
            continue;
        }
        used[v] = true;
        pos[v] = next;
        assign_cells(cells, ci, next + 1, used, pos, r, best);
        used[v] = false;
    }
}

fn to_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if code & bit(a, b) != 0 {
                edges.push((a, b));
            }
        }
    }
    Graph::build(n, &edges).expect("enumerated graphs are connected")
}

/// Canonical codes of connected graphs on `n` vertices.
fn connected_codes(n: usize) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let prev = connected_codes(n - 1);
    let new = n - 1;
    let mut out = BTreeSet::new();
    for &c in &prev {
        for mask in 1u32..(1 << new) {
            let mut code = c;
            for a in 0..new {
                if mask >> a & 1 == 1 {
                    code |= bit(a, new);
                }
            }
            out.insert(canonical_code(n, code));
        }
    }
    out.into_iter().collect()
}

/// All connected graphs on `n` vertices up to isomorphism, in increasing
/// canonical code order. Counts: 1, 1, 2, 6, 21, 112, 853, 11117.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CONNECTED_ORDER).contains(&n), "order out of range");
    connected_codes(n).into_iter().map(|c| to_graph(n, c)).collect()
}

/// Rooted canonical string of the subtree at `v`.
fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> =
        adj[v].iter().filter(|&&x| x != parent).map(|&x| ahu(adj, x, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &x in &adj[l] {
                deg[x] -= 1;
                if deg[x] == 1 {
                    next.push(x);
                }
            }
        }
        leaves = next;
    }
    leaves
}

/// Isomorphism-invariant string of a tree.
fn tree_code(adj: &[Vec<usize>]) -> String {
    centres(adj).into_iter().map(|c| ahu(adj, c, usize::MAX)).min().unwrap_or_default()
}

/// All trees on `n >= 1` vertices up to isomorphism.
/// Counts for `n = 1..10`: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for v in 0..size - 1 {
                let mut a = adj.clone();
                a.push(vec![v]);
                a[v].push(size - 1);
                if seen.insert(tree_code(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let edges: Vec<(usize, usize)> =
                adj.iter().enumerate().flat_map(|(v, ns)| ns.iter().map(move |&x| (v, x))).filter(|&(a, b)| a < b).collect();
            Graph::build(n, &edges).expect("trees are connected")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn canonical_is_invariant() {
        // path 0-1-2-3 vs path 2-0-3-1
        let a = bit(0, 1) | bit(1, 2) | bit(2, 3);
        let b = bit(2, 0) | bit(0, 3) | bit(3, 1);
        assert_eq!(canonical_code(4, a), canonical_code(4, b));
    }
}
