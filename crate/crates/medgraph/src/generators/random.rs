//! Seeded random families for test corpora.

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labelled tree on `n` vertices from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut Rng8) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("tree needs n >= 1".into()));
    }
    if n <= 2 {
        return Graph::build(n, if n == 2 { &[(0, 1)] } else { &[] });
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::build(n, &prufer_edges(n, &seq))
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random `k`-tree on `n >= k + 1` vertices: a `(k+1)`-clique grown by
/// vertices attached to random existing `k`-cliques.
pub fn random_k_tree(n: usize, k: usize, rng: &mut Rng8) -> Result<Graph> {
    if k == 0 || n < k + 1 {
        return Err(Error::ParameterOutOfRange("k-tree needs k >= 1 and n >= k + 1".into()));
    }
    let mut edges = Vec::new();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for i in 0..=k {
        for j in i + 1..=k {
            edges.push((i, j));
        }
        cliques.push((0..=k).filter(|&x| x != i).collect());
    }
    for v in k + 1..n {
        let base = cliques.choose(rng).expect("nonempty").clone();
        for &x in &base {
            edges.push((x, v));
        }
        for drop in 0..k {
            let mut c: Vec<usize> = base.iter().copied().enumerate().filter(|&(i, _)| i != drop).map(|(_, x)| x).collect();
            c.push(v);
            cliques.push(c);
        }
    }
    Ok(Graph::build(n, &edges)?.with_name(format!("{k}-tree")))
}

/// Random connected interval graph on `n` vertices.
pub fn random_interval_graph(n: usize, rng: &mut Rng8) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("interval graph needs n >= 1".into()));
    }
    let mut iv: Vec<(u32, u32)> = Vec::with_capacity(n);
    let mut reach = 0u32;
    let mut start = 0u32;
    for _ in 0..n {
        let len = rng.random_range(1..=6);
        iv.push((start, start + len));
        reach = reach.max(start + len);
        start = rng.random_range(start..=reach);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::build(n, &edges)?.with_name("interval"))
}

/// Random connected graph: a random tree plus each other pair with
/// probability `density`.
pub fn random_connected_graph(n: usize, density: f64, rng: &mut Rng8) -> Result<Graph> {
    let tree = random_tree(n, rng)?;
    let mut edges = tree.edges();
    for i in 0..n {
        for j in i + 1..n {
            if !tree.adjacent(i, j) && rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let mut rng = seeded(7);
        for n in 1..10 {
            assert_eq!(random_tree(n, &mut rng).unwrap().edge_count(), n - 1);
        }
        let kt = random_k_tree(9, 2, &mut rng).unwrap();
        assert_eq!(kt.edge_count(), 3 + 2 * 6);
        let ig = random_interval_graph(12, &mut rng).unwrap();
        assert_eq!(ig.n(), 12);
        let g = random_connected_graph(8, 0.3, &mut rng).unwrap();
        assert!(g.edge_count() >= 7);
    }

    #[test]
    fn deterministic() {
        let a = random_connected_graph(9, 0.4, &mut seeded(3)).unwrap();
        let b = random_connected_graph(9, 0.4, &mut seeded(3)).unwrap();
        assert_eq!(a, b);
    }
}
