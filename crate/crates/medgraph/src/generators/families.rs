//! Classical families.

use crate::classes::{EmbeddingTarget, LabeledEmbedding};
use crate::graph::Graph;
use crate::{Error, Result};

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn named(g: Graph, name: String) -> Graph {
    g.with_name(name)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(named(Graph::build(n, &edges)?, format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(named(Graph::build(n, &edges)?, format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(out_of_range("complete graph needs n >= 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(named(Graph::build(n, &edges)?, format!("K{n}")))
}

/// `K_{a,b}`: side `0..a` and side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(out_of_range("complete bipartite graph needs both sides nonempty"));
    }
    let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    Ok(named(Graph::build(a + b, &edges)?, format!("K{a},{b}")))
}

/// `W_n`: rim `0..n`, hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("wheel needs n >= 3"));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Ok(named(Graph::build(n + 1, &edges)?, format!("W{n}")))
}

/// `W_n^-`: the wheel without the spoke to rim vertex 0.
pub fn wheel_minus(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("wheel needs n >= 3"));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((1..n).map(|i| (i, n)));
    Ok(named(Graph::build(n + 1, &edges)?, format!("W{n}-")))
}

/// `K_5 - K_3`: edge `01` plus three vertices adjacent to both ends.
pub fn propeller() -> Result<Graph> {
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];
    Ok(named(Graph::build(5, &edges)?, "propeller".into()))
}

/// `K_{m×2}`: `K_{2m}` minus the matching `{2i, 2i+1}`.
pub fn hyperoctahedron(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(out_of_range("hyperoctahedron needs m >= 1"));
    }
    if m == 1 {
        return Err(out_of_range("K_{1x2} is disconnected"));
    }
    let n = 2 * m;
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i / 2 != j / 2)
        .collect();
    Ok(named(Graph::build(n, &edges)?, format!("K{m}x2")))
}

fn mask_label(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `H_n` on subsets of `{1..n}`; vertex `i` is the subset with bitmask `i`.
pub fn hypercube(n: usize) -> Result<(Graph, LabeledEmbedding)> {
    if n > 16 {
        return Err(out_of_range("hypercube needs n <= 16"));
    }
    let size = 1usize << n;
    let edges: Vec<_> = (0..size)
        .flat_map(|x| (0..n).map(move |b| (x, x ^ (1 << b))))
        .filter(|&(x, y)| x < y)
        .collect();
    let g = named(Graph::build(size, &edges)?, format!("H{n}"));
    let labels = (0..size as u64).map(mask_label).collect();
    Ok((g, LabeledEmbedding::new(labels, EmbeddingTarget::Hypercube)))
}

/// `½H_n` on even subsets of `{1..n}`, in increasing bitmask order.
pub fn halved_cube(n: usize) -> Result<(Graph, LabeledEmbedding)> {
    if !(2..=12).contains(&n) {
        return Err(out_of_range("halved cube needs 2 <= n <= 12"));
    }
    let masks: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() % 2 == 0).collect();
    let index = |m: u64| masks.binary_search(&m).expect("even mask");
    let mut edges = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        for a in 0..n {
            for b in a + 1..n {
                let j = index(m ^ (1 << a) ^ (1 << b));
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let g = named(Graph::build(masks.len(), &edges)?, format!("halfH{n}"));
    let labels = masks.iter().map(|&m| mask_label(m)).collect();
    Ok((g, LabeledEmbedding::new(labels, EmbeddingTarget::HalvedCube)))
}

/// Maps the vertex of `½H_n` with bitmask `m` to the vertex `m` without
/// element `n` in `H_{n-1}`; an isomorphism onto the square of `H_{n-1}`.
pub fn halved_cube_to_square_map(n: usize) -> Vec<usize> {
    (0..1u64 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| (m & ((1 << (n - 1)) - 1)) as usize)
        .collect()
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r.checked_mul(n - i)? / (i + 1);
    }
    Some(r)
}

/// `J(n,k)` on `k`-subsets of `{1..n}` in lexicographic order.
pub fn johnson(n: usize, k: usize) -> Result<(Graph, LabeledEmbedding)> {
    if k == 0 || k >= n {
        return Err(out_of_range("johnson needs 1 <= k < n"));
    }
    match binomial(n, k) {
        Some(c) if c <= 10_000 => {}
        _ => return Err(out_of_range("johnson needs C(n,k) <= 10000")),
    }
    let mut sets: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        sets.push(cur.clone());
        // next combination in lexicographic order
        let mut i = k;
        while i > 0 && cur[i - 1] == (n - k + i) as u32 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let common = sets[i].iter().filter(|x| sets[j].contains(x)).count();
            if common + 1 == k {
                edges.push((i, j));
            }
        }
    }
    let g = named(Graph::build(sets.len(), &edges)?, format!("J{n},{k}"));
    Ok((g, LabeledEmbedding::new(sets, EmbeddingTarget::Johnson(k))))
}

/// `B_n`: `a_i = i`, `b_j = n + j`, `a_i ~ b_j` iff `i != j`.
pub fn b_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("B_n needs n >= 3"));
    }
    let edges: Vec<_> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))).collect();
    Ok(named(Graph::build(2 * n, &edges)?, format!("B{n}")))
}

/// `B̂_n`: `B_n` plus `a = 2n` adjacent to every `b_j`, `b = 2n+1` adjacent
/// to every `a_i`, and `a ~ b`.
pub fn b_hat_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(out_of_range("B-hat needs n >= 2"));
    }
    let mut edges: Vec<_> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))).collect();
    edges.extend((0..n).map(|j| (2 * n, n + j)));
    edges.extend((0..n).map(|i| (2 * n + 1, i)));
    edges.push((2 * n, 2 * n + 1));
    Ok(named(Graph::build(2 * n + 2, &edges)?, format!("B{n}hat")))
}

/// Grid `P_a □ P_b`.
pub fn grid(a: usize, b: usize) -> Result<Graph> {
    let g = super::cartesian_product(&path(a)?, &path(b)?);
    Ok(g.with_name(format!("grid{a}x{b}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let (h3, _) = hypercube(3).unwrap();
        assert_eq!((h3.n(), h3.edge_count(), h3.diameter()), (8, 12, 3));
        let (j42, _) = johnson(4, 2).unwrap();
        assert_eq!((j42.n(), j42.edge_count()), (6, 12));
        let oct = hyperoctahedron(3).unwrap();
        assert!(j42.is_isomorphism(&oct, &[0, 2, 4, 5, 3, 1]));
        let (h4, _) = halved_cube(4).unwrap();
        assert_eq!(h4.n(), 8);
        for v in 0..8 {
            assert_eq!(h4.degree(v), 6);
        }
        assert_eq!(propeller().unwrap().edge_count(), 7);
        assert_eq!(b_hat_graph(4).unwrap().n(), 10);
        assert!(hypercube(17).is_err());
        assert!(johnson(30, 15).is_err());
    }

    #[test]
    fn halved_cube_is_square_of_cube() {
        for n in 3..=6 {
            let (half, _) = halved_cube(n).unwrap();
            let (cube, _) = hypercube(n - 1).unwrap();
            assert!(half.is_isomorphism(&cube.power(2), &halved_cube_to_square_map(n)));
        }
    }
}
