//! Cartesian products and gated amalgams.

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// `G1 □ G2`; vertex `(i, j)` has index `i * n2 + j`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    let mut edges = Vec::new();
    for i in 0..g1.n() {
        for (a, b) in g2.edges() {
            edges.push((i * n2 + a, i * n2 + b));
        }
    }
    for (a, b) in g1.edges() {
        for j in 0..n2 {
            edges.push((a * n2 + j, b * n2 + j));
        }
    }
    let g = Graph::build(g1.n() * n2, &edges).expect("product of connected graphs is connected");
    match (g1.name(), g2.name()) {
        (Some(a), Some(b)) => g.with_name(format!("{a}x{b}")),
        _ => g,
    }
}

/// Result of [`gated_amalgam`]: the glued graph and the positions of the
/// vertices of `G2` in it.
#[derive(Clone, Debug)]
pub struct Amalgam {
    pub graph: Graph,
    pub g2_map: Vec<usize>,
}

/// Glues `G1` and `G2` along a common subgraph `H`, given by the images
/// `h1[i]` in `G1` and `h2[i]` in `G2` of each template vertex `i`. The
/// vertices of `G1` keep their indices; the other vertices of `G2` follow in
/// their original order.
pub fn gated_amalgam(g1: &Graph, g2: &Graph, h1: &[usize], h2: &[usize]) -> Result<Amalgam> {
    if h1.len() != h2.len() || h1.is_empty() {
        return Err(Error::NotInducedIso);
    }
    for (&a, &b) in h1.iter().zip(h2) {
        if a >= g1.n() || b >= g2.n() {
            return Err(Error::NotInducedIso);
        }
    }
    let distinct = |h: &[usize]| {
        let mut s = h.to_vec();
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    };
    if !distinct(h1) || !distinct(h2) {
        return Err(Error::NotInducedIso);
    }
    for i in 0..h1.len() {
        for j in i + 1..h1.len() {
            if g1.adjacent(h1[i], h1[j]) != g2.adjacent(h2[i], h2[j]) {
                return Err(Error::NotInducedIso);
            }
        }
    }
    let s1 = VertexSet::from_vertices(g1.n(), h1.iter().copied());
    let s2 = VertexSet::from_vertices(g2.n(), h2.iter().copied());
    if !g1.is_gated_set(&s1) || !g2.is_gated_set(&s2) {
        return Err(Error::NotGated);
    }
    let mut g2_map = vec![usize::MAX; g2.n()];
    for (&a, &b) in h1.iter().zip(h2) {
        g2_map[b] = a;
    }
    let mut next = g1.n();
    for slot in g2_map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(a, b)| (g2_map[a], g2_map[b])));
    let graph = Graph::build(next, &edges)?;
    Ok(Amalgam { graph, g2_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hypercube};

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        let h2 = hypercube(2).unwrap().0;
        let h3 = cartesian_product(&h2, &k2);
        assert_eq!((h3.n(), h3.edge_count(), h3.diameter()), (8, 12, 3));
    }

    #[test]
    fn amalgams() {
        let k3 = complete(3).unwrap();
        let bowtie = gated_amalgam(&k3, &k3, &[0], &[0]).unwrap().graph;
        assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
        assert!(matches!(gated_amalgam(&k3, &k3, &[0, 1], &[0, 1]), Err(Error::NotGated)));
        let c6 = cycle(6).unwrap();
        let two = gated_amalgam(&c6, &c6, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(two.graph.n(), 10);
        assert!(matches!(gated_amalgam(&c6, &c6, &[0, 3], &[0, 3]), Err(Error::NotGated)));
        assert!(matches!(gated_amalgam(&c6, &c6, &[0, 1], &[0, 2]), Err(Error::NotInducedIso)));
    }
}
