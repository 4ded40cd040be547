use serde::Serialize;

use super::{detect_alpha_configuration, detect_beta_configuration, is_meshed, is_weakly_modular, ClassVerdict};
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EmbeddingTarget {
    Hypercube,
    HalvedCube,
    Johnson(usize),
}

/// Finite-set labels, one per vertex, claimed to embed the graph
/// isometrically into the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledEmbedding {
    pub labels: Vec<Vec<u32>>,
    pub target: EmbeddingTarget,
}

impl LabeledEmbedding {
    /// Sorts and deduplicates each label.
    pub fn new(mut labels: Vec<Vec<u32>>, target: EmbeddingTarget) -> Self {
        for l in &mut labels {
            l.sort_unstable();
            l.dedup();
        }
        LabeledEmbedding { labels, target }
    }
}

fn sym_diff(a: &[u32], b: &[u32]) -> u32 {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    (a.len() + b.len() - 2 * common) as u32
}

/// Checks the distance identity of `e` on all pairs.
pub fn verify_labeled_embedding(g: &Graph, e: &LabeledEmbedding) -> Result<ClassVerdict> {
    if e.labels.len() != g.n() {
        return Err(Error::LabelArity(e.labels.len()));
    }
    for (v, l) in e.labels.iter().enumerate() {
        let ok = match e.target {
            EmbeddingTarget::Hypercube => true,
            EmbeddingTarget::HalvedCube => l.len() % 2 == 0,
            EmbeddingTarget::Johnson(k) => l.len() == k,
        };
        if !ok {
            return Err(Error::LabelArity(v));
        }
    }
    let halve = !matches!(e.target, EmbeddingTarget::Hypercube);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let h = sym_diff(&e.labels[u], &e.labels[v]);
            let want = if halve { h / 2 } else { h };
            if want != g.d(u, v) || (halve && h % 2 == 1) {
                return Ok(ClassVerdict::fails("embedding", vec![u, v]));
            }
        }
    }
    Ok(ClassVerdict::holds("embedding"))
}

fn require(g: &Graph, e: &LabeledEmbedding, target_ok: bool) -> Result<()> {
    if !target_ok || !verify_labeled_embedding(g, e)?.verdict {
        return Err(Error::EmbeddingUnverified);
    }
    Ok(())
}

/// Connected medians of an isometric subgraph of a Johnson graph: decided
/// by meshedness.
pub fn connected_medians_partial_johnson(g: &Graph, e: &LabeledEmbedding) -> Result<ClassVerdict> {
    require(g, e, matches!(e.target, EmbeddingTarget::Johnson(_)))?;
    Ok(is_meshed(g).renamed("johnson-medians"))
}

/// Connected medians of an isometric subgraph of a halved cube: meshed and
/// free of α- and β-configurations. For weakly modular inputs only the
/// β test is needed.
pub fn connected_medians_partial_halved_cube(g: &Graph, e: &LabeledEmbedding) -> Result<ClassVerdict> {
    require(g, e, e.target == EmbeddingTarget::HalvedCube)?;
    let name = "halved-cube-medians";
    let beta = || detect_beta_configuration(g).map(|w| w.tuple());
    if is_weakly_modular(g).verdict {
        return Ok(ClassVerdict::from_witness(name, beta()));
    }
    let meshed = is_meshed(g);
    if !meshed.verdict {
        return Ok(meshed.renamed(name));
    }
    let witness = detect_alpha_configuration(g).map(|w| w.tuple()).or_else(beta);
    Ok(ClassVerdict::from_witness(name, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{beta_all_to_u, beta_all_to_u_labels, halved_cube, hypercube, johnson};

    #[test]
    fn canonical_labels() {
        let (g, e) = johnson(4, 2).unwrap();
        assert!(verify_labeled_embedding(&g, &e).unwrap().verdict);
        assert!(connected_medians_partial_johnson(&g, &e).unwrap().verdict);
        let (g, e) = hypercube(3).unwrap();
        assert!(verify_labeled_embedding(&g, &e).unwrap().verdict);
        let bad = LabeledEmbedding::new(e.labels.clone(), EmbeddingTarget::HalvedCube);
        assert!(matches!(verify_labeled_embedding(&g, &bad), Err(Error::LabelArity(_))));
        let (g, e) = halved_cube(5).unwrap();
        assert!(verify_labeled_embedding(&g, &e).unwrap().verdict);
    }

    #[test]
    fn beta_labels() {
        let g = beta_all_to_u();
        let e = LabeledEmbedding::new(beta_all_to_u_labels(), EmbeddingTarget::HalvedCube);
        assert!(verify_labeled_embedding(&g, &e).unwrap().verdict);
        let v = connected_medians_partial_halved_cube(&g, &e).unwrap();
        assert!(!v.verdict);
    }

    #[test]
    fn wrong_labels() {
        let (g, mut e) = johnson(4, 2).unwrap();
        e.labels.swap(0, 1);
        assert!(!verify_labeled_embedding(&g, &e).unwrap().verdict);
        assert_eq!(connected_medians_partial_johnson(&g, &e), Err(Error::EmbeddingUnverified));
    }
}
