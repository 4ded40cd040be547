//! Graph class recognizers.
//!
//! Every recognizer returns a [`ClassVerdict`]; a `false` verdict carries a
//! witness tuple that the recognizer's own definition rejects.

mod basis;
mod configurations;
mod embedding;
mod metric;

pub use basis::{
    absolute_retract_report, check_condition_a, check_condition_b, check_condition_c,
    is_bipartite_absolute_retract, is_thick, satisfies_icm, satisfies_pc, AbsoluteRetractReport,
};
pub use configurations::{
    detect_alpha_configuration, detect_beta_configuration, is_alpha_witness, is_beta_witness, AlphaWitness,
    BetaWitness,
};
pub use embedding::{
    connected_medians_partial_halved_cube, connected_medians_partial_johnson, verify_labeled_embedding,
    EmbeddingTarget, LabeledEmbedding,
};
pub use metric::{
    has_convex_balls, induced_cycle, is_bridged, is_chordal, is_meshed, is_modular, is_weakly_bridged,
    is_weakly_modular, satisfies_inc, satisfies_tpc,
};

use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Result};

/// Outcome of a class test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: String,
    pub verdict: bool,
    /// Violating tuple; present exactly when `verdict` is false.
    pub witness: Option<Vec<usize>>,
}

impl ClassVerdict {
    pub fn holds(class: &str) -> Self {
        ClassVerdict { class: class.to_string(), verdict: true, witness: None }
    }

    pub fn fails(class: &str, witness: Vec<usize>) -> Self {
        ClassVerdict { class: class.to_string(), verdict: false, witness: Some(witness) }
    }

    pub(crate) fn from_witness(class: &str, witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Self::holds(class),
            Some(w) => Self::fails(class, w),
        }
    }

    pub(crate) fn renamed(mut self, class: &str) -> Self {
        self.class = class.to_string();
        self
    }
}

/// Class names understood by [`check_class`].
pub const CLASS_NAMES: &[&str] = &[
    "meshed",
    "weakly-modular",
    "modular",
    "chordal",
    "bridged",
    "weakly-bridged",
    "cb",
    "inc",
    "tpc",
    "pc",
    "ic3",
    "ic4",
    "thick",
    "bar",
    "alpha",
    "beta",
    "embedding",
    "johnson-medians",
    "halved-cube-medians",
];

/// Runs the recognizer named `class`. Embedding-based classes need labels.
pub fn check_class(class: &str, g: &Graph, labels: Option<&LabeledEmbedding>) -> Result<ClassVerdict> {
    let need = || labels.ok_or(Error::EmbeddingUnverified);
    Ok(match class {
        "meshed" => is_meshed(g),
        "weakly-modular" => is_weakly_modular(g),
        "modular" => is_modular(g),
        "chordal" => is_chordal(g),
        "bridged" => is_bridged(g),
        "weakly-bridged" => is_weakly_bridged(g),
        "cb" => has_convex_balls(g),
        "inc" => satisfies_inc(g),
        "tpc" => satisfies_tpc(g),
        "pc" => satisfies_pc(g),
        "ic3" => satisfies_icm(g, 3),
        "ic4" => satisfies_icm(g, 4),
        "thick" => is_thick(g),
        "bar" => is_bipartite_absolute_retract(g),
        "alpha" => ClassVerdict::from_witness("alpha-free", detect_alpha_configuration(g).map(|w| w.tuple())),
        "beta" => ClassVerdict::from_witness("beta-free", detect_beta_configuration(g).map(|w| w.tuple())),
        "embedding" => verify_labeled_embedding(g, need()?)?,
        "johnson-medians" => connected_medians_partial_johnson(g, need()?)?,
        "halved-cube-medians" => connected_medians_partial_halved_cube(g, need()?)?,
        _ => return Err(Error::UnknownClass(class.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn dispatch() {
        let c5 = cycle(5).unwrap();
        assert!(check_class("cb", &c5, None).unwrap().verdict);
        assert!(matches!(check_class("nope", &c5, None), Err(Error::UnknownClass(_))));
        assert_eq!(check_class("embedding", &c5, None), Err(Error::EmbeddingUnverified));
        for name in CLASS_NAMES.iter().filter(|n| !n.contains("embedding") && !n.contains("medians")) {
            let v = check_class(name, &c5, None).unwrap();
            assert_eq!(v.verdict, v.witness.is_none(), "{name}");
        }
    }
}
