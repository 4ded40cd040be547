//! Graph families.

mod benzenoid;
mod configurations;
mod families;
mod products;
mod projective;
pub mod random;

pub use benzenoid::{benzenoid, BenzenoidGraph, BenzenoidSpec, EmbeddingCheck};
pub use configurations::{
    alpha_configuration, beta_all_to_u, beta_all_to_u_labels, beta_configuration, AlphaKind, BetaExtras, Side,
};
pub use families::{
    b_graph, b_hat_graph, complete, complete_bipartite, cycle, grid, halved_cube, halved_cube_to_square_map,
    hypercube, hyperoctahedron, johnson, path, propeller, wheel, wheel_minus,
};
pub use products::{cartesian_product, gated_amalgam, Amalgam};
pub use projective::{projective_incidence_graph, ProjectiveGraph};

/// Role indices shared by the configuration instances.
pub mod roles {
    pub use super::configurations::{A, B, C, S, T, U, V, W};
}

use serde::Serialize;

use crate::classes::LabeledEmbedding;
use crate::graph::Graph;
use crate::{Error, Result};

/// A named family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    WheelMinus(usize),
    Propeller,
    Hyperoctahedron(usize),
    Hypercube(usize),
    HalvedCube(usize),
    Johnson(usize, usize),
    BGraph(usize),
    BHat(usize),
    Grid(usize, usize),
    Projective(u64),
    Beta,
    Alpha(u8),
}

impl FamilySpec {
    /// Family names accepted by [`FamilySpec::parse`].
    pub const NAMES: &'static [&'static str] = &[
        "path",
        "cycle",
        "complete",
        "complete-bipartite",
        "wheel",
        "wheel-minus",
        "propeller",
        "hyperoctahedron",
        "hypercube",
        "halved-cube",
        "johnson",
        "b",
        "b-hat",
        "grid",
        "projective",
        "beta",
        "alpha",
    ];

    /// Builds a spec from a family name and integer parameters.
    pub fn parse(name: &str, params: &[u64]) -> Result<FamilySpec> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::ParameterOutOfRange(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let p = |i: usize| params[i] as usize;
        Ok(match name {
            "path" => want(1).map(|_| FamilySpec::Path(p(0)))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(p(0)))?,
            "complete" => want(1).map(|_| FamilySpec::Complete(p(0)))?,
            "complete-bipartite" => want(2).map(|_| FamilySpec::CompleteBipartite(p(0), p(1)))?,
            "wheel" => want(1).map(|_| FamilySpec::Wheel(p(0)))?,
            "wheel-minus" => want(1).map(|_| FamilySpec::WheelMinus(p(0)))?,
            "propeller" => want(0).map(|_| FamilySpec::Propeller)?,
            "hyperoctahedron" => want(1).map(|_| FamilySpec::Hyperoctahedron(p(0)))?,
            "hypercube" => want(1).map(|_| FamilySpec::Hypercube(p(0)))?,
            "halved-cube" => want(1).map(|_| FamilySpec::HalvedCube(p(0)))?,
            "johnson" => want(2).map(|_| FamilySpec::Johnson(p(0), p(1)))?,
            "b" => want(1).map(|_| FamilySpec::BGraph(p(0)))?,
            "b-hat" => want(1).map(|_| FamilySpec::BHat(p(0)))?,
            "grid" => want(2).map(|_| FamilySpec::Grid(p(0), p(1)))?,
            "projective" => want(1).map(|_| FamilySpec::Projective(params[0]))?,
            "beta" => want(0).map(|_| FamilySpec::Beta)?,
            "alpha" => {
                want(1)?;
                match params[0] {
                    1..=3 => FamilySpec::Alpha(params[0] as u8),
                    _ => return Err(Error::ParameterOutOfRange("alpha type must be 1, 2 or 3".into())),
                }
            }
            _ => return Err(Error::ParameterOutOfRange(format!("unknown family {name}"))),
        })
    }
}

/// Builds the graph of `spec`, with its canonical labels for cubes,
/// halved cubes and Johnson graphs, and the `½H_7` labels for the
/// β-configuration.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, Option<LabeledEmbedding>)> {
    use crate::classes::EmbeddingTarget;
    let plain = |g: Result<Graph>| g.map(|g| (g, None));
    let labeled = |r: Result<(Graph, LabeledEmbedding)>| r.map(|(g, e)| (g, Some(e)));
    match *spec {
        FamilySpec::Path(n) => plain(path(n)),
        FamilySpec::Cycle(n) => plain(cycle(n)),
        FamilySpec::Complete(n) => plain(complete(n)),
        FamilySpec::CompleteBipartite(a, b) => plain(complete_bipartite(a, b)),
        FamilySpec::Wheel(n) => plain(wheel(n)),
        FamilySpec::WheelMinus(n) => plain(wheel_minus(n)),
        FamilySpec::Propeller => plain(propeller()),
        FamilySpec::Hyperoctahedron(m) => plain(hyperoctahedron(m)),
        FamilySpec::Hypercube(n) => labeled(hypercube(n)),
        FamilySpec::HalvedCube(n) => labeled(halved_cube(n)),
        FamilySpec::Johnson(n, k) => labeled(johnson(n, k)),
        FamilySpec::BGraph(n) => plain(b_graph(n)),
        FamilySpec::BHat(n) => plain(b_hat_graph(n)),
        FamilySpec::Grid(a, b) => plain(grid(a, b)),
        FamilySpec::Projective(q) => plain(projective_incidence_graph(q).map(|p| p.graph)),
        FamilySpec::Beta => Ok((
            beta_all_to_u(),
            Some(LabeledEmbedding::new(beta_all_to_u_labels(), EmbeddingTarget::HalvedCube)),
        )),
        FamilySpec::Alpha(t) => {
            let kind = match t {
                1 => AlphaKind::Type1,
                2 => AlphaKind::Type2,
                _ => AlphaKind::Type3,
            };
            plain(alpha_configuration(kind).map(|(g, _)| g))
        }
    }
}
