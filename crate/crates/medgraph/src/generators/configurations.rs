//! α- and β-configuration instances.
//!
//! All instances share the core `u = 0`, `v = 1`, `s = 2`, `t = 3`, `w = 4`
//! with `s, t, w` pairwise adjacent and each adjacent to `u` and `v`.

use serde::{Deserialize, Serialize};

use crate::classes::{is_alpha_witness, AlphaWitness};
use crate::graph::Graph;
use crate::{Error, Result};

/// Which end of the 2-interval an outer vertex is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

/// Optional edges among the outer vertices `a, b, c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaExtras {
    pub ab: bool,
    pub ac: bool,
    pub bc: bool,
}

impl BetaExtras {
    pub const NONE: BetaExtras = BetaExtras { ab: false, ac: false, bc: false };
    pub const ALL: BetaExtras = BetaExtras { ab: true, ac: true, bc: true };
}

pub const U: usize = 0;
pub const V: usize = 1;
pub const S: usize = 2;
pub const T: usize = 3;
pub const W: usize = 4;
/// Outer vertices of a β-configuration.
pub const A: usize = 5;
pub const B: usize = 6;
pub const C: usize = 7;

fn core_edges() -> Vec<(usize, usize)> {
    vec![(S, T), (S, W), (T, W), (U, S), (U, T), (U, W), (V, S), (V, T), (V, W)]
}

fn check_core(g: &Graph, interior: &[usize]) -> Result<()> {
    let mut got = g.interior_interval(U, V).to_vec();
    got.sort_unstable();
    if g.d(U, V) != 2 || got != interior {
        return Err(Error::ConstraintsUnsatisfiable(format!(
            "expected d(u,v)=2 and interior {interior:?}, got d={} interior {got:?}",
            g.d(U, V)
        )));
    }
    Ok(())
}

/// β-configuration on 8 vertices: `a ~ s`, `b ~ t`, `c ~ w`, each outer
/// vertex also adjacent to `u` or `v` per `attach`, plus `extras`.
pub fn beta_configuration(attach: [Side; 3], extras: BetaExtras) -> Result<Graph> {
    let mut edges = core_edges();
    for (outer, (inner, side)) in [A, B, C].into_iter().zip([S, T, W].into_iter().zip(attach)) {
        edges.push((outer, inner));
        edges.push((outer, if side == Side::U { U } else { V }));
    }
    for (flag, e) in [(extras.ab, (A, B)), (extras.ac, (A, C)), (extras.bc, (B, C))] {
        if flag {
            edges.push(e);
        }
    }
    let g = Graph::build(8, &edges)?.with_name("beta");
    check_core(&g, &[S, T, W])?;
    Ok(g)
}

/// The β-configuration with all outer vertices on `u` and no extra edges.
pub fn beta_all_to_u() -> Graph {
    beta_configuration([Side::U; 3], BetaExtras::NONE).expect("fixed construction")
}

/// Even-set labels embedding [`beta_all_to_u`] into `½H_7`.
pub fn beta_all_to_u_labels() -> Vec<Vec<u32>> {
    vec![vec![], vec![1, 2, 3, 4], vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 5], vec![3, 6], vec![4, 7]]
}

/// α-configuration instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaKind {
    /// Type 1 with interior `{s, t, w}`.
    Type1,
    /// Type 1 with interior `{s, t}`.
    Type1Pair,
    Type2,
    Type3,
}

impl AlphaKind {
    pub fn type_number(self) -> u8 {
        match self {
            AlphaKind::Type1 | AlphaKind::Type1Pair => 1,
            AlphaKind::Type2 => 2,
            AlphaKind::Type3 => 3,
        }
    }
}

/// A far vertex `a` at distance 3 from `far` and 2 from the rest of the
/// core, realized through `p ~ a, u, near` and `q ~ a, v, near`.
fn push_far(edges: &mut Vec<(usize, usize)>, a: usize, near: &[usize]) {
    let (p, q) = (a + 1, a + 2);
    edges.extend([(a, p), (a, q), (p, U), (q, V)]);
    for &x in near {
        edges.extend([(p, x), (q, x)]);
    }
}

/// Builds an instance of the chosen kind and checks it against the
/// definition; the returned witness names the roles.
pub fn alpha_configuration(kind: AlphaKind) -> Result<(Graph, AlphaWitness)> {
    let (n, edges, witness) = match kind {
        AlphaKind::Type1 => {
            let mut e = core_edges();
            push_far(&mut e, 5, &[S, W]);
            e.extend([(8, T), (8, U)]);
            (9, e, AlphaWitness { kind: 1, u: U, v: V, s: S, t: T, w: Some(W), a: vec![5], b: Some(8) })
        }
        AlphaKind::Type1Pair => {
            let mut e = vec![(S, T), (U, S), (U, T), (V, S), (V, T)];
            // a = 4, p = 5, q = 6, b = 7
            push_far(&mut e, 4, &[S]);
            e.extend([(7, T), (7, U)]);
            (8, e, AlphaWitness { kind: 1, u: U, v: V, s: S, t: T, w: None, a: vec![4], b: Some(7) })
        }
        AlphaKind::Type2 => {
            let mut e = core_edges();
            push_far(&mut e, 5, &[S, W]);
            push_far(&mut e, 8, &[S, T]);
            e.extend([(11, T), (11, W), (11, U)]);
            (12, e, AlphaWitness { kind: 2, u: U, v: V, s: S, t: T, w: Some(W), a: vec![5, 8], b: Some(11) })
        }
        AlphaKind::Type3 => {
            let mut e = core_edges();
            push_far(&mut e, 5, &[S, W]);
            push_far(&mut e, 8, &[S, T]);
            push_far(&mut e, 11, &[T, W]);
            (14, e, AlphaWitness { kind: 3, u: U, v: V, s: S, t: T, w: Some(W), a: vec![5, 8, 11], b: None })
        }
    };
    let g = Graph::build(n, &edges)?.with_name(format!("alpha-{kind:?}"));
    if !is_alpha_witness(&g, &witness) {
        return Err(Error::ConstraintsUnsatisfiable(format!("{kind:?} instance fails its definition")));
    }
    Ok((g, witness))
}
