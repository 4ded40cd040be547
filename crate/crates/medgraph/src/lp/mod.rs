//! Recognition of graphs with `G^p`-connected medians by exact linear
//! programming, the invariant `p(G)`, certificates, and a brute-force
//! profile oracle.
//!
//! For a pair `u, v` with `d(u,v) >= 2` the matrix `D^uv` has one row per
//! `w` in `I°(u,v)` and one column per candidate support vertex `x`:
//!
//! `D[w][x] = d(v,w) d(u,x) + d(u,w) d(v,x) - d(u,v) d(w,x)`.
//!
//! A profile `π >= 0` with `D π < 0` is exactly a profile whose median
//! function violates WC(u,v). The strict system is decided through the
//! equivalent closed system `D π <= -1`.

mod certificate;
mod oracle;
pub mod simplex;

pub use certificate::{alpha_beta_certificate, AlphaBetaCertificate, DEFAULT_INTERIOR_CAP};
pub use oracle::{brute_force_oracle, OracleHit, DEFAULT_ORACLE_BUDGET};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::function::{median_set, median_value, Profile};
use crate::graph::{j_set, Graph, VertexSet};
use crate::rational::{fmt_q, Q};
use crate::{Error, Result};
use simplex::{phase1, Constraint, Phase1, Sense};

/// The integer matrix `D^uv` with its row and column vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<i64>>,
}

impl RationalMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Self {
        let rows = (0..entries.len()).collect();
        let cols = (0..entries.first().map_or(0, Vec::len)).collect();
        RationalMatrix { rows, cols, entries }
    }
}

/// One entry of `D^uv`.
pub fn duv_entry(g: &Graph, u: usize, v: usize, w: usize, x: usize) -> i64 {
    let d = |a, b| g.d(a, b) as i64;
    d(v, w) * d(u, x) + d(u, w) * d(v, x) - d(u, v) * d(w, x)
}

/// Builds `D^uv` over the given columns.
pub fn build_duv(g: &Graph, u: usize, v: usize, columns: &VertexSet) -> Result<RationalMatrix> {
    if u == v || g.adjacent(u, v) {
        return Err(Error::Precondition(format!("pair ({u},{v}) must be nonadjacent")));
    }
    let rows = g.interior_interval(u, v).to_vec();
    if rows.is_empty() {
        return Err(Error::EmptyInterior { u, v });
    }
    let cols = columns.to_vec();
    let entries = rows
        .iter()
        .map(|&w| cols.iter().map(|&x| duv_entry(g, u, v, w, x)).collect())
        .collect();
    Ok(RationalMatrix { rows, cols, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Feasible,
    Infeasible,
}

/// Outcome of the strict system `π >= 0, M π < 0`.
///
/// `witness` is keyed by column labels, `certificate` by row labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub status: Status,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub witness: Option<Profile>,
    pub certificate: Option<Vec<(usize, Q)>>,
}

/// Decides `∃ π >= 0 : M π < 0` exactly.
pub fn lp_feasible_strict(m: &RationalMatrix) -> FeasibilityResult {
    let nvars = m.cols.len();
    // -M π >= 1
    let constraints: Vec<Constraint> = m
        .entries
        .iter()
        .map(|row| Constraint {
            coeffs: row.iter().map(|&a| Q::from_integer(BigInt::from(-a))).collect(),
            sense: Sense::Ge,
            rhs: Q::from_integer(1.into()),
        })
        .collect();
    match phase1(nvars, &constraints) {
        Phase1::Feasible(x) => FeasibilityResult {
            status: Status::Feasible,
            rows: m.rows.clone(),
            cols: m.cols.clone(),
            witness: Some(
                Profile::new(m.cols.iter().copied().zip(x))
                    .expect("a solution of M π <= -1 is nonzero"),
            ),
            certificate: None,
        },
        Phase1::Infeasible(y) => FeasibilityResult {
            status: Status::Infeasible,
            rows: m.rows.clone(),
            cols: m.cols.clone(),
            witness: None,
            certificate: Some(m.rows.iter().copied().zip(y).collect()),
        },
    }
}

/// Re-checks a result from distances alone. A witness must make WC(u,v)
/// fail strictly at every interior vertex; a certificate `y >= 0`, `y != 0`
/// must satisfy `y^T D^uv >= 0` on every column.
pub fn verify_feasibility_result(g: &Graph, u: usize, v: usize, r: &FeasibilityResult) -> bool {
    let interior = g.interior_interval(u, v).to_vec();
    if r.rows != interior {
        return false;
    }
    let qd = |a: usize, b: usize| Q::from_integer(g.d(a, b).into());
    match r.status {
        Status::Feasible => {
            let Some(pi) = &r.witness else { return false };
            if pi.iter().any(|(x, w)| w.is_negative() || !r.cols.contains(&x)) {
                return false;
            }
            let fu = median_value(g, pi, u);
            let fv = median_value(g, pi, v);
            interior.iter().all(|&w| {
                qd(u, v) * median_value(g, pi, w) > qd(v, w) * &fu + qd(u, w) * &fv
            })
        }
        Status::Infeasible => {
            let Some(y) = &r.certificate else { return false };
            if y.len() != interior.len()
                || y.iter().zip(&interior).any(|((w, yw), &i)| *w != i || yw.is_negative())
                || y.iter().all(|(_, yw)| yw.is_zero())
            {
                return false;
            }
            r.cols.iter().all(|&x| {
                let s: Q = y
                    .iter()
                    .map(|(w, yw)| {
                        yw * (qd(v, *w) * qd(u, x) + qd(u, *w) * qd(v, x) - qd(u, v) * qd(*w, x))
                    })
                    .sum();
                !s.is_negative()
            })
        }
    }
}

/// Verdict of the LP for one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub u: usize,
    pub v: usize,
    pub d: u32,
    pub result: FeasibilityResult,
}

impl PairVerdict {
    /// True when every profile satisfies WC(u,v).
    pub fn passes(&self) -> bool {
        self.result.status == Status::Infeasible
    }
}

impl Serialize for PairVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PairVerdict", 6)?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("status", &self.result.status)?;
        st.serialize_field("witness", &self.result.witness)?;
        let cert = self
            .result
            .certificate
            .as_ref()
            .map(|c| c.iter().map(|(w, y)| (w.to_string(), fmt_q(y))).collect::<std::collections::BTreeMap<_, _>>());
        st.serialize_field("certificate", &cert)?;
        st.end()
    }
}

/// Column set used for a pair: all vertices, or `J(u,v)` when restricted.
pub fn pair_columns(g: &Graph, u: usize, v: usize, restrict_j: bool) -> VertexSet {
    if restrict_j {
        j_set(g, u, v)
    } else {
        g.vertices()
    }
}

/// Solves the LP for the pair `(u,v)`.
pub fn check_pair(g: &Graph, u: usize, v: usize, restrict_j: bool) -> Result<PairVerdict> {
    let m = build_duv(g, u, v, &pair_columns(g, u, v, restrict_j))?;
    Ok(PairVerdict { u, v, d: g.d(u, v), result: lp_feasible_strict(&m) })
}

/// Whether every profile's median function satisfies WC(u,v).
pub fn pair_satisfies_wc_for_all_profiles(g: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(check_pair(g, u, v, false)?.passes())
}

/// LP verdicts for all pairs with `p+1 <= d(u,v) <= 2p`, in lexicographic order.
pub fn pair_verdicts(g: &Graph, p: u32, restrict_j: bool) -> Vec<PairVerdict> {
    g.pairs_at_distance(p + 1, 2 * p)
        .par_iter()
        .map(|&(u, v)| check_pair(g, u, v, restrict_j).expect("connected graphs have nonempty interiors"))
        .collect()
}

/// Whether all median sets of `G` are connected in `G^p`.
pub fn has_gp_connected_medians(g: &Graph, p: u32, restrict_j: bool) -> bool {
    assert!(p >= 1, "p must be at least 1");
    g.pairs_at_distance(p + 1, 2 * p).par_iter().all(|&(u, v)| {
        check_pair(g, u, v, restrict_j).expect("connected graphs have nonempty interiors").passes()
    })
}

/// Verdicts at one value of `p`.
#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub p: u32,
    pub connected: bool,
    pub pairs: Vec<PairVerdict>,
}

/// Result of [`compute_p`].
#[derive(Clone, Debug, Serialize)]
pub struct PValueReport {
    pub p: u32,
    pub diameter: u32,
    pub restrict_j: bool,
    pub levels: Vec<LevelReport>,
    /// First failing pair at `p - 1`, if `p > 1`.
    pub witness: Option<PairVerdict>,
    /// Integer profile whose median set is exactly the witness pair.
    pub witness_profile: Option<Profile>,
}

/// The least `p >= 1` such that all median sets are connected in `G^p`.
pub fn compute_p(g: &Graph, restrict_j: bool) -> PValueReport {
    let diameter = g.diameter();
    let mut levels = Vec::new();
    let mut p = 1;
    loop {
        let pairs = pair_verdicts(g, p, restrict_j);
        let connected = pairs.iter().all(PairVerdict::passes);
        levels.push(LevelReport { p, connected, pairs });
        if connected {
            break;
        }
        p += 1;
    }
    let witness = levels
        .len()
        .checked_sub(2)
        .and_then(|i| levels[i].pairs.iter().find(|pv| !pv.passes()).cloned());
    let witness_profile = witness.as_ref().map(|pv| {
        disconnecting_profile(g, pv.u, pv.v, pv.result.witness.as_ref().expect("feasible verdict"))
    });
    PValueReport { p, diameter, restrict_j, levels, witness, witness_profile }
}

/// Turns a profile whose median function violates WC(u,v) into an integer
/// profile with median set exactly `{u, v}`: with `k = d(u,v)`,
/// `ε = F(v) - F(u) >= 0` and `μ = k F(v) + 1`, put `kπ(u) + μ` on `u`,
/// `kπ(v) + μ + ε` on `v` and `kπ(x)` elsewhere.
pub fn disconnecting_profile(g: &Graph, u: usize, v: usize, pi: &Profile) -> Profile {
    let ints = pi.to_integers();
    let base = Profile::new(ints.iter().map(|(&x, w)| (x, Q::from_integer(w.clone()))))
        .expect("scaled profile keeps its support");
    let (mut u, mut v) = (u, v);
    if median_value(g, &base, v) < median_value(g, &base, u) {
        std::mem::swap(&mut u, &mut v);
    }
    let k = Q::from_integer(g.d(u, v).into());
    let fu = median_value(g, &base, u);
    let fv = median_value(g, &base, v);
    let eps = &fv - &fu;
    let mu = &k * &fv + Q::from_integer(1.into());
    let mut weights: Vec<(usize, Q)> = base.iter().map(|(x, w)| (x, &k * w)).collect();
    weights.push((u, mu.clone()));
    weights.push((v, mu + eps));
    Profile::new(weights).expect("μ > 0")
}

/// Whether `Med(π)` is exactly `{u, v}`.
pub fn median_set_is_pair(g: &Graph, pi: &Profile, u: usize, v: usize) -> bool {
    median_set(g, pi).to_vec() == {
        let mut e = vec![u, v];
        e.sort_unstable();
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::is_p_connected;

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::build(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn matrix_entries() {
        let c7 = cycle(7);
        assert_eq!(duv_entry(&c7, 0, 3, 1, 5), -3);
        let p4 = path(4);
        assert_eq!(duv_entry(&p4, 0, 3, 1, 2), 2);
        for w in [1, 2] {
            assert_eq!(duv_entry(&p4, 0, 3, w, 0), 0);
        }
        assert!(matches!(build_duv(&p4, 0, 1, &p4.vertices()), Err(Error::Precondition(_))));
    }

    #[test]
    fn one_by_one() {
        let r = lp_feasible_strict(&RationalMatrix::from_rows(vec![vec![1]]));
        assert_eq!(r.status, Status::Infeasible);
        assert_eq!(r.certificate.unwrap()[0].1, Q::from_integer(1.into()));
        let r = lp_feasible_strict(&RationalMatrix::from_rows(vec![vec![-1]]));
        assert_eq!(r.status, Status::Feasible);
        assert_eq!(r.witness.unwrap().weight(0), Q::from_integer(1.into()));
    }

    #[test]
    fn c7_pair() {
        let g = cycle(7);
        let pv = check_pair(&g, 0, 3, false).unwrap();
        assert!(!pv.passes());
        assert!(verify_feasibility_result(&g, 0, 3, &pv.result));
        let plus = disconnecting_profile(&g, 0, 3, pv.result.witness.as_ref().unwrap());
        assert!(median_set_is_pair(&g, &plus, 0, 3));
        assert!(!is_p_connected(&g, &median_set(&g, &plus), 2));
    }

    #[test]
    fn corrupted_witness_fails_verification() {
        let g = cycle(7);
        let mut pv = check_pair(&g, 0, 3, false).unwrap();
        let pi = pv.result.witness.take().unwrap();
        let bad: Vec<(usize, Q)> = pi.iter().map(|(x, w)| (x, w.clone())).collect();
        // all weight on u makes F linear along the geodesic, so WC holds
        let total: Q = bad.iter().map(|(_, w)| w.clone()).sum();
        pv.result.witness = Some(Profile::new([(0, total)]).unwrap());
        assert!(!verify_feasibility_result(&g, 0, 3, &pv.result));
    }

    #[test]
    fn p_values() {
        assert_eq!(compute_p(&cycle(7), false).p, 3);
        assert_eq!(compute_p(&cycle(6), false).p, 2);
        assert_eq!(compute_p(&path(6), false).p, 1);
        assert_eq!(compute_p(&Graph::build(1, &[]).unwrap(), false).p, 1);
        let r = compute_p(&cycle(7), true);
        assert_eq!(r.p, 3);
        let w = r.witness.unwrap();
        assert_eq!(w.d, 3);
        assert!(median_set_is_pair(&g_c7(), r.witness_profile.as_ref().unwrap(), w.u, w.v));
    }

    fn g_c7() -> Graph {
        cycle(7)
    }
}
