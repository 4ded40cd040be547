//! Named acceptance bundles.
//!
//! Each suite runs one group of checks over generated graphs and reports a
//! pass/fail line with its wall time and time limit. A check passes only if
//! its property holds and it finishes within its limit.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::classes::{
    has_convex_balls, is_bipartite_absolute_retract, is_bridged, is_chordal, is_meshed, is_thick, is_weakly_bridged,
    satisfies_pc, ClassVerdict,
};
use crate::enumerate::{connected_graphs, trees};
use crate::function::{
    is_p_connected, is_p_isometric, is_unimodal_on_power, level_set, local_median_set_p, median_function,
    median_set,
};
use crate::function::{is_p_weakly_peakless, is_p_weakly_peakless_all_pairs};
use crate::generators::random::{random_connected_graph, random_interval_graph, random_k_tree, random_tree, seeded};
use crate::generators::roles::{A, B, C, V};
use crate::generators::{
    b_hat_graph, benzenoid, beta_all_to_u, beta_configuration, cartesian_product, complete, cycle, gated_amalgam, halved_cube,
    halved_cube_to_square_map, hypercube, johnson, projective_incidence_graph, wheel, BenzenoidSpec,
    BetaExtras, Side,
};
use crate::graph::Graph;
use crate::lp::{brute_force_oracle, compute_p, disconnecting_profile, median_set_is_pair, pair_verdicts};
use crate::lp::DEFAULT_ORACLE_BUDGET;
use crate::rational::Q;
use crate::{Error, Profile, Result, VertexFunction};

/// One criterion's outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// Acceptance criterion number; `None` for supplementary suites.
    pub criterion: Option<u8>,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl Check {
    /// `PASS [3] fano (12 ms / 5000 ms): detail`
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({} ms / {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.map_or("-".to_string(), |c| c.to_string()),
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

type Body = fn() -> (bool, String);

struct Entry {
    criterion: Option<u8>,
    name: &'static str,
    limit_ms: u128,
    body: Body,
}

const ENTRIES: &[Entry] = &[
    Entry { criterion: Some(1), name: "cycles", limit_ms: 1_000, body: cycles },
    Entry { criterion: Some(2), name: "c7", limit_ms: 1_000, body: c7 },
    Entry { criterion: Some(3), name: "fano", limit_ms: 5_000, body: fano },
    Entry { criterion: Some(4), name: "median-graphs", limit_ms: 30_000, body: median_graphs },
    Entry { criterion: Some(5), name: "chordal", limit_ms: 120_000, body: chordal },
    Entry { criterion: Some(6), name: "beta", limit_ms: 1_000, body: beta },
    Entry { criterion: Some(7), name: "products", limit_ms: 60_000, body: products },
    Entry { criterion: Some(8), name: "johnson", limit_ms: 120_000, body: johnson_family },
    Entry { criterion: Some(9), name: "benzenoids", limit_ms: 60_000, body: benzenoids },
    Entry { criterion: Some(10), name: "lp-oracle", limit_ms: 600_000, body: lp_oracle },
    Entry { criterion: Some(11), name: "local-to-global", limit_ms: 300_000, body: local_to_global },
    Entry { criterion: None, name: "classes", limit_ms: 300_000, body: class_bounds },
];

/// Suite names in criterion order; `all` runs every suite.
pub const SUITE_NAMES: &[&str] = &[
    "cycles",
    "c7",
    "fano",
    "median-graphs",
    "chordal",
    "beta",
    "products",
    "johnson",
    "benzenoids",
    "lp-oracle",
    "local-to-global",
    "classes",
];

fn run_entry(e: &Entry) -> Check {
    let start = Instant::now();
    let (ok, detail) = (e.body)();
    let elapsed_ms = start.elapsed().as_millis();
    let detail = if elapsed_ms > e.limit_ms { format!("{detail}; over time limit") } else { detail };
    Check {
        criterion: e.criterion,
        name: e.name,
        passed: ok && elapsed_ms <= e.limit_ms,
        detail,
        elapsed_ms,
        limit_ms: e.limit_ms,
    }
}

/// Runs the named suite, or every suite for `all`.
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let picked: Vec<&Entry> = if name == "all" {
        ENTRIES.iter().collect()
    } else {
        ENTRIES.iter().filter(|e| e.name == name).collect()
    };
    if picked.is_empty() {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let checks: Vec<Check> = picked.into_iter().map(run_entry).collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport { suite: name.to_string(), checks, passed })
}

fn p_of(g: &Graph) -> u32 {
    compute_p(g, false).p
}

fn cycles() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, m) in [(2usize, 2usize), (2, 3), (3, 2), (3, 4), (3, 5)] {
        let g = cycle(2 * k + m).expect("valid cycle");
        let (u, v, x) = (0, m, m + k);
        let pi = Profile::from_ints(&[(u, k as i64 + 1), (v, k as i64 + 1), (x, 1)]).expect("positive weights");
        let med = median_set(&g, &pi);
        let pair = med.to_vec() == vec![u, v];
        let split = !is_p_connected(&g, &med, m as u32 - 1);
        ok &= pair && split;
        notes.push(format!("C{}: Med={:?}", 2 * k + m, med.to_vec()));
    }
    (ok, notes.join(", "))
}

fn c7() -> (bool, String) {
    let p = p_of(&cycle(7).expect("valid cycle"));
    (p == 3, format!("p(C7) = {p}"))
}

fn fano() -> (bool, String) {
    let pg = projective_incidence_graph(2).expect("2 is prime");
    let g = &pg.graph;
    let pi = Profile::indicator(0..g.n()).expect("nonempty");
    let f = median_function(g, &pi);
    let q = |x: i64| Q::from_integer(x.into());
    let ends = f[pg.u] == q(24) && f[pg.v] == q(24);
    let rest = (0..g.n()).filter(|&z| z != pg.u && z != pg.v).all(|z| f[z] == q(30));
    let med = median_set(g, &pi).to_vec();
    let mut pair = vec![pg.u, pg.v];
    pair.sort_unstable();
    let d = g.d(pg.u, pg.v);
    let p = p_of(g);
    let ok = ends && rest && med == pair && d == 3 && p >= 3;
    (ok, format!("F(u)={} F(v)={} others 30: {rest}, Med={med:?}, d(u,v)={d}, p={p}", f[pg.u], f[pg.v]))
}

fn median_graphs() -> (bool, String) {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        for t in trees(n) {
            count += 1;
            if p_of(&t) != 1 {
                bad.push(format!("{:?}", t.edges()));
            }
        }
    }
    let mut rng = seeded(4);
    for n in [9, 10] {
        for _ in 0..25 {
            let t = random_tree(n, &mut rng).expect("n >= 1");
            count += 1;
            if p_of(&t) != 1 {
                bad.push(format!("{:?}", t.edges()));
            }
        }
    }
    for d in 2..=4 {
        let (h, _) = hypercube(d).expect("valid dimension");
        count += 1;
        if p_of(&h) != 1 {
            bad.push(format!("H{d}"));
        }
    }
    (bad.is_empty(), format!("{count} graphs, {} with p != 1 {}", bad.len(), bad.join(" ")))
}

fn with_pendants(g: &Graph, at: &[usize]) -> Graph {
    let mut edges = g.edges();
    for (i, &x) in at.iter().enumerate() {
        edges.push((x, g.n() + i));
    }
    Graph::build(g.n() + at.len(), &edges).expect("pendants keep the graph connected")
}

fn chordal() -> (bool, String) {
    let mut chordal_corpus = Vec::new();
    let mut rng = seeded(5);
    for k in 1..=3 {
        for n in [k + 3, 8, 10] {
            chordal_corpus.push(random_k_tree(n, k, &mut rng).expect("n > k"));
        }
    }
    for n in [5, 6, 7, 8, 9, 10] {
        chordal_corpus.push(random_interval_graph(n, &mut rng).expect("n >= 1"));
    }
    let sides = [Side::U, Side::V];
    for a in sides {
        for b in sides {
            for c in sides {
                for extras in [BetaExtras::NONE, BetaExtras::ALL] {
                    chordal_corpus.push(beta_configuration([a, b, c], extras).expect("valid attachment"));
                }
            }
        }
    }
    let chordal_corpus: Vec<Graph> = chordal_corpus.into_iter().filter(|g| is_chordal(g).verdict).collect();

    let c5 = cycle(5).expect("valid cycle");
    let k3 = complete(3).expect("valid clique");
    let w5 = wheel(5).expect("valid wheel");
    let cb_candidates = vec![
        c5.clone(),
        with_pendants(&c5, &[0]),
        with_pendants(&c5, &[0, 2]),
        w5.clone(),
        gated_amalgam(&c5, &c5, &[0], &[0]).expect("a vertex is gated").graph,
        gated_amalgam(&c5, &k3, &[0], &[0]).expect("a vertex is gated").graph,
        gated_amalgam(&w5, &c5, &[0], &[0]).expect("a vertex is gated").graph,
    ];
    let cb: Vec<Graph> =
        cb_candidates.into_iter().filter(|g| has_convex_balls(g).verdict && !is_bridged(g).verdict).collect();

    let worst = |gs: &[Graph]| gs.iter().map(p_of).max().unwrap_or(0);
    let (pc, pb) = (worst(&chordal_corpus), worst(&cb));
    let ok = chordal_corpus.len() >= 20 && cb.len() >= 5 && pc <= 2 && pb <= 2;
    (ok, format!("{} chordal graphs with max p {pc}; {} CB non-bridged graphs with max p {pb}", chordal_corpus.len(), cb.len()))
}

fn beta() -> (bool, String) {
    let g = beta_all_to_u();
    let pi = Profile::indicator([A, B, C, V]).expect("nonempty");
    let med = median_set(&g, &pi);
    let lmed = local_median_set_p(&g, &pi, 1);
    let p = p_of(&g);
    let ok = lmed != med && p == 2;
    (ok, format!("Med={:?}, lMed1={:?}, p={p}", med.to_vec(), lmed.to_vec()))
}

fn products() -> (bool, String) {
    let c6 = cycle(6).expect("valid cycle");
    let c7 = cycle(7).expect("valid cycle");
    let k2 = complete(2).expect("valid clique");
    let a = p_of(&cartesian_product(&c7, &k2));
    let b = p_of(&cartesian_product(&c6, &c6));
    let c = p_of(&gated_amalgam(&c6, &c6, &[0, 1], &[0, 1]).expect("edges of C6 are gated").graph);
    (a == 3 && b == 2 && c == 2, format!("p(C7xK2)={a}, p(C6xC6)={b}, p(C6+C6 on an edge)={c}"))
}

fn johnson_family() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [4, 5] {
        let (j, _) = johnson(n, 2).expect("valid parameters");
        let meshed = is_meshed(&j).verdict;
        let p = p_of(&j);
        ok &= meshed && p == 1;
        notes.push(format!("J({n},2) meshed={meshed} p={p}"));
    }
    for n in [4, 5] {
        let (h, _) = halved_cube(n).expect("valid dimension");
        let thick = is_thick(&h).verdict;
        let pc = satisfies_pc(&h).verdict;
        let p = p_of(&h);
        ok &= thick && pc && p == 1;
        notes.push(format!("half-H{n} thick={thick} pc={pc} p={p}"));
    }
    let iso = (3..=6).all(|n| {
        let (half, _) = halved_cube(n).expect("valid dimension");
        let (cube, _) = hypercube(n - 1).expect("valid dimension");
        half.is_isomorphism(&cube.power(2), &halved_cube_to_square_map(n))
    });
    ok &= iso;
    notes.push(format!("half-Hn ~ H(n-1)^2 for n=3..6: {iso}"));
    (ok, notes.join(", "))
}

fn benzenoids() -> (bool, String) {
    let specs = [
        ("hexagon", BenzenoidSpec::single()),
        ("naphthalene", BenzenoidSpec::linear(2)),
        ("anthracene", BenzenoidSpec::linear(3)),
        ("bent chain", BenzenoidSpec::bent_chain()),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, spec) in specs {
        let b = benzenoid(&spec).expect("valid spec");
        let iso = b.verify_embedding().isometric;
        let gated = b.hexagons_gated();
        let p = p_of(&b.graph);
        ok &= iso && gated && p <= 2;
        notes.push(format!("{name}: isometric={iso} gated={gated} p={p}"));
    }
    (ok, notes.join(", "))
}

fn lp_oracle() -> (bool, String) {
    use rayon::prelude::*;
    let graphs: Vec<Graph> = (1..=7).flat_map(connected_graphs).collect();
    let outcomes: Vec<(usize, usize, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let mut hits = 0;
            let mut feasible = 0;
            for p in 1..=2 {
                let verdicts = pair_verdicts(g, p, false);
                let connected = verdicts.iter().all(|v| v.passes());
                match brute_force_oracle(g, p, 2, DEFAULT_ORACLE_BUDGET) {
                    Ok(Some(_)) => {
                        hits += 1;
                        if connected {
                            return (hits, feasible, Some(format!("oracle hit but LP passes: {:?} p={p}", g.edges())));
                        }
                    }
                    Ok(None) => {}
                    Err(e) => return (hits, feasible, Some(format!("oracle error {e} on {:?}", g.edges()))),
                }
                for v in verdicts.iter().filter(|v| !v.passes()) {
                    feasible += 1;
                    let pi = v.result.witness.as_ref().expect("feasible verdicts carry a witness");
                    let prof = disconnecting_profile(g, v.u, v.v, pi);
                    let split = g.d(v.u, v.v) > p;
                    if !median_set_is_pair(g, &prof, v.u, v.v) || !split {
                        return (hits, feasible, Some(format!("pair ({},{}) on {:?} p={p}", v.u, v.v, g.edges())));
                    }
                }
            }
            (hits, feasible, None)
        })
        .collect();
    let hits: usize = outcomes.iter().map(|o| o.0).sum();
    let feasible: usize = outcomes.iter().map(|o| o.1).sum();
    let errors: Vec<&String> = outcomes.iter().filter_map(|o| o.2.as_ref()).collect();
    let detail = format!(
        "{} graphs, {hits} oracle hits, {feasible} feasible pairs verified, {} mismatches{}",
        graphs.len(),
        errors.len(),
        errors.first().map(|e| format!(" (first: {e})")).unwrap_or_default()
    );
    (errors.is_empty(), detail)
}

/// Function drawn for the local-to-global checks: random values, a median
/// function, or a distance function.
fn random_function(g: &Graph, rng: &mut impl Rng) -> VertexFunction {
    let n = g.n();
    match rng.random_range(0..3) {
        0 => VertexFunction::new(
            (0..n).map(|_| Q::new(rng.random_range(-6i64..=6).into(), rng.random_range(1i64..=3).into())).collect(),
        ),
        1 => {
            let k = rng.random_range(1..=3.min(n));
            let weights: Vec<(usize, i64)> =
                (0..k).map(|_| (rng.random_range(0..n), rng.random_range(1i64..=3))).collect();
            median_function(g, &Profile::from_ints(&weights).expect("positive weights"))
        }
        _ => {
            let z = rng.random_range(0..n);
            VertexFunction::new((0..n).map(|x| Q::from_integer(g.d(z, x).into())).collect())
        }
    }
}

fn local_to_global() -> (bool, String) {
    let mut rng = seeded(11);
    let mut passing = 0;
    let mut mismatches = Vec::new();
    for trial in 0..500 {
        let n = rng.random_range(3..=9);
        let density = rng.random_range(0.15..0.6);
        let g = random_connected_graph(n, density, &mut rng).expect("n >= 1");
        let f = random_function(&g, &mut rng);
        for p in 1..=2 {
            let local = is_p_weakly_peakless(&g, &f, p);
            let global = is_p_weakly_peakless_all_pairs(&g, &f, p);
            if local != global {
                mismatches.push(format!("trial {trial} p={p}: local={local} global={global}"));
                continue;
            }
            if !local {
                continue;
            }
            passing += 1;
            let unimodal = is_unimodal_on_power(&g, &f, p);
            let levels_ok = f.values().iter().all(|a| {
                let s = level_set(&f, a);
                is_p_isometric(&g, &s, p) && is_p_connected(&g, &s, p)
            });
            if !unimodal || !levels_ok {
                mismatches.push(format!("trial {trial} p={p}: unimodal={unimodal} level sets={levels_ok}"));
            }
        }
    }
    let detail = format!(
        "500 functions, {passing} passing (function, p) cases, {} mismatches{}",
        mismatches.len(),
        mismatches.first().map(|e| format!(" (first: {e})")).unwrap_or_default()
    );
    (mismatches.is_empty(), detail)
}

type Recognizer = fn(&Graph) -> ClassVerdict;

/// Class membership implies an upper bound on `p`.
const BOUNDS: &[(&str, Recognizer, u32)] = &[
    ("chordal", is_chordal, 2),
    ("bridged", is_bridged, 2),
    ("weakly-bridged", is_weakly_bridged, 2),
    ("cb", has_convex_balls, 2),
    ("bar", is_bipartite_absolute_retract, 2),
    ("thick+pc", thick_pc, 1),
];

fn thick_pc(g: &Graph) -> ClassVerdict {
    let v = is_thick(g).verdict && satisfies_pc(g).verdict;
    if v {
        ClassVerdict::holds("thick+pc")
    } else {
        ClassVerdict::fails("thick+pc", Vec::new())
    }
}

fn class_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (1..=6).flat_map(connected_graphs).collect();
    corpus.extend((4..=9).map(|n| cycle(n).expect("valid cycle")));
    corpus.extend((4..=7).map(|n| wheel(n).expect("valid wheel")));
    corpus.extend([
        johnson(5, 2).expect("valid parameters").0,
        halved_cube(5).expect("valid dimension").0,
        hypercube(4).expect("valid dimension").0,
        beta_all_to_u(),
        b_hat_graph(4).expect("valid order"),
        projective_incidence_graph(2).expect("2 is prime").graph,
    ]);
    corpus
}

fn class_bounds() -> (bool, String) {
    use rayon::prelude::*;
    let corpus = class_corpus();
    let rows: Vec<(u32, Vec<bool>)> = corpus
        .par_iter()
        .map(|g| (p_of(g), BOUNDS.iter().map(|(_, rec, _)| rec(g).verdict).collect()))
        .collect();
    let mut ok = true;
    let mut notes = Vec::new();
    for (i, (name, _, bound)) in BOUNDS.iter().enumerate() {
        let members: Vec<u32> = rows.iter().filter(|r| r.1[i]).map(|r| r.0).collect();
        let worst = members.iter().copied().max().unwrap_or(0);
        ok &= worst <= *bound;
        notes.push(format!("{name}: {} members, max p {worst} (bound {bound})", members.len()));
    }
    (ok, format!("{} graphs; {}", corpus.len(), notes.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_match_entries() {
        let names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
        assert_eq!(names, SUITE_NAMES);
        assert!(matches!(run_suite("nope"), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn fast_suites_pass() {
        for name in ["cycles", "c7", "beta"] {
            let r = run_suite(name).unwrap();
            assert!(r.passed, "{}", r.checks[0].line());
        }
    }
}
