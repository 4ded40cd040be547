//! Text formats.
//!
//! * Graph: header `n m`, then `m` lines `u v`.
//! * Profile: lines `vertex weight`, weight an integer or `a/b`.
//! * Function: lines `vertex value`, optionally preceded by `default value`;
//!   every vertex must receive a value.
//! * Labels: optional `target hypercube | halved-cube | johnson k`, then
//!   lines `vertex: i1,i2,...`.
//! * Benzenoid spec: lines `a b` of axial hexagon coordinates.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use crate::classes::{EmbeddingTarget, LabeledEmbedding};
use crate::function::{Profile, VertexFunction};
use crate::generators::BenzenoidSpec;
use crate::graph::Graph;
use crate::rational::{fmt_q, parse_q, Q};
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Nonempty, non-comment lines with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a number, found `{tok}`")))
}

fn two_fields(line: usize, l: &str) -> Result<(&str, &str)> {
    let mut it = l.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(parse_err(line, "expected two fields")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_fields(hl, header)?;
    let (n, m): (usize, usize) = (parse_num(hl, n)?, parse_num(hl, m)?);
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        let (a, b) = two_fields(ln, l)?;
        let (a, b): (usize, usize) = (parse_num(ln, a)?, parse_num(ln, b)?);
        if a >= n || b >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        edges.push((a, b));
        last = ln;
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::build(n, &edges)
}

/// Canonical form: header, then edges `u < v` in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

fn parse_value(line: usize, tok: &str) -> Result<Q> {
    parse_q(tok).ok_or_else(|| parse_err(line, format!("expected an integer or a/b, found `{tok}`")))
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut weights = Vec::new();
    for (ln, l) in content_lines(text) {
        let (v, w) = two_fields(ln, l)?;
        let v: usize = parse_num(ln, v)?;
        let w = parse_value(ln, w)?;
        if !crate::rational::is_nonnegative(&w) {
            return Err(parse_err(ln, "negative weight"));
        }
        weights.push((v, w));
    }
    Profile::new(weights).map_err(|e| parse_err(0, e.to_string()))
}

pub fn write_profile(p: &Profile) -> String {
    p.iter().map(|(v, w)| format!("{v} {}\n", fmt_q(w))).collect()
}

pub fn parse_function(text: &str, n: usize) -> Result<VertexFunction> {
    let mut values: Vec<Option<Q>> = vec![None; n];
    let mut default = None;
    for (ln, l) in content_lines(text) {
        let (a, b) = two_fields(ln, l)?;
        if a == "default" {
            default = Some(parse_value(ln, b)?);
            continue;
        }
        let v: usize = parse_num(ln, a)?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        values[v] = Some(parse_value(ln, b)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.or_else(|| default.clone()).ok_or_else(|| parse_err(0, format!("no value for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexFunction::new(values))
}

pub fn write_function(f: &VertexFunction) -> String {
    f.values().iter().enumerate().map(|(v, x)| format!("{v} {}\n", fmt_q(x))).collect()
}

/// Labels and the target, if the file names one.
pub fn parse_labels(text: &str, n: usize) -> Result<(Vec<Vec<u32>>, Option<EmbeddingTarget>)> {
    let mut labels: Vec<Option<Vec<u32>>> = vec![None; n];
    let mut target = None;
    for (ln, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("target") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            target = Some(match toks.as_slice() {
                ["hypercube"] => EmbeddingTarget::Hypercube,
                ["halved-cube"] => EmbeddingTarget::HalvedCube,
                ["johnson", k] => EmbeddingTarget::Johnson(parse_num(ln, k)?),
                _ => return Err(parse_err(ln, "expected `target hypercube|halved-cube|johnson k`")),
            });
            continue;
        }
        let (v, set) = l.split_once(':').ok_or_else(|| parse_err(ln, "expected `vertex: i1,i2,...`"))?;
        let v: usize = parse_num(ln, v.trim())?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        let set = set
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| parse_num(ln, t))
            .collect::<Result<Vec<u32>>>()?;
        labels[v] = Some(set);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| parse_err(0, format!("no label for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((labels, target))
}

pub fn write_labels(e: &LabeledEmbedding) -> String {
    let mut out = match e.target {
        EmbeddingTarget::Hypercube => "target hypercube\n".to_string(),
        EmbeddingTarget::HalvedCube => "target halved-cube\n".to_string(),
        EmbeddingTarget::Johnson(k) => format!("target johnson {k}\n"),
    };
    for (v, l) in e.labels.iter().enumerate() {
        let items: Vec<String> = l.iter().map(u32::to_string).collect();
        writeln!(out, "{v}: {}", items.join(",")).unwrap();
    }
    out
}

pub fn parse_benzenoid_spec(text: &str) -> Result<BenzenoidSpec> {
    let mut hex = Vec::new();
    for (ln, l) in content_lines(text) {
        let (a, b) = two_fields(ln, l)?;
        hex.push((parse_num(ln, a)?, parse_num(ln, b)?));
    }
    if hex.is_empty() {
        return Err(parse_err(0, "no hexagons"));
    }
    Ok(BenzenoidSpec::new(hex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn graph_round_trip() {
        let text = "# C4\n4 4\n0 1\n0 3\n1 2\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(parse_graph("3 2\n0 1\n1 x\n").unwrap_err(), parse_err(3, "expected a number, found `x`"));
        assert!(matches!(parse_graph("3 1\n0 1\n"), Err(Error::Disconnected)));
        assert!(matches!(parse_graph("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 3\n0 1\n1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn profiles_and_functions() {
        let p = parse_profile("0 3\n3 1/2\n# c\n").unwrap();
        assert_eq!(p.weight(3), ratio(1, 2));
        assert_eq!(parse_profile(&write_profile(&p)).unwrap(), p);
        assert!(matches!(parse_profile("0 -1\n"), Err(Error::Parse { line: 1, .. })));
        let f = parse_function("default 0\n2 -5/3\n", 4).unwrap();
        assert_eq!(f[2], ratio(-5, 3));
        assert_eq!(parse_function(&write_function(&f), 4).unwrap(), f);
        assert!(parse_function("0 1\n", 2).is_err());
    }

    #[test]
    fn labels() {
        let (labels, target) = parse_labels("target johnson 2\n0: 1,2\n1: 1,3\n", 2).unwrap();
        assert_eq!(labels, vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(target, Some(EmbeddingTarget::Johnson(2)));
        let e = LabeledEmbedding::new(labels, EmbeddingTarget::Johnson(2));
        assert_eq!(parse_labels(&write_labels(&e), 2).unwrap().0, e.labels);
        let (empty, _) = parse_labels("0:\n", 1).unwrap();
        assert!(empty[0].is_empty());
    }

    #[test]
    fn benzenoid_spec() {
        let s = parse_benzenoid_spec("0 0\n1 0\n").unwrap();
        assert_eq!(s, BenzenoidSpec::linear(2));
        assert!(parse_benzenoid_spec("0\n").is_err());
    }
}
