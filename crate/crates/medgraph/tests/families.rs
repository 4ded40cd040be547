use medgraph::classes::{check_class, CLASS_NAMES};
use medgraph::generators::{generate, FamilySpec};
use medgraph::lp::compute_p;
use medgraph::Error;

#[test]
fn every_family_name_parses_with_small_parameters() {
    let params: &[(&str, &[u64])] = &[
        ("path", &[4]),
        ("cycle", &[5]),
        ("complete", &[4]),
        ("complete-bipartite", &[2, 3]),
        ("wheel", &[5]),
        ("hypercube", &[3]),
        ("halved-cube", &[4]),
        ("johnson", &[4, 2]),
        ("grid", &[3, 3]),
        ("projective", &[2]),
        ("beta", &[]),
    ];
    for (name, p) in params {
        let spec = FamilySpec::parse(name, p).unwrap();
        let (g, _) = generate(&spec).unwrap();
        assert!(g.n() > 0, "{name}");
    }
    assert!(FamilySpec::parse("nonsense", &[]).is_err());
}

#[test]
fn p_values_of_small_families() {
    let cases: &[(&str, &[u64], u32)] = &[
        ("path", &[5], 1),
        ("complete", &[4], 1),
        ("cycle", &[4], 1),
        ("cycle", &[5], 2),
        ("cycle", &[6], 2),
        ("cycle", &[7], 3),
        ("cycle", &[8], 3),
        ("cycle", &[9], 4),
        ("grid", &[3, 3], 1),
        ("hypercube", &[3], 1),
    ];
    for &(name, p, want) in cases {
        let (g, _) = generate(&FamilySpec::parse(name, p).unwrap()).unwrap();
        assert_eq!(compute_p(&g, false).p, want, "{name} {p:?}");
    }
}

#[test]
fn class_dispatch_covers_every_name() {
    let (g, labels) = generate(&FamilySpec::parse("hypercube", &[3]).unwrap()).unwrap();
    for name in CLASS_NAMES {
        let r = check_class(name, &g, labels.as_ref());
        match *name {
            // hypercube labels serve neither target
            "johnson-medians" | "halved-cube-medians" => assert_eq!(r, Err(Error::EmbeddingUnverified)),
            _ => assert!(r.is_ok(), "{name}: {r:?}"),
        }
    }
    assert!(matches!(check_class("nope", &g, None), Err(Error::UnknownClass(_))));
}
