use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use pseudosym_core::catalog::{builtin, CatalogParams};
use pseudosym_core::classify::{
    full_report, nontrivial_span, proportionality, span, ClassificationReport, Group, Selection, Settings, Status,
};
use pseudosym_core::{ComponentTensor, Tensor};
use pseudosym_symbolic::Expr;

fn report(name: &str, selection: &str) -> (ClassificationReport, pseudosym_core::Metric) {
    let built = builtin(name, &CatalogParams::default()).unwrap();
    let metric = built.metric.clone();
    let r = full_report(built.metric, &built.hints, Settings::default(), &Selection::parse(selection)).unwrap();
    (r, metric)
}

fn status(r: &ClassificationReport, name: &str) -> Status {
    r.verdict(name).unwrap_or_else(|| panic!("missing verdict {name}")).status
}

fn datum(r: &ClassificationReport, m: &pseudosym_core::Metric, name: &str, label: &str) -> String {
    m.context().format(r.verdict(name).unwrap().datum(label).unwrap())
}

#[test]
fn flat_space_satisfies_every_decided_condition() {
    let (r, _) = report("minkowski", "all");
    for v in &r.verdicts {
        match v.status {
            Status::Fails => panic!("{} fails on flat space", v.name),
            Status::Inconclusive => assert!(!v.notes.is_empty(), "{} gives no reason", v.name),
            _ => {}
        }
    }
    assert_eq!(status(&r, "semisymmetric"), Status::Holds);
    assert_eq!(status(&r, "deszcz-pseudosymmetric"), Status::Vacuous);
    assert_eq!(status(&r, "locally-symmetric"), Status::Holds);
}

#[test]
fn som_raychaudhuri_structure() {
    let (r, m) = report("som-raychaudhuri", "all");
    assert_eq!(status(&r, "semisymmetric"), Status::Fails);
    assert_eq!(status(&r, "deszcz-pseudosymmetric"), Status::Fails);
    assert_eq!(datum(&r, &m, "ricci-generalized-pseudosymmetric", "L"), "1");
    assert_eq!(status(&r, "weyl-pseudosymmetric-C"), Status::HoldsWithData);
    assert_eq!(status(&r, "roter"), Status::Fails);
    assert_eq!(status(&r, "generalized-roter"), Status::HoldsWithData);
    assert_eq!(status(&r, "quasi-einstein"), Status::Fails);
    assert_eq!(datum(&r, &m, "2-quasi-einstein", "alpha1"), "2*a^2");
    assert_eq!(datum(&r, &m, "ein-level", "k"), "3");
    assert_eq!(datum(&r, &m, "ein-level", "c1"), "4*a^4");
    for holds in [
        "ricci-cyclic-parallel",
        "constant-scalar-curvature",
        "ricci-compatible-R",
        "ricci-compatible-C",
        "ricci-compatible-W",
        "ricci-compatible-K",
        "energy-momentum-divergence-free",
    ] {
        assert_eq!(status(&r, holds), Status::Holds, "{holds}");
    }
    assert_eq!(status(&r, "ricci-compatible-P"), Status::Fails);
    assert_eq!(status(&r, "ricci-parallel"), Status::Fails);
}

#[test]
fn failures_carry_a_witness() {
    let (r, _) = report("som-raychaudhuri", "semisymmetry,einstein");
    for v in r.verdicts.iter().filter(|v| v.status == Status::Fails) {
        assert_eq!(v.witnesses.len(), 1, "{}", v.name);
        assert!(v.witnesses[0].iter().all(|&i| (1..=4).contains(&i)));
        let value = v.datum("residual").or_else(|| v.datum("minor")).unwrap();
        assert!(!value.is_zero(), "{}", v.name);
    }
}

#[test]
fn robinson_trautman_pseudosymmetry() {
    let (r, m) = report(
        "robinson-trautman-jet",
        "deszcz-pseudosymmetric,ricci-pseudosymmetric,weyl-pseudosymmetric-C,roter",
    );
    // `roter` names both a detector and its group
    assert_eq!(r.verdicts.len(), 5);
    assert!(r.verdict("generalized-roter").is_some());
    let l = "(q - 2*b*r^2)/r^3";
    assert_eq!(datum(&r, &m, "deszcz-pseudosymmetric", "L"), l);
    assert_eq!(datum(&r, &m, "ricci-pseudosymmetric", "L"), l);
    let weyl = m.context().parse("(6*q - 2*a*r + F*r)/(6*r^3)").unwrap();
    assert_eq!(r.verdict("weyl-pseudosymmetric-C").unwrap().datum("L"), Some(&weyl));
    assert_eq!(status(&r, "roter"), Status::HoldsWithData);
}

#[test]
fn selection_filters_by_name_and_group() {
    let (r, _) = report("minkowski", "ricci-parallel, divergence");
    assert!(r.verdict("ricci-parallel").is_some());
    assert!(r.verdicts.iter().any(|v| v.group == Group::Divergence));
    assert!(r
        .verdicts
        .iter()
        .all(|v| v.name == "ricci-parallel" || v.group == Group::Divergence));
    assert_eq!(Selection::parse(" "), Selection::All);
    assert_eq!(Selection::parse("roter,all"), Selection::All);
}

#[test]
fn reports_are_deterministic() {
    let (a, _) = report("som-raychaudhuri", "all");
    let (b, _) = report("som-raychaudhuri", "all");
    assert_eq!(a, b);
}

#[test]
fn status_ids_round_trip() {
    for s in [
        Status::Holds,
        Status::Fails,
        Status::HoldsWithData,
        Status::Vacuous,
        Status::Inconclusive,
    ] {
        assert_eq!(Status::from_id(s.id()), Some(s));
    }
}

#[test]
fn nontrivial_span_rejects_the_zero_solution() {
    let zero = tensor(&[0, 0, 0, 0]);
    let a = tensor(&[1, 2, 0, 0]);
    let b = tensor(&[0, 3, 1, 0]);
    let f = nontrivial_span(&zero, &[("x".into(), a.clone()), ("y".into(), b.clone())]).unwrap();
    assert_eq!(f.status, Status::Fails);
    assert_eq!(f.witnesses.len(), 2);
    // rows (1, 0) and (2, 3)
    assert_eq!(f.datum("minor"), Some(&Expr::from_int(3)));

    // a dependent basis has a nonzero homogeneous solution
    let c = tensor(&[2, 4, 0, 0]);
    let f = nontrivial_span(&zero, &[("x".into(), a.clone()), ("y".into(), c)]).unwrap();
    assert_eq!(f.status, Status::HoldsWithData);
    assert_eq!(f.datum("x"), Some(&Expr::from_int(-2)));
    assert_eq!(f.datum("y"), Some(&Expr::from_int(1)));

    // an inhomogeneous target behaves as in the plain solve
    let target = tensor(&[1, 5, 1, 0]);
    let basis = [("x".to_string(), a), ("y".to_string(), b)];
    assert_eq!(nontrivial_span(&target, &basis).unwrap(), span(&target, &basis).unwrap());
}

#[test]
fn trivial_two_form_recurrence_is_rejected() {
    // the second Bianchi identity makes the cyclic sum of ∇R vanish, so only Π = 0 remains
    let (r, _) = report("som-raychaudhuri", "curvature-2-forms-recurrent-R");
    let v = r.verdict("curvature-2-forms-recurrent-R").unwrap();
    assert_eq!(v.status, Status::Fails);
    assert!(!v.datum("minor").unwrap().is_zero());
}

fn tensor(cells: &[i64]) -> Tensor {
    ComponentTensor::from_fn(2, 2, |i| Expr::from_int(cells[2 * i[0] + i[1]]))
}

fn scaled(t: &Tensor, c: &Expr) -> Tensor {
    ComponentTensor::from_fn(2, 2, |i| t.get(i).mul(c))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        rng_seed: RngSeed::Fixed(0x5ca1e),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn proportionality_recovers_the_scale(
        cells in prop::collection::vec(-5i64..=5, 4),
        num in -9i64..=9,
        den in 1i64..=9,
    ) {
        prop_assume!(cells.iter().any(|&c| c != 0));
        let t = tensor(&cells);
        let c = Expr::from_frac(num, den);
        let f = proportionality(&scaled(&t, &c), &t).unwrap();
        prop_assert_eq!(f.status, Status::HoldsWithData);
        prop_assert_eq!(f.datum("L"), Some(&c));
    }

    #[test]
    fn span_recovers_independent_coefficients(
        x in -9i64..=9,
        y in -9i64..=9,
    ) {
        let a = tensor(&[1, 0, 0, 0]);
        let b = tensor(&[0, 1, 1, 0]);
        let target = ComponentTensor::from_fn(2, 2, |i| {
            a.get(i).mul(&Expr::from_int(x)).add(&b.get(i).mul(&Expr::from_int(y)))
        });
        let f = span(&target, &[("x".into(), a.clone()), ("y".into(), b.clone())]).unwrap();
        prop_assert_eq!(f.status, Status::HoldsWithData);
        prop_assert_eq!(f.datum("x"), Some(&Expr::from_int(x)));
        prop_assert_eq!(f.datum("y"), Some(&Expr::from_int(y)));
        let off = tensor(&[0, 0, 0, 1]);
        let g = span(&off, &[("x".into(), a), ("y".into(), b)]).unwrap();
        prop_assert_eq!(g.status, Status::Fails);
    }
}
