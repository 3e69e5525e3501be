use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use pseudosym_core::algebra::{contract, kulkarni_nomizu};
use pseudosym_core::deszcz::{dot, tachibana};
use pseudosym_core::{Bundle, ComponentTensor, Kind, Metric, MetricSpec, Symmetry, Tensor};
use pseudosym_symbolic::{Context, Expr};

const COORDS: [&str; 4] = ["x", "y", "z", "w"];

fn context() -> Arc<Context> {
    static CTX: OnceLock<Arc<Context>> = OnceLock::new();
    CTX.get_or_init(|| {
        let mut b = Context::builder();
        for c in COORDS {
            b.coordinate(c);
        }
        Arc::new(b.build().unwrap())
    })
    .clone()
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 100,
        rng_seed: RngSeed::Fixed(0xc0ffee),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// `c·x_k^e·x_m^d` with a nonzero coefficient.
fn monomial() -> impl Strategy<Value = String> {
    (prop::sample::select(vec![-3, -2, -1, 1, 2, 3]), 0usize..4, 0u32..=2, 0usize..4, 0u32..=1)
        .prop_map(|(c, k, e, m, d)| format!("({c})*{}^{e}*{}^{d}", COORDS[k], COORDS[m]))
}

/// Metric with monomial diagonal entries and one optional off-diagonal
/// entry; arbitrary signature.
fn metric() -> impl Strategy<Value = Metric> {
    (
        prop::collection::vec(monomial(), 4),
        prop::option::of((0usize..4, 0usize..4, -2i64..=2, 0usize..4)),
    )
        .prop_filter_map("degenerate metric", |(diag, off)| {
            let ctx = context();
            let mut entries = vec![vec!["0".to_string(); 4]; 4];
            for (i, a) in diag.into_iter().enumerate() {
                entries[i][i] = a;
            }
            if let Some((i, j, c, k)) = off {
                if i != j && c != 0 {
                    let e = format!("({c})*{}", COORDS[k]);
                    entries[i][j] = e.clone();
                    entries[j][i] = e;
                }
            }
            let lower = ComponentTensor::from_fn(4, 2, |ix| ctx.parse(&entries[ix[0]][ix[1]]).unwrap());
            let chart = ctx.coordinates();
            MetricSpec::new("random", ctx.clone(), chart, lower, Vec::new()).ok()
        })
}

fn symmetric_matrix() -> impl Strategy<Value = Tensor> {
    prop::collection::vec((-4i64..=4, 0usize..5), 10).prop_map(|cells| {
        let ctx = context();
        let mut it = cells.into_iter();
        let mut m = vec![vec![Expr::zero(); 4]; 4];
        for i in 0..4 {
            for j in i..4 {
                let (c, k) = it.next().unwrap();
                let v = match k {
                    4 => Expr::from_int(c),
                    k => ctx.parse(&format!("({c})*{} + 1", COORDS[k])).unwrap(),
                };
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        ComponentTensor::from_fn(4, 2, |ix| m[ix[0]][ix[1]].clone())
    })
}

fn all_zero(t: &Tensor) -> bool {
    t.components().iter().all(Expr::is_zero)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn curvature_identities(m in metric()) {
        let b = Bundle::new(m).unwrap();
        let r = b.riemann();
        let n = b.dim();

        // first Bianchi identity and the remaining curvature symmetries
        prop_assert_eq!(r.check_symmetry(Symmetry::GeneralizedCurvature), Ok(()));

        // second Bianchi identity, derivative slot last
        let dr = b.nabla(Kind::Riemann).unwrap();
        let second = ComponentTensor::from_fn(n, 5, |i| {
            let (a, c, d, e, f) = (i[0], i[1], i[2], i[3], i[4]);
            dr.get(&[a, c, d, e, f]).add(dr.get(&[a, c, e, f, d])).add(dr.get(&[a, c, f, d, e]))
        });
        prop_assert!(all_zero(&second));

        // every trace of the Weyl tensor vanishes
        let c = b.tensor(Kind::Weyl);
        for (s, t) in [(0, 3), (0, 2), (1, 2), (1, 3)] {
            prop_assert!(all_zero(&contract(c, s, t, b.inverse()).unwrap()));
        }

        // C, W and K are generalized curvature tensors; P keeps antisymmetry and Bianchi
        for kind in [Kind::Weyl, Kind::Concircular, Kind::Conharmonic] {
            prop_assert_eq!(b.tensor(kind).check_symmetry(Symmetry::GeneralizedCurvature), Ok(()));
        }
        prop_assert_eq!(b.tensor(Kind::Projective).check_symmetry(Symmetry::ProjectiveLike), Ok(()));

        // R acts as a derivation annihilating the metric
        prop_assert!(all_zero(&dot(r, b.g(), b.inverse()).unwrap()));

        // Ricci tensor is the trace over the outer slots, and symmetric
        let s = contract(r, 0, 3, b.inverse()).unwrap();
        prop_assert_eq!(s.components(), b.ricci().components());
        prop_assert_eq!(s.check_symmetry(Symmetry::SymmetricPair), Ok(()));
    }

    #[test]
    fn tachibana_of_a_tensor_with_itself_vanishes(a in symmetric_matrix()) {
        prop_assert!(all_zero(&tachibana(&a, &a).unwrap()));
    }

    #[test]
    fn kulkarni_nomizu_products_are_curvature_like(a in symmetric_matrix(), e in symmetric_matrix()) {
        let ae = kulkarni_nomizu(&a, &e).unwrap();
        prop_assert!(ae.check_symmetry(Symmetry::GeneralizedCurvature).is_ok());
        prop_assert_eq!(ae, kulkarni_nomizu(&e, &a).unwrap());
    }
}
