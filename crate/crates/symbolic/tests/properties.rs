use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use pseudosym_symbolic::{BigRational, Coefficient, Context, Expr, Point, RatFn, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn context() -> Context {
    let mut b = Context::builder();
    b.coordinate("t");
    b.coordinate("r");
    let x3 = b.coordinate("x3");
    let x4 = b.coordinate("x4");
    b.parameter("q");
    b.jet_function("f", &[x3, x4], 4);
    b.build().unwrap()
}

fn leaf() -> impl Strategy<Value = String> {
    prop_oneof![
        (-5i64..=5).prop_map(|n| format!("({n})")),
        prop::sample::select(vec!["r", "x3", "x4", "q", "f", "f3", "f4"]).prop_map(String::from),
    ]
}

fn expression() -> impl Strategy<Value = String> {
    leaf().prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} - {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} * {b})")),
            inner.clone().prop_map(|a| format!("({a})/(1 + r^2)")),
            inner.clone().prop_map(|a| format!("({a})/(f*r^2)")),
            inner.clone().prop_map(|a| format!("({a})^2")),
        ]
    })
}

fn parse(ctx: &Context, s: &str) -> Expr {
    ctx.parse(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        rng_seed: RngSeed::Fixed(0x5eed),
        ..ProptestConfig::default()
    })]

    #[test]
    fn leibniz_rule(a in expression(), b in expression(), which in 0usize..4) {
        let ctx = context();
        let x = ctx.coordinates()[which];
        let (ea, eb) = (parse(&ctx, &a), parse(&ctx, &b));
        let lhs = ctx.differentiate(&ea.mul(&eb), x).unwrap();
        let rhs = ea.mul(&ctx.differentiate(&eb, x).unwrap())
            .add(&eb.mul(&ctx.differentiate(&ea, x).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(a in expression(), i in 0usize..4, j in 0usize..4) {
        let ctx = context();
        let (xi, xj) = (ctx.coordinates()[i], ctx.coordinates()[j]);
        let e = parse(&ctx, &a);
        let ij = ctx.differentiate(&ctx.differentiate(&e, xi).unwrap(), xj).unwrap();
        let ji = ctx.differentiate(&ctx.differentiate(&e, xj).unwrap(), xi).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn canonical_form_is_idempotent(a in expression()) {
        let ctx = context();
        let e = parse(&ctx, &a);
        let again = RatFn::new(e.numer().clone(), e.denom().clone());
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(parse(&ctx, &ctx.format(&e)), e);
    }

    #[test]
    fn zero_expressions_evaluate_to_zero(
        a in expression(), b in expression(), c in expression(), seed in any::<u64>()
    ) {
        let ctx = context();
        let (ea, eb, ec) = (parse(&ctx, &a), parse(&ctx, &b), parse(&ctx, &c));
        let zero = ea.mul(&eb.add(&ec)).sub(&ea.mul(&eb)).sub(&ea.mul(&ec));
        prop_assert!(zero.is_zero());
        // evaluate the pieces separately so the check does not reuse the simplification
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        while checked < 4 {
            let p: Point<BigRational> = pseudosym_symbolic::random_point(&ctx, &mut rng);
            let (Ok(va), Ok(vb), Ok(vc)) = (p.evaluate(&ea), p.evaluate(&eb), p.evaluate(&ec)) else {
                continue;
            };
            let total = va.clone() * (vb.clone() + vc.clone()) - va.clone() * vb - va * vc;
            prop_assert_eq!(total, BigRational::from_int(0));
            checked += 1;
        }
    }

    #[test]
    fn substitution_matches_evaluation(a in expression(), seed in any::<u64>()) {
        let ctx = context();
        let e = parse(&ctx, &a);
        let r = ctx.var("r").unwrap();
        let Some(s) = e.substitute(r, &Expr::from_int(2)) else { return Ok(()); };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p: Point<BigRational> = pseudosym_symbolic::random_point(&ctx, &mut rng);
        p.set(r, BigRational::from_int(2));
        if let (Ok(x), Ok(y)) = (p.evaluate(&e), p.evaluate(&s)) {
            prop_assert_eq!(x, y);
        }
        prop_assert!(!s.contains_var(Var(r.0)));
    }
}

#[test]
fn spot_check_agrees_with_exact_test() {
    let ctx = context();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let nonzero = parse(&ctx, "f3^2 - f*f33 + q/r");
    assert!(!pseudosym_symbolic::spot_check_zero(&nonzero, &ctx, 5, &mut rng));
    let zero = parse(&ctx, "(r+1)^3 - r^3 - 3*r^2 - 3*r - 1");
    assert!(pseudosym_symbolic::is_identically_zero(&zero));
    assert!(pseudosym_symbolic::spot_check_zero(&zero, &ctx, 100, &mut rng));
}
