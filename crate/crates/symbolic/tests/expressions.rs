use pseudosym_symbolic::{BigRational, Coefficient, Context, Expr, Point, SymbolicError};

fn rt_context() -> Context {
    let mut b = Context::builder();
    let _t = b.coordinate("t");
    let _r = b.coordinate("r");
    let x3 = b.coordinate("x3");
    let x4 = b.coordinate("x4");
    b.parameter("a");
    b.parameter("b");
    b.parameter("q");
    b.jet_function("f", &[x3, x4], 4);
    b.alias("F", "f3^2+f4^2-f*(f33+f44)");
    b.build().unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_int(n)
}

fn point(ctx: &Context, overrides: &[(&str, i64)]) -> Point<BigRational> {
    let mut values: Vec<(&str, BigRational)> = ctx
        .symbols()
        .iter()
        .map(|s| (s.name.as_str(), q(1)))
        .collect();
    for (name, v) in overrides {
        for entry in values.iter_mut() {
            if entry.0 == *name {
                entry.1 = q(*v);
            }
        }
    }
    Point::from_named(ctx, values).unwrap()
}

#[test]
fn parses_curvature_component() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("-2*q/r^3").unwrap();
    assert_eq!(ctx.format_poly(e.numer()), "-2*q");
    assert_eq!(ctx.format_poly(e.denom()), "r^3");
    assert_eq!(ctx.format(&e), "-2*q/r^3");
}

#[test]
fn alias_expands_to_definition() {
    let ctx = rt_context();
    let alias: Expr = ctx.parse("F").unwrap();
    let direct: Expr = ctx.parse("f3^2+f4^2-f*(f33+f44)").unwrap();
    assert_eq!(alias, direct);
    let diff: Expr = ctx.parse("F - f3^2 - f4^2 + f*(f33+f44)").unwrap();
    assert!(diff.is_zero());
}

#[test]
fn zero_division_is_rejected() {
    let ctx = rt_context();
    assert!(matches!(
        ctx.parse::<BigRational>("r/0"),
        Err(SymbolicError::ZeroDivision { .. })
    ));
    assert!(matches!(
        ctx.parse::<BigRational>("r/(q-q)"),
        Err(SymbolicError::ZeroDivision { .. })
    ));
}

#[test]
fn derivative_of_curvature_component() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("-2*q/r^3").unwrap();
    let d = ctx.differentiate(&e, ctx.var("r").unwrap()).unwrap();
    assert_eq!(d, ctx.parse("6*q/r^4").unwrap());
}

#[test]
fn jet_rules_and_independence() {
    let ctx = rt_context();
    let f: Expr = ctx.parse("f").unwrap();
    let d = ctx.differentiate(&f, ctx.var("x3").unwrap()).unwrap();
    assert_eq!(d, ctx.parse("f3").unwrap());
    let big_f: Expr = ctx.parse("F").unwrap();
    assert!(ctx.differentiate(&big_f, ctx.var("t").unwrap()).unwrap().is_zero());
    let f4: Expr = ctx.parse("f4").unwrap();
    let d = ctx.differentiate(&f4, ctx.var("x3").unwrap()).unwrap();
    assert_eq!(ctx.format(&d), "f34");
}

#[test]
fn depth_limit_is_reported() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("f3444").unwrap();
    assert!(matches!(
        ctx.differentiate(&e, ctx.var("x3").unwrap()),
        Err(SymbolicError::DepthExceeded { .. })
    ));
    assert!(matches!(
        ctx.differentiate(&e, ctx.var("q").unwrap()),
        Err(SymbolicError::NotACoordinate(_))
    ));
}

#[test]
fn identically_zero_examples() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("r^2 - r*r").unwrap();
    assert!(e.is_zero());
    let e: Expr = ctx.parse("2*a*r - 6*q - F*r").unwrap();
    assert!(!e.is_zero());
    // a = 1, q = 0, r = 1 and f constant: F vanishes and the value is 2
    let p = point(
        &ctx,
        &[("q", 0), ("f3", 0), ("f4", 0), ("f33", 0), ("f44", 0)],
    );
    assert_eq!(p.evaluate(&e).unwrap(), q(2));
}

#[test]
fn evaluation_examples() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("-2*q/r^3").unwrap();
    assert_eq!(point(&ctx, &[]).evaluate(&e).unwrap(), q(-2));
    assert_eq!(
        point(&ctx, &[("r", 0)]).evaluate(&e),
        Err(SymbolicError::Pole)
    );
    let kappa: Expr = ctx.parse("-2*(-2*a + 12*b*r + F)/r^2").unwrap();
    let p = point(
        &ctx,
        &[("b", 0), ("f3", 0), ("f4", 0), ("f33", 0), ("f44", 0)],
    );
    assert_eq!(p.evaluate(&kappa).unwrap(), q(4));
}

#[test]
fn exponential_symbol_differentiates_to_itself() {
    let mut b = Context::builder();
    let x3 = b.coordinate("x3");
    let x4 = b.coordinate("x4");
    b.exponential_jet("E", &[x3, x4]);
    let ctx = b.build().unwrap();
    let e: Expr = ctx.parse("E^2").unwrap();
    let d = ctx.differentiate(&e, x4).unwrap();
    assert_eq!(d, ctx.parse("2*E^2").unwrap());
}

#[test]
fn canonical_text_round_trips() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("(q - 2*b*r^2)/r^3").unwrap();
    let text = ctx.format(&e);
    assert_eq!(text, "(q - 2*b*r^2)/r^3");
    assert_eq!(ctx.parse::<BigRational>(&text).unwrap(), e);

    let product: Expr = ctx.parse("(2*b*r^2 - 3*q)/(f^2*r)").unwrap();
    let text = ctx.format(&product);
    assert_eq!(text, "(-3*q + 2*b*r^2)/(f^2*r)");
    assert_eq!(ctx.parse::<BigRational>(&text).unwrap(), product);
}

#[test]
fn exact_square_roots() {
    let ctx = rt_context();
    let e: Expr = ctx.parse("(4*r^2 - 12*r*q + 9*q^2)/(f^2)").unwrap();
    let root = e.sqrt_exact().unwrap();
    assert_eq!(root.mul(&root), e);
    let neg: Expr = ctx.parse("-(r - q)^2/(f^2)").unwrap();
    assert!(neg.sqrt_exact().is_none());
    let not_square: Expr = ctx.parse("r^2 + 1").unwrap();
    assert!(not_square.sqrt_exact().is_none());
    let two: Expr = ctx.parse("2*r^2").unwrap();
    assert!(two.sqrt_exact().is_none());
}
