use pseudosym_core::catalog::{builtin, Built, CatalogParams};
use pseudosym_core::classify::Status;
use pseudosym_core::energy::{conditional_parallel, EnergyMomentum, FieldConstants};
use pseudosym_core::Bundle;
use pseudosym_symbolic::Expr;

fn build(name: &str, params: CatalogParams) -> (Bundle, Built) {
    let built = builtin(name, &params).unwrap();
    (Bundle::new(built.metric.clone()).unwrap(), built)
}

fn energy(bundle: &Bundle) -> EnergyMomentum<'_> {
    EnergyMomentum::new(bundle, FieldConstants::from_context(bundle.metric().context()))
}

#[test]
fn physical_constants_are_read_from_the_context() {
    let (bundle, _) = build("robinson-trautman-jet", CatalogParams::default());
    let ctx = bundle.metric().context();
    let k = FieldConstants::from_context(ctx);
    assert_eq!(k.prefactor, ctx.parse("c^4/(8*pi*G)").unwrap());
    assert_eq!(k.lambda, ctx.parse("Lambda").unwrap());
    let natural = FieldConstants::natural(Expr::zero());
    assert_eq!(natural.prefactor, Expr::one());
}

#[test]
fn energy_momentum_is_divergence_free() {
    for name in ["robinson-trautman-jet", "som-raychaudhuri", "schwarzschild-like"] {
        let (bundle, _) = build(name, CatalogParams::default());
        let em = energy(&bundle);
        assert!(em.divergence().unwrap().is_zero(), "{name}");
    }
}

#[test]
fn generic_robinson_trautman_is_not_parallel() {
    let (bundle, _) = build("robinson-trautman-concrete", CatalogParams::default());
    let em = energy(&bundle);
    let nabla = em.nabla().unwrap();
    assert!(!nabla.get(&[2, 2, 1]).is_zero());
}

#[test]
fn parallel_on_the_exponential_solution() {
    let params = CatalogParams::default().with("a", "0").with("b", "0");
    let (bundle, _) = build("robinson-trautman-concrete", params);
    let em = energy(&bundle);
    assert!(em.nabla().unwrap().is_zero());
}

#[test]
fn constraint_reduces_the_jet_combination() {
    let (bundle, built) = build("robinson-trautman-jet", CatalogParams::default());
    let ctx = bundle.metric().context();
    let condition = built.hints.parallel_energy_condition.as_ref().unwrap();
    let reducer = condition.reducer(ctx);
    let two_a = ctx.parse("2*a").unwrap();
    assert_eq!(reducer.reduce(&ctx.parse("F").unwrap()).unwrap(), two_a);
    assert!(reducer.reduce(&ctx.parse("F3").unwrap()).unwrap().is_zero());
    assert!(reducer.reduce(&ctx.parse("F4").unwrap()).unwrap().is_zero());
    assert!(reducer.reduce(&ctx.parse("b").unwrap()).unwrap().is_zero());
    let untouched = ctx.parse("q*r + f3").unwrap();
    assert_eq!(reducer.reduce(&untouched).unwrap(), untouched);
}

#[test]
fn conditional_parallelity_on_robinson_trautman() {
    let (bundle, built) = build("robinson-trautman-jet", CatalogParams::default());
    let em = energy(&bundle);
    let condition = built.hints.parallel_energy_condition.as_ref().unwrap();
    let finding = conditional_parallel(&em, condition).unwrap();
    assert_eq!(finding.status, Status::Holds);
    assert_eq!(
        finding.notes[0],
        "∇T = 0: fails generically, holds under b = 0 and F = 2a"
    );
    assert_eq!(finding.notes.len(), 3);
}

#[test]
fn robinson_trautman_components() {
    let (bundle, _) = build("robinson-trautman-jet", CatalogParams::default());
    let ctx = bundle.metric().context();
    let em = energy(&bundle);
    let t = em.tensor();
    let p = |s: &str| ctx.parse(s).unwrap();
    assert_eq!(t.get(&[0, 1]), &p("c^4*(-2*a+8*b*r+F+Lambda*r^2)/(8*pi*G*r^2)"));
    assert_eq!(t.get(&[2, 2]), &p("-c^4*r*(4*b+Lambda*r)/(8*pi*f^2*G)"));
    assert_eq!(t.get(&[3, 3]), t.get(&[2, 2]));
    let nabla = em.nabla().unwrap();
    assert_eq!(nabla.get(&[2, 2, 1]), &p("b*c^4/(2*pi*f^2*G)"));
    assert_eq!(nabla.get(&[3, 3, 1]), nabla.get(&[2, 2, 1]));
}
