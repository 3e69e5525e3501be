//! Exact evaluation points and randomized zero checks.

use std::collections::HashMap;

use rand::Rng;

use crate::coeff::Coefficient;
use crate::context::Context;
use crate::error::SymbolicError;
use crate::poly::Var;
use crate::ratfn::RatFn;

/// Assignment of an exact value to every symbol of a context.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<C> {
    values: HashMap<Var, C>,
}

impl<C: Coefficient> Point<C> {
    /// Builds a point from named values. Every symbol of `ctx` must be assigned.
    pub fn from_named<'a>(
        ctx: &Context,
        values: impl IntoIterator<Item = (&'a str, C)>,
    ) -> Result<Self, SymbolicError> {
        let mut map = HashMap::new();
        for (name, value) in values {
            map.insert(ctx.var(name)?, value);
        }
        for (i, sym) in ctx.symbols().iter().enumerate() {
            if !map.contains_key(&Var(i as u32)) {
                return Err(SymbolicError::Unassigned(sym.name.clone()));
            }
        }
        Ok(Point { values: map })
    }

    pub fn get(&self, v: Var) -> &C {
        &self.values[&v]
    }

    pub fn set(&mut self, v: Var, value: C) {
        self.values.insert(v, value);
    }

    pub fn evaluate(&self, e: &RatFn<C>) -> Result<C, SymbolicError> {
        e.evaluate(&|v| self.values.get(&v).cloned().unwrap_or_else(C::zero))
            .ok_or(SymbolicError::Pole)
    }
}

/// A point with small random rational values, none of them zero.
///
/// Zero values are avoided so that the usual assumptions (`r ≠ 0`, `f ≠ 0`)
/// hold; a caller that hits a pole should draw again.
pub fn random_point<C: Coefficient, R: Rng + ?Sized>(ctx: &Context, rng: &mut R) -> Point<C> {
    let mut values = HashMap::new();
    for i in 0..ctx.len() {
        let mut n: i64 = rng.gen_range(1..=97);
        if rng.gen_bool(0.5) {
            n = -n;
        }
        let d: i64 = rng.gen_range(1..=13);
        values.insert(Var(i as u32), C::from_frac(n, d));
    }
    Point { values }
}

/// Authoritative test: the canonical numerator is the zero polynomial.
pub fn is_identically_zero<C: Coefficient>(e: &RatFn<C>) -> bool {
    e.is_zero()
}

/// Evaluates `e` at `trials` random points and reports whether every
/// admissible evaluation vanished. Points hitting a pole are redrawn.
pub fn spot_check_zero<C: Coefficient, R: Rng + ?Sized>(
    e: &RatFn<C>,
    ctx: &Context,
    trials: usize,
    rng: &mut R,
) -> bool {
    let mut done = 0;
    let mut attempts = 0;
    while done < trials && attempts < trials * 10 + 10 {
        attempts += 1;
        let p = random_point::<C, _>(ctx, rng);
        match p.evaluate(e) {
            Ok(v) if v.is_zero() => done += 1,
            Ok(_) => return false,
            Err(_) => continue,
        }
    }
    true
}
