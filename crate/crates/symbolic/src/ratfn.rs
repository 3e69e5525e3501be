//! Rational functions: the `Expr` type every curvature computation lives in.

use std::fmt;

use crate::coeff::Coefficient;
use crate::gcd::gcd;
use crate::poly::{Poly, Var};

/// Reduced fraction `num / den` of polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, both have integer coefficients,
/// `den` has a positive leading coefficient and the integer contents of
/// `num` and `den` are coprime. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coefficient> fmt::Debug for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl<C: Coefficient> Default for RatFn<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> From<Poly<C>> for RatFn<C> {
    fn from(p: Poly<C>) -> Self {
        Self::new(p, Poly::one())
    }
}

impl<C: Coefficient> RatFn<C> {
    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(Poly::from_int(v), Poly::one())
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::constant(C::from_frac(n, d))
    }

    pub fn constant(c: C) -> Self {
        Self::new(Poly::constant(c), Poly::one())
    }

    pub fn var(v: Var) -> Self {
        RatFn {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    /// Builds and reduces `num / den`. Panics on a zero denominator.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: Poly<C>, den: Poly<C>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Some(Self::scaled(num, den))
        } else {
            let n = num.div_exact(&g).expect("gcd divides numerator");
            let d = den.div_exact(&g).expect("gcd divides denominator");
            Some(Self::scaled(n, d))
        }
    }

    /// Normalizes integer contents of an already coprime pair.
    fn scaled(num: Poly<C>, den: Poly<C>) -> Self {
        let cn = num.content();
        let mut cd = den.content();
        if den.leading_coefficient().is_negative() {
            cd = -cd;
        }
        let k = cn.clone() / cd.clone();
        let num = num.scale(&(k.numer_part() / cn));
        let den = den.scale(&(k.denom_part() / cd));
        RatFn { num, den }
    }

    pub fn numer(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<C> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::with_known_factor(self.num.add(&other.num), self.den.clone(), &self.den);
        }
        let g = gcd(&self.den, &other.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let den = self.den.mul(&d2);
        // any common factor of num and den divides g
        Self::with_known_factor(num, den, &g)
    }

    fn with_known_factor(num: Poly<C>, den: Poly<C>, bound: &Poly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if bound.is_constant() {
            return Self::scaled(num, den);
        }
        let h = gcd(&num, bound);
        if h.is_one() {
            Self::scaled(num, den)
        } else {
            Self::scaled(
                num.div_exact(&h).expect("gcd divides"),
                den.div_exact(&h).expect("gcd divides"),
            )
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::scaled(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::scaled(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::scaled(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: i32) -> Option<Self> {
        if k >= 0 {
            Some(Self::scaled(
                self.num.pow(k as u32),
                self.den.pow(k as u32),
            ))
        } else {
            let inv = self.inv()?;
            inv.pow(-k)
        }
    }

    /// Exact square root, when numerator and denominator are both squares
    /// (possibly after flipping both signs).
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let attempt = |n: &Poly<C>, d: &Poly<C>| Some(Self::scaled(n.sqrt_exact()?, d.sqrt_exact()?));
        attempt(&self.num, &self.den).or_else(|| attempt(&self.num.neg(), &self.den.neg()))
    }

    /// Partial derivative treating every variable as independent, with
    /// `dv` giving the derivative of each variable.
    pub fn derivative_with(&self, dv: &dyn Fn(Var) -> Poly<C>) -> Self {
        let dn = poly_chain(&self.num, dv);
        if self.den.is_constant() {
            return Self::scaled(dn, self.den.clone());
        }
        let dd = poly_chain(&self.den, dv);
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&self.den);
        Self::new(num, den)
    }

    pub fn evaluate(&self, value: &dyn Fn(Var) -> C) -> Option<C> {
        let d = self.den.evaluate(value);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(value) / d)
    }

    /// Replace `v` by `by` everywhere. Returns `None` if the denominator collapses to zero.
    pub fn substitute(&self, v: Var, by: &Self) -> Option<Self> {
        if !self.contains_var(v) {
            return Some(self.clone());
        }
        let n = substitute_poly(&self.num, v, by);
        let d = substitute_poly(&self.den, v, by);
        n.checked_div(&d)
    }

    /// `true` when `self == other`, decided by cross-multiplication.
    pub fn cross_equal(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

fn cancel<C: Coefficient>(n: &Poly<C>, d: &Poly<C>) -> (Poly<C>, Poly<C>) {
    if d.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = gcd(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (
            n.div_exact(&g).expect("gcd divides"),
            d.div_exact(&g).expect("gcd divides"),
        )
    }
}

fn poly_chain<C: Coefficient>(p: &Poly<C>, dv: &dyn Fn(Var) -> Poly<C>) -> Poly<C> {
    let mut acc = Poly::zero();
    for v in p.vars() {
        let d = dv(v);
        if d.is_zero() {
            continue;
        }
        acc = acc.add(&p.derivative(v).mul(&d));
    }
    acc
}

fn substitute_poly<C: Coefficient>(p: &Poly<C>, v: Var, by: &RatFn<C>) -> RatFn<C> {
    let coeffs = p.coefficients_in(v);
    // Horner in `by`
    let mut acc = RatFn::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(by).add(&RatFn::from(c.clone()));
    }
    acc
}

// The operator traits are referenced by path so that `use super::*` does not
// bring them into scope, where owned impls would shadow the inherent
// `add(&self, &Self)` family during method resolution.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $call:expr) => {
        impl<C: Coefficient> std::ops::$tr<&RatFn<C>> for &RatFn<C> {
            type Output = RatFn<C>;
            fn $method(self, rhs: &RatFn<C>) -> RatFn<C> {
                $call(self, rhs)
            }
        }
        impl<C: Coefficient> std::ops::$tr<RatFn<C>> for RatFn<C> {
            type Output = RatFn<C>;
            fn $method(self, rhs: RatFn<C>) -> RatFn<C> {
                $call(&self, &rhs)
            }
        }
        impl<C: Coefficient> std::ops::$tr<&RatFn<C>> for RatFn<C> {
            type Output = RatFn<C>;
            fn $method(self, rhs: &RatFn<C>) -> RatFn<C> {
                $call(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFn<C>, b: &RatFn<C>| a.add(b));
forward_binop!(Sub, sub, |a: &RatFn<C>, b: &RatFn<C>| a.sub(b));
forward_binop!(Mul, mul, |a: &RatFn<C>, b: &RatFn<C>| a.mul(b));
forward_binop!(Div, div, |a: &RatFn<C>, b: &RatFn<C>| a
    .checked_div(b)
    .expect("division by zero rational function"));

impl<C: Coefficient> std::ops::Neg for RatFn<C> {
    type Output = RatFn<C>;
    fn neg(self) -> RatFn<C> {
        RatFn::neg(&self)
    }
}

impl<C: Coefficient> std::ops::Neg for &RatFn<C> {
    type Output = RatFn<C>;
    fn neg(self) -> RatFn<C> {
        RatFn::neg(self)
    }
}

impl<C: Coefficient> num_traits::Zero for RatFn<C> {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl<C: Coefficient> num_traits::One for RatFn<C> {
    fn one() -> Self {
        RatFn::one()
    }
}
