//! Coefficient fields for polynomials and rational functions.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact field of fractions over an integer ring.
///
/// Polynomials only need field arithmetic, but canonical forms use the
/// integer structure: every coefficient splits into numerator and
/// denominator so that a polynomial can be scaled to primitive integer form.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Eq + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;
    fn from_frac(numer: i64, denom: i64) -> Self;
    fn is_integer(&self) -> bool;
    /// Numerator as an element of the field.
    fn numer_part(&self) -> Self;
    /// Denominator (always positive) as an element of the field.
    fn denom_part(&self) -> Self;
    /// Nonnegative gcd of two integral elements.
    fn int_gcd(a: &Self, b: &Self) -> Self;
    /// Nonnegative lcm of two integral elements.
    fn int_lcm(a: &Self, b: &Self) -> Self;
    fn to_f64(&self) -> Option<f64>;
    /// Exact square root, when this is the square of a field element.
    fn sqrt_exact(&self) -> Option<Self>;
}

impl<T> Coefficient for Ratio<T>
where
    T: Clone
        + Debug
        + Display
        + Hash
        + Integer
        + Roots
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer literal out of range"))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(
            T::from_i64(numer).expect("integer literal out of range"),
            T::from_i64(denom).expect("integer literal out of range"),
        )
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn numer_part(&self) -> Self {
        Ratio::from_integer(self.numer().clone())
    }

    fn denom_part(&self) -> Self {
        Ratio::from_integer(self.denom().clone())
    }

    fn int_gcd(a: &Self, b: &Self) -> Self {
        debug_assert!(Ratio::is_integer(a) && Ratio::is_integer(b));
        Ratio::from_integer(a.numer().gcd(b.numer()))
    }

    fn int_lcm(a: &Self, b: &Self) -> Self {
        debug_assert!(Ratio::is_integer(a) && Ratio::is_integer(b));
        Ratio::from_integer(a.numer().lcm(b.numer()))
    }

    fn to_f64(&self) -> Option<f64> {
        let n = self.numer().to_f64()?;
        let d = self.denom().to_f64()?;
        Some(n / d)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if n.clone() * n.clone() == *self.numer() && d.clone() * d.clone() == *self.denom() {
            Some(Ratio::new(n, d))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn parts_and_gcd() {
        let x = BigRational::from_frac(-6, 4);
        assert_eq!(x.numer_part(), BigRational::from_int(-3));
        assert_eq!(x.denom_part(), BigRational::from_int(2));
        let g = BigRational::int_gcd(&BigRational::from_int(12), &BigRational::from_int(-18));
        assert_eq!(g, BigRational::from_int(6));
        let l = Rational64::int_lcm(&Rational64::from_int(4), &Rational64::from_int(6));
        assert_eq!(l, Rational64::from_int(12));
    }

    #[test]
    fn exact_roots() {
        let x = BigRational::from_frac(9, 4);
        assert_eq!(x.sqrt_exact(), Some(BigRational::from_frac(3, 2)));
        assert_eq!(BigRational::from_int(2).sqrt_exact(), None);
        assert_eq!(BigRational::from_int(-4).sqrt_exact(), None);
    }
}
