//! The scalar field tensor components live in.

use std::fmt::Debug;

use num_traits::{One, Zero};
use pseudosym_symbolic::{Coefficient, RatFn};

/// A field with exact zero test.
///
/// The reference-taking methods avoid cloning large symbolic values in the
/// inner loops of contractions.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + Zero + One {
    fn from_i64(n: i64) -> Self;
    fn from_ratio(numer: i64, denom: i64) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `None` when `other` is zero.
    fn div_ref(&self, other: &Self) -> Option<Self>;

    fn is_one_value(&self) -> bool {
        *self == Self::one()
    }
}

impl<C: Coefficient> Scalar for RatFn<C> {
    fn from_i64(n: i64) -> Self {
        RatFn::from_int(n)
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        RatFn::from_frac(numer, denom)
    }
    fn add_ref(&self, other: &Self) -> Self {
        RatFn::add(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        RatFn::sub(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        RatFn::mul(self, other)
    }
    fn neg_ref(&self) -> Self {
        RatFn::neg(self)
    }
    fn div_ref(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_ref(&self, other: &Self) -> Option<Self> {
        if *other == 0.0 {
            None
        } else {
            Some(self / other)
        }
    }
}

/// Sum of products `Σ a_i b_i`, skipping zero factors.
pub fn dot_sum<'a, T: Scalar + 'a>(pairs: impl IntoIterator<Item = (&'a T, &'a T)>) -> T {
    let mut acc = T::zero();
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc = acc.add_ref(&a.mul_ref(b));
    }
    acc
}
