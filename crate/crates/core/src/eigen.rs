//! Eigenvalues of the Ricci endomorphism in the coefficient field.
//!
//! The characteristic polynomial comes from the Faddeev–LeVerrier recursion,
//! is split by Yun's square-free decomposition, and linear and quadratic
//! square-free factors are solved exactly. Anything else leaves the spectrum
//! flagged incomplete.

use crate::scalar::Scalar;
use crate::tensor::ComponentTensor;

/// Dense univariate polynomial, coefficient `k` multiplying `λ^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &T {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&T::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = T::zero();
        Self::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).unwrap_or(&zero);
                    let b = other.coeffs.get(k).unwrap_or(&zero);
                    a.sub_ref(b)
                })
                .collect(),
        )
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Self::new(Vec::new()), self.clone());
        }
        let dl = d.lead();
        let mut quot = vec![T::zero(); rem.len() - d.coeffs.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d.degree()];
            if top.is_zero() {
                continue;
            }
            let q = top.div_ref(dl).expect("nonzero leading coefficient");
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] = rem[k + j].sub_ref(&q.mul_ref(dc));
                }
            }
            quot[k] = q;
        }
        rem.truncate(d.degree());
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        let l = self.lead().clone();
        Self::new(self.coeffs.iter().map(|c| c.div_ref(&l).expect("nonzero")).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one_value()
    }

    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }
}

/// Square-free factors with their multiplicities, by Yun's algorithm.
pub fn square_free<T: Scalar>(p: &UPoly<T>) -> Vec<(UPoly<T>, usize)> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let dp = p.derivative();
    let c = p.gcd(&dp);
    let mut w = p.div_rem(&c).0;
    let mut y = dp.div_rem(&c).0;
    let mut z = y.sub(&w.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while w.degree() > 0 {
        let g = w.gcd(&z);
        if g.degree() > 0 {
            out.push((g.clone(), i));
        }
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        z = y.sub(&w.derivative());
        i += 1;
    }
    out
}

/// `det(λI − A)` for a square matrix, by Faddeev–LeVerrier.
pub fn characteristic_polynomial<T: Scalar>(a: &[Vec<T>]) -> UPoly<T> {
    let n = a.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add_ref(&coeffs[n - k + 1]);
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace = (0..n).fold(T::zero(), |acc, i| acc.add_ref(&am[i][i]));
        coeffs[n - k] = trace
            .neg_ref()
            .div_ref(&T::from_i64(k as i64))
            .expect("nonzero integer");
    }
    UPoly::new(coeffs)
}

fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| crate::scalar::dot_sum((0..n).map(|k| (&a[i][k], &b[k][j]))))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalue<T> {
    pub value: T,
    /// Algebraic multiplicity.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub characteristic: UPoly<T>,
    pub eigenvalues: Vec<Eigenvalue<T>>,
    /// Set when some square-free factor has no roots in the field that
    /// could be found exactly.
    pub incomplete: bool,
}

/// Roots of the characteristic polynomial of `A`; `sqrt` extracts exact
/// square roots for quadratic factors.
pub fn spectrum<T: Scalar>(a: &[Vec<T>], sqrt: impl Fn(&T) -> Option<T>) -> Spectrum<T> {
    let characteristic = characteristic_polynomial(a);
    let mut eigenvalues = Vec::new();
    let mut incomplete = false;
    for (factor, multiplicity) in square_free(&characteristic) {
        let f = factor.monic();
        let c = f.coeffs();
        match f.degree() {
            1 => eigenvalues.push(Eigenvalue {
                value: c[0].neg_ref(),
                multiplicity,
            }),
            2 => {
                // λ² + pλ + q: λ = (−p ± √(p² − 4q)) / 2
                let (q, p) = (&c[0], &c[1]);
                let disc = p.mul_ref(p).sub_ref(&q.mul_ref(&T::from_i64(4)));
                match sqrt(&disc) {
                    Some(s) => {
                        let half = T::from_ratio(1, 2);
                        for root in [p.neg_ref().add_ref(&s), p.neg_ref().sub_ref(&s)] {
                            eigenvalues.push(Eigenvalue {
                                value: root.mul_ref(&half),
                                multiplicity,
                            });
                        }
                    }
                    None => incomplete = true,
                }
            }
            _ => incomplete = true,
        }
    }
    Spectrum {
        characteristic,
        eigenvalues,
        incomplete,
    }
}

/// Matrix of the endomorphism `Ê^a_b = g^{ac} E_{cb}`.
pub fn endomorphism<T: Scalar>(ginv: &ComponentTensor<T>, e: &ComponentTensor<T>) -> Vec<Vec<T>> {
    crate::algebra::as_matrix(&crate::algebra::raise_first(ginv, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> UPoly<f64> {
        UPoly::new(c.to_vec())
    }

    #[test]
    fn charpoly_of_diagonal() {
        let a = vec![vec![2.0, 0.0], vec![0.0, 3.0]];
        assert_eq!(characteristic_polynomial(&a), p(&[6.0, -5.0, 1.0]));
    }

    #[test]
    fn yun_splits_repeated_roots() {
        // (λ−1)²(λ−2)
        let f = p(&[-2.0, 5.0, -4.0, 1.0]);
        let parts = square_free(&f);
        assert_eq!(parts, vec![(p(&[-2.0, 1.0]), 1), (p(&[-1.0, 1.0]), 2)]);
    }

    #[test]
    fn quadratic_roots_need_square_discriminant() {
        let a = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let s = spectrum(&a, |x: &f64| Some(x.sqrt()));
        let mut roots: Vec<f64> = s.eigenvalues.iter().map(|e| e.value).collect();
        roots.sort_by(f64::total_cmp);
        assert_eq!(roots, vec![-1.0, 1.0]);
        let none = spectrum(&a, |_: &f64| None);
        assert!(none.incomplete);
    }
}
