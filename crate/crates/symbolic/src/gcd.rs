//! Multivariate polynomial gcd.
//!
//! Cheap cases (monomial content, exact divisibility, variables present in only
//! one operand) are peeled off first; what remains goes through the recursive
//! subresultant remainder sequence in the variable of smallest degree.

use crate::coeff::Coefficient;
use crate::poly::{Poly, Var};

/// Normalized gcd: primitive, integral, positive leading coefficient.
/// `gcd(0, 0)` is zero.
pub fn gcd<C: Coefficient>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let g = gcd_without_monomials(&a1, &b1);
    if m.is_one() {
        g
    } else {
        g.mul_term(&m, &C::one())
    }
}

pub fn lcm<C: Coefficient>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.div_exact(&g)
        .expect("gcd divides its argument")
        .mul(b)
        .primitive()
}

fn gcd_without_monomials<C: Coefficient>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    // a term-free-of-variables single term is a constant after stripping
    if a.len() <= 1 || b.len() <= 1 {
        return Poly::one();
    }
    let a = a.primitive();
    let b = b.primitive();
    if a == b {
        return a;
    }
    let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    if large.div_exact(small).is_some() {
        return small.clone();
    }

    let va = a.vars();
    let vb = b.vars();
    if let Some(v) = va.iter().find(|v| vb.binary_search(v).is_err()) {
        return gcd_with_coefficients(&b, &a, *v);
    }
    if let Some(v) = vb.iter().find(|v| va.binary_search(v).is_err()) {
        return gcd_with_coefficients(&a, &b, *v);
    }

    let x = *va
        .iter()
        .min_by_key(|v| (a.degree_in(**v).max(b.degree_in(**v)), v.0))
        .expect("non-constant polynomial has a variable");
    let ca = a.coefficients_in(x);
    let cb = b.coefficients_in(x);
    let cont_a = content_of(&ca);
    let cont_b = content_of(&cb);
    let pa: Vec<_> = ca.iter().map(|c| exact(c, &cont_a)).collect();
    let pb: Vec<_> = cb.iter().map(|c| exact(c, &cont_b)).collect();
    let c = gcd(&cont_a, &cont_b);
    let g = subresultant_primitive(pa, pb);
    Poly::from_coefficients_in(x, &g).mul(&c).primitive()
}

/// gcd of `other` with every coefficient of `with_var` viewed as a polynomial in `v`,
/// where `v` does not occur in `other`.
fn gcd_with_coefficients<C: Coefficient>(other: &Poly<C>, with_var: &Poly<C>, v: Var) -> Poly<C> {
    let mut coeffs: Vec<_> = with_var
        .coefficients_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = other.clone();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn content_of<C: Coefficient>(coeffs: &[Poly<C>]) -> Poly<C> {
    let mut nonzero: Vec<&Poly<C>> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut g = Poly::zero();
    for c in nonzero {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn exact<C: Coefficient>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    a.div_exact(b).expect("exact division failed in gcd")
}

fn degree<C: Coefficient>(p: &[Poly<C>]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim<C: Coefficient>(mut p: Vec<Poly<C>>) -> Vec<Poly<C>> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder<C: Coefficient>(a: &[Poly<C>], b: &[Poly<C>]) -> Vec<Poly<C>> {
    let db = degree(b).expect("pseudo-division by zero");
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return r;
    };
    if da < db {
        return r;
    }
    let mut e = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Poly<C>> = r.iter().map(|c| c.mul(lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        debug_assert!(next[dr].is_zero());
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c.mul(&f)).collect();
    }
    r
}

fn primitive_part<C: Coefficient>(p: Vec<Poly<C>>) -> Vec<Poly<C>> {
    let c = content_of(&p);
    p.iter().map(|x| exact(x, &c)).collect()
}

fn subresultant_primitive<C: Coefficient>(a: Vec<Poly<C>>, b: Vec<Poly<C>>) -> Vec<Poly<C>> {
    let (mut a, mut b) = (trim(a), trim(b));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let da = degree(&a).unwrap_or(0);
        let db = degree(&b).unwrap_or(0);
        let d = (da - db) as u32;
        let r = pseudo_remainder(&a, &b);
        match degree(&r) {
            None => return primitive_part(b),
            Some(0) => return vec![Poly::one()],
            Some(_) => {}
        }
        let divisor = g.mul(&h.pow(d));
        a = b;
        b = r.iter().map(|c| exact(c, &divisor)).collect();
        g = a[degree(&a).expect("nonzero")].clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => exact(&g.pow(d), &h.pow(d - 1)),
        };
    }
}
