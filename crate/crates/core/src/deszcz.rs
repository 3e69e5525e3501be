//! The operators `D·H` and `Q(A,H)`.
//!
//! Both produce a `(0,k+2)` tensor whose last two slots carry the pair
//! `(X, Y)` of the acting endomorphism:
//!
//! * `(D·H)_{i₁…i_k j l} = −g^{pq} Σ_s D_{j l i_s q} H_{i₁…p…i_k}`;
//! * `Q(A,H)_{i₁…i_k j l} = Σ_s (A_{j i_s} H_{i₁…l…i_k} − A_{l i_s} H_{i₁…j…i_k})`,
//!   i.e. the action of `X ∧_A Y` on `H` read off from `(X ∧_A Y)X₁ = A(Y,X₁)X − A(X,X₁)Y`.

use crate::scalar::Scalar;
use crate::tensor::{ComponentTensor, Index, TensorError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Dot,
    Tachibana,
}

/// An operator output together with what produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorResult<T> {
    pub tensor: ComponentTensor<T>,
    pub kind: OperatorKind,
    pub operands: (String, String),
}

impl<T: Scalar> OperatorResult<T> {
    pub fn label(&self) -> String {
        match self.kind {
            OperatorKind::Dot => format!("{}·{}", self.operands.0, self.operands.1),
            OperatorKind::Tachibana => format!("Q({},{})", self.operands.0, self.operands.1),
        }
    }
}

/// `D·H` for a rank-4 `D` antisymmetric in its first two slots.
pub fn dot<T: Scalar>(
    d: &ComponentTensor<T>,
    h: &ComponentTensor<T>,
    ginv: &ComponentTensor<T>,
) -> Result<ComponentTensor<T>, TensorError> {
    if d.rank() != 4 {
        return Err(TensorError::WrongRank {
            expected: 4,
            rank: d.rank(),
        });
    }
    if h.rank() == 0 {
        return Err(TensorError::WrongRank {
            expected: 1,
            rank: 0,
        });
    }
    if d.dim() != h.dim() {
        return Err(TensorError::DimensionMismatch(d.dim(), h.dim()));
    }
    let n = d.dim();
    // raised[(p, j, l, i)] = Σ_q g^{pq} D_{j l i q}
    let raised = ComponentTensor::from_fn(n, 4, |x| {
        let (p, j, l, i) = (x[0], x[1], x[2], x[3]);
        let mut acc = T::zero();
        for q in 0..n {
            let g = ginv.get(&[p, q]);
            if g.is_zero() {
                continue;
            }
            let v = d.get(&[j, l, i, q]);
            if !v.is_zero() {
                acc = acc.add_ref(&g.mul_ref(v));
            }
        }
        acc
    });
    let k = h.rank();
    Ok(ComponentTensor::from_fn(n, k + 2, |idx| {
        let (j, l) = (idx[k], idx[k + 1]);
        if j == l {
            return T::zero();
        }
        let mut acc = T::zero();
        let mut shifted: Index = idx[..k].iter().copied().collect();
        for s in 0..k {
            let orig = idx[s];
            for p in 0..n {
                let r = raised.get(&[p, j, l, orig]);
                if r.is_zero() {
                    continue;
                }
                shifted[s] = p;
                let v = h.get(&shifted);
                if !v.is_zero() {
                    acc = acc.sub_ref(&r.mul_ref(v));
                }
            }
            shifted[s] = orig;
        }
        acc
    }))
}

/// `Q(A,H)` for a symmetric rank-2 `A`.
pub fn tachibana<T: Scalar>(a: &ComponentTensor<T>, h: &ComponentTensor<T>) -> Result<ComponentTensor<T>, TensorError> {
    if a.rank() != 2 {
        return Err(TensorError::WrongRank {
            expected: 2,
            rank: a.rank(),
        });
    }
    if h.rank() == 0 {
        return Err(TensorError::WrongRank {
            expected: 1,
            rank: 0,
        });
    }
    if a.dim() != h.dim() {
        return Err(TensorError::DimensionMismatch(a.dim(), h.dim()));
    }
    let n = a.dim();
    let k = h.rank();
    Ok(ComponentTensor::from_fn(n, k + 2, |idx| {
        let (j, l) = (idx[k], idx[k + 1]);
        if j == l {
            return T::zero();
        }
        let mut acc = T::zero();
        let mut shifted: Index = idx[..k].iter().copied().collect();
        for s in 0..k {
            let orig = idx[s];
            let aj = a.get(&[j, orig]);
            if !aj.is_zero() {
                shifted[s] = l;
                let v = h.get(&shifted);
                if !v.is_zero() {
                    acc = acc.add_ref(&aj.mul_ref(v));
                }
            }
            let al = a.get(&[l, orig]);
            if !al.is_zero() {
                shifted[s] = j;
                let v = h.get(&shifted);
                if !v.is_zero() {
                    acc = acc.sub_ref(&al.mul_ref(v));
                }
            }
            shifted[s] = orig;
        }
        acc
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::kulkarni_nomizu;

    fn diag(v: &[f64]) -> ComponentTensor<f64> {
        ComponentTensor::from_fn(v.len(), 2, |i| if i[0] == i[1] { v[i[0]] } else { 0.0 })
    }

    #[test]
    fn q_of_metric_with_itself_vanishes() {
        let g = diag(&[1.0, -1.0, -1.0, -1.0]);
        assert!(tachibana(&g, &g).unwrap().is_zero());
    }

    #[test]
    fn constant_curvature_dot_metric_vanishes() {
        let g = diag(&[1.0, 2.0, 3.0]);
        let ginv = diag(&[1.0, 0.5, 1.0 / 3.0]);
        let gg = kulkarni_nomizu(&g, &g).unwrap();
        assert!(dot(&gg, &g, &ginv).unwrap().is_zero());
    }

    #[test]
    fn last_pair_antisymmetry() {
        let g = diag(&[1.0, 2.0, 3.0]);
        let a = ComponentTensor::from_fn(3, 2, |i| (i[0] + i[1]) as f64 + 1.0);
        let q = tachibana(&a, &g).unwrap();
        for idx in crate::tensor::all_indices(3, 4) {
            let swapped = [idx[0], idx[1], idx[3], idx[2]];
            assert_eq!(*q.get(&idx), -*q.get(&swapped));
        }
    }
}
