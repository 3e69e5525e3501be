//! Products, contractions and covariant differentiation of component tensors.

use crate::scalar::{dot_sum, Scalar};
use crate::tensor::{ComponentTensor, Index, Symmetry, TensorError};

/// `(A∧E)_{abcd} = A_ad E_bc + A_bc E_ad − A_ac E_bd − A_bd E_ac`.
pub fn kulkarni_nomizu<T: Scalar>(
    a: &ComponentTensor<T>,
    e: &ComponentTensor<T>,
) -> Result<ComponentTensor<T>, TensorError> {
    a.check_symmetry(Symmetry::SymmetricPair)?;
    e.check_symmetry(Symmetry::SymmetricPair)?;
    if a.dim() != e.dim() {
        return Err(TensorError::DimensionMismatch(a.dim(), e.dim()));
    }
    let t = ComponentTensor::from_fn(a.dim(), 4, |i| {
        let (w, x, y, z) = (i[0], i[1], i[2], i[3]);
        let plus = a
            .get(&[w, z])
            .mul_ref(e.get(&[x, y]))
            .add_ref(&a.get(&[x, y]).mul_ref(e.get(&[w, z])));
        let minus = a
            .get(&[w, y])
            .mul_ref(e.get(&[x, z]))
            .add_ref(&a.get(&[x, z]).mul_ref(e.get(&[w, y])));
        plus.sub_ref(&minus)
    });
    t.with_symmetry(Symmetry::GeneralizedCurvature)
}

/// Outer product `(A⊗B)_{i…j…} = A_{i…} B_{j…}`.
pub fn tensor_product<T: Scalar>(a: &ComponentTensor<T>, b: &ComponentTensor<T>) -> ComponentTensor<T> {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    let (ra, rb) = (a.rank(), b.rank());
    ComponentTensor::from_fn(a.dim(), ra + rb, |i| a.get(&i[..ra]).mul_ref(b.get(&i[ra..])))
}

/// Contraction of slots `s1 < s2` with the inverse metric.
pub fn contract<T: Scalar>(
    t: &ComponentTensor<T>,
    s1: usize,
    s2: usize,
    ginv: &ComponentTensor<T>,
) -> Result<ComponentTensor<T>, TensorError> {
    let rank = t.rank();
    for s in [s1, s2] {
        if s >= rank {
            return Err(TensorError::SlotOutOfRange { slot: s, rank });
        }
    }
    if s1 == s2 {
        return Err(TensorError::SlotOutOfRange { slot: s2, rank });
    }
    let (lo, hi) = if s1 < s2 { (s1, s2) } else { (s2, s1) };
    let n = t.dim();
    Ok(ComponentTensor::from_fn(n, rank - 2, |rest| {
        let mut full: Index = Index::from_elem(0, rank);
        let mut k = 0;
        for (slot, v) in full.iter_mut().enumerate() {
            if slot != lo && slot != hi {
                *v = rest[k];
                k += 1;
            }
        }
        let mut acc = T::zero();
        for p in 0..n {
            for q in 0..n {
                let g = ginv.get(&[p, q]);
                if g.is_zero() {
                    continue;
                }
                full[lo] = p;
                full[hi] = q;
                let c = t.get(&full);
                if !c.is_zero() {
                    acc = acc.add_ref(&g.mul_ref(c));
                }
            }
        }
        acc
    }))
}

/// `(A∘B)_{ij} = A_{ik} g^{kl} B_{lj}`.
pub fn compose<T: Scalar>(
    a: &ComponentTensor<T>,
    ginv: &ComponentTensor<T>,
    b: &ComponentTensor<T>,
) -> ComponentTensor<T> {
    let n = a.dim();
    let ab = raise_first(ginv, b);
    ComponentTensor::from_fn(n, 2, |i| dot_sum((0..n).map(|k| (a.get(&[i[0], k]), ab.get(&[k, i[1]])))))
}

/// Endomorphism `Ê^a_b = g^{ac} E_{cb}`, stored as a rank-2 array indexed `[a, b]`.
pub fn raise_first<T: Scalar>(ginv: &ComponentTensor<T>, e: &ComponentTensor<T>) -> ComponentTensor<T> {
    let n = e.dim();
    ComponentTensor::from_fn(n, 2, |i| dot_sum((0..n).map(|c| (ginv.get(&[i[0], c]), e.get(&[c, i[1]])))))
}

/// Christoffel symbols `Γ^k_{ij}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection<T> {
    dim: usize,
    gamma: Vec<T>,
}

impl<T: Scalar> Connection<T> {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> T + Sync) -> Self {
        let t = ComponentTensor::from_fn(dim, 3, |i| f(i[0], i[1], i[2]));
        Connection {
            dim,
            gamma: t.components().to_vec(),
        }
    }

    pub fn try_from_fn<E: Send>(
        dim: usize,
        f: impl Fn(usize, usize, usize) -> Result<T, E> + Sync,
    ) -> Result<Self, E> {
        let t = ComponentTensor::try_from_fn(dim, 3, |i| f(i[0], i[1], i[2]))?;
        Ok(Connection {
            dim,
            gamma: t.components().to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ^k_{ij}`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &T {
        &self.gamma[(k * self.dim + i) * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|g| g.is_zero())
    }
}

/// `T_{i₁…i_k,l} = ∂_l T_{i₁…i_k} − Σ_s Γ^p_{l i_s} T_{…p…}`, derivative slot last.
///
/// `partial(component, l)` differentiates a single component along coordinate `l`.
pub fn covariant_derivative<T: Scalar, E: Send>(
    t: &ComponentTensor<T>,
    conn: &Connection<T>,
    partial: impl Fn(&T, usize) -> Result<T, E> + Sync,
) -> Result<ComponentTensor<T>, E> {
    let n = t.dim();
    let k = t.rank();
    ComponentTensor::try_from_fn(n, k + 1, |idx| {
        let l = idx[k];
        let base = &idx[..k];
        let mut acc = partial(t.get(base), l)?;
        let mut shifted: Index = base.iter().copied().collect();
        for s in 0..k {
            let orig = base[s];
            for p in 0..n {
                let g = conn.get(p, l, orig);
                if g.is_zero() {
                    continue;
                }
                shifted[s] = p;
                let c = t.get(&shifted);
                if !c.is_zero() {
                    acc = acc.sub_ref(&g.mul_ref(c));
                }
            }
            shifted[s] = orig;
        }
        Ok(acc)
    })
}

/// Divergence: contraction of slot 1 with the derivative slot of `∇D`.
pub fn divergence<T: Scalar>(
    nabla: &ComponentTensor<T>,
    ginv: &ComponentTensor<T>,
) -> Result<ComponentTensor<T>, TensorError> {
    contract(nabla, 0, nabla.rank() - 1, ginv)
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    match n {
        0 => T::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul_ref(&m[1][1]).sub_ref(&m[0][1].mul_ref(&m[1][0])),
        _ => {
            let mut acc = T::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul_ref(&determinant(&minor));
                acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            acc
        }
    }
}

/// Matrix view `[i][j]` of a rank-2 tensor.
pub fn as_matrix<T: Scalar>(t: &ComponentTensor<T>) -> Vec<Vec<T>> {
    assert_eq!(t.rank(), 2);
    let n = t.dim();
    (0..n)
        .map(|i| (0..n).map(|j| t.get(&[i, j]).clone()).collect())
        .collect()
}

pub fn from_matrix<T: Scalar>(m: &[Vec<T>]) -> ComponentTensor<T> {
    let n = m.len();
    ComponentTensor::from_fn(n, 2, |i| m[i[0]][i[1]].clone())
}

/// Inverse by Gauss–Jordan elimination; `None` for a singular matrix.
pub fn inverse<T: Scalar>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = v.div_ref(&p).expect("nonzero pivot");
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..2 * n {
                if !a[col][c].is_zero() {
                    let delta = factor.mul_ref(&a[col][c]);
                    a[r][c] = a[r][c].sub_ref(&delta);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
