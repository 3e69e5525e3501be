//! Linear algebra over the coefficient field: span membership, ranks, minors.

use rayon::prelude::*;

use crate::algebra::determinant;
use crate::scalar::Scalar;
use crate::tensor::{ComponentTensor, Index, TensorError};

#[derive(Debug, Clone, PartialEq)]
pub struct SpanSolution<T> {
    pub coefficients: Vec<T>,
    /// Rank of the basis restricted to the equations seen.
    pub rank: usize,
    /// False when the basis is dependent; free coefficients were set to zero.
    pub unique: bool,
    /// Components whose equations fixed the pivots, in pivot order.
    pub pivot_rows: Vec<Index>,
    /// Basis of the homogeneous solutions, one vector per free coefficient.
    pub kernel: Vec<Vec<T>>,
    /// Nonzero minor of the basis on the pivot rows and pivot columns
    /// (columns in ascending order).
    pub minor: T,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpanOutcome<T> {
    Solved(SpanSolution<T>),
    /// No combination of the basis reproduces the target at this index;
    /// `residual` is the nonzero value the equation reduces to.
    Inconsistent { witness: Index, residual: T },
}

struct Echelon<T> {
    /// `(column, reduced row, rhs, source flat index)`
    pivots: Vec<(usize, Vec<T>, T, usize)>,
    /// Product of the pivots before normalization.
    product: T,
}

impl<T: Scalar> Echelon<T> {
    /// Reduces `(row, rhs)` against the current pivots and inserts it if
    /// independent. Returns the reduced right-hand side of an inconsistent row.
    fn push(&mut self, mut row: Vec<T>, mut rhs: T, source: usize) -> Result<(), T> {
        for (col, prow, prhs, _) in &self.pivots {
            let f = row[*col].clone();
            if f.is_zero() {
                continue;
            }
            for (r, p) in row.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *r = r.sub_ref(&f.mul_ref(p));
                }
            }
            rhs = rhs.sub_ref(&f.mul_ref(prhs));
        }
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            return if rhs.is_zero() { Ok(()) } else { Err(rhs) };
        };
        let p = row[col].clone();
        self.product = self.product.mul_ref(&p);
        for r in row.iter_mut() {
            if !r.is_zero() {
                *r = r.div_ref(&p).expect("pivot is nonzero");
            }
        }
        rhs = rhs.div_ref(&p).expect("pivot is nonzero");
        // keep reduced row echelon form
        for (_, prow, prhs, _) in self.pivots.iter_mut() {
            let f = prow[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in prow.iter_mut().zip(&row) {
                if !r.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(r));
                }
            }
            *prhs = prhs.sub_ref(&f.mul_ref(&rhs));
        }
        self.pivots.push((col, row, rhs, source));
        Ok(())
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The reduced rows are triangular once the pivot columns are sorted,
    /// so the minor is the pivot product times the sorting sign.
    fn minor(&self) -> T {
        let cols: Vec<usize> = self.pivots.iter().map(|p| p.0).collect();
        let inversions = (0..cols.len())
            .flat_map(|i| (i + 1..cols.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| cols[i] > cols[j])
            .count();
        if inversions % 2 == 0 {
            self.product.clone()
        } else {
            T::zero().sub_ref(&self.product)
        }
    }

    fn solution(&self, unknowns: usize) -> Vec<T> {
        let mut x = vec![T::zero(); unknowns];
        for (col, _, rhs, _) in &self.pivots {
            x[*col] = rhs.clone();
        }
        x
    }

    fn kernel(&self, unknowns: usize) -> Vec<Vec<T>> {
        (0..unknowns)
            .filter(|j| !self.pivots.iter().any(|(c, ..)| c == j))
            .map(|j| {
                let mut v = vec![T::zero(); unknowns];
                v[j] = T::one();
                for (col, row, ..) in &self.pivots {
                    if !row[j].is_zero() {
                        v[*col] = T::zero().sub_ref(&row[j]);
                    }
                }
                v
            })
            .collect()
    }
}

/// Solves `target = Σ λ_i basis_i` componentwise, then re-checks the residual
/// on every component.
pub fn express_in_span<T: Scalar>(
    target: &ComponentTensor<T>,
    basis: &[&ComponentTensor<T>],
) -> Result<SpanOutcome<T>, TensorError> {
    assert!(!basis.is_empty(), "empty basis");
    for b in basis {
        if b.dim() != target.dim() {
            return Err(TensorError::DimensionMismatch(target.dim(), b.dim()));
        }
        if b.rank() != target.rank() {
            return Err(TensorError::WrongRank {
                expected: target.rank(),
                rank: b.rank(),
            });
        }
    }
    let m = basis.len();
    let mut ech = Echelon {
        pivots: Vec::new(),
        product: T::one(),
    };
    for f in 0..target.components().len() {
        if ech.rank() == m {
            break;
        }
        let row: Vec<T> = basis.iter().map(|b| b.get_flat(f).clone()).collect();
        let rhs = target.get_flat(f).clone();
        if rhs.is_zero() && row.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Err(residual) = ech.push(row, rhs, f) {
            return Ok(SpanOutcome::Inconsistent {
                witness: target.index_of(f),
                residual,
            });
        }
    }
    let coefficients = ech.solution(m);
    if let Some((f, residual)) = residual_witness(target, basis, &coefficients) {
        return Ok(SpanOutcome::Inconsistent {
            witness: target.index_of(f),
            residual,
        });
    }
    Ok(SpanOutcome::Solved(SpanSolution {
        rank: ech.rank(),
        unique: ech.rank() == m,
        pivot_rows: ech.pivots.iter().map(|p| target.index_of(p.3)).collect(),
        kernel: ech.kernel(m),
        minor: ech.minor(),
        coefficients,
    }))
}

/// First flat index where `target − Σ λ_i basis_i` does not vanish, with the value there.
pub fn residual_witness<T: Scalar>(
    target: &ComponentTensor<T>,
    basis: &[&ComponentTensor<T>],
    coefficients: &[T],
) -> Option<(usize, T)> {
    (0..target.components().len())
        .into_par_iter()
        .map(|f| {
            let mut acc = target.get_flat(f).clone();
            for (b, c) in basis.iter().zip(coefficients) {
                let v = b.get_flat(f);
                if !v.is_zero() && !c.is_zero() {
                    acc = acc.sub_ref(&c.mul_ref(v));
                }
            }
            (f, acc)
        })
        .find_first(|(_, acc)| !acc.is_zero())
}

/// Rank of a list of vectors by elimination.
pub fn rank_of_rows<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let width = first.len();
    let mut ech = Echelon {
        pivots: Vec::new(),
        product: T::one(),
    };
    for row in rows {
        let _ = ech.push(row.clone(), T::zero(), 0);
        if ech.rank() == width {
            break;
        }
    }
    ech.rank()
}

/// All `k × k` minors of `m`, as (rows, cols, value).
pub fn minors<T: Scalar>(m: &[Vec<T>], k: usize) -> Vec<(Vec<usize>, Vec<usize>, T)> {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, |r| r.len());
    let row_sets = subsets(n_rows, k);
    let col_sets = subsets(n_cols, k);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<T>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            out.push((rs.clone(), cs.clone(), determinant(&sub)));
        }
    }
    out
}

/// Rank decided by exact vanishing of minors: the largest `k` with a nonzero
/// `k × k` minor.
pub fn rank_by_minors<T: Scalar>(m: &[Vec<T>]) -> usize {
    let n = m.len().min(m.first().map_or(0, |r| r.len()));
    for k in (1..=n).rev() {
        let rows = subsets(m.len(), k);
        let cols = subsets(m[0].len(), k);
        let found = rows.par_iter().any(|rs| {
            cols.iter().any(|cs| {
                let sub: Vec<Vec<T>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                !determinant(&sub).is_zero()
            })
        });
        if found {
            return k;
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
