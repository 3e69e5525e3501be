//! Metric specifications: chart, lower components and assumptions.

use std::sync::Arc;

use pseudosym_symbolic::{Coefficient, Context, Point, RatFn, SymbolKind, SymbolicError, Var};
use rand::Rng;
use thiserror::Error;

use crate::algebra::{as_matrix, determinant, from_matrix, inverse};
use crate::tensor::{ComponentTensor, Symmetry, TensorError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("`{0}` is not a coordinate")]
    NotACoordinate(String),
    #[error("coordinate `{0}` appears twice in the chart")]
    RepeatedCoordinate(String),
    #[error("metric must be a rank-2 tensor on {expected} coordinates")]
    Shape { expected: usize },
    #[error("metric is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("metric determinant vanishes identically")]
    Degenerate,
    #[error("dimension {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("no admissible sample point found")]
    NoSamplePoint,
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Signature as counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_lorentzian(&self) -> bool {
        self.zero == 0 && (self.positive == 1 || self.negative == 1) && self.positive + self.negative > 1
    }
}

#[derive(Debug, Clone)]
pub struct MetricSpec<C: Coefficient> {
    name: String,
    context: Arc<Context>,
    chart: Vec<Var>,
    lower: ComponentTensor<RatFn<C>>,
    assumptions: Vec<RatFn<C>>,
}

impl<C: Coefficient> MetricSpec<C> {
    /// `assumptions` lists expressions assumed nowhere zero (e.g. `r`, `f`).
    pub fn new(
        name: impl Into<String>,
        context: Arc<Context>,
        chart: Vec<Var>,
        lower: ComponentTensor<RatFn<C>>,
        assumptions: Vec<RatFn<C>>,
    ) -> Result<Self, MetricError> {
        for (i, v) in chart.iter().enumerate() {
            if context.symbol(*v).kind != SymbolKind::Coordinate {
                return Err(MetricError::NotACoordinate(context.name(*v).to_string()));
            }
            if chart[..i].contains(v) {
                return Err(MetricError::RepeatedCoordinate(context.name(*v).to_string()));
            }
        }
        let n = chart.len();
        if lower.rank() != 2 || lower.dim() != n {
            return Err(MetricError::Shape { expected: n });
        }
        if n < 3 {
            return Err(MetricError::DimensionTooSmall(n));
        }
        if let Err(TensorError::Asymmetric { index, .. }) = lower.check_symmetry(Symmetry::SymmetricPair) {
            return Err(MetricError::NotSymmetric(index[0], index[1]));
        }
        let lower = lower.with_symmetry(Symmetry::SymmetricPair)?;
        if determinant(&as_matrix(&lower)).is_zero() {
            return Err(MetricError::Degenerate);
        }
        Ok(MetricSpec {
            name: name.into(),
            context,
            chart,
            lower,
            assumptions,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.context
    }

    pub fn chart(&self) -> &[Var] {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.len()
    }

    pub fn lower(&self) -> &ComponentTensor<RatFn<C>> {
        &self.lower
    }

    pub fn assumptions(&self) -> &[RatFn<C>] {
        &self.assumptions
    }

    pub fn determinant(&self) -> RatFn<C> {
        determinant(&as_matrix(&self.lower))
    }

    /// Inverse metric `g^{ij}`, checked against `g_{ik} g^{kj} = δ_i^j`.
    pub fn inverse(&self) -> Result<ComponentTensor<RatFn<C>>, MetricError> {
        let m = as_matrix(&self.lower);
        let inv = inverse(&m).ok_or(MetricError::Degenerate)?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatFn::zero();
                for (k, row) in inv.iter().enumerate() {
                    acc = acc.add(&m[i][k].mul(&row[j]));
                }
                let expected = if i == j { RatFn::one() } else { RatFn::zero() };
                if acc != expected {
                    return Err(MetricError::Degenerate);
                }
            }
        }
        Ok(from_matrix(&inv).with_symmetry(Symmetry::SymmetricPair)?)
    }

    /// `∂_l e` along the `l`-th chart coordinate.
    pub fn partial(&self, e: &RatFn<C>, l: usize) -> Result<RatFn<C>, SymbolicError> {
        self.context.differentiate(e, self.chart[l])
    }

    /// A random point where the metric, its determinant and every
    /// assumption are finite and nonzero.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Point<C>, MetricError> {
        let det = self.determinant();
        for _ in 0..64 {
            let p = pseudosym_symbolic::random_point::<C, _>(&self.context, rng);
            let finite = self.lower.components().iter().all(|c| p.evaluate(c).is_ok());
            let nonzero = std::iter::once(&det)
                .chain(self.assumptions.iter())
                .all(|e| matches!(p.evaluate(e), Ok(v) if !v.is_zero()));
            if finite && nonzero {
                return Ok(p);
            }
        }
        Err(MetricError::NoSamplePoint)
    }

    pub fn signature_at(&self, p: &Point<C>) -> Result<Signature, MetricError> {
        let m: Vec<Vec<C>> = as_matrix(&self.lower)
            .iter()
            .map(|row| row.iter().map(|e| p.evaluate(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        Ok(signature(m))
    }
}

/// Sylvester inertia of a symmetric matrix by exact congruence diagonalization.
pub fn signature<C: Coefficient>(mut a: Vec<Vec<C>>) -> Signature {
    let n = a.len();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k ← e_k + e_j makes the diagonal 2 a_kj + a_jj = 2 a_kj
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] = a[k][c].clone() + v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] = a[r][k].clone() + v;
                }
            } else {
                sig.zero += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone() / p.clone();
            for c in 0..n {
                let v = f.clone() * a[k][c].clone();
                a[i][c] = a[i][c].clone() - v;
            }
            for r in 0..n {
                let v = f.clone() * a[r][k].clone();
                a[r][i] = a[r][i].clone() - v;
            }
        }
    }
    sig
}
