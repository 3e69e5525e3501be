//! Energy-momentum tensor `T = (c⁴/8πG)[S − (κ/2 − Λ)g]` and its derivative conditions.

use std::sync::OnceLock;

use pseudosym_symbolic::{Context, Expr};
use rayon::prelude::*;

use crate::algebra::divergence;
use crate::classify::{codazzi_residual, cyclic_residual, ClassifyError, Finding, Status};
use crate::constraint::{ConstraintError, JetConstraint};
use crate::curvature::CurvatureError;
use crate::tensor::ComponentTensor;
use crate::{Bundle, Tensor};

#[derive(Debug, Clone, PartialEq)]
pub struct FieldConstants {
    pub lambda: Expr,
    /// `c⁴/(8πG)`, or 1 in natural units.
    pub prefactor: Expr,
}

impl FieldConstants {
    pub fn natural(lambda: Expr) -> Self {
        FieldConstants {
            lambda,
            prefactor: Expr::one(),
        }
    }

    /// Reads `Lambda`, `c`, `G` and `pi` from the context; missing physical
    /// constants fall back to natural units and a missing `Lambda` to zero.
    pub fn from_context(ctx: &Context) -> Self {
        let var = |name: &str| ctx.lookup(name).map(Expr::var);
        let lambda = var("Lambda").unwrap_or_else(Expr::zero);
        let prefactor = match (var("c"), var("G"), var("pi")) {
            (Some(c), Some(g), Some(pi)) => {
                let c4 = c.pow(4).expect("positive power");
                c4.checked_div(&Expr::from_int(8).mul(&pi).mul(&g))
                    .expect("symbols are nonzero")
            }
            _ => Expr::one(),
        };
        FieldConstants { lambda, prefactor }
    }
}

pub struct EnergyMomentum<'a> {
    bundle: &'a Bundle,
    constants: FieldConstants,
    t: Tensor,
    nabla: OnceLock<Result<Tensor, CurvatureError>>,
    div: OnceLock<Result<Tensor, CurvatureError>>,
}

impl<'a> EnergyMomentum<'a> {
    pub fn new(bundle: &'a Bundle, constants: FieldConstants) -> Self {
        let half_kappa = bundle.scalar().mul(&Expr::from_frac(1, 2));
        let shift = half_kappa.sub(&constants.lambda);
        let s = bundle.ricci();
        let g = bundle.g();
        let t = ComponentTensor::from_fn(bundle.dim(), 2, |i| {
            s.get(i).sub(&shift.mul(g.get(i))).mul(&constants.prefactor)
        });
        EnergyMomentum {
            bundle,
            constants,
            t,
            nabla: OnceLock::new(),
            div: OnceLock::new(),
        }
    }

    pub fn constants(&self) -> &FieldConstants {
        &self.constants
    }

    pub fn tensor(&self) -> &Tensor {
        &self.t
    }

    /// `∇T` with layout `[i, j, k] = T_{ij,k}`.
    pub fn nabla(&self) -> Result<&Tensor, CurvatureError> {
        self.nabla
            .get_or_init(|| self.bundle.covariant(&self.t))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn divergence(&self) -> Result<&Tensor, CurvatureError> {
        self.div
            .get_or_init(|| Ok(divergence(self.nabla()?, self.bundle.inverse())?))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Reduces every component of `t` under the constraint and returns the
/// first one that survives.
pub fn reduced_witness(
    t: &Tensor,
    reducer: &crate::constraint::Reducer<'_>,
) -> Result<Option<(crate::Index, Expr)>, ConstraintError> {
    let reduced: Vec<Result<Expr, ConstraintError>> = t
        .components()
        .par_iter()
        .map(|e| if e.is_zero() { Ok(Expr::zero()) } else { reducer.reduce(e) })
        .collect();
    for (f, r) in reduced.into_iter().enumerate() {
        let r = r?;
        if !r.is_zero() {
            return Ok(Some((t.index_of(f), r)));
        }
    }
    Ok(None)
}

/// Tests `∇T = 0`, the Codazzi condition and cyclic parallelity both for
/// generic parameters and on solutions of `condition`.
pub fn conditional_parallel(em: &EnergyMomentum<'_>, condition: &JetConstraint) -> Result<Finding, ClassifyError> {
    let ctx = em.bundle.metric().context();
    let reducer = condition.reducer(ctx);
    let nabla = em.nabla()?;
    let checks = [
        ("∇T = 0", nabla.clone()),
        ("T Codazzi", codazzi_residual(nabla)),
        ("T cyclic parallel", cyclic_residual(nabla)),
    ];
    let mut finding = Finding::new(Status::Holds);
    for (label, residual) in &checks {
        let generic = if residual.first_nonzero().is_none() { "holds" } else { "fails" };
        match reduced_witness(residual, &reducer)? {
            None => finding
                .notes
                .push(format!("{label}: {generic} generically, holds under {}", condition.description())),
            Some((idx, value)) => {
                finding
                    .notes
                    .push(format!("{label}: {generic} generically, fails under {}", condition.description()));
                if finding.status != Status::Fails {
                    finding.status = Status::Fails;
                    finding.witnesses.push(idx.iter().map(|i| i + 1).collect());
                    finding.data.push(("residual".to_string(), value));
                }
            }
        }
    }
    Ok(finding)
}
