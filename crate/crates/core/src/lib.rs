//! Curvature of semi-Riemannian metrics over exact rational function fields.
//!
//! Tensors are dense component arrays of a generic [`Scalar`]; the curvature
//! pipeline and classifier work over [`RatFn`](pseudosym_symbolic::RatFn)
//! with arbitrary-precision rational coefficients.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod constraint;
pub mod curvature;
pub mod deszcz;
pub mod eigen;
pub mod energy;
pub mod linsolve;
pub mod metric;
pub mod scalar;
pub mod tensor;

pub use curvature::{CurvatureBundle, CurvatureError, Kind};
pub use metric::{MetricError, MetricSpec, Signature};
pub use scalar::Scalar;
pub use tensor::{ComponentTensor, Index, Symmetry, TensorError};

use pseudosym_symbolic::{BigRational, Expr};

/// Tensor with exact symbolic components.
pub type Tensor = ComponentTensor<Expr>;
/// Metric over the rationals.
pub type Metric = MetricSpec<BigRational>;
/// Curvature bundle over the rationals.
pub type Bundle = CurvatureBundle<BigRational>;
