//! The curvature family of a metric.
//!
//! Conventions, fixed so that the Robinson–Trautman tables come out with the
//! published signs:
//!
//! * `R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} − Γ^a_{de} Γ^e_{cb}`
//!   and `R_{abcd} = g_{ae} R^e_{bcd}`;
//! * `S_{jk} = g^{il} R_{ijkl}` (first and last slots contracted), `κ = g^{jk} S_{jk}`;
//! * covariant derivatives carry the derivative slot last.

use std::sync::OnceLock;

use pseudosym_symbolic::{Coefficient, RatFn, SymbolicError};
use thiserror::Error;

use crate::algebra::{compose, contract, covariant_derivative, divergence, kulkarni_nomizu, Connection};
use crate::metric::{MetricError, MetricSpec};
use crate::scalar::dot_sum;
use crate::tensor::{ComponentTensor, Symmetry, TensorError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurvatureError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// Named members of the curvature family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Metric,
    Riemann,
    Ricci,
    Ricci2,
    Weyl,
    Concircular,
    Conharmonic,
    Gaussian,
    Projective,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::Metric,
        Kind::Riemann,
        Kind::Ricci,
        Kind::Ricci2,
        Kind::Weyl,
        Kind::Concircular,
        Kind::Conharmonic,
        Kind::Gaussian,
        Kind::Projective,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Kind::Metric => "g",
            Kind::Riemann => "R",
            Kind::Ricci => "S",
            Kind::Ricci2 => "S2",
            Kind::Weyl => "C",
            Kind::Concircular => "W",
            Kind::Conharmonic => "K",
            Kind::Gaussian => "G",
            Kind::Projective => "P",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

pub type Tensor<C> = ComponentTensor<RatFn<C>>;

type Lazy<C> = OnceLock<Result<Tensor<C>, CurvatureError>>;

pub struct CurvatureBundle<C: Coefficient> {
    metric: MetricSpec<C>,
    inverse: Tensor<C>,
    connection: Connection<RatFn<C>>,
    tensors: Vec<Tensor<C>>,
    scalar: RatFn<C>,
    nabla: Vec<Lazy<C>>,
    div: Vec<Lazy<C>>,
}

impl<C: Coefficient> std::fmt::Debug for CurvatureBundle<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CurvatureBundle")
            .field("metric", &self.metric.name())
            .field("materialized", &self.materialized())
            .finish()
    }
}

/// `Γ^k_{ij} = ½ g^{kl}(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})`.
pub fn christoffel<C: Coefficient>(
    metric: &MetricSpec<C>,
    inverse: &Tensor<C>,
) -> Result<Connection<RatFn<C>>, CurvatureError> {
    let n = metric.dim();
    let g = metric.lower();
    // dg[(l, i, j)] = ∂_l g_{ij}
    let dg = ComponentTensor::try_from_fn(n, 3, |i| metric.partial(g.get(&[i[1], i[2]]), i[0]))?;
    let half = RatFn::from_frac(1, 2);
    Ok(Connection::from_fn(n, |k, i, j| {
        let mut acc = RatFn::zero();
        for l in 0..n {
            let gkl = inverse.get(&[k, l]);
            if gkl.is_zero() {
                continue;
            }
            let t = dg
                .get(&[i, j, l])
                .add(dg.get(&[j, i, l]))
                .sub(dg.get(&[l, i, j]));
            if !t.is_zero() {
                acc = acc.add(&gkl.mul(&t));
            }
        }
        acc.mul(&half)
    }))
}

/// Covariant Riemann tensor from a connection.
pub fn riemann<C: Coefficient>(
    metric: &MetricSpec<C>,
    conn: &Connection<RatFn<C>>,
) -> Result<Tensor<C>, CurvatureError> {
    let n = metric.dim();
    // dgamma[(c, a, d, b)] = ∂_c Γ^a_{db}
    let dgamma = ComponentTensor::try_from_fn(n, 4, |i| metric.partial(conn.get(i[1], i[2], i[3]), i[0]))?;
    let up = ComponentTensor::from_fn(n, 4, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        let mut acc = dgamma.get(&[c, a, d, b]).sub(dgamma.get(&[d, a, c, b]));
        for e in 0..n {
            let p = dot_sum([(conn.get(a, c, e), conn.get(e, d, b))]);
            let m = dot_sum([(conn.get(a, d, e), conn.get(e, c, b))]);
            acc = acc.add(&p).sub(&m);
        }
        acc
    });
    let g = metric.lower();
    let lower = ComponentTensor::from_fn(n, 4, |i| {
        dot_sum((0..n).map(|e| (g.get(&[i[0], e]), up.get(&[e, i[1], i[2], i[3]]))))
    });
    Ok(lower.with_symmetry(Symmetry::GeneralizedCurvature)?)
}

impl<C: Coefficient> CurvatureBundle<C> {
    pub fn new(metric: MetricSpec<C>) -> Result<Self, CurvatureError> {
        let n = metric.dim();
        let inverse = metric.inverse()?;
        let connection = christoffel(&metric, &inverse)?;
        let g = metric.lower().clone();
        let r = riemann(&metric, &connection)?;
        let s = contract(&r, 0, 3, &inverse)?.with_symmetry(Symmetry::SymmetricPair)?;
        let kappa = contract(&s, 0, 1, &inverse)?.get(&[]).clone();
        let s2 = compose(&s, &inverse, &s).with_symmetry(Symmetry::SymmetricPair)?;
        let gg = kulkarni_nomizu(&g, &g)?;
        let gs = kulkarni_nomizu(&g, &s)?;

        let ni = n as i64;
        let inv_n2 = RatFn::from_frac(1, ni - 2);
        let weyl = ComponentTensor::linear_combination(&[
            (RatFn::one(), &r),
            (inv_n2.neg(), &gs),
            (kappa.mul(&RatFn::from_frac(1, 2 * (ni - 2) * (ni - 1))), &gg),
        ])?;
        let concircular = ComponentTensor::linear_combination(&[
            (RatFn::one(), &r),
            (kappa.mul(&RatFn::from_frac(-1, 2 * ni * (ni - 1))), &gg),
        ])?;
        let conharmonic = ComponentTensor::linear_combination(&[(RatFn::one(), &r), (inv_n2.neg(), &gs)])?;
        let gaussian = gg.scale(&RatFn::from_frac(1, 2));
        let inv_n1 = RatFn::from_frac(1, ni - 1);
        let projective = ComponentTensor::from_fn(n, 4, |i| {
            let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
            let bracket = g
                .get(&[a, d])
                .mul(s.get(&[b, c]))
                .sub(&g.get(&[b, d]).mul(s.get(&[a, c])));
            r.get(i).sub(&bracket.mul(&inv_n1))
        })
        .with_symmetry(Symmetry::ProjectiveLike)?;

        let mut tensors = vec![ComponentTensor::zeros(n, 0); Kind::ALL.len()];
        tensors[Kind::Metric.slot()] = g;
        tensors[Kind::Riemann.slot()] = r;
        tensors[Kind::Ricci.slot()] = s;
        tensors[Kind::Ricci2.slot()] = s2;
        tensors[Kind::Weyl.slot()] = weyl.with_symmetry(Symmetry::GeneralizedCurvature)?;
        tensors[Kind::Concircular.slot()] = concircular.with_symmetry(Symmetry::GeneralizedCurvature)?;
        tensors[Kind::Conharmonic.slot()] = conharmonic.with_symmetry(Symmetry::GeneralizedCurvature)?;
        tensors[Kind::Gaussian.slot()] = gaussian;
        tensors[Kind::Projective.slot()] = projective;

        Ok(CurvatureBundle {
            metric,
            inverse,
            connection,
            tensors,
            scalar: kappa,
            nabla: (0..Kind::ALL.len()).map(|_| OnceLock::new()).collect(),
            div: (0..Kind::ALL.len()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn metric(&self) -> &MetricSpec<C> {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn inverse(&self) -> &Tensor<C> {
        &self.inverse
    }

    pub fn connection(&self) -> &Connection<RatFn<C>> {
        &self.connection
    }

    pub fn tensor(&self, kind: Kind) -> &Tensor<C> {
        &self.tensors[kind.slot()]
    }

    pub fn g(&self) -> &Tensor<C> {
        self.tensor(Kind::Metric)
    }

    pub fn riemann(&self) -> &Tensor<C> {
        self.tensor(Kind::Riemann)
    }

    pub fn ricci(&self) -> &Tensor<C> {
        self.tensor(Kind::Ricci)
    }

    pub fn scalar(&self) -> &RatFn<C> {
        &self.scalar
    }

    /// `∇T` for an arbitrary covariant tensor, derivative slot last.
    pub fn covariant(&self, t: &Tensor<C>) -> Result<Tensor<C>, CurvatureError> {
        Ok(covariant_derivative(t, &self.connection, |e, l| self.metric.partial(e, l))?)
    }

    /// `∇` of a family member, computed on first use.
    pub fn nabla(&self, kind: Kind) -> Result<&Tensor<C>, CurvatureError> {
        self.nabla[kind.slot()]
            .get_or_init(|| self.covariant(self.tensor(kind)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Divergence `g^{ia} D_{i…,a}`, computed on first use.
    pub fn divergence(&self, kind: Kind) -> Result<&Tensor<C>, CurvatureError> {
        self.div[kind.slot()]
            .get_or_init(|| {
                let nabla = self.nabla(kind)?;
                Ok(divergence(nabla, &self.inverse)?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Names of the lazily computed pieces that exist so far.
    pub fn materialized(&self) -> Vec<String> {
        let mut out = Vec::new();
        for kind in Kind::ALL {
            if self.nabla[kind.slot()].get().is_some() {
                out.push(format!("nabla {}", kind.symbol()));
            }
            if self.div[kind.slot()].get().is_some() {
                out.push(format!("div {}", kind.symbol()));
            }
        }
        out
    }
}

