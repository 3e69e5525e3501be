//! Built-in metrics.
//!
//! Each entry owns its own symbol context, so a parameter called `a` in one
//! metric is never identified with an `a` in another.
//!
//! | name | chart | notes |
//! |------|-------|-------|
//! | `robinson-trautman-jet` | `t, r, x3, x4` | `f(x3, x4)` is a jet symbol, `F = f3² + f4² − f(f33 + f44)`, `F3`, `F4` its derivatives |
//! | `robinson-trautman-concrete` | `t, r, x3, x4` | `f` given as an expression, default `E` with `∂₃E = ∂₄E = E` |
//! | `som-raychaudhuri` | `t, r, z, phi` | parameter `a` |
//! | `schwarzschild-like` | `t, r, x3, x4` | `b = 0`, `f = 1 − (a/2)(x3² + x4²)` so that `F = 2a` |
//! | `minkowski` | `t, x, y, z` | flat |

use std::collections::BTreeMap;
use std::sync::Arc;

use pseudosym_symbolic::{Context, Expr, SymbolKind, SymbolicError, Var};
use thiserror::Error;

use crate::constraint::JetConstraint;
use crate::metric::{MetricError, MetricSpec};
use crate::tensor::ComponentTensor;
use crate::{Metric, Tensor};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown catalog metric `{0}`")]
    UnknownName(String),
    #[error("`{0}` is not a parameter of this metric")]
    UnknownParameter(String),
    #[error("parameter value for `{name}`: {source}")]
    BadValue { name: String, source: SymbolicError },
    #[error("parameter values make `{0}` vanish identically")]
    Assumption(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// Parameter overrides: symbol name to expression text.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CatalogParams {
    pub values: BTreeMap<String, String>,
    /// Jet depth for entries with an unknown function; default 4.
    pub jet_depth: Option<usize>,
}

impl CatalogParams {
    pub fn with(mut self, name: &str, value: &str) -> Self {
        self.values.insert(name.to_string(), value.to_string());
        self
    }

    pub fn jet_depth(mut self, depth: usize) -> Self {
        self.jet_depth = Some(depth);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    /// `S = αg + βΠ⊗Π + γ(Π⊗Φ + Φ⊗Π)`.
    Chaki,
    /// `S = αg + βΠ⊗Π + γΦ⊗Φ`.
    DeGhosh,
    /// `S = αg + βΠ⊗Π + γE` with `E` trace free and `E(X, V) = 0` for the dual `V` of `Π`.
    PseudoQuasi,
}

impl DecompositionKind {
    pub fn id(self) -> &'static str {
        match self {
            DecompositionKind::Chaki => "generalized-quasi-einstein-chaki",
            DecompositionKind::DeGhosh => "generalized-quasi-einstein-de-ghosh",
            DecompositionKind::PseudoQuasi => "pseudo-quasi-einstein",
        }
    }
}

/// A candidate Ricci decomposition to be verified.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub alpha: Expr,
    pub beta: Expr,
    pub gamma: Expr,
    pub pi: Vec<Expr>,
    /// Unused for [`DecompositionKind::PseudoQuasi`].
    pub phi: Vec<Expr>,
}

/// Extra objects a metric ships for the classifier to verify.
#[derive(Debug, Clone, Default)]
pub struct Hints {
    pub decompositions: Vec<Decomposition>,
    /// Symmetric (0,2) tensors to test for compatibility.
    pub compatible_tensors: Vec<(String, Tensor)>,
    /// 1-forms `Π` whose square `Π⊗Π` is tested for compatibility.
    pub compatible_forms: Vec<(String, Vec<Expr>)>,
    /// Reference coefficients of `S∧S`, `g∧S`, `g∧g` in a Roter decomposition.
    pub roter_reference: Option<[Expr; 3]>,
    /// Parameter condition under which the energy-momentum tensor is parallel.
    pub parallel_energy_condition: Option<JetConstraint>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn(&CatalogParams) -> Result<Built, CatalogError>,
}

impl CatalogEntry {
    pub fn build(&self, params: &CatalogParams) -> Result<Built, CatalogError> {
        (self.build)(params)
    }
}

#[derive(Debug, Clone)]
pub struct Built {
    pub metric: Metric,
    pub hints: Hints,
}

pub const ENTRIES: [CatalogEntry; 5] = [
    CatalogEntry {
        name: "robinson-trautman-jet",
        summary: "Robinson-Trautman type II metric with an unknown f(x3, x4)",
        build: robinson_trautman_jet,
    },
    CatalogEntry {
        name: "robinson-trautman-concrete",
        summary: "Robinson-Trautman type II metric with f given explicitly (default E = exp(x3 + x4))",
        build: robinson_trautman_concrete,
    },
    CatalogEntry {
        name: "som-raychaudhuri",
        summary: "Som-Raychaudhuri rotating charged dust in cylindrical coordinates",
        build: som_raychaudhuri,
    },
    CatalogEntry {
        name: "schwarzschild-like",
        summary: "Robinson-Trautman metric with b = 0 and f chosen so that F = 2a",
        build: schwarzschild_like,
    },
    CatalogEntry {
        name: "minkowski",
        summary: "flat spacetime diag(1, -1, -1, -1)",
        build: minkowski,
    },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

pub fn builtin(name: &str, params: &CatalogParams) -> Result<Built, CatalogError> {
    entry(name)?.build(params)
}

/// Parameters of the free (0,2) block tensor and the axis 1-forms.
const BLOCK_PARAMETERS: [&str; 10] = ["t11", "t12", "t22", "t33", "t34", "t44", "t1", "t2", "t3", "t4"];

/// Symbols shared by every entry: field-equation constants and `Lambda`.
fn common_symbols(b: &mut pseudosym_symbolic::ContextBuilder) {
    b.parameter("Lambda");
    b.constant("c");
    b.constant("G");
    b.constant("pi");
}

struct Draft<'a> {
    ctx: &'a Context,
    substitutions: Vec<(Var, Expr)>,
}

impl<'a> Draft<'a> {
    /// Resolves overrides; `special` names may be absent from the context.
    fn new(ctx: &'a Context, params: &CatalogParams, special: &[&str]) -> Result<Self, CatalogError> {
        let mut substitutions = Vec::new();
        for (name, text) in &params.values {
            if special.contains(&name.as_str()) {
                continue;
            }
            let v = ctx
                .lookup(name)
                .filter(|v| ctx.symbol(*v).kind == SymbolKind::Parameter)
                .ok_or_else(|| CatalogError::UnknownParameter(name.clone()))?;
            let value = ctx.parse(text).map_err(|source| CatalogError::BadValue {
                name: name.clone(),
                source,
            })?;
            substitutions.push((v, value));
        }
        Ok(Draft { ctx, substitutions })
    }

    fn expr(&self, text: &str) -> Result<Expr, CatalogError> {
        let e: Expr = self.ctx.parse(text)?;
        self.apply(&e)
    }

    fn apply(&self, e: &Expr) -> Result<Expr, CatalogError> {
        let mut out = e.clone();
        for (v, value) in &self.substitutions {
            out = out
                .substitute(*v, value)
                .ok_or_else(|| CatalogError::Assumption(self.ctx.format(e)))?;
        }
        Ok(out)
    }

    fn assumptions(&self, texts: &[&str]) -> Result<Vec<Expr>, CatalogError> {
        texts
            .iter()
            .map(|t| {
                let e = self.expr(t)?;
                if e.is_zero() {
                    Err(CatalogError::Assumption(t.to_string()))
                } else {
                    Ok(e)
                }
            })
            .collect()
    }

    fn matrix(&self, entries: &[[&str; 4]; 4]) -> Result<Tensor, CatalogError> {
        let mut comps = Vec::with_capacity(16);
        for row in entries {
            for text in row {
                comps.push(self.expr(text)?);
            }
        }
        Ok(ComponentTensor::from_components(4, 2, comps).expect("4x4 matrix"))
    }
}

fn rt_context(jet_depth: usize) -> Result<Context, SymbolicError> {
    let mut b = Context::builder();
    b.coordinate("t");
    b.coordinate("r");
    let x3 = b.coordinate("x3");
    let x4 = b.coordinate("x4");
    for p in ["a", "b", "q"] {
        b.parameter(p);
    }
    common_symbols(&mut b);
    for p in BLOCK_PARAMETERS {
        b.parameter(p);
    }
    b.parameter("Phi1");
    b.jet_function("f", &[x3, x4], jet_depth);
    b.alias("F", "f3^2+f4^2-f*(f33+f44)");
    b.alias("F3", "2*f3*f33+2*f4*f34-f3*(f33+f44)-f*(f333+f344)");
    b.alias("F4", "2*f3*f34+2*f4*f44-f4*(f33+f44)-f*(f334+f444)");
    b.build()
}

fn rt_matrix<'a>(f: &'a str) -> [[String; 4]; 4] {
    let z = || "0".to_string();
    [
        ["-2*(a-2*b*r-q/r)".to_string(), "1".to_string(), z(), z()],
        ["1".to_string(), z(), z(), z()],
        [z(), z(), format!("-r^2/({f})^2"), z()],
        [z(), z(), z(), format!("-r^2/({f})^2")],
    ]
}

fn as_str_matrix(m: &[[String; 4]; 4]) -> [[&str; 4]; 4] {
    let mut out = [[""; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[i][j].as_str();
        }
    }
    out
}

fn chart(ctx: &Context) -> Vec<Var> {
    ctx.coordinates()
}

fn robinson_trautman_jet(params: &CatalogParams) -> Result<Built, CatalogError> {
    let ctx = Arc::new(rt_context(params.jet_depth.unwrap_or(4))?);
    let d = Draft::new(&ctx, params, &[])?;
    let lower = d.matrix(&as_str_matrix(&rt_matrix("f")))?;
    let assumptions = d.assumptions(&["r", "f"])?;
    let hints = rt_hints(&d, true)?;
    let metric = MetricSpec::new("robinson-trautman-jet", ctx.clone(), chart(&ctx), lower, assumptions)?;
    Ok(Built { metric, hints })
}

fn robinson_trautman_concrete(params: &CatalogParams) -> Result<Built, CatalogError> {
    let mut b = Context::builder();
    b.coordinate("t");
    b.coordinate("r");
    let x3 = b.coordinate("x3");
    let x4 = b.coordinate("x4");
    for p in ["a", "b", "q"] {
        b.parameter(p);
    }
    common_symbols(&mut b);
    for p in BLOCK_PARAMETERS {
        b.parameter(p);
    }
    b.exponential_jet("E", &[x3, x4]);
    let ctx = Arc::new(b.build()?);
    let d = Draft::new(&ctx, params, &["f"])?;
    let f_text = params.values.get("f").map(String::as_str).unwrap_or("E");
    let f = d.expr(f_text).map_err(|e| match e {
        CatalogError::Symbolic(source) => CatalogError::BadValue {
            name: "f".to_string(),
            source,
        },
        other => other,
    })?;
    if f.is_zero() {
        return Err(CatalogError::Assumption("f".to_string()));
    }
    let lower = d.matrix(&as_str_matrix(&rt_matrix(f_text)))?;
    let assumptions = vec![d.expr("r")?, f];
    let hints = rt_hints(&d, false)?;
    let metric = MetricSpec::new("robinson-trautman-concrete", ctx.clone(), chart(&ctx), lower, assumptions)?;
    Ok(Built { metric, hints })
}

fn schwarzschild_like(params: &CatalogParams) -> Result<Built, CatalogError> {
    let mut b = Context::builder();
    b.coordinate("t");
    b.coordinate("r");
    b.coordinate("x3");
    b.coordinate("x4");
    b.parameter("a");
    b.parameter("q");
    common_symbols(&mut b);
    let ctx = Arc::new(b.build()?);
    let d = Draft::new(&ctx, params, &[])?;
    let f = "1-a*(x3^2+x4^2)/2";
    let mut m = rt_matrix(f);
    m[0][0] = "-2*(a-q/r)".to_string();
    let lower = d.matrix(&as_str_matrix(&m))?;
    let assumptions = d.assumptions(&["r", f])?;
    let metric = MetricSpec::new("schwarzschild-like", ctx.clone(), chart(&ctx), lower, assumptions)?;
    Ok(Built {
        metric,
        hints: Hints::default(),
    })
}

fn som_raychaudhuri(params: &CatalogParams) -> Result<Built, CatalogError> {
    let mut b = Context::builder();
    for c in ["t", "r", "z", "phi"] {
        b.coordinate(c);
    }
    b.parameter("a");
    common_symbols(&mut b);
    let ctx = Arc::new(b.build()?);
    let d = Draft::new(&ctx, params, &[])?;
    let lower = d.matrix(&[
        ["1", "0", "0", "a*r^2"],
        ["0", "-1", "0", "0"],
        ["0", "0", "-1", "0"],
        ["a*r^2", "0", "0", "-(r^2-a^2*r^4)"],
    ])?;
    let assumptions = d.assumptions(&["r"])?;
    let metric = MetricSpec::new("som-raychaudhuri", ctx.clone(), chart(&ctx), lower, assumptions)?;
    Ok(Built {
        metric,
        hints: Hints::default(),
    })
}

fn minkowski(params: &CatalogParams) -> Result<Built, CatalogError> {
    let mut b = Context::builder();
    for c in ["t", "x", "y", "z"] {
        b.coordinate(c);
    }
    common_symbols(&mut b);
    let ctx = Arc::new(b.build()?);
    let d = Draft::new(&ctx, params, &[])?;
    let lower = d.matrix(&[
        ["1", "0", "0", "0"],
        ["0", "-1", "0", "0"],
        ["0", "0", "-1", "0"],
        ["0", "0", "0", "-1"],
    ])?;
    let metric = MetricSpec::new("minkowski", ctx.clone(), chart(&ctx), lower, Vec::new())?;
    Ok(Built {
        metric,
        hints: Hints::default(),
    })
}

fn rt_hints(d: &Draft<'_>, jet: bool) -> Result<Hints, CatalogError> {
    let mut hints = Hints::default();
    let e = |s: &str| d.expr(s);
    let zero = Expr::zero;

    let block = d.matrix(&[
        ["t11", "t12", "0", "0"],
        ["t12", "t22", "0", "0"],
        ["0", "0", "t33", "t34"],
        ["0", "0", "t34", "t44"],
    ])?;
    hints.compatible_tensors.push(("block t(i,j)".to_string(), block));
    for (k, name) in ["t1", "t2", "t3", "t4"].iter().enumerate() {
        let mut form = vec![zero(); 4];
        form[k] = e(name)?;
        hints.compatible_forms.push((format!("axis {}", k + 1), form));
    }

    if jet {
        // the decompositions and Roter coefficients are written in terms of F
        hints.decompositions.push(Decomposition {
            kind: DecompositionKind::Chaki,
            alpha: e("-(-2*a+8*b*r+F)/r^2")?,
            beta: e("4*b*(-2*a+4*b*r+F)/(Phi1^2*r)")?,
            gamma: e("-2*a+4*b*r+F")?,
            pi: vec![e("(q-a*r)/(Phi1*r^3)")?, e("1/(Phi1*r^2)")?, zero(), zero()],
            phi: vec![e("Phi1")?, zero(), zero(), zero()],
        });
        hints.decompositions.push(Decomposition {
            kind: DecompositionKind::DeGhosh,
            alpha: e("-4*b/r")?,
            beta: e("(-2*a+4*b*r+F)/r^2")?,
            gamma: e("(-2*a+4*b*r+F)/r^2")?,
            pi: vec![zero(), zero(), e("r/f")?, zero()],
            phi: vec![zero(), zero(), zero(), e("r/f")?],
        });
        hints.decompositions.push(Decomposition {
            kind: DecompositionKind::PseudoQuasi,
            alpha: e("-F/(2*r^2)")?,
            beta: e("-4*(a-6*b*r)/r^2")?,
            gamma: Expr::one(),
            pi: vec![zero(), zero(), zero(), e("r/f")?],
            phi: Vec::new(),
        });
        hints.roter_reference = Some([
            e("r*(2*a*r-6*q-F*r)/(2*(-2*a+4*b*r+F)^2)")?,
            e("(4*a*b*r^2+6*a*q+8*b^2*r^3-F*(2*b*r^2+3*q)-36*b*q*r)/(r*(-2*a+4*b*r+F)^2)")?,
            e("-(1/r^3)*(-4*b*r*(6*a*q+8*b^2*r^3-24*b*q*r-3*q*F)/(-2*a+4*b*r+F)^2+q)")?,
        ]);
        let ctx = d.ctx;
        let b = ctx.var("b")?;
        if !d.substitutions.iter().any(|(v, _)| *v == b) {
            hints.parallel_energy_condition = Some(JetConstraint::new(
                ctx,
                vec![(b, Expr::zero())],
                "f33",
                e("(f3^2+f4^2-2*a)/f-f44")?,
                "b = 0 and F = 2a",
            )?);
        }
    }
    Ok(hints)
}
