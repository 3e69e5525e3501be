//! Curvature-restricted structures decided over the coefficient field.
//!
//! Every detector reduces its defining identity to one of three exact
//! questions: does a tensor vanish, is one tensor a multiple of another, or
//! does a tensor lie in the span of a basis (with 1-form unknowns expanded
//! into one basis tensor per component). Positive answers carry the solved
//! coefficients, already re-substituted into the identity; negative answers
//! carry one component whose residual is a nonzero expression.

use std::collections::HashMap;
use std::sync::OnceLock;

use pseudosym_symbolic::{BigRational, Expr, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{as_matrix, compose, contract, kulkarni_nomizu};
use crate::catalog::{Decomposition, DecompositionKind, Hints};
use crate::constraint::ConstraintError;
use crate::curvature::{CurvatureError, Kind};
use crate::deszcz::{dot, tachibana};
use crate::eigen::{endomorphism, spectrum, Spectrum};
use crate::linsolve::{express_in_span, minors, rank_by_minors, rank_of_rows, SpanOutcome};
use crate::tensor::{ComponentTensor, Index, TensorError};
use crate::{energy, Bundle, Metric, Tensor};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    HoldsWithData,
    /// Both sides of the identity vanish identically.
    Vacuous,
    /// The detector could not decide (missing candidate, incomplete
    /// factorization, or an internal error).
    Inconclusive,
}

impl Status {
    pub fn id(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HoldsWithData => "holds-with-data",
            Status::Vacuous => "vacuous",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        [
            Status::Holds,
            Status::Fails,
            Status::HoldsWithData,
            Status::Vacuous,
            Status::Inconclusive,
        ]
        .into_iter()
        .find(|st| st.id() == s)
    }

    /// True for `holds` and `holds-with-data`.
    pub fn holds(self) -> bool {
        matches!(self, Status::Holds | Status::HoldsWithData)
    }
}

/// Detector families, in battery order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Semisymmetry,
    Pseudosymmetry,
    WeylPseudosymmetry,
    Mixed,
    Roter,
    Einstein,
    EinLevel,
    Derivatives,
    Compatibility,
    Recurrence,
    WeakSymmetry,
    Divergence,
    EnergyMomentum,
}

impl Group {
    pub const ALL: [Group; 13] = [
        Group::Semisymmetry,
        Group::Pseudosymmetry,
        Group::WeylPseudosymmetry,
        Group::Mixed,
        Group::Roter,
        Group::Einstein,
        Group::EinLevel,
        Group::Derivatives,
        Group::Compatibility,
        Group::Recurrence,
        Group::WeakSymmetry,
        Group::Divergence,
        Group::EnergyMomentum,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Group::Semisymmetry => "semisymmetry",
            Group::Pseudosymmetry => "pseudosymmetry",
            Group::WeylPseudosymmetry => "weyl-pseudosymmetry",
            Group::Mixed => "mixed",
            Group::Roter => "roter",
            Group::Einstein => "einstein",
            Group::EinLevel => "ein-level",
            Group::Derivatives => "derivatives",
            Group::Compatibility => "compatibility",
            Group::Recurrence => "recurrence",
            Group::WeakSymmetry => "weak-symmetry",
            Group::Divergence => "divergence",
            Group::EnergyMomentum => "energy-momentum",
        }
    }
}

/// Outcome of one exact test, before it is named.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub status: Status,
    pub data: Vec<(String, Expr)>,
    /// 1-based component positions.
    pub witnesses: Vec<Vec<usize>>,
    pub notes: Vec<String>,
}

impl Finding {
    pub fn new(status: Status) -> Self {
        Finding {
            status,
            data: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn failing(at: &[usize], residual: Expr) -> Self {
        let mut f = Finding::new(Status::Fails);
        f.witnesses.push(one_based(at));
        f.data.push(("residual".to_string(), residual));
        f
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub fn datum(&self, label: &str) -> Option<&Expr> {
        self.data.iter().find(|(l, _)| l == label).map(|(_, e)| e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    /// Stable identifier.
    pub name: String,
    pub group: Group,
    /// The identity tested, in readable form.
    pub relation: String,
    pub status: Status,
    pub data: Vec<(String, Expr)>,
    pub witnesses: Vec<Vec<usize>>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn from_finding(name: &str, group: Group, relation: &str, f: Finding) -> Self {
        Verdict {
            name: name.to_string(),
            group,
            relation: relation.to_string(),
            status: f.status,
            data: f.data,
            witnesses: f.witnesses,
            notes: f.notes,
        }
    }

    pub fn datum(&self, label: &str) -> Option<&Expr> {
        self.data.iter().find(|(l, _)| l == label).map(|(_, e)| e)
    }
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

/// `Holds` when `t ≡ 0`, otherwise `Fails` at the first nonzero component.
pub fn vanishing(t: &Tensor) -> Finding {
    match first_nonzero(t) {
        None => Finding::new(Status::Holds),
        Some(idx) => Finding::failing(&idx, t.get(&idx).clone()),
    }
}

fn first_nonzero(t: &Tensor) -> Option<Index> {
    (0..t.components().len())
        .into_par_iter()
        .find_first(|&f| !t.get_flat(f).is_zero())
        .map(|f| t.index_of(f))
}

/// Decides `t1 = L t2`. The pivot is the first component of `t2` (in
/// lexicographic index order) that is not identically zero.
pub fn proportionality(t1: &Tensor, t2: &Tensor) -> Result<Finding, TensorError> {
    if t1.dim() != t2.dim() {
        return Err(TensorError::DimensionMismatch(t1.dim(), t2.dim()));
    }
    if t1.rank() != t2.rank() {
        return Err(TensorError::WrongRank {
            expected: t1.rank(),
            rank: t2.rank(),
        });
    }
    let Some(pivot) = first_nonzero(t2) else {
        return Ok(match first_nonzero(t1) {
            None => Finding::new(Status::Vacuous),
            Some(idx) => Finding::failing(&idx, t1.get(&idx).clone()),
        });
    };
    let l = t1
        .get(&pivot)
        .checked_div(t2.get(&pivot))
        .expect("pivot is nonzero");
    let bad = (0..t1.components().len()).into_par_iter().find_first(|&f| {
        let a = t1.get_flat(f);
        let b = t2.get_flat(f);
        if b.is_zero() {
            !a.is_zero()
        } else {
            a != &l.mul(b)
        }
    });
    Ok(match bad {
        Some(f) => {
            let idx = t1.index_of(f);
            let residual = t1.get_flat(f).sub(&l.mul(t2.get_flat(f)));
            Finding::failing(&idx, residual)
        }
        None => {
            let mut found = Finding::new(Status::HoldsWithData);
            found.data.push(("L".to_string(), l));
            found
        }
    })
}

/// Decides `target = Σ λ_i basis_i`, labelling the coefficients.
pub fn span(target: &Tensor, basis: &[(String, Tensor)]) -> Result<Finding, TensorError> {
    solve_span(target, basis, false)
}

/// Like [`span`], but the identity holds only for coefficients that are not
/// all zero. A unique zero solution fails, witnessed by the nonzero minor
/// of the basis on the listed components.
pub fn nontrivial_span(target: &Tensor, basis: &[(String, Tensor)]) -> Result<Finding, TensorError> {
    solve_span(target, basis, true)
}

fn solve_span(target: &Tensor, basis: &[(String, Tensor)], nontrivial: bool) -> Result<Finding, TensorError> {
    if basis.iter().all(|(_, b)| b.is_zero()) {
        return Ok(match first_nonzero(target) {
            None => Finding::new(Status::Vacuous),
            Some(idx) => Finding::failing(&idx, target.get(&idx).clone()),
        });
    }
    let refs: Vec<&Tensor> = basis.iter().map(|(_, b)| b).collect();
    let mut sol = match express_in_span(target, &refs)? {
        SpanOutcome::Inconsistent { witness, residual } => return Ok(Finding::failing(&witness, residual)),
        SpanOutcome::Solved(sol) => sol,
    };
    let mut notes = Vec::new();
    if nontrivial && sol.coefficients.iter().all(Expr::is_zero) {
        match sol.kernel.first() {
            None => {
                let mut f = Finding::new(Status::Fails);
                f.witnesses = sol.pivot_rows.iter().map(|i| one_based(i)).collect();
                f.data.push(("minor".to_string(), sol.minor));
                f.notes.push("only the zero solution satisfies the identity".to_string());
                return Ok(f);
            }
            Some(k) => {
                sol.coefficients = k.clone();
                notes.push(format!(
                    "homogeneous solutions form a {}-dimensional family; one member shown",
                    sol.kernel.len()
                ));
            }
        }
    } else if !sol.unique {
        notes.push(format!(
            "basis has rank {} of {}; free coefficients set to zero",
            sol.rank,
            basis.len()
        ));
    }
    let mut found = Finding::new(Status::HoldsWithData);
    for ((label, _), c) in basis.iter().zip(sol.coefficients) {
        found.data.push((label.clone(), c));
    }
    found.notes = notes;
    Ok(found)
}

/// Expands 1-form unknowns into basis tensors: `forms[k]` gives, for a
/// component `m`, the tensor multiplying the unknown `form_k[m]`.
pub fn one_form_basis(
    dim: usize,
    names: &[&str],
    forms: &[&(dyn Fn(usize) -> Tensor + Sync)],
) -> Vec<(String, Tensor)> {
    let mut basis = Vec::new();
    for (name, build) in names.iter().zip(forms) {
        for m in 0..dim {
            basis.push((format!("{name}[{}]", m + 1), build(m)));
        }
    }
    basis
}

/// Which detectors to run: `all`, or a list of detector names and group ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Vec<String>),
}

impl Selection {
    pub fn parse(text: &str) -> Self {
        let items: Vec<String> = text
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if items.is_empty() || items.iter().any(|s| s == "all") {
            Selection::All
        } else {
            Selection::Only(items)
        }
    }

    fn wants(&self, name: &str, group: Group) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(items) => items.iter().any(|s| s == name || s == group.id()),
        }
    }
}

/// Engine settings recorded in every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub jet_depth: usize,
    /// Random exact evaluations cross-checking each solved identity.
    pub trials: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            jet_depth: 4,
            trials: 8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub metric: String,
    pub settings: Settings,
    pub verdicts: Vec<Verdict>,
}

impl ClassificationReport {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    DotR,
    DotC,
    QG,
    QS,
}

type Cell = OnceLock<Result<Tensor, ClassifyError>>;

/// Shared state for one battery run over a bundle.
pub struct Classifier<'a> {
    bundle: &'a Bundle,
    hints: &'a Hints,
    settings: Settings,
    ops: HashMap<(Op, Kind), Cell>,
    kn: HashMap<(Kind, Kind), Cell>,
    powers: OnceLock<Vec<Tensor>>,
    spectrum: OnceLock<Spectrum<Expr>>,
    energy: OnceLock<Result<energy::EnergyMomentum<'a>, ClassifyError>>,
    points: OnceLock<Vec<Point<BigRational>>>,
}

/// Components re-evaluated per sampled point.
const SPOT_COMPONENTS: usize = 64;

/// Families acted on by `R·`, `C·`, `Q(g,·)` and `Q(S,·)`.
pub const ACTED: [Kind; 6] = [
    Kind::Riemann,
    Kind::Ricci,
    Kind::Weyl,
    Kind::Concircular,
    Kind::Projective,
    Kind::Conharmonic,
];

/// (0,4) tensors tested for symmetry, recurrence and divergence.
pub const CURVATURES: [Kind; 5] = [
    Kind::Riemann,
    Kind::Weyl,
    Kind::Projective,
    Kind::Concircular,
    Kind::Conharmonic,
];

fn adjective(kind: Kind) -> &'static str {
    match kind {
        Kind::Riemann => "deszcz",
        Kind::Ricci => "ricci",
        Kind::Weyl => "conformally",
        Kind::Concircular => "concircularly",
        Kind::Projective => "projectively",
        Kind::Conharmonic => "conharmonically",
        Kind::Metric | Kind::Ricci2 | Kind::Gaussian => "",
    }
}

fn symmetric_name(kind: Kind) -> String {
    match kind {
        Kind::Riemann => "locally-symmetric".to_string(),
        k => format!("{}-symmetric", adjective(k)),
    }
}

fn recurrent_name(kind: Kind) -> String {
    match kind {
        Kind::Riemann => "recurrent".to_string(),
        k => format!("{}-recurrent", adjective(k)),
    }
}

type Run<'s> = Box<dyn Fn() -> Result<Finding, ClassifyError> + Send + Sync + 's>;

struct Detector<'s> {
    name: String,
    group: Group,
    relation: String,
    run: Run<'s>,
}

impl<'a> Classifier<'a> {
    pub fn new(bundle: &'a Bundle, hints: &'a Hints, settings: Settings) -> Self {
        let mut ops = HashMap::new();
        for op in [Op::DotR, Op::DotC, Op::QG, Op::QS] {
            for kind in Kind::ALL {
                ops.insert((op, kind), OnceLock::new());
            }
        }
        let mut kn = HashMap::new();
        for a in [Kind::Metric, Kind::Ricci, Kind::Ricci2] {
            for b in [Kind::Metric, Kind::Ricci, Kind::Ricci2] {
                kn.insert((a, b), OnceLock::new());
            }
        }
        Classifier {
            bundle,
            hints,
            settings,
            ops,
            kn,
            powers: OnceLock::new(),
            spectrum: OnceLock::new(),
            energy: OnceLock::new(),
            points: OnceLock::new(),
        }
    }

    pub fn bundle(&self) -> &'a Bundle {
        self.bundle
    }

    /// [`proportionality`] followed by the sampled cross-check.
    pub fn propto(&self, t1: &Tensor, t2: &Tensor) -> Result<Finding, ClassifyError> {
        let found = proportionality(t1, t2)?;
        Ok(self.spot(found, t1, &[("L", t2)]))
    }

    /// [`span`] followed by the sampled cross-check.
    pub fn solve(&self, target: &Tensor, basis: &[(String, Tensor)]) -> Result<Finding, ClassifyError> {
        let found = span(target, basis)?;
        let refs: Vec<(&str, &Tensor)> = basis.iter().map(|(l, t)| (l.as_str(), t)).collect();
        Ok(self.spot(found, target, &refs))
    }

    /// [`nontrivial_span`] followed by the sampled cross-check.
    pub fn solve_nontrivial(&self, target: &Tensor, basis: &[(String, Tensor)]) -> Result<Finding, ClassifyError> {
        let found = nontrivial_span(target, basis)?;
        let refs: Vec<(&str, &Tensor)> = basis.iter().map(|(l, t)| (l.as_str(), t)).collect();
        Ok(self.spot(found, target, &refs))
    }

    /// Recurrence-type identity: the 1-forms may not all vanish.
    pub fn solve_recurrence(
        &self,
        target: &Tensor,
        names: &[&str],
        forms: &[&(dyn Fn(usize) -> Tensor + Sync)],
    ) -> Result<Finding, ClassifyError> {
        self.solve_nontrivial(target, &one_form_basis(target.dim(), names, forms))
    }

    /// Solves for 1-form unknowns, see [`one_form_basis`].
    pub fn solve_forms(
        &self,
        target: &Tensor,
        names: &[&str],
        forms: &[&(dyn Fn(usize) -> Tensor + Sync)],
    ) -> Result<Finding, ClassifyError> {
        self.solve(target, &one_form_basis(target.dim(), names, forms))
    }

    fn points(&self) -> &[Point<BigRational>] {
        self.points.get_or_init(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(self.settings.seed);
            (0..self.settings.trials)
                .filter_map(|_| self.bundle.metric().sample_point(&mut rng).ok())
                .collect()
        })
    }

    /// Re-evaluates a solved identity at the sampled points. The exact
    /// verdict stands unless an evaluation disagrees, which would indicate
    /// an arithmetic fault and downgrades the verdict to inconclusive.
    fn spot(&self, mut found: Finding, target: &Tensor, basis: &[(&str, &Tensor)]) -> Finding {
        if found.status != Status::HoldsWithData || self.settings.trials == 0 {
            return found;
        }
        let coeffs: Vec<Expr> = basis
            .iter()
            .map(|(l, _)| found.datum(l).cloned().unwrap_or_else(Expr::zero))
            .collect();
        let flats: Vec<usize> = (0..target.components().len())
            .filter(|&f| !target.get_flat(f).is_zero() || basis.iter().any(|(_, b)| !b.get_flat(f).is_zero()))
            .collect();
        let stride = (flats.len() / SPOT_COMPONENTS).max(1);
        let bad = self.points().par_iter().find_map_first(|p| {
            let c: Vec<BigRational> = coeffs.iter().map(|e| p.evaluate(e)).collect::<Result<_, _>>().ok()?;
            for &f in flats.iter().step_by(stride) {
                let Ok(lhs) = p.evaluate(target.get_flat(f)) else { continue };
                let mut rhs = BigRational::from_integer(0.into());
                let mut finite = true;
                for ((_, b), ci) in basis.iter().zip(&c) {
                    match p.evaluate(b.get_flat(f)) {
                        Ok(v) => rhs += ci * v,
                        Err(_) => finite = false,
                    }
                }
                if finite && lhs != rhs {
                    return Some(f);
                }
            }
            None
        });
        if let Some(f) = bad {
            found.status = Status::Inconclusive;
            found.witnesses.push(one_based(&target.index_of(f)));
            found.notes.push("sampled evaluation disagrees with the exact solution".to_string());
        }
        found
    }

    fn cached(cell: &Cell, f: impl FnOnce() -> Result<Tensor, ClassifyError>) -> Result<&Tensor, ClassifyError> {
        cell.get_or_init(f).as_ref().map_err(Clone::clone)
    }

    fn op(&self, op: Op, kind: Kind) -> Result<&Tensor, ClassifyError> {
        let b = self.bundle;
        Self::cached(&self.ops[&(op, kind)], || {
            let h = b.tensor(kind);
            Ok(match op {
                Op::DotR => dot(b.riemann(), h, b.inverse())?,
                Op::DotC => dot(b.tensor(Kind::Weyl), h, b.inverse())?,
                Op::QG => tachibana(b.g(), h)?,
                Op::QS => tachibana(b.ricci(), h)?,
            })
        })
    }

    /// `D·H` for `D ∈ {R, C}`.
    pub fn dot(&self, d: Kind, h: Kind) -> Result<&Tensor, ClassifyError> {
        match d {
            Kind::Riemann => self.op(Op::DotR, h),
            Kind::Weyl => self.op(Op::DotC, h),
            other => Err(ClassifyError::Other(format!("no cached action of {}", other.symbol()))),
        }
    }

    /// `Q(A,H)` for `A ∈ {g, S}`.
    pub fn q(&self, a: Kind, h: Kind) -> Result<&Tensor, ClassifyError> {
        match a {
            Kind::Metric => self.op(Op::QG, h),
            Kind::Ricci => self.op(Op::QS, h),
            other => Err(ClassifyError::Other(format!("no cached Q({},·)", other.symbol()))),
        }
    }

    /// `A∧E` for `A, E ∈ {g, S, S²}`.
    pub fn kn(&self, a: Kind, e: Kind) -> Result<&Tensor, ClassifyError> {
        let b = self.bundle;
        Self::cached(&self.kn[&(a, e)], || Ok(kulkarni_nomizu(b.tensor(a), b.tensor(e))?))
    }

    /// `g, S, S², …, S^n` as (0,2) tensors.
    pub fn ricci_powers(&self) -> &[Tensor] {
        self.powers.get_or_init(|| {
            let b = self.bundle;
            let mut out = vec![b.g().clone(), b.ricci().clone()];
            for _ in 2..=b.dim() {
                let last = out.last().expect("nonempty");
                out.push(compose(last, b.inverse(), b.ricci()));
            }
            out
        })
    }

    pub fn ricci_spectrum(&self) -> &Spectrum<Expr> {
        self.spectrum.get_or_init(|| {
            let m = endomorphism(self.bundle.inverse(), self.bundle.ricci());
            spectrum(&m, |e: &Expr| e.sqrt_exact())
        })
    }

    pub fn energy(&self) -> Result<&energy::EnergyMomentum<'a>, ClassifyError> {
        self.energy
            .get_or_init(|| {
                let constants = energy::FieldConstants::from_context(self.bundle.metric().context());
                Ok(energy::EnergyMomentum::new(self.bundle, constants))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Runs the selected detectors; errors become inconclusive verdicts.
    pub fn run(&self, selection: &Selection) -> Vec<Verdict> {
        let detectors: Vec<Detector<'_>> = self
            .detectors()
            .into_iter()
            .filter(|d| selection.wants(&d.name, d.group))
            .collect();
        detectors
            .par_iter()
            .map(|d| {
                let finding = match (d.run)() {
                    Ok(f) => f,
                    Err(e) => Finding::new(Status::Inconclusive).note(format!("detector error: {e}")),
                };
                Verdict::from_finding(&d.name, d.group, &d.relation, finding)
            })
            .collect()
    }

    /// Every detector name in battery order.
    pub fn detector_names(&self) -> Vec<(String, Group)> {
        self.detectors().into_iter().map(|d| (d.name, d.group)).collect()
    }

    fn detectors<'s>(&'s self) -> Vec<Detector<'s>> {
        let mut out: Vec<Detector<'s>> = Vec::new();
        let mut add = |name: String, group: Group, relation: String, run: Run<'s>| {
            out.push(Detector {
                name,
                group,
                relation,
                run,
            })
        };
        let b = self.bundle;

        // semisymmetry
        for h in ACTED {
            let name = match h {
                Kind::Riemann => "semisymmetric".to_string(),
                k => format!("{}-semisymmetric", adjective(k)),
            };
            add(
                name,
                Group::Semisymmetry,
                format!("R·{} = 0", h.symbol()),
                Box::new(move || Ok(vanishing(self.dot(Kind::Riemann, h)?))),
            );
        }

        // pseudosymmetry with Q(g,·) and Q(S,·)
        for h in ACTED {
            add(
                format!("{}-pseudosymmetric", adjective(h)),
                Group::Pseudosymmetry,
                format!("R·{0} = L Q(g,{0})", h.symbol()),
                Box::new(move || self.propto(self.dot(Kind::Riemann, h)?, self.q(Kind::Metric, h)?)),
            );
        }
        for h in ACTED {
            let name = match h {
                Kind::Riemann => "ricci-generalized-pseudosymmetric".to_string(),
                k => format!("ricci-generalized-pseudosymmetric-{}", k.symbol()),
            };
            add(
                name,
                Group::Pseudosymmetry,
                format!("R·{0} = L Q(S,{0})", h.symbol()),
                Box::new(move || self.propto(self.dot(Kind::Riemann, h)?, self.q(Kind::Ricci, h)?)),
            );
        }

        // C·H against Q(g,H)
        for h in ACTED {
            add(
                format!("weyl-pseudosymmetric-{}", h.symbol()),
                Group::WeylPseudosymmetry,
                format!("C·{0} = L Q(g,{0})", h.symbol()),
                Box::new(move || self.propto(self.dot(Kind::Weyl, h)?, self.q(Kind::Metric, h)?)),
            );
        }

        // mixed linear identities
        add(
            "mixed-RR-QSR".to_string(),
            Group::Mixed,
            "R·R − Q(S,R) = L Q(g,C)".to_string(),
            Box::new(move || {
                let target = self.dot(Kind::Riemann, Kind::Riemann)?.sub(self.q(Kind::Ricci, Kind::Riemann)?)?;
                self.solve(&target, &[("L".to_string(), self.q(Kind::Metric, Kind::Weyl)?.clone())])
            }),
        );
        add(
            "mixed-CR-RC-R".to_string(),
            Group::Mixed,
            "C·R − R·C = L1 Q(g,R) + L2 Q(S,R)".to_string(),
            Box::new(move || {
                let target = self.dot(Kind::Weyl, Kind::Riemann)?.sub(self.dot(Kind::Riemann, Kind::Weyl)?)?;
                self.solve(
                    &target,
                    &[
                        ("L1".to_string(), self.q(Kind::Metric, Kind::Riemann)?.clone()),
                        ("L2".to_string(), self.q(Kind::Ricci, Kind::Riemann)?.clone()),
                    ],
                )
            }),
        );
        add(
            "mixed-CR-RC-C".to_string(),
            Group::Mixed,
            "C·R − R·C = L1 Q(g,C) + L2 Q(S,C)".to_string(),
            Box::new(move || {
                let target = self.dot(Kind::Weyl, Kind::Riemann)?.sub(self.dot(Kind::Riemann, Kind::Weyl)?)?;
                self.solve(
                    &target,
                    &[
                        ("L1".to_string(), self.q(Kind::Metric, Kind::Weyl)?.clone()),
                        ("L2".to_string(), self.q(Kind::Ricci, Kind::Weyl)?.clone()),
                    ],
                )
            }),
        );

        // Roter and generalized Roter
        add(
            "roter".to_string(),
            Group::Roter,
            "R = N1 S∧S + N2 g∧S + N3 g∧g".to_string(),
            Box::new(move || self.roter()),
        );
        add(
            "generalized-roter".to_string(),
            Group::Roter,
            "R = L1 g∧g + L2 g∧S + L3 S∧S + L4 g∧S² + L5 S∧S² + L6 S²∧S²".to_string(),
            Box::new(move || {
                use Kind::{Metric as G, Ricci as S, Ricci2 as S2};
                let pairs = [(G, G), (G, S), (S, S), (G, S2), (S, S2), (S2, S2)];
                let mut basis = Vec::new();
                for (k, (x, y)) in pairs.into_iter().enumerate() {
                    basis.push((format!("L{}", k + 1), self.kn(x, y)?.clone()));
                }
                self.solve(b.riemann(), &basis)
            }),
        );

        // Einstein hierarchy
        add(
            "einstein".to_string(),
            Group::Einstein,
            "S = L g".to_string(),
            Box::new(move || self.propto(b.ricci(), b.g())),
        );
        add(
            "quasi-einstein".to_string(),
            Group::Einstein,
            "rank(S − αg) ≤ 1".to_string(),
            Box::new(move || Ok(self.quasi_einstein(1))),
        );
        add(
            "2-quasi-einstein".to_string(),
            Group::Einstein,
            "rank(S − αg) ≤ 2".to_string(),
            Box::new(move || Ok(self.quasi_einstein(2))),
        );
        for (kind, relation) in [
            (DecompositionKind::Chaki, "S = αg + βΠ⊗Π + γ(Π⊗Φ + Φ⊗Π)"),
            (DecompositionKind::DeGhosh, "S = αg + βΠ⊗Π + γΦ⊗Φ"),
            (DecompositionKind::PseudoQuasi, "S = αg + βΠ⊗Π + γE, tr E = 0, E(X,V) = 0"),
        ] {
            add(
                kind.id().to_string(),
                Group::Einstein,
                relation.to_string(),
                Box::new(move || {
                    let found: Vec<&Decomposition> =
                        self.hints.decompositions.iter().filter(|d| d.kind == kind).collect();
                    match found.first() {
                        None => Ok(Finding::new(Status::Inconclusive).note("no candidate decomposition supplied")),
                        Some(d) => Ok(self.decomposition(d)),
                    }
                }),
            );
        }

        add(
            "ein-level".to_string(),
            Group::EinLevel,
            "g, S, …, S^k linearly dependent".to_string(),
            Box::new(move || Ok(self.ein_level())),
        );

        // derivative classes
        add(
            "ricci-parallel".to_string(),
            Group::Derivatives,
            "∇S = 0".to_string(),
            Box::new(move || Ok(vanishing(b.nabla(Kind::Ricci)?))),
        );
        add(
            "ricci-codazzi".to_string(),
            Group::Derivatives,
            "S_{ij,k} = S_{ik,j}".to_string(),
            Box::new(move || Ok(vanishing(&codazzi_residual(b.nabla(Kind::Ricci)?)))),
        );
        add(
            "ricci-cyclic-parallel".to_string(),
            Group::Derivatives,
            "S_{ij,k} + S_{jk,i} + S_{ki,j} = 0".to_string(),
            Box::new(move || Ok(vanishing(&cyclic_residual(b.nabla(Kind::Ricci)?)))),
        );
        add(
            "constant-scalar-curvature".to_string(),
            Group::Derivatives,
            "dκ = 0".to_string(),
            Box::new(move || {
                let n = b.dim();
                let grad = ComponentTensor::try_from_fn(n, 1, |i| b.metric().partial(b.scalar(), i[0]))
                    .map_err(|e| ClassifyError::Curvature(e.into()))?;
                Ok(vanishing(&grad))
            }),
        );
        for d in CURVATURES {
            add(
                symmetric_name(d),
                Group::Derivatives,
                format!("∇{} = 0", d.symbol()),
                Box::new(move || Ok(vanishing(b.nabla(d)?))),
            );
        }

        // compatibility
        for d in [Kind::Riemann, Kind::Weyl, Kind::Concircular, Kind::Conharmonic, Kind::Projective] {
            add(
                format!("ricci-compatible-{}", d.symbol()),
                Group::Compatibility,
                format!("S is {}-compatible", d.symbol()),
                Box::new(move || Ok(vanishing(&compatibility(b.ricci(), b.tensor(d), b.inverse())))),
            );
        }
        for (label, e) in &self.hints.compatible_tensors {
            for d in [Kind::Riemann, Kind::Weyl, Kind::Concircular, Kind::Conharmonic] {
                add(
                    format!("compatible-{}[{}]", d.symbol(), label),
                    Group::Compatibility,
                    format!("{label} is {}-compatible", d.symbol()),
                    Box::new(move || Ok(vanishing(&compatibility(e, b.tensor(d), b.inverse())))),
                );
            }
        }
        for (label, form) in &self.hints.compatible_forms {
            for d in [Kind::Riemann, Kind::Weyl] {
                add(
                    format!("compatible-{}[{}]", d.symbol(), label),
                    Group::Compatibility,
                    format!("{label} ⊗ {label} is {}-compatible", d.symbol()),
                    Box::new(move || {
                        let n = b.dim();
                        let sq = ComponentTensor::from_fn(n, 2, |i| form[i[0]].mul(&form[i[1]]));
                        Ok(vanishing(&compatibility(&sq, b.tensor(d), b.inverse())))
                    }),
                );
            }
        }

        // recurrences
        for d in CURVATURES {
            add(
                recurrent_name(d),
                Group::Recurrence,
                format!("∇{0} = Π⊗{0}", d.symbol()),
                Box::new(move || {
                    let t = b.tensor(d);
                    self.solve_recurrence(b.nabla(d)?, &["Pi"], &[&|m| slot_delta(t, m, None)])
                }),
            );
        }
        for d in CURVATURES {
            add(
                format!("curvature-2-forms-recurrent-{}", d.symbol()),
                Group::Recurrence,
                format!("cyclic ∇{0} = cyclic Π⊗{0}", d.symbol()),
                Box::new(move || {
                    let t = b.tensor(d);
                    let target = two_form_cyclic(b.nabla(d)?);
                    self.solve_recurrence(&target, &["Pi"], &[&|m| two_form_basis(t, m)])
                }),
            );
        }
        add(
            "ricci-1-forms-recurrent".to_string(),
            Group::Recurrence,
            "S_{jx,i} − S_{ix,j} = Π_i S_{jx} − Π_j S_{ix}".to_string(),
            Box::new(move || {
                let s = b.ricci();
                let ds = b.nabla(Kind::Ricci)?;
                let n = b.dim();
                let target = ComponentTensor::from_fn(n, 3, |i| {
                    ds.get(&[i[1], i[2], i[0]]).sub(ds.get(&[i[0], i[2], i[1]]))
                });
                let basis = |m: usize| {
                    ComponentTensor::from_fn(n, 3, |i| {
                        let mut acc = Expr::zero();
                        if i[0] == m {
                            acc = acc.add(s.get(&[i[1], i[2]]));
                        }
                        if i[1] == m {
                            acc = acc.sub(s.get(&[i[0], i[2]]));
                        }
                        acc
                    })
                };
                self.solve_recurrence(&target, &["Pi"], &[&basis])
            }),
        );
        for (name, forms) in [
            ("super-generalized-recurrent", &["Pi", "Phi", "Psi", "Theta"][..]),
            ("hyper-generalized-recurrent", &["Pi", "Psi"][..]),
            ("weakly-generalized-recurrent", &["Pi", "Phi"][..]),
        ] {
            let relation = match forms.len() {
                4 => "∇R = Π⊗R + Φ⊗S∧S + Ψ⊗g∧S + Θ⊗g∧g",
                _ if forms[1] == "Psi" => "∇R = Π⊗R + Ψ⊗g∧S",
                _ => "∇R = Π⊗R + Φ⊗S∧S",
            };
            add(
                name.to_string(),
                Group::Recurrence,
                relation.to_string(),
                Box::new(move || {
                    let mut tensors: Vec<&Tensor> = Vec::new();
                    for f in forms {
                        tensors.push(match *f {
                            "Pi" => b.riemann(),
                            "Phi" => self.kn(Kind::Ricci, Kind::Ricci)?,
                            "Psi" => self.kn(Kind::Metric, Kind::Ricci)?,
                            _ => self.kn(Kind::Metric, Kind::Metric)?,
                        });
                    }
                    let builders: Vec<Box<dyn Fn(usize) -> Tensor + Sync>> = tensors
                        .iter()
                        .map(|t| {
                            let t: &Tensor = t;
                            Box::new(move |m| slot_delta(t, m, None)) as Box<dyn Fn(usize) -> Tensor + Sync>
                        })
                        .collect();
                    let refs: Vec<&(dyn Fn(usize) -> Tensor + Sync)> = builders.iter().map(|f| f.as_ref()).collect();
                    self.solve_recurrence(b.nabla(Kind::Riemann)?, forms, &refs)
                }),
            );
        }

        // weak symmetry
        for d in CURVATURES {
            let sym = d.symbol();
            add(
                format!("weakly-symmetric-{sym}"),
                Group::WeakSymmetry,
                format!("∇{sym} = Π⊗{sym} + Φ, Φ̄, Ψ, Ψ̄ terms"),
                Box::new(move || self.weak_symmetry(d, false)),
            );
            add(
                format!("chaki-pseudosymmetric-{sym}"),
                Group::WeakSymmetry,
                format!("weak {sym}-symmetry with Π/2 = Φ = Φ̄ = Ψ = Ψ̄"),
                Box::new(move || self.weak_symmetry(d, true)),
            );
        }
        add(
            "weakly-ricci-symmetric".to_string(),
            Group::WeakSymmetry,
            "S_{ij,l} = Π_l S_{ij} + Φ_i S_{lj} + Ψ_j S_{il}".to_string(),
            Box::new(move || self.weak_ricci(false)),
        );
        add(
            "chaki-pseudo-ricci-symmetric".to_string(),
            Group::WeakSymmetry,
            "weak Ricci symmetry with Π/2 = Φ = Ψ".to_string(),
            Box::new(move || self.weak_ricci(true)),
        );

        // divergences
        for d in CURVATURES {
            add(
                format!("divergence-free-{}", d.symbol()),
                Group::Divergence,
                format!("div {} = 0", d.symbol()),
                Box::new(move || Ok(vanishing(b.divergence(d)?))),
            );
        }

        // energy-momentum tensor
        for (name, relation, which) in [
            ("energy-momentum-divergence-free", "div T = 0", 0),
            ("energy-momentum-parallel", "∇T = 0", 1),
            ("energy-momentum-codazzi", "T_{ij,k} = T_{ik,j}", 2),
            ("energy-momentum-cyclic-parallel", "T_{ij,k} + T_{jk,i} + T_{ki,j} = 0", 3),
        ] {
            add(
                name.to_string(),
                Group::EnergyMomentum,
                relation.to_string(),
                Box::new(move || {
                    let em = self.energy()?;
                    Ok(match which {
                        0 => vanishing(em.divergence()?),
                        1 => vanishing(em.nabla()?),
                        2 => vanishing(&codazzi_residual(em.nabla()?)),
                        _ => vanishing(&cyclic_residual(em.nabla()?)),
                    })
                }),
            );
        }
        add(
            "energy-momentum-parallel-condition".to_string(),
            Group::EnergyMomentum,
            "∇T = 0, Codazzi and cyclic parallel under the supplied parameter condition".to_string(),
            Box::new(move || match &self.hints.parallel_energy_condition {
                None => Ok(Finding::new(Status::Inconclusive).note("no parameter condition supplied")),
                Some(c) => Ok(energy::conditional_parallel(self.energy()?, c)?),
            }),
        );
        add(
            "energy-momentum-pseudosymmetric".to_string(),
            Group::EnergyMomentum,
            "R·T = L Q(g,T)".to_string(),
            Box::new(move || {
                let em = self.energy()?;
                let rt = dot(b.riemann(), em.tensor(), b.inverse())?;
                let qt = tachibana(b.g(), em.tensor())?;
                self.propto(&rt, &qt)
            }),
        );
        out
    }

    fn roter(&self) -> Result<Finding, ClassifyError> {
        let basis = vec![
            ("N1".to_string(), self.kn(Kind::Ricci, Kind::Ricci)?.clone()),
            ("N2".to_string(), self.kn(Kind::Metric, Kind::Ricci)?.clone()),
            ("N3".to_string(), self.kn(Kind::Metric, Kind::Metric)?.clone()),
        ];
        let mut found = span(self.bundle.riemann(), &basis)?;
        if let (Some(reference), Status::HoldsWithData) = (&self.hints.roter_reference, found.status) {
            for (k, r) in reference.iter().enumerate() {
                let label = format!("N{}", k + 1);
                let agrees = found.datum(&label) == Some(r);
                found.notes.push(if agrees {
                    format!("{label} agrees with the reference value")
                } else {
                    format!(
                        "{label} differs from the reference value {}",
                        self.bundle.metric().context().format(r)
                    )
                });
            }
        }
        Ok(found)
    }

    fn quasi_einstein(&self, k: usize) -> Finding {
        let b = self.bundle;
        let spec = self.ricci_spectrum();
        let ctx = b.metric().context();
        let mut best: Option<(usize, Vec<Expr>)> = None;
        let mut notes = Vec::new();
        let mut witness = None;
        for ev in &spec.eigenvalues {
            let m = shifted(b, &ev.value);
            let rank = rank_by_minors(&m);
            notes.push(format!("rank(S − αg) = {rank} for α = {}", ctx.format(&ev.value)));
            if rank > k && witness.is_none() {
                witness = minors(&m, k + 1).into_iter().find(|(_, _, v)| !v.is_zero());
            }
            match &mut best {
                Some((r, list)) if *r == rank => list.push(ev.value.clone()),
                Some((r, _)) if *r < rank => {}
                _ => best = Some((rank, vec![ev.value.clone()])),
            }
        }
        let mut found = match &best {
            Some((r, alphas)) if *r <= k => {
                let mut f = Finding::new(Status::HoldsWithData);
                for (i, a) in alphas.iter().enumerate() {
                    f.data.push((format!("alpha{}", i + 1), a.clone()));
                }
                f.data.push(("rank".to_string(), Expr::from_int(*r as i64)));
                f
            }
            _ if spec.incomplete => Finding::new(Status::Inconclusive)
                .note("characteristic polynomial has factors without exact roots in the field"),
            _ => {
                let mut f = Finding::new(Status::Fails);
                if let Some((rows, cols, v)) = witness {
                    let pos: Vec<usize> = rows.iter().chain(cols.iter()).map(|i| i + 1).collect();
                    f.witnesses.push(pos);
                    f.data.push(("minor".to_string(), v));
                }
                f
            }
        };
        if spec.incomplete && found.status != Status::Inconclusive {
            found.notes.push("spectrum incomplete: some eigenvalues are not in the field".to_string());
        }
        found.notes.extend(notes);
        found
    }

    fn decomposition(&self, d: &Decomposition) -> Finding {
        let b = self.bundle;
        let n = b.dim();
        let (s, g) = (b.ricci(), b.g());
        let ctx_data = |f: &mut Finding| {
            f.data.push(("alpha".to_string(), d.alpha.clone()));
            f.data.push(("beta".to_string(), d.beta.clone()));
            f.data.push(("gamma".to_string(), d.gamma.clone()));
            for (i, p) in d.pi.iter().enumerate() {
                f.data.push((format!("Pi[{}]", i + 1), p.clone()));
            }
            for (i, p) in d.phi.iter().enumerate() {
                f.data.push((format!("Phi[{}]", i + 1), p.clone()));
            }
        };
        if d.pi.len() != n || (d.kind != DecompositionKind::PseudoQuasi && d.phi.len() != n) {
            return Finding::new(Status::Inconclusive).note("candidate 1-forms have the wrong length");
        }
        let norm = |v: &[Expr]| {
            let mut acc = Expr::zero();
            for i in 0..n {
                for j in 0..n {
                    acc = acc.add(&b.inverse().get(&[i, j]).mul(&v[i]).mul(&v[j]));
                }
            }
            acc
        };
        let base = |i: usize, j: usize| {
            s.get(&[i, j])
                .sub(&d.alpha.mul(g.get(&[i, j])))
                .sub(&d.beta.mul(&d.pi[i]).mul(&d.pi[j]))
        };
        let mut found = match d.kind {
            DecompositionKind::Chaki | DecompositionKind::DeGhosh => {
                let residual = ComponentTensor::from_fn(n, 2, |i| {
                    let (a, c) = (i[0], i[1]);
                    let extra = if d.kind == DecompositionKind::Chaki {
                        d.pi[a].mul(&d.phi[c]).add(&d.phi[a].mul(&d.pi[c]))
                    } else {
                        d.phi[a].mul(&d.phi[c])
                    };
                    base(a, c).sub(&d.gamma.mul(&extra))
                });
                vanishing(&residual)
            }
            DecompositionKind::PseudoQuasi => match d.gamma.inv() {
                None => Finding::new(Status::Inconclusive).note("γ vanishes identically"),
                Some(ginv_gamma) => {
                    let e = ComponentTensor::from_fn(n, 2, |i| base(i[0], i[1]).mul(&ginv_gamma));
                    let trace = contract(&e, 0, 1, b.inverse()).expect("rank 2").get(&[]).clone();
                    let v: Vec<Expr> = (0..n)
                        .map(|i| {
                            (0..n).fold(Expr::zero(), |acc, j| acc.add(&b.inverse().get(&[i, j]).mul(&d.pi[j])))
                        })
                        .collect();
                    let ev = ComponentTensor::from_fn(n, 1, |i| {
                        (0..n).fold(Expr::zero(), |acc, j| acc.add(&e.get(&[i[0], j]).mul(&v[j])))
                    });
                    if !trace.is_zero() {
                        Finding::failing(&[], trace).note("E is not trace free")
                    } else {
                        match first_nonzero(&ev) {
                            None => Finding::new(Status::Holds),
                            Some(idx) => {
                                Finding::failing(&idx, ev.get(&idx).clone()).note("E(X,V) does not vanish")
                            }
                        }
                    }
                }
            },
        };
        if found.status == Status::Holds {
            found.status = Status::HoldsWithData;
        }
        let mut with = Finding::new(found.status);
        ctx_data(&mut with);
        with.data.push(("|Pi|".to_string(), norm(&d.pi)));
        if d.kind != DecompositionKind::PseudoQuasi {
            with.data.push(("|Phi|".to_string(), norm(&d.phi)));
        }
        with.data.extend(found.data);
        with.witnesses = found.witnesses;
        with.notes = found.notes;
        with
    }

    fn ein_level(&self) -> Finding {
        let powers = self.ricci_powers();
        let rows: Vec<Vec<Expr>> = powers.iter().map(|t| t.components().to_vec()).collect();
        for k in 1..powers.len() {
            if rank_of_rows(&rows[..=k]) <= k {
                let mut f = Finding::new(Status::HoldsWithData);
                f.data.push(("k".to_string(), Expr::from_int(k as i64)));
                let basis: Vec<(String, Tensor)> = (0..k)
                    .map(|j| (format!("c{j}"), powers[j].clone()))
                    .collect();
                if let Ok(sol) = span(&powers[k], &basis) {
                    if sol.status == Status::HoldsWithData {
                        f.data.extend(sol.data);
                        f.notes.push(format!("S^{k} = Σ c_j S^j with S^0 = g"));
                    }
                }
                return f;
            }
        }
        Finding::new(Status::Inconclusive).note("no dependency up to the dimension")
    }

    fn weak_symmetry(&self, d: Kind, chaki: bool) -> Result<Finding, ClassifyError> {
        let b = self.bundle;
        let t = b.tensor(d);
        let nabla = b.nabla(d)?;
        let pi = |m: usize| slot_delta(t, m, None);
        let slot = |s: usize| move |m: usize| slot_delta(t, m, Some(s));
        let theta = |m: usize| {
            let parts: Vec<Tensor> = (0..4).map(|s| slot_delta(t, m, Some(s))).collect();
            let refs: Vec<(Expr, &Tensor)> = parts.iter().map(|p| (Expr::one(), p)).collect();
            ComponentTensor::linear_combination(&refs).expect("same shape")
        };
        let generalized = t.symmetry() == crate::tensor::Symmetry::GeneralizedCurvature;
        if chaki {
            let a = |m: usize| {
                pi(m)
                    .scale(&Expr::from_int(2))
                    .add(&theta(m))
                    .expect("same shape")
            };
            let mut f = self.solve_forms(nabla, &["A"], &[&a])?;
            f.notes.push("Π = 2A and Φ = Φ̄ = Ψ = Ψ̄ = A".to_string());
            return Ok(f);
        }
        if generalized {
            let mut f = self.solve_forms(nabla, &["Pi", "Theta"], &[&pi, &theta])?;
            f.notes.push("Φ = Φ̄ = Ψ = Ψ̄ = Θ".to_string());
            Ok(f)
        } else {
            let (s0, s1, s2, s3) = (slot(0), slot(1), slot(2), slot(3));
            self.solve_forms(
                nabla,
                &["Pi", "Phi", "PhiBar", "Psi", "PsiBar"],
                &[&pi, &s0, &s1, &s2, &s3],
            )
        }
    }

    fn weak_ricci(&self, chaki: bool) -> Result<Finding, ClassifyError> {
        let b = self.bundle;
        let n = b.dim();
        let s = b.ricci();
        let nabla = b.nabla(Kind::Ricci)?;
        let pi = |m: usize| slot_delta(s, m, None);
        // Φ_i S_{lj} + Φ_j S_{il}: both slots share one form for a symmetric S
        let theta = |m: usize| {
            ComponentTensor::from_fn(n, 3, |i| {
                let mut acc = Expr::zero();
                if i[0] == m {
                    acc = acc.add(s.get(&[i[2], i[1]]));
                }
                if i[1] == m {
                    acc = acc.add(s.get(&[i[0], i[2]]));
                }
                acc
            })
        };
        if chaki {
            let a = |m: usize| pi(m).scale(&Expr::from_int(2)).add(&theta(m)).expect("same shape");
            let mut f = self.solve_forms(nabla, &["A"], &[&a])?;
            f.notes.push("Π = 2A and Φ = Ψ = A".to_string());
            Ok(f)
        } else {
            let mut f = self.solve_forms(nabla, &["Pi", "Theta"], &[&pi, &theta])?;
            f.notes.push("Φ and Ψ enter through Θ = (Φ + Ψ)/2".to_string());
            Ok(f)
        }
    }
}

/// `S − αg` as a matrix.
fn shifted(b: &Bundle, alpha: &Expr) -> Vec<Vec<Expr>> {
    let s = as_matrix(b.ricci());
    let g = as_matrix(b.g());
    s.iter()
        .zip(&g)
        .map(|(sr, gr)| sr.iter().zip(gr).map(|(x, y)| x.sub(&alpha.mul(y))).collect())
        .collect()
}

/// `X_{ij,k} − X_{ik,j}` for a derivative array `[i, j, k]`.
pub fn codazzi_residual(nabla: &Tensor) -> Tensor {
    ComponentTensor::from_fn(nabla.dim(), 3, |i| {
        nabla.get(&[i[0], i[1], i[2]]).sub(nabla.get(&[i[0], i[2], i[1]]))
    })
}

/// `X_{ij,k} + X_{jk,i} + X_{ki,j}`.
pub fn cyclic_residual(nabla: &Tensor) -> Tensor {
    ComponentTensor::from_fn(nabla.dim(), 3, |i| {
        nabla
            .get(&[i[0], i[1], i[2]])
            .add(nabla.get(&[i[1], i[2], i[0]]))
            .add(nabla.get(&[i[2], i[0], i[1]]))
    })
}

/// Cyclic sum `D(ℰX₁,X,X₂,X₃) + D(ℰX₂,X,X₃,X₁) + D(ℰX₃,X,X₁,X₂)`, indexed `[x₁, x, x₂, x₃]`.
pub fn compatibility(e: &Tensor, d: &Tensor, ginv: &Tensor) -> Tensor {
    let n = d.dim();
    let endo = crate::algebra::raise_first(ginv, e);
    let term = |a: usize, x: usize, b: usize, c: usize| {
        let mut acc = Expr::zero();
        for p in 0..n {
            let ep = endo.get(&[p, a]);
            if ep.is_zero() {
                continue;
            }
            let v = d.get(&[p, x, b, c]);
            if !v.is_zero() {
                acc = acc.add(&ep.mul(v));
            }
        }
        acc
    };
    ComponentTensor::from_fn(n, 4, |i| {
        let (x1, x, x2, x3) = (i[0], i[1], i[2], i[3]);
        term(x1, x, x2, x3).add(&term(x2, x, x3, x1)).add(&term(x3, x, x1, x2))
    })
}

/// Basis tensor for one component of a 1-form in a rank-(k+1) identity
/// whose last slot is the derivative slot.
///
/// `None`: `δ_{m l} D_{i…}` (the form pairs with the derivative slot).
/// `Some(s)`: `δ_{m i_s} D_{…l…}` (the form takes slot `s`, the derivative
/// index moves into it).
pub fn slot_delta(d: &Tensor, m: usize, slot: Option<usize>) -> Tensor {
    let k = d.rank();
    ComponentTensor::from_fn(d.dim(), k + 1, |i| {
        let l = i[k];
        match slot {
            None => {
                if l == m {
                    d.get(&i[..k]).clone()
                } else {
                    Expr::zero()
                }
            }
            Some(s) => {
                if i[s] != m {
                    return Expr::zero();
                }
                let mut j: Index = i[..k].iter().copied().collect();
                j[s] = l;
                d.get(&j).clone()
            }
        }
    })
}

/// `(∇_{X₁}D)(X₂,X₃,X,Y) + cyclic(X₁,X₂,X₃)`, indexed `[i₁, i₂, i₃, x, y]`.
pub fn two_form_cyclic(nabla: &Tensor) -> Tensor {
    ComponentTensor::from_fn(nabla.dim(), 5, |i| {
        let (i1, i2, i3, x, y) = (i[0], i[1], i[2], i[3], i[4]);
        nabla
            .get(&[i2, i3, x, y, i1])
            .add(nabla.get(&[i3, i1, x, y, i2]))
            .add(nabla.get(&[i1, i2, x, y, i3]))
    })
}

fn two_form_basis(d: &Tensor, m: usize) -> Tensor {
    ComponentTensor::from_fn(d.dim(), 5, |i| {
        let (i1, i2, i3, x, y) = (i[0], i[1], i[2], i[3], i[4]);
        let mut acc = Expr::zero();
        if i1 == m {
            acc = acc.add(d.get(&[i2, i3, x, y]));
        }
        if i2 == m {
            acc = acc.add(d.get(&[i3, i1, x, y]));
        }
        if i3 == m {
            acc = acc.add(d.get(&[i1, i2, x, y]));
        }
        acc
    })
}

/// Builds the bundle and runs the battery.
pub fn full_report(
    metric: Metric,
    hints: &Hints,
    settings: Settings,
    selection: &Selection,
) -> Result<ClassificationReport, CurvatureError> {
    let name = metric.name().to_string();
    let bundle = Bundle::new(metric)?;
    let classifier = Classifier::new(&bundle, hints, settings);
    Ok(ClassificationReport {
        metric: name,
        settings,
        verdicts: classifier.run(selection),
    })
}
