//! Conditional identity checking under a differential constraint.
//!
//! A constraint fixes some parameters and solves one jet symbol, say
//! `f33 = ρ`, in terms of the others. Every derivative of `f33` reachable
//! through the jet table is then rewritten by differentiating `ρ` and
//! reducing again, so an expression reduces to zero exactly when it vanishes
//! on every solution of the constraint.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Mutex;

use pseudosym_symbolic::{Context, Expr, JetRule, SymbolicError, Var};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstraintError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error("the constraint makes a denominator vanish")]
    Pole,
    #[error("the solved jet `{0}` reappears in its own prolongation")]
    Cyclic(String),
}

#[derive(Debug, Clone)]
pub struct JetConstraint {
    description: String,
    fixed: Vec<(Var, Expr)>,
    jet: Var,
    rhs: Expr,
}

impl JetConstraint {
    /// `fixed` pins parameters; `jet = rhs` solves one jet symbol.
    pub fn new(
        ctx: &Context,
        fixed: Vec<(Var, Expr)>,
        jet: &str,
        rhs: Expr,
        description: &str,
    ) -> Result<Self, SymbolicError> {
        Ok(JetConstraint {
            description: description.to_string(),
            fixed,
            jet: ctx.var(jet)?,
            rhs,
        })
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn reducer<'a>(&'a self, ctx: &'a Context) -> Reducer<'a> {
        // breadth-first: each prolonged jet remembers the jet and coordinate it came from
        let mut parent = HashMap::new();
        let mut seen = HashSet::from([self.jet]);
        let mut queue = VecDeque::from([self.jet]);
        let coords = ctx.coordinates();
        while let Some(j) = queue.pop_front() {
            for &x in &coords {
                if let Some(JetRule::To(k)) = ctx.jets().rule(j, x) {
                    if seen.insert(k) {
                        parent.insert(k, (j, x));
                        queue.push_back(k);
                    }
                }
            }
        }
        Reducer {
            constraint: self,
            ctx,
            parent,
            reachable: seen,
            memo: Mutex::new(HashMap::new()),
        }
    }
}

pub struct Reducer<'a> {
    constraint: &'a JetConstraint,
    ctx: &'a Context,
    parent: HashMap<Var, (Var, Var)>,
    reachable: HashSet<Var>,
    memo: Mutex<HashMap<Var, Expr>>,
}

impl Reducer<'_> {
    /// Normal form of `e` under the constraint.
    pub fn reduce(&self, e: &Expr) -> Result<Expr, ConstraintError> {
        let mut out = e.clone();
        for (v, value) in &self.constraint.fixed {
            out = out.substitute(*v, value).ok_or(ConstraintError::Pole)?;
        }
        self.reduce_jets(out, &mut Vec::new())
    }

    fn reduce_jets(&self, mut e: Expr, stack: &mut Vec<Var>) -> Result<Expr, ConstraintError> {
        let hits: Vec<Var> = e.vars().into_iter().filter(|v| self.reachable.contains(v)).collect();
        for v in hits {
            let value = self.rule(v, stack)?;
            e = e.substitute(v, &value).ok_or(ConstraintError::Pole)?;
        }
        Ok(e)
    }

    fn rule(&self, v: Var, stack: &mut Vec<Var>) -> Result<Expr, ConstraintError> {
        if let Some(r) = self.memo.lock().expect("memo lock").get(&v) {
            return Ok(r.clone());
        }
        if stack.contains(&v) {
            return Err(ConstraintError::Cyclic(self.ctx.name(v).to_string()));
        }
        stack.push(v);
        let raw = match self.parent.get(&v) {
            None => {
                let mut r = self.constraint.rhs.clone();
                for (p, value) in &self.constraint.fixed {
                    r = r.substitute(*p, value).ok_or(ConstraintError::Pole)?;
                }
                r
            }
            Some(&(p, x)) => {
                let base = self.rule(p, stack)?;
                self.ctx.differentiate(&base, x)?
            }
        };
        let reduced = self.reduce_jets(raw, stack)?;
        stack.pop();
        if reduced.contains_var(v) {
            return Err(ConstraintError::Cyclic(self.ctx.name(v).to_string()));
        }
        self.memo.lock().expect("memo lock").insert(v, reduced.clone());
        Ok(reduced)
    }
}
