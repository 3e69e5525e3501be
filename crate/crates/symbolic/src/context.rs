//! Symbol registry, jet tables and canonical printing.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coeff::Coefficient;
use crate::error::SymbolicError;
use crate::poly::{Monomial, Poly, Var};
use crate::ratfn::RatFn;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Coordinate,
    Parameter,
    Jet,
    Constant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub kind: SymbolKind,
    /// Coordinates a jet symbol depends on; empty for every other kind.
    pub depends_on: Vec<Var>,
}

/// Result of differentiating a single jet symbol.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum JetRule {
    Zero,
    To(Var),
}

/// Derivative rules `(jet, coordinate) -> jet | 0`.
///
/// A jet that depends on a coordinate but has no rule for it sits at the
/// materialized depth limit; differentiating it is an error.
#[derive(Clone, Debug, Default)]
pub struct JetTable {
    rules: HashMap<(Var, Var), JetRule>,
    depth: usize,
}

impl JetTable {
    pub fn rule(&self, jet: Var, coordinate: Var) -> Option<JetRule> {
        self.rules.get(&(jet, coordinate)).copied()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// A frozen symbol context. Expressions only carry `Var` indices; names,
/// kinds and derivative rules live here.
#[derive(Clone, Debug)]
pub struct Context {
    symbols: Vec<Symbol>,
    by_name: HashMap<String, Var>,
    jets: JetTable,
    aliases: Vec<(String, String)>,
}

impl Context {
    pub fn builder() -> ContextBuilder {
        ContextBuilder::default()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, v: Var) -> &Symbol {
        &self.symbols[v.index()]
    }

    pub fn name(&self, v: Var) -> &str {
        &self.symbols[v.index()].name
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.by_name.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<Var, SymbolicError> {
        self.lookup(name).ok_or_else(|| SymbolicError::UnknownSymbol {
            name: name.to_string(),
            position: 0,
        })
    }

    pub fn coordinates(&self) -> Vec<Var> {
        self.vars_of_kind(SymbolKind::Coordinate)
    }

    pub fn vars_of_kind(&self, kind: SymbolKind) -> Vec<Var> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.kind == kind)
            .map(|(i, _)| Var(i as u32))
            .collect()
    }

    pub fn alias(&self, name: &str) -> Option<&str> {
        self.aliases
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.as_str())
    }

    pub fn aliases(&self) -> &[(String, String)] {
        &self.aliases
    }

    pub fn jets(&self) -> &JetTable {
        &self.jets
    }

    /// Derivative of a single symbol with respect to a coordinate.
    pub fn symbol_derivative(&self, v: Var, x: Var) -> Result<JetRule, SymbolicError> {
        let sym = self.symbol(v);
        match sym.kind {
            SymbolKind::Coordinate => Ok(if v == x {
                JetRule::To(v)
            } else {
                JetRule::Zero
            }),
            SymbolKind::Parameter | SymbolKind::Constant => Ok(JetRule::Zero),
            SymbolKind::Jet => {
                if !sym.depends_on.contains(&x) {
                    return Ok(JetRule::Zero);
                }
                self.jets
                    .rule(v, x)
                    .ok_or_else(|| SymbolicError::DepthExceeded {
                        symbol: sym.name.clone(),
                        coordinate: self.name(x).to_string(),
                    })
            }
        }
    }

    /// Total derivative of `e` with respect to the coordinate `x`.
    pub fn differentiate<C: Coefficient>(
        &self,
        e: &RatFn<C>,
        x: Var,
    ) -> Result<RatFn<C>, SymbolicError> {
        if self.symbol(x).kind != SymbolKind::Coordinate {
            return Err(SymbolicError::NotACoordinate(self.name(x).to_string()));
        }
        let mut table: HashMap<Var, Poly<C>> = HashMap::new();
        for v in e.vars() {
            let d = match self.symbol_derivative(v, x)? {
                JetRule::Zero => Poly::zero(),
                JetRule::To(w) if self.symbol(v).kind == SymbolKind::Coordinate => {
                    debug_assert_eq!(w, x);
                    Poly::one()
                }
                JetRule::To(w) => Poly::var(w),
            };
            table.insert(v, d);
        }
        Ok(e.derivative_with(&|v| table.get(&v).cloned().unwrap_or_else(Poly::zero)))
    }

    /// Canonical text: terms in ascending degree, factors in name order.
    pub fn format_poly<C: Coefficient>(&self, p: &Poly<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{abs}*{mono}");
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut factors: Vec<(&str, u32)> =
            m.pairs().iter().map(|(v, e)| (self.name(*v), *e)).collect();
        factors.sort_by(|a, b| a.0.cmp(b.0));
        let mut out = String::new();
        for (i, (name, e)) in factors.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(name);
            if *e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    pub fn format<C: Coefficient>(&self, e: &RatFn<C>) -> String {
        let num = self.format_poly(e.numer());
        if e.denom().is_one() {
            return num;
        }
        let num = if e.numer().len() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den_plain = e.denom().is_constant()
            || (e.denom().is_monomial()
                && e.denom().leading_coefficient().is_one()
                && e.denom().leading().is_some_and(|(m, _)| m.pairs().len() == 1));
        let den = self.format_poly(e.denom());
        if den_plain {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }

    pub fn parse<C: Coefficient>(&self, text: &str) -> Result<RatFn<C>, SymbolicError> {
        crate::parse::parse(text, self)
    }
}

/// Mutable builder; `build` freezes the context.
#[derive(Default)]
pub struct ContextBuilder {
    symbols: Vec<Symbol>,
    rules: HashMap<(Var, Var), JetRule>,
    depth: usize,
    aliases: Vec<(String, String)>,
}

impl ContextBuilder {
    fn push(&mut self, name: &str, kind: SymbolKind, depends_on: Vec<Var>) -> Var {
        let v = Var(self.symbols.len() as u32);
        self.symbols.push(Symbol {
            name: name.to_string(),
            kind,
            depends_on,
        });
        v
    }

    pub fn coordinate(&mut self, name: &str) -> Var {
        self.push(name, SymbolKind::Coordinate, Vec::new())
    }

    pub fn parameter(&mut self, name: &str) -> Var {
        self.push(name, SymbolKind::Parameter, Vec::new())
    }

    pub fn constant(&mut self, name: &str) -> Var {
        self.push(name, SymbolKind::Constant, Vec::new())
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.symbols
            .iter()
            .position(|s| s.name == name)
            .map(|i| Var(i as u32))
    }

    /// Registers an unknown function of `depends_on` together with all of its
    /// partial derivatives up to order `depth`.
    ///
    /// Derivatives are named by appending the 1-based positions of the
    /// differentiating coordinates in ascending order (`f34`, never `f43`).
    pub fn jet_function(&mut self, base: &str, depends_on: &[Var], depth: usize) -> Var {
        self.depth = self.depth.max(depth);
        let mut deps = depends_on.to_vec();
        deps.sort();
        deps.dedup();
        let coordinate_position = |b: &Self, v: Var| -> usize {
            b.symbols[..=v.index()]
                .iter()
                .filter(|s| s.kind == SymbolKind::Coordinate)
                .count()
        };
        let positions: Vec<usize> = deps.iter().map(|v| coordinate_position(self, *v)).collect();
        let wide = positions.iter().any(|p| *p > 9);
        let name_of = |multi: &[usize]| -> String {
            let mut s = base.to_string();
            for (k, i) in multi.iter().enumerate() {
                if wide && k > 0 {
                    s.push('_');
                }
                if wide && k == 0 {
                    s.push('_');
                }
                let _ = write!(s, "{}", positions[*i]);
            }
            s
        };

        // multi-indices as sorted lists of positions into `deps`
        let mut by_index: HashMap<Vec<usize>, Var> = HashMap::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        let root = self.push(base, SymbolKind::Jet, deps.clone());
        by_index.insert(Vec::new(), root);
        for _order in 1..=depth {
            let mut next = Vec::new();
            for multi in &layer {
                let start = multi.last().copied().unwrap_or(0);
                for i in start..deps.len() {
                    let mut m = multi.clone();
                    m.push(i);
                    let v = self.push(&name_of(&m), SymbolKind::Jet, deps.clone());
                    by_index.insert(m.clone(), v);
                    next.push(m);
                }
            }
            layer = next;
        }
        for (multi, &v) in &by_index {
            if multi.len() >= depth {
                continue;
            }
            for (i, &x) in deps.iter().enumerate() {
                let mut m = multi.clone();
                m.push(i);
                m.sort();
                self.rules.insert((v, x), JetRule::To(by_index[&m]));
            }
        }
        root
    }

    /// A function equal to its own derivative along each of `coordinates`
    /// (an exponential of their sum).
    pub fn exponential_jet(&mut self, name: &str, coordinates: &[Var]) -> Var {
        let v = self.push(name, SymbolKind::Jet, coordinates.to_vec());
        for &x in coordinates {
            self.rules.insert((v, x), JetRule::To(v));
        }
        v
    }

    /// Jet symbol with explicit derivative rules; unspecified dependencies hit the depth limit.
    pub fn jet_with_rules(&mut self, name: &str, depends_on: &[Var]) -> Var {
        self.push(name, SymbolKind::Jet, depends_on.to_vec())
    }

    pub fn set_rule(&mut self, jet: Var, coordinate: Var, rule: JetRule) {
        self.rules.insert((jet, coordinate), rule);
    }

    pub fn alias(&mut self, name: &str, text: &str) {
        self.aliases.push((name.to_string(), text.to_string()));
    }

    pub fn build(self) -> Result<Context, SymbolicError> {
        let mut by_name = HashMap::new();
        for (i, s) in self.symbols.iter().enumerate() {
            if !valid_identifier(&s.name) {
                return Err(SymbolicError::InvalidName(s.name.clone()));
            }
            if by_name.insert(s.name.clone(), Var(i as u32)).is_some() {
                return Err(SymbolicError::DuplicateSymbol(s.name.clone()));
            }
        }
        for (name, _) in &self.aliases {
            if !valid_identifier(name) {
                return Err(SymbolicError::InvalidName(name.clone()));
            }
            if by_name.contains_key(name) {
                return Err(SymbolicError::DuplicateSymbol(name.clone()));
            }
        }
        for ((jet, x), rule) in &self.rules {
            let jet_sym = &self.symbols[jet.index()];
            if jet_sym.kind != SymbolKind::Jet
                || self.symbols[x.index()].kind != SymbolKind::Coordinate
            {
                return Err(SymbolicError::InvalidName(jet_sym.name.clone()));
            }
            if let JetRule::To(t) = rule {
                if self.symbols[t.index()].kind != SymbolKind::Jet {
                    return Err(SymbolicError::InvalidName(self.symbols[t.index()].name.clone()));
                }
            }
        }
        let ctx = Context {
            symbols: self.symbols,
            by_name,
            jets: JetTable {
                rules: self.rules,
                depth: self.depth,
            },
            aliases: self.aliases,
        };
        // aliases must parse in the finished context
        for (name, text) in &ctx.aliases {
            crate::parse::parse::<num_rational::BigRational>(text, &ctx).map_err(|e| {
                SymbolicError::Syntax {
                    message: format!("in alias {name}: {e}"),
                    position: 0,
                }
            })?;
        }
        Ok(ctx)
    }
}

pub fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
