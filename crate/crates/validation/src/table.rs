//! Component tables written as text, one chain of equal quantities per line:
//!
//! ```text
//! P: -1212 = 1221 = 2*(3*q-2*b*r^2)/(3*r^3)
//! dS: 2*233 = 332 = -2*(-2*a+4*b*r+F)/(f^2*r)
//! dT: 122 + 221 + 212 = -c^4*(-2*a+4*b*r+F)/(2*pi*G*r^3)
//! ```
//!
//! The key before the colon names a tensor. Every side but the last is a
//! linear combination of components, written as 1-based digit strings with
//! optional rational factors; the last side is an expression.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use pseudosym_core::Tensor;
use pseudosym_symbolic::{Context, Expr, SymbolicError};

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Expr { line: usize, source: SymbolicError },
}

/// `Σ factor · X[index]` with 0-based indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Combination {
    pub text: String,
    pub terms: Vec<(Expr, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub key: String,
    pub sides: Vec<Combination>,
    pub value: Expr,
    pub value_text: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub entries: Vec<Entry>,
}

fn component(token: &str) -> Option<Vec<usize>> {
    token
        .chars()
        .map(|c| c.to_digit(10).filter(|d| *d >= 1).map(|d| d as usize - 1))
        .collect()
}

fn combination(text: &str, ctx: &Context, line: usize) -> Result<Combination, TableError> {
    let syntax = |message: String| TableError::Syntax { line, message };
    let mut terms = Vec::new();
    let mut sign = Expr::one();
    for token in text.split_whitespace() {
        match token {
            "+" => continue,
            "-" => {
                sign = sign.neg();
                continue;
            }
            _ => {}
        }
        let (negated, body) = match token.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let (factor, digits) = match body.rsplit_once('*') {
            Some((f, d)) => (ctx.parse(f).map_err(|source| TableError::Expr { line, source })?, d),
            None => (Expr::one(), body),
        };
        let idx = component(digits).ok_or_else(|| syntax(format!("bad component `{token}`")))?;
        let mut factor = factor.mul(&sign);
        if negated {
            factor = factor.neg();
        }
        terms.push((factor, idx));
        sign = Expr::one();
    }
    if terms.is_empty() {
        return Err(syntax(format!("empty side `{text}`")));
    }
    Ok(Combination {
        text: text.trim().to_string(),
        terms,
    })
}

impl Table {
    /// Parses the lines of `text`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, ctx: &Context) -> Result<Self, TableError> {
        let mut entries = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let (key, rest) = raw.split_once(':').ok_or(TableError::Syntax {
                line,
                message: "missing `key:`".to_string(),
            })?;
            let parts: Vec<&str> = rest.split(" = ").collect();
            let Some((value_text, sides)) = parts.split_last().filter(|(_, s)| !s.is_empty()) else {
                return Err(TableError::Syntax {
                    line,
                    message: "expected `component = value`".to_string(),
                });
            };
            let value = ctx.parse(value_text).map_err(|source| TableError::Expr { line, source })?;
            let sides = sides
                .iter()
                .map(|s| combination(s, ctx, line))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(Entry {
                key: key.trim().to_string(),
                sides,
                value,
                value_text: value_text.trim().to_string(),
            });
        }
        Ok(Table { entries })
    }

    pub fn keys(&self) -> BTreeSet<&str> {
        self.entries.iter().map(|e| e.key.as_str()).collect()
    }

    /// Number of listed sides, each one checked equation.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.sides.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Evaluates every side against `tensors`; a missing key is a mismatch.
    pub fn compare(&self, tensors: &HashMap<&str, &Tensor>) -> Vec<Mismatch> {
        let mut out = Vec::new();
        for e in &self.entries {
            for side in &e.sides {
                let computed = tensors.get(e.key.as_str()).map(|t| {
                    side.terms
                        .iter()
                        .fold(Expr::zero(), |acc, (c, idx)| acc.add(&c.mul(t.get(idx))))
                });
                if computed.as_ref() != Some(&e.value) {
                    out.push(Mismatch {
                        key: e.key.clone(),
                        side: side.text.clone(),
                        listed: e.value.clone(),
                        computed,
                    });
                }
            }
        }
        out
    }

    /// Single components listed under `key`.
    pub fn listed(&self, key: &str) -> Vec<Vec<usize>> {
        self.entries
            .iter()
            .filter(|e| e.key == key)
            .flat_map(|e| &e.sides)
            .filter(|s| s.terms.len() == 1)
            .map(|s| s.terms[0].1.clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub key: String,
    pub side: String,
    pub listed: Expr,
    /// `None` when the key has no tensor.
    pub computed: Option<Expr>,
}

impl Mismatch {
    pub fn describe(&self, ctx: &Context) -> String {
        let computed = match &self.computed {
            Some(c) => ctx.format(c),
            None => "no such tensor".to_string(),
        };
        format!(
            "{}[{}]: listed {}, computed {}",
            self.key,
            self.side,
            ctx.format(&self.listed),
            computed
        )
    }
}

/// Index symmetries used to decide which components a table covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Symmetric in the first two slots.
    Symmetric,
    /// Curvature symmetries in the first four slots.
    Curvature,
    /// Antisymmetric in the first two slots only.
    FirstPair,
    /// Curvature symmetries in the first four slots, antisymmetric in slots 5 and 6.
    Operator,
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Symmetric => "symmetric pair",
            Layout::Curvature => "curvature",
            Layout::FirstPair => "antisymmetric first pair",
            Layout::Operator => "curvature and antisymmetric last pair",
        })
    }
}

impl Layout {
    fn moves(self) -> Vec<Vec<usize>> {
        // each move lists the source slot of every target slot
        match self {
            Layout::Symmetric | Layout::FirstPair => vec![vec![1, 0]],
            Layout::Curvature => vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2], vec![2, 3, 0, 1]],
            Layout::Operator => vec![
                vec![1, 0, 2, 3, 4, 5],
                vec![0, 1, 3, 2, 4, 5],
                vec![2, 3, 0, 1, 4, 5],
                vec![0, 1, 2, 3, 5, 4],
            ],
        }
    }

    /// Every index reachable from `idx` by the layout's symmetries.
    pub fn orbit(self, idx: &[usize]) -> BTreeSet<Vec<usize>> {
        let moves = self.moves();
        let mut seen = BTreeSet::from([idx.to_vec()]);
        let mut queue = VecDeque::from([idx.to_vec()]);
        while let Some(cur) = queue.pop_front() {
            for m in &moves {
                let mut next = cur.clone();
                for (target, &source) in m.iter().enumerate() {
                    next[target] = cur[source];
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }
}

/// Nonzero components of `t` outside the symmetry orbits of `listed`.
pub fn uncovered(t: &Tensor, listed: &[Vec<usize>], layout: Layout) -> Vec<Vec<usize>> {
    let covered: BTreeSet<Vec<usize>> = listed.iter().flat_map(|i| layout.orbit(i)).collect();
    (0..t.components().len())
        .filter(|&f| !t.get_flat(f).is_zero())
        .map(|f| t.index_of(f).to_vec())
        .filter(|i| !covered.contains(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pseudosym_core::ComponentTensor;

    fn ctx() -> Context {
        let mut b = Context::builder();
        b.coordinate("x");
        b.coordinate("y");
        b.parameter("q");
        b.build().unwrap()
    }

    #[test]
    fn parses_signed_scaled_and_summed_sides() {
        let ctx = ctx();
        let t = Table::parse("# comment\n\nA: -12 = 1/2*21 = 11 + 22 - 12 = q\n", &ctx).unwrap();
        assert_eq!(t.len(), 3);
        let e = &t.entries[0];
        assert_eq!(e.sides[0].terms, vec![(Expr::from_int(-1), vec![0, 1])]);
        assert_eq!(e.sides[1].terms, vec![(Expr::from_frac(1, 2), vec![1, 0])]);
        assert_eq!(e.sides[2].terms.len(), 3);
        assert_eq!(e.sides[2].terms[2].0, Expr::from_int(-1));
        assert_eq!(t.listed("A"), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn compares_against_tensors() {
        let ctx = ctx();
        let q: Expr = ctx.parse("q").unwrap();
        let a = ComponentTensor::from_fn(2, 2, |i| if i[0] == i[1] { q.clone() } else { Expr::zero() });
        let t = Table::parse("A: 11 = 22 = q\nA: 12 = q\nB: 11 = 1\n", &ctx).unwrap();
        let tensors = HashMap::from([("A", &a)]);
        let bad = t.compare(&tensors);
        assert_eq!(bad.len(), 2);
        assert_eq!(bad[0].side, "12");
        assert_eq!(bad[0].computed, Some(Expr::zero()));
        assert_eq!(bad[1].computed, None);
    }

    #[test]
    fn rejects_malformed_lines() {
        let ctx = ctx();
        assert!(Table::parse("A 11 = 1", &ctx).is_err());
        assert!(Table::parse("A: 11", &ctx).is_err());
        assert!(Table::parse("A: 10 = 1", &ctx).is_err());
        assert!(Table::parse("A: 11 = 1 +", &ctx).is_err());
    }

    #[test]
    fn orbits_follow_the_symmetries() {
        assert_eq!(Layout::Symmetric.orbit(&[0, 1]).len(), 2);
        assert_eq!(Layout::Curvature.orbit(&[0, 1, 0, 2]).len(), 8);
        assert_eq!(Layout::Curvature.orbit(&[0, 1, 0, 1]).len(), 4);
        assert_eq!(Layout::Operator.orbit(&[0, 1, 0, 2, 1, 2]).len(), 16);
        let t = ComponentTensor::from_fn(2, 2, |_| Expr::one());
        assert_eq!(uncovered(&t, &[vec![0, 1]], Layout::Symmetric), vec![vec![0, 0], vec![1, 1]]);
    }
}
