//! TOML metric definition files.
//!
//! ```toml
//! name = "rt-slice"
//! coordinates = ["t", "r", "x3", "x4"]
//! parameters = ["a", "b", "q"]
//! constants = ["c", "G", "pi"]
//! nonvanishing = ["r", "f"]
//!
//! [aliases]
//! F = "f3^2+f4^2-f*(f33+f44)"
//!
//! [[jets]]
//! name = "f"
//! depends_on = ["x3", "x4"]
//!
//! [metric]
//! "t,t" = "-2*(a-2*b*r-q/r)"
//! "t,r" = "1"
//! "x3,x3" = "-r^2/f^2"
//! "x4,x4" = "-r^2/f^2"
//! ```
//!
//! Metric keys name two coordinates, or their 1-based positions; the
//! symmetric partner is implied and unlisted components are zero. Values use
//! the expression grammar of the symbolic crate. A jet with `exponential =
//! true` equals its own derivative along every coordinate it depends on.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use pseudosym_core::{ComponentTensor, Metric, MetricSpec};
use pseudosym_symbolic::{Context, Expr, Var};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum MetricFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed metric file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("[{section}] {message}")]
    Section { section: &'static str, message: String },
}

fn section(section: &'static str, message: impl Into<String>) -> MetricFileError {
    MetricFileError::Section {
        section,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricFile {
    pub name: String,
    pub coordinates: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default)]
    pub constants: Vec<String>,
    /// Expressions assumed nowhere zero.
    #[serde(default)]
    pub nonvanishing: Vec<String>,
    #[serde(default)]
    pub aliases: BTreeMap<String, String>,
    #[serde(default)]
    pub jets: Vec<JetDecl>,
    pub metric: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetDecl {
    pub name: String,
    pub depends_on: Vec<String>,
    #[serde(default)]
    pub exponential: bool,
}

impl MetricFile {
    pub fn parse(text: &str) -> Result<Self, MetricFileError> {
        Ok(toml::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, MetricFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| MetricFileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Builds the metric; `jet_depth` bounds the derivatives registered for
    /// non-exponential jets.
    pub fn build(&self, jet_depth: usize) -> Result<Metric, MetricFileError> {
        let ctx = Arc::new(self.context(jet_depth)?);
        let chart = ctx.coordinates();
        let n = chart.len();
        let mut entries: Vec<Vec<Option<Expr>>> = vec![vec![None; n]; n];
        for (key, text) in &self.metric {
            let (i, j) = self.component_key(key)?;
            let e: Expr = ctx
                .parse(text)
                .map_err(|e| section("metric", format!("entry \"{key}\": {e}")))?;
            for (a, b) in [(i, j), (j, i)] {
                match &entries[a][b] {
                    Some(old) if *old != e => {
                        return Err(section("metric", format!("entry \"{key}\" conflicts with its transpose")))
                    }
                    _ => entries[a][b] = Some(e.clone()),
                }
            }
        }
        let lower = ComponentTensor::from_fn(n, 2, |ix| entries[ix[0]][ix[1]].clone().unwrap_or_else(Expr::zero));
        let assumptions = self
            .nonvanishing
            .iter()
            .map(|t| {
                let e: Expr = ctx.parse(t).map_err(|e| section("nonvanishing", format!("\"{t}\": {e}")))?;
                if e.is_zero() {
                    return Err(section("nonvanishing", format!("\"{t}\" is identically zero")));
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>, _>>()?;
        MetricSpec::new(self.name.clone(), ctx, chart, lower, assumptions)
            .map_err(|e| section("metric", e.to_string()))
    }

    fn context(&self, jet_depth: usize) -> Result<Context, MetricFileError> {
        if self.coordinates.is_empty() {
            return Err(section("coordinates", "no coordinates given"));
        }
        let mut b = Context::builder();
        let coords: Vec<Var> = self.coordinates.iter().map(|c| b.coordinate(c)).collect();
        for p in &self.parameters {
            b.parameter(p);
        }
        for c in &self.constants {
            b.constant(c);
        }
        for jet in &self.jets {
            let deps = jet
                .depends_on
                .iter()
                .map(|d| {
                    self.coordinates
                        .iter()
                        .position(|c| c == d)
                        .map(|k| coords[k])
                        .ok_or_else(|| section("jets", format!("{}: unknown coordinate `{d}`", jet.name)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if jet.exponential {
                b.exponential_jet(&jet.name, &deps);
            } else {
                b.jet_function(&jet.name, &deps, jet_depth);
            }
        }
        for (name, text) in &self.aliases {
            b.alias(name, text);
        }
        b.build().map_err(|e| section("coordinates", e.to_string()))
    }

    fn component_key(&self, key: &str) -> Result<(usize, usize), MetricFileError> {
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        let [a, b] = parts[..] else {
            return Err(section("metric", format!("key \"{key}\" must name two coordinates")));
        };
        let position = |s: &str| -> Option<usize> {
            if let Some(k) = self.coordinates.iter().position(|c| c == s) {
                return Some(k);
            }
            s.parse::<usize>()
                .ok()
                .filter(|k| (1..=self.coordinates.len()).contains(k))
                .map(|k| k - 1)
        };
        match (position(a), position(b)) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(section("metric", format!("key \"{key}\" names an unknown coordinate"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FLAT: &str = r#"
        name = "flat"
        coordinates = ["t", "x", "y", "z"]
        [metric]
        "t,t" = "1"
        "x,x" = "-1"
        "3,3" = "-1"
        "z,z" = "-1"
    "#;

    #[test]
    fn builds_with_names_and_positions() {
        let m = MetricFile::parse(FLAT).unwrap().build(4).unwrap();
        assert_eq!(m.name(), "flat");
        assert_eq!(m.dim(), 4);
        assert_eq!(m.lower().get(&[2, 2]), &Expr::from_int(-1));
        assert!(m.lower().get(&[0, 1]).is_zero());
    }

    #[test]
    fn conflicting_transpose_is_rejected() {
        let text = format!("{FLAT}\n\"t,x\" = \"1\"\n\"x,t\" = \"2\"\n");
        let err = MetricFile::parse(&text).unwrap().build(4).unwrap_err();
        assert!(err.to_string().contains("[metric]"), "{err}");
        let same = format!("{FLAT}\n\"t,x\" = \"1\"\n\"x,t\" = \"1\"\n");
        assert!(MetricFile::parse(&same).unwrap().build(4).is_ok());
    }

    #[test]
    fn diagnostics_name_the_section() {
        let unknown = FLAT.replace("\"z,z\"", "\"w,z\"");
        let err = MetricFile::parse(&unknown).unwrap().build(4).unwrap_err();
        assert!(err.to_string().starts_with("[metric]"), "{err}");
        let bad = FLAT.replace("\"-1\"", "\"-1*\"");
        let err = MetricFile::parse(&bad).unwrap().build(4).unwrap_err();
        assert!(err.to_string().starts_with("[metric]"), "{err}");
        let degenerate = FLAT.replace("\"z,z\" = \"-1\"", "");
        let err = MetricFile::parse(&degenerate).unwrap().build(4).unwrap_err();
        assert!(err.to_string().starts_with("[metric]"), "{err}");
        assert!(MetricFile::parse("name = 3").is_err());
    }

    #[test]
    fn jets_and_aliases() {
        let text = r#"
            name = "jetty"
            coordinates = ["t", "r", "x3", "x4"]
            parameters = ["q"]
            nonvanishing = ["r", "f"]
            [aliases]
            F = "f3^2+f4^2-f*(f33+f44)"
            [[jets]]
            name = "f"
            depends_on = ["x3", "x4"]
            [[jets]]
            name = "E"
            depends_on = ["x3", "x4"]
            exponential = true
            [metric]
            "t,t" = "-2*(F-q/r)"
            "t,r" = "1"
            "x3,x3" = "-r^2/f^2"
            "x4,x4" = "-r^2*E"
        "#;
        let m = MetricFile::parse(text).unwrap().build(3).unwrap();
        let ctx = m.context();
        assert!(ctx.lookup("f333").is_some());
        assert!(ctx.lookup("f3333").is_none());
        let e: Expr = ctx.parse("E").unwrap();
        assert_eq!(m.partial(&e, 2).unwrap(), e);
        let bad_jet = text.replace("depends_on = [\"x3\", \"x4\"]\n            exponential", "depends_on = [\"u\"]\n            exponential");
        let err = MetricFile::parse(&bad_jet).unwrap().build(3).unwrap_err();
        assert!(err.to_string().starts_with("[jets]"), "{err}");
    }
}
