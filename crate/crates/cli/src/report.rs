//! Versioned report document and its text rendering.

use std::fmt::Write as _;

use pseudosym_core::classify::{ClassificationReport, Settings};
use pseudosym_symbolic::{Context, Expr, SymbolicError};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "pseudosym-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub metric: String,
    pub settings: SettingsDoc,
    pub verdicts: Vec<VerdictDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SettingsDoc {
    pub jet_depth: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub name: String,
    pub group: String,
    pub relation: String,
    pub status: String,
    pub data: Vec<Datum>,
    /// 1-based component indices.
    pub witnesses: Vec<Vec<usize>>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Datum {
    pub label: String,
    pub value: String,
}

/// Wall-clock milliseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub build_ms: u64,
    pub battery_ms: u64,
}

impl From<Settings> for SettingsDoc {
    fn from(s: Settings) -> Self {
        SettingsDoc {
            jet_depth: s.jet_depth,
            trials: s.trials,
            seed: s.seed,
        }
    }
}

impl ReportDocument {
    pub fn new(report: &ClassificationReport, ctx: &Context) -> Self {
        ReportDocument {
            schema: SCHEMA.to_string(),
            metric: report.metric.clone(),
            settings: report.settings.into(),
            verdicts: report
                .verdicts
                .iter()
                .map(|v| VerdictDoc {
                    name: v.name.clone(),
                    group: v.group.id().to_string(),
                    relation: v.relation.clone(),
                    status: v.status.id().to_string(),
                    data: v
                        .data
                        .iter()
                        .map(|(label, e)| Datum {
                            label: label.clone(),
                            value: ctx.format(e),
                        })
                        .collect(),
                    witnesses: v.witnesses.clone(),
                    notes: v.notes.clone(),
                })
                .collect(),
            timing: None,
        }
    }

    pub fn verdict(&self, name: &str) -> Option<&VerdictDoc> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.settings;
        let _ = writeln!(out, "metric: {}", self.metric);
        let _ = writeln!(
            out,
            "settings: jet-depth {}, trials {}, seed {}",
            s.jet_depth, s.trials, s.seed
        );
        let width = self.verdicts.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &self.verdicts {
            let _ = writeln!(out, "{:width$}  {:15} {}", v.name, v.status, v.relation);
            for d in &v.data {
                let _ = writeln!(out, "    {} = {}", d.label, d.value);
            }
            for w in &v.witnesses {
                let idx: Vec<String> = w.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "    witness [{}]", idx.join(","));
            }
            for n in &v.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        if let Some(t) = self.timing {
            let _ = writeln!(out, "timing: build {} ms, battery {} ms", t.build_ms, t.battery_ms);
        }
        out
    }
}

impl VerdictDoc {
    pub fn datum(&self, label: &str) -> Option<&str> {
        self.data.iter().find(|d| d.label == label).map(|d| d.value.as_str())
    }

    /// Re-parses every datum in `ctx`.
    pub fn expressions(&self, ctx: &Context) -> Result<Vec<(String, Expr)>, SymbolicError> {
        self.data
            .iter()
            .map(|d| Ok((d.label.clone(), ctx.parse(&d.value)?)))
            .collect()
    }
}
