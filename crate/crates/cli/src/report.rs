//! Structured results and their text and JSON renderings.
//!
//! Every rational is serialized as a string, `"p/q"` or `"p"`, so that JSON
//! output stays exact.

use std::collections::BTreeMap;
use std::fmt::Write;

use k3fix::exactmath::parse_rational;
use k3fix::{LinearSystem, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Arguments after the program name, as given.
    pub command: Vec<String>,
    pub result: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Table(TableDump),
    System(SystemDump),
    Analysis(AnalysisDump),
    Sweep(SweepDump),
    Residual(ResidualDump),
    Configs(SearchDump),
    CheckPaper(CheckDump),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDump {
    pub max_phi: u64,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub phi: u64,
    /// Descending.
    pub orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDump {
    pub order: u64,
    pub rot: u64,
    pub labels: Vec<String>,
    /// Alias to canonical label.
    pub aliases: BTreeMap<String, String>,
    pub matrix: Vec<Vec<String>>,
    pub rhs: Vec<String>,
}

impl SystemDump {
    pub fn from_linear(order: u64, rot: u64, sys: &LinearSystem) -> Self {
        let strings = |row: &[Rational]| row.iter().map(ToString::to_string).collect();
        SystemDump {
            order,
            rot,
            labels: sys.labels().to_vec(),
            aliases: sys
                .aliases()
                .iter()
                .map(|(alias, &col)| (alias.clone(), sys.labels()[col].clone()))
                .collect(),
            matrix: sys.matrix().iter().map(|r| strings(r)).collect(),
            rhs: strings(sys.rhs()),
        }
    }

    pub fn to_linear(&self) -> Result<LinearSystem, CliError> {
        let parse = |s: &String| {
            parse_rational(s).ok_or_else(|| CliError::Usage(format!("bad rational `{s}`")))
        };
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let rhs = self.rhs.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        let mut sys = LinearSystem::new(self.labels.clone(), matrix, rhs)?;
        for (alias, label) in &self.aliases {
            let col = sys.column_of(label).ok_or_else(|| {
                CliError::Usage(format!("alias `{alias}` names unknown label `{label}`"))
            })?;
            sys.add_alias(alias.clone(), col);
        }
        Ok(sys)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDump {
    pub order: u64,
    pub rot: u64,
    pub verdict: String,
    /// Rank of the coefficient matrix over Q; absent when inconsistent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Row multipliers on the denominator-cleared system.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
    /// The same sentence with alias labels substituted, when aliases exist.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction_aliased: Option<String>,
    /// An integral (not necessarily nonnegative) solution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Assignment>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDump {
    pub max_phi: u64,
    pub rot: u64,
    /// Ascending in the order.
    pub results: Vec<AnalysisDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualDump {
    pub order: u64,
    pub rot: u64,
    pub config: String,
    pub residual: String,
    /// Power-basis coordinates of the residual.
    pub coords: Vec<String>,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCount {
    pub a: u64,
    pub b: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDump {
    pub points: Vec<PointCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub total_points: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDump {
    pub order: u64,
    pub rot: u64,
    pub max_points: u64,
    /// Absent when there is no curve unknown.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_range: Option<(i64, i64)>,
    pub configs: Vec<ConfigDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDump {
    pub checks: Vec<Check>,
    pub conclusion: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: k3fix {}\n", self.command.join(" "));
        match &self.result {
            Outcome::Table(t) => text_table(&mut out, t),
            Outcome::System(s) => text_system(&mut out, s),
            Outcome::Analysis(a) => text_analysis(&mut out, a, ""),
            Outcome::Sweep(s) => {
                let _ = writeln!(
                    out,
                    "sweep: r={}, phi(N) <= {}, {} orders",
                    s.rot,
                    s.max_phi,
                    s.results.len()
                );
                for a in &s.results {
                    let _ = writeln!(out, "N={}:", a.order);
                    text_analysis(&mut out, a, "  ");
                }
            }
            Outcome::Residual(r) => {
                let _ = writeln!(out, "N={} r={}", r.order, r.rot);
                let _ = writeln!(out, "config: {}", r.config);
                let _ = writeln!(out, "residual: {}", r.residual);
                let _ = writeln!(out, "coords: [{}]", r.coords.join(", "));
                let _ = writeln!(out, "status: {}", r.status);
            }
            Outcome::Configs(s) => text_search(&mut out, s),
            Outcome::CheckPaper(c) => {
                for check in &c.checks {
                    let mark = if check.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "[{mark}] {}: {}", check.name, check.detail);
                }
                let _ = writeln!(out, "conclusion: {}", c.conclusion);
            }
        }
        out
    }
}

fn text_table(out: &mut String, t: &TableDump) {
    let _ = writeln!(out, "orders with phi(N) <= {}", t.max_phi);
    for row in &t.rows {
        let orders: Vec<String> = row.orders.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "phi={}: {}", row.phi, orders.join(", "));
    }
}

fn text_system(out: &mut String, s: &SystemDump) {
    let _ = writeln!(
        out,
        "N={} r={}: {} equations, {} unknowns",
        s.order,
        s.rot,
        s.rhs.len(),
        s.labels.len()
    );
    let by_label: BTreeMap<&str, &str> = s
        .aliases
        .iter()
        .map(|(a, l)| (l.as_str(), a.as_str()))
        .collect();
    let _ = writeln!(out, "unknowns:");
    for (i, label) in s.labels.iter().enumerate() {
        match by_label.get(label.as_str()) {
            Some(alias) => {
                let _ = writeln!(out, "  {i:>3} {label} (alias {alias})");
            }
            None => {
                let _ = writeln!(out, "  {i:>3} {label}");
            }
        }
    }
    let _ = writeln!(out, "equations:");
    for (i, (row, b)) in s.matrix.iter().zip(&s.rhs).enumerate() {
        let _ = writeln!(out, "  {i:>3} [{}] = {b}", row.join(" "));
    }
}

fn text_analysis(out: &mut String, a: &AnalysisDump, indent: &str) {
    let _ = writeln!(out, "{indent}verdict: {}", a.verdict);
    if let Some(rank) = a.rank {
        let _ = writeln!(out, "{indent}rank: {rank}");
    }
    if let Some(y) = &a.certificate {
        let _ = writeln!(out, "{indent}certificate: [{}]", y.join(", "));
    }
    if let Some(s) = &a.obstruction {
        let _ = writeln!(out, "{indent}obstruction: {s}");
    }
    if let Some(s) = &a.obstruction_aliased {
        let _ = writeln!(out, "{indent}obstruction (aliases): {s}");
    }
    if let Some(w) = &a.witness {
        let parts: Vec<String> = w
            .iter()
            .map(|x| format!("{}={}", x.label, x.value))
            .collect();
        let _ = writeln!(out, "{indent}witness: {}", parts.join(", "));
    }
}

fn text_search(out: &mut String, s: &SearchDump) {
    let range = match s.n_range {
        Some((lo, hi)) => format!(", n in [{lo}, {hi}]"),
        None => String::new(),
    };
    let _ = writeln!(
        out,
        "N={} r={}: {} solutions with at most {} points{range}",
        s.order,
        s.rot,
        s.configs.len(),
        s.max_points
    );
    for c in &s.configs {
        let mut parts: Vec<String> = c
            .points
            .iter()
            .map(|p| format!("m_{}_{}={}", p.a, p.b, p.count))
            .collect();
        if let Some(n) = c.n {
            parts.push(format!("n={n}"));
        }
        let body = if parts.is_empty() {
            "(empty)".to_string()
        } else {
            parts.join(", ")
        };
        let _ = writeln!(out, "  points={:<3} {body}", c.total_points);
    }
}
