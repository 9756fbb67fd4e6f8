//! Versioned report documents and tabular summaries.
//!
//! JSON keeps full `f64` precision; tables print 12 significant digits.

use serde::Serialize;

use crate::numfmt::sig12;

use super::extremal::ExtremalReport;
use super::lemmas::LemmaCheck;

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extremal: Vec<ExtremalReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lemmas: Vec<LemmaCheck>,
}

impl ReportDocument {
    pub fn extremal(reports: Vec<ExtremalReport>) -> Self {
        Self { schema_version: SCHEMA_VERSION, extremal: reports, lemmas: Vec::new() }
    }

    pub fn lemmas(checks: Vec<LemmaCheck>) -> Self {
        Self { schema_version: SCHEMA_VERSION, extremal: Vec::new(), lemmas: checks }
    }

    /// Pretty JSON with a trailing newline. Output depends only on the reports.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }

    /// True when nothing was refuted and no lemma failed.
    pub fn all_passed(&self) -> bool {
        self.extremal.iter().all(|r| r.verdict.is_success()) && self.lemmas.iter().all(|c| c.passed())
    }
}

/// A header row plus data rows, shared by the CSV and markdown writers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_markdown(&self) -> String {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let mut out = line(&self.header);
        out.push_str(&line(&vec!["---".to_string(); self.header.len()]));
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

/// One row per class: class, n, extremal graph, ABS value, verdict.
pub fn extremal_table(reports: &[ExtremalReport]) -> Table {
    let mut t = Table::new(&["class", "n", "extremal graph", "ABS", "maximizers", "class size", "verdict"]);
    for r in reports {
        let graph = match (&r.expected, r.maximizers.as_slice()) {
            (Some(e), _) => e.family.clone(),
            (None, [m]) => m.graph6.to_string(),
            (None, []) => String::new(),
            (None, ms) => format!("{} graphs", ms.len()),
        };
        t.rows.push(vec![
            r.constraint.to_string(),
            r.n.to_string(),
            graph,
            opt_num(r.max_abs),
            r.maximizers.len().to_string(),
            r.stats.class_size.to_string(),
            r.verdict.to_string(),
        ]);
    }
    t
}

pub fn lemma_table(checks: &[LemmaCheck]) -> Table {
    let mut t = Table::new(&["lemma", "grid", "checked", "failures", "findings", "verdict"]);
    for c in checks {
        t.rows.push(vec![
            c.lemma.to_string(),
            c.grid.clone(),
            c.checked.to_string(),
            c.failures.len().to_string(),
            c.findings.len().to_string(),
            c.verdict.to_string(),
        ]);
    }
    t
}
