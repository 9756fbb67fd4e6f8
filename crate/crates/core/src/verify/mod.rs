//! Verification engine: exhaustive extremal checks over enumerated classes and
//! grid checks of the inequalities behind them.

use serde::Serialize;

use crate::error::{precondition, Result};

pub mod extremal;
pub mod lemmas;
pub mod report;

pub use extremal::{constraints_for, verify_extremal, ClassKind, ExtremalReport, VerifyOptions};
pub use lemmas::{run_lemma, LemmaCheck, LemmaGrid, LemmaId, LemmaVerdict};
pub use report::{extremal_table, lemma_table, ReportDocument, Table, SCHEMA_VERSION};

/// Default tolerance for ABS ties.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// Agreement required between a closed-form difference and the same
/// difference computed on built graphs.
pub const DOUBLE_ENTRY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    /// The class is empty.
    Vacuous,
    /// The class was enumerated but no extremal claim applies.
    Descriptive,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        self != Verdict::Refuted
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Vacuous => "vacuous",
            Verdict::Descriptive => "descriptive",
        })
    }
}

/// `sqrt(1 - 2/s)`.
pub(crate) fn w(s: f64) -> f64 {
    (1.0 - 2.0 / s).sqrt()
}

/// Upper bound for connected bipartite graphs of order `n >= 7` and
/// connectivity `kappa`, as the three case formulas state it.
pub fn final_theorem_bound(n: usize, kappa: usize) -> Result<f64> {
    precondition(n >= 7, || format!("the bound is stated for n >= 7, got n = {n}"))?;
    precondition(kappa >= 1 && 2 * kappa <= n, || format!("kappa must lie in 1..=n/2, got {kappa}"))?;
    let (nf, k) = (n as f64, kappa as f64);
    Ok(if 2 * kappa + 2 >= n {
        k * (nf - k) * w(nf)
    } else if n % 2 == 0 {
        nf * (nf - 2.0 * k - 2.0) / 4.0 * w(nf - 1.0)
            + nf * k / 2.0 * w(nf)
            + k * (1.0 - 4.0 / (2.0 * k + nf + 2.0)).sqrt()
    } else {
        (nf - 1.0) * (nf - 2.0 * k - 1.0) / 4.0 * w(nf - 1.0)
            + (nf - 1.0) * k / 2.0 * w(nf)
            + k * (1.0 - 4.0 / (2.0 * k + nf + 1.0)).sqrt()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_cases() {
        assert!((final_theorem_bound(8, 4).unwrap() - 16.0 * 0.75f64.sqrt()).abs() < 1e-12);
        let even = 8.0 * (5.0f64 / 7.0).sqrt() + 4.0 * 0.75f64.sqrt() + (1.0f64 - 4.0 / 12.0).sqrt();
        assert!((final_theorem_bound(8, 1).unwrap() - even).abs() < 1e-12);
        assert!(final_theorem_bound(6, 1).is_err());
        assert!(final_theorem_bound(8, 5).is_err());
    }
}
