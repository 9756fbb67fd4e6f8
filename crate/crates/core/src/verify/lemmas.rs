//! Grid checks of the inequalities behind the extremal results.
//!
//! Every difference is computed from closed forms and, where the compared
//! objects are graphs, again from the built graphs; the two must agree within
//! [`DOUBLE_ENTRY_TOL`]. Strict inequalities follow one policy: a positive
//! margin passes, a margin within [`ZERO_TOL`] of zero is a finding, and a
//! negative margin is a failure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::abs::abs_index;
use crate::error::{precondition, Error, Result};
use crate::families::{
    abs_kappa_xy_closed, abs_kr_join_closed, abs_multipartite_closed, abs_sixpart_closed, build_complete,
    build_complete_bipartite, build_complete_multipartite, build_kappa_xy, build_kr_join_multipartite, build_sixpart,
    PartSizes, SixPart,
};
use crate::graph::Graph;
use crate::invariants::cut_vertex_count;

use super::{final_theorem_bound, w, DOUBLE_ENTRY_TOL};

/// Margins this close to zero are reported as findings rather than passes.
pub const ZERO_TOL: f64 = 1e-12;

/// Relative agreement required between two evaluations of the same ABS value.
const SAME_VALUE_RTOL: f64 = 1e-12;

/// Largest order for which graphs are built for double entry.
const BUILD_MAX_N: usize = 64;

/// Six-part tuples are numerous; graphs are built for them only up to this order.
const SIXPART_BUILD_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    Zeta,
    TuranShift,
    JoinShift,
    Fl1,
    Bl2,
    Fl3,
    Fil1,
    Fil2,
    Fil3,
    Chains,
    FinalTheorem,
    PendantShift,
}

impl LemmaId {
    pub const ALL: [LemmaId; 12] = [
        LemmaId::Zeta,
        LemmaId::TuranShift,
        LemmaId::JoinShift,
        LemmaId::Fl1,
        LemmaId::Bl2,
        LemmaId::Fl3,
        LemmaId::Fil1,
        LemmaId::Fil2,
        LemmaId::Fil3,
        LemmaId::Chains,
        LemmaId::FinalTheorem,
        LemmaId::PendantShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Zeta => "zeta",
            LemmaId::TuranShift => "turan-shift",
            LemmaId::JoinShift => "join-shift",
            LemmaId::Fl1 => "fl1",
            LemmaId::Bl2 => "bl2",
            LemmaId::Fl3 => "fl3",
            LemmaId::Fil1 => "fil1",
            LemmaId::Fil2 => "fil2",
            LemmaId::Fil3 => "fil3",
            LemmaId::Chains => "chains",
            LemmaId::FinalTheorem => "final-theorem",
            LemmaId::PendantShift => "pendant-shift",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            LemmaId::Zeta => "zeta is negative and increasing; zeta1 is positive and increasing",
            LemmaId::TuranShift => {
                "moving a vertex from a larger to a smaller part raises ABS of a complete k-partite graph"
            }
            LemmaId::JoinShift => "the same shift raises ABS of K_r joined with a complete k-partite graph",
            LemmaId::Fl1 => "six-part merge into Kbar[n1+n2+n3-1,0,1,n4+n6-n2,n5+n2,0] raises ABS",
            LemmaId::Bl2 => "Kbar[0,n2,n3,n4,0,n6] < Kbar[0,n2,n3,1,0,n6+n4-1]",
            LemmaId::Fl3 => "Kbar[n1,0,n3,0,n5,n6] < Kbar[1,0,n3+n1-1,0,n5,n6]",
            LemmaId::Fil1 => "Kbar_k[x+1,y-1] > Kbar_k[x,y] when y-x-1+k >= 0",
            LemmaId::Fil2 => "even n: f(c) > 0, f increasing, and the supporting inequalities",
            LemmaId::Fil3 => "odd n: f(c) > 0 and f increasing",
            LemmaId::Chains => "Kbar_k[x, n-k-1-x] rises strictly to x = floor(n/2) and then falls",
            LemmaId::FinalTheorem => "bound formulas equal the extremal graphs' ABS and beat the alternatives",
            LemmaId::PendantShift => "moving path ends onto free clique vertices raises ABS",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown lemma id {s:?}")))
    }
}

/// Bounds of a lemma grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaGrid {
    pub n_max: usize,
    pub k_max: usize,
    pub r_max: usize,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        Self { n_max: 40, k_max: 6, r_max: 5 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaVerdict {
    Pass,
    Fail,
    /// Nothing in the grid satisfied the hypotheses.
    Vacuous,
}

impl fmt::Display for LemmaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaVerdict::Pass => "pass",
            LemmaVerdict::Fail => "fail",
            LemmaVerdict::Vacuous => "vacuous",
        })
    }
}

/// A grid point where a check failed or landed on zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Issue {
    pub tuple: String,
    pub check: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub lemma: LemmaId,
    pub grid: String,
    pub checked: usize,
    pub verdict: LemmaVerdict,
    pub failures: Vec<Issue>,
    pub findings: Vec<Issue>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.verdict != LemmaVerdict::Fail
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Issue>,
    findings: Vec<Issue>,
}

impl Tally {
    fn issue(tuple: &dyn Fn() -> String, check: &str, value: f64) -> Issue {
        Issue { tuple: tuple(), check: check.to_string(), value }
    }

    /// `margin > 0`, with zero margins recorded as findings.
    fn positive(&mut self, tuple: &dyn Fn() -> String, check: &str, margin: f64) {
        self.checked += 1;
        if margin.is_nan() || margin < -ZERO_TOL {
            self.failures.push(Self::issue(tuple, check, margin));
        } else if margin <= ZERO_TOL {
            self.findings.push(Self::issue(tuple, check, margin));
        }
    }

    /// `margin >= 0`.
    fn nonnegative(&mut self, tuple: &dyn Fn() -> String, check: &str, margin: f64) {
        self.checked += 1;
        if margin.is_nan() || margin < -ZERO_TOL {
            self.failures.push(Self::issue(tuple, check, margin));
        }
    }

    fn agree(&mut self, tuple: &dyn Fn() -> String, check: &str, a: f64, b: f64, tol: f64) {
        self.checked += 1;
        if !((a - b).abs() <= tol) {
            self.failures.push(Self::issue(tuple, check, a - b));
        }
    }

    fn same_value(&mut self, tuple: &dyn Fn() -> String, check: &str, a: f64, b: f64) {
        self.agree(tuple, check, a, b, SAME_VALUE_RTOL * a.abs().max(b.abs()).max(1.0));
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
    }

    fn finish(self, lemma: LemmaId, grid: String) -> LemmaCheck {
        let verdict = if !self.failures.is_empty() {
            LemmaVerdict::Fail
        } else if self.checked == 0 {
            LemmaVerdict::Vacuous
        } else {
            LemmaVerdict::Pass
        };
        LemmaCheck { lemma, grid, checked: self.checked, verdict, failures: self.failures, findings: self.findings }
    }
}

/// Runs `f` on every item in parallel and merges the tallies in item order.
fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) -> Result<()> + Sync) -> Result<Tally> {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t).map(|_| t)
        })
        .collect::<Result<_>>()?;
    let mut total = Tally::default();
    for t in parts {
        total.absorb(t);
    }
    Ok(total)
}

// ---------------------------------------------------------------- zeta

/// `ζ(x) = w(x - t) - w(x - t + 1)` with `w(s) = sqrt(1 - 2/s)`.
pub fn zeta(t: usize, x: usize) -> f64 {
    let s = x as f64 - t as f64;
    w(s) - w(s + 1.0)
}

/// `ζ₁(x) = w(2n - x) - w(2n - x - 1)`.
pub fn zeta1(n: usize, x: usize) -> f64 {
    let s = 2.0 * n as f64 - x as f64;
    w(s) - w(s - 1.0)
}

/// `ζ` is increasing and negative on `x_lo..=x_hi`; the domain needs `x - t > 2`.
pub fn check_zeta_monotone(t: usize, x_lo: usize, x_hi: usize) -> Result<LemmaCheck> {
    precondition(x_lo > t + 2, || format!("zeta needs x - t > 2, got t = {t}, x = {x_lo}"))?;
    let mut tally = Tally::default();
    zeta_into(&mut tally, t, x_lo, x_hi);
    Ok(tally.finish(LemmaId::Zeta, format!("t = {t}, x in {x_lo}..={x_hi}")))
}

fn zeta_into(tally: &mut Tally, t: usize, x_lo: usize, x_hi: usize) {
    for x in x_lo..=x_hi {
        let tuple = || format!("t={t},x={x}");
        tally.positive(&tuple, "zeta-negative", -zeta(t, x));
        if x < x_hi {
            tally.positive(&tuple, "zeta-increasing", zeta(t, x + 1) - zeta(t, x));
        }
    }
}

/// `ζ₁` is increasing and positive on `x_lo..=x_hi`; the domain needs `2n - x - 1 > 2`.
pub fn check_zeta1_monotone(n: usize, x_lo: usize, x_hi: usize) -> Result<LemmaCheck> {
    precondition(x_hi + 3 < 2 * n, || format!("zeta1 needs 2n - x - 1 > 2, got n = {n}, x = {x_hi}"))?;
    let mut tally = Tally::default();
    zeta1_into(&mut tally, n, x_lo, x_hi);
    Ok(tally.finish(LemmaId::Zeta, format!("n = {n}, x in {x_lo}..={x_hi}")))
}

fn zeta1_into(tally: &mut Tally, n: usize, x_lo: usize, x_hi: usize) {
    for x in x_lo..=x_hi {
        let tuple = || format!("n={n},x={x}");
        tally.positive(&tuple, "zeta1-positive", zeta1(n, x));
        if x < x_hi {
            tally.positive(&tuple, "zeta1-increasing", zeta1(n, x + 1) - zeta1(n, x));
        }
    }
}

fn grid_zeta(g: &LemmaGrid) -> Result<Tally> {
    let mut tally = Tally::default();
    for t in 1..=g.n_max {
        zeta_into(&mut tally, t, t + 3, (2 * g.n_max).max(t + 3));
    }
    for n in 3..=g.n_max {
        zeta1_into(&mut tally, n, 1, 2 * n - 4);
    }
    Ok(tally)
}

// ---------------------------------------------------------------- part shifts

/// Multisets of `k` positive parts summing to `n`, each listed non-increasing.
pub fn partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // the remaining k parts each need at least one vertex
        let hi = max.min(n + 1 - k);
        let lo = n.div_ceil(k);
        for t in (lo..=hi).rev() {
            cur.push(t);
            rec(n - t, k - 1, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && n >= k {
        rec(n, k, n, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn shifted(parts: &PartSizes, i: usize, j: usize) -> Result<PartSizes> {
    let t = parts.sizes();
    precondition(i < t.len() && j < t.len() && i != j, || format!("part indices {i}, {j} out of range"))?;
    precondition(t[i] >= t[j] + 2, || format!("shift needs t_i - t_j >= 2, got {} and {}", t[i], t[j]))?;
    let mut s = t.to_vec();
    s[i] -= 1;
    s[j] += 1;
    PartSizes::new(s)
}

/// `ABS(K_{..t_i-1..t_j+1..}) - ABS(K_parts)` by closed form (0-based `i`, `j`).
pub fn multipartite_shift(parts: &PartSizes, i: usize, j: usize) -> Result<f64> {
    let moved = shifted(parts, i, j)?;
    Ok(abs_multipartite_closed(&moved)? - abs_multipartite_closed(parts)?)
}

/// Same shift inside `K_r ∨ K_parts`.
pub fn kr_join_shift(r: usize, parts: &PartSizes, i: usize, j: usize) -> Result<f64> {
    let moved = shifted(parts, i, j)?;
    Ok(abs_kr_join_closed(r, &moved)? - abs_kr_join_closed(r, parts)?)
}

/// Index pairs `(i, j)` of distinct part values with `t_i >= t_j + 2`.
fn shift_pairs(t: &[usize]) -> Vec<(usize, usize)> {
    let firsts: Vec<usize> = (0..t.len()).filter(|&i| i == 0 || t[i] != t[i - 1]).collect();
    let mut out = Vec::new();
    for &i in &firsts {
        for &j in &firsts {
            if t[i] >= t[j] + 2 {
                out.push((i, j));
            }
        }
    }
    out
}

fn shift_into(tally: &mut Tally, r: usize, t: &[usize]) -> Result<()> {
    let parts = PartSizes::new(t.to_vec())?;
    let n = r + parts.total();
    let build = |p: &PartSizes| -> Result<Graph> {
        if r == 0 {
            build_complete_multipartite(p)
        } else {
            build_kr_join_multipartite(r, p)
        }
    };
    for (i, j) in shift_pairs(t) {
        let tuple = || format!("r={r},parts={parts},i={},j={}", i + 1, j + 1);
        let diff = if r == 0 { multipartite_shift(&parts, i, j)? } else { kr_join_shift(r, &parts, i, j)? };
        tally.positive(&tuple, "shift-raises-abs", diff);
        if n <= BUILD_MAX_N {
            let direct = abs_index(&build(&shifted(&parts, i, j)?)?) - abs_index(&build(&parts)?);
            tally.agree(&tuple, "double-entry", diff, direct, DOUBLE_ENTRY_TOL);
        }
    }
    Ok(())
}

/// Over all multisets of `k` parts of `n - r` vertices, the closed form is
/// maximized exactly at the balanced one (`r = 0` is the plain multipartite case).
pub fn balanced_is_unique_max(n: usize, k: usize, r: usize) -> Result<(bool, f64)> {
    precondition(k >= 2 && n >= r + k, || format!("need k >= 2 and n >= r + k, got n = {n}, k = {k}, r = {r}"))?;
    let eval = |p: &PartSizes| {
        if r == 0 {
            abs_multipartite_closed(p)
        } else {
            abs_kr_join_closed(r, p)
        }
    };
    let balanced = PartSizes::balanced(n - r, k)?;
    let best = eval(&balanced)?;
    let mut margin = f64::INFINITY;
    for t in partitions(n - r, k) {
        let p = PartSizes::new(t)?;
        if p.sorted() != balanced.sorted() {
            margin = margin.min(best - eval(&p)?);
        }
    }
    Ok((margin > 0.0, margin))
}

fn grid_shifts(g: &LemmaGrid, with_join: bool) -> Result<Tally> {
    let rs: Vec<usize> = if with_join { (1..=g.r_max).collect() } else { vec![0] };
    let mut items = Vec::new();
    for &r in &rs {
        for n in (r + 2)..=g.n_max {
            for k in 2..=g.k_max.min(n - r) {
                items.push((r, n, k));
            }
        }
    }
    par_tally(&items, |&(r, n, k), tally| {
        for t in partitions(n - r, k) {
            shift_into(tally, r, &t)?;
        }
        let (_, margin) = balanced_is_unique_max(n, k, r)?;
        if margin.is_finite() {
            tally.positive(&|| format!("r={r},n={n},k={k}"), "balanced-unique-max", margin);
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- six-part merges

fn sixpart_value(n: [usize; 6]) -> Result<f64> {
    abs_sixpart_closed(&SixPart::unchecked(n)?)
}

fn sixpart_direct(n: [usize; 6]) -> Result<f64> {
    Ok(abs_index(&build_sixpart(&SixPart::unchecked(n)?)?))
}

/// The six-part value written term by term, as stated for the construction.
pub fn sixpart_literal(m: [usize; 6]) -> f64 {
    let [n1, n2, n3, n4, n5, n6] = m.map(|v| v as f64);
    let n = n1 + n2 + n3 + n4 + n5 + n6;
    // terms with a zero coefficient may have a degenerate weight; skip them
    let term = |c: f64, s: f64| if c == 0.0 { 0.0 } else { c * w(s) };
    term(n1 * n4, n - n3 - n6)
        + term(n1 * n5, n - n6)
        + term(n2 * n4, n - n3)
        + term(n2 * n5, n)
        + term(n2 * n6, n - n1)
        + term(n3 * n5, n - n4)
        + term(n3 * n6, n - n1 - n4)
}

fn fl1_merged(m: [usize; 6]) -> [usize; 6] {
    let [n1, n2, n3, n4, n5, n6] = m;
    [n1 + n2 + n3 - 1, 0, 1, n4 + n6 - n2, n5 + n2, 0]
}

fn fl1_hypotheses(m: [usize; 6]) -> bool {
    let [n1, n2, n3, n4, n5, n6] = m;
    n1 >= 1 && n4 >= 1 && n6 >= 1 && n3 >= 2 && n1 >= n5 && n3 >= n5 && n4 >= n2 && n6 >= n2 && n2 + n5 >= 1
}

/// `ABS(merged) - ABS(K̄[n1..n6])` for the mixed-shape merge.
pub fn sixpart_merge(m: [usize; 6]) -> Result<f64> {
    precondition(fl1_hypotheses(m), || {
        format!("{m:?} violates n1, n4, n6 >= 1, n3 >= 2, n1, n3 >= n5, n4, n6 >= n2, n2 + n5 >= 1")
    })?;
    Ok(sixpart_value(fl1_merged(m))? - sixpart_value(m)?)
}

/// The intermediate lower bound for the merge difference.
fn fl1_lower_bound(m: [usize; 6]) -> f64 {
    let [n1, n2, n3, n4, n5, n6] = m.map(|v| v as f64);
    let n = n1 + n2 + n3 + n4 + n5 + n6;
    (n3 - 1.0) * n4 * w(n - 1.0) + n1 * n6 * w(n - 1.0) - n6 * w(n - n1 - n4) - n5 * w(n - n4)
        + (n5 + n2) * w(n - n4 - n6 + n2)
}

fn fl1_into(tally: &mut Tally, m: [usize; 6]) -> Result<()> {
    let tuple = || format!("n={m:?}");
    let diff = sixpart_merge(m)?;
    tally.positive(&tuple, "merge-raises-abs", diff);
    tally.nonnegative(&tuple, "proof-lower-bound", diff - fl1_lower_bound(m));
    let merged = fl1_merged(m);
    tally.same_value(&tuple, "closed-vs-literal", sixpart_value(m)?, sixpart_literal(m));
    tally.same_value(&tuple, "merged-closed-vs-literal", sixpart_value(merged)?, sixpart_literal(merged));
    if m.iter().sum::<usize>() <= SIXPART_BUILD_MAX_N {
        let direct = sixpart_direct(merged)? - sixpart_direct(m)?;
        tally.agree(&tuple, "double-entry", diff, direct, super::DOUBLE_ENTRY_TOL);
    }
    Ok(())
}

fn grid_fl1(g: &LemmaGrid) -> Result<Tally> {
    let nm = g.n_max;
    let mut outer = Vec::new();
    for n1 in 1..=nm {
        for n3 in 2..=nm {
            if n1 + n3 + 2 <= nm {
                outer.push((n1, n3));
            }
        }
    }
    par_tally(&outer, |&(n1, n3), tally| {
        let rest = nm - n1 - n3;
        for n5 in 0..=n1.min(n3).min(rest) {
            for n2 in 0..=(rest - n5) / 3 {
                if n2 + n5 == 0 {
                    continue;
                }
                let left = rest - n5 - n2;
                for n4 in n2.max(1)..=left {
                    for n6 in n2.max(1)..=(left - n4) {
                        fl1_into(tally, [n1, n2, n3, n4, n5, n6])?;
                    }
                }
            }
        }
        Ok(())
    })
}

/// `ABS(K̄[0,n2,n3,1,0,n6+n4-1]) - ABS(K̄[0,n2,n3,n4,0,n6])`.
pub fn bl2_merge(n2: usize, n3: usize, n4: usize, n6: usize) -> Result<f64> {
    precondition(n2 >= 1 && n3 >= 1 && n4 >= 2 && n6 >= n2, || {
        format!("bl2 needs n2 >= 1, n3 >= 1, n4 >= 2, n6 >= n2, got ({n2}, {n3}, {n4}, {n6})")
    })?;
    Ok(sixpart_value([0, n2, n3, 1, 0, n6 + n4 - 1])? - sixpart_value([0, n2, n3, n4, 0, n6])?)
}

/// `ABS(K̄[1,0,n3+n1-1,0,n5,n6]) - ABS(K̄[n1,0,n3,0,n5,n6])`.
pub fn fl3_merge(n1: usize, n3: usize, n5: usize, n6: usize) -> Result<f64> {
    precondition(n1 >= 2 && n5 >= 1 && n3 >= n5 && n6 >= 1, || {
        format!("fl3 needs n1 >= 2, n5 >= 1, n3 >= n5, n6 >= 1, got ({n1}, {n3}, {n5}, {n6})")
    })?;
    Ok(sixpart_value([1, 0, n3 + n1 - 1, 0, n5, n6])? - sixpart_value([n1, 0, n3, 0, n5, n6])?)
}

fn merge_into(tally: &mut Tally, before: [usize; 6], after: [usize; 6], diff: f64, bound: f64) -> Result<()> {
    let tuple = || format!("n={before:?}");
    tally.positive(&tuple, "merge-raises-abs", diff);
    tally.nonnegative(&tuple, "proof-lower-bound", diff - bound);
    tally.same_value(&tuple, "closed-vs-literal", sixpart_value(before)?, sixpart_literal(before));
    tally.same_value(&tuple, "merged-closed-vs-literal", sixpart_value(after)?, sixpart_literal(after));
    if before.iter().sum::<usize>() <= BUILD_MAX_N {
        let direct = sixpart_direct(after)? - sixpart_direct(before)?;
        tally.agree(&tuple, "double-entry", diff, direct, DOUBLE_ENTRY_TOL);
    }
    Ok(())
}

fn grid_bl2(g: &LemmaGrid) -> Result<Tally> {
    let nm = g.n_max;
    let outer: Vec<usize> = (1..=nm).collect();
    par_tally(&outer, |&n2, tally| {
        for n3 in 1..=nm {
            for n4 in 2..=nm {
                for n6 in n2..=nm {
                    let n = n2 + n3 + n4 + n6;
                    if n > nm {
                        break;
                    }
                    let diff = bl2_merge(n2, n3, n4, n6)?;
                    let bound = n3 as f64 * (n4 - 1) as f64 * w(n as f64 - 1.0);
                    merge_into(tally, [0, n2, n3, n4, 0, n6], [0, n2, n3, 1, 0, n6 + n4 - 1], diff, bound)?;
                }
            }
        }
        Ok(())
    })
}

fn grid_fl3(g: &LemmaGrid) -> Result<Tally> {
    let nm = g.n_max;
    let outer: Vec<usize> = (2..=nm).collect();
    par_tally(&outer, |&n1, tally| {
        for n5 in 1..=nm {
            for n3 in n5..=nm {
                for n6 in 1..=nm {
                    let n = n1 + n3 + n5 + n6;
                    if n > nm {
                        break;
                    }
                    let diff = fl3_merge(n1, n3, n5, n6)?;
                    let bound = (n1 - 1) as f64 * n6 as f64 * w(n as f64 - 1.0);
                    merge_into(tally, [n1, 0, n3, 0, n5, n6], [1, 0, n3 + n1 - 1, 0, n5, n6], diff, bound)?;
                }
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- K̄_κ[x, y]

fn kxy(x: usize, y: usize, kappa: usize) -> Result<f64> {
    abs_kappa_xy_closed(x, y, kappa)
}

fn kxy_literal(x: usize, y: usize, kappa: usize) -> f64 {
    let (x, y, k) = (x as f64, y as f64, kappa as f64);
    let n = x + y + k + 1.0;
    x * y * w(n - 1.0) + x * k * w(n) + k * w(n - y)
}

/// `ABS(K̄_κ[x+1, y-1]) - ABS(K̄_κ[x, y])`.
pub fn kappa_shift(x: usize, y: usize, kappa: usize) -> Result<f64> {
    precondition(x >= 1 && y >= 2 && kappa >= 1 && y + kappa >= x + 1, || {
        format!("kappa shift needs x >= 1, y >= 2, kappa >= 1, y - x - 1 + kappa >= 0, got ({x}, {y}, {kappa})")
    })?;
    Ok(kxy(x + 1, y - 1, kappa)? - kxy(x, y, kappa)?)
}

fn grid_fil1(g: &LemmaGrid) -> Result<Tally> {
    let nm = g.n_max;
    let outer: Vec<usize> = (1..=nm).collect();
    par_tally(&outer, |&kappa, tally| {
        for x in 1..=nm {
            for y in 2..=nm {
                let n = x + y + kappa + 1;
                if n > nm {
                    break;
                }
                if y + kappa < x + 1 {
                    continue;
                }
                let tuple = || format!("x={x},y={y},kappa={kappa}");
                let diff = kappa_shift(x, y, kappa)?;
                tally.positive(&tuple, "shift-raises-abs", diff);
                let bound = (y + kappa - x - 1) as f64 * w(n as f64 - 1.0);
                tally.positive(&tuple, "proof-lower-bound", diff - bound);
                tally.same_value(&tuple, "closed-vs-literal", kxy(x, y, kappa)?, kxy_literal(x, y, kappa));
                if n <= BUILD_MAX_N {
                    let direct =
                        abs_index(&build_kappa_xy(x + 1, y - 1, kappa)?) - abs_index(&build_kappa_xy(x, y, kappa)?);
                    tally.agree(&tuple, "double-entry", diff, direct, DOUBLE_ENTRY_TOL);
                }
            }
        }
        Ok(())
    })
}

/// Peak of the chain `x ↦ ABS(K̄_κ[x, n-κ-1-x])`: `n/2` for even `n`, `(n-1)/2` for odd.
pub fn chain_peak(n: usize) -> usize {
    n / 2
}

/// `f(c) = ABS(K̄_κ[p+c, q-c]) - ABS(K̄_κ[p+c+1, q-c-1])` with `p` the chain peak
/// and `q = n - κ - 1 - p`.
pub fn fil_difference(n: usize, kappa: usize, c: usize) -> Result<f64> {
    let p = chain_peak(n);
    let q = (n - kappa - 1)
        .checked_sub(p)
        .filter(|&q| q >= c + 2)
        .ok_or_else(|| Error::Precondition(format!("c = {c} is outside the chain for n = {n}, kappa = {kappa}")))?;
    Ok(kxy(p + c, q - c, kappa)? - kxy(p + c + 1, q - c - 1, kappa)?)
}

/// `f(c)` written out for even `n`.
pub fn fil2_literal(n: usize, kappa: usize, c: usize) -> f64 {
    let (n, k, c) = (n as f64, kappa as f64, c as f64);
    (2.0 * c + k + 2.0) * ((n - 3.0) / (n - 1.0)).sqrt() - k * ((n - 2.0) / n).sqrt()
        + k * ((n + 2.0 * k - 2.0 + 2.0 * c) / (n + 2.0 * k + 2.0 + 2.0 * c)).sqrt()
        - k * ((n + 2.0 * k + 2.0 * c) / (n + 2.0 * k + 4.0 + 2.0 * c)).sqrt()
}

/// The odd-`n` counterpart of [`fil2_literal`].
pub fn fil3_literal(n: usize, kappa: usize, c: usize) -> f64 {
    let (nf, k, c) = (n as f64, kappa as f64, c as f64);
    let a = (nf + 2.0 * k + 1.0) / 2.0 + c;
    (2.0 * c + k + 1.0) * w(nf - 1.0) - k * w(nf) + k * (w(a) - w(a + 1.0))
}

/// Degree-6 polynomial in `n` and `κ`; its positivity is the squared form of the tail-gap inequality
/// `w(n-1) > κ (sqrt((n+2κ)/(n+2κ+4)) - sqrt((n+2κ-2)/(n+2κ+2)))`.
pub fn tail_gap_polynomial(n: f64, k: f64) -> f64 {
    let c6 = 64.0 * n * n - 256.0 * n + 192.0;
    let c5 = 128.0 * n.powi(3) - 256.0 * n * n - 640.0 * n + 768.0;
    let c4 = 96.0 * n.powi(4) - 1072.0 * n * n + 352.0 * n + 560.0;
    let c3 = 32.0 * n.powi(5) + 64.0 * n.powi(4) - 448.0 * n.powi(3) - 416.0 * n * n + 1312.0 * n - 1056.0;
    let c2 =
        4.0 * n.powi(6) + 16.0 * n.powi(5) - 76.0 * n.powi(4) - 192.0 * n.powi(3) + 632.0 * n * n + 368.0 * n - 2256.0;
    let c1 = -8.0 * n.powi(5) - 24.0 * n.powi(4) + 152.0 * n.powi(3) + 408.0 * n * n - 720.0 * n - 1728.0;
    let c0 = -n.powi(6) - 6.0 * n.powi(5) + 11.0 * n.powi(4) + 108.0 * n.powi(3) + 44.0 * n * n - 480.0 * n - 576.0;
    (((((c6 * k + c5) * k + c4) * k + c3) * k + c2) * k + c1) * k + c0
}

fn fil_chain_into(tally: &mut Tally, n: usize, kappa: usize, even: bool) -> Result<()> {
    let c_max = if even { (n - 2 * kappa - 6) / 2 } else { (n - 2 * kappa - 5) / 2 };
    let p = chain_peak(n);
    let q = n - kappa - 1 - p;
    let f: Vec<f64> = (0..=c_max).map(|c| fil_difference(n, kappa, c)).collect::<Result<_>>()?;
    for (c, &fc) in f.iter().enumerate() {
        let tuple = || format!("n={n},kappa={kappa},c={c}");
        tally.positive(&tuple, "f-positive", fc);
        let literal = if even { fil2_literal(n, kappa, c) } else { fil3_literal(n, kappa, c) };
        tally.agree(&tuple, "closed-vs-literal", fc, literal, DOUBLE_ENTRY_TOL);
        if n <= BUILD_MAX_N {
            let direct = abs_index(&build_kappa_xy(p + c, q - c, kappa)?)
                - abs_index(&build_kappa_xy(p + c + 1, q - c - 1, kappa)?);
            tally.agree(&tuple, "double-entry", fc, direct, DOUBLE_ENTRY_TOL);
        }
        if c + 1 < f.len() {
            tally.positive(&tuple, "f-increasing", f[c + 1] - fc);
        }
    }
    if even {
        let tuple = || format!("n={n},kappa={kappa}");
        let (nf, k) = (n as f64, kappa as f64);
        let lhs = ((nf - 3.0) / (nf - 1.0)).sqrt();
        let sp = ((nf + 2.0 * k) / (nf + 2.0 * k + 4.0)).sqrt();
        let sq = ((nf + 2.0 * k - 2.0) / (nf + 2.0 * k + 2.0)).sqrt();
        tally.positive(&tuple, "tail-gap", lhs - k * (sp - sq));
        tally.positive(&tuple, "weight-step-gap", lhs - k * (((nf - 2.0) / nf).sqrt() - lhs));
        let poly = tail_gap_polynomial(nf, k);
        tally.positive(&tuple, "tail-gap-polynomial", poly);
        // the polynomial is the numerator of the difference of squares
        let a = 2.0 * k * k * sq * sp;
        let b = 2.0 * k * k - 4.0 * k * k / (nf + 2.0 * k + 2.0) - 4.0 * k * k / (nf + 2.0 * k + 4.0) - 1.0
            + 2.0 / (nf - 1.0);
        let denom = ((nf + 2.0 * k + 2.0) * (nf + 2.0 * k + 4.0) * (nf - 1.0)).powi(2);
        let scale = (a * a).max(b * b).max(1.0);
        tally.agree(&tuple, "tail-gap-squared-identity", a * a - b * b, poly / denom, 1e-9 * scale);
    }
    Ok(())
}

/// Lemma checks for even `n` on the full `c` grid.
pub fn check_fil2_chain(n: usize, kappa: usize) -> Result<LemmaCheck> {
    precondition(n % 2 == 0 && n >= 8, || format!("the even-order chain needs even n >= 8, got {n}"))?;
    precondition(kappa >= 1, || "kappa must be positive".into())?;
    let mut tally = Tally::default();
    if n >= 2 * kappa + 6 {
        fil_chain_into(&mut tally, n, kappa, true)?;
    }
    Ok(tally.finish(LemmaId::Fil2, format!("n = {n}, kappa = {kappa}, c in 0..=(n-2kappa-6)/2")))
}

/// Lemma checks for odd `n` on the full `c` grid.
pub fn check_fil3_chain(n: usize, kappa: usize) -> Result<LemmaCheck> {
    precondition(n % 2 == 1 && n >= 7, || format!("the odd-order chain needs odd n >= 7, got {n}"))?;
    precondition(kappa >= 1, || "kappa must be positive".into())?;
    let mut tally = Tally::default();
    if n >= 2 * kappa + 5 {
        fil_chain_into(&mut tally, n, kappa, false)?;
    }
    Ok(tally.finish(LemmaId::Fil3, format!("n = {n}, kappa = {kappa}, c in 0..=(n-2kappa-5)/2")))
}

fn grid_fil(g: &LemmaGrid, even: bool) -> Result<Tally> {
    let mut items = Vec::new();
    for n in 7..=g.n_max {
        if (n % 2 == 0) != even || (even && n < 8) {
            continue;
        }
        let reserve = if even { 6 } else { 5 };
        for kappa in 1..=(n.saturating_sub(reserve) / 2) {
            items.push((n, kappa));
        }
    }
    par_tally(&items, |&(n, kappa), tally| fil_chain_into(tally, n, kappa, even))
}

// ---------------------------------------------------------------- chains

fn chains_into(tally: &mut Tally, n: usize, kappa: usize) -> Result<()> {
    let peak = chain_peak(n);
    let last = n - kappa - 2;
    if peak > last {
        return Ok(());
    }
    let v: Vec<f64> = (1..=last).map(|x| kxy(x, n - kappa - 1 - x, kappa)).collect::<Result<_>>()?;
    let at = |x: usize| v[x - 1];
    for x in kappa..peak {
        tally.positive(&|| format!("n={n},kappa={kappa},x={x}"), "rising", at(x + 1) - at(x));
    }
    for x in peak..last {
        tally.positive(&|| format!("n={n},kappa={kappa},x={x}"), "falling", at(x) - at(x + 1));
    }
    for x in (1..=last).filter(|&x| x != peak) {
        tally.positive(&|| format!("n={n},kappa={kappa},x={x}"), "unique-argmax", at(peak) - at(x));
    }
    Ok(())
}

/// Unimodality of the chain with its peak at `floor(n/2)`. Vacuous when the
/// peak lies beyond `x = n - κ - 2`.
pub fn check_chains(n: usize, kappa: usize) -> Result<LemmaCheck> {
    precondition(kappa >= 1 && n >= kappa + 3, || {
        format!("chain needs kappa >= 1 and n >= kappa + 3, got n = {n}, kappa = {kappa}")
    })?;
    let mut tally = Tally::default();
    chains_into(&mut tally, n, kappa)?;
    Ok(tally.finish(LemmaId::Chains, format!("n = {n}, kappa = {kappa}, x in 1..=n-kappa-2")))
}

fn grid_chains(g: &LemmaGrid) -> Result<Tally> {
    let items: Vec<(usize, usize)> = (7..=g.n_max).flat_map(|n| (1..=n / 2).map(move |kappa| (n, kappa))).collect();
    par_tally(&items, |&(n, kappa), tally| chains_into(tally, n, kappa))
}

// ---------------------------------------------------------------- final bound

fn final_into(tally: &mut Tally, n: usize, kappa: usize) -> Result<()> {
    let tuple = || format!("n={n},kappa={kappa}");
    let bound = final_theorem_bound(n, kappa)?;
    let kb = abs_multipartite_closed(&PartSizes::new(vec![kappa, n - kappa])?)?;
    let kb_direct = abs_index(&build_complete_bipartite(kappa, n - kappa)?);
    tally.same_value(&tuple, "complete-bipartite-double-entry", kb, kb_direct);
    if 2 * kappa + 2 >= n {
        tally.same_value(&tuple, "bound-equals-extremal", bound, kb);
        if 2 * kappa + 2 == n {
            let alt = kxy(kappa, 1, kappa)?;
            tally.positive(&tuple, "complete-bipartite-beats-kbar", kb - alt);
        }
    } else {
        let x = chain_peak(n);
        let y = n - kappa - 1 - x;
        let best = kxy(x, y, kappa)?;
        tally.same_value(&tuple, "bound-equals-extremal", bound, best);
        tally.same_value(&tuple, "extremal-double-entry", best, abs_index(&build_kappa_xy(x, y, kappa)?));
        let tail = kxy(n - kappa - 2, 1, kappa)?;
        tally.positive(&tuple, "tail-beats-complete-bipartite", tail - kb);
        tally.nonnegative(&tuple, "peak-at-least-tail", best - tail);
    }
    Ok(())
}

/// The three bound formulas equal the ABS of the extremal graphs, and the
/// comparisons used to discard the alternatives hold.
pub fn check_final_theorem_formulas(n: usize, kappa: usize) -> Result<LemmaCheck> {
    precondition(n >= 7 && kappa >= 1 && 2 * kappa <= n, || {
        format!("need n >= 7 and 1 <= kappa <= n/2, got n = {n}, kappa = {kappa}")
    })?;
    let mut tally = Tally::default();
    final_into(&mut tally, n, kappa)?;
    Ok(tally.finish(LemmaId::FinalTheorem, format!("n = {n}, kappa = {kappa}")))
}

fn grid_final(g: &LemmaGrid) -> Result<Tally> {
    let items: Vec<(usize, usize)> = (7..=g.n_max).flat_map(|n| (1..=n / 2).map(move |kappa| (n, kappa))).collect();
    par_tally(&items, |&(n, kappa), tally| final_into(tally, n, kappa))
}

// ---------------------------------------------------------------- pendant relocation

/// `K_q` with a path of the given length hanging from each listed clique vertex.
fn clique_with_paths(q: usize, paths: &[(usize, usize)]) -> Result<Graph> {
    let mut g = build_complete(q)?;
    for &(at, len) in paths {
        if len > 0 {
            g = g.attach_path(at, len)?;
        }
    }
    Ok(g)
}

/// Upper estimate of the relocation difference, where `d` is the degree of the
/// path vertex two steps before the end.
pub fn pendant_shift_estimate(q: usize, d: usize) -> f64 {
    let (q, d) = (q as f64, d as f64);
    1.0 / 3f64.sqrt() + w(d + 2.0) - w(d + 1.0) - w(q + 1.0) + (q - 1.0) * (w(2.0 * q - 2.0) - w(2.0 * q - 1.0))
}

fn pendant_into(tally: &mut Tally, q: usize, n_max: usize) -> Result<()> {
    let bound = 1.0 / 2f64.sqrt() - w(q as f64 + 1.0);
    let tq = || format!("q={q}");
    tally.nonnegative(&tq, "bound-nonpositive", -bound);
    for d in [2, q] {
        tally.positive(&|| format!("q={q},d={d}"), "estimate-below-bound", bound - pendant_shift_estimate(q, d));
    }
    // path of length l at u0, pendants on u1..=ua, u_{q-1} free
    let limit = n_max.min(BUILD_MAX_N);
    for l in 2..=limit.saturating_sub(q) {
        for a in 0..=q - 2 {
            if q + l + a > limit {
                break;
            }
            let tuple = || format!("q={q},l={l},a={a}");
            let mut before = vec![(0, l)];
            before.extend((1..=a).map(|i| (i, 1)));
            let mut after = vec![(0, l - 1), (q - 1, 1)];
            after.extend((1..=a).map(|i| (i, 1)));
            let (g, h) = (clique_with_paths(q, &before)?, clique_with_paths(q, &after)?);
            let diff = abs_index(&g) - abs_index(&h);
            tally.positive(&tuple, "relocation-raises-abs", -diff);
            tally.positive(&tuple, "relocation-below-bound", bound - diff);
            tally.agree(&tuple, "cut-vertices-kept", cut_vertex_count(&g)? as f64, cut_vertex_count(&h)? as f64, 0.0);
        }
    }
    // every clique vertex carries a path: u0 the longest, u1 of length m, the rest pendants
    let rebalance = w(q as f64 + 2.0) - w(q as f64 + 1.0) + 1.0 / 3f64.sqrt() - 1.0 / 2f64.sqrt();
    tally.positive(&tq, "rebalance-negative", -rebalance);
    for l in 2..=limit {
        for m in 2..=l {
            if 2 * q + l + m - 2 > limit {
                break;
            }
            let tuple = || format!("q={q},l={l},m={m}");
            let rest = (2..q).map(|i| (i, 1));
            let before: Vec<_> = [(0, l), (1, m)].into_iter().chain(rest.clone()).collect();
            let after: Vec<_> = [(0, l + 1), (1, m - 1)].into_iter().chain(rest).collect();
            let diff = abs_index(&clique_with_paths(q, &before)?) - abs_index(&clique_with_paths(q, &after)?);
            if m == 2 {
                tally.agree(&tuple, "rebalance-double-entry", diff, rebalance, DOUBLE_ENTRY_TOL);
            } else {
                tally.agree(&tuple, "long-paths-tie", diff, 0.0, DOUBLE_ENTRY_TOL);
            }
        }
    }
    Ok(())
}

fn grid_pendant(g: &LemmaGrid) -> Result<Tally> {
    let items: Vec<usize> = (3..=g.n_max).collect();
    par_tally(&items, |&q, tally| pendant_into(tally, q, g.n_max))
}

// ---------------------------------------------------------------- dispatch

fn grid_label(id: LemmaId, g: &LemmaGrid) -> String {
    match id {
        LemmaId::TuranShift => format!("n <= {}, 2 <= k <= {}, all part multisets", g.n_max, g.k_max),
        LemmaId::JoinShift => {
            format!("n <= {}, 2 <= k <= {}, 1 <= r <= {}, all part multisets", g.n_max, g.k_max, g.r_max)
        }
        _ => format!("n <= {}", g.n_max),
    }
}

/// Runs one lemma over its default grid.
pub fn run_lemma(id: LemmaId, grid: &LemmaGrid) -> Result<LemmaCheck> {
    precondition(grid.n_max >= 3, || "grid needs n_max >= 3".into())?;
    precondition(grid.k_max >= 2, || "grid needs k_max >= 2".into())?;
    let tally = match id {
        LemmaId::Zeta => grid_zeta(grid)?,
        LemmaId::TuranShift => grid_shifts(grid, false)?,
        LemmaId::JoinShift => grid_shifts(grid, true)?,
        LemmaId::Fl1 => grid_fl1(grid)?,
        LemmaId::Bl2 => grid_bl2(grid)?,
        LemmaId::Fl3 => grid_fl3(grid)?,
        LemmaId::Fil1 => grid_fil1(grid)?,
        LemmaId::Fil2 => grid_fil(grid, true)?,
        LemmaId::Fil3 => grid_fil(grid, false)?,
        LemmaId::Chains => grid_chains(grid)?,
        LemmaId::FinalTheorem => grid_final(grid)?,
        LemmaId::PendantShift => grid_pendant(grid)?,
    };
    Ok(tally.finish(id, grid_label(id, grid)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[usize]) -> PartSizes {
        PartSizes::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zeta_signs() {
        assert!(zeta(1, 5) < 0.0 && zeta(1, 6) > zeta(1, 5));
        assert!(zeta1(10, 3) > 0.0 && zeta1(10, 4) > zeta1(10, 3));
        assert_eq!(check_zeta_monotone(1, 4, 100).unwrap().verdict, LemmaVerdict::Pass);
        assert_eq!(check_zeta1_monotone(10, 1, 16).unwrap().verdict, LemmaVerdict::Pass);
        assert!(check_zeta_monotone(2, 4, 10).is_err());
        assert!(check_zeta1_monotone(10, 1, 17).is_err());
    }

    #[test]
    fn shift_examples() {
        assert!(multipartite_shift(&parts(&[4, 2]), 0, 1).unwrap() > 0.0);
        assert!(multipartite_shift(&parts(&[3, 3]), 0, 1).is_err());
        assert!(multipartite_shift(&parts(&[5, 1, 1]), 0, 1).unwrap() > 0.0);
        assert!(kr_join_shift(1, &parts(&[4, 2]), 0, 1).unwrap() > 0.0);
        assert!(kr_join_shift(3, &parts(&[3, 1]), 0, 1).unwrap() > 0.0);
        assert!(kr_join_shift(2, &parts(&[2, 2]), 0, 1).is_err());
    }

    #[test]
    fn partitions_are_complete() {
        assert_eq!(partitions(7, 3), vec![vec![5, 1, 1], vec![4, 2, 1], vec![3, 3, 1], vec![3, 2, 2]]);
        assert_eq!(partitions(10, 1), vec![vec![10]]);
        assert!(partitions(2, 3).is_empty());
        // p(20) restricted to exactly 4 parts
        assert_eq!(partitions(20, 4).len(), 64);
    }

    #[test]
    fn merge_examples() {
        assert!(sixpart_merge([1, 0, 2, 1, 1, 1]).unwrap() > 0.0);
        assert!(sixpart_merge([2, 1, 2, 1, 1, 1]).unwrap() > 0.0);
        assert!(sixpart_merge([1, 0, 1, 1, 1, 1]).is_err());
        assert!(bl2_merge(1, 1, 2, 1).unwrap() >= 0.0);
        assert!(bl2_merge(1, 1, 1, 1).is_err());
        assert!(fl3_merge(2, 1, 1, 1).unwrap() >= 0.0);
    }

    #[test]
    fn kappa_shift_examples() {
        assert!(kappa_shift(1, 3, 1).unwrap() > 0.0);
        assert!(kappa_shift(2, 2, 2).unwrap() > 0.0);
        assert!(kappa_shift(3, 1, 1).is_err());
    }

    #[test]
    fn fil_examples() {
        let c = check_fil2_chain(8, 1).unwrap();
        assert_eq!(c.verdict, LemmaVerdict::Pass);
        assert_eq!(check_fil2_chain(20, 3).unwrap().verdict, LemmaVerdict::Pass);
        assert!(check_fil2_chain(7, 1).is_err());
        assert_eq!(check_fil3_chain(9, 2).unwrap().verdict, LemmaVerdict::Pass);
        assert!((fil_difference(8, 1, 0).unwrap() - fil2_literal(8, 1, 0)).abs() < 1e-12);
    }

    #[test]
    fn chain_examples() {
        assert_eq!(check_chains(10, 2).unwrap().verdict, LemmaVerdict::Pass);
        assert_eq!(check_chains(9, 1).unwrap().verdict, LemmaVerdict::Pass);
        assert_eq!(check_chains(8, 3).unwrap().verdict, LemmaVerdict::Vacuous);
        let argmax = |n: usize, k: usize| {
            (1..=n - k - 2)
                .max_by(|&a, &b| kxy(a, n - k - 1 - a, k).unwrap().total_cmp(&kxy(b, n - k - 1 - b, k).unwrap()))
                .unwrap()
        };
        assert_eq!(argmax(10, 2), 5);
        assert_eq!(argmax(9, 1), 4);
    }

    #[test]
    fn final_examples() {
        for (n, k) in [(8, 1), (9, 2), (8, 4), (8, 3), (7, 3)] {
            assert_eq!(check_final_theorem_formulas(n, k).unwrap().verdict, LemmaVerdict::Pass, "n={n} k={k}");
        }
        assert!((final_theorem_bound(8, 1).unwrap() - kxy(4, 2, 1).unwrap()).abs() < 1e-12);
        assert!((final_theorem_bound(9, 2).unwrap() - kxy(4, 2, 2).unwrap()).abs() < 1e-12);
        assert!(check_final_theorem_formulas(6, 1).is_err());
    }

    #[test]
    fn small_grids_pass() {
        let g = LemmaGrid { n_max: 14, k_max: 4, r_max: 3 };
        for id in LemmaId::ALL {
            let c = run_lemma(id, &g).unwrap();
            assert_eq!(c.verdict, LemmaVerdict::Pass, "{id}: {:?}", &c.failures[..c.failures.len().min(3)]);
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.name().parse::<LemmaId>().unwrap(), id);
        }
        assert!("nosuch".parse::<LemmaId>().is_err());
    }
}
