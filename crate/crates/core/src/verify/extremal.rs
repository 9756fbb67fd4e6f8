//! Exhaustive maximization of ABS over a graph class, compared against the
//! predicted extremal graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::abs::abs_index;
use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{enumerate_forms, EnumMode, EnumSpec};
use crate::error::Result;
use crate::families::{
    abs_kappa_xy_closed, abs_knp_closed, abs_kr_join_closed, abs_multipartite_closed, build_complete_bipartite,
    build_kappa_xy, build_knp, build_kr_join_multipartite, PartSizes,
};
use crate::graph::{bits, Graph};
use crate::invariants::{block_membership, blocks_are_cliques, cut_vertices, satisfies, ClassConstraint};

use super::{final_theorem_bound, Verdict, DEFAULT_TIE_TOL};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Two ABS values closer than this are treated as tied.
    pub tie_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { tie_tol: DEFAULT_TIE_TOL }
    }
}

/// Block structure of a maximizer: every block a clique, every cut-vertex in
/// exactly two blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStructure {
    pub blocks_are_cliques: bool,
    pub cut_vertices_in_two_blocks: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Maximizer {
    pub graph6: CanonicalForm,
    pub abs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_structure: Option<BlockStructure>,
}

/// The graph the extremal claim predicts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpectedGraph {
    pub family: String,
    pub graph6: CanonicalForm,
    /// ABS of the built graph.
    pub abs: f64,
    /// Closed-form value for the family member.
    pub closed_form: f64,
    /// The claimed upper bound, where one is stated as a formula.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_formula: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Isomorphism classes enumerated before filtering.
    pub enumerated: usize,
    /// Classes in the constrained class.
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub constraint: ClassConstraint,
    pub n: usize,
    pub verdict: Verdict,
    pub max_abs: Option<f64>,
    pub maximizers: Vec<Maximizer>,
    pub expected: Option<ExpectedGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub stats: RunStats,
}

/// What the class's extremal claim predicts at this order.
enum Prediction {
    Graph(ExpectedGraph),
    /// The claim does not cover these parameters; report the class only.
    Descriptive(String),
    /// The parameters admit no graph.
    Empty(String),
}

fn expected(family: String, g: Graph, closed_form: f64, bound_formula: Option<f64>) -> Prediction {
    Prediction::Graph(ExpectedGraph {
        family,
        graph6: canonical_form(&g),
        abs: abs_index(&g),
        closed_form,
        bound_formula,
    })
}

fn predict(c: &ClassConstraint, n: usize) -> Result<Prediction> {
    Ok(match *c {
        ClassConstraint::CutVertices { p } => {
            if n < 3 {
                Prediction::Descriptive(format!("K_n^p is defined for n >= 3, got n = {n}"))
            } else if p > n - 2 {
                Prediction::Empty(format!("a connected graph on {n} vertices has at most {} cut-vertices", n - 2))
            } else {
                expected(format!("K_{n}^{p}"), build_knp(n, p)?, abs_knp_closed(n, p)?, None)
            }
        }
        ClassConstraint::KPartiteness { k, r } => {
            if r == 0 {
                Prediction::Descriptive("r = 0 is the plain k-colorable class; no extremal claim is made".into())
            } else if n < k || r > n - k {
                Prediction::Empty(format!("v_{k} of a graph on {n} vertices is at most {}", n.saturating_sub(k)))
            } else {
                let parts = PartSizes::balanced(n - r, k)?;
                let g = build_kr_join_multipartite(r, &parts)?;
                expected(format!("K_{r} v T({},{k})", n - r), g, abs_kr_join_closed(r, &parts)?, None)
            }
        }
        ClassConstraint::BipartiteConnectivity { kappa } => {
            if 2 * kappa > n {
                Prediction::Empty(format!("a bipartite graph on {n} vertices has connectivity at most {}", n / 2))
            } else if n < 7 {
                Prediction::Descriptive("the bipartite connectivity claim covers n >= 7 only".into())
            } else if 2 * kappa + 2 >= n {
                let parts = PartSizes::new(vec![kappa, n - kappa])?;
                let g = build_complete_bipartite(kappa, n - kappa)?;
                let bound = final_theorem_bound(n, kappa)?;
                expected(format!("K_{{{kappa},{}}}", n - kappa), g, abs_multipartite_closed(&parts)?, Some(bound))
            } else {
                let x = n / 2;
                let y = n - kappa - 1 - x;
                let g = build_kappa_xy(x, y, kappa)?;
                let bound = final_theorem_bound(n, kappa)?;
                expected(format!("Kbar_{kappa}[{x},{y}]"), g, abs_kappa_xy_closed(x, y, kappa)?, Some(bound))
            }
        }
    })
}

fn block_structure(g: &Graph) -> Result<BlockStructure> {
    let membership = block_membership(g)?;
    let cut = cut_vertices(g)?;
    Ok(BlockStructure {
        blocks_are_cliques: blocks_are_cliques(g)?,
        cut_vertices_in_two_blocks: bits(cut).all(|v| membership[v] == 2),
    })
}

/// Enumerates the class exhaustively and checks that its ABS maximizer is
/// unique up to isomorphism and equal to the predicted graph.
pub fn verify_extremal(constraint: &ClassConstraint, n: usize, opts: &VerifyOptions) -> Result<ExtremalReport> {
    constraint.validate()?;
    let mode = match constraint {
        ClassConstraint::BipartiteConnectivity { .. } => EnumMode::ConnectedBipartite,
        _ => EnumMode::AllConnected,
    };
    let forms = enumerate_forms(&EnumSpec { n, mode, filter: None })?;
    let prediction = predict(constraint, n)?;

    // order-preserving parallel evaluation keeps the result independent of the worker count
    let members: Vec<(CanonicalForm, f64)> = forms
        .par_iter()
        .map(|f| -> Result<Option<(CanonicalForm, f64)>> {
            let g = f.to_graph();
            Ok(satisfies(&g, constraint)?.then(|| (f.clone(), abs_index(&g))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let stats = RunStats { enumerated: forms.len(), class_size: members.len() };
    let max_abs = members.iter().map(|m| m.1).reduce(f64::max);
    let mut maximizers = Vec::new();
    if let Some(max) = max_abs {
        for (form, abs) in &members {
            if max - abs <= opts.tie_tol {
                let block_structure = match constraint {
                    ClassConstraint::CutVertices { .. } => Some(block_structure(&form.to_graph())?),
                    _ => None,
                };
                maximizers.push(Maximizer { graph6: form.clone(), abs: *abs, block_structure });
            }
        }
    }

    let (verdict, expected, note) = match prediction {
        _ if members.is_empty() => (Verdict::Vacuous, None, Some("the class is empty".to_string())),
        Prediction::Empty(why) => (Verdict::Refuted, None, Some(format!("class predicted empty but is not: {why}"))),
        Prediction::Descriptive(why) => (Verdict::Descriptive, None, Some(why)),
        Prediction::Graph(e) => {
            let max = max_abs.expect("nonempty class");
            let unique = maximizers.len() == 1 && maximizers[0].graph6 == e.graph6;
            let value_ok = (max - e.closed_form).abs() <= opts.tie_tol
                && e.bound_formula.map_or(true, |b| (max - b).abs() <= opts.tie_tol);
            let verdict = if unique && value_ok { Verdict::Confirmed } else { Verdict::Refuted };
            let note = match (unique, value_ok) {
                (true, true) => None,
                (false, _) => Some(format!("{} maximizer(s), expected exactly {}", maximizers.len(), e.family)),
                (true, false) => Some("maximum differs from the closed-form value".to_string()),
            };
            (verdict, Some(e), note)
        }
    };

    Ok(ExtremalReport { constraint: *constraint, n, verdict, max_abs, maximizers, expected, note, stats })
}

/// All constraints of one kind that make sense at order `n`.
pub fn constraints_for(kind: ClassKind, n: usize, k: usize) -> Vec<ClassConstraint> {
    match kind {
        ClassKind::CutVertices => (0..=n.saturating_sub(2)).map(|p| ClassConstraint::CutVertices { p }).collect(),
        ClassKind::KPartiteness => (1..=n.saturating_sub(k)).map(|r| ClassConstraint::KPartiteness { k, r }).collect(),
        ClassKind::BipartiteConnectivity => {
            (1..=n / 2).map(|kappa| ClassConstraint::BipartiteConnectivity { kappa }).collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    CutVertices,
    KPartiteness,
    BipartiteConnectivity,
}
