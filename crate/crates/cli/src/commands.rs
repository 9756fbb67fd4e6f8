use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use abs_extremal::families::*;
use abs_extremal::invariants::ClassConstraint;
use abs_extremal::io::{parse_graphs, to_edge_list, to_graph6};
use abs_extremal::numfmt::sig12;
use abs_extremal::verify::{
    constraints_for, extremal_table, lemma_table, run_lemma, verify_extremal, ClassKind, ExtremalReport, LemmaCheck,
    LemmaGrid, LemmaId, ReportDocument, Table, VerifyOptions,
};
use abs_extremal::{abs_index, canonical_form, EnumSpec, Graph, PartSizes, SixPart};
use serde::Serialize;
use thiserror::Error;

use crate::args::*;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] abs_extremal::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

/// How a successful run ended.
pub enum Status {
    Success,
    /// A claim was refuted, or a lemma check failed or produced findings.
    Refuted,
}

type CmdResult = Result<Status, CliError>;

fn io_err(path: impl AsRef<Path>) -> impl FnOnce(io::Error) -> CliError {
    let path = path.as_ref().display().to_string();
    move |source| CliError::Io { path, source }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing required parameter {flag}")))
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => text = fs::read_to_string(p).map_err(io_err(p))?,
        _ => {
            io::stdin().read_to_string(&mut text).map_err(io_err("<stdin>"))?;
        }
    }
    Ok(text)
}

fn write_stdout(s: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes()).and_then(|_| out.flush()).map_err(io_err("<stdout>"))
}

fn write_file(path: &Path, s: &str) -> Result<(), CliError> {
    fs::write(path, s).map_err(io_err(path))
}

fn table_csv(t: &Table) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Usage(format!("csv output failed: {e}"));
    w.write_record(&t.header).map_err(err)?;
    for r in &t.rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn render(t: &Table, doc: &ReportDocument, format: TableFormat) -> Result<String, CliError> {
    match format {
        TableFormat::Markdown => Ok(t.to_markdown()),
        TableFormat::Csv => table_csv(t),
        TableFormat::Json => Ok(doc.to_json()),
    }
}

// ---------------------------------------------------------------- compute

#[derive(Serialize)]
struct ComputedValue {
    graph6: String,
    n: usize,
    edges: usize,
    abs: f64,
}

pub fn compute(a: &ComputeArgs) -> CmdResult {
    let graphs = parse_graphs(&read_input(a.input.as_deref())?)?;
    let values: Vec<ComputedValue> = graphs
        .iter()
        .map(|g| ComputedValue { graph6: to_graph6(g), n: g.order(), edges: g.edge_count(), abs: abs_index(g) })
        .collect();
    let out = match a.format {
        ValueFormat::Text => values.iter().map(|v| sig12(v.abs) + "\n").collect(),
        ValueFormat::Json => serde_json::to_string_pretty(&values).expect("serializable") + "\n",
        ValueFormat::Csv => {
            let t = Table {
                header: ["graph6", "n", "edges", "abs"].map(String::from).to_vec(),
                rows: values
                    .iter()
                    .map(|v| vec![v.graph6.clone(), v.n.to_string(), v.edges.to_string(), sig12(v.abs)])
                    .collect(),
            };
            table_csv(&t)?
        }
    };
    write_stdout(&out)?;
    Ok(Status::Success)
}

// ---------------------------------------------------------------- build

fn built_family(a: &BuildArgs) -> Result<(Graph, f64), CliError> {
    let parts =
        |v: &Option<Vec<usize>>| -> Result<PartSizes, CliError> { Ok(PartSizes::new(need(v.clone(), "--parts")?)?) };
    Ok(match a.family {
        Family::Path => {
            let n = need(a.n, "--n")?;
            let g = build_path(n)?;
            // P_n is K_n^{n-2}; shorter paths are evaluated directly
            let closed = if n >= 3 { abs_knp_closed(n, n - 2)? } else { abs_index(&g) };
            (g, closed)
        }
        Family::Complete => {
            let n = need(a.n, "--n")?;
            let g = build_complete(n)?;
            let closed = if n >= 2 { abs_multipartite_closed(&PartSizes::new(vec![1; n])?)? } else { 0.0 };
            (g, closed)
        }
        Family::CompleteBipartite => {
            let (x, y) = (need(a.a, "--a")?, need(a.b, "--b")?);
            (build_complete_bipartite(x, y)?, abs_multipartite_closed(&PartSizes::new(vec![x, y])?)?)
        }
        Family::Knp => {
            let (n, p) = (need(a.n, "--n")?, need(a.p, "--p")?);
            (build_knp(n, p)?, abs_knp_closed(n, p)?)
        }
        Family::Turan => {
            let (n, k) = (need(a.n, "--n")?, need(a.k, "--k")?);
            (build_turan(n, k)?, abs_multipartite_closed(&PartSizes::balanced(n, k)?)?)
        }
        Family::Multipartite => {
            let p = parts(&a.parts)?;
            (build_complete_multipartite(&p)?, abs_multipartite_closed(&p)?)
        }
        Family::KrJoin => {
            let r = need(a.r, "--r")?;
            let p = match (&a.parts, a.n, a.k) {
                (Some(_), _, _) => parts(&a.parts)?,
                (None, Some(n), Some(k)) if n >= r => PartSizes::balanced(n - r, k)?,
                _ => return Err(CliError::Usage("kr-join needs --parts, or --n and --k with n >= r".into())),
            };
            (build_kr_join_multipartite(r, &p)?, abs_kr_join_closed(r, &p)?)
        }
        Family::Sixpart => {
            let g = need(a.groups.clone(), "--groups")?;
            let groups: [usize; 6] = g
                .try_into()
                .map_err(|g: Vec<usize>| CliError::Usage(format!("--groups needs six sizes, got {}", g.len())))?;
            let s = SixPart::unchecked(groups)?;
            (build_sixpart(&s)?, abs_sixpart_closed(&s)?)
        }
        Family::KappaXy => {
            let (x, y, k) = (need(a.x, "--x")?, need(a.y, "--y")?, need(a.kappa, "--kappa")?);
            (build_kappa_xy(x, y, k)?, abs_kappa_xy_closed(x, y, k)?)
        }
    })
}

pub fn build(a: &BuildArgs) -> CmdResult {
    let (g, closed) = built_family(a)?;
    let g = if a.canonical { canonical_form(&g).to_graph() } else { g };
    let mut out = match a.format {
        GraphFormat::Graph6 => to_graph6(&g) + "\n",
        GraphFormat::Edges => to_edge_list(&g),
    };
    if a.closed_form {
        out.push_str(&format!("closed-form ABS: {}\n", sig12(closed)));
    }
    write_stdout(&out)?;
    Ok(Status::Success)
}

// ---------------------------------------------------------------- enumerate

pub fn enumerate(a: &EnumerateArgs) -> CmdResult {
    let started = Instant::now();
    let bipartite = a.bipartite || a.kappa.is_some();
    let mut spec = if bipartite { EnumSpec::bipartite(a.n) } else { EnumSpec::connected(a.n) };
    if let Some(p) = a.cut_vertices {
        spec = spec.with_filter(ClassConstraint::CutVertices { p });
    } else if let (Some(k), Some(r)) = (a.k, a.r) {
        spec = spec.with_filter(ClassConstraint::KPartiteness { k, r });
    } else if let Some(kappa) = a.kappa {
        spec = spec.with_filter(ClassConstraint::BipartiteConnectivity { kappa });
    }
    let forms = abs_extremal::enumerate::enumerate_forms(&spec)?;
    let out = if a.count { format!("{}\n", forms.len()) } else { forms.iter().map(|f| f.to_graph6() + "\n").collect() };
    write_stdout(&out)?;
    eprintln!("{} classes in {:.2}s", forms.len(), started.elapsed().as_secs_f64());
    Ok(Status::Success)
}

// ---------------------------------------------------------------- verify

fn orders(c: &ClassArgs) -> Result<Vec<usize>, CliError> {
    match (c.n, c.n_min, c.n_max) {
        (Some(n), _, _) => Ok(vec![n]),
        (None, lo, Some(hi)) => {
            let lo = lo.unwrap_or(1);
            if lo > hi {
                return Err(CliError::Usage(format!("empty order range {lo}..={hi}")));
            }
            Ok((lo..=hi).collect())
        }
        _ => Err(CliError::Usage("give --n or --n-max".into())),
    }
}

fn constraints(c: &ClassArgs, n: usize) -> Vec<ClassConstraint> {
    match c.class {
        ClassName::CutVertices => match c.p {
            Some(p) => vec![ClassConstraint::CutVertices { p }],
            None => constraints_for(ClassKind::CutVertices, n, 0),
        },
        ClassName::KPartiteness => match c.r {
            Some(r) => vec![ClassConstraint::KPartiteness { k: c.k, r }],
            None => constraints_for(ClassKind::KPartiteness, n, c.k),
        },
        ClassName::BipartiteKappa => match c.kappa {
            Some(kappa) => vec![ClassConstraint::BipartiteConnectivity { kappa }],
            None => constraints_for(ClassKind::BipartiteConnectivity, n, 0),
        },
    }
}

fn run_class(c: &ClassArgs) -> Result<Vec<ExtremalReport>, CliError> {
    if !(c.tie_tol > 0.0 && c.tie_tol.is_finite()) {
        return Err(CliError::Usage(format!("--tie-tol must be positive, got {}", c.tie_tol)));
    }
    let opts = VerifyOptions { tie_tol: c.tie_tol };
    let started = Instant::now();
    let mut reports = Vec::new();
    for n in orders(c)? {
        for constraint in constraints(c, n) {
            reports.push(verify_extremal(&constraint, n, &opts)?);
        }
    }
    eprintln!("verified {} classes in {:.2}s", reports.len(), started.elapsed().as_secs_f64());
    Ok(reports)
}

fn class_status(reports: &[ExtremalReport]) -> Status {
    if reports.iter().all(|r| r.verdict.is_success()) {
        Status::Success
    } else {
        Status::Refuted
    }
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let reports = run_class(&a.class)?;
    let status = class_status(&reports);
    let table = extremal_table(&reports);
    let doc = ReportDocument::extremal(reports);
    if let Some(path) = &a.report {
        write_file(path, &doc.to_json())?;
    }
    write_stdout(&render(&table, &doc, a.format)?)?;
    Ok(status)
}

// ---------------------------------------------------------------- lemma-check

fn grid(g: &GridArgs) -> LemmaGrid {
    LemmaGrid { n_max: g.n_max, k_max: g.k_max, r_max: g.r_max }
}

fn run_lemmas(ids: &[LemmaId], g: &GridArgs) -> Result<Vec<LemmaCheck>, CliError> {
    let grid = grid(g);
    let mut checks = Vec::new();
    for &id in ids {
        let started = Instant::now();
        checks.push(run_lemma(id, &grid)?);
        eprintln!("{id}: {:.2}s", started.elapsed().as_secs_f64());
    }
    Ok(checks)
}

fn lemma_status(checks: &[LemmaCheck]) -> Status {
    if checks.iter().all(|c| c.failures.is_empty() && c.findings.is_empty()) {
        Status::Success
    } else {
        Status::Refuted
    }
}

pub fn lemma_check(a: &LemmaArgs) -> CmdResult {
    let ids: Vec<LemmaId> = if a.lemma == "all" {
        LemmaId::ALL.to_vec()
    } else {
        vec![a.lemma.parse().map_err(|_| {
            let known: Vec<&str> = LemmaId::ALL.iter().map(|id| id.name()).collect();
            CliError::Usage(format!("unknown lemma {:?}; known: all, {}", a.lemma, known.join(", ")))
        })?]
    };
    let checks = run_lemmas(&ids, &a.grid)?;
    let status = lemma_status(&checks);
    let table = lemma_table(&checks);
    let doc = ReportDocument::lemmas(checks);
    if let Some(path) = &a.report {
        write_file(path, &doc.to_json())?;
    }
    write_stdout(&render(&table, &doc, a.format)?)?;
    Ok(status)
}

// ---------------------------------------------------------------- table

pub fn table(a: &TableArgs) -> CmdResult {
    match &a.kind {
        TableKind::Class(t) => {
            let reports = run_class(&t.class)?;
            let status = class_status(&reports);
            let table = extremal_table(&reports);
            write_stdout(&render(&table, &ReportDocument::extremal(reports), t.format)?)?;
            Ok(status)
        }
        TableKind::Lemmas(t) => {
            let checks = run_lemmas(&LemmaId::ALL, &t.grid)?;
            let status = lemma_status(&checks);
            let table = lemma_table(&checks);
            write_stdout(&render(&table, &ReportDocument::lemmas(checks), t.format)?)?;
            Ok(status)
        }
    }
}
