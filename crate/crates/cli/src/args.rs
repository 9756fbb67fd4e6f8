use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "abs-extremal", version, about = "ABS index computation and extremal verification")]
pub struct Cli {
    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the ABS index of each graph in an edge-list or graph6 input.
    Compute(ComputeArgs),
    /// Build a member of an extremal family.
    Build(BuildArgs),
    /// List one graph6 line per isomorphism class of connected graphs.
    Enumerate(EnumerateArgs),
    /// Exhaustively check the extremal graph of a constrained class.
    Verify(VerifyArgs),
    /// Evaluate a lemma's inequalities over a parameter grid.
    LemmaCheck(LemmaArgs),
    /// Print a summary table of verification runs or lemma checks.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ValueFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Input file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
    pub format: ValueFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Complete,
    CompleteBipartite,
    Knp,
    Turan,
    Multipartite,
    KrJoin,
    Sixpart,
    KappaXy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub x: Option<usize>,
    #[arg(long)]
    pub y: Option<usize>,
    #[arg(long)]
    pub kappa: Option<usize>,
    /// Part sizes, comma separated (multipartite, kr-join).
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Six group sizes n1..n6, comma separated (sixpart).
    #[arg(long, value_delimiter = ',')]
    pub groups: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
    /// Relabel to canonical form before printing.
    #[arg(long)]
    pub canonical: bool,
    /// Also print the closed-form ABS value.
    #[arg(long)]
    pub closed_form: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Connected bipartite graphs only.
    #[arg(long)]
    pub bipartite: bool,
    /// Keep graphs with exactly this many cut-vertices.
    #[arg(long, conflicts_with_all = ["k", "kappa"])]
    pub cut_vertices: Option<usize>,
    /// With `--r`: keep graphs whose vertex k-partiteness is r.
    #[arg(long, requires = "r")]
    pub k: Option<usize>,
    #[arg(long, requires = "k")]
    pub r: Option<usize>,
    /// Keep bipartite graphs of this vertex connectivity (implies --bipartite).
    #[arg(long)]
    pub kappa: Option<usize>,
    /// Print only the number of classes.
    #[arg(long)]
    pub count: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    CutVertices,
    KPartiteness,
    BipartiteKappa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ClassArgs {
    #[arg(value_enum)]
    pub class: ClassName,
    /// Order; shorthand for `--n-min N --n-max N`.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<usize>,
    #[arg(long, requires = "n_max")]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Number of cut-vertices (cut-vertices); every feasible value when omitted.
    #[arg(long, conflicts_with = "all_p")]
    pub p: Option<usize>,
    #[arg(long)]
    pub all_p: bool,
    /// Number of color classes (k-partiteness).
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Vertex k-partiteness (k-partiteness); every value 1..=n-k when omitted.
    #[arg(long, conflicts_with = "all_r")]
    pub r: Option<usize>,
    #[arg(long)]
    pub all_r: bool,
    /// Vertex connectivity (bipartite-kappa); every value 1..=n/2 when omitted.
    #[arg(long, conflicts_with = "all_kappa")]
    pub kappa: Option<usize>,
    #[arg(long)]
    pub all_kappa: bool,
    /// Two ABS values closer than this count as tied.
    #[arg(long, default_value_t = 1e-9)]
    pub tie_tol: f64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Write the JSON report document here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Summary printed to standard output.
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    #[arg(long, default_value_t = 6)]
    pub k_max: usize,
    #[arg(long, default_value_t = 5)]
    pub r_max: usize,
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    /// Lemma id, or `all`.
    pub lemma: String,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
}

#[derive(Subcommand, Debug)]
pub enum TableKind {
    /// Verification summary for a class over a range of orders.
    Class(ClassTableArgs),
    /// Lemma check summary.
    Lemmas(LemmaTableArgs),
}

#[derive(Args, Debug)]
pub struct ClassTableArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct LemmaTableArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(subcommand)]
    pub kind: TableKind,
}
