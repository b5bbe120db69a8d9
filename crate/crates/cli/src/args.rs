use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gapcube",
    version,
    about = "Independent sets of path and cycle powers, their Hasse diagrams, and exact counts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of counts or sequence values.
    Table(TableArgs),
    /// Build a Hasse diagram of independent sets and export it.
    Cube(CubeArgs),
    /// Export a path or cycle power.
    Graph(GraphArgs),
    /// Print a single count, optionally through a chosen route.
    Count(CountArgs),
    /// Print terms of an h-Fibonacci or h-Lucas sequence.
    Seq(SeqArgs),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Independent k-subsets of the path power, rows k.
    #[value(name = "pk")]
    PathK,
    /// Independent k-subsets of the cycle power, rows k.
    #[value(name = "ck")]
    CycleK,
    /// All independent sets of the path power, rows h.
    #[value(name = "p")]
    Path,
    /// All independent sets of the cycle power, rows h.
    #[value(name = "c")]
    Cycle,
    /// h-Fibonacci sequence, rows h.
    #[value(name = "F")]
    Fibonacci,
    /// h-Lucas sequence, rows h.
    #[value(name = "L")]
    Lucas,
    /// Edges of the path-power Hasse diagram, rows h.
    #[value(name = "H")]
    PathEdges,
    /// Edges of the cycle-power Hasse diagram, rows h.
    #[value(name = "M")]
    CycleEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Path,
    Cycle,
}

impl From<Kind> for gapcube::GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Path => gapcube::GraphKind::Path,
            Kind::Cycle => gapcube::GraphKind::Cycle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// The defining sum over set sizes.
    Sum,
    /// Closed form (binomial sums; n F_(n-h) for cycle edges).
    Closed,
    /// The delayed recurrence on totals.
    Recurrence,
    /// Sequence convolution (edge counts only).
    Conv,
    /// Brute-force enumeration.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    F,
    L,
    Fbar,
    Lbar,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format.
    #[arg(long)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub which: TableKind,
    /// Power h: a single value, or an inclusive range `A-B` for tables with
    /// one row per h.
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Largest k row for pk/ck tables.
    #[arg(long)]
    pub k_max: Option<u32>,
    /// Reproduce the extents (and filler cells) of the published tables.
    #[arg(long)]
    pub paper_layout: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CubeArgs {
    pub kind: Kind,
    pub n: u32,
    pub h: u32,
    /// Largest n accepted for enumeration.
    #[arg(long)]
    pub cap: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    pub kind: Kind,
    pub n: u32,
    pub h: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub kind: Kind,
    pub n: u32,
    pub h: u32,
    /// Only count sets of this size.
    pub k: Option<u32>,
    /// Count Hasse diagram edges instead of independent sets.
    #[arg(long)]
    pub edges: bool,
    #[arg(long, default_value = "sum")]
    pub route: Route,
    #[arg(long)]
    pub cap: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    pub name: SeqName,
    #[arg(long)]
    pub h: u32,
    /// First index (defaults to 1, or -h for the extended sequences).
    #[arg(long, allow_hyphen_values = true)]
    pub n_min: Option<i64>,
    #[arg(long, default_value_t = 15)]
    pub n_max: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 40)]
    pub n_max: u32,
    #[arg(long, default_value_t = 10)]
    pub h_max: u32,
    #[arg(long, default_value_t = 16)]
    pub oracle_n_max: u32,
    /// Inject a deliberate base-case bug (fibonacci-base, lucas-base,
    /// binomial-negative-top) to confirm the suite catches it.
    #[arg(long, hide = true)]
    pub mutate: Option<String>,
    #[command(flatten)]
    pub output: Output,
}
