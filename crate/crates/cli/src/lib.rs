//! Command-line front end for `gapcube`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity
//! error.

pub mod args;
pub mod tables;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use gapcube::counting::{self, Engine, Mutation, Nat};
use gapcube::enumeration::Enumerator;
use gapcube::verify::{self, SweepBounds};
use gapcube::{CubeGraph, GapGraph, GraphKind, HSequence, SeqKind};

use crate::args::{
    Cli, Command, CountArgs, CubeArgs, Format, GraphArgs, Output, Route, SeqArgs, SeqName,
    TableArgs, VerifyArgs,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Capacity(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Capacity(_) => EXIT_CAPACITY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Capacity(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<gapcube::Error> for CliError {
    fn from(e: gapcube::Error) -> Self {
        match e {
            gapcube::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Never
/// exits the process; returns the exit code instead.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Table(a) => cmd_table(a, stdout),
        Command::Cube(a) => cmd_cube(a, stdout, stderr),
        Command::Graph(a) => cmd_graph(a, stdout),
        Command::Count(a) => cmd_count(a, stdout),
        Command::Seq(a) => cmd_seq(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
    }
}

fn pick_format(
    output: &Output,
    default: Format,
    allowed: &[Format],
    command: &str,
) -> Result<Format, CliError> {
    let format = output.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(CliError::Usage(
            format!("format {format:?} is not available for `{command}`").to_lowercase(),
        ))
    }
}

fn emit(output: &Output, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn cmd_table(a: TableArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let format = pick_format(
        &a.output,
        Format::Tsv,
        &[Format::Tsv, Format::Csv, Format::Json],
        "table",
    )?;
    let layout = if a.paper_layout {
        if a.n_max.is_some() || a.k_max.is_some() {
            return Err(CliError::Usage(
                "--paper-layout fixes the extents; drop --n-max/--k-max".into(),
            ));
        }
        let h =
            a.h.as_deref()
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| CliError::Usage(format!("invalid h `{s}`")))
                })
                .transpose()?;
        tables::paper_layout(a.which, h)?
    } else {
        tables::custom_layout(a.which, a.h.as_deref(), a.n_max, a.k_max)?
    };
    let table = tables::build(counting::standard(), a.which, &layout)?;
    let text = match format {
        Format::Csv => table.to_delimited(','),
        Format::Json => table.to_json(),
        _ => table.to_delimited('\t'),
    };
    emit(&a.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn enumerator(cap: Option<u32>) -> Result<Enumerator, CliError> {
    Ok(match cap {
        Some(cap) => Enumerator::with_cap(cap)?,
        None => Enumerator::default(),
    })
}

fn cmd_cube(a: CubeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let format = pick_format(
        &a.output,
        Format::Dot,
        &[Format::Dot, Format::Json, Format::Edgelist],
        "cube",
    )?;
    let g = GapGraph::new(a.kind.into(), a.n, a.h);
    let cube = CubeGraph::build_with(&g, &enumerator(a.cap)?)?;
    let text = match format {
        Format::Json => cube.to_json(),
        Format::Edgelist => cube.to_edgelist(),
        _ => cube.to_dot(),
    };
    emit(&a.output, &text, stdout)?;
    let _ = writeln!(
        stderr,
        "vertices: {}\nedges: {}",
        cube.vertex_count(),
        cube.edge_count()
    );
    Ok(EXIT_OK)
}

fn cmd_graph(a: GraphArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let format = pick_format(
        &a.output,
        Format::Edgelist,
        &[Format::Edgelist, Format::Dot],
        "graph",
    )?;
    let g = GapGraph::new(a.kind.into(), a.n, a.h);
    let text = match format {
        Format::Dot => g.to_dot(),
        _ => g.edges().to_text(),
    };
    emit(&a.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn undefined_route(route: Route, what: &str) -> CliError {
    CliError::Usage(format!("route {route:?} is not defined for {what}").to_lowercase())
}

fn cmd_count(a: CountArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let e = counting::standard();
    let kind: GraphKind = a.kind.into();
    let (n, h) = (a.n, a.h);
    let value: Nat = match (a.edges, a.k) {
        (true, Some(_)) => {
            return Err(CliError::Usage("--edges does not take a set size k".into()));
        }
        (false, None) => match a.route {
            Route::Sum | Route::Closed => e.count(kind, n, h),
            Route::Recurrence => match kind {
                GraphKind::Path => e.path_count_rec(n, h),
                GraphKind::Cycle => e.cycle_count_rec(n, h),
            },
            Route::Oracle => enumerator(a.cap)?
                .count_by_size(&GapGraph::new(kind, n, h))?
                .values()
                .sum(),
            Route::Conv => return Err(undefined_route(a.route, "set counts")),
        },
        (false, Some(k)) => match a.route {
            Route::Sum | Route::Closed => e.count_k(kind, n, h, k),
            Route::Oracle => enumerator(a.cap)?
                .count_by_size(&GapGraph::new(kind, n, h))?
                .remove(&k)
                .unwrap_or_default(),
            Route::Recurrence | Route::Conv => {
                return Err(undefined_route(a.route, "k-subset counts"))
            }
        },
        (true, None) => match (a.route, kind) {
            (Route::Sum, _) | (Route::Closed, GraphKind::Path) => e.edges(kind, n, h),
            (Route::Closed, GraphKind::Cycle) => e.cycle_edges_closed(n, h)?,
            (Route::Conv, GraphKind::Path) => e.path_edges_conv(n, h)?,
            (Route::Conv, GraphKind::Cycle) => e.cycle_edges_conv(n, h)?,
            (Route::Oracle, _) => {
                let cube = CubeGraph::build_with(&GapGraph::new(kind, n, h), &enumerator(a.cap)?)?;
                Nat::from(cube.edge_count())
            }
            (Route::Recurrence, _) => return Err(undefined_route(a.route, "edge counts")),
        },
    };
    writeln!(stdout, "{value}").map_err(|e| CliError::Io(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_seq(a: SeqArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let format = pick_format(
        &a.output,
        Format::Tsv,
        &[Format::Tsv, Format::Csv, Format::Json],
        "seq",
    )?;
    let kind = match a.name {
        SeqName::F => SeqKind::Fibonacci,
        SeqName::L => SeqKind::Lucas,
        SeqName::Fbar => SeqKind::ExtendedFibonacci,
        SeqName::Lbar => SeqKind::ExtendedLucas,
    };
    let seq = HSequence::new(kind, a.h)?;
    let from = a.n_min.unwrap_or_else(|| seq.first_index());
    let terms = seq.terms(from, a.n_max)?;
    let indexed = (from..=a.n_max).zip(terms);
    let text = match format {
        Format::Json => {
            let values: Vec<(i64, String)> = indexed.map(|(n, v)| (n, v.to_string())).collect();
            let doc = serde_json::json!({
                "sequence": kind.to_string(),
                "h": a.h,
                "terms": values.iter().map(|(n, v)| serde_json::json!({"n": n, "value": v})).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&doc).expect("sequence serializes") + "\n"
        }
        _ => {
            let sep = if format == Format::Csv { ',' } else { '\t' };
            let mut out = format!("n{sep}{kind}\n");
            for (n, v) in indexed {
                out.push_str(&format!("{n}{sep}{v}\n"));
            }
            out
        }
    };
    emit(&a.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    a: VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let format = pick_format(
        &a.output,
        Format::Tsv,
        &[Format::Tsv, Format::Json],
        "verify",
    )?;
    let engine = match a.mutate.as_deref() {
        None => Engine::new(),
        Some(name) => {
            let m = Mutation::from_name(name)
                .ok_or_else(|| CliError::Usage(format!("unknown mutation `{name}`")))?;
            let _ = writeln!(stderr, "warning: running with injected mutation {name}");
            Engine::with_mutation(m)
        }
    };
    let bounds = SweepBounds::new(a.n_max, a.h_max, a.oracle_n_max);
    let reports = verify::run_suite_with(&engine, bounds)?;
    let text = match format {
        Format::Json => verify::to_json(&reports),
        _ => verify::summary_table(&reports),
    };
    emit(&a.output, &text, stdout)?;
    if verify::all_passed(&reports) {
        Ok(EXIT_OK)
    } else {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        let _ = writeln!(stderr, "{failed} identities failed");
        Ok(EXIT_VERIFY_FAILED)
    }
}
