//! Tabulation of counts and sequences, including the presets that reproduce
//! the published tables cell for cell.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use gapcube::counting::{self, Engine, Nat};
use gapcube::{GraphKind, SeqKind};
use num_traits::Zero;
use serde::Serialize;

use crate::args::TableKind;
use crate::CliError;

/// A rectangular table: one row per `k` or per `h`, one column per `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub which: TableKind,
    /// `k` or `h`.
    pub row_axis: &'static str,
    pub columns: Vec<i64>,
    pub rows: Vec<(u32, Vec<Nat>)>,
}

/// Extents for [`build`].
#[derive(Debug, Clone)]
pub struct Layout {
    pub rows: RangeInclusive<u32>,
    pub columns: RangeInclusive<i64>,
    /// For pk/ck tables, the fixed `h`.
    pub h: u32,
    /// Print 0 for cycle edge cells with `n <= h`.
    pub zero_below_h: bool,
}

pub fn row_axis(which: TableKind) -> &'static str {
    match which {
        TableKind::PathK | TableKind::CycleK => "k",
        _ => "h",
    }
}

fn first_column(which: TableKind) -> i64 {
    match which {
        TableKind::Fibonacci | TableKind::Lucas => 1,
        _ => 0,
    }
}

/// The published extents. `h` picks among the three pk (or ck) tables.
pub fn paper_layout(which: TableKind, h: Option<u32>) -> Result<Layout, CliError> {
    let fixed = |rows: RangeInclusive<u32>, n_max: i64, h: u32| Layout {
        rows,
        columns: 0..=n_max,
        h,
        zero_below_h: false,
    };
    let by_h = |n_min: i64, n_max: i64| Layout {
        rows: 0..=10,
        columns: n_min..=n_max,
        h: 0,
        zero_below_h: false,
    };
    let layout = match (which, h) {
        (TableKind::PathK, None | Some(1)) => fixed(0..=8, 15, 1),
        (TableKind::PathK, Some(2)) => fixed(0..=6, 16, 2),
        (TableKind::PathK, Some(3)) => fixed(0..=5, 17, 3),
        (TableKind::CycleK, None | Some(1)) => fixed(0..=8, 16, 1),
        (TableKind::CycleK, Some(2)) => fixed(0..=5, 17, 2),
        (TableKind::CycleK, Some(3)) => fixed(0..=4, 18, 3),
        (TableKind::PathK | TableKind::CycleK, Some(h)) => {
            return Err(CliError::Usage(format!(
                "published k-subset tables exist for h = 1, 2, 3 (got h = {h})"
            )))
        }
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--h cannot be combined with --paper-layout for this table".into(),
            ))
        }
        (TableKind::Path | TableKind::PathEdges, None) => by_h(0, 13),
        (TableKind::Fibonacci | TableKind::Lucas, None) => by_h(1, 15),
        (TableKind::Cycle, None) => by_h(0, 16),
        (TableKind::CycleEdges, None) => Layout {
            zero_below_h: true,
            ..by_h(0, 15)
        },
    };
    Ok(layout)
}

/// Parses `7` or `0-10`.
pub fn parse_h_range(text: &str) -> Result<RangeInclusive<u32>, CliError> {
    let bad = || CliError::Usage(format!("invalid h value `{text}` (expected N or A-B)"));
    match text.split_once('-') {
        Some((a, b)) => {
            let (a, b) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let h = text.trim().parse().map_err(|_| bad())?;
            Ok(h..=h)
        }
    }
}

/// Extents from explicit flags.
pub fn custom_layout(
    which: TableKind,
    h: Option<&str>,
    n_max: Option<u32>,
    k_max: Option<u32>,
) -> Result<Layout, CliError> {
    let n_max = i64::from(n_max.unwrap_or(15));
    let columns = first_column(which)..=n_max;
    match which {
        TableKind::PathK | TableKind::CycleK => {
            let hs = parse_h_range(h.unwrap_or("1"))?;
            if hs.start() != hs.end() {
                return Err(CliError::Usage("k-subset tables take a single h".into()));
            }
            let h = *hs.start();
            let kind = if which == TableKind::PathK {
                GraphKind::Path
            } else {
                GraphKind::Cycle
            };
            let k_max = k_max.unwrap_or_else(|| last_nonzero_k(kind, h, n_max as u32));
            Ok(Layout {
                rows: 0..=k_max,
                columns,
                h,
                zero_below_h: false,
            })
        }
        _ => {
            if k_max.is_some() {
                return Err(CliError::Usage(
                    "--k-max only applies to pk and ck tables".into(),
                ));
            }
            Ok(Layout {
                rows: parse_h_range(h.unwrap_or("0-10"))?,
                columns,
                h: 0,
                zero_below_h: false,
            })
        }
    }
}

// Largest k with a nonzero entry for some n <= n_max.
fn last_nonzero_k(kind: GraphKind, h: u32, n_max: u32) -> u32 {
    let e = counting::standard();
    (0..=n_max)
        .map(|n| {
            (0..=counting::max_set_size(n, h))
                .rev()
                .find(|&k| !e.count_k(kind, n, h, k).is_zero())
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

pub fn build(engine: &Engine, which: TableKind, layout: &Layout) -> Result<Table, CliError> {
    let mut rows = Vec::new();
    for r in layout.rows.clone() {
        let mut cells = Vec::new();
        for n in layout.columns.clone() {
            cells.push(cell(engine, which, layout, r, n)?);
        }
        rows.push((r, cells));
    }
    Ok(Table {
        which,
        row_axis: row_axis(which),
        columns: layout.columns.clone().collect(),
        rows,
    })
}

fn cell(
    engine: &Engine,
    which: TableKind,
    layout: &Layout,
    row: u32,
    n: i64,
) -> Result<Nat, CliError> {
    let nu = u32::try_from(n).map_err(|_| CliError::Usage(format!("negative column {n}")))?;
    let value = match which {
        TableKind::PathK => engine.path_count_k(nu, layout.h, row),
        TableKind::CycleK => engine.cycle_count_k(nu, layout.h, row),
        TableKind::Path => engine.path_count(nu, row),
        TableKind::Cycle => engine.cycle_count(nu, row),
        TableKind::PathEdges => engine.path_edges(nu, row),
        TableKind::CycleEdges if layout.zero_below_h && nu <= row => Nat::zero(),
        TableKind::CycleEdges => engine.cycle_edges(nu, row),
        TableKind::Fibonacci => engine.sequence(SeqKind::Fibonacci, row)?.nat(n)?,
        TableKind::Lucas => engine.sequence(SeqKind::Lucas, row)?.nat(n)?,
    };
    Ok(value)
}

impl Table {
    fn corner(&self) -> String {
        format!("{}/n", self.row_axis)
    }

    pub fn to_delimited(&self, sep: char) -> String {
        let mut out = self.corner();
        for n in &self.columns {
            let _ = write!(out, "{sep}{n}");
        }
        out.push('\n');
        for (label, cells) in &self.rows {
            let _ = write!(out, "{label}");
            for v in cells {
                let _ = write!(out, "{sep}{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row {
            label: u32,
            values: Vec<String>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            table: &'a str,
            row_axis: &'a str,
            columns: &'a [i64],
            rows: Vec<Row>,
        }
        let doc = Doc {
            table: table_name(self.which),
            row_axis: self.row_axis,
            columns: &self.columns,
            rows: self
                .rows
                .iter()
                .map(|(label, cells)| Row {
                    label: *label,
                    values: cells.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
    }
}

pub fn table_name(which: TableKind) -> &'static str {
    match which {
        TableKind::PathK => "pk",
        TableKind::CycleK => "ck",
        TableKind::Path => "p",
        TableKind::Cycle => "c",
        TableKind::Fibonacci => "F",
        TableKind::Lucas => "L",
        TableKind::PathEdges => "H",
        TableKind::CycleEdges => "M",
    }
}
