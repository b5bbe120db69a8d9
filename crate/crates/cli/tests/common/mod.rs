#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden file and the `table` arguments that reproduce it.
pub const GOLDEN_TABLES: [(&str, &[&str]); 12] = [
    ("table01.tsv", &["pk", "--h", "1"]),
    ("table02.tsv", &["pk", "--h", "2"]),
    ("table03.tsv", &["pk", "--h", "3"]),
    ("table04.tsv", &["p"]),
    ("table05.tsv", &["F"]),
    ("table06.tsv", &["H"]),
    ("table07.tsv", &["ck", "--h", "1"]),
    ("table08.tsv", &["ck", "--h", "2"]),
    ("table09.tsv", &["ck", "--h", "3"]),
    ("table10.tsv", &["c"]),
    ("table11.tsv", &["L"]),
    ("table12.tsv", &["M"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn gapcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapcube"))
        .args(args)
        .output()
        .expect("gapcube binary runs")
}

pub fn published_table(args: &[&str]) -> Output {
    let mut full = vec!["table"];
    full.extend_from_slice(args);
    full.push("--paper-layout");
    gapcube(&full)
}
