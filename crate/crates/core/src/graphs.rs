//! Powers of paths and cycles.
//!
//! Vertices are `1..=n`. Adjacency is a predicate on `(kind, n, h)`; nothing
//! is stored.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
}

impl GraphKind {
    pub fn is_circular(self) -> bool {
        self == GraphKind::Cycle
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
        })
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            other => Err(Error::InvalidArgument(format!(
                "unknown graph kind `{other}` (expected path or cycle)"
            ))),
        }
    }
}

/// The `h`-th power of the path or cycle on `n` vertices: `v_i` and `v_j`
/// are adjacent when their (circular, for cycles) index distance is at most
/// `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GapGraph {
    pub kind: GraphKind,
    pub n: u32,
    pub h: u32,
}

impl GapGraph {
    pub fn new(kind: GraphKind, n: u32, h: u32) -> Self {
        Self { kind, n, h }
    }

    pub fn path(n: u32, h: u32) -> Self {
        Self::new(GraphKind::Path, n, h)
    }

    pub fn cycle(n: u32, h: u32) -> Self {
        Self::new(GraphKind::Cycle, n, h)
    }

    /// Adjacency check with range validation.
    pub fn is_edge(&self, i: u32, j: u32) -> Result<bool> {
        for v in [i, j] {
            if v < 1 || v > self.n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: i64::from(v),
                    min: 1,
                    max: i64::from(self.n),
                });
            }
        }
        Ok(self.adjacent(i, j))
    }

    /// Unchecked adjacency; callers guarantee `1 <= i, j <= n`.
    #[inline]
    pub(crate) fn adjacent(&self, i: u32, j: u32) -> bool {
        if i == j {
            return false;
        }
        let d = i.abs_diff(j);
        match self.kind {
            GraphKind::Path => d <= self.h,
            GraphKind::Cycle => d <= self.h || d + self.h >= self.n,
        }
    }

    pub fn edges(&self) -> EdgeList {
        let mut pairs = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.adjacent(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        EdgeList { pairs }
    }

    /// Undirected DOT with vertices labelled `v1..vn`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {}_{}_{} {{", self.kind, self.n, self.h);
        for v in 1..=self.n {
            let _ = writeln!(out, "  v{v};");
        }
        for (i, j) in self.edges().pairs() {
            let _ = writeln!(out, "  v{i} -- v{j};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for GapGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, h={})", self.kind, self.n, self.h)
    }
}

/// Unordered vertex pairs `(i, j)`, `i < j`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EdgeList {
    pairs: Vec<(u32, u32)>,
}

impl EdgeList {
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// One `i j` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, j) in &self.pairs {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_square_on_four_vertices() {
        let g = GapGraph::path(4, 2);
        assert_eq!(g.edges().pairs(), &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn zeroth_power_is_edgeless() {
        for n in 0..10 {
            assert!(GapGraph::path(n, 0).edges().is_empty());
            assert!(GapGraph::cycle(n, 0).edges().is_empty());
        }
    }

    #[test]
    fn five_cycle() {
        let g = GapGraph::cycle(5, 1);
        assert_eq!(g.edges().pairs(), &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(GapGraph::cycle(5, 2).edges().len(), 10);
    }

    #[test]
    fn is_edge_cases() {
        assert!(GapGraph::cycle(7, 2).is_edge(1, 6).unwrap());
        assert!(!GapGraph::path(7, 2).is_edge(1, 6).unwrap());
        assert!(!GapGraph::path(5, 1).is_edge(3, 3).unwrap());
        assert!(GapGraph::path(5, 1).is_edge(0, 3).is_err());
        assert!(GapGraph::path(5, 1).is_edge(2, 6).is_err());
    }

    #[test]
    fn exports() {
        let g = GapGraph::path(3, 1);
        assert_eq!(g.edges().to_text(), "1 2\n2 3\n");
        assert_eq!(
            g.to_dot(),
            "graph path_3_1 {\n  v1;\n  v2;\n  v3;\n  v1 -- v2;\n  v2 -- v3;\n}\n"
        );
    }

    #[test]
    fn path_edge_count_closed_form() {
        for h in 0..=10u32 {
            for n in 2 * h + 1..=50 {
                let expected = n * h - h * (h + 1) / 2;
                assert_eq!(
                    GapGraph::path(n, h).edges().len() as u32,
                    expected,
                    "n={n} h={h}"
                );
            }
        }
    }

    #[test]
    fn small_cycles_are_complete() {
        for h in 0..=10u32 {
            for n in 0..=2 * h + 1 {
                let g = GapGraph::cycle(n, h);
                if h > 0 {
                    assert_eq!(
                        g.edges().len() as u32,
                        n * n.saturating_sub(1) / 2,
                        "n={n} h={h}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn cycle_adjacency_is_circular_distance(n in 1u32..=40, h in 0u32..=10, a in 0u32..40, b in 0u32..40) {
            let (i, j) = (a % n + 1, b % n + 1);
            let g = GapGraph::cycle(n, h);
            let d = i.abs_diff(j);
            let expected = i != j && d.min(n - d) <= h;
            prop_assert_eq!(g.is_edge(i, j).unwrap(), expected);
            prop_assert_eq!(g.is_edge(i, j).unwrap(), g.is_edge(j, i).unwrap());
        }

        #[test]
        fn path_edges_are_cycle_edges(n in 0u32..=30, h in 0u32..=10) {
            let cycle = GapGraph::cycle(n, h);
            for (i, j) in GapGraph::path(n, h).edges().pairs() {
                prop_assert!(cycle.is_edge(*i, *j).unwrap());
            }
        }
    }
}
