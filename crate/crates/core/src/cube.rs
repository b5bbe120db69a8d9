//! Hasse diagrams of independent sets ordered by inclusion: the generalized
//! Fibonacci cubes (paths) and Lucas cubes (cycles).

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::counting::Nat;
use crate::enumeration::{Enumerator, VertexMask};
use crate::error::{Error, Result};
use crate::graphs::{GapGraph, GraphKind};

// Above this order a dense mask -> id table gets too large.
const DENSE_INDEX_MAX_ORDER: u32 = 24;

#[derive(Debug, Clone)]
enum MaskIndex {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl MaskIndex {
    const ABSENT: u32 = u32::MAX;

    fn build(n: u32, vertices: &[VertexMask]) -> Self {
        if n <= DENSE_INDEX_MAX_ORDER {
            let mut table = vec![Self::ABSENT; 1usize << n];
            for (id, m) in vertices.iter().enumerate() {
                table[m.bits() as usize] = id as u32;
            }
            MaskIndex::Dense(table)
        } else {
            MaskIndex::Sparse(
                vertices
                    .iter()
                    .enumerate()
                    .map(|(id, m)| (m.bits(), id as u32))
                    .collect(),
            )
        }
    }

    fn get(&self, bits: u64) -> Option<u32> {
        match self {
            MaskIndex::Dense(table) => table
                .get(bits as usize)
                .copied()
                .filter(|&id| id != Self::ABSENT),
            MaskIndex::Sparse(map) => map.get(&bits).copied(),
        }
    }
}

/// Vertices are grouped by rank (set size) and numerically ordered inside a
/// rank; a vertex id is its position in that list. Covers are `(lower,
/// upper)` id pairs.
#[derive(Debug, Clone)]
pub struct CubeGraph {
    source: GapGraph,
    vertices: Vec<VertexMask>,
    rank_starts: Vec<usize>,
    index: MaskIndex,
    covers: Vec<(u32, u32)>,
}

pub fn build_cube(g: &GapGraph) -> Result<CubeGraph> {
    CubeGraph::build_with(g, &Enumerator::default())
}

impl CubeGraph {
    pub fn build(g: &GapGraph) -> Result<Self> {
        build_cube(g)
    }

    pub fn build_with(g: &GapGraph, enumerator: &Enumerator) -> Result<Self> {
        let mut by_rank: Vec<Vec<VertexMask>> = Vec::new();
        enumerator.for_each(g, |m| {
            let k = m.size() as usize;
            if by_rank.len() <= k {
                by_rank.resize_with(k + 1, Vec::new);
            }
            by_rank[k].push(m);
        })?;

        let mut rank_starts = Vec::with_capacity(by_rank.len() + 1);
        let mut vertices = Vec::with_capacity(by_rank.iter().map(Vec::len).sum());
        for rank in by_rank {
            rank_starts.push(vertices.len());
            vertices.extend(rank);
        }
        rank_starts.push(vertices.len());

        let index = MaskIndex::build(g.n, &vertices);

        // Removing any one element of an independent set leaves an
        // independent set, so every cover of T is T minus one bit.
        let mut covers = Vec::new();
        for (upper, t) in vertices.iter().enumerate() {
            let mut rest = t.bits();
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let lower = index
                    .get(t.bits() ^ bit)
                    .expect("independent sets are closed under removal");
                covers.push((lower, upper as u32));
            }
        }

        Ok(Self {
            source: *g,
            vertices,
            rank_starts,
            index,
            covers,
        })
    }

    pub fn source(&self) -> &GapGraph {
        &self.source
    }

    pub fn vertices(&self) -> &[VertexMask] {
        &self.vertices
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.covers.len()
    }

    pub fn id_of(&self, m: &VertexMask) -> Option<u32> {
        if m.len() != self.source.n {
            return None;
        }
        self.index.get(m.bits())
    }

    /// Largest rank present.
    pub fn max_rank(&self) -> u32 {
        self.rank_starts.len() as u32 - 2
    }

    pub fn rank(&self, k: u32) -> &[VertexMask] {
        let k = k as usize;
        if k + 1 >= self.rank_starts.len() {
            return &[];
        }
        &self.vertices[self.rank_starts[k]..self.rank_starts[k + 1]]
    }

    pub fn rank_profile(&self) -> BTreeMap<u32, Nat> {
        (0..=self.max_rank())
            .map(|k| (k, Nat::from(self.rank(k).len())))
            .collect()
    }

    /// Vertex pairs at Hamming distance 1, found by flipping every bit of
    /// every vertex (both directions) rather than from the cover list.
    pub fn hamming_pairs(&self) -> u64 {
        let n = self.source.n;
        let mut pairs = 0u64;
        for m in &self.vertices {
            for p in 0..n {
                let flipped = m.bits() ^ (1u64 << p);
                if flipped > m.bits() && self.index.get(flipped).is_some() {
                    pairs += 1;
                }
            }
        }
        pairs
    }

    /// Rank-`k` vertices that contain `v_i`.
    pub fn vertex_filter_count(&self, k: u32, i: u32) -> Result<Nat> {
        if i < 1 || i > self.source.n {
            return Err(Error::IndexOutOfRange {
                what: "vertex",
                index: i64::from(i),
                min: 1,
                max: i64::from(self.source.n),
            });
        }
        Ok(Nat::from(
            self.rank(k).iter().filter(|m| m.contains(i)).count(),
        ))
    }

    /// Undirected DOT; node ids are vertex ids, labels are bit strings.
    pub fn to_dot(&self) -> String {
        let g = &self.source;
        let mut out = String::new();
        let _ = writeln!(out, "graph cube_{}_{}_{} {{", g.kind, g.n, g.h);
        for (id, m) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {id} [label=\"{m}\"];");
        }
        for (lo, hi) in &self.covers {
            let _ = writeln!(out, "  {lo} -- {hi};");
        }
        out.push_str("}\n");
        out
    }

    /// One `lower upper` id pair per line.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for (lo, hi) in &self.covers {
            let _ = writeln!(out, "{lo} {hi}");
        }
        out
    }

    pub fn to_export(&self) -> CubeExport {
        CubeExport {
            kind: self.source.kind,
            n: self.source.n,
            h: self.source.h,
            rank_profile: (0..=self.max_rank()).map(|k| self.rank(k).len()).collect(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, m)| ExportVertex {
                    id: id as u32,
                    rank: m.size(),
                    mask: *m,
                })
                .collect(),
            covers: self.covers.iter().map(|&(lo, hi)| [lo, hi]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("cube export serializes") + "\n"
    }
}

/// JSON shape of an exported cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeExport {
    pub kind: GraphKind,
    pub n: u32,
    pub h: u32,
    pub rank_profile: Vec<usize>,
    pub vertices: Vec<ExportVertex>,
    pub covers: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportVertex {
    pub id: u32,
    pub rank: u32,
    pub mask: VertexMask,
}
