//! Brute-force side of every counting claim: independent sets as bit masks,
//! gap conditions, and the shift bijection onto plain `k`-subsets.
//!
//! Bit `i - 1` of a mask stands for vertex `v_i`, so `v_1` is the least
//! significant bit. As text a mask is written `b_1 b_2 ... b_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::counting::Nat;
use crate::error::{Error, Result};
use crate::graphs::GapGraph;

/// Largest graph order a mask can hold.
pub const MAX_ORDER: u32 = 64;

/// Default enumeration cap.
pub const DEFAULT_CAP: u32 = 24;

/// A subset of `{v_1, ..., v_n}` packed into a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMask {
    n: u32,
    bits: u64,
}

impl VertexMask {
    pub fn new(n: u32, bits: u64) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::InvalidMask(format!(
                "length {n} exceeds {MAX_ORDER}"
            )));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::InvalidMask(format!(
                "bits {bits:#b} set above position {n}"
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn empty(n: u32) -> Self {
        Self { n, bits: 0 }
    }

    /// Mask with the given 1-based vertices set.
    pub fn from_vertices(n: u32, vertices: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v < 1 || v > n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: i64::from(v),
                    min: 1,
                    max: i64::from(n),
                });
            }
            bits |= 1 << (v - 1);
        }
        Self::new(n, bits)
    }

    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Number of chosen vertices.
    pub fn size(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= 1 && v <= self.n && self.bits >> (v - 1) & 1 == 1
    }

    /// Chosen vertices, ascending.
    pub fn vertices(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut rest = self.bits;
        while rest != 0 {
            out.push(rest.trailing_zeros() + 1);
            rest &= rest - 1;
        }
        out
    }
}

impl fmt::Display for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for VertexMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = u32::try_from(s.len()).unwrap_or(u32::MAX);
        if n > MAX_ORDER {
            return Err(Error::InvalidMask(format!(
                "length {} exceeds {MAX_ORDER}",
                s.len()
            )));
        }
        let mut bits = 0u64;
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => bits |= 1 << i,
                _ => return Err(Error::InvalidMask(format!("unexpected character in {s:?}"))),
            }
        }
        Self::new(n, bits)
    }
}

impl Serialize for VertexMask {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexMask {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// No two chosen vertices adjacent in `g`.
pub fn is_independent(g: &GapGraph, s: &VertexMask) -> Result<bool> {
    if s.n != g.n {
        return Err(Error::LengthMismatch {
            expected: g.n,
            found: s.n,
        });
    }
    let vs = s.vertices();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            if g.adjacent(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every pair of ones is more than `h` apart; with `circular`, also around
/// the wrap.
pub fn gap_check(s: &VertexMask, h: u32, circular: bool) -> bool {
    let vs = s.vertices();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            let d = j - i;
            if d <= h || (circular && s.n - d <= h) {
                return false;
            }
        }
    }
    true
}

/// The string avoids `11, 101, ..., 1 0^(h-1) 1`. In circular mode a pattern
/// may wrap around the end, but only windows of at most `n` bits count, so a
/// single `1` never matches itself.
pub fn avoids_substrings(s: &VertexMask, h: u32, circular: bool) -> Result<bool> {
    if h == 0 {
        return Err(Error::InvalidArgument(
            "substring patterns need h >= 1".into(),
        ));
    }
    let n = s.n as usize;
    let text: Vec<bool> = (0..n).map(|i| s.bits >> i & 1 == 1).collect();
    for zeros in 0..h as usize {
        let len = zeros + 2;
        if len > n {
            break;
        }
        let starts = if circular { n } else { n + 1 - len };
        for start in 0..starts {
            let at = |offset: usize| text[(start + offset) % n];
            if at(0) && at(len - 1) && (1..len - 1).all(|o| !at(o)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Backtracking enumerator of independent sets.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    cap: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Enumerator {
    pub fn with_cap(cap: u32) -> Result<Self> {
        if cap > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "enumeration cap {cap} exceeds the mask width {MAX_ORDER}"
            )));
        }
        Ok(Self { cap })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check(&self, g: &GapGraph) -> Result<()> {
        if g.n > self.cap {
            Err(Error::Capacity {
                n: g.n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Calls `visit` on every independent set of `g` in ascending numeric
    /// order of the mask word.
    pub fn for_each(&self, g: &GapGraph, mut visit: impl FnMut(VertexMask)) -> Result<()> {
        self.check(g)?;
        let mut walk = Walk {
            g,
            visit: &mut visit,
        };
        walk.descend(g.n, 0, None, None);
        Ok(())
    }

    pub fn enumerate(&self, g: &GapGraph) -> Result<Vec<VertexMask>> {
        let mut out = Vec::new();
        self.for_each(g, |m| out.push(m))?;
        Ok(out)
    }

    pub fn count_by_size(&self, g: &GapGraph) -> Result<BTreeMap<u32, Nat>> {
        let mut tally: Vec<u64> = Vec::new();
        self.for_each(g, |m| {
            let k = m.size() as usize;
            if tally.len() <= k {
                tally.resize(k + 1, 0);
            }
            tally[k] += 1;
        })?;
        Ok(tally
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as u32, Nat::from(c)))
            .collect())
    }
}

// Positions are decided from v_n down to v_1, "absent" before "present", so
// masks come out in increasing numeric order. `lowest` is the most recently
// chosen (smallest) vertex, `highest` the first one chosen.
struct Walk<'a, F: FnMut(VertexMask)> {
    g: &'a GapGraph,
    visit: &'a mut F,
}

impl<F: FnMut(VertexMask)> Walk<'_, F> {
    fn descend(&mut self, v: u32, bits: u64, lowest: Option<u32>, highest: Option<u32>) {
        if v == 0 {
            (self.visit)(VertexMask { n: self.g.n, bits });
            return;
        }
        self.descend(v - 1, bits, lowest, highest);
        let h = self.g.h;
        let clear_below = lowest.map_or(true, |lo| lo - v > h);
        let clear_wrap =
            !self.g.kind.is_circular() || highest.map_or(true, |hi| self.g.n - (hi - v) > h);
        if clear_below && clear_wrap {
            self.descend(v - 1, bits | 1 << (v - 1), Some(v), highest.or(Some(v)));
        }
    }
}

pub fn enumerate(g: &GapGraph) -> Result<Vec<VertexMask>> {
    Enumerator::default().enumerate(g)
}

pub fn count_by_size(g: &GapGraph) -> Result<BTreeMap<u32, Nat>> {
    Enumerator::default().count_by_size(g)
}

/// Spreads a `k`-subset `i_1 < ... < i_k` of `{1..n-hk+h}` into an
/// independent set of the path power by shifting the `j`-th element right by
/// `(j-1) h`.
pub fn bijection_f(subset: &[u32], n: u32, h: u32) -> Result<VertexMask> {
    let k = subset.len() as i64;
    let room = i64::from(n) - i64::from(h) * k + i64::from(h);
    if room < 0 {
        return Err(Error::InvalidArgument(format!(
            "no independent {k}-subsets of the path power (n = {n}, h = {h})"
        )));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "subset must be strictly increasing".into(),
        ));
    }
    if let Some(&bad) = subset.iter().find(|&&i| i < 1 || i64::from(i) > room) {
        return Err(Error::IndexOutOfRange {
            what: "subset element",
            index: i64::from(bad),
            min: 1,
            max: room,
        });
    }
    let shifted: Vec<u32> = subset
        .iter()
        .enumerate()
        .map(|(j, &i)| i + j as u32 * h)
        .collect();
    VertexMask::from_vertices(n, &shifted)
}

/// Inverse of [`bijection_f`]: the `j`-th chosen vertex moves left by
/// `(j-1) h`.
pub fn bijection_f_inv(s: &VertexMask, h: u32) -> Result<Vec<u32>> {
    if !gap_check(s, h, false) {
        return Err(Error::InvalidArgument(format!(
            "{s} has two ones within distance {h}"
        )));
    }
    Ok(s.vertices()
        .into_iter()
        .enumerate()
        .map(|(j, v)| v - j as u32 * h)
        .collect())
}
