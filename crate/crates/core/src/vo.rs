//! Variable-order operations driven by the longest-common-suffix array.
//!
//! This is the slower route to `nextcontained`: it walks down one order at a
//! time. It backs the oracle tests and the benchmark baseline.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::index::{RBossIndex, VoNode};
use crate::succinct::io::{expect_magic, read_u64, read_words, write_magic, write_u64, write_words};
use crate::succinct::MinTree;

const MAGIC: &[u8; 4] = b"RBLC";
const VERSION: u16 = 1;

/// `value(i)` is the longest common suffix of the labels of rows i-1 and i,
/// capped at k-2; `value(1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsArray {
    values: Vec<u16>,
    tree: MinTree,
}

impl LcsArray {
    pub fn new(values: Vec<u16>) -> Self {
        let tree = MinTree::new(&values.iter().map(|&v| v as i32).collect::<Vec<_>>());
        Self { values, tree }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, row: usize) -> usize {
        self.values[row - 1] as usize
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    /// Largest row `j <= row` with `value(j) < t`.
    fn prev_below(&self, row: usize, t: usize) -> usize {
        if t == 0 {
            return row;
        }
        self.tree.prev_le(row, t as i32 - 1).map_or(1, |j| j + 1)
    }

    /// Smallest row `j > row` with `value(j) < t`, or `len + 1`.
    fn next_below(&self, row: usize, t: usize) -> usize {
        if t == 0 {
            return row + 1;
        }
        self.tree.next_le(row - 1, t as i32 - 1).map_or(self.len() + 1, |j| j + 1)
    }

    pub fn size_in_bits(&self) -> usize {
        self.values.len() * 16
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, VERSION)?;
        write_u64(w, self.values.len() as u64)?;
        let words: Vec<u64> = self
            .values
            .chunks(4)
            .map(|c| c.iter().enumerate().fold(0u64, |acc, (i, &v)| acc | (v as u64) << (16 * i)))
            .collect();
        write_words(w, &words)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, VERSION)?;
        let len = read_u64(r)? as usize;
        let words = read_words(r)?;
        if words.len() != len.div_ceil(4) {
            return Err(Error::Format("LCS payload length mismatch".into()));
        }
        let values = (0..len).map(|i| (words[i / 4] >> (16 * (i % 4))) as u16).collect();
        Ok(Self::new(values))
    }
}

impl RBossIndex {
    fn lcs_or_panic(&self) -> &LcsArray {
        self.lcs().expect("index built without the LCS array")
    }

    /// Widens `v` to every row suffixed by its last `order` symbols.
    /// Requires the LCS array.
    pub fn shorter(&self, v: VoNode, order: usize) -> VoNode {
        assert!(order < v.order, "shorter needs a smaller order");
        let lcs = self.lcs_or_panic();
        let lo = lcs.prev_below(v.lo, order);
        let hi = lcs.next_below(v.hi, order) - 1;
        VoNode { lo, hi, order }
    }

    /// Splits `v` into the nodes of order `order` that end with it.
    pub fn longer(&self, v: VoNode, order: usize) -> Vec<VoNode> {
        assert!(order > v.order, "longer needs a larger order");
        if order > self.k() - 1 {
            return Vec::new();
        }
        let lcs = self.lcs_or_panic();
        let mut out = Vec::new();
        let mut start = v.lo;
        for row in v.lo + 1..=v.hi {
            if lcs.value(row) < order {
                out.push(VoNode { lo: start, hi: row - 1, order });
                start = row;
            }
        }
        out.push(VoNode { lo: start, hi: v.hi, order });
        out
    }

    /// A row inside `v` with an outgoing edge labeled `a` (or `$`).
    pub fn maxlen(&self, v: VoNode, a: u8) -> Option<usize> {
        let (start, end) = (self.edge_start(v.lo), self.edge_end(v.hi));
        self.first_edge_in(a, start, end).map(|p| self.row_of_edge(p))
    }

    /// Next contained linker, found by lowering the order one step at a
    /// time. `None` once the order falls below m.
    pub fn nextcontained_lcs(&self, row: usize) -> Option<usize> {
        let top = self.k() - 1;
        let start = if self.is_solid(row) { top } else { self.llabel_len(row) };
        let mut cur = VoNode { lo: row, hi: row, order: top };
        for d in (self.m()..start).rev() {
            let next = self.shorter(cur, d);
            let grew = next.lo < cur.lo;
            cur = next;
            if grew && !self.is_solid(cur.lo) && self.llabel_len(cur.lo) == d {
                return Some(cur.lo);
            }
        }
        None
    }
}
