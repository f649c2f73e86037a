//! Balanced-parentheses ordinal tree.
//!
//! A node is identified by the 1-based position of its open parenthesis
//! (`1` bits). Excess searches run over a range-min tree of per-block minima,
//! so parent/close lookups cost one in-block scan plus a tree descent.
//! Leaves are the `()` patterns; leaf ranks are counted with a separate
//! directory over the `10` bit pattern.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::succinct::bitvec::{BitVector, RankSelect, select_in_word};
use crate::succinct::io::{expect_magic, write_magic};
use crate::succinct::minmax::MinTree;

const MAGIC: &[u8; 4] = b"RBBP";
const VERSION: u16 = 1;
const BLOCK: usize = 256;
const LEAF_BLOCK_WORDS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpTree {
    bits: BitVector,
    block_min: MinTree,
    leaf_blocks: Vec<u64>,
}

impl BpTree {
    pub fn new(bits: BitVector) -> Result<Self> {
        let mut ex: i64 = 0;
        for (i, b) in bits.iter().enumerate() {
            ex += if b { 1 } else { -1 };
            if ex < 0 {
                return Err(Error::Input(format!("parentheses unbalanced at position {}", i + 1)));
            }
        }
        if ex != 0 {
            return Err(Error::Input(format!("parentheses leave excess {ex}")));
        }
        Ok(Self::new_unchecked(bits))
    }

    pub(crate) fn new_unchecked(bits: BitVector) -> Self {
        let n = bits.len();
        let nblocks = n.div_ceil(BLOCK);
        let mut mins = vec![i32::MAX; nblocks];
        let mut ex: i32 = 0;
        for (i, b) in bits.iter().enumerate() {
            ex += if b { 1 } else { -1 };
            let blk = i / BLOCK;
            mins[blk] = mins[blk].min(ex);
        }
        let block_min = MinTree::new(&mins);

        let words = bits.words();
        let mut leaf_blocks = Vec::with_capacity(words.len() / LEAF_BLOCK_WORDS + 2);
        let mut acc = 0u64;
        for wi in 0..words.len() {
            if wi % LEAF_BLOCK_WORDS == 0 {
                leaf_blocks.push(acc);
            }
            acc += leaf_pattern(words, wi).count_ones() as u64;
        }
        leaf_blocks.push(acc);
        Self { bits, block_min, leaf_blocks }
    }

    /// Parses a string of `(` and `)`.
    pub fn from_parens(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|&c| c != '(' && c != ')') {
            return Err(Error::Input(format!("unexpected character {c:?} in parentheses")));
        }
        Self::new(BitVector::from_bits(s.chars().map(|c| c == '(')))
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn leaf_count(&self) -> usize {
        *self.leaf_blocks.last().unwrap() as usize
    }

    pub fn root(&self) -> usize {
        1
    }

    #[inline]
    pub fn is_open(&self, p: usize) -> bool {
        p >= 1 && p <= self.bits.len() && self.bits.get(p)
    }

    #[inline]
    pub fn is_leaf(&self, node: usize) -> bool {
        !self.bits.get(node + 1)
    }

    #[inline]
    pub fn excess(&self, p: usize) -> i64 {
        2 * self.bits.rank1(p) as i64 - p as i64
    }

    fn check(&self, node: usize) -> Result<()> {
        if self.is_open(node) {
            Ok(())
        } else {
            Err(Error::InvalidNode(node))
        }
    }

    /// Depth of a node; the root has depth 1.
    pub fn depth(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        Ok(self.excess(node) as usize)
    }

    pub fn parent(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        self.parent_unchecked(node).ok_or(Error::RootHasNoParent)
    }

    #[inline]
    pub(crate) fn parent_unchecked(&self, node: usize) -> Option<usize> {
        let ex = self.excess(node);
        if ex <= 1 {
            return None;
        }
        self.bwd_le(node, ex - 2).map(|j| j + 1)
    }

    pub fn first_child(&self, node: usize) -> Result<Option<usize>> {
        self.check(node)?;
        Ok(self.first_child_unchecked(node))
    }

    #[inline]
    pub(crate) fn first_child_unchecked(&self, node: usize) -> Option<usize> {
        (!self.is_leaf(node)).then_some(node + 1)
    }

    pub fn find_close(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        Ok(self.find_close_unchecked(node))
    }

    pub(crate) fn find_close_unchecked(&self, node: usize) -> usize {
        let ex = self.excess(node);
        self.fwd_le(node, ex - 1).expect("balanced parentheses")
    }

    pub fn next_sibling(&self, node: usize) -> Result<Option<usize>> {
        let close = self.find_close(node)?;
        Ok(self.is_open(close + 1).then_some(close + 1))
    }

    pub fn children(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        let mut count = 0;
        let mut child = self.first_child_unchecked(node);
        while let Some(c) = child {
            count += 1;
            let close = self.find_close_unchecked(c);
            child = self.is_open(close + 1).then_some(close + 1);
        }
        Ok(count)
    }

    /// Number of leaves up to and including the node's leftmost leaf.
    pub fn leaf_rank(&self, node: usize) -> Result<usize> {
        self.check(node)?;
        Ok(self.leaf_rank_unchecked(node))
    }

    #[inline]
    pub(crate) fn leaf_rank_unchecked(&self, node: usize) -> usize {
        self.leaves_upto(node - 1) + 1
    }

    pub fn leaf_select(&self, j: usize) -> Result<usize> {
        self.leaf_select_unchecked(j)
            .ok_or(Error::NoSuchOccurrence { ordinal: j, count: self.leaf_count() })
    }

    // leaf starts at positions <= i
    fn leaves_upto(&self, i: usize) -> usize {
        let words = self.bits.words();
        let wi = i / 64;
        let blk = wi / LEAF_BLOCK_WORDS;
        let mut r = self.leaf_blocks[blk] as usize;
        for w in blk * LEAF_BLOCK_WORDS..wi {
            r += leaf_pattern(words, w).count_ones() as usize;
        }
        if !i.is_multiple_of(64) {
            r += (leaf_pattern(words, wi) & ((1u64 << (i % 64)) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    pub(crate) fn leaf_select_unchecked(&self, j: usize) -> Option<usize> {
        if j == 0 || j > self.leaf_count() {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.leaf_blocks.len() - 1);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if (self.leaf_blocks[mid] as usize) < j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let words = self.bits.words();
        let mut remaining = j - self.leaf_blocks[lo] as usize;
        for wi in lo * LEAF_BLOCK_WORDS..words.len() {
            let pat = leaf_pattern(words, wi);
            let c = pat.count_ones() as usize;
            if c >= remaining {
                return Some(wi * 64 + select_in_word(pat, remaining) + 1);
            }
            remaining -= c;
        }
        None
    }

    /// Largest `j < i` (possibly 0) with `excess(j) <= t`.
    fn bwd_le(&self, i: usize, t: i64) -> Option<usize> {
        let mut ex = self.excess(i);
        let mut cur = i;
        // scan down to the first position of i's block
        let block_start = (i - 1) / BLOCK * BLOCK + 1;
        while cur > block_start {
            ex -= if self.bits.get(cur) { 1 } else { -1 };
            cur -= 1;
            if ex <= t {
                return Some(cur);
            }
        }
        let blk = (i - 1) / BLOCK;
        match self.block_min.prev_le(blk, t as i32) {
            Some(b) => {
                let mut cur = ((b + 1) * BLOCK).min(self.bits.len());
                let mut ex = self.excess(cur);
                loop {
                    if ex <= t {
                        return Some(cur);
                    }
                    ex -= if self.bits.get(cur) { 1 } else { -1 };
                    cur -= 1;
                }
            }
            None => (t >= 0).then_some(0),
        }
    }

    /// Smallest `j > i` with `excess(j) <= t`.
    fn fwd_le(&self, i: usize, t: i64) -> Option<usize> {
        let n = self.bits.len();
        let mut ex = self.excess(i);
        let mut cur = i;
        let block_end = (i.max(1) - 1) / BLOCK * BLOCK + BLOCK;
        while cur < block_end.min(n) {
            cur += 1;
            ex += if self.bits.get(cur) { 1 } else { -1 };
            if ex <= t {
                return Some(cur);
            }
        }
        let blk = (i.max(1) - 1) / BLOCK;
        let b = self.block_min.next_le(blk, t as i32)?;
        let mut cur = b * BLOCK;
        let mut ex = self.excess(cur);
        loop {
            cur += 1;
            ex += if self.bits.get(cur) { 1 } else { -1 };
            if ex <= t {
                return Some(cur);
            }
        }
    }

    pub fn size_in_bits(&self) -> usize {
        self.bits.size_in_bits() + self.block_min.size_in_bits() + self.leaf_blocks.len() * 64
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, VERSION)?;
        self.bits.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, VERSION)?;
        Self::new(BitVector::read_from(r)?)
    }
}

// bits of word `wi` that open a leaf: a one followed by a zero
#[inline]
fn leaf_pattern(words: &[u64], wi: usize) -> u64 {
    let w = words[wi];
    let next_low = words.get(wi + 1).map_or(0, |x| x & 1);
    w & !((w >> 1) | (next_low << 63))
}
