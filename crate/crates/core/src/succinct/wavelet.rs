//! Symbol sequence with access/rank/select, backed by a wavelet matrix.
//!
//! Symbols are small integer ranks. The alphabets used here are tiny (six
//! ranks for the BWT, nine for the edge sequence), so the matrix has at most
//! four levels.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::succinct::bitvec::{BitVector, RankSelect};
use crate::succinct::io::{expect_magic, read_u16, read_u64, write_magic, write_u16, write_u64};

const MAGIC: &[u8; 4] = b"RBWM";
const VERSION: u16 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSequence {
    levels: Vec<BitVector>,
    zeros: Vec<usize>,
    len: usize,
    width: u32,
}

impl SymbolSequence {
    /// Builds the sequence; every symbol must be `< 2^width`.
    pub fn new(symbols: &[u8], width: u32) -> Self {
        assert!((1..=8).contains(&width));
        let len = symbols.len();
        let mut cur: Vec<u8> = symbols.to_vec();
        let mut levels = Vec::with_capacity(width as usize);
        let mut zeros = Vec::with_capacity(width as usize);
        for l in 0..width {
            let shift = width - 1 - l;
            assert!(cur.iter().all(|&s| (s as u32) < (1 << width)), "symbol wider than {width} bits");
            let bits = BitVector::from_bits(cur.iter().map(|&s| (s >> shift) & 1 == 1));
            zeros.push(len - bits.count_ones());
            levels.push(bits);
            let (mut lo, hi): (Vec<u8>, Vec<u8>) = cur.iter().partition(|&&s| (s >> shift) & 1 == 0);
            lo.extend(hi);
            cur = lo;
        }
        Self { levels, zeros, len, width }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at 1-based position `i`.
    pub fn access(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.len);
        let mut p = i - 1;
        let mut c = 0u8;
        for (l, bv) in self.levels.iter().enumerate() {
            if bv.get(p + 1) {
                c |= 1 << (self.width as usize - 1 - l);
                p = self.zeros[l] + bv.rank1(p);
            } else {
                p = bv.rank0(p);
            }
        }
        c
    }

    /// Occurrences of `c` in positions `1..=i`.
    pub fn rank(&self, c: u8, i: usize) -> usize {
        debug_assert!(i <= self.len);
        let (mut s, mut p) = (0usize, i);
        for (l, bv) in self.levels.iter().enumerate() {
            if (c >> (self.width as usize - 1 - l)) & 1 == 1 {
                s = self.zeros[l] + bv.rank1(s);
                p = self.zeros[l] + bv.rank1(p);
            } else {
                s = bv.rank0(s);
                p = bv.rank0(p);
            }
        }
        p - s
    }

    /// Position of the j-th occurrence of `c`.
    pub fn select(&self, c: u8, j: usize) -> Option<usize> {
        if j == 0 {
            return None;
        }
        let mut s = 0usize;
        for (l, bv) in self.levels.iter().enumerate() {
            if (c >> (self.width as usize - 1 - l)) & 1 == 1 {
                s = self.zeros[l] + bv.rank1(s);
            } else {
                s = bv.rank0(s);
            }
        }
        let mut p = s + j;
        for l in (0..self.levels.len()).rev() {
            let bv = &self.levels[l];
            p = if (c >> (self.width as usize - 1 - l)) & 1 == 1 {
                bv.select1(p.checked_sub(self.zeros[l]).filter(|&x| x > 0)?)?
            } else {
                bv.select0(p)?
            };
        }
        (self.access(p) == c).then_some(p)
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (1..=self.len).map(|i| self.access(i)).collect()
    }

    pub fn size_in_bits(&self) -> usize {
        self.levels.iter().map(|b| b.size_in_bits()).sum::<usize>() + 64 * self.zeros.len()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, VERSION)?;
        write_u16(w, self.width as u16)?;
        write_u64(w, self.len as u64)?;
        for bv in &self.levels {
            bv.write_to(w)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, VERSION)?;
        let width = read_u16(r)? as u32;
        if !(1..=8).contains(&width) {
            return Err(Error::Format(format!("symbol width {width}")));
        }
        let len = read_u64(r)? as usize;
        let mut levels = Vec::new();
        let mut zeros = Vec::new();
        for _ in 0..width {
            let bv = BitVector::read_from(r)?;
            if bv.len() != len {
                return Err(Error::Format("wavelet level length mismatch".into()));
            }
            zeros.push(len - bv.count_ones());
            levels.push(bv);
        }
        Ok(Self { levels, zeros, len, width })
    }
}
