//! Plain bit vector with rank/select directories.
//!
//! Positions are 1-based: `rank1(i)` counts the ones in `bits[1..=i]` and
//! `select1(j)` returns the position of the j-th one. Bits are stored
//! least-significant first inside little-endian 64-bit words.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::succinct::io::{expect_magic, read_u64, read_words, write_magic, write_u64, write_words};

const WORDS_PER_BLOCK: usize = 8;
const BLOCK_BITS: usize = 64 * WORDS_PER_BLOCK;
const MAGIC: &[u8; 4] = b"RBBV";
const VERSION: u16 = 1;

/// Rank/select over a static bit sequence.
pub trait RankSelect {
    fn len(&self) -> usize;
    fn get(&self, pos: usize) -> bool;
    fn rank1(&self, i: usize) -> usize;
    fn select1(&self, j: usize) -> Option<usize>;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn count_ones(&self) -> usize {
        self.rank1(self.len())
    }

    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Checked rank for either bit value.
    fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(Error::OutOfRange { pos: i, len: self.len() });
        }
        Ok(if bit { self.rank1(i) } else { self.rank0(i) })
    }

    fn size_in_bits(&self) -> usize;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
    // ones before each block of WORDS_PER_BLOCK words
    blocks: Vec<u64>,
}

impl BitVector {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0usize;
        for b in bits {
            if len.is_multiple_of(64) {
                words.push(0);
            }
            if b {
                *words.last_mut().unwrap() |= 1u64 << (len % 64);
            }
            len += 1;
        }
        Self::from_words(words, len)
    }

    /// Bit vector of `len` zeros with ones at the given 1-based positions.
    pub fn from_positions(len: usize, ones: &[usize]) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        for &p in ones {
            assert!(p >= 1 && p <= len, "position {p} outside 1..={len}");
            words[(p - 1) / 64] |= 1u64 << ((p - 1) % 64);
        }
        Self::from_words(words, len)
    }

    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % 64)) - 1;
        }
        let mut blocks = Vec::with_capacity(words.len() / WORDS_PER_BLOCK + 2);
        let mut acc = 0u64;
        for chunk in words.chunks(WORDS_PER_BLOCK) {
            blocks.push(acc);
            acc += chunk.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        }
        blocks.push(acc);
        Self { words, len, blocks }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |p| self.get(p))
    }

    /// 1-based positions of all set bits.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut x = w;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(wi * 64 + t + 1)
            })
        })
    }

    pub fn select0(&self, j: usize) -> Option<usize> {
        if j == 0 || j > self.len - self.count_ones() {
            return None;
        }
        // last block whose zero count before it is < j
        let (mut lo, mut hi) = (0usize, self.blocks.len() - 1);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            let zeros = mid * BLOCK_BITS - self.blocks[mid] as usize;
            if zeros < j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = j - (lo * BLOCK_BITS - self.blocks[lo] as usize);
        for wi in lo * WORDS_PER_BLOCK..self.words.len() {
            let inv = !self.words[wi];
            let c = inv.count_ones() as usize;
            if c >= remaining {
                let pos = wi * 64 + select_in_word(inv, remaining) + 1;
                return (pos <= self.len).then_some(pos);
            }
            remaining -= c;
        }
        None
    }

    /// Checked select for either bit value.
    pub fn select(&self, bit: bool, j: usize) -> Result<usize> {
        let found = if bit { self.select1(j) } else { self.select0(j) };
        found.ok_or(Error::NoSuchOccurrence {
            ordinal: j,
            count: if bit { self.count_ones() } else { self.len - self.count_ones() },
        })
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, VERSION)?;
        write_u64(w, self.len as u64)?;
        write_words(w, &self.words)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, VERSION)?;
        let len = read_u64(r)? as usize;
        let words = read_words(r)?;
        if words.len() != len.div_ceil(64) {
            return Err(Error::Format(format!("bit vector of {len} bits with {} words", words.len())));
        }
        Ok(Self::from_words(words, len))
    }
}

impl RankSelect for BitVector {
    fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn get(&self, pos: usize) -> bool {
        debug_assert!(pos >= 1 && pos <= self.len);
        let i = pos - 1;
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.len);
        let wi = i / 64;
        let block = wi / WORDS_PER_BLOCK;
        let mut r = self.blocks[block] as usize;
        for w in &self.words[block * WORDS_PER_BLOCK..wi] {
            r += w.count_ones() as usize;
        }
        if !i.is_multiple_of(64) {
            r += (self.words[wi] & ((1u64 << (i % 64)) - 1)).count_ones() as usize;
        }
        r
    }

    fn select1(&self, j: usize) -> Option<usize> {
        let total = *self.blocks.last().unwrap() as usize;
        if j == 0 || j > total {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.blocks.len() - 1);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if (self.blocks[mid] as usize) < j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = j - self.blocks[lo] as usize;
        for wi in lo * WORDS_PER_BLOCK..self.words.len() {
            let c = self.words[wi].count_ones() as usize;
            if c >= remaining {
                return Some(wi * 64 + select_in_word(self.words[wi], remaining) + 1);
            }
            remaining -= c;
        }
        unreachable!("block directory out of sync")
    }

    fn size_in_bits(&self) -> usize {
        self.words.len() * 64 + self.blocks.len() * 64
    }
}

/// 0-based offset of the j-th (1-based) set bit of `w`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, j: usize) -> usize {
    for _ in 1..j {
        w &= w - 1;
    }
    w.trailing_zeros() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.chars().map(|c| c == '1'))
    }

    #[test]
    fn small_examples() {
        let v = bv("0110100");
        assert_eq!(v.rank1(4), 2);
        assert_eq!(v.rank1(0), 0);
        assert_eq!(v.rank(false, 7).unwrap(), 4);
        assert_eq!(v.select(true, 2).unwrap(), 3);
        assert_eq!(v.select(true, 3).unwrap(), 5);
        assert!(v.select(true, 4).is_err());
        assert!(v.rank(true, 8).is_err());
        assert_eq!(v.select0(1), Some(1));
        assert_eq!(v.select0(4), Some(7));
        assert_eq!(v.select0(5), None);
    }

    #[test]
    fn large_random_against_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let n = 1_000_000;
        let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.3)).collect();
        let v = BitVector::from_bits(bits.iter().copied());
        let mut prefix = vec![0usize; n + 1];
        let mut ones = Vec::new();
        let mut zeros = Vec::new();
        for (i, &b) in bits.iter().enumerate() {
            prefix[i + 1] = prefix[i] + b as usize;
            if b {
                ones.push(i + 1)
            } else {
                zeros.push(i + 1)
            }
        }
        for _ in 0..10_000 {
            let i = rng.gen_range(0..=n);
            assert_eq!(v.rank1(i), prefix[i]);
            let j = rng.gen_range(1..=ones.len());
            assert_eq!(v.select1(j), Some(ones[j - 1]));
            let j = rng.gen_range(1..=zeros.len());
            assert_eq!(v.select0(j), Some(zeros[j - 1]));
        }
    }

    proptest! {
        #[test]
        fn rank_invariants(bits in proptest::collection::vec(any::<bool>(), 0..2000)) {
            let v = BitVector::from_bits(bits.iter().copied());
            for i in 0..=bits.len() {
                prop_assert_eq!(v.rank1(i) + v.rank0(i), i);
            }
            for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
                let p = i + 1;
                prop_assert!(v.select1(v.rank1(p)).unwrap() <= p);
                prop_assert_eq!(v.select1(v.rank1(p)), Some(p));
            }
            let mut buf = Vec::new();
            v.write_to(&mut buf).unwrap();
            prop_assert_eq!(BitVector::read_from(&mut buf.as_slice()).unwrap(), v);
        }
    }
}
