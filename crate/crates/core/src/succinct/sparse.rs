//! Sparse bit vector: stores only the sorted positions of the ones.
//! Suited to bitmaps such as the non-extensible marks, where few bits are set.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::succinct::bitvec::RankSelect;
use crate::succinct::io::{expect_magic, read_u64, read_words, write_magic, write_u64, write_words};

const MAGIC: &[u8; 4] = b"RBSP";
const VERSION: u16 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseBitVector {
    ones: Vec<u64>,
    len: usize,
}

impl SparseBitVector {
    pub fn new(len: usize, mut ones: Vec<usize>) -> Self {
        ones.sort_unstable();
        ones.dedup();
        assert!(ones.first().is_none_or(|&p| p >= 1) && ones.last().is_none_or(|&p| p <= len));
        Self { ones: ones.into_iter().map(|p| p as u64).collect(), len }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.ones.iter().map(|&p| p as usize)
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, VERSION)?;
        write_u64(w, self.len as u64)?;
        write_words(w, &self.ones)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, VERSION)?;
        let len = read_u64(r)? as usize;
        let ones = read_words(r)?;
        if ones.windows(2).any(|w| w[0] >= w[1]) || ones.last().is_some_and(|&p| p as usize > len) {
            return Err(Error::Format("sparse bit vector positions not sorted".into()));
        }
        Ok(Self { ones, len })
    }
}

impl RankSelect for SparseBitVector {
    fn len(&self) -> usize {
        self.len
    }

    fn get(&self, pos: usize) -> bool {
        self.ones.binary_search(&(pos as u64)).is_ok()
    }

    fn rank1(&self, i: usize) -> usize {
        self.ones.partition_point(|&p| p as usize <= i)
    }

    fn select1(&self, j: usize) -> Option<usize> {
        (j >= 1).then(|| self.ones.get(j - 1).map(|&p| p as usize)).flatten()
    }

    fn size_in_bits(&self) -> usize {
        64 + self.ones.len() * 64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::succinct::BitVector;

    #[test]
    fn agrees_with_plain() {
        let ones = vec![3, 17, 64, 65, 200];
        let s = SparseBitVector::new(300, ones.clone());
        let p = BitVector::from_positions(300, &ones);
        for i in 0..=300 {
            assert_eq!(s.rank1(i), p.rank1(i));
        }
        for j in 0..=6 {
            assert_eq!(s.select1(j), p.select1(j));
        }
        assert!(s.get(64) && !s.get(63));
    }
}
