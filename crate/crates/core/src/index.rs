//! The immutable read-overlap index and its on-disk format.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::succinct::io::{expect_magic, read_u64, read_words, write_magic, write_u64, write_words};
use crate::succinct::{BitVector, BpTree, RankSelect, SymbolSequence};
use crate::vo::LcsArray;

const MAGIC: &[u8; 4] = b"RBOS";
pub const FORMAT_VERSION: u16 = 1;

/// A range of rows of M sharing a suffix of length `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VoNode {
    pub lo: usize,
    pub hi: usize,
    pub order: usize,
}

impl VoNode {
    pub fn row(row: usize, order: usize) -> Self {
        Self { lo: row, hi: row, order }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn rows(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBossIndex {
    pub(crate) k: usize,
    pub(crate) m: usize,
    pub(crate) r: usize,
    pub(crate) z: usize,
    pub(crate) n: usize,
    pub(crate) edges: SymbolSequence,
    pub(crate) b: BitVector,
    /// `c[x]` counts rows whose last symbol has rank below x, x in 1..=6.
    pub(crate) c: [usize; 7],
    /// Whether the row `$...$x` exists for base rank x. It is the only row
    /// ending in x that no edge points to.
    pub(crate) off: [bool; 7],
    pub(crate) solid: BitVector,
    pub(crate) pnode: BitVector,
    // row of each input read's (k-1)-prefix, in input order
    pub(crate) read_rows: Vec<u32>,
    pub(crate) nonext: Option<BitVector>,
    pub(crate) tree: BpTree,
    pub(crate) lcs: Option<LcsArray>,
    pub(crate) rc_perm: Option<Vec<u32>>,
}

impl RBossIndex {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn read_count(&self) -> usize {
        self.r
    }

    pub fn read_len(&self) -> usize {
        self.z
    }

    /// Number of rows (nodes) of M.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &SymbolSequence {
        &self.edges
    }

    pub fn boundaries(&self) -> &BitVector {
        &self.b
    }

    pub fn counts(&self) -> &[usize; 7] {
        &self.c
    }

    pub fn solid_bits(&self) -> &BitVector {
        &self.solid
    }

    pub fn p_node_bits(&self) -> &BitVector {
        &self.pnode
    }

    pub fn tree(&self) -> &BpTree {
        &self.tree
    }

    pub fn lcs(&self) -> Option<&LcsArray> {
        self.lcs.as_ref()
    }

    pub fn has_rc_permutation(&self) -> bool {
        self.rc_perm.is_some()
    }

    pub fn non_extensible(&self) -> Option<&BitVector> {
        self.nonext.as_ref()
    }

    pub fn set_non_extensible(&mut self, bits: BitVector) {
        assert_eq!(bits.len(), self.n);
        self.nonext = Some(bits);
    }

    /// Row of the `(k-1)`-prefix of read `i` (1-based, input order).
    pub fn read_row(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.r {
            return Err(Error::OutOfRange { pos: i, len: self.r });
        }
        Ok(self.read_rows[i - 1] as usize)
    }

    pub fn solid_count(&self) -> usize {
        self.solid.count_ones()
    }

    pub fn linker_count(&self) -> usize {
        self.n - self.solid_count()
    }

    #[inline]
    pub fn is_solid(&self, row: usize) -> bool {
        self.solid.get(row)
    }

    #[inline]
    pub fn is_p_node(&self, row: usize) -> bool {
        self.pnode.get(row)
    }

    /// Rows of all solid nodes in M order.
    pub fn solid_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.solid.ones()
    }

    pub fn check_row(&self, row: usize) -> Result<()> {
        if row >= 1 && row <= self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { pos: row, len: self.n })
        }
    }

    /// Size breakdown in bits per component.
    pub fn component_bits(&self) -> Vec<(&'static str, usize)> {
        let mut v = vec![
            ("E", self.edges.size_in_bits()),
            ("B", self.b.size_in_bits()),
            ("C", 7 * 64),
            ("S", self.solid.size_in_bits()),
            ("P", self.pnode.size_in_bits()),
            ("T'", self.tree.size_in_bits()),
            ("reads", self.read_rows.len() * 32),
        ];
        if let Some(nb) = &self.nonext {
            v.push(("N", nb.size_in_bits()));
        }
        if let Some(l) = &self.lcs {
            v.push(("LCS", l.size_in_bits()));
        }
        if let Some(p) = &self.rc_perm {
            v.push(("rc", p.len() * 32));
        }
        v
    }

    pub fn size_in_bits(&self) -> usize {
        self.component_bits().iter().map(|(_, b)| b).sum()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_magic(w, MAGIC, FORMAT_VERSION)?;
        for x in [self.k, self.m, self.r, self.z, self.n, self.e()] {
            write_u64(w, x as u64)?;
        }
        block(w, |b| self.edges.write_to(b))?;
        block(w, |b| self.b.write_to(b))?;
        block(w, |b| {
            let mut words: Vec<u64> = self.c.iter().map(|&x| x as u64).collect();
            words.push(self.off.iter().enumerate().fold(0u64, |acc, (i, &o)| acc | (o as u64) << i));
            write_words(b, &words)
        })?;
        block(w, |b| self.solid.write_to(b))?;
        block(w, |b| self.pnode.write_to(b))?;
        block(w, |b| self.tree.write_to(b))?;
        block(w, |b| write_u32s(b, &self.read_rows))?;
        optional_block(w, self.nonext.as_ref(), |b, x| x.write_to(b))?;
        optional_block(w, self.lcs.as_ref(), |b, x| x.write_to(b))?;
        optional_block(w, self.rc_perm.as_ref(), |b, x| write_u32s(b, x))?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        expect_magic(r, MAGIC, FORMAT_VERSION)?;
        let mut hdr = [0usize; 6];
        for h in hdr.iter_mut() {
            *h = read_u64(r)? as usize;
        }
        let [k, m, reads, z, n, e] = hdr;
        let edges = read_block(r, SymbolSequence::read_from)?;
        let b = read_block(r, BitVector::read_from)?;
        let words = read_block(r, read_words)?;
        if words.len() != 8 {
            return Err(Error::Format("counter block".into()));
        }
        let mut c = [0usize; 7];
        let mut off = [false; 7];
        for i in 0..7 {
            c[i] = words[i] as usize;
            off[i] = (words[7] >> i) & 1 == 1;
        }
        let solid = read_block(r, BitVector::read_from)?;
        let pnode = read_block(r, BitVector::read_from)?;
        let tree = read_block(r, BpTree::read_from)?;
        let read_rows = read_block(r, read_u32s)?;
        let nonext = read_optional_block(r, BitVector::read_from)?;
        let lcs = read_optional_block(r, LcsArray::read_from)?;
        let rc_perm = read_optional_block(r, read_u32s)?;
        let idx = Self { k, m, r: reads, z, n, edges, b, c, off, solid, pnode, read_rows, nonext, tree, lcs, rc_perm };
        if idx.read_rows.len() != reads || idx.read_rows.iter().any(|&x| x == 0 || x as usize > n) {
            return Err(Error::Format("read row table".into()));
        }
        if idx.e() != e || idx.b.len() != e || idx.b.count_ones() != n || idx.solid.len() != n {
            return Err(Error::Format("component sizes disagree with the header".into()));
        }
        if idx.tree.leaf_count() != n || idx.c[6] != n {
            return Err(Error::Format("tree or counters disagree with the row count".into()));
        }
        Ok(idx)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_to(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = File::open(path).map_err(|e| Error::Read { path: path.to_path_buf(), message: e.to_string() })?;
        Self::read_from(&mut BufReader::new(f))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        buf
    }
}

fn block<W: Write>(w: &mut W, f: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    write_u64(w, buf.len() as u64)?;
    w.write_all(&buf)?;
    Ok(())
}

fn optional_block<W: Write, T>(
    w: &mut W,
    x: Option<&T>,
    f: impl FnOnce(&mut Vec<u8>, &T) -> Result<()>,
) -> Result<()> {
    match x {
        Some(x) => {
            w.write_all(&[1])?;
            block(w, |b| f(b, x))
        }
        None => {
            w.write_all(&[0])?;
            Ok(())
        }
    }
}

type Block = std::io::Cursor<Vec<u8>>;

fn read_block<R: Read, T>(r: &mut R, f: impl FnOnce(&mut Block) -> Result<T>) -> Result<T> {
    let len = read_u64(r)? as usize;
    let mut buf = Vec::new();
    r.take(len as u64).read_to_end(&mut buf)?;
    if buf.len() != len {
        return Err(Error::Format("truncated block".into()));
    }
    let mut cur = Block::new(buf);
    let out = f(&mut cur)?;
    if cur.position() as usize != len {
        return Err(Error::Format("trailing bytes in block".into()));
    }
    Ok(out)
}

fn read_optional_block<R: Read, T>(r: &mut R, f: impl FnOnce(&mut Block) -> Result<T>) -> Result<Option<T>> {
    let mut flag = [0u8; 1];
    r.read_exact(&mut flag)?;
    match flag[0] {
        0 => Ok(None),
        1 => read_block(r, f).map(Some),
        x => Err(Error::Format(format!("bad optional-block flag {x}"))),
    }
}

fn write_u32s<W: Write>(b: &mut W, x: &[u32]) -> Result<()> {
    let words: Vec<u64> = x.chunks(2).map(|c| c[0] as u64 | c.get(1).map_or(0, |&y| (y as u64) << 32)).collect();
    write_u64(b, x.len() as u64)?;
    write_words(b, &words)
}

fn read_u32s<R: Read>(b: &mut R) -> Result<Vec<u32>> {
    let len = read_u64(b)? as usize;
    let words = read_words(b)?;
    if words.len() != len.div_ceil(2) {
        return Err(Error::Format("packed u32 block length".into()));
    }
    Ok((0..len).map(|i| (words[i / 2] >> (32 * (i % 2))) as u32).collect())
}
