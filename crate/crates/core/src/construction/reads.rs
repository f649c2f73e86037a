//! Read collections and build parameters.

use std::path::Path;

use log::{info, warn};

use crate::alphabet::{normalize, reverse_complement};
use crate::error::{Error, Result};

/// Equal-length DNA reads. Reverse complements are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadSet {
    reads: Vec<Vec<u8>>,
    ids: Vec<String>,
    z: usize,
}

impl ReadSet {
    /// Validates and normalizes reads to lower case. Unlike [`ingest_reads`]
    /// a single read is accepted.
    pub fn new<I, S>(reads: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        let mut out = Vec::new();
        for (i, r) in reads.into_iter().enumerate() {
            let seq = r
                .as_ref()
                .iter()
                .map(|&c| normalize(c))
                .collect::<Option<Vec<u8>>>()
                .ok_or_else(|| Error::Input(format!("read {} has a non-ACGT symbol", i + 1)))?;
            out.push(seq);
        }
        let ids = (1..=out.len()).map(|i| format!("read_{i}")).collect();
        Self::from_parts(out, ids)
    }

    fn from_parts(reads: Vec<Vec<u8>>, ids: Vec<String>) -> Result<Self> {
        let z = match reads.first() {
            Some(r) => r.len(),
            None => return Err(Error::Input("no reads".into())),
        };
        if z == 0 {
            return Err(Error::Input("reads are empty".into()));
        }
        if let Some(i) = reads.iter().position(|r| r.len() != z) {
            return Err(Error::Input(format!(
                "read {} has length {} but the first read has length {z}",
                i + 1,
                reads[i].len()
            )));
        }
        Ok(Self { reads, ids, z })
    }

    /// Number of reads, r.
    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }

    /// Read length, z.
    pub fn read_len(&self) -> usize {
        self.z
    }

    pub fn reads(&self) -> &[Vec<u8>] {
        &self.reads
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// `R*` in concatenation order: each read followed by its reverse complement.
    pub fn members(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        self.reads.iter().flat_map(|r| [r.clone(), reverse_complement(r)])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildConfig {
    pub k: usize,
    pub m: usize,
    pub keep_lcs: bool,
    pub keep_rc_permutation: bool,
}

impl BuildConfig {
    pub fn new(k: usize, m: usize) -> Self {
        Self { k, m, keep_lcs: false, keep_rc_permutation: false }
    }

    /// Retains the LCS array and the reverse-complement permutation.
    pub fn with_extras(mut self) -> Self {
        self.keep_lcs = true;
        self.keep_rc_permutation = true;
        self
    }

    pub fn validate(&self, z: usize) -> Result<()> {
        if self.k < 4 {
            return Err(Error::Config(format!("k = {} is below the minimum of 4", self.k)));
        }
        if self.m < 2 || self.m > self.k - 2 {
            return Err(Error::Config(format!("m = {} outside 2..={}", self.m, self.k - 2)));
        }
        if self.k > z + 1 {
            return Err(Error::Config(format!("k = {} exceeds read length + 1 = {}", self.k, z + 1)));
        }
        Ok(())
    }
}

/// Reads FASTA or FASTQ, dropping records with symbols outside `acgtACGT`.
pub fn ingest_reads(path: &Path, cfg: &BuildConfig) -> Result<ReadSet> {
    let read_err = |e: needletail::errors::ParseError| Error::Read { path: path.to_path_buf(), message: e.to_string() };
    let mut parser = needletail::parse_fastx_file(path).map_err(read_err)?;
    let mut reads = Vec::new();
    let mut ids = Vec::new();
    let mut dropped = 0usize;
    while let Some(rec) = parser.next() {
        let rec = rec.map_err(read_err)?;
        match rec.seq().iter().map(|&c| normalize(c)).collect::<Option<Vec<u8>>>() {
            Some(seq) if !seq.is_empty() => {
                reads.push(seq);
                ids.push(String::from_utf8_lossy(rec.id()).split_whitespace().next().unwrap_or("").to_string());
            }
            _ => dropped += 1,
        }
    }
    if dropped > 0 {
        warn!("dropped {dropped} reads with symbols outside ACGT");
    }
    if reads.len() < 2 {
        return Err(Error::Input(format!("{} usable reads; at least 2 are required", reads.len())));
    }
    let rs = ReadSet::from_parts(reads, ids)?;
    cfg.validate(rs.read_len())?;
    info!("ingested {} reads of length {}", rs.len(), rs.read_len());
    Ok(rs)
}
