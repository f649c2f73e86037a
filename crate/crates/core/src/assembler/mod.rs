//! Genome assembly by spelling maximal paths of extensible nodes.

mod extend;
mod mark;
mod spell;
mod table;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::alphabet::canonical;
use crate::error::Result;
use crate::index::RBossIndex;
use crate::succinct::BitVector;

pub use mark::{marker_registry, DfsMarker, DirectMarker, NonExtensibleMarker};
pub use spell::{spell_maximal_paths, unitigs};
pub use table::OverlapTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contig {
    pub sequence: String,
    /// Row of the node the path was spelled from.
    pub seed: usize,
    pub left_len: usize,
    pub right_len: usize,
    /// Whether `sequence` is the smaller of itself and its reverse complement.
    pub canonical: bool,
}

impl Contig {
    pub(crate) fn new(seq: Vec<u8>, seed: usize, left_len: usize, right_len: usize) -> Self {
        let canonical = canonical(&seq) == seq;
        Self { sequence: String::from_utf8(seq).expect("dna"), seed, left_len, right_len, canonical }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AssemblyConfig {
    /// Defaults to k-1.
    pub min_len: Option<usize>,
    pub threads: usize,
    pub marker: String,
}

impl Default for AssemblyConfig {
    fn default() -> Self {
        Self { min_len: None, threads: 1, marker: "dfs".into() }
    }
}

pub struct Assembly {
    pub contigs: Vec<Contig>,
    pub non_extensible: BitVector,
}

/// Marks non-extensible nodes and spells all maximal paths.
pub fn assemble(idx: &RBossIndex, cfg: &AssemblyConfig) -> Result<Assembly> {
    let threads = cfg.threads.max(1);
    let marker = marker_registry().get(&cfg.marker)?;
    let table = OverlapTable::new(idx, threads);
    let nonext = marker.mark(&table, threads);
    let min_len = cfg.min_len.unwrap_or(idx.k() - 1);
    let contigs = spell_maximal_paths(&table, &nonext, min_len, threads);
    Ok(Assembly { contigs, non_extensible: nonext })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssemblySummary {
    pub contigs: usize,
    pub total_len: usize,
    pub mean_len: f64,
    pub max_len: usize,
    pub n50: usize,
}

pub fn summarize(contigs: &[Contig]) -> AssemblySummary {
    let mut lens: Vec<usize> = contigs.iter().map(|c| c.len()).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = lens.iter().sum();
    let mut acc = 0;
    let n50 = lens
        .iter()
        .find(|&&l| {
            acc += l;
            2 * acc >= total
        })
        .copied()
        .unwrap_or(0);
    AssemblySummary {
        contigs: lens.len(),
        total_len: total,
        mean_len: if lens.is_empty() { 0.0 } else { total as f64 / lens.len() as f64 },
        max_len: lens.first().copied().unwrap_or(0),
        n50,
    }
}

pub fn write_fasta<W: Write>(contigs: &[Contig], w: &mut W) -> Result<()> {
    for (i, c) in contigs.iter().enumerate() {
        writeln!(w, ">contig_{} len={} seed={}", i + 1, c.len(), c.seed)?;
        writeln!(w, "{}", c.sequence)?;
    }
    Ok(())
}

pub fn write_contigs(contigs: &[Contig], path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_fasta(contigs, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Applies `f` to every item on up to `threads` scoped threads, keeping
/// input order.
pub(crate) fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}
