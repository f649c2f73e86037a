//! Synthetic genomes and reads.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{reverse_complement, BASES};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub genome_len: usize,
    pub coverage: f64,
    pub read_len: usize,
    pub error_rate: f64,
    pub seed: u64,
}

pub struct Simulated {
    pub genome: Vec<u8>,
    pub reads: Vec<Vec<u8>>,
}

pub fn random_genome(len: usize, rng: &mut impl Rng) -> Vec<u8> {
    (0..len).map(|_| BASES[rng.gen_range(0..4)]).collect()
}

/// Reads tiled over a random genome: start points are evenly spaced with
/// jitter, so the first and last bases are always covered. Each read comes
/// from either strand; substitutions are applied at `error_rate`.
pub fn simulate(cfg: &SimConfig) -> Result<Simulated> {
    if cfg.read_len == 0 || cfg.read_len > cfg.genome_len {
        return Err(Error::Config(format!(
            "read length {} must be in 1..={}",
            cfg.read_len, cfg.genome_len
        )));
    }
    if !(cfg.coverage > 0.0) || !(0.0..=1.0).contains(&cfg.error_rate) {
        return Err(Error::Config("coverage must be positive and error rate in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let genome = random_genome(cfg.genome_len, &mut rng);
    let count = ((cfg.genome_len as f64 * cfg.coverage) / cfg.read_len as f64).ceil().max(1.0) as usize;
    let last = cfg.genome_len - cfg.read_len;
    let step = if count > 1 { last as f64 / (count - 1) as f64 } else { 0.0 };
    let mut reads = Vec::with_capacity(count);
    for i in 0..count {
        let jitter = if i == 0 || i + 1 == count || step == 0.0 { 0.0 } else { rng.gen_range(-0.5..0.5) * step };
        let pos = ((i as f64 * step + jitter).round().max(0.0) as usize).min(last);
        let mut read = genome[pos..pos + cfg.read_len].to_vec();
        if rng.gen_bool(0.5) {
            read = reverse_complement(&read);
        }
        if cfg.error_rate > 0.0 {
            for c in read.iter_mut() {
                if rng.gen_bool(cfg.error_rate) {
                    let others: Vec<u8> = BASES.iter().copied().filter(|b| b != c).collect();
                    *c = others[rng.gen_range(0..3)];
                }
            }
        }
        reads.push(read);
    }
    Ok(Simulated { genome, reads })
}

pub fn write_fastq<W: Write>(reads: &[Vec<u8>], w: &mut W) -> Result<()> {
    for (i, r) in reads.iter().enumerate() {
        writeln!(w, "@sim_{}", i + 1)?;
        w.write_all(r)?;
        writeln!(w, "\n+")?;
        w.write_all(&vec![b'I'; r.len()])?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn write_fasta<W: Write>(name: &str, seq: &[u8], w: &mut W) -> Result<()> {
    writeln!(w, ">{name}")?;
    for line in seq.chunks(80) {
        w.write_all(line)?;
        writeln!(w)?;
    }
    Ok(())
}
