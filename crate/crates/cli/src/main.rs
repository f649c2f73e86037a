//! `rboss`: build a read-overlap index, query it, assemble from it.
//!
//! Every command prints JSON on stdout. Failures print a JSON error object
//! on stderr and exit with status 1.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rboss::assembler::{assemble, summarize, write_contigs, AssemblyConfig};
use rboss::sim::{simulate, write_fastq, SimConfig};
use rboss::stats::IndexStats;
use rboss::succinct::RankSelect;
use rboss::{build_index, ingest_reads, BuildConfig, RBossIndex};

#[derive(Parser)]
#[command(name = "rboss", version, about = "Succinct overlap index over sequencing reads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Fwd,
    Bwd,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from a FASTA/FASTQ file of equal-length reads.
    Build {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        m: usize,
        #[arg(short, long)]
        output: PathBuf,
        input: PathBuf,
        /// Also store the LCS array (needed by `bench`).
        #[arg(long)]
        keep_lcs: bool,
        /// Also store the reverse-complement permutation of solid nodes.
        #[arg(long)]
        keep_rc_perm: bool,
    },
    /// Print sizes and counts of an index.
    Stats { index: PathBuf },
    /// Report the suffix-prefix overlaps of one read.
    Overlaps {
        index: PathBuf,
        /// 1-based read number in input order.
        #[arg(long)]
        read: usize,
        /// Split forward overlaps into irreducible and transitive, with weights.
        #[arg(long)]
        weighted: bool,
        #[arg(long, value_enum, default_value = "both")]
        dir: Direction,
    },
    /// Spell contigs from the overlap graph.
    Assemble {
        index: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Drop contigs shorter than this (default k-1).
        #[arg(long)]
        min_len: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Non-extensible marking strategy.
        #[arg(long, default_value = "dfs")]
        marker: String,
    },
    /// Time the query routes on sampled solid nodes.
    Bench {
        index: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Write error-free (or noisy) reads tiled from a random genome.
    Simulate {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        cov: f64,
        #[arg(long)]
        rlen: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        error_rate: f64,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the genome as FASTA.
        #[arg(long)]
        genome: Option<PathBuf>,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => println!("{}", serde_json::to_string_pretty(&v).expect("json")),
        Err(e) => {
            let causes: Vec<String> = e.chain().skip(1).map(|c| c.to_string()).collect();
            eprintln!("{}", json!({ "error": e.to_string(), "causes": causes }));
            std::process::exit(1);
        }
    }
}

fn load(path: &Path) -> Result<RBossIndex> {
    RBossIndex::load(path).with_context(|| format!("loading index {}", path.display()))
}

fn run(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Build { k, m, output, input, keep_lcs, keep_rc_perm } => {
            let cfg = BuildConfig { k, m, keep_lcs, keep_rc_permutation: keep_rc_perm };
            let start = Instant::now();
            let reads = ingest_reads(&input, &cfg).with_context(|| format!("reading {}", input.display()))?;
            let idx = build_index(&reads, &cfg)?;
            let secs = start.elapsed().as_secs_f64();
            idx.save(&output).with_context(|| format!("writing {}", output.display()))?;
            Ok(json!({
                "index": output,
                "reads": idx.read_count(),
                "n": idx.n(),
                "solid": idx.solid_count(),
                "build_seconds": secs,
                "bits": idx.size_in_bits(),
            }))
        }
        Command::Stats { index } => Ok(serde_json::to_value(IndexStats::of(&load(&index)?))?),
        Command::Overlaps { index, read, weighted, dir } => overlaps(&load(&index)?, read, weighted, dir),
        Command::Assemble { index, output, min_len, threads, marker } => {
            let idx = load(&index)?;
            let cfg = AssemblyConfig { min_len, threads, marker };
            let asm = assemble(&idx, &cfg)?;
            write_contigs(&asm.contigs, &output).with_context(|| format!("writing {}", output.display()))?;
            let mut v = serde_json::to_value(summarize(&asm.contigs))?;
            v["non_extensible"] = json!(asm.non_extensible.count_ones());
            v["output"] = json!(output);
            Ok(v)
        }
        Command::Bench { index, samples, seed } => {
            if samples == 0 {
                bail!("--samples must be positive");
            }
            Ok(serde_json::to_value(rboss::bench::run(&load(&index)?, samples, seed)?)?)
        }
        Command::Simulate { len, cov, rlen, seed, error_rate, output, genome } => {
            let sim = simulate(&SimConfig { genome_len: len, coverage: cov, read_len: rlen, error_rate, seed })?;
            let mut w = BufWriter::new(File::create(&output).with_context(|| format!("creating {}", output.display()))?);
            write_fastq(&sim.reads, &mut w)?;
            w.flush()?;
            if let Some(g) = &genome {
                let mut w = BufWriter::new(File::create(g).with_context(|| format!("creating {}", g.display()))?);
                rboss::sim::write_fasta("genome", &sim.genome, &mut w)?;
                w.flush()?;
            }
            Ok(json!({ "reads": sim.reads.len(), "read_len": rlen, "genome_len": len, "output": output }))
        }
    }
}

fn node_json(idx: &RBossIndex, row: usize) -> Value {
    json!({ "row": row, "label": String::from_utf8_lossy(&idx.label(row)) })
}

fn overlaps(idx: &RBossIndex, read: usize, weighted: bool, dir: Direction) -> Result<Value> {
    let row = idx.read_row(read)?;
    let mut out = json!({ "read": read, "node": node_json(idx, row) });
    if dir != Direction::Bwd {
        out["forward"] = if weighted {
            idx.weighted_foverlaps(row)
                .into_iter()
                .map(|w| {
                    let mut v = node_json(idx, w.target);
                    v["o"] = json!(w.o);
                    v["irreducible"] = json!(w.irreducible);
                    v["weight"] = json!(w.weight);
                    v
                })
                .collect()
        } else {
            overlap_list(idx, idx.foverlaps(row))
        };
    }
    if dir != Direction::Fwd {
        out["backward"] = overlap_list(idx, idx.boverlaps(row));
    }
    Ok(out)
}

fn overlap_list(idx: &RBossIndex, list: Vec<rboss::Overlap>) -> Value {
    list.into_iter()
        .map(|o| {
            let mut v = node_json(idx, o.target);
            v["o"] = json!(o.o);
            v
        })
        .collect()
}
