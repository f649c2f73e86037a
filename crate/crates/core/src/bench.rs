//! Micro-benchmarks of the query routes on a built index.

use std::hint::black_box;
use std::time::Instant;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::RBossIndex;
use crate::strategy::{nextcontained_registry, rc_registry};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OpTiming {
    pub op: &'static str,
    pub route: &'static str,
    pub calls: usize,
    pub mean_ns: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OpComparison {
    pub op: &'static str,
    pub fast: &'static str,
    pub baseline: &'static str,
    /// Baseline mean latency over fast mean latency.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub samples: usize,
    pub timings: Vec<OpTiming>,
    pub comparisons: Vec<OpComparison>,
}

impl BenchReport {
    pub fn mean_ns(&self, op: &str, route: &str) -> Option<f64> {
        self.timings.iter().find(|t| t.op == op && t.route == route).map(|t| t.mean_ns)
    }

    pub fn ratio(&self, op: &str) -> Option<f64> {
        self.comparisons.iter().find(|c| c.op == op).map(|c| c.ratio)
    }
}

fn time<F: FnMut(usize) -> usize>(rows: &[usize], mut f: F) -> f64 {
    let start = Instant::now();
    let mut acc = 0usize;
    for &r in rows {
        acc = acc.wrapping_add(f(r));
    }
    black_box(acc);
    start.elapsed().as_nanos() as f64 / rows.len().max(1) as f64
}

/// Samples `samples` solid rows (with a fixed seed) and times each operation.
/// The LCS routes need an index built with the LCS array.
pub fn run(idx: &RBossIndex, samples: usize, seed: u64) -> Result<BenchReport> {
    if idx.lcs().is_none() {
        return Err(Error::Config("benchmarking needs an index built with the LCS array".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<usize> = idx.solid_rows().choose_multiple(&mut rng, samples);
    if rows.is_empty() {
        return Err(Error::Config("index has no solid nodes".into()));
    }
    let mut timings = Vec::new();
    let nc = nextcontained_registry();
    for name in ["tree", "lcs"] {
        let s = nc.get(name)?;
        let route = s.name();
        let ns = time(&rows, |r| s.next_contained(idx, r).unwrap_or(0));
        timings.push(OpTiming { op: "nextcontained", route, calls: rows.len(), mean_ns: ns });
        let ns = time(&rows, |r| s.build_l(idx, r).len());
        timings.push(OpTiming { op: "buildL", route, calls: rows.len(), mean_ns: ns });
    }
    let ns = time(&rows, |r| idx.foverlaps(r).len());
    timings.push(OpTiming { op: "foverlaps", route: "tree", calls: rows.len(), mean_ns: ns });
    let rc = rc_registry();
    let mut rc_routes = vec!["search"];
    if idx.has_rc_permutation() {
        rc_routes.push("permutation");
    }
    for name in rc_routes {
        let s = rc.get(name)?;
        let ns = time(&rows, |r| s.rc(idx, r));
        timings.push(OpTiming { op: "rc", route: s.name(), calls: rows.len(), mean_ns: ns });
    }

    let mut report = BenchReport { samples: rows.len(), timings, comparisons: Vec::new() };
    let pairs = [("nextcontained", "tree", "lcs"), ("buildL", "tree", "lcs"), ("rc", "permutation", "search")];
    for (op, fast, baseline) in pairs {
        if let (Some(f), Some(b)) = (report.mean_ns(op, fast), report.mean_ns(op, baseline)) {
            report.comparisons.push(OpComparison { op, fast, baseline, ratio: b / f.max(1e-3) });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_index, BuildConfig, ReadSet};

    fn fig1(cfg: BuildConfig) -> RBossIndex {
        let reads = ["atttggagta", "gtattggaaa", "agtattggaa", "caatactcca"];
        let rs = ReadSet::new(reads.iter().map(|r| r.as_bytes().to_vec())).unwrap();
        build_index(&rs, &cfg).unwrap()
    }

    #[test]
    fn reports_every_op() {
        let idx = fig1(BuildConfig::new(11, 2).with_extras());
        let rep = run(&idx, 100, 1).unwrap();
        assert_eq!(rep.samples, 8);
        for (op, route) in [("nextcontained", "lcs"), ("buildL", "tree"), ("foverlaps", "tree"), ("rc", "permutation")] {
            assert!(rep.mean_ns(op, route).is_some(), "{op}/{route}");
        }
        assert_eq!(rep.comparisons.len(), 3);
    }

    #[test]
    fn needs_lcs() {
        assert!(matches!(run(&fig1(BuildConfig::new(11, 2)), 10, 1), Err(Error::Config(_))));
    }
}
