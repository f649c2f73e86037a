//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rboss::alphabet::{complement, reverse_complement};
use rboss::assembler::{assemble, unitigs, AssemblyConfig, OverlapTable};
use rboss::sim::{simulate, SimConfig, Simulated};
use rboss::{build_index, BuildConfig, Overlap, RBossIndex, ReadSet};

const RANDOM_INSTANCES: u64 = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn as_map(v: Vec<Overlap>) -> BTreeMap<usize, usize> {
    v.into_iter().map(|o| (o.target, o.o)).collect()
}

fn instances() -> impl Iterator<Item = (u64, Vec<Vec<u8>>, usize, usize)> {
    (0..RANDOM_INSTANCES).map(|i| {
        let seed = 10_000 + i;
        let (reads, k, m) = random_instance(seed);
        (seed, reads, k, m)
    })
}

fn sim(genome_len: usize, read_len: usize, seed: u64) -> Simulated {
    simulate(&SimConfig { genome_len, coverage: 15.0, read_len, error_rate: 0.0, seed }).unwrap()
}

fn build(reads: &[Vec<u8>], cfg: &BuildConfig) -> RBossIndex {
    build_index(&ReadSet::new(reads.iter().cloned()).unwrap(), cfg).unwrap()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let idx = fig1_index();
    let or = Oracle::fig1();
    let [r1, r2, r3, r4rc] = ["atttggagta", "gtattggaaa", "agtattggaa", "tggagtattg"].map(|l| or.row(l));
    let f1 = as_map(idx.foverlaps(r1));
    let f3 = as_map(idx.foverlaps(r3));
    let b3 = as_map(idx.boverlaps(r3));
    let elapsed = start.elapsed();
    let exact = f1 == BTreeMap::from([(r2, 3), (r3, 4), (r4rc, 7)])
        && f3 == BTreeMap::from([(r2, 9)])
        && b3 == BTreeMap::from([(r1, 4), (r4rc, 7)]);
    check(exact && elapsed < Duration::from_secs(1), format!("exact sets {exact}, {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn oracle_equivalence() -> Outcome {
    let (mut nodes, mut bad) = (0usize, 0usize);
    for (_, reads, k, m) in instances() {
        let idx = index_for(&reads, k, m);
        let or = Oracle::new(&reads, k, m);
        for (v, (fwd, bwd)) in or.all_overlaps() {
            nodes += 1;
            bad += (as_map(idx.foverlaps(v)) != fwd) as usize + (as_map(idx.boverlaps(v)) != bwd) as usize;
        }
    }
    check(bad == 0, format!("{RANDOM_INSTANCES} instances, {nodes} solid nodes, {bad} mismatches"))
}

fn nextcontained_routes() -> Outcome {
    let (mut rows, mut bad) = (0usize, 0usize);
    for (_, reads, k, m) in instances() {
        let idx = index_for(&reads, k, m);
        for row in 1..=idx.n() {
            rows += 1;
            bad += (idx.nextcontained(row) != idx.nextcontained_lcs(row)) as usize;
        }
    }
    check(bad == 0, format!("{rows} rows, {bad} mismatches"))
}

fn rc_symmetry() -> Outcome {
    let (mut nodes, mut bad) = (0usize, 0usize);
    for (_, reads, k, m) in instances() {
        let idx = index_for(&reads, k, m);
        for v in idx.solid_rows().collect::<Vec<_>>() {
            nodes += 1;
            let mut want: Vec<u8> = idx.out_symbols(idx.rc_node_search(v)).into_iter().map(complement).collect();
            want.sort_unstable();
            bad += (idx.in_symbols_scan(v) != want) as usize;
        }
    }
    check(bad == 0, format!("{nodes} solid nodes, {bad} violations"))
}

fn weighting() -> Outcome {
    let (mut used, mut nodes, mut bad) = (0usize, 0usize, 0usize);
    for (_, reads, k, m) in instances().filter(|(_, r, _, _)| r.len() <= 20) {
        used += 1;
        let idx = index_for(&reads, k, m);
        let or = Oracle::new(&reads, k, m);
        for v in or.solid_rows() {
            nodes += 1;
            let got: BTreeMap<usize, (bool, usize)> =
                idx.weighted_foverlaps(v).into_iter().map(|w| (w.target, (w.irreducible, w.weight))).collect();
            bad += (got != or.weights(v)) as usize;
        }
    }
    let genome = b"gattacaggtcctc";
    let reads: Vec<Vec<u8>> = (0..5).map(|i| genome[i..i + 10].to_vec()).collect();
    let idx = index_for(&reads, 11, 2);
    let or = Oracle::new(&reads, 11, 2);
    let r1 = or.row(std::str::from_utf8(&reads[0]).unwrap());
    let r5 = or.row(std::str::from_utf8(&reads[4]).unwrap());
    let pattern = idx.weighted_foverlaps(r1).iter().any(|w| w.target == r5 && w.irreducible && w.weight == 3);
    check(
        bad == 0 && used > 0 && pattern,
        format!("{used} instances, {nodes} nodes, {bad} mismatches, tiling pattern weight 3: {pattern}"),
    )
}

fn assembly_soundness() -> Outcome {
    let s = sim(10_000, 100, 6);
    let idx = build(&s.reads, &BuildConfig::new(101, 30));
    let asm = assemble(&idx, &AssemblyConfig { threads: 4, ..AssemblyConfig::default() }).unwrap();
    let rc = reverse_complement(&s.genome);
    let inside = |c: &[u8]| s.genome.windows(c.len()).any(|w| w == c) || rc.windows(c.len()).any(|w| w == c);
    let sound = asm.contigs.iter().filter(|c| inside(c.sequence.as_bytes())).count();
    let mean = |lens: Vec<usize>| lens.iter().sum::<usize>() as f64 / lens.len().max(1) as f64;
    let cm = mean(asm.contigs.iter().map(|c| c.len()).collect());
    let um = mean(unitigs(&idx, idx.k() - 1).iter().map(|c| c.len()).collect());
    let ratio = cm / um.max(1.0);
    check(
        !asm.contigs.is_empty() && sound == asm.contigs.len() && ratio >= 1.0,
        format!("{sound}/{} contigs sound, mean {cm:.1} vs unitig mean {um:.1}, ratio {ratio:.2}", asm.contigs.len()),
    )
}

fn min_time<T>(runs: usize, mut f: impl FnMut() -> T) -> (f64, T) {
    let mut best = f64::INFINITY;
    let mut last = None;
    for _ in 0..runs {
        let t = Instant::now();
        let v = f();
        best = best.min(t.elapsed().as_secs_f64());
        last = Some(v);
    }
    (best, last.unwrap())
}

fn nextcontained_ns(idx: &RBossIndex, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let solid: Vec<usize> = idx.solid_rows().collect();
    let rows: Vec<usize> = (0..samples).map(|_| solid[rng.gen_range(0..solid.len())]).collect();
    let (secs, acc) = min_time(5, || rows.iter().map(|&r| idx.nextcontained(r).unwrap_or(0)).fold(0usize, usize::wrapping_add));
    std::hint::black_box(acc);
    secs * 1e9 / rows.len() as f64
}

fn scaling() -> Outcome {
    let cfg = BuildConfig::new(101, 30);
    let small = sim(40_000, 100, 7);
    let large = sim(80_000, 100, 8);
    let (ts, _) = min_time(3, || build(&small.reads, &cfg));
    let (tl, _) = min_time(3, || build(&large.reads, &cfg));
    let growth = tl / ts;

    let data = sim(20_000, 150, 10);
    let ks = [50usize, 70, 90, 110];
    let mut bps = Vec::new();
    let mut lat = Vec::new();
    for &k in &ks {
        let idx = build(&data.reads, &BuildConfig::new(k, 30));
        bps.push(idx.size_in_bits() as f64 / (idx.read_count() * idx.read_len()) as f64);
        lat.push(nextcontained_ns(&idx, 20_000));
    }
    let monotone = bps.windows(2).all(|w| w[1] > w[0]);
    let r2 = r_squared(&ks.map(|k| k as f64), &bps);
    let spread = lat.iter().cloned().fold(0.0, f64::max) / lat.iter().cloned().fold(f64::INFINITY, f64::min);
    let pass = growth <= 2.5 && monotone && r2 >= 0.95 && spread < 3.0;
    let bps_s: Vec<String> = bps.iter().map(|b| format!("{b:.2}")).collect();
    let lat_s: Vec<String> = lat.iter().map(|l| format!("{l:.0}")).collect();
    check(
        pass,
        format!(
            "build x{growth:.2} on doubled input; bits/symbol [{}] monotone {monotone}, linear fit R^2 {r2:.3}; nextcontained ns [{}] spread x{spread:.2}",
            bps_s.join(", "),
            lat_s.join(", ")
        ),
    )
}

fn r_squared(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    if syy == 0.0 {
        return 0.0;
    }
    sxy * sxy / (sxx * syy)
}

fn baseline_direction() -> Outcome {
    let s = simulate(&SimConfig { genome_len: 66_667, coverage: 15.0, read_len: 100, error_rate: 0.0, seed: 11 }).unwrap();
    let idx = build(&s.reads, &BuildConfig::new(101, 30).with_extras());
    let rep = rboss::bench::run(&idx, 1000, 1).unwrap();
    let nc = rep.ratio("nextcontained").unwrap_or(0.0);
    let bl = rep.ratio("buildL").unwrap_or(0.0);
    check(
        nc >= 10.0 && bl >= 10.0,
        format!("{} reads; LCS/tree latency ratio nextcontained x{nc:.1}, buildL x{bl:.1}", s.reads.len()),
    )
}

fn round_trip() -> Outcome {
    let s = sim(5_000, 80, 12);
    let mut idx = build(&s.reads, &BuildConfig::new(61, 20).with_extras());
    let nonext = rboss::assembler::marker_registry().get("dfs").unwrap().mark(&OverlapTable::new(&idx, 2), 2);
    idx.set_non_extensible(nonext);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rt.idx");
    idx.save(&path).unwrap();
    let loaded = RBossIndex::load(&path).unwrap();
    let identical = loaded.to_bytes() == std::fs::read(&path).unwrap() && loaded.to_bytes() == idx.to_bytes();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let solid: Vec<usize> = idx.solid_rows().collect();
    let mut bad = 0usize;
    let queries = 10_000;
    for q in 0..queries {
        let row = rng.gen_range(1..=idx.n());
        let v = solid[rng.gen_range(0..solid.len())];
        let same = match q % 5 {
            0 => idx.label(row) == loaded.label(row) && idx.classify(row) == loaded.classify(row),
            1 => idx.nextcontained(row) == loaded.nextcontained(row) && idx.out_symbols(row) == loaded.out_symbols(row),
            2 => idx.foverlaps(v) == loaded.foverlaps(v),
            3 => idx.boverlaps(v) == loaded.boverlaps(v) && idx.rc_node(v) == loaded.rc_node(v),
            _ => {
                let len = rng.gen_range(1..idx.k());
                let lab = idx.label(v);
                let q = &lab[lab.len() - len..];
                idx.backwardsearch(q) == loaded.backwardsearch(q)
            }
        };
        bad += (!same) as usize;
    }
    check(bad == 0 && identical, format!("{queries} queries, {bad} differences, bit-identical re-serialization {identical}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("worked example exactness", worked_example),
        ("oracle equivalence", oracle_equivalence),
        ("tree and LCS nextcontained agree", nextcontained_routes),
        ("in/out symbol symmetry under rc", rc_symmetry),
        ("overlap weighting", weighting),
        ("assembly soundness", assembly_soundness),
        ("scaling trends", scaling),
        ("tree route beats LCS baseline", baseline_direction),
        ("serialization round-trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        failed += (!out.pass) as usize;
        println!(
            "criterion {}: {} {name}: {} ({:.1}s)",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
