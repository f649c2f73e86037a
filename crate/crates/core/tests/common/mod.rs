//! Brute-force reference implementations over explicit label enumeration.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rboss::{build_index, BuildConfig, RBossIndex, ReadSet};

pub const FIG1_READS: [&str; 4] = ["atttggagta", "gtattggaaa", "agtattggaa", "caatactcca"];

pub fn rc(s: &[u8]) -> Vec<u8> {
    s.iter()
        .rev()
        .map(|&c| match c {
            b'a' => b't',
            b'c' => b'g',
            b'g' => b'c',
            b't' => b'a',
            x => x,
        })
        .collect()
}

pub fn colex(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Every quantity recomputed from the padded labels of `R*`.
pub struct Oracle {
    pub k: usize,
    pub m: usize,
    pub members: Vec<Vec<u8>>,
    /// Labels in row order; `labels[i]` is row i + 1.
    pub labels: Vec<Vec<u8>>,
    pub row_of: HashMap<Vec<u8>, usize>,
    pub out: Vec<BTreeSet<u8>>,
    pub p_nodes: BTreeSet<usize>,
    pub s_nodes: BTreeSet<usize>,
}

impl Oracle {
    pub fn new(reads: &[Vec<u8>], k: usize, m: usize) -> Self {
        let members: Vec<Vec<u8>> = reads.iter().flat_map(|r| [r.clone(), rc(r)]).collect();
        let mut edges: BTreeMap<Vec<u8>, BTreeSet<u8>> = BTreeMap::new();
        for s in &members {
            for j in 0..s.len() {
                let start = (j + 1).saturating_sub(k - 1);
                let mut lab = vec![b'$'; (k - 1).saturating_sub(j + 1)];
                lab.extend_from_slice(&s[start..=j]);
                let next = s.get(j + 1).copied().unwrap_or(b'$');
                edges.entry(lab).or_default().insert(next);
            }
        }
        let mut labels: Vec<Vec<u8>> = edges.keys().cloned().collect();
        labels.sort_by(|a, b| colex(a, b));
        let row_of: HashMap<Vec<u8>, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i + 1)).collect();
        let out = labels.iter().map(|l| edges[l].clone()).collect();
        let z = members[0].len();
        let p_nodes = members.iter().map(|s| row_of[&s[..k - 1]]).collect();
        let s_nodes = members.iter().map(|s| row_of[&s[z - (k - 1)..]]).collect();
        Self { k, m, members, labels, row_of, out, p_nodes, s_nodes }
    }

    pub fn fig1() -> Self {
        Self::new(&FIG1_READS.iter().map(|s| s.as_bytes().to_vec()).collect::<Vec<_>>(), 11, 2)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, row: usize) -> &[u8] {
        &self.labels[row - 1]
    }

    pub fn is_solid(&self, row: usize) -> bool {
        !self.label(row).contains(&b'$')
    }

    pub fn solid_rows(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&r| self.is_solid(r)).collect()
    }

    pub fn llabel(&self, row: usize) -> Vec<u8> {
        self.label(row).iter().copied().filter(|&c| c != b'$').collect()
    }

    pub fn row(&self, label: &str) -> usize {
        self.row_of[label.as_bytes()]
    }

    /// Rows whose labels end with `q`, as a contiguous range.
    pub fn suffixed_by(&self, q: &[u8]) -> Vec<usize> {
        (1..=self.n()).filter(|&r| self.label(r).ends_with(q)).collect()
    }

    pub fn rc_row(&self, row: usize) -> usize {
        self.row_of[&rc(self.label(row))]
    }

    /// Longest linker label that is a proper suffix of `row`'s llabel and at
    /// least m long.
    pub fn nextcontained(&self, row: usize) -> Option<usize> {
        let own = self.llabel(row);
        (self.m..own.len())
            .rev()
            .map(|len| {
                let mut lab = vec![b'$'; self.k - 1 - len];
                lab.extend_from_slice(&own[own.len() - len..]);
                lab
            })
            .find_map(|lab| self.row_of.get(&lab).copied())
    }

    /// Maximum valid overlap lengths from solid `row` to other solid rows.
    pub fn foverlaps(&self, row: usize) -> BTreeMap<usize, usize> {
        let v = self.label(row);
        let k1 = self.k - 1;
        let own_rc = self.rc_row(row);
        let mut out = BTreeMap::new();
        for w in self.solid_rows() {
            if w == row || w == own_rc {
                continue;
            }
            let lw = self.label(w);
            for o in (self.m..=self.k - 2).rev() {
                let valid = o == self.k - 2 || self.p_nodes.contains(&w);
                if valid && v[k1 - o..] == lw[..o] {
                    out.insert(w, o);
                    break;
                }
            }
        }
        out
    }

    pub fn boverlaps(&self, row: usize) -> BTreeMap<usize, usize> {
        self.solid_rows()
            .into_iter()
            .filter_map(|u| self.foverlaps(u).get(&row).map(|&o| (u, o)))
            .collect()
    }

    /// Forward and backward overlaps of every solid row, computed once.
    pub fn all_overlaps(&self) -> BTreeMap<usize, (BTreeMap<usize, usize>, BTreeMap<usize, usize>)> {
        let fwd: BTreeMap<usize, BTreeMap<usize, usize>> =
            self.solid_rows().into_iter().map(|v| (v, self.foverlaps(v))).collect();
        let mut out: BTreeMap<usize, (BTreeMap<usize, usize>, BTreeMap<usize, usize>)> =
            fwd.iter().map(|(&v, f)| (v, (f.clone(), BTreeMap::new()))).collect();
        for (&u, f) in &fwd {
            for (&v, &o) in f {
                out.get_mut(&v).unwrap().1.insert(u, o);
            }
        }
        out
    }

    /// (irreducible, weight) per forward target of `row`.
    pub fn weights(&self, row: usize) -> BTreeMap<usize, (bool, usize)> {
        let f = self.foverlaps(row);
        let next: BTreeMap<usize, BTreeMap<usize, usize>> = f.keys().map(|&t| (t, self.foverlaps(t))).collect();
        let witnesses = |t: usize| -> Vec<usize> {
            f.iter().filter(|&(&x, &ox)| x != t && ox < f[&t] && next[&t].contains_key(&x)).map(|(&x, _)| x).collect()
        };
        let irr: BTreeSet<usize> = f.keys().copied().filter(|&t| witnesses(t).is_empty()).collect();
        let mut out: BTreeMap<usize, (bool, usize)> = f.keys().map(|&t| (t, (irr.contains(&t), 0))).collect();
        for &t in f.keys() {
            let ws: Vec<usize> = witnesses(t).into_iter().filter(|x| irr.contains(x)).collect();
            if ws.len() == 1 {
                out.get_mut(&ws[0]).unwrap().1 += 1;
            }
        }
        out
    }
}

pub fn fig1_index() -> RBossIndex {
    let rs = ReadSet::new(FIG1_READS).unwrap();
    build_index(&rs, &BuildConfig::new(11, 2).with_extras()).unwrap()
}

pub fn random_genome(rng: &mut impl Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| b"acgt"[rng.gen_range(0..4)]).collect()
}

/// A random instance: reads drawn from both strands of a small genome so
/// that overlaps are plentiful. Returns (reads, k, m).
pub fn random_instance(seed: u64) -> (Vec<Vec<u8>>, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = rng.gen_range(6..=60);
    let r = rng.gen_range(1..=50);
    let glen = rng.gen_range(z..=z + 3 * r + 10);
    let genome = random_genome(&mut rng, glen);
    let reads = (0..r)
        .map(|_| {
            let p = rng.gen_range(0..=glen - z);
            let s = genome[p..p + z].to_vec();
            if rng.gen_bool(0.3) {
                rc(&s)
            } else {
                s
            }
        })
        .collect();
    let k = rng.gen_range(4..=z + 1);
    let m = rng.gen_range(2..=k - 2);
    (reads, k, m)
}

pub fn index_for(reads: &[Vec<u8>], k: usize, m: usize) -> RBossIndex {
    let rs = ReadSet::new(reads).unwrap();
    build_index(&rs, &BuildConfig::new(k, m).with_extras()).unwrap()
}
