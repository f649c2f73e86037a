//! Irreducible forward overlaps and their weights.
//!
//! An overlap `v -> t` is transitive when some other forward target `x` of
//! `v`, at a smaller overlap length, is also a forward target of `t`: the
//! path `v -> t -> x` covers it. Otherwise it is irreducible. The weight of
//! an irreducible target `x` counts the transitive targets whose only
//! irreducible witness is `x`.

use std::collections::{BTreeMap, BTreeSet};

use log::debug;
use serde::Serialize;

use crate::index::RBossIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightedOverlap {
    pub target: usize,
    pub o: usize,
    pub weight: usize,
    pub irreducible: bool,
}

/// Classification from a forward-overlap function. Shared with the tests,
/// which feed it brute-force overlaps.
pub fn classify_overlaps<F>(fwd: &BTreeMap<usize, usize>, mut fwd_of: F) -> Vec<WeightedOverlap>
where
    F: FnMut(usize) -> BTreeSet<usize>,
{
    let mut witnesses: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&t, &o) in fwd {
        let next = fwd_of(t);
        let w: Vec<usize> = fwd.iter().filter(|&(&x, &ox)| x != t && ox < o && next.contains(&x)).map(|(&x, _)| x).collect();
        witnesses.insert(t, w);
    }
    let irreducible: BTreeSet<usize> = witnesses.iter().filter(|(_, w)| w.is_empty()).map(|(&t, _)| t).collect();
    let mut weight: BTreeMap<usize, usize> = BTreeMap::new();
    for w in witnesses.values() {
        let mut irr = w.iter().filter(|x| irreducible.contains(x));
        if let (Some(&x), None) = (irr.next(), irr.next()) {
            *weight.entry(x).or_default() += 1;
        }
    }
    fwd.iter()
        .map(|(&target, &o)| WeightedOverlap {
            target,
            o,
            weight: weight.get(&target).copied().unwrap_or(0),
            irreducible: irreducible.contains(&target),
        })
        .collect()
}

impl RBossIndex {
    /// Forward overlaps of a solid row, each flagged irreducible or
    /// transitive, with weights on the irreducible ones.
    pub fn weighted_foverlaps(&self, row: usize) -> Vec<WeightedOverlap> {
        let fwd: BTreeMap<usize, usize> = self.foverlaps(row).into_iter().map(|ov| (ov.target, ov.o)).collect();
        let out = classify_overlaps(&fwd, |t| self.foverlaps(t).into_iter().map(|ov| ov.target).collect());
        for w in out.iter().filter(|w| w.irreducible && w.weight + self.m > w.o) {
            debug!("row {row}: weight {} of overlap with {} exceeds o - m = {}", w.weight, w.target, w.o - self.m);
        }
        out
    }

    pub fn irreducible_foverlaps(&self, row: usize) -> Vec<WeightedOverlap> {
        self.weighted_foverlaps(row).into_iter().filter(|w| w.irreducible).collect()
    }
}
