//! Forward overlaps of every solid node, computed once and shared by the
//! marking and spelling passes.

use std::collections::{BTreeMap, BTreeSet};

use crate::assembler::parallel_map;
use crate::index::RBossIndex;
use crate::overlap::{classify_overlaps, Overlap, WeightedOverlap};
use crate::succinct::RankSelect;

pub struct OverlapTable<'a> {
    idx: &'a RBossIndex,
    fwd: Vec<Vec<Overlap>>,
}

impl<'a> OverlapTable<'a> {
    pub fn new(idx: &'a RBossIndex, threads: usize) -> Self {
        let rows: Vec<usize> = idx.solid_rows().collect();
        let fwd = parallel_map(&rows, threads, |&v| idx.foverlaps(v));
        Self { idx, fwd }
    }

    /// Overlaps disabled: every node has no forward overlaps.
    pub fn empty(idx: &'a RBossIndex) -> Self {
        Self { idx, fwd: vec![Vec::new(); idx.solid_count()] }
    }

    pub fn index(&self) -> &'a RBossIndex {
        self.idx
    }

    pub fn foverlaps(&self, row: usize) -> &[Overlap] {
        &self.fwd[self.idx.solid_bits().rank1(row) - 1]
    }

    pub fn weighted(&self, row: usize) -> Vec<WeightedOverlap> {
        let fwd: BTreeMap<usize, usize> = self.foverlaps(row).iter().map(|ov| (ov.target, ov.o)).collect();
        classify_overlaps(&fwd, |t| self.foverlaps(t).iter().map(|ov| ov.target).collect::<BTreeSet<_>>())
    }

    pub fn irreducible(&self, row: usize) -> Vec<WeightedOverlap> {
        self.weighted(row).into_iter().filter(|w| w.irreducible).collect()
    }
}
