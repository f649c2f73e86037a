//! Forward and backward overlaps of solid nodes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::alphabet::reverse_complement;
use crate::index::{RBossIndex, VoNode};
use crate::succinct::RankSelect;

/// A valid overlap with a solid node, of length `o`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Overlap {
    pub target: usize,
    pub o: usize,
}

impl RBossIndex {
    /// Solid rows inside a row range.
    pub(crate) fn solid_in(&self, v: VoNode) -> impl Iterator<Item = usize> + '_ {
        let (from, to) =
            if v.is_empty() { (1, 0) } else { (self.solid.rank1(v.lo - 1) + 1, self.solid.rank1(v.hi)) };
        (from..=to).map(move |j| self.solid.select1(j).unwrap())
    }

    /// Forward overlaps of a solid row: targets whose prefix equals a suffix
    /// of this row, at the maximum valid length per target. The row itself
    /// and its reverse complement are never reported.
    ///
    /// The search runs on the reverse-complement strand. The rows suffixed by
    /// a prefix of `label(v)^rc` are the reverse complements of rows prefixed
    /// by a suffix of `label(v)`. It starts at the shortest contained linker;
    /// with no linker only full dBG edges (length k-2) are possible.
    pub fn foverlaps(&self, row: usize) -> Vec<Overlap> {
        let k2 = self.k - 2;
        let start = self.build_l(row).last().map_or(k2, |&l| self.llabel_len(l));
        let q = reverse_complement(&self.label(row));
        let own_rc = self.rc_node(row);
        let mut range = self.backwardsearch(&q[..start]);
        let mut best = BTreeMap::new();
        for o in start..=k2 {
            if o > start {
                range = self.extend_right(range, q[o - 1]);
            }
            if range.is_empty() {
                break;
            }
            for w in self.solid_in(range) {
                // w == row would report the node's own reverse complement
                if w != row && w != own_rc && (o == k2 || self.is_s_node(w)) {
                    best.insert(self.rc_node(w), o);
                }
            }
        }
        best.into_iter().map(|(target, o)| Overlap { target, o }).collect()
    }

    /// Backward overlaps: solid rows `u` with `row` among their forward
    /// overlaps. Below length k-2 this requires `row` to be a p-node.
    pub fn boverlaps(&self, row: usize) -> Vec<Overlap> {
        let k2 = self.k - 2;
        let lab = self.label(row);
        let own_rc = self.rc_node(row);
        let start = if self.is_p_node(row) { self.m } else { k2 };
        let mut range = self.backwardsearch(&lab[..start]);
        let mut best = BTreeMap::new();
        for o in start..=k2 {
            if o > start {
                range = self.extend_right(range, lab[o - 1]);
            }
            if range.is_empty() {
                break;
            }
            for u in self.solid_in(range) {
                if u != row && u != own_rc {
                    best.insert(u, o);
                }
            }
        }
        best.into_iter().map(|(target, o)| Overlap { target, o }).collect()
    }

    /// Backward overlaps computed as forward overlaps of the reverse
    /// complement, mapped back.
    pub fn boverlaps_via_rc(&self, row: usize) -> Vec<Overlap> {
        let mut out: Vec<Overlap> = self
            .foverlaps(self.rc_node(row))
            .into_iter()
            .map(|ov| Overlap { target: self.rc_node(ov.target), o: ov.o })
            .collect();
        out.sort_unstable();
        out
    }
}
