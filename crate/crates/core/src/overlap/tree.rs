//! Contained linkers through the overlap tree.

use crate::index::RBossIndex;

impl RBossIndex {
    /// Next linker whose label is a suffix of `row`'s label, shorter than
    /// any linker already passed, and at least m long.
    pub fn nextcontained(&self, row: usize) -> Option<usize> {
        let t = &self.tree;
        let leaf = t.leaf_select_unchecked(row)?;
        let mut p = t.parent_unchecked(leaf)?;
        if t.first_child_unchecked(p) == Some(leaf) {
            // the leaf is the linker that defines p
            p = t.parent_unchecked(p)?;
        }
        if p == t.root() {
            return None;
        }
        Some(t.leaf_rank_unchecked(p))
    }

    /// Linkers contained by `row`, longest first.
    pub fn build_l(&self, row: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.nextcontained(row);
        while let Some(c) = cur {
            out.push(c);
            cur = self.nextcontained(c);
        }
        out
    }

    /// [`build_l`](Self::build_l) with each linker's llabel length, which
    /// is the overlap length it witnesses.
    pub fn linker_list(&self, row: usize) -> Vec<(usize, usize)> {
        self.build_l(row).into_iter().map(|c| (c, self.llabel_len(c))).collect()
    }
}
