use crate::alphabet::reverse_complement;
use crate::index::RBossIndex;
use crate::succinct::RankSelect;

impl RBossIndex {
    /// Row of the reverse complement of a solid row.
    pub fn rc_node(&self, row: usize) -> usize {
        self.rc_node_perm(row).unwrap_or_else(|| self.rc_node_search(row))
    }

    /// Label extraction, reverse complement, backward search.
    pub fn rc_node_search(&self, row: usize) -> usize {
        let v = self.backwardsearch(&reverse_complement(&self.label(row)));
        debug_assert_eq!(v.len(), 1, "reverse complement of a solid label is a row");
        v.lo
    }

    /// Table lookup; `None` when the index was built without the table.
    pub fn rc_node_perm(&self, row: usize) -> Option<usize> {
        let perm = self.rc_perm.as_ref()?;
        let j = perm[self.solid.rank1(row) - 1] as usize;
        self.solid.select1(j + 1)
    }
}
