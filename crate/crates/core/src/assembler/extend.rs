//! Right/left extensibility of solid nodes.

use crate::alphabet::SEP;
use crate::index::RBossIndex;

impl RBossIndex {
    /// The single DNA out-symbol of a row, if it has exactly one.
    pub(crate) fn sole_symbol(&self, row: usize) -> Option<u8> {
        let syms = self.out_symbols(row);
        match syms.as_slice() {
            [a] if *a != SEP => Some(*a),
            [SEP, a] => Some(*a),
            _ => None,
        }
    }

    /// Unique continuation of a solid node: the next solid node and the
    /// symbols spelled on the way. `None` if the node is not right
    /// extensible.
    ///
    /// A non-s-node continues along its only edge. An s-node advances its
    /// own edge (if any) together with all contained linkers; every member
    /// must agree on one symbol per round, and the first member to reach
    /// full order is the continuation.
    pub fn right_extension(&self, row: usize) -> Option<(usize, Vec<u8>)> {
        if !self.is_s_node(row) {
            if self.traversable_outdegree(row) != 1 {
                return None;
            }
            let a = self.sole_symbol(row)?;
            return Some((self.forward_unchecked(row, a)?, vec![a]));
        }
        let mut queue: Vec<usize> = Vec::new();
        match self.traversable_outdegree(row) {
            0 => {}
            1 => queue.push(row),
            _ => return None,
        }
        queue.extend(self.build_l(row));
        if queue.first().is_some_and(|&q| q != row && self.traversable_outdegree(q) == 0) {
            queue.remove(0);
        }
        if queue.is_empty() {
            return None;
        }
        let mut spelled = Vec::new();
        for _ in 0..(self.k - 1 - self.m) {
            let a = self.sole_symbol(queue[0])?;
            if queue.iter().any(|&q| self.sole_symbol(q) != Some(a)) {
                return None;
            }
            for q in queue.iter_mut() {
                *q = self.forward_unchecked(*q, a)?;
            }
            spelled.push(a);
            if let Some(&s) = queue.iter().find(|&&q| self.is_solid(q)) {
                return Some((s, spelled));
            }
        }
        None
    }

    pub fn is_re(&self, row: usize) -> bool {
        self.right_extension(row).is_some()
    }

    pub fn is_le(&self, row: usize) -> bool {
        self.is_re(self.rc_node(row))
    }
}
