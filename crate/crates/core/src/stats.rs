//! Size and shape summary of an index.

use serde::Serialize;

use crate::index::RBossIndex;
use crate::succinct::RankSelect;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentSize {
    pub name: &'static str,
    pub bits: usize,
    pub percent: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexStats {
    pub k: usize,
    pub m: usize,
    pub reads: usize,
    pub read_len: usize,
    pub n: usize,
    pub e: usize,
    pub solid: usize,
    pub linker: usize,
    pub p_nodes: usize,
    pub tree_nodes: usize,
    pub tree_leaves: usize,
    pub total_bits: usize,
    /// Index bits divided by the number of input bases, `r * z`.
    pub bits_per_input_symbol: f64,
    pub components: Vec<ComponentSize>,
}

impl IndexStats {
    pub fn of(idx: &RBossIndex) -> Self {
        let total = idx.size_in_bits();
        let components = idx
            .component_bits()
            .into_iter()
            .map(|(name, bits)| ComponentSize { name, bits, percent: 100.0 * bits as f64 / total.max(1) as f64 })
            .collect();
        let input = (idx.read_count() * idx.read_len()).max(1);
        Self {
            k: idx.k(),
            m: idx.m(),
            reads: idx.read_count(),
            read_len: idx.read_len(),
            n: idx.n(),
            e: idx.e(),
            solid: idx.solid_count(),
            linker: idx.linker_count(),
            p_nodes: idx.p_node_bits().count_ones(),
            tree_nodes: idx.tree().node_count(),
            tree_leaves: idx.tree().leaf_count(),
            total_bits: total,
            bits_per_input_symbol: total as f64 / input as f64,
            components,
        }
    }
}
