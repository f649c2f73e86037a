//! Marking of non-extensible solid nodes.
//!
//! A solid node is marked when (i) it has more than one DNA out-edge,
//! (ii) its contained linkers leave by two or more distinct symbols,
//! (iii) its own out-symbol differs from the one its linkers share, or
//! (iv) it has two or more irreducible forward overlaps.

use crate::alphabet::{self, SEP};
use crate::assembler::table::OverlapTable;
use crate::assembler::parallel_map;
use crate::index::RBossIndex;
use crate::strategy::Registry;
use crate::succinct::{BitVector, RankSelect};

pub trait NonExtensibleMarker: Send + Sync {
    fn name(&self) -> &'static str;
    fn mark(&self, table: &OverlapTable, threads: usize) -> BitVector;
}

/// Checks every solid node on its own.
pub struct DirectMarker;

/// One left-to-right pass over the overlap tree, carrying the union of the
/// out-symbols of the linkers on the current root path.
pub struct DfsMarker;

fn symbol_mask(idx: &RBossIndex, row: usize) -> u8 {
    idx.out_symbols(row).into_iter().filter(|&c| c != SEP).fold(0, |m, c| m | 1 << alphabet::rank(c).unwrap())
}

/// Cases (i) and (iii) given the linker mask, then (ii).
fn local_cases(idx: &RBossIndex, row: usize, linkers: Option<u8>) -> bool {
    let own = symbol_mask(idx, row);
    if own.count_ones() > 1 {
        return true;
    }
    match linkers {
        Some(mask) if mask.count_ones() > 1 => true,
        Some(mask) => own != 0 && own != mask,
        None => false,
    }
}

impl NonExtensibleMarker for DirectMarker {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn mark(&self, table: &OverlapTable, threads: usize) -> BitVector {
        let idx = table.index();
        let rows: Vec<usize> = idx.solid_rows().collect();
        let flags = parallel_map(&rows, threads, |&v| {
            let l = idx.build_l(v);
            let linkers = (!l.is_empty()).then(|| l.iter().fold(0, |m, &c| m | symbol_mask(idx, c)));
            local_cases(idx, v, linkers) || table.irreducible(v).len() >= 2
        });
        let marked: Vec<usize> = rows.into_iter().zip(flags).filter(|(_, f)| *f).map(|(v, _)| v).collect();
        BitVector::from_positions(idx.n(), &marked)
    }
}

impl NonExtensibleMarker for DfsMarker {
    fn name(&self) -> &'static str {
        "dfs"
    }

    fn mark(&self, table: &OverlapTable, threads: usize) -> BitVector {
        let idx = table.index();
        let bp = idx.tree().bits();
        // cumulative linker masks of the open internal nodes; the root has none
        let mut stack: Vec<u8> = Vec::new();
        let mut candidates = Vec::new();
        let mut marked = Vec::new();
        let mut leaf = 0usize;
        let mut p = 1usize;
        while p <= bp.len() {
            if bp.get(p) && p < bp.len() && !bp.get(p + 1) {
                leaf += 1;
                if idx.is_solid(leaf) {
                    let linkers = stack.last().copied().filter(|_| stack.len() > 1);
                    if local_cases(idx, leaf, linkers) {
                        marked.push(leaf);
                    } else {
                        candidates.push(leaf);
                    }
                }
                p += 2;
            } else if bp.get(p) {
                let mask = if stack.is_empty() {
                    0
                } else {
                    // the first child of a kept node is its defining linker
                    stack.last().unwrap() | symbol_mask(idx, leaf + 1)
                };
                stack.push(mask);
                p += 1;
            } else {
                stack.pop();
                p += 1;
            }
        }
        let irr = parallel_map(&candidates, threads, |&v| table.irreducible(v).len() >= 2);
        marked.extend(candidates.into_iter().zip(irr).filter(|(_, f)| *f).map(|(v, _)| v));
        marked.sort_unstable();
        BitVector::from_positions(idx.n(), &marked)
    }
}

pub fn marker_registry() -> Registry<dyn NonExtensibleMarker> {
    let mut r: Registry<dyn NonExtensibleMarker> = Registry::new("marker");
    r.register("direct", || Box::new(DirectMarker)).register("dfs", || Box::new(DfsMarker));
    r
}
