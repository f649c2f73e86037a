//! Maximal-path spelling and the fixed-order unitig baseline.

use std::collections::{BTreeMap, HashSet};

use crate::alphabet::{canonical, reverse_complement};
use crate::assembler::table::OverlapTable;
use crate::assembler::{parallel_map, Contig};
use crate::index::RBossIndex;
use crate::succinct::{BitVector, RankSelect};

/// Symbols spelled right of `start` through extensible nodes. Stops after
/// taking a marked node, at a dead end, or before a repeated node.
fn walk(idx: &RBossIndex, nonext: &BitVector, start: usize) -> Vec<u8> {
    let mut out = Vec::new();
    if nonext.get(start) {
        return out;
    }
    let mut seen = HashSet::from([start]);
    let mut x = start;
    while let Some((y, syms)) = idx.right_extension(x) {
        if !seen.insert(y) {
            break;
        }
        out.extend(syms);
        x = y;
        if nonext.get(y) {
            break;
        }
    }
    out
}

fn spell_from(idx: &RBossIndex, nonext: &BitVector, u: usize) -> Contig {
    let right = walk(idx, nonext, u);
    let left = walk(idx, nonext, idx.rc_node(u));
    let mut seq = reverse_complement(&left);
    seq.extend(idx.label(u));
    seq.extend_from_slice(&right);
    Contig::new(seq, u, left.len(), right.len())
}

/// Keeps one contig per canonical sequence (the one with the smallest
/// seed), drops short ones, and sorts by canonical sequence.
pub(crate) fn dedup(contigs: Vec<Contig>, min_len: usize) -> Vec<Contig> {
    let mut by_key: BTreeMap<Vec<u8>, Contig> = BTreeMap::new();
    for c in contigs.into_iter().filter(|c| c.sequence.len() >= min_len) {
        let key = canonical(c.sequence.as_bytes());
        match by_key.get(&key) {
            Some(old) if old.seed <= c.seed => {}
            _ => {
                by_key.insert(key, c);
            }
        }
    }
    by_key.into_values().collect()
}

/// Contigs from maximal paths. Paths start at every marked node, at the
/// dBG successors and irreducible overlap targets of marked nodes, and at
/// p-nodes that no other node overlaps into.
pub fn spell_maximal_paths(table: &OverlapTable, nonext: &BitVector, min_len: usize, threads: usize) -> Vec<Contig> {
    let idx = table.index();
    let mut has_incoming = vec![false; idx.n() + 1];
    for v in idx.solid_rows() {
        for ov in table.foverlaps(v) {
            has_incoming[ov.target] = true;
        }
    }
    let mut starts: Vec<usize> = Vec::new();
    for v in idx.solid_rows() {
        if nonext.get(v) {
            starts.push(v);
            for a in idx.out_symbols(v) {
                starts.extend(idx.forward(v, a).ok().flatten());
            }
            starts.extend(table.irreducible(v).into_iter().map(|w| w.target));
        } else if idx.is_p_node(v) && !has_incoming[v] {
            starts.push(v);
        }
    }
    starts.sort_unstable();
    starts.dedup();
    let contigs = parallel_map(&starts, threads, |&u| spell_from(idx, nonext, u));
    dedup(contigs, min_len)
}

/// Unitigs of the order-k dBG: unary paths over DNA edges, ignoring
/// overlaps shorter than k-2.
pub fn unitigs(idx: &RBossIndex, min_len: usize) -> Vec<Contig> {
    let mut used = vec![false; idx.n() + 1];
    let mut out = Vec::new();
    let step = |x: usize| -> Option<(usize, u8)> {
        if idx.traversable_outdegree(x) != 1 {
            return None;
        }
        let a = idx.sole_symbol(x)?;
        let y = idx.forward_unchecked(x, a)?;
        (idx.indegree(y) == 1).then_some((y, a))
    };
    let extend = |used: &mut Vec<bool>, start: usize| -> Vec<u8> {
        let mut syms = Vec::new();
        let mut x = start;
        while let Some((y, a)) = step(x) {
            if used[y] {
                break;
            }
            used[y] = true;
            used[idx.rc_node(y)] = true;
            syms.push(a);
            x = y;
        }
        syms
    };
    for u in idx.solid_rows() {
        if used[u] {
            continue;
        }
        used[u] = true;
        used[idx.rc_node(u)] = true;
        let right = extend(&mut used, u);
        let left = extend(&mut used, idx.rc_node(u));
        let mut seq = reverse_complement(&left);
        seq.extend(idx.label(u));
        seq.extend_from_slice(&right);
        out.push(Contig::new(seq, u, left.len(), right.len()));
    }
    dedup(out, min_len)
}
