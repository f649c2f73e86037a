//! Index assembly from the suffix structures.

use log::info;

use crate::alphabet::{self, FLAG_OFFSET, RANK_SEP, SEP, TERM};
use crate::construction::reads::{BuildConfig, ReadSet};
use crate::construction::suffix::{build_concat, SuffixStructures};
use crate::error::Result;
use crate::index::RBossIndex;
use crate::succinct::{BitVector, BpTree, RankSelect, SymbolSequence};
use crate::vo::LcsArray;

/// Row layout of M as derived from the padded LCP: everything the later
/// steps need, before any succinct encoding.
pub struct RowTable {
    /// Edge codes per row, already flagged.
    pub edges: Vec<Vec<u8>>,
    /// Rank of the last label symbol.
    pub last: Vec<u8>,
    /// `None` for solid rows, otherwise the llabel length.
    pub llabel: Vec<Option<usize>>,
    /// Longest common suffix with the previous row, capped at k-2.
    pub lcs: Vec<u16>,
}

impl RowTable {
    pub fn len(&self) -> usize {
        self.last.len()
    }

    pub fn is_empty(&self) -> bool {
        self.last.is_empty()
    }
}

/// Groups suffixes into rows: maximal runs of padded LCP >= k-1 among the
/// suffixes that start with a base. Suffixes starting with `$` or `#`
/// would form the all-padding node, which M does not keep.
pub fn build_rows(ss: &SuffixStructures, k: usize) -> RowTable {
    let padded = ss.pad_lcp(k);
    let text = ss.text();
    let mut rows = RowTable { edges: vec![], last: vec![], llabel: vec![], lcs: vec![] };
    let mut masks: Vec<u8> = Vec::new();
    let mut first = true;
    for i in 1..=ss.len() {
        let p = ss.sa(i);
        let head = text[p - 1];
        if head == SEP || head == TERM {
            continue;
        }
        let prev = if p == 1 { text[text.len() - 1] } else { text[p - 2] };
        let sym = if prev == TERM { RANK_SEP } else { alphabet::rank(prev).expect("dna or separator") };
        let lcp = padded[i - 1] as usize;
        if first || lcp < k - 1 {
            let d = ss.dist_to_separator(p);
            rows.last.push(alphabet::rank(head).unwrap());
            rows.llabel.push((d < k - 1).then_some(d));
            rows.lcs.push(if first { 0 } else { lcp.min(k - 2) as u16 });
            masks.push(0);
            first = false;
        }
        *masks.last_mut().unwrap() |= 1 << sym;
    }

    // flag edges repeated within a block of rows sharing k-2 symbols
    let mut seen = 0u8;
    for (i, &mask) in masks.iter().enumerate() {
        if i == 0 || (rows.lcs[i] as usize) < k - 2 {
            seen = 0;
        }
        let codes = (1u8..=5)
            .filter(|&x| mask & (1 << x) != 0)
            .map(|x| if x != RANK_SEP && seen & (1 << x) != 0 { x + FLAG_OFFSET } else { x })
            .collect();
        rows.edges.push(codes);
        seen |= mask;
    }
    rows
}

/// Balanced parentheses of the pruned trie of reversed labels. Internal
/// nodes are LCP intervals over the row LCS values; one is kept when its
/// depth is at least m and its leftmost row is the linker spelling exactly
/// that depth.
pub fn build_overlap_tree(rows: &RowTable, m: usize) -> BpTree {
    let n = rows.len();
    let mut opens = vec![0u32; n + 1];
    let mut closes = vec![0u32; n + 1];
    // (depth, left boundary), rows 1-based
    let mut stack: Vec<(usize, usize)> = vec![(0, 1)];
    for i in 2..=n + 1 {
        let cur = if i <= n { rows.lcs[i - 1] as usize } else { 0 };
        let mut lb = i - 1;
        while cur < stack.last().unwrap().0 {
            let (depth, left) = stack.pop().unwrap();
            if depth >= m && rows.llabel[left - 1] == Some(depth) {
                opens[left] += 1;
                closes[i - 1] += 1;
            }
            lb = left;
        }
        if cur > stack.last().unwrap().0 {
            stack.push((cur, lb));
        }
    }
    let mut bits = Vec::with_capacity(2 * n + 2);
    bits.push(true);
    for i in 1..=n {
        bits.extend(std::iter::repeat_n(true, opens[i] as usize));
        bits.push(true);
        bits.push(false);
        bits.extend(std::iter::repeat_n(false, closes[i] as usize));
    }
    bits.push(false);
    BpTree::new(BitVector::from_bits(bits)).expect("interval nesting yields balanced parentheses")
}

/// Builds the index over `R*`.
pub fn build_index(rs: &ReadSet, cfg: &BuildConfig) -> Result<RBossIndex> {
    cfg.validate(rs.read_len())?;
    let k = cfg.k;
    let ss = SuffixStructures::new(build_concat(rs));
    let rows = build_rows(&ss, k);
    drop(ss);
    let n = rows.len();

    let mut codes = Vec::new();
    let mut bpos = Vec::with_capacity(n);
    for g in &rows.edges {
        codes.extend_from_slice(g);
        bpos.push(codes.len());
    }
    let mut c = [0usize; 7];
    for &x in &rows.last {
        c[x as usize + 1] += 1;
    }
    for x in 1..7 {
        c[x] += c[x - 1];
    }
    let mut off = [false; 7];
    for (i, &x) in rows.last.iter().enumerate() {
        if rows.llabel[i] == Some(1) {
            off[x as usize] = true;
        }
    }
    let solid_rows: Vec<usize> = (1..=n).filter(|&i| rows.llabel[i - 1].is_none()).collect();
    let tree = build_overlap_tree(&rows, cfg.m);

    let mut idx = RBossIndex {
        k,
        m: cfg.m,
        r: rs.len(),
        z: rs.read_len(),
        n,
        edges: SymbolSequence::new(&codes, alphabet::EDGE_CODE_BITS),
        b: BitVector::from_positions(codes.len(), &bpos),
        c,
        off,
        solid: BitVector::from_positions(n, &solid_rows),
        pnode: BitVector::from_positions(n, &[]),
        read_rows: Vec::new(),
        nonext: None,
        tree,
        lcs: cfg.keep_lcs.then(|| LcsArray::new(rows.lcs.clone())),
        rc_perm: None,
    };

    let mut pnodes: Vec<usize> = rs
        .members()
        .filter_map(|s| {
            let v = idx.backwardsearch(&s[..k - 1]);
            (v.len() == 1 && idx.is_solid(v.lo)).then_some(v.lo)
        })
        .collect();
    idx.read_rows = rs.reads().iter().map(|s| idx.backwardsearch(&s[..k - 1]).lo as u32).collect();
    pnodes.sort_unstable();
    pnodes.dedup();
    idx.pnode = BitVector::from_positions(n, &pnodes);

    if cfg.keep_rc_permutation {
        let perm = idx
            .solid_rows()
            .map(|v| {
                let w = idx.rc_node_search(v);
                (idx.solid.rank1(w) - 1) as u32
            })
            .collect();
        idx.rc_perm = Some(perm);
    }
    info!(
        "built index: n = {}, e = {}, solid = {}, tree nodes = {}",
        idx.n,
        idx.e(),
        idx.solid.count_ones(),
        idx.tree.node_count()
    );
    Ok(idx)
}
