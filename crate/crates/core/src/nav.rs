//! BOSS navigation: degrees, forward moves, labels and backward search.
//!
//! Edge codes in E: 1 is `$`, 2..=5 are the bases a c g t when the edge is
//! the first with that symbol among rows sharing the last k-2 label
//! symbols, and 6..=9 mark the repeated (non-fresh) copies.

use serde::Serialize;

use crate::alphabet::{self, complement, FLAG_OFFSET, RANK_SEP, SEP};
use crate::error::{Error, Result};
use crate::index::{RBossIndex, VoNode};
use crate::succinct::RankSelect;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NodeClass {
    pub solid: bool,
    pub linker: bool,
    pub p_node: bool,
    pub s_node: bool,
}

#[inline]
fn base_of_code(code: u8) -> u8 {
    if code == RANK_SEP {
        SEP
    } else if code > 1 + FLAG_OFFSET {
        alphabet::symbol(code - FLAG_OFFSET)
    } else {
        alphabet::symbol(code)
    }
}

impl RBossIndex {
    /// First edge position of `row`'s group in E.
    #[inline]
    pub(crate) fn edge_start(&self, row: usize) -> usize {
        if row == 1 {
            1
        } else {
            self.b.select1(row - 1).expect("row in range") + 1
        }
    }

    #[inline]
    pub(crate) fn edge_end(&self, row: usize) -> usize {
        self.b.select1(row).expect("row in range")
    }

    #[inline]
    pub(crate) fn row_of_edge(&self, p: usize) -> usize {
        self.b.rank1(p - 1) + 1
    }

    /// First position in `start..=end` holding an edge labeled `a`.
    pub(crate) fn first_edge_in(&self, a: u8, start: usize, end: usize) -> Option<usize> {
        let Some(x) = alphabet::rank(a) else { return None };
        let codes: &[u8] = if x == RANK_SEP { &[RANK_SEP] } else { &[x, x + FLAG_OFFSET] };
        codes
            .iter()
            .filter_map(|&code| {
                let j = self.edges.rank(code, start - 1) + 1;
                self.edges.select(code, j).filter(|&p| p <= end)
            })
            .min()
    }

    /// Outgoing symbols of `row` in rank order; `$` comes first when present.
    pub fn out_symbols(&self, row: usize) -> Vec<u8> {
        (self.edge_start(row)..=self.edge_end(row)).map(|p| base_of_code(self.edges.access(p))).collect()
    }

    /// Raw outdegree, counting a `$` edge.
    pub fn outdegree(&self, row: usize) -> usize {
        self.edge_end(row) + 1 - self.edge_start(row)
    }

    pub fn has_terminal_edge(&self, row: usize) -> bool {
        self.edges.access(self.edge_start(row)) == RANK_SEP
    }

    /// Outdegree over DNA edges only.
    pub fn traversable_outdegree(&self, row: usize) -> usize {
        self.outdegree(row) - self.has_terminal_edge(row) as usize
    }

    /// Follows the edge labeled `a`; `Ok(None)` if `row` has no such edge.
    pub fn forward(&self, row: usize, a: u8) -> Result<Option<usize>> {
        if a == SEP {
            return Err(Error::TerminalEdge);
        }
        if !alphabet::is_base(a) {
            return Err(Error::Input(format!("{:?} is not a nucleotide", a as char)));
        }
        Ok(self.forward_unchecked(row, a))
    }

    #[inline]
    pub(crate) fn forward_unchecked(&self, row: usize, a: u8) -> Option<usize> {
        let x = alphabet::rank(a)?;
        let p = self.first_edge_in(a, self.edge_start(row), self.edge_end(row))?;
        Some(self.c[x as usize] + self.off[x as usize] as usize + self.edges.rank(x, p))
    }

    /// Rank of the last label symbol of `row`.
    #[inline]
    fn last_rank(&self, row: usize) -> usize {
        (2..=5).find(|&x| row <= self.c[x + 1]).expect("row in range")
    }

    /// The row with an edge into `row`, and whether one exists. Returns
    /// `None` for rows `$...$x`.
    fn source(&self, row: usize, x: usize) -> Option<usize> {
        let idx = row - self.c[x] - self.off[x] as usize;
        if idx == 0 {
            return None;
        }
        let p = self.edges.select(x as u8, idx).expect("fresh edge for every sourced row");
        Some(self.row_of_edge(p))
    }

    /// The (k-1)-symbol label, left-padded with `$`.
    pub fn label(&self, row: usize) -> Vec<u8> {
        let len = self.k - 1;
        let mut out = vec![SEP; len];
        let mut cur = row;
        for pos in (0..len).rev() {
            let x = self.last_rank(cur);
            out[pos] = alphabet::symbol(x as u8);
            match self.source(cur, x) {
                Some(s) => cur = s,
                None => break,
            }
        }
        out
    }

    /// Label without its `$` padding.
    pub fn llabel(&self, row: usize) -> Vec<u8> {
        self.label(row).into_iter().filter(|&c| c != SEP).collect()
    }

    pub fn llabel_len(&self, row: usize) -> usize {
        if self.is_solid(row) {
            return self.k - 1;
        }
        let mut cur = row;
        let mut len = 0;
        loop {
            len += 1;
            let x = self.last_rank(cur);
            match self.source(cur, x) {
                Some(s) => cur = s,
                None => return len,
            }
        }
    }

    pub fn empty_node(order: usize) -> VoNode {
        VoNode { lo: 1, hi: 0, order }
    }

    /// Rows whose labels end with `q`. An empty range is a normal outcome.
    pub fn backwardsearch(&self, q: &[u8]) -> VoNode {
        if q.len() > self.k - 1 {
            return Self::empty_node(q.len());
        }
        let mut v = VoNode { lo: 1, hi: self.n, order: 0 };
        for &ch in q {
            v = self.extend_right(v, ch);
            if v.is_empty() {
                return Self::empty_node(q.len());
            }
        }
        v
    }

    /// Rows whose labels end with the suffix of `v` followed by `ch`.
    pub fn extend_right(&self, v: VoNode, ch: u8) -> VoNode {
        let order = v.order + 1;
        let Some(x) = alphabet::rank(ch).filter(|&x| x != RANK_SEP).map(|x| x as usize) else {
            return Self::empty_node(order);
        };
        if v.is_empty() || order > self.k - 1 {
            return Self::empty_node(order);
        }
        if v.order == 0 {
            return VoNode { lo: self.c[x] + 1, hi: self.c[x + 1], order };
        }
        let before = self.edges.rank(x as u8, self.edge_start(v.lo) - 1);
        let upto = self.edges.rank(x as u8, self.edge_end(v.hi));
        let base = self.c[x] + self.off[x] as usize;
        VoNode { lo: base + before + 1, hi: base + upto, order }
    }

    pub fn is_s_node(&self, row: usize) -> bool {
        self.is_solid(row) && self.has_terminal_edge(row)
    }

    pub fn classify(&self, row: usize) -> NodeClass {
        let solid = self.is_solid(row);
        NodeClass { solid, linker: !solid, p_node: self.is_p_node(row), s_node: self.is_s_node(row) }
    }

    /// Symbols on edges entering `row`, read directly from E: the first
    /// label symbol of every source row. `$` stands for a linker source.
    pub fn in_symbols_scan(&self, row: usize) -> Vec<u8> {
        let x = self.last_rank(row);
        let idx = row - self.c[x] - self.off[x] as usize;
        if idx == 0 {
            return Vec::new();
        }
        let p = self.edges.select(x as u8, idx).expect("sourced row");
        // repeats of this edge run up to the next fresh copy
        let next = self.edges.select(x as u8, idx + 1).unwrap_or(self.e() + 1);
        let flagged = x as u8 + FLAG_OFFSET;
        let lo = self.edges.rank(flagged, p);
        let hi = self.edges.rank(flagged, next - 1);
        let mut sources = vec![self.row_of_edge(p)];
        for j in lo + 1..=hi {
            sources.push(self.row_of_edge(self.edges.select(flagged, j).unwrap()));
        }
        let mut syms: Vec<u8> = sources.into_iter().map(|s| self.label(s)[0]).collect();
        syms.sort_unstable();
        syms
    }

    /// In-symbols of a solid row via its reverse complement: the
    /// complements of the reverse complement's out-symbols.
    pub fn in_symbols(&self, row: usize) -> Vec<u8> {
        let rc = self.rc_node(row);
        let mut syms: Vec<u8> = self.out_symbols(rc).into_iter().map(complement).collect();
        syms.sort_unstable();
        syms
    }

    /// Number of DNA edges entering a row.
    pub fn indegree(&self, row: usize) -> usize {
        if self.is_solid(row) {
            self.traversable_outdegree(self.rc_node(row))
        } else {
            // a linker's only possible source is the next-shorter linker
            let x = self.last_rank(row);
            self.source(row, x).is_some() as usize
        }
    }

    /// Solid rows with a DNA edge into a solid `row`.
    pub fn backward(&self, row: usize) -> Vec<usize> {
        let rc = self.rc_node(row);
        let mut out: Vec<usize> = self
            .out_symbols(rc)
            .into_iter()
            .filter(|&a| a != SEP)
            .filter_map(|a| self.forward_unchecked(rc, a))
            .map(|w| self.rc_node(w))
            .collect();
        out.sort_unstable();
        out
    }
}
