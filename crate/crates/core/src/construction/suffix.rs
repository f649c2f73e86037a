//! Concatenated text and its suffix array, BWT and LCP.
//!
//! The text is `$R1$R1rc$R2$R2rc...$Rr$Rrrc#`, reversed before sorting so
//! that suffixes of the reversed text sort the (k-1)-mers of the original
//! text by their reversed reading. Byte order `'#' < '$' < a < c < g < t`
//! matches the rank order, so the ASCII text is sorted directly.

use suffix::SuffixTable;

use crate::alphabet::{rank, SEP, TERM};
use crate::construction::reads::ReadSet;
use crate::succinct::{BitVector, RankSelect, SymbolSequence};

/// Rank of the terminator inside the construction BWT.
pub const RANK_TERM: u8 = 6;

pub struct SuffixStructures {
    text: Vec<u8>,
    sa: Vec<u32>,
    lcp: Vec<u32>,
    bwt: SymbolSequence,
    d: BitVector,
}

/// Reversed concatenation of `R*` with a `$` before every member and a
/// closing `#`.
pub fn build_concat(rs: &ReadSet) -> Vec<u8> {
    let mut text = Vec::with_capacity(2 * rs.len() * (rs.read_len() + 1) + 1);
    for member in rs.members() {
        text.push(SEP);
        text.extend_from_slice(&member);
    }
    text.push(TERM);
    text.reverse();
    text
}

impl SuffixStructures {
    pub fn new(text: Vec<u8>) -> Self {
        let sa = {
            let s = std::str::from_utf8(&text).expect("ascii text");
            let (_, table) = SuffixTable::new(s).into_parts();
            table.into_owned()
        };
        let lcp = kasai(&text, &sa);
        let n = text.len();
        let bwt: Vec<u8> = sa
            .iter()
            .map(|&p| {
                let c = if p == 0 { text[n - 1] } else { text[p as usize - 1] };
                bwt_rank(c)
            })
            .collect();
        let bwt = SymbolSequence::new(&bwt, 3);
        let d = BitVector::from_bits(text.iter().map(|&c| c == SEP || c == TERM));
        Self { text, sa, lcp, bwt, d }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    /// Text position (1-based) of the i-th smallest suffix.
    pub fn sa(&self, i: usize) -> usize {
        self.sa[i - 1] as usize + 1
    }

    /// LCP of the suffixes of rank i-1 and i; `lcp(1) = 0`.
    pub fn lcp(&self, i: usize) -> usize {
        self.lcp[i - 1] as usize
    }

    pub fn bwt(&self) -> &SymbolSequence {
        &self.bwt
    }

    pub fn separators(&self) -> &BitVector {
        &self.d
    }

    /// Distance from text position `p` to the first separator at or after it.
    pub fn dist_to_separator(&self, p: usize) -> usize {
        let next = self.d.rank1(p - 1) + 1;
        // the reversed text always ends with '$'
        self.d.select1(next).expect("text ends with a separator") - p
    }

    /// LCP with label padding simulated: suffixes whose separator comes
    /// before offset k-1 and inside the common prefix share the padded
    /// label, so their LCP is raised to k-1.
    pub fn pad_lcp(&self, k: usize) -> Vec<u32> {
        (1..=self.len())
            .map(|i| {
                let l = self.lcp(i);
                let d = self.dist_to_separator(self.sa(i));
                if d < k - 1 && d < l {
                    (k - 1) as u32
                } else {
                    l as u32
                }
            })
            .collect()
    }
}

fn bwt_rank(c: u8) -> u8 {
    if c == TERM {
        RANK_TERM
    } else {
        rank(c).expect("text over the DNA alphabet")
    }
}

// Kasai et al. linear-time LCP.
fn kasai(text: &[u8], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut inv = vec![0u32; n];
    for (i, &p) in sa.iter().enumerate() {
        inv[p as usize] = i as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for p in 0..n {
        let r = inv[p] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
