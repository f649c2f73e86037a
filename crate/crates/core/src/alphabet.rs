//! DNA alphabet ranks and reverse complements.
//!
//! Rank 1 is the separator `$`, ranks 2..=5 are `a c g t`. Edge symbols in
//! the BOSS sequence add a "non-fresh" copy of each base at ranks 6..=9.

pub const SEP: u8 = b'$';
pub const TERM: u8 = b'#';
pub const BASES: [u8; 4] = *b"acgt";

pub const RANK_SEP: u8 = 1;
/// Offset between a base's fresh edge code and its non-fresh copy.
pub const FLAG_OFFSET: u8 = 4;
pub const EDGE_CODE_BITS: u32 = 4;

#[inline]
pub fn rank(c: u8) -> Option<u8> {
    match c {
        b'$' => Some(1),
        b'a' => Some(2),
        b'c' => Some(3),
        b'g' => Some(4),
        b't' => Some(5),
        _ => None,
    }
}

#[inline]
pub fn symbol(rank: u8) -> u8 {
    match rank {
        1 => b'$',
        2 => b'a',
        3 => b'c',
        4 => b'g',
        5 => b't',
        _ => panic!("no symbol with rank {rank}"),
    }
}

#[inline]
pub fn is_base(c: u8) -> bool {
    matches!(c, b'a' | b'c' | b'g' | b't')
}

/// Lower-cases a nucleotide; anything outside `acgtACGT` yields `None`.
#[inline]
pub fn normalize(c: u8) -> Option<u8> {
    let c = c.to_ascii_lowercase();
    is_base(c).then_some(c)
}

#[inline]
pub fn complement(c: u8) -> u8 {
    match c {
        b'a' => b't',
        b'c' => b'g',
        b'g' => b'c',
        b't' => b'a',
        other => other,
    }
}

pub fn reverse_complement(s: &[u8]) -> Vec<u8> {
    s.iter().rev().map(|&c| complement(c)).collect()
}

pub fn reverse_complement_str(s: &str) -> String {
    String::from_utf8(reverse_complement(s.as_bytes())).expect("ascii input")
}

/// Smaller of a sequence and its reverse complement.
pub fn canonical(s: &[u8]) -> Vec<u8> {
    let rc = reverse_complement(s);
    if rc.as_slice() < s {
        rc
    } else {
        s.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(reverse_complement_str("atttggagta"), "tactccaaat");
        assert_eq!(reverse_complement_str("caatactcca"), "tggagtattg");
        assert_eq!(canonical(b"tt"), b"aa".to_vec());
        for r in 1..=5 {
            assert_eq!(rank(symbol(r)), Some(r));
        }
        assert_eq!(normalize(b'G'), Some(b'g'));
        assert_eq!(normalize(b'N'), None);
    }

    proptest! {
        #[test]
        fn rc_is_involution(s in "[acgt]{0,80}") {
            prop_assert_eq!(reverse_complement_str(&reverse_complement_str(&s)), s);
        }
    }
}
