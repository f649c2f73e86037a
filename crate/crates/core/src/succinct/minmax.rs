//! Range-minimum tree answering "nearest index to the left/right whose value
//! is at most t". Used for excess searches in the parentheses tree and for
//! order changes over the LCS array.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinTree {
    size: usize,
    len: usize,
    tree: Vec<i32>,
}

impl MinTree {
    pub fn new(values: &[i32]) -> Self {
        let len = values.len();
        let size = len.next_power_of_two().max(1);
        let mut tree = vec![i32::MAX; 2 * size];
        tree[size..size + len].copy_from_slice(values);
        for i in (1..size).rev() {
            tree[i] = tree[2 * i].min(tree[2 * i + 1]);
        }
        Self { size, len, tree }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self, i: usize) -> i32 {
        self.tree[self.size + i]
    }

    /// Largest `j < i` with `value(j) <= t`.
    pub fn prev_le(&self, i: usize, t: i32) -> Option<usize> {
        if i == 0 {
            return None;
        }
        self.rightmost(1, 0, self.size, i.min(self.len), t)
    }

    /// Smallest `j > i` with `value(j) <= t`.
    pub fn next_le(&self, i: usize, t: i32) -> Option<usize> {
        if i + 1 >= self.len {
            return None;
        }
        self.leftmost(1, 0, self.size, i + 1, t)
    }

    /// Minimum over `[lo, hi)`.
    pub fn range_min(&self, lo: usize, hi: usize) -> i32 {
        let (mut l, mut r) = (lo + self.size, hi + self.size);
        let mut m = i32::MAX;
        while l < r {
            if l & 1 == 1 {
                m = m.min(self.tree[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                m = m.min(self.tree[r]);
            }
            l >>= 1;
            r >>= 1;
        }
        m
    }

    // rightmost index in [nlo, min(nhi, end)) with value <= t
    fn rightmost(&self, node: usize, nlo: usize, nhi: usize, end: usize, t: i32) -> Option<usize> {
        if nlo >= end || self.tree[node] > t {
            return None;
        }
        if nhi - nlo == 1 {
            return Some(nlo);
        }
        let mid = (nlo + nhi) / 2;
        self.rightmost(2 * node + 1, mid, nhi, end, t)
            .or_else(|| self.rightmost(2 * node, nlo, mid, end, t))
    }

    // leftmost index in [max(nlo, start), nhi) with value <= t
    fn leftmost(&self, node: usize, nlo: usize, nhi: usize, start: usize, t: i32) -> Option<usize> {
        if nhi <= start || self.tree[node] > t {
            return None;
        }
        if nhi - nlo == 1 {
            return (nlo < self.len).then_some(nlo);
        }
        let mid = (nlo + nhi) / 2;
        self.leftmost(2 * node, nlo, mid, start, t)
            .or_else(|| self.leftmost(2 * node + 1, mid, nhi, start, t))
    }

    pub fn size_in_bits(&self) -> usize {
        self.tree.len() * 32
    }
}
