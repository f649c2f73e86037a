//! Named, interchangeable algorithm variants.
//!
//! Several operations have two implementations: a fast one and a
//! reference one kept for cross-checking and benchmarks. Each family has a
//! trait, and a [`Registry`] maps names to constructors so callers (the
//! CLI, the benches, the tests) can choose at run time.

use crate::error::{Error, Result};
use crate::index::RBossIndex;

type Constructor<T> = fn() -> Box<T>;

pub struct Registry<T: ?Sized> {
    family: &'static str,
    entries: Vec<(&'static str, Constructor<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(family: &'static str) -> Self {
        Self { family, entries: Vec::new() }
    }

    pub fn register(&mut self, name: &'static str, make: Constructor<T>) -> &mut Self {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, make));
        self
    }

    pub fn get(&self, name: &str) -> Result<Box<T>> {
        self.entries.iter().find(|(n, _)| *n == name).map(|(_, make)| make()).ok_or_else(|| {
            Error::Config(format!("unknown {} strategy {name:?}; known: {}", self.family, self.names().join(", ")))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }
}

pub trait NextContained: Send + Sync {
    fn name(&self) -> &'static str;
    fn next_contained(&self, idx: &RBossIndex, row: usize) -> Option<usize>;

    fn build_l(&self, idx: &RBossIndex, row: usize) -> Vec<usize> {
        std::iter::successors(self.next_contained(idx, row), |&c| self.next_contained(idx, c)).collect()
    }
}

/// Constant-time parent/first-child navigation on the overlap tree.
pub struct TreeNextContained;

/// One order at a time over the LCS array. Needs an index built with it.
pub struct LcsNextContained;

impl NextContained for TreeNextContained {
    fn name(&self) -> &'static str {
        "tree"
    }

    fn next_contained(&self, idx: &RBossIndex, row: usize) -> Option<usize> {
        idx.nextcontained(row)
    }
}

impl NextContained for LcsNextContained {
    fn name(&self) -> &'static str {
        "lcs"
    }

    fn next_contained(&self, idx: &RBossIndex, row: usize) -> Option<usize> {
        idx.nextcontained_lcs(row)
    }
}

pub fn nextcontained_registry() -> Registry<dyn NextContained> {
    let mut r: Registry<dyn NextContained> = Registry::new("nextcontained");
    r.register("tree", || Box::new(TreeNextContained)).register("lcs", || Box::new(LcsNextContained));
    r
}

pub trait RcMapper: Send + Sync {
    fn name(&self) -> &'static str;
    fn rc(&self, idx: &RBossIndex, row: usize) -> usize;
}

/// Label extraction plus backward search of the reverse complement.
pub struct SearchRc;

/// Table lookup; falls back to search when the table was not kept.
pub struct PermutationRc;

impl RcMapper for SearchRc {
    fn name(&self) -> &'static str {
        "search"
    }

    fn rc(&self, idx: &RBossIndex, row: usize) -> usize {
        idx.rc_node_search(row)
    }
}

impl RcMapper for PermutationRc {
    fn name(&self) -> &'static str {
        "permutation"
    }

    fn rc(&self, idx: &RBossIndex, row: usize) -> usize {
        idx.rc_node(row)
    }
}

pub fn rc_registry() -> Registry<dyn RcMapper> {
    let mut r: Registry<dyn RcMapper> = Registry::new("rc");
    r.register("search", || Box::new(SearchRc)).register("permutation", || Box::new(PermutationRc));
    r
}
