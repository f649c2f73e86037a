//! Overlap queries on top of BOSS navigation and the overlap tree.

mod find;
mod rc;
mod tree;
mod weight;

pub use find::Overlap;
pub use weight::{classify_overlaps, WeightedOverlap};
