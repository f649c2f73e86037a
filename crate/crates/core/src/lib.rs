//! Succinct read-overlap index over every de Bruijn graph of a read set up
//! to order k, with on-the-fly suffix-prefix overlaps and an assembler.
//!
//! Rows of the conceptual matrix M, positions in bit vectors and ordinals are
//! all 1-based.

pub mod alphabet;
pub mod assembler;
pub mod bench;
pub mod construction;
pub mod error;
pub mod index;
pub mod nav;
pub mod overlap;
pub mod sim;
pub mod stats;
pub mod strategy;
pub mod succinct;
pub mod vo;

pub use construction::{build_index, ingest_reads, BuildConfig, ReadSet};
pub use error::{Error, Result};
pub use index::{RBossIndex, VoNode};
pub use overlap::{Overlap, WeightedOverlap};
