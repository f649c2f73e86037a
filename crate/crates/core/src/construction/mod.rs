//! From reads to the index: `R*`, suffix structures, rows of M, and the
//! overlap tree.

mod build;
mod reads;
mod suffix;

pub use build::{build_index, build_overlap_tree, build_rows, RowTable};
pub use reads::{ingest_reads, BuildConfig, ReadSet};
pub use suffix::{build_concat, SuffixStructures, RANK_TERM};
