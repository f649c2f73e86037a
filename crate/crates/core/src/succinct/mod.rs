//! Static compressed structures: bit vectors, symbol sequences and
//! balanced-parentheses trees.

mod bitvec;
mod bp;
pub(crate) mod io;
mod minmax;
mod sparse;
mod wavelet;

pub use bitvec::{BitVector, RankSelect};
pub use bp::BpTree;
pub use minmax::MinTree;
pub use sparse::SparseBitVector;
pub use wavelet::SymbolSequence;
