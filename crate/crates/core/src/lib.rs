//! Exact level-1 affine `sl_n` characters, computed independently from
//! lattice sums, spinon sums and border-strip Yangian decompositions so that
//! the results can be compared coefficient by coefficient.

pub mod affine;
pub mod combinatorics;
pub mod error;
pub mod qseries;
pub mod symfunc;
pub mod verify;
pub mod yangian;

pub use error::{Error, Result};
