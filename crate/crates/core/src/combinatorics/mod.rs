//! Partitions and skew diagrams, plus border strips with their energy and
//! their alternative encodings.

mod modes;
mod motif;
mod partition;
mod rapidity;
pub mod rapidity_energy;
mod skew;
mod strip;

pub use modes::{modes_to_strip, sl2_partition_to_strip};
pub use motif::Motif;
pub use partition::Partition;
pub use rapidity::RapiditySeq;
pub use skew::SkewShape;
pub use strip::{enumerate_border_strips, BorderStrip};
