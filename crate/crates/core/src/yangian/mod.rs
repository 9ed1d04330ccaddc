//! Yangian multiplets inside level-1 modules. Each multiplet is labelled by
//! a border strip and carries Drinfel'd polynomials; Gel'fand-Zetlin schemes
//! index its basis.

mod decomposition;
mod drinfeld;
mod gz;

pub use decomposition::{
    hw_module_table, sl2_yangian_decomposition, strip_size_bound, yangian_decomposition, HwModule,
};
pub use drinfeld::{drinfeld_evaluation, drinfeld_tame, DrinfeldPolys};
pub use gz::{gz_schemes, gz_to_sst, gz_weight, sst_to_gz, GZScheme};
