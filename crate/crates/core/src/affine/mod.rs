//! Level-1 affine `sl_n` characters.
//!
//! Every character is a [`CharacterTable`] keyed by weights in
//! fundamental-weight coordinates, with `q^{Delta_k}` factored out so the
//! stored degrees are integers.

mod bosonic;
mod sl2;
mod spinon_cut;
mod table;
mod weight;

pub use bosonic::{bosonic_character, string_function_closed};
pub use sl2::{
    for_each_spinon_state, sl2_fermionic_character, sl2_spinon_enumeration, FermionicForm,
    SpinonState,
};
pub use spinon_cut::{
    small_norm_weights, spinon_number_bound, spinon_occupations, spinon_string_function,
    verify_spinon_cut, CutForm, CutStatus, CutVerification, SpinonCut,
};
pub use table::{CharacterTable, Discrepancy};
pub use weight::{conformal_dimension, weight_norm, WeightFW};
