//! Symmetric polynomials in finitely many variables, centred on skew Schur
//! polynomials.

mod poly;
mod rogers_szego;
mod schur;

pub use poly::{bigint_json, complete, elementary, Coefficient, Poly, QSymPoly, SymPoly};
pub use rogers_szego::{rogers_szego, rs_generating_check, rs_generating_sides};
pub use schur::{
    for_each_semistandard, littlewood_richardson, schur_skew, semistandard_tableaux,
    sl2_strip_product, stabilization_check, SchurMethod, Tableau,
};
