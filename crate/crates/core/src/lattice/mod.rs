//! Integer points in right simplices and parametric linear systems, and exact
//! quasipolynomials fitted to counting data.

pub(crate) mod quasi;
mod simplex;
mod system;

pub use quasi::{
    fit_eventual, fit_partial_quasipolynomial, fit_quasipolynomial, format_poly, int, interpolate,
    poly_mul, rat, QuasiFit, QuasiPolynomial, Rational,
};
pub(crate) use quasi::{horner, to_count};
pub use simplex::{count_right_simplex, RightSimplex};
pub use system::{
    count_system, count_system_in_box, ordinarization_one_doubled_system, ordinarization_one_system,
    pstar_quasipolynomial, pstar_system, LinearSystem, Row, RowKind,
};
