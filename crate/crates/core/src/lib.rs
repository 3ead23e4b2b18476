//! Numerical semigroups and their ordinarization invariants.
//!
//! - [`semigroup`]: the semigroup type with gaps, generators, Apéry sets, factorizations.
//! - [`ordinarization`]: the ordinarization transform and tree, genus enumeration, `n_{g,r}`.
//! - [`lattice`]: integer points in simplices and inequality systems, quasipolynomials.
//! - [`families`]: closed forms for `n_{g,1}`, `n_{g,2}`, two-generator, supersymmetric and
//!   interval-generated semigroups.

pub mod error;
pub mod families;
pub mod genus_tree;
pub mod lattice;
pub mod ordinarization;
pub mod semigroup;

pub use error::{Error, Result};
pub use genus_tree::{Census, EnumOptions, DEFAULT_NODE_CAP, MAX_COMPACT_GENUS};
pub use ordinarization::{
    build_ordinarization_tree, census, children_h0_count, children_in_tree, enumerate_genus,
    effectivity_histogram, n_g_r_brute, n_g_r_tuples, ordinarization_number,
    ordinarization_transform, tk_family, OrdinarizationTree, MAX_TUPLE_GENUS,
};
pub use semigroup::{AperyData, FactorizationVector, GeneratorData, NumericalSemigroup};
pub use families::{
    barlow_popoviciu, dim3_ratio, fit_q_a, interval_r, interval_spec, n_g_1_formula,
    n_g_2_formula, r_two_gen, r_two_gen_bounds, supersym_factor_count, supersym_r, supersym_spec,
    IntervalSpec, SupersymmetricSpec,
};
pub use lattice::{
    count_right_simplex, count_system, fit_quasipolynomial, LinearSystem, QuasiPolynomial,
    Rational, RightSimplex,
};
