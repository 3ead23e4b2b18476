//! Closed forms for ordinarization counts and numbers on specific families.

mod counts;
mod interval;
mod supersym;
mod two_gen;

pub use counts::{
    n_g_1_formula, n_g_1_quasipolynomial, n_g_2_formula, n_g_2_quartic, n_g_2_quasipolynomial,
    n_g_2_table_mismatches,
};
pub use interval::{interval_r, interval_spec, IntervalSpec};
pub use supersym::{
    dim3_ratio, for_each_normal_factorization, supersym_factor_count, supersym_r, supersym_spec,
    SupersymmetricSpec,
};
pub use two_gen::{
    approx, barlow_popoviciu, fit_q_a, mod_inverse, known_q_a, q_a_period, r_two_gen, r_two_gen_bounds,
    two_gen_genus,
};
