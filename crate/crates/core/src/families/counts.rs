//! Closed forms for the number of genus-`g` semigroups with ordinarization number 1 and 2.

use crate::error::Result;
use crate::lattice::{horner, int, rat, to_count, QuasiPolynomial, Rational};

/// `3g²/8 − g/4` for even `g`, `3g²/8 − 3/8` for odd `g`.
pub fn n_g_1_formula(g: u64) -> u64 {
    if g.is_multiple_of(2) {
        (3 * g * g - 2 * g) / 8
    } else {
        (3 * g * g - 3) / 8
    }
}

pub fn n_g_1_quasipolynomial() -> QuasiPolynomial {
    QuasiPolynomial::new(
        2,
        vec![Some(vec![int(0), rat(-1, 4), rat(3, 8)]), Some(vec![rat(-3, 8), int(0), rat(3, 8)])],
    )
    .expect("two rows")
}

/// Monic quartics `f_ρ`, highest power first, with `n_{g,2} = (11/384)·f_{g mod 12}(g)`.
const QUARTICS: [[(i64, i64); 5]; 12] = [
    [(1, 1), (-2548, 297), (336, 11), (-1376, 33), (0, 1)],
    [(1, 1), (-2224, 297), (1846, 99), (-1384, 99), (541, 297)],
    [(1, 1), (-2548, 297), (3152, 99), (-4816, 99), (6704, 297)],
    [(1, 1), (-2224, 297), (18, 1), (-296, 33), (-153, 11)],
    [(1, 1), (-2548, 297), (3088, 99), (-4192, 99), (-512, 297)],
    [(1, 1), (-2224, 297), (1910, 99), (-1576, 99), (-6499, 297)],
    [(1, 1), (-2548, 297), (336, 11), (-1520, 33), (48, 1)],
    [(1, 1), (-2224, 297), (1846, 99), (-952, 99), (-4643, 297)],
    [(1, 1), (-2548, 297), (3152, 99), (-4384, 99), (-7552, 297)],
    [(1, 1), (-2224, 297), (18, 1), (-40, 3), (39, 11)],
    [(1, 1), (-2548, 297), (3088, 99), (-4624, 99), (13744, 297)],
    [(1, 1), (-2224, 297), (1910, 99), (-104, 9), (-11683, 297)],
];

/// `(residue, root, cubic)`: residues whose quartic is also known as `(x − root)·cubic`,
/// cubic highest power first.
type Factored = (usize, i64, [(i64, i64); 4]);

const FACTORED: [Factored; 5] = [
    (0, 0, [(1, 1), (-2548, 297), (336, 11), (-1376, 33)]),
    (1, 1, [(1, 1), (-1927, 297), (3611, 297), (-541, 297)]),
    (2, 2, [(1, 1), (-1954, 297), (5548, 297), (-3352, 297)]),
    (3, 3, [(1, 1), (-1333, 297), (449, 99), (51, 11)]),
    (11, -1, [(1, 1), (-2521, 297), (8251, 297), (-11683, 297)]),
];

fn ascending(desc: &[(i64, i64)]) -> Vec<Rational> {
    desc.iter().rev().map(|&(n, d)| rat(n, d)).collect()
}

/// The monic quartic for residue `rho`, ascending coefficients.
pub fn n_g_2_quartic(rho: usize) -> Vec<Rational> {
    ascending(&QUARTICS[rho])
}

/// Multiplies the stored factored forms back out and compares them with the quartic table.
/// Returns the residues that disagree.
pub fn n_g_2_table_mismatches() -> Vec<usize> {
    FACTORED
        .iter()
        .filter(|(rho, root, cubic)| {
            let cubic = ascending(cubic);
            // (x − root)·Σ c_j x^j
            let mut prod = vec![Rational::from_integer(0.into()); 5];
            for (j, c) in cubic.iter().enumerate() {
                prod[j + 1] += c;
                prod[j] -= c * int(*root);
            }
            prod != n_g_2_quartic(*rho)
        })
        .map(|(rho, _, _)| *rho)
        .collect()
}

pub fn n_g_2_quasipolynomial() -> QuasiPolynomial {
    let scale = rat(11, 384);
    let rows = (0..12)
        .map(|rho| Some(n_g_2_quartic(rho).into_iter().map(|c| c * &scale).collect()))
        .collect();
    QuasiPolynomial::new(12, rows).expect("twelve rows")
}

/// `(11/384)·f_{g mod 12}(g)`, checked to be a nonnegative integer.
pub fn n_g_2_formula(g: u64) -> Result<u64> {
    let f = horner(&n_g_2_quartic((g % 12) as usize), &int(g as i64));
    to_count(&(f * rat(11, 384)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn ng1_examples() {
        assert_eq!(n_g_1_formula(7), 18);
        assert_eq!(n_g_1_formula(0), 0);
        assert_eq!(n_g_1_formula(4), 5);
        for g in 0..60 {
            assert_eq!(n_g_1_quasipolynomial().eval_count(g as i64).unwrap(), n_g_1_formula(g));
        }
    }

    #[test]
    fn ng2_examples() {
        assert_eq!(n_g_2_formula(7).unwrap(), 19);
        assert_eq!(n_g_2_formula(6).unwrap(), 9);
        assert_eq!(n_g_2_formula(1).unwrap(), 0);
        let small: Vec<u64> = (8..=14).map(|g| n_g_2_formula(g).unwrap()).collect();
        assert_eq!(small, vec![39, 70, 118, 196, 281, 432, 586]);
    }

    #[test]
    fn factored_forms_match_table() {
        assert!(n_g_2_table_mismatches().is_empty());
        for rho in 0..12 {
            assert!(n_g_2_quartic(rho)[4].is_one());
        }
    }

    #[test]
    fn ng2_integral_everywhere() {
        for g in 0..500 {
            n_g_2_formula(g).unwrap();
        }
    }
}
