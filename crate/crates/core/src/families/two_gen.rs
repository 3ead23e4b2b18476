//! Semigroups `⟨a, b⟩` with two coprime generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{fit_partial_quasipolynomial, int, rat, to_count, QuasiPolynomial, Rational};

pub(crate) fn check_pair(a: u64, b: u64) -> Result<()> {
    if !(2 <= a && a < b) {
        return Err(Error::BadOrder(format!("need 2 ≤ a < b, got a = {a}, b = {b}")));
    }
    let d = a.gcd(&b);
    if d != 1 {
        return Err(Error::Gcd { gens: vec![a as usize, b as usize], gcd: d as usize });
    }
    Ok(())
}

/// Genus `(a − 1)(b − 1)/2` of `⟨a, b⟩`.
pub fn two_gen_genus(a: u64, b: u64) -> u64 {
    (a - 1) * (b - 1) / 2
}

/// `⌊g/b⌋ + Σ_{n=0}^{⌊g/b⌋} ⌊(g − nb)/a⌋`.
pub fn r_two_gen(a: u64, b: u64) -> Result<u64> {
    check_pair(a, b)?;
    let g = two_gen_genus(a, b);
    let top = g / b;
    Ok(top + (0..=top).map(|n| (g - n * b) / a).sum::<u64>())
}

/// Interval `[lower, upper]` guaranteed to contain `r(⟨a, b⟩)`.
pub fn r_two_gen_bounds(a: u64, b: u64) -> Result<(Rational, Rational)> {
    check_pair(a, b)?;
    let (ai, bi) = (a as i64, b as i64);
    let base = rat(ai * bi - ai - 4, 8);
    let (center, width) = if a % 2 == 1 {
        (base - rat(bi + 3, 8 * ai), rat(ai, 4) - rat(1, 4 * ai))
    } else {
        (base, rat(ai, 4))
    };
    let upper = &center + width;
    Ok((center, upper))
}

/// Period of `b ↦ r(⟨a, b⟩)`: `a` for odd `a`, `2a` for even `a`.
pub fn q_a_period(a: u64) -> u64 {
    if a.is_multiple_of(2) {
        2 * a
    } else {
        a
    }
}

/// Linear quasipolynomial `Q_a` with `Q_a(b) = r(⟨a, b⟩)`, fitted from coprime `b` in
/// `(a, a + 6·period]`; residues sharing a factor with `a` have no row.
pub fn fit_q_a(a: u64) -> Result<QuasiPolynomial> {
    if a < 2 {
        return Err(Error::BadOrder(format!("need a ≥ 2, got {a}")));
    }
    let p = q_a_period(a);
    let samples = (a + 1..=a + 6 * p)
        .filter(|b| b.gcd(&a) == 1)
        .map(|b| Ok((b as i64, r_two_gen(a, b)? as i64)))
        .collect::<Result<Vec<_>>>()?;
    fit_partial_quasipolynomial(&samples, 1, p)
}

/// `Q_a` as listed for small `a`, rows `c_0 + c_1·b`; `None` for `a` outside `2..=6`.
pub fn known_q_a(a: u64) -> Option<QuasiPolynomial> {
    let lin = |c0: (i64, i64), c1: (i64, i64)| Some(vec![rat(c0.0, c0.1), rat(c1.0, c1.1)]);
    let p = q_a_period(a) as usize;
    let mut rows: Vec<Option<Vec<Rational>>> = vec![None; p];
    match a {
        2 => {
            rows[1] = lin((-1, 4), (1, 4));
            rows[3] = lin((-3, 4), (1, 4));
        }
        3 => {
            rows[1] = lin((-1, 3), (1, 3));
            rows[2] = lin((-2, 3), (1, 3));
        }
        4 => {
            for rho in [1, 3, 5, 7] {
                rows[rho] = lin((-1, 2), (1, 2));
            }
        }
        5 => {
            rows[1] = lin((-3, 5), (3, 5));
            rows[2] = lin((-1, 5), (3, 5));
            rows[3] = lin((-4, 5), (3, 5));
            rows[4] = lin((-2, 5), (3, 5));
        }
        6 => {
            for rho in [1, 5] {
                rows[rho] = lin((-3, 4), (3, 4));
            }
            for rho in [7, 11] {
                rows[rho] = lin((-1, 4), (3, 4));
            }
        }
        _ => return None,
    }
    QuasiPolynomial::new(p as u64, rows).ok()
}

/// Inverse of `x` modulo `m`, in `[0, m)`.
pub fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    let e = (x as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

fn frac(r: Rational) -> Rational {
    let fl = r.floor();
    r - fl
}

/// Number of factorizations of `n` in `⟨a, b⟩`:
/// `n/(ab) − {b⁻¹n/a} − {a⁻¹n/b} + 1`, inverses taken mod `a` and mod `b`.
pub fn barlow_popoviciu(a: u64, b: u64, n: u64) -> Result<u64> {
    check_pair(a, b)?;
    let b_inv = mod_inverse(b, a).expect("coprime");
    let a_inv = mod_inverse(a, b).expect("coprime");
    let big = |x: u64| BigInt::from(x);
    let v = Rational::new(big(n), big(a) * big(b))
        - frac(Rational::new(big(b_inv) * big(n), big(a)))
        - frac(Rational::new(big(a_inv) * big(n), big(b)))
        + int(1);
    to_count(&v)
}

/// Rational to f64, for reporting only.
pub fn approx(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
