use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Polynomial in `t` whose coefficients depend on `t mod period`.
///
/// `rows[ρ][j]` is the coefficient of `t^j` on the class `t ≡ ρ`. A `None` row marks a
/// residue class on which the function is not defined (e.g. `b` sharing a factor with `a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    degree: usize,
    period: u64,
    rows: Vec<Option<Vec<Rational>>>,
}

impl QuasiPolynomial {
    pub fn new(period: u64, rows: Vec<Option<Vec<Rational>>>) -> Result<Self> {
        if period == 0 || rows.len() as u64 != period {
            return Err(Error::InvalidArgument(format!(
                "need {period} residue rows, got {}",
                rows.len()
            )));
        }
        let mut rows = rows;
        let mut degree = 0;
        for row in rows.iter_mut().flatten() {
            while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
            if row.is_empty() {
                row.push(Rational::zero());
            }
            degree = degree.max(row.len() - 1);
        }
        for row in rows.iter_mut().flatten() {
            row.resize(degree + 1, Rational::zero());
        }
        Ok(QuasiPolynomial { degree, period, rows })
    }

    /// One polynomial on every residue class.
    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        Self::new(1, vec![Some(coeffs)]).expect("single row")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn row(&self, residue: u64) -> Option<&[Rational]> {
        self.rows[residue as usize].as_deref()
    }

    pub fn rows(&self) -> &[Option<Vec<Rational>>] {
        &self.rows
    }

    pub fn residue(&self, t: i64) -> u64 {
        t.rem_euclid(self.period as i64) as u64
    }

    pub fn eval(&self, t: i64) -> Result<Rational> {
        let rho = self.residue(t);
        let row = self.row(rho).ok_or(Error::InapplicableResidue(rho))?;
        Ok(horner(row, &int(t)))
    }

    /// Evaluates a counting function, insisting on a nonnegative integer.
    pub fn eval_count(&self, t: i64) -> Result<u64> {
        let v = self.eval(t)?;
        to_count(&v)
    }
}

/// Product of two polynomials in ascending coefficient order.
pub fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

pub(crate) fn horner(coeffs: &[Rational], t: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

pub(crate) fn to_count(v: &Rational) -> Result<u64> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::IntegralityViolation(v.to_string()));
    }
    v.to_integer().to_u64().ok_or_else(|| Error::IntegralityViolation(v.to_string()))
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (rho, row) in self.rows.iter().enumerate() {
            write!(f, "t ≡ {rho} (mod {}): ", self.period)?;
            match row {
                None => writeln!(f, "n/a")?,
                Some(row) => writeln!(f, "{}", format_poly(row))?,
            }
        }
        Ok(())
    }
}

/// `c_d t^d + ... + c_0`, highest power first, exact rationals.
pub fn format_poly(coeffs: &[Rational]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| match j {
            0 => format!("{c}"),
            1 if c.is_one() => "t".to_string(),
            1 => format!("{c} t"),
            _ if c.is_one() => format!("t^{j}"),
            _ => format!("{c} t^{j}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// Result of fitting: the quasipolynomial plus how far back the samples agree with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiFit {
    pub quasi: QuasiPolynomial,
    /// Smallest sample argument from which every sample agrees.
    pub valid_from: i64,
    /// Largest sample argument that disagrees, if any.
    pub last_mismatch: Option<i64>,
}

/// Fits a degree-`degree`, period-`period` quasipolynomial through `samples`, requiring
/// exact agreement on every sample.
pub fn fit_quasipolynomial(samples: &[(i64, i64)], degree: usize, period: u64) -> Result<QuasiPolynomial> {
    let fit = fit_impl(samples, degree, period, false)?;
    if let Some(t) = fit.last_mismatch {
        let expected = samples.iter().find(|s| s.0 == t).expect("sample").1;
        return Err(Error::InconsistentSamples {
            t,
            expected: expected.to_string(),
            got: fit.quasi.eval(t)?.to_string(),
        });
    }
    Ok(fit.quasi)
}

/// Like [`fit_quasipolynomial`] but residue classes without samples become `None` rows.
pub fn fit_partial_quasipolynomial(
    samples: &[(i64, i64)],
    degree: usize,
    period: u64,
) -> Result<QuasiPolynomial> {
    let fit = fit_impl(samples, degree, period, true)?;
    if let Some(t) = fit.last_mismatch {
        let expected = samples.iter().find(|s| s.0 == t).expect("sample").1;
        return Err(Error::InconsistentSamples {
            t,
            expected: expected.to_string(),
            got: fit.quasi.eval(t)?.to_string(),
        });
    }
    Ok(fit.quasi)
}

/// Fits through the largest arguments of each residue class and reports the window on
/// which the remaining samples agree, for functions that are only eventually quasipolynomial.
pub fn fit_eventual(samples: &[(i64, i64)], degree: usize, period: u64) -> Result<QuasiFit> {
    fit_impl(samples, degree, period, false)
}

fn fit_impl(samples: &[(i64, i64)], degree: usize, period: u64, allow_empty: bool) -> Result<QuasiFit> {
    if period == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    let mut classes: Vec<Vec<(i64, i64)>> = vec![Vec::new(); period as usize];
    for &(t, v) in samples {
        classes[t.rem_euclid(period as i64) as usize].push((t, v));
    }
    let needed = degree + 2;
    let mut rows = Vec::with_capacity(period as usize);
    for (rho, class) in classes.iter_mut().enumerate() {
        if class.is_empty() && allow_empty {
            rows.push(None);
            continue;
        }
        if class.len() < needed {
            return Err(Error::InsufficientSamples { residue: rho as u64, found: class.len(), needed });
        }
        class.sort_unstable();
        let nodes: Vec<(Rational, Rational)> = class[class.len() - degree - 1..]
            .iter()
            .map(|&(t, v)| (int(t), int(v)))
            .collect();
        rows.push(Some(interpolate(&nodes)));
    }
    let quasi = QuasiPolynomial::new(period, rows)?;
    let mut last_mismatch = None;
    for &(t, v) in samples {
        if quasi.eval(t)? != int(v) && last_mismatch.is_none_or(|m| t > m) {
            last_mismatch = Some(t);
        }
    }
    let valid_from = match last_mismatch {
        None => samples.iter().map(|s| s.0).min().unwrap_or(0),
        Some(m) => samples.iter().map(|s| s.0).filter(|&t| t > m).min().unwrap_or(m + 1),
    };
    Ok(QuasiFit { quasi, valid_from, last_mismatch })
}

/// Monomial coefficients (ascending) of the polynomial through `nodes`, via Newton's
/// divided differences.
pub fn interpolate(nodes: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = nodes.len();
    let xs: Vec<&Rational> = nodes.iter().map(|p| &p.0).collect();
    let mut dd: Vec<Rational> = nodes.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form: p = dd[n-1]; p = p * (t - x_i) + dd[i]
    let mut poly = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![Rational::zero(); n];
        for j in 0..n {
            if poly[j].is_zero() {
                continue;
            }
            next[j] -= &poly[j] * xs[i];
            if j + 1 < n {
                next[j + 1] += &poly[j];
            }
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ng1(g: i64) -> i64 {
        if g % 2 == 0 {
            (3 * g * g - 2 * g) / 8
        } else {
            (3 * g * g - 3) / 8
        }
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = [int(2), rat(-1, 3), int(0), rat(5, 7)];
        let nodes: Vec<_> = (0..4).map(|t| (int(t), horner(&p, &int(t)))).collect();
        assert_eq!(interpolate(&nodes), p.to_vec());
    }

    #[test]
    fn fit_ng1() {
        let samples: Vec<(i64, i64)> = (1..=10).map(|g| (g, ng1(g))).collect();
        let q = fit_quasipolynomial(&samples, 2, 2).unwrap();
        assert_eq!(q.row(0).unwrap(), &[int(0), rat(-1, 4), rat(3, 8)]);
        assert_eq!(q.row(1).unwrap(), &[rat(-3, 8), int(0), rat(3, 8)]);
        assert_eq!(q.eval_count(7).unwrap(), 18);
        for &(t, v) in &samples {
            assert_eq!(q.eval(t).unwrap(), int(v));
        }
    }

    #[test]
    fn fit_constant() {
        let samples: Vec<_> = (0..4).map(|t| (t, 5)).collect();
        let q = fit_quasipolynomial(&samples, 0, 1).unwrap();
        assert_eq!(q.degree(), 0);
        assert_eq!(q.eval(100).unwrap(), int(5));
    }

    #[test]
    fn fit_errors() {
        let samples: Vec<_> = (0..3).map(|t| (t, t * t)).collect();
        assert!(matches!(
            fit_quasipolynomial(&samples, 2, 1),
            Err(Error::InsufficientSamples { residue: 0, found: 3, needed: 4 })
        ));
        let samples: Vec<_> = (0..8).map(|t| (t, t * t * t)).collect();
        assert!(matches!(
            fit_quasipolynomial(&samples, 2, 1),
            Err(Error::InconsistentSamples { .. })
        ));
    }

    #[test]
    fn eventual_window() {
        // t^2 for t >= 3, garbage before
        let samples: Vec<_> = (0..10).map(|t| (t, if t < 3 { 7 } else { t * t })).collect();
        let fit = fit_eventual(&samples, 2, 1).unwrap();
        assert_eq!(fit.last_mismatch, Some(2));
        assert_eq!(fit.valid_from, 3);
        assert_eq!(fit.quasi.row(0).unwrap(), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn integrality_check() {
        let q = QuasiPolynomial::polynomial(vec![int(0), rat(1, 2)]);
        assert_eq!(q.eval_count(4).unwrap(), 2);
        assert!(matches!(q.eval_count(3), Err(Error::IntegralityViolation(_))));
        let neg = QuasiPolynomial::polynomial(vec![int(-1)]);
        assert!(neg.eval_count(0).is_err());
    }

    #[test]
    fn partial_rows() {
        let samples: Vec<_> = (0..20).filter(|t| t % 2 == 1).map(|t| (t, 3 * t)).collect();
        let q = fit_partial_quasipolynomial(&samples, 1, 2).unwrap();
        assert!(q.row(0).is_none());
        assert_eq!(q.eval(0), Err(Error::InapplicableResidue(0)));
        assert_eq!(q.eval(5).unwrap(), int(15));
    }

    #[test]
    fn display_uses_exact_fractions() {
        let q = QuasiPolynomial::polynomial(vec![rat(-1, 3), int(0), rat(3, 8)]);
        assert_eq!(format!("{q}"), "t ≡ 0 (mod 1): 3/8 t^2 - 1/3\n");
    }
}
