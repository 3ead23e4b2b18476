use std::fmt::Write as _;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::quasi::{int, poly_mul, rat, QuasiPolynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowKind {
    /// `coeffs·x + g_coeff·g ≥ constant`
    Ge,
    /// `coeffs·x + g_coeff·g = constant`
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row {
    pub kind: RowKind,
    pub coeffs: Vec<i64>,
    pub g_coeff: i64,
    pub constant: i64,
}

impl Row {
    pub fn ge(coeffs: Vec<i64>, g_coeff: i64, constant: i64) -> Self {
        Row { kind: RowKind::Ge, coeffs, g_coeff, constant }
    }

    pub fn eq(coeffs: Vec<i64>, g_coeff: i64, constant: i64) -> Self {
        Row { kind: RowKind::Eq, coeffs, g_coeff, constant }
    }
}

/// Integer inequality/equality system in `d` variables plus the grading variable `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearSystem {
    dimension: usize,
    rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(dimension: usize, rows: Vec<Row>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.coeffs.len() != dimension) {
            return Err(Error::InvalidArgument(format!(
                "row has {} coefficients, system dimension is {dimension}",
                r.coeffs.len()
            )));
        }
        Ok(LinearSystem { dimension, rows })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Parses the line format `ge c_1 … c_d c_g k` / `eq …`, with `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut dimension = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut tokens = body.split_whitespace();
            let kind = match tokens.next() {
                Some("ge") => RowKind::Ge,
                Some("eq") => RowKind::Eq,
                Some(other) => {
                    return Err(Error::Parse { line, msg: format!("expected `ge` or `eq`, found `{other}`") })
                }
                None => unreachable!(),
            };
            let nums = tokens
                .map(|t| t.parse::<i64>().map_err(|e| Error::Parse { line, msg: format!("`{t}`: {e}") }))
                .collect::<Result<Vec<_>>>()?;
            if nums.len() < 2 {
                return Err(Error::Parse { line, msg: "need a g coefficient and a constant".into() });
            }
            let d = nums.len() - 2;
            match dimension {
                None => dimension = Some(d),
                Some(expected) if expected != d => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("row has {d} variable coefficients, earlier rows have {expected}"),
                    })
                }
                _ => {}
            }
            rows.push(Row {
                kind,
                coeffs: nums[..d].to_vec(),
                g_coeff: nums[d],
                constant: nums[d + 1],
            });
        }
        let dimension = dimension.ok_or(Error::Parse { line: 0, msg: "no rows".into() })?;
        LinearSystem::new(dimension, rows)
    }

    /// Canonical text form; `parse(to_text(s)) == s`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(match r.kind {
                RowKind::Ge => "ge",
                RowKind::Eq => "eq",
            });
            for c in r.coeffs.iter().chain([&r.g_coeff, &r.constant]) {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Row after substituting `g`, as `Σ c_i x_i ≥ rhs`; equalities are split in two.
struct Ineq {
    coeffs: Vec<i128>,
    rhs: i128,
}

fn specialize(sys: &LinearSystem, g: i64) -> Vec<Ineq> {
    let mut out = Vec::new();
    for r in &sys.rows {
        let coeffs: Vec<i128> = r.coeffs.iter().map(|&c| c as i128).collect();
        let rhs = r.constant as i128 - r.g_coeff as i128 * g as i128;
        if r.kind == RowKind::Eq {
            out.push(Ineq { coeffs: coeffs.iter().map(|c| -c).collect(), rhs: -rhs });
        }
        out.push(Ineq { coeffs, rhs });
    }
    out
}

#[derive(Clone, Copy, Debug)]
struct Bound {
    lo: Option<i128>,
    hi: Option<i128>,
}

impl Bound {
    /// Upper bound of `c·x` over the interval.
    fn max_term(&self, c: i128) -> Option<i128> {
        match c.cmp(&0) {
            std::cmp::Ordering::Equal => Some(0),
            std::cmp::Ordering::Greater => self.hi.map(|h| c * h),
            std::cmp::Ordering::Less => self.lo.map(|l| c * l),
        }
    }

    fn empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(l), Some(h)) if l > h)
    }
}

/// Tightens `bounds[j]` for `j ≥ from` using every inequality, given fixed values
/// `prefix` for the first variables. Returns false if some interval becomes empty.
fn propagate(ineqs: &[Ineq], prefix: &[i128], bounds: &mut [Bound], from: usize, rounds: usize) -> bool {
    for _ in 0..rounds {
        let mut changed = false;
        for q in ineqs {
            let fixed: i128 = q.coeffs[..from].iter().zip(prefix).map(|(c, x)| c * x).sum();
            for j in from..q.coeffs.len() {
                let cj = q.coeffs[j];
                if cj == 0 {
                    continue;
                }
                // c_j x_j ≥ rhs − fixed − Σ_{k≠j} max(c_k x_k)
                let mut others = Some(0i128);
                for (k, (b, &c)) in bounds.iter().zip(&q.coeffs).enumerate().skip(from) {
                    if k != j {
                        others = others.zip(b.max_term(c)).map(|(a, b)| a + b);
                    }
                }
                let Some(others) = others else { continue };
                let need = q.rhs - fixed - others;
                let b = &mut bounds[j];
                if cj > 0 {
                    let lo = Integer::div_ceil(&need, &cj);
                    if b.lo.is_none_or(|l| lo > l) {
                        b.lo = Some(lo);
                        changed = true;
                    }
                } else {
                    let hi = Integer::div_floor(&need, &cj);
                    if b.hi.is_none_or(|h| hi < h) {
                        b.hi = Some(hi);
                        changed = true;
                    }
                }
                if b.empty() {
                    return false;
                }
            }
        }
        if !changed {
            break;
        }
    }
    true
}

const GLOBAL_ROUNDS: usize = 64;

/// Number of integer solutions at grading value `g`, by interval propagation and
/// enumeration of the variables in input order.
pub fn count_system(sys: &LinearSystem, g: i64) -> Result<u128> {
    let ineqs = specialize(sys, g);
    let d = sys.dimension;
    for q in &ineqs {
        if q.coeffs.iter().all(|&c| c == 0) && q.rhs > 0 {
            return Ok(0);
        }
    }
    if d == 0 {
        return Ok(1);
    }
    let mut bounds = vec![Bound { lo: None, hi: None }; d];
    if !propagate(&ineqs, &[], &mut bounds, 0, GLOBAL_ROUNDS) {
        return Ok(0);
    }
    if let Some(j) = bounds.iter().position(|b| b.lo.is_none() || b.hi.is_none()) {
        return Err(Error::UnboundedSystem(j));
    }
    let mut prefix = Vec::with_capacity(d);
    Ok(recurse(&ineqs, &mut prefix, &bounds))
}

fn recurse(ineqs: &[Ineq], prefix: &mut Vec<i128>, outer: &[Bound]) -> u128 {
    let i = prefix.len();
    let mut bounds = outer.to_vec();
    if !propagate(ineqs, prefix, &mut bounds, i, 1) {
        return 0;
    }
    let (lo, hi) = (bounds[i].lo.unwrap(), bounds[i].hi.unwrap());
    if lo > hi {
        return 0;
    }
    if i + 1 == bounds.len() {
        // every row is now a constraint on x_i alone, so the interval is exact
        return (hi - lo + 1) as u128;
    }
    let mut total = 0;
    for x in lo..=hi {
        prefix.push(x);
        total += recurse(ineqs, prefix, &bounds);
        prefix.pop();
    }
    total
}

/// Reference count over the box `[lo, hi]^d`; for cross-checking only.
pub fn count_system_in_box(sys: &LinearSystem, g: i64, lo: i64, hi: i64) -> u128 {
    let ineqs = specialize(sys, g);
    let d = sys.dimension;
    let mut x = vec![lo as i128; d];
    let mut n = 0;
    if lo > hi {
        return 0;
    }
    loop {
        if ineqs.iter().all(|q| q.coeffs.iter().zip(&x).map(|(c, v)| c * v).sum::<i128>() >= q.rhs) {
            n += 1;
        }
        let mut k = 0;
        loop {
            if k == d {
                return n;
            }
            if x[k] < hi as i128 {
                x[k] += 1;
                break;
            }
            x[k] = lo as i128;
            k += 1;
        }
    }
}

/// Tuples `(a_1, a_2, b_1, b_2)` with `g/2 < b_2 < b_1 ≤ g < a_1 < a_2 < 2g` and
/// `a_2 − b_2 ≤ g`.
pub fn pstar_system() -> LinearSystem {
    LinearSystem::new(
        4,
        vec![
            Row::ge(vec![0, 0, 1, -1], 0, 1),
            Row::ge(vec![0, 0, -1, 0], 1, 0),
            Row::ge(vec![1, 0, 0, 0], -1, 1),
            Row::ge(vec![-1, 1, 0, 0], 0, 1),
            Row::ge(vec![0, -1, 0, 0], 2, 1),
            Row::ge(vec![0, 0, 0, 2], -1, 1),
            Row::ge(vec![0, -1, 0, 1], 1, 0),
        ],
    )
    .expect("dimension 4")
}

/// Closed form of the [`pstar_system`] count: `(11/384)(g−2)g(g² − 6g/11 − 8/11)` for even
/// `g`, `(11/384)(g−1)(g+1)(g² − 16g/11 − 3/11)` for odd `g`.
pub fn pstar_quasipolynomial() -> QuasiPolynomial {
    let lin = |c: i64| vec![int(c), int(1)];
    let even = poly_mul(&poly_mul(&lin(-2), &lin(0)), &[rat(-8, 11), rat(-6, 11), int(1)]);
    let odd = poly_mul(&poly_mul(&lin(-1), &lin(1)), &[rat(-3, 11), rat(-16, 11), int(1)]);
    let scale = |p: Vec<Rational>| Some(p.into_iter().map(|c| c * rat(11, 384)).collect());
    QuasiPolynomial::new(2, vec![scale(even), scale(odd)]).expect("two rows")
}

/// Pairs `(a, b)` with `g/2 < b ≤ g < a < 2g` and `a − b ≤ g`.
pub fn ordinarization_one_system() -> LinearSystem {
    LinearSystem::new(
        2,
        vec![
            Row::ge(vec![1, 0], -1, 1),
            Row::ge(vec![-1, 0], 2, 1),
            Row::ge(vec![0, -1], 1, 0),
            Row::ge(vec![-1, 1], 1, 0),
            Row::ge(vec![0, 2], -1, 1),
        ],
    )
    .expect("dimension 2")
}

/// The pairs of [`ordinarization_one_system`] with `a = 2b`.
pub fn ordinarization_one_doubled_system() -> LinearSystem {
    let mut sys = ordinarization_one_system();
    sys.rows.push(Row::eq(vec![-1, 2], 0, 0));
    sys
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pstar_formula(g: i64) -> i64 {
        // 384 Q(g) / 11 with the 11 cleared: even (g−2)g(11g² − 6g − 8), odd (g−1)(g+1)(11g² − 16g − 3)
        let v = if g % 2 == 0 {
            (g - 2) * g * (11 * g * g - 6 * g - 8)
        } else {
            (g - 1) * (g + 1) * (11 * g * g - 16 * g - 3)
        };
        assert_eq!(v % 384, 0);
        v / 384
    }

    #[test]
    fn pstar_examples() {
        assert_eq!(count_system(&pstar_system(), 6).unwrap(), 22);
        let small: Vec<u128> = (1..=11).map(|g| count_system(&pstar_system(), g).unwrap()).collect();
        assert_eq!(small, vec![0, 0, 1, 3, 12, 22, 53, 81, 155, 215, 360]);
        for g in 2..=40 {
            assert_eq!(count_system(&pstar_system(), g).unwrap() as i64, pstar_formula(g), "g={g}");
        }
    }

    #[test]
    fn pstar_closed_form() {
        let q = pstar_quasipolynomial();
        for g in 2..=40 {
            assert_eq!(q.eval_count(g).unwrap() as i64, pstar_formula(g));
        }
        assert_eq!(q.row(0).unwrap()[1], rat(1, 24));
    }

    #[test]
    fn ordinarization_one() {
        assert_eq!(count_system(&ordinarization_one_system(), 7).unwrap(), 21);
        assert_eq!(count_system(&ordinarization_one_doubled_system(), 7).unwrap(), 3);
    }

    #[test]
    fn agrees_with_box() {
        let systems = [pstar_system(), ordinarization_one_system(), ordinarization_one_doubled_system()];
        for sys in &systems {
            for g in 0..=20 {
                let hi = 2 * g + 2;
                let boxed = count_system_in_box(sys, g, -2, hi);
                assert_eq!(count_system(sys, g).unwrap(), boxed, "g={g}\n{}", sys.to_text());
            }
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let sys = LinearSystem::parse("ge 1 0 1\nge -1 0 0\n").unwrap();
        assert_eq!(count_system(&sys, 3).unwrap(), 0);
        let sys = LinearSystem::parse("ge 1 0 0\n").unwrap();
        assert_eq!(count_system(&sys, 3), Err(Error::UnboundedSystem(0)));
        let sys = LinearSystem::parse("ge 0 1 5").unwrap();
        assert_eq!(count_system(&sys, 3).unwrap(), 0);
    }

    #[test]
    fn text_round_trip() {
        for sys in [pstar_system(), ordinarization_one_doubled_system()] {
            assert_eq!(LinearSystem::parse(&sys.to_text()).unwrap(), sys);
        }
        let sys = LinearSystem::parse("# header\n\n  ge 1 -1   0 2 # trailing\neq 0 1 1 0\n").unwrap();
        assert_eq!(sys.dimension(), 2);
        assert_eq!(sys.to_text(), "ge 1 -1 0 2\neq 0 1 1 0\n");
        assert!(matches!(LinearSystem::parse("le 1 2 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(LinearSystem::parse("ge 1 2 3\nge 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(LinearSystem::parse("ge 1 x 3"), Err(Error::Parse { line: 1, .. })));
        assert!(LinearSystem::parse("# nothing").is_err());
    }
}
