//! Semigroups `⟨a, a + 1, …, a + x⟩` generated by an interval.

use crate::error::{Error, Result};
use crate::lattice::{int, rat, to_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalSpec {
    pub a: u64,
    pub x: u64,
    /// `⌈(a − 1)/x⌉`
    pub n: u64,
    pub frobenius: u64,
    pub genus: u64,
}

impl IntervalSpec {
    pub fn generators(&self) -> Vec<usize> {
        (self.a..=self.a + self.x).map(|v| v as usize).collect()
    }
}

pub fn interval_spec(a: u64, x: u64) -> Result<IntervalSpec> {
    if a < 2 || x < 1 || x > a - 1 {
        return Err(Error::BadRange(format!("need a ≥ 2 and 1 ≤ x ≤ a − 1, got a = {a}, x = {x}")));
    }
    let n = (a - 1).div_ceil(x);
    Ok(IntervalSpec {
        a,
        x,
        n,
        frobenius: (n - 1) * a + a - 1,
        genus: n * a - n * (n - 1) * x / 2 - n,
    })
}

/// Ordinarization number; 0 when `x = a − 1` (the ordinary semigroup).
pub fn interval_r(a: u64, x: u64) -> Result<u64> {
    let spec = interval_spec(a, x)?;
    let (n, a, x) = (spec.n as i64, a as i64, x as i64);
    if n == 1 {
        return Ok(0);
    }
    let v = if n % 2 == 1 {
        rat(n * n - 1, 8) * int(x) + rat(n - 1, 2)
    } else {
        rat(-n * (3 * n - 2), 8) * int(x) + rat(n, 2) * int(a - 1)
    };
    to_count(&v)
}
