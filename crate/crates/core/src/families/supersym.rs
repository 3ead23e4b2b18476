//! Supersymmetric semigroups `⟨A/a_1, …, A/a_n⟩` for pairwise-coprime `a_1 < … < a_n`,
//! `A = Π a_i`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{rat, Rational};
use crate::semigroup::{FactorizationVector, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersymmetricSpec {
    pub factors: Vec<u64>,
    /// `generators[i] = product / factors[i]`, so decreasing.
    pub generators: Vec<u64>,
    pub product: u64,
    pub frobenius: i64,
    pub genus: u64,
}

pub fn supersym_spec(factors: &[u64]) -> Result<SupersymmetricSpec> {
    if factors.len() < 2 {
        return Err(Error::InvalidArgument("need at least two factors".into()));
    }
    if factors[0] < 2 || factors.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadOrder(format!("factors {factors:?} must satisfy 2 ≤ a_1 < … < a_n")));
    }
    for (i, &x) in factors.iter().enumerate() {
        if factors[i + 1..].iter().any(|&y| x.gcd(&y) != 1) {
            return Err(Error::NotPairwiseCoprime(factors.to_vec()));
        }
    }
    let product = factors
        .iter()
        .try_fold(1u64, |acc, &a| acc.checked_mul(a))
        .filter(|&p| p <= i64::MAX as u64 / factors.len() as u64)
        .ok_or(Error::Overflow("product of factors"))?;
    let generators: Vec<u64> = factors.iter().map(|a| product / a).collect();
    let frobenius = (factors.len() as i64 - 1) * product as i64 - generators.iter().sum::<u64>() as i64;
    Ok(SupersymmetricSpec {
        factors: factors.to_vec(),
        generators,
        product,
        frobenius,
        genus: ((frobenius + 1) / 2) as u64,
    })
}

impl SupersymmetricSpec {
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        let gens: Vec<usize> = self.generators.iter().map(|&q| q as usize).collect();
        NumericalSemigroup::from_generators(&gens)
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `C(n + Σ ⌊x_i/a_i⌋ − 1, n − 1)` for a factorization `x` over `spec.generators`.
pub fn supersym_factor_count(spec: &SupersymmetricSpec, fact: &FactorizationVector) -> u128 {
    let n = spec.factors.len() as u64;
    let trades: u64 = fact.0.iter().zip(&spec.factors).map(|(x, a)| x / a).sum();
    binomial(n + trades - 1, n - 1)
}

/// Calls `f` on every factorization over `spec.generators` of value at most `bound` whose
/// coordinates are below their factor except at the largest factor (smallest generator).
/// These are one per member `≤ bound`.
pub fn for_each_normal_factorization(spec: &SupersymmetricSpec, bound: u64, mut f: impl FnMut(&[u64], u64)) {
    let n = spec.factors.len();
    // smallest generator first, then the rest in increasing generator order
    let order: Vec<usize> = (0..n).rev().collect();
    let mut coords = vec![0u64; n];
    walk(spec, &order, 0, bound, &mut coords, &mut f, true);
}

fn walk(
    spec: &SupersymmetricSpec,
    order: &[usize],
    depth: usize,
    rest: u64,
    coords: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64], u64),
    free: bool,
) {
    if depth == order.len() {
        let value = spec.generators.iter().zip(coords.iter()).map(|(q, c)| q * c).sum();
        f(coords, value);
        return;
    }
    let i = order[depth];
    let q = spec.generators[i];
    let cap = if free { rest / q } else { (rest / q).min(spec.factors[i] - 1) };
    for c in 0..=cap {
        coords[i] = c;
        walk(spec, order, depth + 1, rest - c * q, coords, f, false);
    }
    coords[i] = 0;
}

/// Ordinarization number as a nested sum over normal factorizations below the genus.
pub fn supersym_r(spec: &SupersymmetricSpec) -> u64 {
    let n = spec.factors.len();
    let order: Vec<usize> = (0..n).rev().collect();
    nested(spec, &order, 0, spec.genus) - 1
}

fn nested(spec: &SupersymmetricSpec, order: &[usize], depth: usize, rest: u64) -> u64 {
    let i = order[depth];
    let q = spec.generators[i];
    let cap = if depth == 0 { rest / q } else { (rest / q).min(spec.factors[i] - 1) };
    if depth + 1 == order.len() {
        return cap + 1;
    }
    (0..=cap).map(|c| nested(spec, order, depth + 1, rest - c * q)).sum()
}

/// `r/g` for the supersymmetric semigroup of a pairwise-coprime triple.
pub fn dim3_ratio(a: u64, b: u64, c: u64) -> Result<Rational> {
    let spec = supersym_spec(&[a, b, c])?;
    Ok(rat(supersym_r(&spec) as i64, spec.genus as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::r_two_gen;
    use crate::ordinarization::ordinarization_number;

    #[test]
    fn spec_examples() {
        let s = supersym_spec(&[3, 5, 7, 11]).unwrap();
        assert_eq!(s.generators, vec![385, 231, 165, 105]);
        assert_eq!(s.genus, 1290);
        assert_eq!(supersym_r(&s), 228);
        let s = supersym_spec(&[2, 3]).unwrap();
        assert_eq!((s.frobenius, s.genus), (1, 1));
        let s = supersym_spec(&[3, 5]).unwrap();
        assert_eq!((s.frobenius, s.genus), (7, 4));
        assert!(matches!(supersym_spec(&[3, 6]), Err(Error::BadOrder(_)) | Err(Error::NotPairwiseCoprime(_))));
        assert!(matches!(supersym_spec(&[4, 6, 7]), Err(Error::NotPairwiseCoprime(_))));
        assert!(matches!(supersym_spec(&[5, 3]), Err(Error::BadOrder(_))));
        assert!(matches!(supersym_spec(&[1, 3]), Err(Error::BadOrder(_))));
    }

    #[test]
    fn matches_semigroup() {
        for factors in [&[2u64, 3, 5][..], &[3, 5, 7], &[2, 5, 7], &[3, 4, 5, 7], &[2, 3, 5, 7]] {
            let spec = supersym_spec(factors).unwrap();
            let s = spec.semigroup().unwrap();
            assert_eq!(s.frobenius(), spec.frobenius);
            assert_eq!(s.genus() as u64, spec.genus);
            assert_eq!(supersym_r(&spec), ordinarization_number(&s) as u64, "{factors:?}");
        }
        for (a, b) in [(3, 7), (5, 7), (4, 9), (2, 11)] {
            assert_eq!(supersym_r(&supersym_spec(&[a, b]).unwrap()), r_two_gen(a, b).unwrap());
        }
    }

    #[test]
    fn factor_counts() {
        let spec = supersym_spec(&[3, 5]).unwrap();
        // generators (5, 3): 15 = 3·5 = 5·3
        assert_eq!(supersym_factor_count(&spec, &FactorizationVector(vec![3, 0])), 2);
        assert_eq!(supersym_factor_count(&spec, &FactorizationVector(vec![0, 5])), 2);
        let spec = supersym_spec(&[2, 3, 5, 7]).unwrap();
        let s = spec.semigroup().unwrap();
        let counts = s.denumerants(spec.genus as usize);
        let mut members = 0;
        for_each_normal_factorization(&spec, spec.genus, |coords, value| {
            members += 1;
            let fact = FactorizationVector(coords.to_vec());
            assert_eq!(supersym_factor_count(&spec, &fact), counts[value as usize] as u128);
        });
        assert_eq!(members, s.count_members_between(0, spec.genus as usize));
        let a = FactorizationVector(vec![2, 0, 0, 0]);
        assert_eq!(supersym_factor_count(&spec, &a), 4);
    }

    #[test]
    fn ratio_examples() {
        let spec = supersym_spec(&[3, 5, 7]).unwrap();
        let s = spec.semigroup().unwrap();
        assert_eq!(
            dim3_ratio(3, 5, 7).unwrap(),
            rat(ordinarization_number(&s) as i64, s.genus() as i64)
        );
        assert!(dim3_ratio(3, 6, 7).is_err());
    }
}
