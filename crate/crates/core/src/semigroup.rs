//! Numerical semigroups stored as a membership table below the conductor.
//!
//! Every value is immutable once built. Constructors validate additive closure, so a
//! `NumericalSemigroup` in hand always satisfies the monoid axioms.

use std::fmt;

use bitvec::prelude::*;
use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) type Table = BitVec<u64, Lsb0>;

/// A cofinite additive submonoid of the nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    conductor: usize,
    /// Membership of `0..conductor`; everything from the conductor on is a member.
    below: Table,
    genus: usize,
    multiplicity: usize,
}

/// Minimal and effective generators of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorData {
    pub minimal_generators: Vec<usize>,
    /// Minimal generators larger than the Frobenius number.
    pub effective_generators: Vec<usize>,
}

impl GeneratorData {
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn effectivity(&self) -> usize {
        self.effective_generators.len()
    }
}

/// Apéry set with respect to a positive member `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyData {
    pub modulus: usize,
    /// `apery[i]` is the least member congruent to `i`.
    pub apery: Vec<usize>,
    /// Kunz coordinates `k_1..k_{m-1}`, present only when the modulus is the multiplicity.
    pub kunz: Option<Vec<usize>>,
}

/// Coefficients of a factorization, one per minimal generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationVector(pub Vec<u64>);

impl FactorizationVector {
    /// The element this factorization represents over `generators`.
    pub fn value(&self, generators: &[usize]) -> u64 {
        self.0.iter().zip(generators).map(|(&c, &g)| c * g as u64).sum()
    }
}

impl NumericalSemigroup {
    /// The full monoid of nonnegative integers.
    pub fn full() -> Self {
        Self::from_table_unchecked(bitvec![u64, Lsb0; 1; 1])
    }

    /// `S_g = {0, g+1, g+2, ...}`.
    pub fn ordinary(genus: usize) -> Self {
        let mut below = bitvec![u64, Lsb0; 0; genus + 1];
        below.set(0, true);
        Self::from_table_unchecked(below)
    }

    /// The semigroup of all nonnegative integer combinations of `gens`.
    pub fn from_generators(gens: &[usize]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let gcd = gens.iter().fold(0usize, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::Gcd { gens: gens.to_vec(), gcd });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m == 1 {
            return Ok(Self::full());
        }
        // Sieve until m consecutive members appear; everything after is then a member.
        let mut table: Table = bitvec![u64, Lsb0; 1; 1];
        let mut run = 1usize;
        let mut i = 0usize;
        while run < m {
            i += 1;
            let member = sorted.iter().take_while(|&&s| s <= i).any(|&s| table[i - s]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let conductor = i + 1 - m;
        table.truncate(conductor);
        Ok(Self::from_table_unchecked(table))
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps<I: IntoIterator<Item = usize>>(gaps: I) -> Result<Self> {
        let gaps: Vec<usize> = gaps.into_iter().collect();
        if gaps.contains(&0) {
            return Err(Error::InvalidArgument("0 cannot be a gap".into()));
        }
        let conductor = gaps.iter().max().map_or(0, |&f| f + 1);
        let mut below = bitvec![u64, Lsb0; 1; conductor.max(1)];
        for &g in &gaps {
            below.set(g, false);
        }
        check_closed(&below)?;
        Ok(Self::from_table_unchecked(below))
    }

    /// The semigroup of multiplicity `m` with Apéry entries `k_i m + i`.
    pub fn from_kunz(m: usize, kunz: &[usize]) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("Kunz coordinates need multiplicity >= 2".into()));
        }
        if kunz.len() != m - 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} Kunz coordinates, got {}",
                m - 1,
                kunz.len()
            )));
        }
        if kunz.contains(&0) {
            return Err(Error::InvalidArgument("Kunz coordinates must be positive".into()));
        }
        let apery: Vec<usize> = std::iter::once(0)
            .chain(kunz.iter().enumerate().map(|(i, &k)| k * m + i + 1))
            .collect();
        let top = *apery.iter().max().expect("nonempty");
        let conductor = top + 1 - m;
        let mut below = bitvec![u64, Lsb0; 0; conductor];
        for x in 0..conductor {
            below.set(x, x >= apery[x % m]);
        }
        check_closed(&below)?;
        Ok(Self::from_table_unchecked(below))
    }

    /// Builds from a membership table with `table[0]` set, trimming the tail.
    pub(crate) fn from_table_unchecked(mut below: Table) -> Self {
        debug_assert!(below[0]);
        let conductor = below.last_zero().map_or(0, |f| f + 1);
        below.truncate(conductor.max(1));
        let genus = below.count_zeros();
        let multiplicity = below.iter_ones().nth(1).unwrap_or(conductor.max(1));
        NumericalSemigroup { conductor, below, genus, multiplicity }
    }

    /// Validates closure of a candidate table before wrapping it.
    pub(crate) fn from_table(below: Table) -> Result<Self> {
        if below.is_empty() || !below[0] {
            return Err(Error::InvalidArgument("0 must be a member".into()));
        }
        check_closed(&below)?;
        Ok(Self::from_table_unchecked(below))
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Largest gap, or -1 for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_full(&self) -> bool {
        self.genus == 0
    }

    /// True for `S_g`, including the full monoid `S_0`.
    pub fn is_ordinary(&self) -> bool {
        self.multiplicity == self.genus + 1
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.is_member(x as usize)
    }

    #[inline]
    pub fn is_member(&self, x: usize) -> bool {
        x >= self.conductor || self.below[x]
    }

    pub fn gaps(&self) -> Vec<usize> {
        self.below.iter_zeros().collect()
    }

    /// Members in `lo..=hi`.
    pub fn members_between(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
        (lo..=hi).filter(move |&x| self.is_member(x))
    }

    pub fn count_members_between(&self, lo: usize, hi: usize) -> usize {
        if lo > hi {
            return 0;
        }
        let table_hi = hi.min(self.conductor.saturating_sub(1));
        let in_table = if lo <= table_hi && lo < self.conductor {
            self.below[lo..=table_hi].count_ones()
        } else {
            0
        };
        let tail_lo = lo.max(self.conductor);
        let tail = if tail_lo <= hi { hi - tail_lo + 1 } else { 0 };
        in_table + tail
    }

    pub(crate) fn table(&self) -> &Table {
        &self.below
    }

    /// Membership table over `0..len`, extended with ones past the conductor.
    pub(crate) fn table_extended(&self, len: usize) -> Table {
        let mut t = self.below.clone();
        if len > t.len() {
            t.resize(len, true);
        }
        t
    }

    fn is_sum_of_two_positive(&self, n: usize) -> bool {
        (self.multiplicity..=n / 2).any(|x| self.is_member(x) && self.is_member(n - x))
    }

    /// Minimal generators, found among the multiplicity and its Apéry set.
    pub fn minimal_generators(&self) -> GeneratorData {
        if self.is_full() {
            return GeneratorData { minimal_generators: vec![1], effective_generators: vec![1] };
        }
        let m = self.multiplicity;
        let mut candidates = self.apery_set(m).expect("multiplicity is a member").apery;
        candidates[0] = m;
        candidates.sort_unstable();
        let minimal_generators: Vec<usize> = candidates
            .into_iter()
            .filter(|&n| !self.is_sum_of_two_positive(n))
            .collect();
        let frob = self.frobenius();
        let effective_generators =
            minimal_generators.iter().copied().filter(|&n| n as i64 > frob).collect();
        GeneratorData { minimal_generators, effective_generators }
    }

    pub fn apery_set(&self, n: usize) -> Result<AperyData> {
        if n == 0 || !self.is_member(n) {
            return Err(Error::NotMember(n));
        }
        let apery: Vec<usize> = (0..n)
            .map(|i| {
                let mut w = i;
                while !self.is_member(w) {
                    w += n;
                }
                w
            })
            .collect();
        let kunz = (n == self.multiplicity && n >= 2)
            .then(|| apery.iter().enumerate().skip(1).map(|(i, &w)| (w - i) / n).collect());
        Ok(AperyData { modulus: n, apery, kunz })
    }

    /// All factorizations of `n` over the minimal generators.
    pub fn factorizations(&self, n: usize) -> Vec<FactorizationVector> {
        let gens = self.minimal_generators().minimal_generators;
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; gens.len()];
        factor_dfs(&gens, 0, n, &mut coeffs, &mut out);
        out
    }

    /// Number of factorizations of every `0..=bound`, saturating at `u64::MAX`.
    pub fn denumerants(&self, bound: usize) -> Vec<u64> {
        let gens = self.minimal_generators().minimal_generators;
        let mut counts = vec![0u64; bound + 1];
        counts[0] = 1;
        for &g in &gens {
            for x in g..=bound {
                counts[x] = counts[x].saturating_add(counts[x - g]);
            }
        }
        counts
    }

    /// Least `n <= bound` with at least two factorizations.
    pub fn first_multi_factorization(&self, bound: usize) -> Option<usize> {
        self.denumerants(bound).iter().position(|&c| c >= 2)
    }
}

fn factor_dfs(
    gens: &[usize],
    idx: usize,
    rest: usize,
    coeffs: &mut Vec<u64>,
    out: &mut Vec<FactorizationVector>,
) {
    if idx + 1 == gens.len() {
        if rest.is_multiple_of(gens[idx]) {
            coeffs[idx] = (rest / gens[idx]) as u64;
            out.push(FactorizationVector(coeffs.clone()));
        }
        return;
    }
    for c in 0..=rest / gens[idx] {
        coeffs[idx] = c as u64;
        factor_dfs(gens, idx + 1, rest - c * gens[idx], coeffs, out);
    }
    coeffs[idx] = 0;
}

/// Checks `x + y` for every pair of positive members below the table length.
pub(crate) fn check_closed(table: &BitSlice<u64, Lsb0>) -> Result<()> {
    let c = table.len();
    for x in table.iter_ones().skip(1) {
        if 2 * x >= c {
            break;
        }
        for y in table[x..c - x].iter_ones().map(|o| o + x) {
            if !table[x + y] {
                return Err(Error::NotClosed { x, y, sum: x + y });
            }
        }
    }
    Ok(())
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("genus", &self.genus)
            .field("frobenius", &self.frobenius())
            .field("gaps", &self.gaps())
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.minimal_generators().minimal_generators;
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}
