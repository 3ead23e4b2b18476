use crate::error::{Error, Result};

/// `{x ∈ ℤ_{≥0}^e : Σ weights[i]·x[i] ≤ bound}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightSimplex {
    pub weights: Vec<u64>,
    pub bound: u64,
}

impl RightSimplex {
    pub fn new(weights: Vec<u64>, bound: u64) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("simplex weights must be positive".into()));
        }
        Ok(RightSimplex { weights, bound })
    }
}

/// Number of integer points, summing over the last coordinate.
pub fn count_right_simplex(simplex: &RightSimplex) -> u128 {
    count(&simplex.weights, simplex.bound)
}

fn count(weights: &[u64], bound: u64) -> u128 {
    match weights {
        [] => 1,
        [w] => (bound / w) as u128 + 1,
        [rest @ .., w] => (0..=bound / w).map(|x| count(rest, bound - x * w)).sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boxed(weights: &[u64], bound: u64) -> u128 {
        let mut n = 0;
        let mut x = vec![0u64; weights.len()];
        loop {
            let s: u64 = x.iter().zip(weights).map(|(a, w)| a * w).sum();
            if s <= bound {
                n += 1;
            }
            let mut i = 0;
            loop {
                if i == x.len() {
                    return n;
                }
                x[i] += 1;
                if x[i] * weights[i] <= bound {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(count_right_simplex(&RightSimplex::new(vec![3, 7], 6).unwrap()), 3);
        assert_eq!(count_right_simplex(&RightSimplex::new(vec![2, 15], 7).unwrap()), 4);
        assert_eq!(count_right_simplex(&RightSimplex::new(vec![4, 9, 5], 0).unwrap()), 1);
        assert!(RightSimplex::new(vec![1, 0], 3).is_err());
    }

    #[test]
    fn matches_box_enumeration() {
        let mut seed = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = |m: u64| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed % m
        };
        for e in 1..=4 {
            for _ in 0..40 {
                let weights: Vec<u64> = (0..e).map(|_| 1 + next(10)).collect();
                let bound = if e == 4 { next(60) } else { next(201) };
                assert_eq!(count(&weights, bound), boxed(&weights, bound), "{weights:?} {bound}");
            }
        }
        for w in 1..=10 {
            for bound in 0..=200 {
                assert_eq!(count(&[w], bound), boxed(&[w], bound));
            }
        }
    }
}
