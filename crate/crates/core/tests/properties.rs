use num_integer::Integer;
use proptest::prelude::*;
use rayon::prelude::*;

use ordinarization::families::{
    for_each_normal_factorization, n_g_2_formula, supersym_factor_count, supersym_spec,
};
use ordinarization::lattice::{fit_quasipolynomial, int, rat, QuasiPolynomial, Rational};
use ordinarization::{n_g_r_tuples, ordinarization_number, ordinarization_transform, FactorizationVector, NumericalSemigroup};

fn coprime_sets(max_product: u64, len: std::ops::RangeInclusive<usize>) -> Vec<Vec<u64>> {
    fn extend(cur: &mut Vec<u64>, product: u64, max: u64, len: &std::ops::RangeInclusive<usize>, out: &mut Vec<Vec<u64>>) {
        if len.contains(&cur.len()) {
            out.push(cur.clone());
        }
        if cur.len() == *len.end() {
            return;
        }
        let start = cur.last().map_or(2, |&l| l + 1);
        for next in start..=max / product {
            if cur.iter().all(|&c| c.gcd(&next) == 1) {
                cur.push(next);
                extend(cur, product * next, max, len, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_product, &len, &mut out);
    out
}

fn check_factor_counts(factors: &[u64]) -> Result<(), String> {
    let spec = supersym_spec(factors).unwrap();
    let s = spec.semigroup().unwrap();
    let counts = s.denumerants(spec.genus as usize);
    let mut members = 0usize;
    let mut err = None;
    for_each_normal_factorization(&spec, spec.genus, |coords, value| {
        members += 1;
        let formula = supersym_factor_count(&spec, &FactorizationVector(coords.to_vec()));
        if formula != counts[value as usize] as u128 && err.is_none() {
            err = Some(format!("{factors:?} at {value}: formula {formula}, brute {}", counts[value as usize]));
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let expected = s.count_members_between(0, spec.genus as usize);
    if members != expected {
        return Err(format!("{factors:?}: {members} normal factorizations, {expected} members"));
    }
    Ok(())
}

#[test]
fn supersymmetric_factor_counts_three_or_more_factors() {
    let sets = coprime_sets(20_000, 3..=6);
    assert!(sets.len() > 1000);
    let bad: Vec<String> = sets.par_iter().filter_map(|f| check_factor_counts(f).err()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn supersymmetric_factor_counts_two_factors() {
    let sets = coprime_sets(20_000, 2..=2);
    let bad: Vec<String> = sets.par_iter().filter_map(|f| check_factor_counts(f).err()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn n_g_2_formula_exact_from_genus_one() {
    let first_bad = (1..=60).rev().find(|&g| n_g_r_tuples(g, 2).unwrap() != n_g_2_formula(g as u64).unwrap());
    assert_eq!(first_bad, None);
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fit_round_trips_coefficients(
        degree in 0usize..=3,
        period in 1u64..=4,
        seed in proptest::collection::vec(small_rational(), 16),
    ) {
        let rows: Vec<Option<Vec<Rational>>> = (0..period as usize)
            .map(|rho| {
                let mut row: Vec<Rational> = seed[rho * 4..rho * 4 + degree + 1].to_vec();
                if row[degree] == int(0) {
                    row[degree] = int(1);
                }
                Some(row)
            })
            .collect();
        let q = QuasiPolynomial::new(period, rows).unwrap();
        // scale to integers so the samples are integral
        let den: i64 = 27720;
        let scaled = QuasiPolynomial::new(
            period,
            q.rows().iter().map(|r| r.as_ref().map(|r| r.iter().map(|c| c * int(den)).collect())).collect(),
        ).unwrap();
        let samples: Vec<(i64, i64)> = (0..(period as i64) * (degree as i64 + 3))
            .map(|t| {
                let v = scaled.eval(t).unwrap();
                prop_assert!(v.is_integer());
                Ok((t, v.to_integer().try_into().unwrap()))
            })
            .collect::<Result<_, TestCaseError>>()?;
        let fitted = fit_quasipolynomial(&samples, degree, period).unwrap();
        prop_assert_eq!(&fitted, &scaled);
        for &(t, v) in &samples {
            prop_assert_eq!(fitted.eval(t).unwrap(), int(v));
        }
    }

    #[test]
    fn generators_and_gaps_agree(gens in proptest::collection::vec(2usize..40, 1..5)) {
        let mut gens = gens;
        gens.push(gens.iter().fold(0, |a, &b| a.gcd(&b)).max(1) * 7 + 1);
        let g = gens.iter().fold(0usize, |a, &b| a.gcd(&b));
        prop_assume!(g == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let t = NumericalSemigroup::from_gaps(s.gaps()).unwrap();
        prop_assert_eq!(&s, &t);
        let min = s.minimal_generators().minimal_generators;
        prop_assert_eq!(&NumericalSemigroup::from_generators(&min).unwrap(), &s);
        if let Ok(p) = ordinarization_transform(&s) {
            prop_assert_eq!(p.genus(), s.genus());
            prop_assert_eq!(ordinarization_number(&p) + 1, ordinarization_number(&s));
        }
    }
}
