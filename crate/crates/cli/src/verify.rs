//! Property sweeps behind `ordz verify`.

use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;

use ordinarization::families::{
    barlow_popoviciu, dim3_ratio, fit_q_a, for_each_normal_factorization, interval_r, interval_spec,
    n_g_1_formula, n_g_2_formula, known_q_a, q_a_period, r_two_gen, r_two_gen_bounds, supersym_factor_count,
    supersym_r, supersym_spec, two_gen_genus,
};
use ordinarization::lattice::{
    count_right_simplex, count_system, count_system_in_box, int, ordinarization_one_doubled_system,
    ordinarization_one_system, pstar_quasipolynomial, pstar_system, rat, Rational, RightSimplex,
};
use ordinarization::{
    build_ordinarization_tree, census, children_h0_count, children_in_tree, n_g_r_tuples, tk_family,
    EnumOptions, FactorizationVector, NumericalSemigroup, Result,
};

use crate::report::{Provenance, RunReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ng1,
    Ng2,
    Tree,
    TwoGen,
    Qa,
    Barlow,
    Supersym,
    Interval,
    Simplex,
    Systems,
    Monotonicity,
    Ratio,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Ng1,
        Suite::Ng2,
        Suite::Tree,
        Suite::TwoGen,
        Suite::Qa,
        Suite::Barlow,
        Suite::Supersym,
        Suite::Interval,
        Suite::Simplex,
        Suite::Systems,
        Suite::Monotonicity,
        Suite::Ratio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ng1 => "ng1",
            Suite::Ng2 => "ng2",
            Suite::Tree => "tree",
            Suite::TwoGen => "twogen",
            Suite::Qa => "qa",
            Suite::Barlow => "barlow",
            Suite::Supersym => "supersym",
            Suite::Interval => "interval",
            Suite::Simplex => "simplex",
            Suite::Systems => "systems",
            Suite::Monotonicity => "monotonicity",
            Suite::Ratio => "ratio",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}`; expected one of {} or all", names.join(", "))
            })
    }
}

/// Parses `all`, an empty string, or a comma list of suite names.
pub fn parse_suites(list: &str) -> std::result::Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let s: Suite = name.parse()?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_genus: usize,
    pub enum_opts: EnumOptions,
    /// Largest factor product for the supersymmetric sweep.
    pub max_product: u64,
    /// Tolerance for `|r/g − 1/6|` on triples in `[40, 60]`.
    pub ratio_tol: Rational,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_genus: 10,
            enum_opts: EnumOptions::default(),
            max_product: 20_000,
            ratio_tol: rat(1, 50),
        }
    }
}

/// One comparison summarizing a sweep.
fn sweep(report: &mut RunReport, label: String, prov: Provenance, cases: usize, failures: Vec<String>) {
    let agreed = cases - failures.len().min(cases);
    let mut computed = format!("{agreed} of {cases} agree");
    if let Some(first) = failures.first() {
        computed.push_str(&format!(" (first: {first})"));
    }
    report.check(label, prov, format!("{cases} of {cases} agree"), computed, failures.is_empty());
}

fn coprime_pairs(max_b: u64) -> Vec<(u64, u64)> {
    (2..max_b)
        .flat_map(|a| (a + 1..=max_b).filter(move |b| a.gcd(b) == 1).map(move |b| (a, b)))
        .collect()
}

fn members_up_to(gens: &[usize], bound: usize) -> Result<usize> {
    Ok(NumericalSemigroup::from_generators(gens)?.count_members_between(1, bound))
}

pub fn run(report: &mut RunReport, suites: &[Suite], opts: &VerifyOptions) -> Result<()> {
    report.param("max_genus", opts.max_genus);
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    report.param("suites", names.join(","));
    for &suite in suites {
        let start = Instant::now();
        run_suite(report, suite, opts)?;
        report.record_time(&format!("suite {}", suite.name()), start.elapsed());
    }
    Ok(())
}

fn run_suite(r: &mut RunReport, suite: Suite, opts: &VerifyOptions) -> Result<()> {
    match suite {
        Suite::Ng1 | Suite::Ng2 => {
            let rr = if suite == Suite::Ng1 { 1 } else { 2 };
            let c = census(opts.max_genus, &opts.enum_opts)?;
            let mut failures = Vec::new();
            let mut agree_from = 1;
            for g in 1..=opts.max_genus {
                let formula = if rr == 1 { n_g_1_formula(g as u64) } else { n_g_2_formula(g as u64)? };
                let tree = c.n_g_r(g, rr);
                let tuples = n_g_r_tuples(g, rr)?;
                if formula != tree || tree != tuples {
                    failures.push(format!("g={g}: formula {formula}, tree {tree}, tuples {tuples}"));
                    agree_from = g + 1;
                }
            }
            sweep(r, format!("n_g_{rr} formula, g = 1..{}", opts.max_genus), Provenance::Formula, opts.max_genus, failures);
            r.result(&format!("n_g_{rr}_agrees_from_genus"), agree_from);
        }
        Suite::Tree => {
            let top = opts.max_genus.min(12);
            let mut failures = Vec::new();
            let mut edges = 0;
            for g in 0..=top {
                let tree = build_ordinarization_tree(g, &opts.enum_opts)?;
                let gens: Vec<_> = tree.nodes.iter().map(|s| s.minimal_generators()).collect();
                for (c, p) in tree.parent.iter().enumerate() {
                    let Some(p) = *p else { continue };
                    edges += 1;
                    let (ce, pe) = (&gens[c].effective_generators, &gens[p].effective_generators);
                    let f = tree.nodes[c].frobenius() as usize;
                    if !(ce.iter().all(|n| pe.contains(n)) && pe.contains(&f) && !ce.contains(&f)) {
                        failures.push(format!("g={g}: {:?}", tree.nodes[c]));
                    }
                }
                for s in &tree.nodes {
                    if children_h0_count(s) > s.multiplicity() / 2 {
                        failures.push(format!("g={g}: h0 bound at {s}"));
                    }
                }
            }
            sweep(r, format!("effectivity drops along tree edges, g <= {top}"), Provenance::BruteForce, edges, failures);
            let sharp = NumericalSemigroup::from_generators(&[7, 8, 10, 11, 12, 13])?;
            r.compare("h=0 children of <7,8,10,11,12,13>", Provenance::Formula, 3, children_h0_count(&sharp));
            for k in 2..=6 {
                let t = tk_family(k)?;
                let h = t.minimal_generators().effectivity();
                let kids = children_in_tree(&t).len();
                r.check(format!("T_{k} has h = 4 and children"), Provenance::CrossCheck, "h=4, children>0", format!("h={h}, children={kids}"), h == 4 && kids > 0);
            }
        }
        Suite::TwoGen => {
            let pairs = coprime_pairs(60);
            let failures: Vec<String> = pairs
                .par_iter()
                .filter_map(|&(a, b)| {
                    let g = two_gen_genus(a, b);
                    let sum = r_two_gen(a, b).ok()?;
                    let simplex = count_right_simplex(&RightSimplex::new(vec![a, b], g).ok()?) - 1;
                    let scan = members_up_to(&[a as usize, b as usize], g as usize).ok()? as u64;
                    let (lo, hi) = r_two_gen_bounds(a, b).ok()?;
                    let v = int(sum as i64);
                    (sum as u128 != simplex || sum != scan || v < lo || v > hi)
                        .then(|| format!("({a},{b}): sum {sum}, simplex {simplex}, scan {scan}"))
                })
                .collect();
            sweep(r, "r(<a,b>) floor sum = simplex - 1 = scan, within bounds, b <= 60".into(), Provenance::CrossCheck, pairs.len(), failures);
        }
        Suite::Qa => {
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=12u64 {
                let q = fit_q_a(a)?;
                if let Some(known) = known_q_a(a) {
                    cases += 1;
                    if known != q {
                        failures.push(format!("a={a}: fitted rows differ from the listed ones"));
                    }
                }
                let p = q_a_period(a);
                for b in (a + 1..=a + 6 * p).filter(|b| b.gcd(&a) == 1) {
                    cases += 1;
                    let (fit, direct) = (q.eval_count(b as i64)?, r_two_gen(a, b)?);
                    if fit != direct {
                        failures.push(format!("Q_{a}({b}) = {fit}, r = {direct}"));
                    }
                }
            }
            sweep(r, "Q_a fits, a = 2..12".into(), Provenance::Formula, cases, failures);
        }
        Suite::Barlow => {
            let pairs = coprime_pairs(25);
            let cases = pairs.iter().map(|(a, b)| (3 * a * b + 1) as usize).sum();
            let failures: Vec<String> = pairs
                .par_iter()
                .flat_map_iter(|&(a, b)| {
                    let s = NumericalSemigroup::from_generators(&[a as usize, b as usize]).expect("coprime");
                    (0..=3 * a * b).filter_map(move |n| {
                        let f = barlow_popoviciu(a, b, n).ok()?;
                        let brute = s.factorizations(n as usize).len() as u64;
                        (f != brute).then(|| format!("({a},{b},{n}): {f} vs {brute}"))
                    })
                })
                .collect();
            sweep(r, "Barlow-Popoviciu = factorization count, b <= 25, n <= 3ab".into(), Provenance::Formula, cases, failures);
        }
        Suite::Supersym => {
            let example = supersym_r(&supersym_spec(&[3, 5, 7, 11])?);
            r.compare("r for factors 3,5,7,11", Provenance::Formula, 228, example);
            let sets = factor_sets(opts.max_product);
            let failures: Vec<String> = sets.par_iter().filter_map(|f| check_supersym(f).err()).collect();
            sweep(
                r,
                format!("nested sum = scan and binomial = factorization count, A <= {}", opts.max_product),
                Provenance::Formula,
                sets.len(),
                failures,
            );
        }
        Suite::Interval => {
            let cases: Vec<(u64, u64)> = (2..=100u64).flat_map(|a| (1..a.saturating_sub(1)).map(move |x| (a, x))).collect();
            let failures: Vec<String> = cases
                .par_iter()
                .filter_map(|&(a, x)| {
                    let spec = interval_spec(a, x).ok()?;
                    let f = interval_r(a, x).ok()?;
                    let scan = members_up_to(&spec.generators(), spec.genus as usize).ok()? as u64;
                    (f != scan).then(|| format!("({a},{x}): {f} vs {scan}"))
                })
                .collect();
            sweep(r, "interval r formula = scan, a <= 100".into(), Provenance::Formula, cases.len(), failures);
        }
        Suite::Simplex => {
            let mut failures = Vec::new();
            let mut cases = 0;
            for w1 in 1..=10u64 {
                for w2 in 1..=10u64 {
                    for bound in (0..=200u64).step_by(7) {
                        cases += 1;
                        let fast = count_right_simplex(&RightSimplex::new(vec![w1, w2], bound)?);
                        let slow: u128 = (0..=bound / w2).map(|y| ((bound - y * w2) / w1 + 1) as u128).sum();
                        if fast != slow {
                            failures.push(format!("({w1},{w2}) N={bound}"));
                        }
                    }
                }
            }
            sweep(r, "right simplex count = row sums".into(), Provenance::CrossCheck, cases, failures);
        }
        Suite::Systems => {
            let q = pstar_quasipolynomial();
            let mut failures = Vec::new();
            for g in 2..=40 {
                let (c, f) = (count_system(&pstar_system(), g)?, q.eval_count(g)?);
                if c as u64 != f {
                    failures.push(format!("g={g}: {c} vs {f}"));
                }
            }
            sweep(r, "P* count = closed form, g = 2..40".into(), Provenance::Formula, 39, failures);
            let mut failures = Vec::new();
            let systems = [pstar_system(), ordinarization_one_system(), ordinarization_one_doubled_system()];
            for sys in &systems {
                for g in 0..=opts.max_genus.min(20) as i64 {
                    let (c, b) = (count_system(sys, g)?, count_system_in_box(sys, g, -2, 2 * g + 2));
                    if c != b {
                        failures.push(format!("g={g}: {c} vs box {b}"));
                    }
                }
            }
            let cases = systems.len() * (opts.max_genus.min(20) + 1);
            sweep(r, "system count = box enumeration".into(), Provenance::BruteForce, cases, failures);
        }
        Suite::Monotonicity => {
            let c = census(opts.max_genus + 1, &opts.enum_opts)?;
            let mut failures = Vec::new();
            let mut cases = 0;
            for g in 0..=opts.max_genus {
                for rr in 0..=g / 2 {
                    cases += 1;
                    if c.n_g_r(g, rr) > c.n_g_r(g + 1, rr) {
                        failures.push(format!("n_{{{g},{rr}}} = {} > {}", c.n_g_r(g, rr), c.n_g_r(g + 1, rr)));
                    }
                }
            }
            sweep(r, format!("n_g_r <= n_g+1_r, g <= {}", opts.max_genus), Provenance::BruteForce, cases, failures);
        }
        Suite::Ratio => {
            let triples: Vec<(u64, u64, u64)> = (40..=60u64)
                .flat_map(|a| (a + 1..=60).flat_map(move |b| (b + 1..=60).map(move |c| (a, b, c))))
                .filter(|&(a, b, c)| a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1)
                .collect();
            let worst = triples
                .par_iter()
                .map(|&(a, b, c)| dim3_ratio(a, b, c).map(|x| (x - rat(1, 6)).abs()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap_or_else(|| int(0));
            let pass = worst < opts.ratio_tol;
            r.check(
                format!("max |r/g - 1/6| over {} triples in [40,60]", triples.len()),
                Provenance::Formula,
                format!("< {}", opts.ratio_tol),
                &worst,
                pass,
            );
        }
    }
    Ok(())
}

fn factor_sets(max_product: u64) -> Vec<Vec<u64>> {
    fn extend(cur: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        let start = cur.last().map_or(2, |&l| l + 1);
        for next in start..=max / product {
            if cur.is_empty() && next * (next + 1) > max {
                break;
            }
            if cur.iter().all(|&c| c.gcd(&next) == 1) {
                cur.push(next);
                extend(cur, product * next, max, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_product, &mut out);
    out
}

fn check_supersym(factors: &[u64]) -> std::result::Result<(), String> {
    let spec = supersym_spec(factors).map_err(|e| e.to_string())?;
    let s = spec.semigroup().map_err(|e| e.to_string())?;
    let nested = supersym_r(&spec);
    let scan = s.count_members_between(1, spec.genus as usize) as u64;
    if nested != scan {
        return Err(format!("{factors:?}: nested {nested}, scan {scan}"));
    }
    let counts = s.denumerants(spec.genus as usize);
    let mut err = None;
    for_each_normal_factorization(&spec, spec.genus, |coords, value| {
        let f = supersym_factor_count(&spec, &FactorizationVector(coords.to_vec()));
        if err.is_none() && f != counts[value as usize] as u128 {
            err = Some(format!("{factors:?} at {value}: binomial {f}, count {}", counts[value as usize]));
        }
    });
    err.map_or(Ok(()), Err)
}
