use std::fs;
use std::path::Path;
use std::time::Instant;

use ordinarization::families::{
    interval_r, interval_spec, n_g_1_formula, n_g_1_quasipolynomial, n_g_2_formula, n_g_2_quasipolynomial,
    fit_q_a, known_q_a, q_a_period, r_two_gen, r_two_gen_bounds, supersym_r, supersym_spec, two_gen_genus,
};
use ordinarization::lattice::{
    count_right_simplex, count_system, fit_quasipolynomial, pstar_quasipolynomial, LinearSystem,
    QuasiPolynomial, RightSimplex,
};
use ordinarization::{
    build_ordinarization_tree, census, n_g_r_tuples, ordinarization_number, EnumOptions, Error,
    NumericalSemigroup, Result,
};

use crate::export;
use crate::report::{Provenance, RunReport};

/// Largest conductor for which commands build the semigroup to scan its members.
const SCAN_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Json,
}

/// Builds the tree and returns the report together with the rendered export.
pub fn tree(genus: usize, format: TreeFormat, opts: &EnumOptions) -> Result<(RunReport, String)> {
    let mut r = RunReport::new("tree");
    r.param("genus", genus).param("format", if format == TreeFormat::Dot { "dot" } else { "json" });
    let tree = r.time("build", || build_ordinarization_tree(genus, opts))?;
    let text = match format {
        TreeFormat::Dot => export::to_dot(&tree),
        TreeFormat::Json => export::to_json(&tree),
    };
    r.result("nodes", tree.len());
    r.result("levels", tree.level_counts.clone());
    Ok((r, text))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Formula,
    Both,
}

fn closed_form(genus: usize, ord: usize) -> Option<Result<u64>> {
    match ord {
        _ if 2 * ord > genus => Some(Ok(0)),
        0 => Some(Ok(1)),
        1 => Some(Ok(n_g_1_formula(genus as u64))),
        2 => Some(n_g_2_formula(genus as u64)),
        _ => None,
    }
}

pub fn count(genus: usize, ord: Option<usize>, method: Method, opts: &EnumOptions) -> Result<RunReport> {
    let mut r = RunReport::new("count");
    r.param("genus", genus);
    if let Some(o) = ord {
        r.param("ord", o);
    }
    r.param("method", format!("{method:?}").to_lowercase());
    let Some(ord) = ord else {
        if method == Method::Formula {
            return Err(Error::InvalidArgument("the full level vector needs --method brute".into()));
        }
        let c = r.time("census", || census(genus, opts))?;
        r.result("levels", c.levels[genus].clone());
        r.result("total", c.total(genus));
        return Ok(r);
    };
    let label = format!("n_{{{genus},{ord}}}");
    let formula = match method {
        Method::Brute => None,
        _ => Some(closed_form(genus, ord).ok_or_else(|| {
            Error::InvalidArgument(format!("no closed form for ordinarization number {ord}; use --method brute"))
        })??),
    };
    let brute = match method {
        Method::Formula => None,
        _ => {
            let tree = r.time("census", || census(genus, opts))?.n_g_r(genus, ord);
            if genus <= ordinarization::MAX_TUPLE_GENUS {
                let tuples = r.time("tuples", || n_g_r_tuples(genus, ord))?;
                r.compare(format!("{label} tree vs tuples"), Provenance::CrossCheck, tree, tuples);
            }
            Some(tree)
        }
    };
    if let (Some(f), Some(b)) = (formula, brute) {
        r.compare(label.clone(), Provenance::Formula, f, b);
    }
    r.result(&label, formula.or(brute).expect("some method ran"));
    Ok(r)
}

pub fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| Error::InvalidArgument(format!("`{t}`: {e}"))))
        .collect()
}

pub fn ord(gens: &[u64]) -> Result<RunReport> {
    let mut r = RunReport::new("ord");
    let list: Vec<String> = gens.iter().map(ToString::to_string).collect();
    r.param("gens", list.join(","));
    let as_usize: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
    let s = NumericalSemigroup::from_generators(&as_usize)?;
    let data = s.minimal_generators();
    r.result("genus", s.genus())
        .result("frobenius", s.frobenius())
        .result("multiplicity", s.multiplicity())
        .result("embedding_dimension", data.embedding_dimension())
        .result("minimal_generators", data.minimal_generators.clone())
        .result("effectivity", data.effectivity())
        .result("effective_generators", data.effective_generators.clone())
        .result("ordinarization_number", ordinarization_number(&s));
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    TwoGen { a: u64, b: u64 },
    Supersym { factors: Vec<u64> },
    Interval { a: u64, x: u64 },
}

fn scan(gens: &[u64], bound: u64) -> Result<u64> {
    let gens: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
    Ok(NumericalSemigroup::from_generators(&gens)?.count_members_between(1, bound as usize) as u64)
}

pub fn family(f: &Family) -> Result<RunReport> {
    let mut r = RunReport::new("family");
    match f {
        Family::TwoGen { a, b } => {
            let (a, b) = (*a, *b);
            r.param("kind", "twogen").param("a", a).param("b", b);
            let value = r_two_gen(a, b)?;
            let g = two_gen_genus(a, b);
            let (lo, hi) = r_two_gen_bounds(a, b)?;
            r.result("genus", g).result("r", value).result("lower_bound", lo.to_string()).result("upper_bound", hi.to_string());
            let simplex = count_right_simplex(&RightSimplex::new(vec![a, b], g)?) - 1;
            r.compare("simplex points - 1", Provenance::CrossCheck, value, simplex);
            if a * b <= SCAN_LIMIT {
                r.compare("member scan", Provenance::BruteForce, value, scan(&[a, b], g)?);
            }
            let v = ordinarization::lattice::int(value as i64);
            r.check("bounds", Provenance::Formula, format!("[{lo}, {hi}]"), value, lo <= v && v <= hi);
        }
        Family::Supersym { factors } => {
            let list: Vec<String> = factors.iter().map(ToString::to_string).collect();
            r.param("kind", "supersym").param("factors", list.join(","));
            let spec = supersym_spec(factors)?;
            let value = supersym_r(&spec);
            r.result("generators", spec.generators.clone())
                .result("frobenius", spec.frobenius)
                .result("genus", spec.genus)
                .result("r", value);
            if spec.frobenius as u64 <= SCAN_LIMIT {
                r.compare("member scan", Provenance::BruteForce, value, scan(&spec.generators, spec.genus)?);
            }
        }
        Family::Interval { a, x } => {
            let (a, x) = (*a, *x);
            r.param("kind", "interval").param("a", a).param("x", x);
            let spec = interval_spec(a, x)?;
            let value = interval_r(a, x)?;
            r.result("n", spec.n).result("frobenius", spec.frobenius).result("genus", spec.genus).result("r", value);
            if spec.frobenius <= SCAN_LIMIT {
                let gens: Vec<u64> = (a..=a + x).collect();
                r.compare("member scan", Provenance::BruteForce, value, scan(&gens, spec.genus)?);
            }
        }
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitFamily {
    Ng1,
    Ng2,
    Qa(u64),
}

fn compare_rows(r: &mut RunReport, fitted: &QuasiPolynomial, known: &QuasiPolynomial) {
    for rho in 0..fitted.period() {
        let show = |q: &QuasiPolynomial| {
            q.row(rho).map_or("n/a".to_string(), |row| {
                let cs: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("[{}]", cs.join(", "))
            })
        };
        r.compare(format!("residue {rho} coefficients"), Provenance::Formula, show(known), show(fitted));
    }
}

pub fn fit(family: FitFamily, from: Option<u64>, to: Option<u64>) -> Result<RunReport> {
    let mut r = RunReport::new("fit");
    let fitted = match family {
        FitFamily::Ng1 | FitFamily::Ng2 => {
            let (rr, degree, period, known) = match family {
                FitFamily::Ng1 => (1, 2, 2, n_g_1_quasipolynomial()),
                _ => (2, 4, 12, n_g_2_quasipolynomial()),
            };
            let from = from.unwrap_or(1);
            let to = to.unwrap_or(if rr == 1 { 12 } else { 72 });
            r.param("family", format!("ng{rr}")).param("from", from).param("to", to);
            let samples = r.time("samples", || {
                (from..=to).map(|g| Ok((g as i64, n_g_r_tuples(g as usize, rr)? as i64))).collect::<Result<Vec<_>>>()
            })?;
            let q = fit_quasipolynomial(&samples, degree, period)?;
            compare_rows(&mut r, &q, &known);
            q
        }
        FitFamily::Qa(a) => {
            r.param("family", "qa").param("a", a).param("period", q_a_period(a));
            let q = fit_q_a(a)?;
            if let Some(known) = known_q_a(a) {
                compare_rows(&mut r, &q, &known);
            }
            q
        }
    };
    r.result("degree", fitted.degree()).result("period", fitted.period()).result("quasipolynomial", fitted.to_string());
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Pstar,
}

pub fn count_system_file(path: &Path, from: i64, to: i64, expect: Option<Expectation>) -> Result<RunReport> {
    let mut r = RunReport::new("count-system");
    r.param("file", path.display().to_string()).param("from", from).param("to", to);
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    let sys = LinearSystem::parse(&text)?;
    r.param("dimension", sys.dimension());
    let closed = expect.map(|Expectation::Pstar| pstar_quasipolynomial());
    let start = Instant::now();
    let mut counts = Vec::new();
    for g in from..=to {
        let c = count_system(&sys, g)?;
        counts.push(c.to_string());
        if let Some(q) = &closed {
            r.compare(format!("g = {g}"), Provenance::Formula, q.eval(g)?, c);
        }
    }
    r.record_time("count", start.elapsed());
    if from == to {
        r.result("count", counts[0].clone());
    } else {
        r.result("counts", counts);
    }
    Ok(r)
}

pub fn bench(genus: usize, opts: &EnumOptions) -> Result<RunReport> {
    let mut r = RunReport::new("bench");
    r.param("genus", genus).param("threads", rayon::current_num_threads());
    let c = r.time("census", || census(genus, opts))?;
    r.result("total", c.total(genus));
    let tuple_genus = genus.min(ordinarization::MAX_TUPLE_GENUS);
    let t = r.time("tuples r=2", || n_g_r_tuples(tuple_genus, 2))?;
    r.result(&format!("n_{{{tuple_genus},2}}"), t);
    let tree_genus = genus.min(14);
    let tree = r.time(&format!("ordinarization tree g={tree_genus}"), || build_ordinarization_tree(tree_genus, opts))?;
    r.result("tree_nodes", tree.len());
    let sys = ordinarization::lattice::pstar_system();
    let pts: u128 = r.time("P* g=2..40", || (2..=40).map(|g| count_system(&sys, g)).sum::<Result<u128>>())?;
    r.result("pstar_points", pts.to_string());
    Ok(r)
}
