use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use ordinarization::{EnumOptions, DEFAULT_NODE_CAP};
use ordinarization_cli::commands::{self, Expectation, Family, FitFamily, Method, TreeFormat};
use ordinarization_cli::report::RunReport;
use ordinarization_cli::verify::{self, VerifyOptions};

#[derive(Parser)]
#[command(name = "ordz", version, about = "Numerical semigroups and ordinarization numbers")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Abort enumerations with more semigroups than this at the deepest genus.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: u64,
    /// Tree export format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Dot)]
    format: Format,
    /// Write the export (tree) or the report (other commands) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Formula,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Export the ordinarization tree of one genus.
    Tree { genus: usize },
    /// Count genus-g semigroups by ordinarization number.
    Count {
        genus: usize,
        #[arg(long)]
        ord: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Invariants of the semigroup generated by a comma-separated list.
    Ord { gens: String },
    /// Ordinarization number of a structured family.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Fit a quasipolynomial to counting data.
    #[command(subcommand)]
    Fit(FitCmd),
    /// Run property suites.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_genus: usize,
        /// Comma list of suites, or `all`.
        #[arg(long, default_value = "all")]
        suites: String,
        /// Largest factor product in the supersymmetric suite.
        #[arg(long, default_value_t = 20_000)]
        max_product: u64,
        /// Tolerance for the dimension-3 ratio, as p/q.
        #[arg(long, default_value = "1/50")]
        ratio_tol: BigRational,
    },
    /// Count integer points of a linear system file.
    CountSystem {
        file: PathBuf,
        /// Single value of g.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        genus: Option<i64>,
        #[arg(long, requires = "to")]
        from: Option<i64>,
        #[arg(long, requires = "from")]
        to: Option<i64>,
        /// Compare against a known closed form.
        #[arg(long, value_enum)]
        expect: Option<ExpectArg>,
    },
    /// Time the main enumerators.
    Bench {
        #[arg(long, default_value_t = 25)]
        genus: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Pstar,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// <a, b> with coprime 2 <= a < b.
    Twogen { a: u64, b: u64 },
    /// Pairwise-coprime factors a_1 < ... < a_n, comma-separated.
    Supersym { factors: String },
    /// <a, a+1, ..., a+x>.
    Interval { a: u64, x: u64 },
}

#[derive(Subcommand)]
enum FitCmd {
    /// n_{g,1} from tuple counts.
    Ng1 {
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
    /// n_{g,2} from tuple counts.
    Ng2 {
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
    /// r(<a, b>) as a function of b.
    Qa { a: u64 },
}

fn run(cli: Cli) -> ordinarization::Result<(RunReport, Option<String>)> {
    let opts = EnumOptions { node_cap: cli.global.node_cap };
    let report = match cli.command {
        Command::Tree { genus } => {
            let format = match cli.global.format {
                Format::Dot => TreeFormat::Dot,
                Format::Json => TreeFormat::Json,
            };
            let (r, text) = commands::tree(genus, format, &opts)?;
            return Ok((r, Some(text)));
        }
        Command::Count { genus, ord, method } => {
            let method = match method {
                MethodArg::Brute => Method::Brute,
                MethodArg::Formula => Method::Formula,
                MethodArg::Both => Method::Both,
            };
            commands::count(genus, ord, method, &opts)?
        }
        Command::Ord { gens } => commands::ord(&commands::parse_list(&gens)?)?,
        Command::Family(f) => commands::family(&match f {
            FamilyCmd::Twogen { a, b } => Family::TwoGen { a, b },
            FamilyCmd::Supersym { factors } => Family::Supersym { factors: commands::parse_list(&factors)? },
            FamilyCmd::Interval { a, x } => Family::Interval { a, x },
        })?,
        Command::Fit(f) => match f {
            FitCmd::Ng1 { from, to } => commands::fit(FitFamily::Ng1, from, to)?,
            FitCmd::Ng2 { from, to } => commands::fit(FitFamily::Ng2, from, to)?,
            FitCmd::Qa { a } => commands::fit(FitFamily::Qa(a), None, None)?,
        },
        Command::Verify { max_genus, suites, max_product, ratio_tol } => {
            let suites = verify::parse_suites(&suites).map_err(ordinarization::Error::InvalidArgument)?;
            let vopts = VerifyOptions { max_genus, enum_opts: opts, max_product, ratio_tol };
            let mut r = RunReport::new("verify");
            verify::run(&mut r, &suites, &vopts)?;
            r
        }
        Command::CountSystem { file, genus, from, to, expect } => {
            let (from, to) = match (genus, from, to) {
                (Some(g), _, _) => (g, g),
                (None, Some(a), Some(b)) => (a, b),
                _ => return Err(ordinarization::Error::InvalidArgument("give --genus or --from/--to".into())),
            };
            commands::count_system_file(&file, from, to, expect.map(|ExpectArg::Pstar| Expectation::Pstar))?
        }
        Command::Bench { genus } => commands::bench(genus, &opts)?,
    };
    Ok((report, None))
}

fn emit(path: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global() {
        eprintln!("ordz: cannot start thread pool: {e}");
        return ExitCode::from(2);
    }
    let json = cli.global.json;
    let out = cli.global.out.clone();
    let (report, export) = match run(cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("ordz: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = if json { report.to_json() + "\n" } else { report.to_text() };
    let written = match export {
        Some(text) => emit(out.as_ref(), &text).and_then(|_| {
            if out.is_some() {
                std::io::stdout().write_all(rendered.as_bytes())
            } else {
                std::io::stderr().write_all(rendered.as_bytes())
            }
        }),
        None => emit(out.as_ref(), &rendered),
    };
    if let Err(e) = written {
        eprintln!("ordz: {e}");
        return ExitCode::from(2);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
