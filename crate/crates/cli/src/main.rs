use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qovar::algebra::Rational;
use qovar::catalog::{
    self, build_catalog_with, cache, catalog_checks, recipe_checks, resolve_name, transvectant_oracle_checks,
    BuildEvent, BuildOptions, Catalog,
};
use qovar::check::Check;
use qovar::hilbert;
use qovar::minimality::verify_table;
use qovar::normalforms::{
    evaluate_by_chain, evaluate_covariant, g_abcd_identities, specialize_params, NormalForm,
};
use qovar::poly::Param;
use qovar::relations::{separation_checks, sources_checks, syzygy_checks, syzygy_diagnostics};

/// Covariants of the four-qubit form: catalog, Hilbert series and checks.
#[derive(Parser)]
#[command(name = "qovar", version)]
struct Cli {
    /// Catalog cache directory.
    #[arg(long, env = "QOVAR_CACHE", global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for catalog builds and minimality cells.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or inspect the catalog of fundamental covariants.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Evaluate a covariant on a normal form.
    Eval {
        symbol: String,
        state: String,
        /// Fix a parameter, e.g. `--set a=1/2`.
        #[arg(long = "set", value_name = "P=Q")]
        set: Vec<String>,
        /// Substitute into the catalog polynomial instead of rerunning the
        /// recipe chain on the normal form.
        #[arg(long)]
        via_catalog: bool,
    },
    /// Hilbert series of the covariant algebra.
    #[command(subcommand)]
    Hilbert(HilbertCmd),
    /// Run verifications; prints one PASS/FAIL line per check.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Compute (or load) every generator up to the given degree.
    Build {
        #[arg(long, default_value_t = 12)]
        dmax: u8,
    },
    /// Print one generator or alias.
    Show { symbol: String },
    /// Generator counts per degree and shape.
    Counts {
        #[arg(long, default_value_t = 12)]
        dmax: u8,
    },
}

#[derive(Subcommand)]
enum HilbertCmd {
    /// Dimension c_{d;mu} of the covariants of degree d and order mu.
    Dim { d: u32, mu1: u32, mu2: u32, mu3: u32, mu4: u32 },
    /// Series coefficients up to t^tmax.
    Series {
        #[arg(long)]
        tmax: u32,
        /// Set u1 = u2 = u3 = u4 = u.
        #[arg(long)]
        diagonal: bool,
    },
    /// Krull dimension from the pole order at t = 1.
    Krull,
    /// Cell-by-cell comparison of the printed P/Q with the series.
    ComparePq {
        #[arg(long)]
        tmax: u32,
    },
}

#[derive(Args)]
struct MinimalityArgs {
    #[arg(long, default_value_t = 6)]
    dmax: u8,
    /// Allow degrees above 6, which take minutes to hours.
    #[arg(long)]
    expensive: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Syzygies,
    Separation,
    Sources,
    Minimality(MinimalityArgs),
    AppendixC,
    Recipes,
    All(MinimalityArgs),
}

#[derive(Debug)]
struct UsageError(String);

type Outcome = Result<bool, UsageError>;

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

struct Context {
    cache: Option<PathBuf>,
    jobs: Option<usize>,
}

impl Context {
    fn catalog(&self, dmax: u8) -> Result<Catalog, UsageError> {
        let opts = BuildOptions { cache: self.cache.as_deref(), jobs: self.jobs };
        build_catalog_with(dmax, opts, |e| match e {
            BuildEvent::LoadedFromCache { degree, entries } => {
                eprintln!("degree {degree}: loaded {entries} entries from cache")
            }
            BuildEvent::Computed { degree, entries, terms } => {
                eprintln!("degree {degree}: computed {entries} entries, {terms} terms")
            }
        })
        .map_err(usage)
    }

    /// Highest degree with every layer present in the cache.
    fn cached_degree(&self) -> u8 {
        let Some(dir) = &self.cache else { return 1 };
        (2..=12u8).take_while(|d| cache::degree_file(dir, *d).exists()).last().unwrap_or(1)
    }
}

fn print_checks(checks: &[Check]) -> bool {
    for c in checks {
        println!("{c}");
    }
    qovar::check::all_passed(checks)
}

fn print_notes(checks: &[Check]) {
    for c in checks {
        let verdict = if c.passed { "holds" } else { "fails" };
        println!("note {}: {verdict}", c.name);
    }
}

fn parse_set(s: &str) -> Result<(Param, Rational), UsageError> {
    let (name, value) = s.split_once('=').ok_or_else(|| UsageError(format!("expected P=VALUE, got {s:?}")))?;
    let p = Param::ALL
        .into_iter()
        .find(|p| p.letter().to_string() == name.trim())
        .ok_or_else(|| UsageError(format!("unknown parameter {name:?}; expected a, b, c or d")))?;
    Ok((p, value.trim().parse().map_err(usage)?))
}

fn run_catalog(ctx: &Context, cmd: CatalogCmd) -> Outcome {
    match cmd {
        CatalogCmd::Build { dmax } => {
            let cat = ctx.catalog(dmax)?;
            println!("{} generators", cat.len());
            Ok(true)
        }
        CatalogCmd::Show { symbol } => {
            let (k, sym) = resolve_name(&symbol).map_err(usage)?;
            let cat = ctx.catalog(sym.degree.max(1))?;
            let p = cat.require(&sym).map_err(usage)?;
            if k.is_one() {
                println!("{p}");
            } else {
                println!("{}", p.to_rational().scale(&k));
            }
            Ok(true)
        }
        CatalogCmd::Counts { dmax } => {
            let cat = ctx.catalog(dmax)?;
            println!("d shape count published");
            let published = catalog::published_counts();
            for ((d, shape), n) in cat.generator_counts() {
                let p = published.get(&(d, shape)).copied().unwrap_or(0);
                let shape: String = shape.iter().map(|m| m.to_string()).collect();
                println!("{d} {shape} {n} {p}");
            }
            println!("{} generators", cat.len());
            Ok(print_checks(&catalog_checks(&cat)))
        }
    }
}

fn run_eval(ctx: &Context, symbol: &str, state: &str, set: &[String], via_catalog: bool) -> Outcome {
    let form: NormalForm = state.parse().map_err(usage)?;
    let values: Vec<(Param, Rational)> = set.iter().map(|s| parse_set(s)).collect::<Result<_, _>>()?;
    let p = if via_catalog {
        let (_, sym) = resolve_name(symbol).map_err(usage)?;
        let cat = ctx.catalog(sym.degree.max(1))?;
        evaluate_covariant(&cat, symbol, form).map_err(usage)?
    } else {
        evaluate_by_chain(symbol, form).map_err(usage)?
    };
    println!("{}", specialize_params(&p, &values));
    Ok(true)
}

fn run_hilbert(cmd: HilbertCmd) -> Outcome {
    let check_tmax = |t: u32| {
        if t > hilbert::MAX_TMAX {
            Err(UsageError(format!("--tmax is limited to {}", hilbert::MAX_TMAX)))
        } else {
            Ok(t)
        }
    };
    match cmd {
        HilbertCmd::Dim { d, mu1, mu2, mu3, mu4 } => {
            println!("{}", hilbert::covariant_dimension(d, [mu1, mu2, mu3, mu4]));
        }
        HilbertCmd::Series { tmax, diagonal } => {
            let tmax = check_tmax(tmax)?;
            if diagonal {
                for (d, c) in hilbert::diagonal_series_fast(tmax).iter().enumerate() {
                    println!("t^{d}: {}", hilbert::render_u_poly(c));
                }
            } else {
                for (d, p) in hilbert::covariant_series(tmax).iter() {
                    println!("t^{d}: {p}");
                }
            }
        }
        HilbertCmd::Krull => {
            let r = hilbert::krull_analysis(hilbert::KRULL_TMAX);
            println!("krull dimension {}", hilbert::krull_dimension());
            println!("order of (1 - t) in Q(t, t): {}", r.denominator_order);
            println!(
                "numerator h(t, t) Q(t, t): degree {}, value {} at t = 1, order {} at t = 1",
                r.numerator.len() - 1,
                r.numerator.iter().sum::<i128>(),
                r.numerator_order
            );
            println!(
                "printed P(t, t): order {} at t = 1, pole order {}",
                r.printed_numerator_order,
                r.printed_pole_order()
            );
        }
        HilbertCmd::ComparePq { tmax } => {
            print!("{}", hilbert::compare_with_printed_pq(check_tmax(tmax)?));
        }
    }
    Ok(true)
}

fn verify_syzygies(ctx: &Context) -> Outcome {
    let cat = ctx.catalog(5)?;
    let ok = print_checks(&syzygy_checks(&cat, 5).map_err(usage)?);
    print_notes(&syzygy_diagnostics(&cat).map_err(usage)?);
    Ok(ok)
}

fn verify_sources(ctx: &Context) -> Outcome {
    let cat = ctx.catalog(4)?;
    Ok(print_checks(&sources_checks(&cat).map_err(usage)?))
}

fn verify_separation(ctx: &Context) -> Outcome {
    let cat = ctx.catalog(6)?;
    Ok(print_checks(&separation_checks(&cat).map_err(usage)?))
}

fn verify_minimality(ctx: &Context, args: &MinimalityArgs) -> Outcome {
    if args.dmax > 6 && !args.expensive {
        return Err(UsageError(format!("--dmax {} needs --expensive", args.dmax)));
    }
    let cat = ctx.catalog(args.dmax)?;
    println!("d mu dim reducible new_needed new_supplied");
    let reports = verify_table(args.dmax, &cat).map_err(usage)?;
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(|r| r.ok()))
}

fn verify_appendix_c(ctx: &Context) -> Outcome {
    let checks = if ctx.cached_degree() == 12 {
        println!("route: substitution into the degree-12 catalog");
        let cat = ctx.catalog(12)?;
        g_abcd_identities(&|s| evaluate_covariant(&cat, s, NormalForm::Gabcd))
    } else {
        println!("route: recipe chains on G_abcd");
        g_abcd_identities(&|s| evaluate_by_chain(s, NormalForm::Gabcd))
    };
    Ok(print_checks(&checks.map_err(usage)?))
}

fn verify_recipes() -> Outcome {
    Ok(print_checks(&recipe_checks()))
}

fn verify_all(ctx: &Context, args: &MinimalityArgs) -> Outcome {
    let mut ok = true;
    println!("== recipes");
    ok &= verify_recipes()?;
    println!("== catalog");
    let cat = ctx.catalog(args.dmax.max(6))?;
    ok &= print_checks(&catalog_checks(&cat));
    println!("== transvectants");
    ok &= print_checks(&transvectant_oracle_checks(&cat, 4, 4));
    println!("== separation");
    ok &= print_checks(&separation_checks(&cat).map_err(usage)?);
    println!("== syzygies");
    ok &= print_checks(&syzygy_checks(&cat, 5).map_err(usage)?);
    print_notes(&syzygy_diagnostics(&cat).map_err(usage)?);
    println!("== sources");
    ok &= print_checks(&sources_checks(&cat).map_err(usage)?);
    println!("== hilbert");
    ok &= print_checks(&hilbert::series_checks());
    println!("== minimality");
    ok &= verify_minimality(ctx, args)?;
    println!("== appendix-c");
    ok &= verify_appendix_c(ctx)?;
    Ok(ok)
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().map_err(usage)?;
    }
    let ctx = Context { cache: cli.cache, jobs: cli.jobs };
    match cli.command {
        Command::Catalog(cmd) => run_catalog(&ctx, cmd),
        Command::Eval { symbol, state, set, via_catalog } => run_eval(&ctx, &symbol, &state, &set, via_catalog),
        Command::Hilbert(cmd) => run_hilbert(cmd),
        Command::Verify(cmd) => match cmd {
            VerifyCmd::Syzygies => verify_syzygies(&ctx),
            VerifyCmd::Separation => verify_separation(&ctx),
            VerifyCmd::Sources => verify_sources(&ctx),
            VerifyCmd::Minimality(args) => verify_minimality(&ctx, &args),
            VerifyCmd::AppendixC => verify_appendix_c(&ctx),
            VerifyCmd::Recipes => verify_recipes(),
            VerifyCmd::All(args) => verify_all(&ctx, &args),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
