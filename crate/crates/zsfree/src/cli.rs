//! Command-line front end.
//!
//! One subcommand per capability: `count`, `expect`, `enumerate`, `support`,
//! `partitions`, `bounds`, `simulate`, `verify`. Every run emits one
//! [`OutputRecord`] (JSON by default, CSV with `--format csv`) on standard
//! output or into `--out <path>`. Exit codes: 0 on success, 1 when `verify`
//! finds a discrepancy, 2 on parameter-validation failure (diagnostic on
//! standard error).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational};

use crate::bounds::{
    self, e_prime_and_star, e_single_bound, e_subset_bound, kim_vu_coefficient, KimVuParams,
};
use crate::error::{Error, Result};
use crate::group::CyclicGroup;
use crate::montecarlo::{concentration_report, ExperimentConfig, LambdaGrid};
use crate::partition::{count_partitions, count_partitions_at_most, count_young_diagrams};
use crate::report::{format_f64, format_rational, OutputRecord};
use crate::sequence::brute_force_enumerate;
use crate::structure::{
    enumerate_structured, expectation_by_distinct, expectation_first_order, expectation_total,
    max_distinct_count, representation_count, support_map, Statistic,
};
use crate::subset::quantized_probability;

const DEFAULT_BRUTEFORCE_CAP: u64 = 14;

#[derive(Parser, Debug)]
#[command(
    name = "zsfree",
    version,
    about = "Exact counts, expectations and randomized validation of zero-sum free sequences over cyclic groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the emitted record.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the record to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact representation counts by distinct-element class.
    Count(CountArgs),
    /// Exact expectations under the Bernoulli subset model.
    Expect(ExpectArgs),
    /// List zero-sum free sequences of length n-1-k.
    Enumerate(EnumerateArgs),
    /// Support sets of the sequences and their weights.
    Support(SupportArgs),
    /// Partition and Young-diagram count tables.
    Partitions(PartitionsArgs),
    /// Tail-bound tables: polynomial concentration and Chernoff.
    Bounds(BoundsArgs),
    /// Seeded Monte Carlo trials with exact per-trial counting.
    Simulate(SimulateArgs),
    /// Cross-check the generator form against brute force and the count
    /// formula; exits 1 when a discrepancy is found.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    /// Only this distinct-element class (default: all classes).
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Args, Debug)]
struct ExpectArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    /// Inclusion probability: a rational like 3/10 or a decimal like 0.3,
    /// parsed exactly.
    #[arg(long, value_parser = parse_ratio_arg)]
    p: BigRational,
    /// Only this distinct-element class (default: all classes plus the
    /// total and its first-order form).
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateSource {
    Structured,
    Brute,
    Both,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long, value_enum, default_value_t = EnumerateSource::Structured)]
    source: EnumerateSource,
    /// Largest group order accepted for brute-force enumeration.
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
    bruteforce_cap: u64,
}

#[derive(Args, Debug)]
struct SupportArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
}

#[derive(Args, Debug)]
struct PartitionsArgs {
    /// Partition counts by exact total `--j` and distinct part sizes.
    #[arg(long)]
    q: bool,
    /// Cumulative partition counts with total at most `--k`.
    #[arg(long)]
    x: bool,
    /// Young-diagram counts with at most `--b` boxes and `--c` rows.
    #[arg(long)]
    y: bool,
    #[arg(long)]
    j: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    c: Option<u64>,
    /// Only this distinct count (default: every class up to the first
    /// provably-zero one).
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long, value_parser = parse_ratio_arg)]
    p: BigRational,
    /// Fix the statistic to one distinct-element class (default: total).
    #[arg(long)]
    d: Option<u64>,
    /// Comma-separated tail parameters for the polynomial bound (each > 1);
    /// default: ell*log(n) and 2*ell*log(n).
    #[arg(long)]
    lambda_grid: Option<String>,
    /// Comma-separated relative deviations for the Chernoff rows (each in
    /// (0,1), exact rationals); default: 1/10,1/5,1/2.
    #[arg(long)]
    chernoff_grid: Option<String>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long, value_parser = parse_ratio_arg)]
    p: BigRational,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Track one distinct-element class instead of the total.
    #[arg(long)]
    d: Option<u64>,
    /// Worker threads (0 = library default); results are identical for any
    /// value.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Comma-separated tail parameters for the polynomial bound rows.
    #[arg(long)]
    lambda_grid: Option<String>,
    /// Comma-separated relative deviations for the Chernoff rows.
    #[arg(long)]
    chernoff_grid: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Verify this single order (all k unless --k is given).
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, requires = "n")]
    k: Option<u64>,
    /// Sweep every order from 2 up to this bound instead.
    #[arg(long, conflicts_with_all = ["n", "k"])]
    n_max: Option<u64>,
    /// Largest group order accepted for the brute-force side.
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
    bruteforce_cap: u64,
}

/// Entry point used by the binary: parse, execute, emit, and return the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`run`] with injectable output streams, for tests.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            }
        }
    };
    match execute(&cli.command) {
        Ok((record, exit_code)) => {
            let rendered = match cli.format {
                Format::Json => {
                    let mut s = record.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => record.to_csv(),
            };
            match &cli.out {
                Some(path) => {
                    if let Err(io_err) = std::fs::write(path, rendered) {
                        let _ = writeln!(err, "error: cannot write {}: {io_err}", path.display());
                        return 2;
                    }
                }
                None => {
                    let _ = write!(out, "{rendered}");
                }
            }
            exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command) -> Result<(OutputRecord, i32)> {
    match command {
        Command::Count(args) => cmd_count(args).map(|r| (r, 0)),
        Command::Expect(args) => cmd_expect(args).map(|r| (r, 0)),
        Command::Enumerate(args) => cmd_enumerate(args).map(|r| (r, 0)),
        Command::Support(args) => cmd_support(args).map(|r| (r, 0)),
        Command::Partitions(args) => cmd_partitions(args).map(|r| (r, 0)),
        Command::Bounds(args) => cmd_bounds(args).map(|r| (r, 0)),
        Command::Simulate(args) => cmd_simulate(args).map(|r| (r, 0)),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_ratio_arg(s: &str) -> std::result::Result<BigRational, String> {
    parse_ratio(s).map_err(|e| e.to_string())
}

/// Exact rational from `a/b`, a decimal literal, or an integer.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad =
        |msg: &str| Error::InvalidParameter(format!("cannot parse {s:?} as a rational: {msg}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad("bad numerator"))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad("bad denominator"))?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let whole = if whole.is_empty() { "0" } else { whole };
        let negative = whole.starts_with('-');
        let whole = BigInt::from_str(whole).map_err(|_| bad("bad integer part"))?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional part"));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigInt::from_str(frac).map_err(|_| bad("bad fractional part"))?;
        let magnitude = whole.magnitude() * scale.magnitude() + frac.magnitude();
        let signed = if negative {
            -BigInt::from(magnitude)
        } else {
            BigInt::from(magnitude)
        };
        return Ok(BigRational::new(signed, scale));
    }
    let int = BigInt::from_str(s).map_err(|_| bad("bad integer"))?;
    Ok(BigRational::from(int))
}

fn parse_f64_grid(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|item| {
            f64::from_str(item.trim())
                .map_err(|_| Error::InvalidParameter(format!("cannot parse {item:?} as a float")))
        })
        .collect()
}

fn parse_ratio_grid(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(parse_ratio).collect()
}

fn cmd_count(args: &CountArgs) -> Result<OutputRecord> {
    let group = CyclicGroup::new(args.n)?;
    let mut record = OutputRecord::new("count", &["n", "k", "d", "representations"]);
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    let classes: Vec<u64> = match args.d {
        Some(d) => vec![d],
        None => (1..=max_distinct_count(args.k)).collect(),
    };
    for d in classes {
        let count = representation_count(group, args.k, d)?;
        record.push_row(vec![
            args.n.to_string(),
            args.k.to_string(),
            d.to_string(),
            count.to_string(),
        ]);
    }
    Ok(record)
}

fn cmd_expect(args: &ExpectArgs) -> Result<OutputRecord> {
    let group = CyclicGroup::new(args.n)?;
    let mut record = OutputRecord::new("expect", &["quantity", "d", "value"]);
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    record.set_parameter("p", format_rational(&args.p));
    match args.d {
        Some(d) => {
            let value = expectation_by_distinct(group, args.k, d, &args.p)?;
            record.push_row(vec![
                "expectation_by_distinct".into(),
                d.to_string(),
                format_rational(&value),
            ]);
        }
        None => {
            for d in 1..=max_distinct_count(args.k) {
                let value = expectation_by_distinct(group, args.k, d, &args.p)?;
                record.push_row(vec![
                    "expectation_by_distinct".into(),
                    d.to_string(),
                    format_rational(&value),
                ]);
            }
            let total = expectation_total(group, args.k, &args.p)?;
            record.push_row(vec![
                "expectation_total".into(),
                String::new(),
                format_rational(&total),
            ]);
            let (leading, correction) = expectation_first_order(group, args.k, &args.p)?;
            record.push_row(vec![
                "leading_term".into(),
                String::new(),
                format_rational(&leading),
            ]);
            record.push_row(vec![
                "correction_coefficient".into(),
                String::new(),
                format_rational(&correction),
            ]);
        }
    }
    Ok(record)
}

fn join_spaced<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<OutputRecord> {
    let group = CyclicGroup::new(args.n)?;
    let mut record = OutputRecord::new(
        "enumerate",
        &["source", "generator", "multipliers", "multiset", "distinct"],
    );
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    record.set_parameter("length", (args.n - 1).saturating_sub(args.k));

    let want_structured = matches!(
        args.source,
        EnumerateSource::Structured | EnumerateSource::Both
    );
    let want_brute = matches!(args.source, EnumerateSource::Brute | EnumerateSource::Both);
    if want_brute && args.n > args.bruteforce_cap {
        return Err(Error::InvalidParameter(format!(
            "brute-force enumeration is capped at n <= {} (got n = {}); raise --bruteforce-cap deliberately",
            args.bruteforce_cap, args.n
        )));
    }

    if want_structured {
        let e = enumerate_structured(group, args.k, true)?;
        record.set_parameter("representations", e.representation_count());
        record.set_parameter("distinct_multisets", e.distinct.len());
        record.set_parameter("collisions", e.collisions.len());
        for (config, multiset) in &e.pairs {
            record.push_row(vec![
                "structured".into(),
                config.generator.to_string(),
                join_spaced(&config.multipliers()),
                multiset.to_string(),
                multiset.distinct_count().to_string(),
            ]);
        }
    }
    if want_brute {
        let length = args.n - 1 - args.k;
        let sequences = brute_force_enumerate(group, length)?;
        record.set_parameter("bruteforce_multisets", sequences.len());
        for multiset in &sequences {
            record.push_row(vec![
                "brute".into(),
                String::new(),
                String::new(),
                multiset.to_string(),
                multiset.distinct_count().to_string(),
            ]);
        }
    }
    Ok(record)
}

fn cmd_support(args: &SupportArgs) -> Result<OutputRecord> {
    let group = CyclicGroup::new(args.n)?;
    let map = support_map(group, args.k)?;
    let mut record = OutputRecord::new("support", &["support", "weight", "distinct"]);
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    record.set_parameter("hyperedges", map.len());
    record.set_parameter("total_weight", map.total_weight());
    for (support, weight) in map.entries() {
        record.push_row(vec![
            join_spaced(support),
            weight.to_string(),
            support.len().to_string(),
        ]);
    }
    Ok(record)
}

fn cmd_partitions(args: &PartitionsArgs) -> Result<OutputRecord> {
    let selected = [args.q, args.x, args.y].iter().filter(|&&b| b).count();
    if selected != 1 {
        return Err(Error::InvalidParameter(
            "pass exactly one of --q, --x, --y".into(),
        ));
    }
    let need = |value: Option<u64>, flag: &str| {
        value.ok_or_else(|| Error::InvalidParameter(format!("missing required flag {flag}")))
    };
    // Classes to print: the requested one, or everything up to the first
    // class that is provably zero because d(d+1)/2 exceeds the total.
    let classes = |total: u64| -> Vec<u64> {
        match args.d {
            Some(d) => vec![d],
            None => (1..=max_distinct_count(total)).collect(),
        }
    };
    if args.q {
        let j = need(args.j, "--j")?;
        let mut record = OutputRecord::new("partitions", &["j", "d", "q"]);
        record.set_parameter("table", "q");
        record.set_parameter("j", j);
        for d in classes(j) {
            record.push_row(vec![
                j.to_string(),
                d.to_string(),
                count_partitions(j, d).to_string(),
            ]);
        }
        Ok(record)
    } else if args.x {
        let k = need(args.k, "--k")?;
        let mut record = OutputRecord::new("partitions", &["k", "d", "x"]);
        record.set_parameter("table", "x");
        record.set_parameter("k", k);
        for d in classes(k) {
            record.push_row(vec![
                k.to_string(),
                d.to_string(),
                count_partitions_at_most(k, d).to_string(),
            ]);
        }
        Ok(record)
    } else {
        let b = need(args.b, "--b")?;
        let c = need(args.c, "--c")?;
        let mut record = OutputRecord::new("partitions", &["b", "c", "d", "y"]);
        record.set_parameter("table", "y");
        record.set_parameter("b", b);
        record.set_parameter("c", c);
        for d in classes(b) {
            record.push_row(vec![
                b.to_string(),
                c.to_string(),
                d.to_string(),
                count_young_diagrams(b, c, d).to_string(),
            ]);
        }
        Ok(record)
    }
}

fn cmd_bounds(args: &BoundsArgs) -> Result<OutputRecord> {
    let group = CyclicGroup::new(args.n)?;
    let statistic = match args.d {
        Some(d) => Statistic::ByDistinct(d),
        None => Statistic::Total,
    };
    let dmax = max_distinct_count(args.k);
    let ell = match statistic {
        Statistic::Total => dmax,
        Statistic::ByDistinct(d) => d,
    };
    let mut record = OutputRecord::new(
        "bounds",
        &["quantity", "d", "i", "lambda", "exact", "approx"],
    );
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    record.set_parameter("p", format_rational(&args.p));
    record.set_parameter("ell", ell);
    record.set_parameter(
        "statistic",
        match statistic {
            Statistic::Total => "total".to_string(),
            Statistic::ByDistinct(d) => format!("d={d}"),
        },
    );

    record.push_row(vec![
        "kim_vu_coefficient".into(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        format_f64(kim_vu_coefficient(ell)),
    ]);

    for d in 1..=dmax {
        let value = e_single_bound(args.k, d, &args.p)?;
        record.push_row(vec![
            "e_single".into(),
            d.to_string(),
            String::new(),
            String::new(),
            format_rational(&value),
            String::new(),
        ]);
        for i in 1..=d {
            let value = e_subset_bound(args.k, d, i, &args.p)?;
            record.push_row(vec![
                "e_subset".into(),
                d.to_string(),
                i.to_string(),
                String::new(),
                format_rational(&value),
                String::new(),
            ]);
        }
    }

    let (e_prime, e_star) = e_prime_and_star(group, args.k, statistic, &args.p)?;
    record.push_row(vec![
        "e_prime".into(),
        String::new(),
        String::new(),
        String::new(),
        format_rational(&e_prime),
        String::new(),
    ]);
    record.push_row(vec![
        "e_star".into(),
        String::new(),
        String::new(),
        String::new(),
        format_rational(&e_star),
        String::new(),
    ]);

    let lambda_grid = match &args.lambda_grid {
        Some(s) => parse_f64_grid(s)?,
        None => LambdaGrid::default_for(args.n, ell).kim_vu,
    };
    for lambda in lambda_grid {
        let params = KimVuParams {
            ell,
            lambda,
            n: args.n,
            e_prime: bounds::ratio_to_f64(&e_prime),
            e_star: bounds::ratio_to_f64(&e_star),
        };
        let threshold = bounds::kim_vu_threshold(&params)?;
        let failure = bounds::kim_vu_failure_prob(&params)?;
        record.push_row(vec![
            "kim_vu_threshold".into(),
            String::new(),
            String::new(),
            format_f64(lambda),
            String::new(),
            format_f64(threshold),
        ]);
        record.push_row(vec![
            if bounds::is_vacuous(failure) {
                "kim_vu_failure_prob_vacuous".into()
            } else {
                "kim_vu_failure_prob".into()
            },
            String::new(),
            String::new(),
            format_f64(lambda),
            String::new(),
            format_f64(failure),
        ]);
    }

    let chernoff_grid = match &args.chernoff_grid {
        Some(s) => parse_ratio_grid(s)?,
        None => LambdaGrid::default_for(args.n, ell).chernoff,
    };
    let class_one = expectation_by_distinct(group, args.k, 1, &args.p)?;
    if class_one > BigRational::from(BigInt::from(0)) {
        for lambda in chernoff_grid {
            let bound = bounds::chernoff_tail(
                bounds::ratio_to_f64(&class_one),
                bounds::ratio_to_f64(&lambda),
            )?;
            record.push_row(vec![
                "chernoff_tail".into(),
                "1".into(),
                String::new(),
                format_rational(&lambda),
                String::new(),
                format_f64(bound),
            ]);
        }
    }
    Ok(record)
}

fn cmd_simulate(args: &SimulateArgs) -> Result<OutputRecord> {
    let mut config = ExperimentConfig::new(args.n, args.k, args.p.clone(), args.trials, args.seed);
    config.threads = args.threads;
    if let Some(d) = args.d {
        config.statistic = Statistic::ByDistinct(d);
    }
    let ell = match config.statistic {
        Statistic::Total => max_distinct_count(args.k),
        Statistic::ByDistinct(d) => d,
    };
    let mut grid = LambdaGrid::default_for(args.n, ell);
    if let Some(s) = &args.lambda_grid {
        grid.kim_vu = parse_f64_grid(s)?;
    }
    if let Some(s) = &args.chernoff_grid {
        grid.chernoff = parse_ratio_grid(s)?;
    }
    let report = concentration_report(&config, &grid)?;

    let mut record = OutputRecord::new(
        "simulate",
        &[
            "quantity",
            "lambda",
            "value",
            "bound",
            "empirical",
            "status",
        ],
    );
    record.set_parameter("n", args.n);
    record.set_parameter("k", args.k);
    record.set_parameter("p", format_rational(&args.p));
    record.set_parameter(
        "quantized_p",
        format_rational(&quantized_probability(&args.p)?),
    );
    record.set_parameter("trials", args.trials);
    record.set_parameter("seed", args.seed);
    record.set_parameter("threads", args.threads);
    record.set_parameter(
        "statistic",
        match config.statistic {
            Statistic::Total => "total".to_string(),
            Statistic::ByDistinct(d) => format!("d={d}"),
        },
    );
    record.set_parameter("ell", ell);

    let stats = &report.stats;
    let mut stat_row = |name: &str, value: String| {
        record.push_row(vec![
            name.into(),
            String::new(),
            value,
            String::new(),
            String::new(),
            String::new(),
        ]);
    };
    stat_row("trials", stats.trials.to_string());
    stat_row("sample_mean", format_f64(stats.sample_mean));
    stat_row("sample_variance", format_f64(stats.sample_variance));
    stat_row("max_abs_deviation", format_f64(stats.max_abs_deviation));
    stat_row(
        "exact_expectation",
        format_rational(&stats.exact_expectation),
    );
    stat_row("e_prime", format_rational(&report.e_prime));
    stat_row("e_star", format_rational(&report.e_star));

    let status = |vacuous: bool, pass: bool| {
        if vacuous {
            "vacuous".to_string()
        } else if pass {
            "pass".to_string()
        } else {
            "fail".to_string()
        }
    };
    for row in &report.kim_vu_rows {
        record.push_row(vec![
            "kim_vu_tail".into(),
            format_f64(row.lambda),
            format_f64(row.threshold),
            format_f64(row.failure_bound),
            format_f64(row.empirical),
            status(row.vacuous, row.pass),
        ]);
    }
    for row in &report.chernoff_rows {
        record.push_row(vec![
            "chernoff_tail".into(),
            format_rational(&row.lambda),
            String::new(),
            format_f64(row.tail_bound),
            format_f64(row.empirical),
            status(row.vacuous, row.pass),
        ]);
    }
    Ok(record)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(OutputRecord, i32)> {
    let mut record = OutputRecord::new(
        "verify",
        &[
            "n", "k", "check", "d", "expected", "actual", "status", "detail",
        ],
    );
    let cases: Vec<(u64, u64)> = match (args.n, args.n_max) {
        (Some(n), None) => match args.k {
            Some(k) => vec![(n, k)],
            None => (0..=n / 3).map(|k| (n, k)).collect(),
        },
        (None, Some(n_max)) => {
            let mut cases = Vec::new();
            for n in 2..=n_max {
                for k in 0..=n / 3 {
                    cases.push((n, k));
                }
            }
            cases
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "pass --n (optionally with --k) or --n-max".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap forbids --n with --n-max"),
    };
    for &(n, _) in &cases {
        if n > args.bruteforce_cap {
            return Err(Error::InvalidParameter(format!(
                "verification brute-forces every sequence and is capped at n <= {} (got n = {n})",
                args.bruteforce_cap
            )));
        }
    }
    record.set_parameter("cases", cases.len());

    let mut discrepancies = 0u64;
    for (n, k) in cases {
        discrepancies += verify_case(n, k, &mut record)?;
    }
    record.set_parameter("discrepancies", discrepancies);
    Ok((record, if discrepancies > 0 { 1 } else { 0 }))
}

fn verify_case(n: u64, k: u64, record: &mut OutputRecord) -> Result<u64> {
    let group = CyclicGroup::new(n)?;
    let structured = enumerate_structured(group, k, true)?;
    let brute = brute_force_enumerate(group, n - 1 - k)?;
    let mut discrepancies = 0u64;

    let mut push = |check: &str,
                    d: String,
                    expected: String,
                    actual: String,
                    ok: bool,
                    detail: String,
                    discrepancies: &mut u64| {
        if !ok {
            *discrepancies += 1;
        }
        record.push_row(vec![
            n.to_string(),
            k.to_string(),
            check.into(),
            d,
            expected,
            actual,
            if ok { "ok".into() } else { "mismatch".into() },
            detail,
        ]);
    };

    // Ground truth: deduplicated generator-form output vs brute force.
    let missing: Vec<String> = brute
        .difference(&structured.distinct)
        .take(3)
        .map(|s| s.to_string())
        .collect();
    let extra: Vec<String> = structured
        .distinct
        .difference(&brute)
        .take(3)
        .map(|s| s.to_string())
        .collect();
    let sets_equal = missing.is_empty() && extra.is_empty();
    let mut detail = String::new();
    if !missing.is_empty() {
        detail.push_str(&format!("missing from structured: {}", missing.join("; ")));
    }
    if !extra.is_empty() {
        if !detail.is_empty() {
            detail.push_str(" | ");
        }
        detail.push_str(&format!("not zero-sum free listings: {}", extra.join("; ")));
    }
    push(
        "structured_vs_bruteforce",
        String::new(),
        brute.len().to_string(),
        structured.distinct.len().to_string(),
        sets_equal,
        detail,
        &mut discrepancies,
    );

    // Representation uniqueness.
    let collision_detail = structured
        .collisions
        .first()
        .map(|c| {
            let configs: Vec<String> = c
                .config_indices
                .iter()
                .map(|&i| {
                    let config = &structured.pairs[i].0;
                    format!(
                        "g={} x={}",
                        config.generator,
                        join_spaced(&config.multipliers())
                    )
                })
                .collect();
            format!("{} <- {}", c.multiset, configs.join("; "))
        })
        .unwrap_or_default();
    push(
        "representation_collisions",
        String::new(),
        "0".into(),
        structured.collisions.len().to_string(),
        structured.collisions.is_empty(),
        collision_detail,
        &mut discrepancies,
    );

    // Count formula vs deduplicated class counts.
    let by_class = structured.distinct_by_class();
    for d in 1..=max_distinct_count(k) {
        let formula = representation_count(group, k, d)?;
        let actual = by_class.get(&d).copied().unwrap_or(0);
        push(
            "class_count_formula",
            d.to_string(),
            formula.to_string(),
            actual.to_string(),
            formula == num::BigUint::from(actual),
            String::new(),
            &mut discrepancies,
        );
    }
    Ok(discrepancies)
}
