//! Monte Carlo validation: exact per-trial counts against the exact
//! expectation, plus empirical deviation tails compared with the Chernoff
//! and polynomial-concentration bounds.
//!
//! Run with `cargo run --release --example concentration`.

use num::{BigInt, BigRational};
use zsfree::montecarlo::{concentration_report, run_trials, ExperimentConfig, LambdaGrid};
use zsfree::structure::Statistic;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let trials = 50_000;
    let mut config = ExperimentConfig::new(101, 2, ratio(3, 10), trials, 0xFACADE);
    config.deviation_thresholds = vec![ratio(5, 1), ratio(10, 1), ratio(15, 1), ratio(20, 1)];

    println!("{trials} trials over C_101, k = 2, p = 3/10 (exact expectation 57):\n");
    let stats = run_trials(&config).unwrap();
    println!("  sample mean       {:.4}", stats.sample_mean);
    println!("  sample variance   {:.4}", stats.sample_variance);
    println!("  standard error    {:.4}", stats.std_error());
    println!("  max |deviation|   {:.1}", stats.max_abs_deviation);
    println!("  deviation tails:");
    for (threshold, fraction) in &stats.tail_frequencies {
        println!("    Pr[|count - 57| > {threshold:>4}] = {fraction:.5}");
    }

    // The singleton class is a sum of independent indicators, so its tails
    // obey the Chernoff bound at every relative deviation.
    let mut class_one = config.clone();
    class_one.statistic = Statistic::ByDistinct(1);
    let grid = LambdaGrid::default_for(101, 1);
    let report = concentration_report(&class_one, &grid).unwrap();
    println!("\nsingleton class (Binomial(100, 3/10)) vs Chernoff:");
    for row in &report.chernoff_rows {
        println!(
            "  lambda = {:>4}: empirical {:.5} <= bound {:.5}  [{}]",
            row.lambda.to_string(),
            row.empirical,
            row.tail_bound,
            if row.vacuous {
                "vacuous"
            } else if row.pass {
                "pass"
            } else {
                "FAIL"
            },
        );
    }

    // The pair class against the polynomial-concentration bound.
    let mut class_two = config;
    class_two.statistic = Statistic::ByDistinct(2);
    let grid = LambdaGrid::default_for(101, 2);
    let report = concentration_report(&class_two, &grid).unwrap();
    println!(
        "\npair class vs polynomial concentration (E' = {}, E* = {}):",
        report.e_prime, report.e_star
    );
    for row in &report.kim_vu_rows {
        println!(
            "  lambda = {:>6.2}: Pr[|count - E| > {:>9.1}] = {:.6} <= {:.6}  [{}]",
            row.lambda,
            row.threshold,
            row.empirical,
            row.failure_bound,
            if row.vacuous {
                "vacuous"
            } else if row.pass {
                "pass"
            } else {
                "FAIL"
            },
        );
    }
    println!(
        "\nall non-vacuous rows pass: {}",
        report.all_non_vacuous_rows_pass()
    );
}
