//! Seeded Monte Carlo harness: runs independent random-subset trials, counts
//! exactly inside each trial, and aggregates statistics that can be compared
//! against the exact expectations and the proven tail bounds.
//!
//! Per-trial counts are exact integers and every reduction (sums, maxima,
//! threshold exceedance counts) is order-independent, so results are
//! bit-identical for a fixed `(config, seed)` regardless of thread count.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, BigUint, Signed, Zero};
use rayon::prelude::*;

use crate::bounds::{
    chernoff_tail, e_prime_and_star, is_vacuous, kim_vu_failure_prob, kim_vu_threshold,
    ratio_to_f64, KimVuParams,
};
use crate::error::{Error, Result};
use crate::group::CyclicGroup;
use crate::structure::{
    check_probability, expectation_by_distinct, expectation_total, max_distinct_count, Statistic,
};
use crate::subset::{bernoulli_threshold, quantized_probability, stream_word, SubsetCounter};

/// Parameters of one experiment.
#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub n: u64,
    pub k: u64,
    pub p: BigRational,
    pub trials: u64,
    pub seed: u64,
    pub statistic: Statistic,
    /// Residues forced into every sample; only used by
    /// [`empirical_conditional_expectation`], must exclude 0.
    pub conditioning: Option<BTreeSet<u64>>,
    /// Absolute deviation thresholds for [`TrialStats::tail_frequencies`].
    pub deviation_thresholds: Vec<BigRational>,
    /// Worker threads; 0 picks the library default. Results do not depend
    /// on this value.
    pub threads: usize,
}

impl ExperimentConfig {
    pub fn new(n: u64, k: u64, p: BigRational, trials: u64, seed: u64) -> Self {
        ExperimentConfig {
            n,
            k,
            p,
            trials,
            seed,
            statistic: Statistic::Total,
            conditioning: None,
            deviation_thresholds: Vec::new(),
            threads: 0,
        }
    }

    pub fn group(&self) -> Result<CyclicGroup> {
        CyclicGroup::new(self.n)
    }

    fn validate(&self) -> Result<()> {
        check_probability(&self.p)?;
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if let Some(a) = &self.conditioning {
            if a.contains(&0) {
                return Err(Error::InvalidParameter(
                    "conditioning set must exclude residue 0".into(),
                ));
            }
            if a.iter().any(|&r| r >= self.n) {
                return Err(Error::InvalidParameter(
                    "conditioning set contains residues outside the group".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Aggregated results of a trial run.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialStats {
    pub trials: u64,
    pub sample_mean: f64,
    pub sample_variance: f64,
    /// Largest `|count - exact_expectation|` seen in any trial.
    pub max_abs_deviation: f64,
    /// `(threshold, fraction of trials with deviation strictly above it)`,
    /// in the order the thresholds were supplied.
    pub tail_frequencies: Vec<(f64, f64)>,
    /// Exact expectation of the statistic at the configured `p`.
    pub exact_expectation: BigRational,
    /// Inclusion probability actually realized by the 64-bit sampler.
    pub quantized_p: BigRational,
}

impl TrialStats {
    /// Estimated standard error of the sample mean.
    pub fn std_error(&self) -> f64 {
        (self.sample_variance / self.trials as f64).sqrt()
    }
}

fn exact_expectation_for(config: &ExperimentConfig) -> Result<BigRational> {
    let group = config.group()?;
    match config.statistic {
        Statistic::Total => expectation_total(group, config.k, &config.p),
        Statistic::ByDistinct(d) => expectation_by_distinct(group, config.k, d, &config.p),
    }
}

/// Maps trials 0..trials through `one_trial`, in trial order, on the
/// configured number of workers. Results are schedule-independent.
fn map_trials(
    trials: u64,
    threads: usize,
    one_trial: impl Fn(u64) -> BigUint + Sync,
) -> Result<Vec<BigUint>> {
    if threads == 1 {
        return Ok((0..trials).map(one_trial).collect());
    }
    let run = || (0..trials).into_par_iter().map(&one_trial).collect();
    if threads == 0 {
        Ok(run())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        Ok(pool.install(run))
    }
}

/// Exact per-trial counts of the configured statistic, in trial order.
fn per_trial_counts(config: &ExperimentConfig) -> Result<Vec<BigUint>> {
    config.validate()?;
    let group = config.group()?;
    let counter = SubsetCounter::new(group, config.k)?;
    let threshold = bernoulli_threshold(&config.p)?;
    let n = config.n;
    let seed = config.seed;

    map_trials(config.trials, config.threads, |t| {
        let contains = |r: u64| r < n && (stream_word(seed, t, r) as u128) < threshold;
        match config.statistic {
            Statistic::Total => counter.count_by(contains).total,
            Statistic::ByDistinct(d) => counter.count_by(contains).class(d),
        }
    })
}

fn abs_deviation(count: &BigUint, expectation: &BigRational) -> BigRational {
    (BigRational::from(BigInt::from(count.clone())) - expectation).abs()
}

fn aggregate(config: &ExperimentConfig, counts: &[BigUint]) -> Result<TrialStats> {
    let trials = counts.len() as u64;
    let exact_expectation = exact_expectation_for(config)?;

    let mut sum = BigUint::zero();
    let mut sum_sq = BigUint::zero();
    for c in counts {
        sum += c;
        sum_sq += c * c;
    }
    let sum = BigInt::from(sum);
    let sum_sq = BigInt::from(sum_sq);
    let t = BigInt::from(trials);

    let mean = BigRational::new(sum.clone(), t.clone());
    // Unbiased sample variance (t * sum_sq - sum^2) / (t * (t - 1)).
    let variance = if trials >= 2 {
        BigRational::new(&t * &sum_sq - &sum * &sum, &t * (&t - BigInt::from(1)))
    } else {
        BigRational::zero()
    };

    let mut max_dev = BigRational::zero();
    for c in counts {
        max_dev = max_dev.max(abs_deviation(c, &exact_expectation));
    }

    let mut tail_frequencies = Vec::with_capacity(config.deviation_thresholds.len());
    for threshold in &config.deviation_thresholds {
        let exceeding = counts
            .iter()
            .filter(|c| &abs_deviation(c, &exact_expectation) > threshold)
            .count();
        tail_frequencies.push((ratio_to_f64(threshold), exceeding as f64 / trials as f64));
    }

    Ok(TrialStats {
        trials,
        sample_mean: ratio_to_f64(&mean),
        sample_variance: ratio_to_f64(&variance),
        max_abs_deviation: ratio_to_f64(&max_dev),
        tail_frequencies,
        exact_expectation,
        quantized_p: quantized_probability(&config.p)?,
    })
}

/// Runs `config.trials` independent samples and aggregates them.
///
/// The conditioning set is rejected here; it belongs to
/// [`empirical_conditional_expectation`], whose estimand is conditional.
pub fn run_trials(config: &ExperimentConfig) -> Result<TrialStats> {
    if config.conditioning.is_some() {
        return Err(Error::InvalidParameter(
            "run_trials is unconditional; use empirical_conditional_expectation".into(),
        ));
    }
    let counts = per_trial_counts(config)?;
    aggregate(config, &counts)
}

/// A Monte Carlo estimate together with its standard error.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionalEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
}

/// Estimates the expected weight of sequences with `d` distinct elements
/// whose support contains the conditioning set `A`, given `A` is present:
/// every trial forces `A` into the sample, draws the rest independently,
/// and counts exactly.
pub fn empirical_conditional_expectation(
    config: &ExperimentConfig,
    d: u64,
) -> Result<ConditionalEstimate> {
    config.validate()?;
    let pinned = match &config.conditioning {
        Some(a) if !a.is_empty() => a.clone(),
        _ => {
            return Err(Error::InvalidParameter(
                "a nonempty conditioning set is required".into(),
            ))
        }
    };
    if pinned.len() as u64 > d {
        return Err(Error::PinnedSizeOutOfRange {
            i: pinned.len() as u64,
            d,
        });
    }
    let group = config.group()?;
    let counter = SubsetCounter::new(group, config.k)?;
    let threshold = bernoulli_threshold(&config.p)?;
    let n = config.n;
    let seed = config.seed;

    let counts: Vec<BigUint> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let contains = |r: u64| {
                r < n && (pinned.contains(&r) || (stream_word(seed, t, r) as u128) < threshold)
            };
            counter.count_containing(&pinned, d, contains)
        })
        .collect();

    let trials = counts.len() as u64;
    let mut sum = BigUint::zero();
    let mut sum_sq = BigUint::zero();
    for c in &counts {
        sum += c;
        sum_sq += c * c;
    }
    let sum = BigInt::from(sum);
    let sum_sq = BigInt::from(sum_sq);
    let t = BigInt::from(trials);
    let mean = BigRational::new(sum.clone(), t.clone());
    let variance = if trials >= 2 {
        BigRational::new(&t * &sum_sq - &sum * &sum, &t * (&t - BigInt::from(1)))
    } else {
        BigRational::zero()
    };
    Ok(ConditionalEstimate {
        mean: ratio_to_f64(&mean),
        std_error: (ratio_to_f64(&variance) / trials as f64).sqrt(),
        trials,
    })
}

/// Tail-parameter grids for [`concentration_report`].
#[derive(Clone, Debug)]
pub struct LambdaGrid {
    /// Values for the polynomial-concentration rows; each must exceed 1.
    pub kim_vu: Vec<f64>,
    /// Relative-deviation values for the Chernoff rows (class `d = 1`
    /// only); each must lie in `(0, 1)`. Exact rationals keep the
    /// exceedance events exact.
    pub chernoff: Vec<BigRational>,
}

impl LambdaGrid {
    /// Defaults matching how the bounds are typically instantiated:
    /// `d log n` and `2 d log n` for the polynomial bound, and relative
    /// deviations `1/10, 1/5, 1/2` for the Chernoff rows.
    pub fn default_for(n: u64, ell: u64) -> Self {
        let base = ell as f64 * (n as f64).ln();
        LambdaGrid {
            kim_vu: vec![base, 2.0 * base],
            chernoff: vec![
                BigRational::new(BigInt::from(1), BigInt::from(10)),
                BigRational::new(BigInt::from(1), BigInt::from(5)),
                BigRational::new(BigInt::from(1), BigInt::from(2)),
            ],
        }
    }
}

#[derive(Clone, Debug)]
pub struct KimVuRow {
    pub lambda: f64,
    pub threshold: f64,
    pub failure_bound: f64,
    pub empirical: f64,
    pub vacuous: bool,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct ChernoffRow {
    pub lambda: BigRational,
    pub tail_bound: f64,
    pub empirical: f64,
    pub vacuous: bool,
    pub pass: bool,
}

/// Everything [`concentration_report`] produces.
#[derive(Clone, Debug)]
pub struct ConcentrationReport {
    pub stats: TrialStats,
    /// Hyperedge-size parameter used for the polynomial bound: the class
    /// `d` for a fixed class, the largest possible class for the total.
    pub ell: u64,
    pub e_prime: BigRational,
    pub e_star: BigRational,
    pub kim_vu_rows: Vec<KimVuRow>,
    /// Present only for the `d = 1` class, which is a sum of independent
    /// indicators.
    pub chernoff_rows: Vec<ChernoffRow>,
}

impl ConcentrationReport {
    pub fn all_non_vacuous_rows_pass(&self) -> bool {
        self.kim_vu_rows.iter().all(|r| r.pass) && self.chernoff_rows.iter().all(|r| r.pass)
    }
}

/// Runs the trials and compares the empirical deviation tails row by row
/// against the proven bounds. Rows whose bound is at least 1 are marked
/// vacuous and never fail.
pub fn concentration_report(
    config: &ExperimentConfig,
    grid: &LambdaGrid,
) -> Result<ConcentrationReport> {
    if config.conditioning.is_some() {
        return Err(Error::InvalidParameter(
            "concentration_report is unconditional".into(),
        ));
    }
    let counts = per_trial_counts(config)?;
    let stats = aggregate(config, &counts)?;
    let group = config.group()?;
    let ell = match config.statistic {
        Statistic::Total => max_distinct_count(config.k),
        Statistic::ByDistinct(d) => d,
    };
    let (e_prime, e_star) = e_prime_and_star(group, config.k, config.statistic, &config.p)?;
    let expectation = &stats.exact_expectation;
    let trials = counts.len() as f64;

    // Exact exceedance count against an exact threshold; strict or not per
    // the inequality being validated.
    let tail_fraction = |threshold: &BigRational, strict: bool| -> f64 {
        let exceeding = counts
            .iter()
            .filter(|c| {
                let dev = abs_deviation(c, expectation);
                if strict {
                    &dev > threshold
                } else {
                    &dev >= threshold
                }
            })
            .count();
        exceeding as f64 / trials
    };

    let mut kim_vu_rows = Vec::with_capacity(grid.kim_vu.len());
    for &lambda in &grid.kim_vu {
        let params = KimVuParams {
            ell,
            lambda,
            n: config.n,
            e_prime: ratio_to_f64(&e_prime),
            e_star: ratio_to_f64(&e_star),
        };
        let threshold = kim_vu_threshold(&params)?;
        let failure_bound = kim_vu_failure_prob(&params)?;
        let vacuous = is_vacuous(failure_bound);
        let exact_threshold = BigRational::from_float(threshold).ok_or_else(|| {
            Error::InvalidParameter(format!("non-finite deviation threshold {threshold}"))
        })?;
        let empirical = tail_fraction(&exact_threshold, true);
        kim_vu_rows.push(KimVuRow {
            lambda,
            threshold,
            failure_bound,
            empirical,
            vacuous,
            pass: vacuous || empirical <= failure_bound,
        });
    }

    let mut chernoff_rows = Vec::new();
    if config.statistic == Statistic::ByDistinct(1) {
        for lambda in &grid.chernoff {
            let tail_bound = chernoff_tail(ratio_to_f64(expectation), ratio_to_f64(lambda))?;
            let vacuous = is_vacuous(tail_bound);
            let exact_threshold = lambda * expectation;
            let empirical = tail_fraction(&exact_threshold, false);
            chernoff_rows.push(ChernoffRow {
                lambda: lambda.clone(),
                tail_bound,
                empirical,
                vacuous,
                pass: vacuous || empirical <= tail_bound,
            });
        }
    }

    Ok(ConcentrationReport {
        stats,
        ell,
        e_prime,
        e_star,
        kim_vu_rows,
        chernoff_rows,
    })
}
