//! Closed-form tail bounds: the polynomial-concentration inequality for
//! weighted hyperedge counts in random induced subgraphs, the Bernoulli
//! Chernoff bound, and the exact-rational conditional-expectation bounds the
//! former needs as inputs.
//!
//! For a weighted hypergraph on `[n]` whose edges have size at most `ell`,
//! let `Z` be the total weight induced by a Bernoulli(p) vertex subset. With
//! `E_i` the largest expected weight conditional on pinning an `i`-element
//! vertex set, `E' = max_i E_i` and `E* = max(E', E[Z])`, the inequality
//! states that for every `lambda > 1`
//!
//! ```text
//! Pr[ |Z - E[Z]| > a_ell * sqrt(E' * E*) * lambda^ell ] < 2 e^{2-lambda} n^{ell-1},
//! ```
//!
//! where `a_ell = 8^ell * sqrt(ell!)`. Here the hyperedges are the supports
//! of zero-sum free sequences of length `n-1-k`, weighted by how many
//! sequences share the support, and the pinned conditional expectations are
//! bounded by exact rationals in `p` built from cumulative partition counts.
//!
//! Everything rational in `p` stays exact; factors involving square roots,
//! `exp` or `log` are evaluated in `f64` and labeled approximate.

use num::{BigInt, BigRational, BigUint, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::CyclicGroup;
use crate::partition::count_partitions_at_most;
use crate::structure::{
    check_k, check_probability, expectation_by_distinct, expectation_total, max_distinct_count,
    pow_ratio, Statistic,
};

/// Parameters of one polynomial-concentration evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KimVuParams {
    /// Maximum hyperedge size (the polynomial degree).
    pub ell: u64,
    /// Tail parameter, must exceed 1.
    pub lambda: f64,
    /// Ground-set size (the group order).
    pub n: u64,
    /// Largest pinned conditional expectation `E'`.
    pub e_prime: f64,
    /// `max(E', E[Z])`.
    pub e_star: f64,
}

fn check_lambda_gt_one(lambda: f64) -> Result<()> {
    // NaN must be rejected too.
    if lambda.is_nan() || lambda <= 1.0 {
        return Err(Error::LambdaOutOfRange {
            lambda,
            requirement: "lambda > 1",
        });
    }
    Ok(())
}

/// The coefficient `a_ell = 8^ell * sqrt(ell!)`.
pub fn kim_vu_coefficient(ell: u64) -> f64 {
    assert!(ell >= 1, "edge size must be at least 1");
    let mut factorial = 1.0f64;
    for i in 2..=ell {
        factorial *= i as f64;
    }
    8.0f64.powi(ell as i32) * factorial.sqrt()
}

/// Deviation threshold `a_ell * sqrt(E' * E*) * lambda^ell`.
pub fn kim_vu_threshold(params: &KimVuParams) -> Result<f64> {
    check_lambda_gt_one(params.lambda)?;
    Ok(kim_vu_coefficient(params.ell)
        * (params.e_prime * params.e_star).sqrt()
        * params.lambda.powi(params.ell as i32))
}

/// Failure probability `2 e^{2-lambda} n^{ell-1}`; values at or above 1 make
/// the bound vacuous, see [`is_vacuous`].
pub fn kim_vu_failure_prob(params: &KimVuParams) -> Result<f64> {
    check_lambda_gt_one(params.lambda)?;
    Ok(2.0 * (2.0 - params.lambda).exp() * (params.n as f64).powi(params.ell as i32 - 1))
}

/// A tail bound that cannot fail: it permits probabilities up to or past 1
/// (non-finite bounds count as vacuous).
pub fn is_vacuous(bound: f64) -> bool {
    bound.is_nan() || bound >= 1.0
}

/// Two-sided Chernoff tail for a sum of independent indicators:
/// `Pr[|X - E[X]| >= lambda * E[X]] <= 2 exp(-lambda^2 E[X] / 3)` for
/// `0 < lambda < 1`.
pub fn chernoff_tail(expectation: f64, lambda: f64) -> Result<f64> {
    if lambda.is_nan() || lambda <= 0.0 || lambda >= 1.0 {
        return Err(Error::LambdaOutOfRange {
            lambda,
            requirement: "0 < lambda < 1",
        });
    }
    if expectation.is_nan() || expectation <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "chernoff tail needs a positive expectation, got {expectation}"
        )));
    }
    Ok(2.0 * (-lambda * lambda * expectation / 3.0).exp())
}

fn big(count: BigUint) -> BigRational {
    BigRational::from(BigInt::from(count))
}

fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Upper bound on the expected weight of sequences with `d` distinct
/// elements whose support contains one pinned element, conditional on that
/// element being present:
///
/// ```text
/// p^{d-1} * (X(k, d-1) + k * (X(k-1, d-1) + X(k-1, d-2)))
/// ```
///
/// with `X(a, b) = count_partitions_at_most(a, b)`, and exactly 1 for
/// `d = 1`. The pinned element is either the generator itself (first term)
/// or one of the `k` non-unit multiples (second term).
pub fn e_single_bound(k: u64, d: u64, p: &BigRational) -> Result<BigRational> {
    check_probability(p)?;
    let dmax = max_distinct_count(k);
    if d == 0 || d > dmax {
        return Err(Error::DistinctOutOfRange { d, max: dmax });
    }
    if d == 1 {
        return Ok(BigRational::one());
    }
    let head = count_partitions_at_most(k, d - 1);
    let tail = BigUint::from(k)
        * (count_partitions_at_most(k - 1, d - 1) + count_partitions_at_most(k - 1, d - 2));
    Ok(pow_ratio(p, d - 1) * big(head + tail))
}

/// Upper bound on the expected weight of sequences with `d` distinct
/// elements whose support contains a pinned `i`-element set, conditional on
/// that set being present:
///
/// ```text
/// p^{d-i} * (i*C(k, i-1) + C(k, i)) * sum_{j=0}^{i} X(k-i+1, d-1-j)
/// ```
///
/// terms with a negative second index contribute 0, and the bound is exactly
/// 1 for `i = d`. The combinatorial factor counts the ways the pinned set
/// can sit among the generator and the multiplier slots.
pub fn e_subset_bound(k: u64, d: u64, i: u64, p: &BigRational) -> Result<BigRational> {
    check_probability(p)?;
    let dmax = max_distinct_count(k);
    if d == 0 || d > dmax {
        return Err(Error::DistinctOutOfRange { d, max: dmax });
    }
    if i == 0 || i > d {
        return Err(Error::PinnedSizeOutOfRange { i, d });
    }
    if i == d {
        return Ok(BigRational::one());
    }
    let placements = BigUint::from(i) * binomial(k, i - 1) + binomial(k, i);
    let mut partition_sum = BigUint::zero();
    for j in 0..=i {
        if d > j {
            partition_sum += count_partitions_at_most(k - i + 1, d - 1 - j);
        }
    }
    Ok(pow_ratio(p, d - i) * big(placements * partition_sum))
}

/// The pair `(E', E*)` for one statistic over `C_n` at inclusion
/// probability `p`, assembled from the pinned-set bounds:
///
/// - for the total count, `E_i` sums the per-class bounds over `d` (the
///   single-element chain for `i = 1`, the pinned-set chain for `i >= 2`),
///   `E'` is the largest `E_i` over `1 <= i <= D`, and `E* = max(E',
///   expectation_total)`;
/// - for a fixed class `d`, the chain runs over `1 <= i <= d` only and
///   `E* = max(E', expectation_by_distinct(d))`.
pub fn e_prime_and_star(
    group: CyclicGroup,
    k: u64,
    statistic: Statistic,
    p: &BigRational,
) -> Result<(BigRational, BigRational)> {
    check_k(group, k)?;
    check_probability(p)?;
    let dmax = max_distinct_count(k);
    let (e_prime, expectation) = match statistic {
        Statistic::Total => {
            let mut e_prime = BigRational::zero();
            for i in 1..=dmax {
                let mut e_i = BigRational::zero();
                for d in i.max(1)..=dmax {
                    e_i += if i == 1 {
                        e_single_bound(k, d, p)?
                    } else {
                        e_subset_bound(k, d, i, p)?
                    };
                }
                e_prime = e_prime.max(e_i);
            }
            (e_prime, expectation_total(group, k, p)?)
        }
        Statistic::ByDistinct(d) => {
            if d == 0 || d > dmax {
                return Err(Error::DistinctOutOfRange { d, max: dmax });
            }
            let mut e_prime = BigRational::zero();
            for i in 1..=d {
                e_prime = e_prime.max(e_subset_bound(k, d, i, p)?);
            }
            (e_prime, expectation_by_distinct(group, k, d, p)?)
        }
    };
    let e_star = e_prime.clone().max(expectation);
    Ok((e_prime, e_star))
}

/// `f64` view of an exact rational, for feeding [`KimVuParams`].
pub fn ratio_to_f64(value: &BigRational) -> f64 {
    value.to_f64().expect("rational convertible to f64")
}
