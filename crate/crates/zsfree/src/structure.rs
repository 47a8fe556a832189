//! Generator-form enumeration of long zero-sum free sequences, exact counts
//! per distinct-element class, support/weight maps, and exact expectations
//! under the Bernoulli subset model.
//!
//! In the regime `0 <= k <= floor(n/3)`, zero-sum free sequences of length
//! `n-1-k` over `C_n` take the form
//!
//! ```text
//! g ... g (x_1 g)(x_2 g) ... (x_k g)      with n-1-2k leading copies of g,
//! ```
//!
//! where `g` is a generator and `1 <= x_1 <= ... <= x_k` are positive
//! integers with `x_1 + ... + x_k <= 2k`. Writing `x_i = 1 + x'_i`, the
//! positive excesses `x'_i` form a partition of total at most `k` with at
//! most `k` parts, so the sequences with `d` distinct elements per generator
//! are counted by `partition::count_partitions_at_most(k, d-1)`.
//!
//! Distinct `(g, x)` representations normally realize distinct multisets,
//! but not always: collisions occur at least when `n-1-2k = 0` (over `C_3`
//! with `k = 1`, four representations realize only two multisets), and for a
//! handful of small orders the form misses zero-sum free sequences entirely
//! (over `C_6` with `k = 2`, the sequence `2 2 3` is zero-sum free yet
//! contains no generator). This module therefore keeps representation counts
//! and deduplicated multiset counts as two separate, clearly named
//! quantities; [`enumerate_structured`] reports collisions explicitly and the
//! `verify` command-line path cross-checks everything against the brute-force
//! enumerator.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::group::CyclicGroup;
use crate::partition::{count_partitions_at_most, Partition};
use crate::sequence::SequenceMultiset;

/// Which count a statistic refers to: all sequences, or only those with a
/// given number of distinct elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Total,
    ByDistinct(u64),
}

/// One generator-form representation of a zero-sum free sequence of length
/// `n-1-k`: a generator together with the positive excesses `x_i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZsfConfiguration {
    pub generator: u64,
    /// Positive excesses, a partition with total <= k and at most k parts;
    /// the remaining `k - part_count` multipliers are exactly 1.
    pub excess: Partition,
    pub k: u64,
}

impl ZsfConfiguration {
    /// The full nondecreasing multiplier tuple `x_1 <= ... <= x_k`.
    pub fn multipliers(&self) -> Vec<u64> {
        let ones = self.k - self.excess.part_count();
        let mut xs = vec![1u64; ones as usize];
        xs.extend(self.excess.parts().iter().map(|&e| e + 1));
        xs
    }

    /// Realizes the multiset `g^{n-1-2k} (x_1 g) ... (x_k g)` over `group`.
    pub fn realize(&self, group: CyclicGroup) -> SequenceMultiset {
        let n = group.order();
        let mut s = SequenceMultiset::new(group);
        let base = n - 1 - 2 * self.k;
        s.push(self.generator, base);
        for x in self.multipliers() {
            s.push(group.scalar_mul(x, self.generator), 1);
        }
        s
    }
}

/// A group of representations that realize the same multiset.
#[derive(Clone, Debug)]
pub struct CollisionGroup {
    pub multiset: SequenceMultiset,
    /// Indices into [`StructuredEnumeration::pairs`], at least two.
    pub config_indices: Vec<usize>,
}

/// Output of [`enumerate_structured`].
#[derive(Clone, Debug)]
pub struct StructuredEnumeration {
    pub group: CyclicGroup,
    pub k: u64,
    /// All `(configuration, realized multiset)` pairs, ordered by
    /// `(generator, multiplier tuple)`.
    pub pairs: Vec<(ZsfConfiguration, SequenceMultiset)>,
    /// Deduplicated multisets (populated when `dedupe` was requested).
    pub distinct: BTreeSet<SequenceMultiset>,
    /// Multisets realized by more than one configuration (when `dedupe`).
    pub collisions: Vec<CollisionGroup>,
}

impl StructuredEnumeration {
    pub fn representation_count(&self) -> u64 {
        self.pairs.len() as u64
    }

    /// Deduplicated multiset counts grouped by distinct-element count.
    pub fn distinct_by_class(&self) -> BTreeMap<u64, u64> {
        let mut by_d = BTreeMap::new();
        for s in &self.distinct {
            *by_d.entry(s.distinct_count()).or_insert(0) += 1;
        }
        by_d
    }
}

pub(crate) fn check_k(group: CyclicGroup, k: u64) -> Result<()> {
    let n = group.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if k > n / 3 {
        return Err(Error::KOutOfRange { k, max: n / 3 });
    }
    Ok(())
}

pub(crate) fn check_probability(p: &BigRational) -> Result<()> {
    if p < &BigRational::zero() || p > &BigRational::one() {
        return Err(Error::ProbabilityOutOfRange { p: p.to_string() });
    }
    Ok(())
}

/// Largest possible number of distinct elements in a structured sequence:
/// the largest `d >= 1` with `(d-1)d/2 <= k`, found by exact integer search.
pub fn max_distinct_count(k: u64) -> u64 {
    let mut d = 1u64;
    while d * (d + 1) / 2 <= k {
        d += 1;
    }
    d
}

/// Enumerates all generator-form representations for length `n-1-k` and the
/// multisets they realize; with `dedupe`, also the distinct multisets and a
/// report of representations that collide on the same multiset.
pub fn enumerate_structured(
    group: CyclicGroup,
    k: u64,
    dedupe: bool,
) -> Result<StructuredEnumeration> {
    check_k(group, k)?;
    let mut pairs = Vec::new();
    for g in group.generators() {
        // Positive excess partitions with total <= k and at most k parts, in
        // lexicographic part-list order.
        let mut parts: Vec<u64> = Vec::new();
        descend_excesses(group, g, k, 1, 0, &mut parts, &mut pairs);
    }

    let mut distinct = BTreeSet::new();
    let mut collisions = Vec::new();
    if dedupe {
        let mut by_multiset: BTreeMap<&SequenceMultiset, Vec<usize>> = BTreeMap::new();
        for (idx, (_, s)) in pairs.iter().enumerate() {
            by_multiset.entry(s).or_default().push(idx);
        }
        let grouped: Vec<(SequenceMultiset, Vec<usize>)> = by_multiset
            .into_iter()
            .map(|(s, v)| (s.clone(), v))
            .collect();
        for (s, indices) in grouped {
            if indices.len() > 1 {
                collisions.push(CollisionGroup {
                    multiset: s.clone(),
                    config_indices: indices,
                });
            }
            distinct.insert(s);
        }
    }

    Ok(StructuredEnumeration {
        group,
        k,
        pairs,
        distinct,
        collisions,
    })
}

fn descend_excesses(
    group: CyclicGroup,
    g: u64,
    k: u64,
    min_part: u64,
    total: u64,
    parts: &mut Vec<u64>,
    pairs: &mut Vec<(ZsfConfiguration, SequenceMultiset)>,
) {
    let config = ZsfConfiguration {
        generator: g,
        excess: Partition::new(parts.clone()),
        k,
    };
    let multiset = config.realize(group);
    pairs.push((config, multiset));
    if parts.len() as u64 == k {
        return;
    }
    let mut next = min_part;
    while total + next <= k {
        parts.push(next);
        descend_excesses(group, g, k, next, total + next, parts, pairs);
        parts.pop();
        next += 1;
    }
}

/// Exact representation count of sequences of length `n-1-k` with `d`
/// distinct elements: `totient(n) * partitions_at_most(k, d-1)`.
///
/// This counts `(generator, multiplier)` representations; callers that need
/// the deduplicated multiset count must go through [`enumerate_structured`].
pub fn representation_count(group: CyclicGroup, k: u64, d: u64) -> Result<BigUint> {
    check_k(group, k)?;
    if d == 0 {
        return Err(Error::DistinctOutOfRange {
            d,
            max: max_distinct_count(k),
        });
    }
    Ok(BigUint::from(group.generator_count()) * count_partitions_at_most(k, d - 1))
}

/// Weights on support sets: for each set of residues, the number of distinct
/// zero-sum free multisets of length `n-1-k` whose support is exactly that
/// set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportWeightMap {
    pub group: CyclicGroup,
    pub k: u64,
    entries: BTreeMap<Vec<u64>, BigUint>,
}

impl SupportWeightMap {
    pub fn entries(&self) -> &BTreeMap<Vec<u64>, BigUint> {
        &self.entries
    }

    pub fn weight(&self, support: &[u64]) -> BigUint {
        self.entries.get(support).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_weight(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Groups the deduplicated structured multisets by support set.
pub fn support_map(group: CyclicGroup, k: u64) -> Result<SupportWeightMap> {
    let enumeration = enumerate_structured(group, k, true)?;
    let mut entries: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
    for s in &enumeration.distinct {
        *entries.entry(s.support()).or_default() += BigUint::one();
    }
    Ok(SupportWeightMap { group, k, entries })
}

/// Exact expected number of zero-sum free sequences of length `n-1-k` with
/// exactly `d` distinct elements contained in a Bernoulli(`p`) subset:
/// `p^d * totient(n) * partitions_at_most(k, d-1)`.
///
/// Zero for `d` beyond [`max_distinct_count`] (there are no such sequences).
pub fn expectation_by_distinct(
    group: CyclicGroup,
    k: u64,
    d: u64,
    p: &BigRational,
) -> Result<BigRational> {
    check_k(group, k)?;
    check_probability(p)?;
    if d == 0 {
        return Err(Error::DistinctOutOfRange {
            d,
            max: max_distinct_count(k),
        });
    }
    let count = BigRational::from(BigInt::from(
        BigUint::from(group.generator_count()) * count_partitions_at_most(k, d - 1),
    ));
    Ok(pow_ratio(p, d) * count)
}

/// Exact expected total `totient(n) * [p + sum_{d=2}^{D} p^d *
/// partitions_at_most(k, d-1)]` with `D = max_distinct_count(k)`.
pub fn expectation_total(group: CyclicGroup, k: u64, p: &BigRational) -> Result<BigRational> {
    check_k(group, k)?;
    check_probability(p)?;
    let mut acc = BigRational::zero();
    for d in 1..=max_distinct_count(k) {
        acc += expectation_by_distinct(group, k, d, p)?;
    }
    Ok(acc)
}

/// First-order form of the expected total: the leading term `p * totient(n)`
/// together with the explicit constant `C_k = sum_{d=2}^{D}
/// partitions_at_most(k, d-1)`, so that
/// `|expectation_total - p*totient(n)| <= p*totient(n) * C_k * p` on `[0, 1]`.
pub fn expectation_first_order(
    group: CyclicGroup,
    k: u64,
    p: &BigRational,
) -> Result<(BigRational, BigRational)> {
    check_k(group, k)?;
    check_probability(p)?;
    let leading = p * BigRational::from(BigInt::from(group.generator_count()));
    let mut coefficient = BigRational::zero();
    for d in 2..=max_distinct_count(k) {
        coefficient += BigRational::from(BigInt::from(count_partitions_at_most(k, d - 1)));
    }
    Ok((leading, coefficient))
}

pub(crate) fn pow_ratio(p: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= p;
    }
    acc
}
