//! Bernoulli(p) random subsets of `C_n` drawn from a counter-based
//! deterministic stream, and exact counting of the zero-sum free sequences
//! contained in a subset.
//!
//! Each residue's inclusion is decided by one 64-bit word keyed on
//! `(seed, trial_index, residue)`, so a sample is a pure function of its
//! provenance: per-trial and per-element reproducibility hold regardless of
//! how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::Result;
use crate::group::CyclicGroup;
use crate::structure::{check_k, check_probability, support_map};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM_GAMMA: u64 = 0xC2B2_AE3D_27D4_EB4F;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The uniform 64-bit word at position `(trial_index, residue)` of the
/// stream keyed by `seed`.
pub fn stream_word(seed: u64, trial_index: u64, residue: u64) -> u64 {
    let mixed = splitmix64(seed ^ trial_index.wrapping_mul(GOLDEN_GAMMA));
    splitmix64(mixed ^ residue.wrapping_mul(STREAM_GAMMA))
}

/// Inclusion threshold `floor(p * 2^64)`: a residue whose stream word is
/// strictly below it is included. The exact rational `p` is quantized once
/// per run to this 64-bit grid; [`quantized_probability`] reports the
/// probability actually realized.
pub fn bernoulli_threshold(p: &BigRational) -> Result<u128> {
    check_probability(p)?;
    let scaled = (p.numer() << 64u32) / p.denom();
    Ok(scaled.try_into().expect("p <= 1 so floor(p*2^64) <= 2^64"))
}

/// The dyadic probability `floor(p * 2^64) / 2^64` realized by the sampler.
pub fn quantized_probability(p: &BigRational) -> Result<BigRational> {
    let threshold = bernoulli_threshold(p)?;
    Ok(BigRational::new(
        BigInt::from(threshold),
        BigInt::one() << 64u32,
    ))
}

/// How a sample was drawn; regenerating with equal provenance over the same
/// group yields an identical member set.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub seed: u64,
    pub trial_index: u64,
    pub p: BigRational,
}

/// A sampled subset of `C_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetSample {
    group: CyclicGroup,
    membership: Vec<bool>,
    provenance: Provenance,
}

impl SubsetSample {
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, residue: u64) -> bool {
        self.membership[residue as usize]
    }

    /// Ascending list of the members.
    pub fn members(&self) -> Vec<u64> {
        (0..self.group.order())
            .filter(|&r| self.membership[r as usize])
            .collect()
    }

    pub fn len(&self) -> u64 {
        self.membership.iter().filter(|&&b| b).count() as u64
    }

    pub fn is_empty(&self) -> bool {
        !self.membership.iter().any(|&b| b)
    }
}

/// Draws the Bernoulli(`p`) subset at `(seed, trial_index)`: each residue is
/// included independently, decided by its own stream word.
pub fn sample_subset(
    group: CyclicGroup,
    p: &BigRational,
    seed: u64,
    trial_index: u64,
) -> Result<SubsetSample> {
    let threshold = bernoulli_threshold(p)?;
    let membership = (0..group.order())
        .map(|r| (stream_word(seed, trial_index, r) as u128) < threshold)
        .collect();
    Ok(SubsetSample {
        group,
        membership,
        provenance: Provenance {
            seed,
            trial_index,
            p: p.clone(),
        },
    })
}

/// Exact counts of zero-sum free multisets contained in a subset, total and
/// split by distinct-element count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCounts {
    pub total: BigUint,
    pub by_distinct: BTreeMap<u64, BigUint>,
}

impl SubsetCounts {
    fn zero() -> Self {
        SubsetCounts {
            total: BigUint::zero(),
            by_distinct: BTreeMap::new(),
        }
    }

    pub fn class(&self, d: u64) -> BigUint {
        self.by_distinct.get(&d).cloned().unwrap_or_default()
    }
}

/// Reusable counter for one `(group, k)`: the support/weight table is built
/// once, and each query just tests which supports the subset contains.
///
/// A sequence lies inside `R` exactly when its support does, and every
/// sequence with support `T` has `|T|` distinct elements, so the counts per
/// subset are sums of precomputed support weights.
#[derive(Clone, Debug)]
pub struct SubsetCounter {
    group: CyclicGroup,
    k: u64,
    entries: Vec<(Vec<u64>, BigUint)>,
}

impl SubsetCounter {
    pub fn new(group: CyclicGroup, k: u64) -> Result<Self> {
        check_k(group, k)?;
        let map = support_map(group, k)?;
        let entries = map
            .entries()
            .iter()
            .map(|(s, w)| (s.clone(), w.clone()))
            .collect();
        Ok(SubsetCounter { group, k, entries })
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn count(&self, sample: &SubsetSample) -> SubsetCounts {
        self.count_by(|r| sample.contains(r))
    }

    /// Counts against an arbitrary membership predicate.
    pub fn count_by(&self, contains: impl Fn(u64) -> bool) -> SubsetCounts {
        let mut counts = SubsetCounts::zero();
        for (support, weight) in &self.entries {
            if support.iter().all(|&r| contains(r)) {
                counts.total += weight;
                *counts.by_distinct.entry(support.len() as u64).or_default() += weight;
            }
        }
        counts
    }

    /// Weight of sequences with exactly `distinct` distinct elements whose
    /// support contains `required` and lies inside the membership predicate.
    pub fn count_containing(
        &self,
        required: &BTreeSet<u64>,
        distinct: u64,
        contains: impl Fn(u64) -> bool,
    ) -> BigUint {
        let mut acc = BigUint::zero();
        for (support, weight) in &self.entries {
            if support.len() as u64 == distinct
                && required.iter().all(|r| support.binary_search(r).is_ok())
                && support.iter().all(|&r| contains(r))
            {
                acc += weight;
            }
        }
        acc
    }
}

/// One-shot form of [`SubsetCounter`] for a single sample.
pub fn count_in_subset(sample: &SubsetSample, k: u64) -> Result<SubsetCounts> {
    Ok(SubsetCounter::new(sample.group(), k)?.count(sample))
}
