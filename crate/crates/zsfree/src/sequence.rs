//! Order-free sequences over `C_n` (residue -> multiplicity maps), the
//! zero-sum-free predicate, and a brute-force enumerator that serves as the
//! ground truth for the structured counting layer.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::CyclicGroup;

/// A sequence over `C_n`: repetition allowed, order disregarded.
///
/// Stored as a map from canonical residue to positive multiplicity, keyed in
/// ascending order so that equality, hashing and ordering are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceMultiset {
    group: CyclicGroup,
    counts: BTreeMap<u64, u64>,
}

impl SequenceMultiset {
    pub fn new(group: CyclicGroup) -> Self {
        SequenceMultiset {
            group,
            counts: BTreeMap::new(),
        }
    }

    /// Builds a multiset from `(residue, multiplicity)` pairs. Residues are
    /// reduced to canonical form, repeated keys are merged, and zero
    /// multiplicities are dropped.
    pub fn from_pairs(group: CyclicGroup, pairs: &[(u64, u64)]) -> Self {
        let mut s = SequenceMultiset::new(group);
        for &(a, m) in pairs {
            s.push(a, m);
        }
        s
    }

    pub fn from_elements(group: CyclicGroup, elements: &[u64]) -> Self {
        let mut s = SequenceMultiset::new(group);
        for &a in elements {
            s.push(a, 1);
        }
        s
    }

    /// Adds `count` copies of `residue` (reduced mod `n`).
    pub fn push(&mut self, residue: u64, count: u64) {
        if count == 0 {
            return;
        }
        let a = self.group.reduce(residue);
        *self.counts.entry(a).or_insert(0) += count;
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    /// Total length (sum of multiplicities).
    pub fn len(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct elements.
    pub fn distinct_count(&self) -> u64 {
        self.counts.len() as u64
    }

    pub fn multiplicity(&self, residue: u64) -> u64 {
        self.counts.get(&residue).copied().unwrap_or(0)
    }

    /// Ascending list of the distinct elements.
    pub fn support(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&a, &m)| (a, m))
    }

    /// True iff no nonempty sub-multiset sums to `0 mod n`.
    ///
    /// Computed by closing the set of residues reachable as nonempty
    /// sub-multiset sums, element by element, with an early exit as soon as
    /// residue 0 becomes reachable. Adding copies of a value stops once the
    /// reachable set stabilizes, so the cost is bounded independently of
    /// large multiplicities.
    pub fn is_zero_sum_free(&self) -> bool {
        if self.counts.contains_key(&0) {
            return false;
        }
        let mut reach = ReachableSums::new(self.group.order());
        for (&a, &m) in &self.counts {
            for _ in 0..m {
                if !reach.add_element(a) {
                    break; // stabilized; more copies change nothing
                }
                if reach.contains_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SequenceMultiset {
    /// Canonical text form: ascending `residue^multiplicity` factors joined
    /// by spaces, `^1` omitted; the empty sequence prints as `empty`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "empty");
        }
        let mut first = true;
        for (&a, &m) in &self.counts {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Set of residues reachable as nonempty sub-multiset sums, as a bitmask for
/// `n <= 128` and a boolean vector beyond.
#[derive(Clone)]
enum ReachableSums {
    Small { n: u64, bits: u128 },
    Large { n: u64, bits: Vec<bool> },
}

impl ReachableSums {
    fn new(n: u64) -> Self {
        if n <= 128 {
            ReachableSums::Small { n, bits: 0 }
        } else {
            ReachableSums::Large {
                n,
                bits: vec![false; n as usize],
            }
        }
    }

    /// Adds one copy of residue `a` (1 <= a < n). Returns false when the
    /// reachable set did not grow.
    fn add_element(&mut self, a: u64) -> bool {
        match self {
            ReachableSums::Small { n, bits } => {
                let n = *n;
                let mask = if n == 128 {
                    u128::MAX
                } else {
                    (1u128 << n) - 1
                };
                let shifted = if a == 0 {
                    *bits
                } else {
                    ((*bits << a) | (*bits >> (n - a))) & mask
                };
                let next = *bits | shifted | (1u128 << a);
                let grew = next != *bits;
                *bits = next;
                grew
            }
            ReachableSums::Large { n, bits } => {
                let n = *n as usize;
                let a = a as usize;
                let mut next = bits.clone();
                next[a] = true;
                for s in 0..n {
                    if bits[s] {
                        next[(s + a) % n] = true;
                    }
                }
                let grew = next != *bits;
                *bits = next;
                grew
            }
        }
    }

    fn contains_zero(&self) -> bool {
        match self {
            ReachableSums::Small { bits, .. } => bits & 1 != 0,
            ReachableSums::Large { bits, .. } => bits[0],
        }
    }
}

/// Enumerates every zero-sum free multiset of the given length over `C_n`,
/// by exhaustive generation of nondecreasing value lists over `[1, n-1]`
/// filtered through the zero-sum-free predicate.
///
/// Branches whose partial sums already reach 0 are pruned, which is sound
/// because a multiset containing a zero-sum sub-multiset cannot become
/// zero-sum free by adding elements. Intended as a ground-truth oracle for
/// small orders (say `n <= 16`).
pub fn brute_force_enumerate(
    group: CyclicGroup,
    length: u64,
) -> Result<BTreeSet<SequenceMultiset>> {
    let n = group.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if length > n - 1 {
        return Err(Error::LengthOutOfRange { length, max: n - 1 });
    }
    let mut out = BTreeSet::new();
    let mut acc: Vec<u64> = Vec::with_capacity(length as usize);
    descend(group, length, 1, &ReachableSums::new(n), &mut acc, &mut out);
    Ok(out)
}

fn descend(
    group: CyclicGroup,
    length: u64,
    min_value: u64,
    reach: &ReachableSums,
    acc: &mut Vec<u64>,
    out: &mut BTreeSet<SequenceMultiset>,
) {
    if acc.len() as u64 == length {
        out.insert(SequenceMultiset::from_elements(group, acc));
        return;
    }
    for v in min_value..group.order() {
        let mut next = reach.clone();
        next.add_element(v);
        if next.contains_zero() {
            continue;
        }
        acc.push(v);
        descend(group, length, v, &next, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ms(n: u64, pairs: &[(u64, u64)]) -> SequenceMultiset {
        SequenceMultiset::from_pairs(CyclicGroup::new(n).unwrap(), pairs)
    }

    /// Naive oracle: enumerate every nonempty sub-multiset and test its sum.
    fn naive_zero_sum_free(s: &SequenceMultiset) -> bool {
        let n = s.group().order();
        let entries: Vec<(u64, u64)> = s.iter().collect();
        fn rec(n: u64, entries: &[(u64, u64)], idx: usize, sum: u64, nonempty: bool) -> bool {
            if idx == entries.len() {
                return !(nonempty && sum == 0);
            }
            let (a, m) = entries[idx];
            let mut add = 0u64;
            for taken in 0..=m {
                let total = (sum + add) % n;
                if !rec(n, entries, idx + 1, total, nonempty || taken > 0) {
                    return false;
                }
                add = (add + a) % n;
            }
            true
        }
        rec(n, &entries, 0, 0, false)
    }

    #[test]
    fn predicate_examples() {
        assert!(ms(8, &[(3, 4), (6, 1)]).is_zero_sum_free());
        assert!(!ms(8, &[(1, 1), (7, 1)]).is_zero_sum_free());
        assert!(ms(8, &[]).is_zero_sum_free());
        assert!(!ms(8, &[(0, 1)]).is_zero_sum_free());
    }

    #[test]
    fn predicate_matches_naive_oracle_exhaustively() {
        // Every multiset of length <= 10 over C_n, 2 <= n <= 10, generated as
        // nondecreasing value lists over [0, n-1] (including 0 so the
        // contains-zero path is exercised too).
        fn walk(n: u64, max_len: usize, acc: &mut Vec<u64>, checked: &mut u64) {
            let s = SequenceMultiset::from_elements(CyclicGroup::new(n).unwrap(), acc);
            assert_eq!(
                s.is_zero_sum_free(),
                naive_zero_sum_free(&s),
                "disagreement at n = {n}, multiset {s}"
            );
            *checked += 1;
            if acc.len() == max_len {
                return;
            }
            let lo = acc.last().copied().unwrap_or(0);
            for v in lo..n {
                acc.push(v);
                walk(n, max_len, acc, checked);
                acc.pop();
            }
        }
        let mut checked = 0;
        for n in 2..=10u64 {
            walk(n, 10, &mut Vec::new(), &mut checked);
        }
        assert!(checked > 100_000);
    }

    #[test]
    fn zero_element_always_rejected() {
        for n in 2..=12u64 {
            assert!(!ms(n, &[(0, 1), (1, 2)]).is_zero_sum_free());
        }
    }

    #[test]
    fn large_group_path_agrees_with_small() {
        // n = 200 exercises the Vec<bool> representation.
        let big = ms(200, &[(199, 3), (7, 2)]);
        assert!(big.is_zero_sum_free());
        let hit = ms(200, &[(150, 1), (50, 1)]);
        assert!(!hit.is_zero_sum_free());
    }

    #[test]
    fn brute_force_small_cases() {
        let c3 = CyclicGroup::new(3).unwrap();
        let got = brute_force_enumerate(c3, 1).unwrap();
        let want: BTreeSet<_> = [ms(3, &[(1, 1)]), ms(3, &[(2, 1)])].into_iter().collect();
        assert_eq!(got, want);

        for n in 2..=9u64 {
            let g = CyclicGroup::new(n).unwrap();
            let empty_only = brute_force_enumerate(g, 0).unwrap();
            assert_eq!(empty_only.len(), 1);
            assert!(empty_only.contains(&SequenceMultiset::new(g)));
        }
    }

    #[test]
    fn brute_force_maximal_length_is_constant_generator_sequences() {
        for n in 2..=10u64 {
            let g = CyclicGroup::new(n).unwrap();
            let got = brute_force_enumerate(g, n - 1).unwrap();
            let want: BTreeSet<_> = g
                .generators()
                .into_iter()
                .map(|gen| ms(n, &[(gen, n - 1)]))
                .collect();
            assert_eq!(got, want, "maximal-length sequences at n = {n}");
        }
    }

    #[test]
    fn brute_force_rejects_overlong_length() {
        let c8 = CyclicGroup::new(8).unwrap();
        assert!(matches!(
            brute_force_enumerate(c8, 8),
            Err(Error::LengthOutOfRange { length: 8, max: 7 })
        ));
    }

    #[test]
    fn brute_force_matches_filtered_exhaustive_generation() {
        // Independent route: generate all multisets, filter by the predicate.
        for n in 2..=8u64 {
            let g = CyclicGroup::new(n).unwrap();
            for length in 0..=(n - 1).min(5) {
                let fast = brute_force_enumerate(g, length).unwrap();
                let mut slow = BTreeSet::new();
                fn gen(
                    g: CyclicGroup,
                    len: u64,
                    min: u64,
                    acc: &mut Vec<u64>,
                    out: &mut BTreeSet<SequenceMultiset>,
                ) {
                    if acc.len() as u64 == len {
                        let s = SequenceMultiset::from_elements(g, acc);
                        if s.is_zero_sum_free() {
                            out.insert(s);
                        }
                        return;
                    }
                    for v in min..g.order() {
                        acc.push(v);
                        gen(g, len, v, acc, out);
                        acc.pop();
                    }
                }
                gen(g, length, 1, &mut Vec::new(), &mut slow);
                assert_eq!(fast, slow, "n = {n}, length = {length}");
            }
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ms(8, &[(2, 1), (1, 4)]).to_string(), "1^4 2");
        assert_eq!(ms(8, &[]).to_string(), "empty");
    }

    proptest! {
        /// Deleting elements from a zero-sum free multiset keeps it zero-sum free.
        #[test]
        fn zero_sum_free_is_downward_closed(
            n in 2u64..20,
            raw in proptest::collection::vec((1u64..40, 1u64..4), 0..6),
            pick in 0usize..64,
        ) {
            let g = CyclicGroup::new(n).unwrap();
            let pairs: Vec<(u64, u64)> = raw.iter().map(|&(a, m)| (a % n, m)).collect();
            let s = SequenceMultiset::from_pairs(g, &pairs);
            prop_assume!(s.is_zero_sum_free());
            prop_assume!(!s.is_empty());
            let support = s.support();
            let victim = support[pick % support.len()];
            let mut reduced = SequenceMultiset::new(g);
            for (a, m) in s.iter() {
                let m = if a == victim { m - 1 } else { m };
                reduced.push(a, m);
            }
            prop_assert!(reduced.is_zero_sum_free());
        }
    }
}
