//! Exact, arbitrary-precision counts of integer partitions classified by the
//! number of distinct part sizes, the cumulative variant over bounded totals,
//! and Young-diagram counts with bounded boxes and rows.
//!
//! Three quantities, all memoized through [`CountTable`]:
//!
//! - `partitions(j, d)`: partitions of `j` with exactly `d` distinct part
//!   sizes (e.g. `1^3 4^1` has total 7 and 2 distinct sizes);
//! - `partitions_at_most(k, d)`: the same with total at most `k`;
//! - `young_diagrams(b, c, d)`: Young diagrams with at most `b` boxes, at
//!   most `c` rows and exactly `d` distinct row lengths.
//!
//! `partitions_at_most(k, d) == young_diagrams(k, k, d)` exactly, which the
//! tests exploit as a cross-check between two independent recursions. A
//! third, independent route through the bivariate generating-function product
//! is provided by [`gf_table`].

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num::{BigUint, One, Zero};

/// A partition stored as a canonical nondecreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts (zeros are dropped,
    /// parts are sorted).
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn part_count(&self) -> u64 {
        self.parts.len() as u64
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> u64 {
        let mut d = 0;
        let mut last = 0;
        for &p in &self.parts {
            if p != last {
                d += 1;
                last = p;
            }
        }
        d
    }
}

/// Write-once memo tables behind mutexes: concurrent queries are safe, a
/// value is published only after it is fully computed, and an entry is never
/// overwritten.
pub struct CountTable {
    // key: (remaining total, minimum allowed part, distinct sizes remaining)
    partitions: Mutex<HashMap<(u64, u64, u64), BigUint>>,
    // key: (max boxes, max rows, distinct row lengths)
    young: Mutex<HashMap<(u64, u64, u64), BigUint>>,
}

impl CountTable {
    pub fn new() -> Self {
        CountTable {
            partitions: Mutex::new(HashMap::new()),
            young: Mutex::new(HashMap::new()),
        }
    }

    /// Number of partitions of `total` with exactly `distinct` distinct part
    /// sizes; `partitions(0, 0) = 1` (the empty partition) and
    /// `partitions(j, 0) = 0` for `j >= 1`.
    ///
    /// Recurrence: condition on the smallest part size `i` and its
    /// multiplicity `r >= 1`, then recurse on total `j - i*r` with parts
    /// restricted to `> i` and one fewer distinct size.
    pub fn partitions(&self, total: u64, distinct: u64) -> BigUint {
        self.partitions_rec(total, 1, distinct)
    }

    fn partitions_rec(&self, remaining: u64, min_part: u64, distinct: u64) -> BigUint {
        if distinct == 0 {
            return if remaining == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        // The d distinct sizes are at least min, min+1, ..., min+d-1.
        let floor = distinct * min_part + distinct * (distinct - 1) / 2;
        if remaining < floor {
            return BigUint::zero();
        }
        let key = (remaining, min_part, distinct);
        if let Some(v) = self.partitions.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = BigUint::zero();
        let mut smallest = min_part;
        while smallest * distinct + distinct * (distinct - 1) / 2 <= remaining {
            let mut used = smallest;
            while used <= remaining {
                acc += self.partitions_rec(remaining - used, smallest + 1, distinct - 1);
                used += smallest;
            }
            smallest += 1;
        }
        self.partitions
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| acc.clone());
        acc
    }

    /// Number of partitions with total at most `max_total` and exactly
    /// `distinct` distinct part sizes. Equals `1` for `distinct = 0` (only
    /// the empty partition) and `0` whenever `distinct*(distinct+1)/2 >
    /// max_total`.
    pub fn partitions_at_most(&self, max_total: u64, distinct: u64) -> BigUint {
        let lo = distinct * (distinct + 1) / 2;
        let mut acc = BigUint::zero();
        for j in lo..=max_total {
            acc += self.partitions(j, distinct);
        }
        if distinct == 0 {
            acc = BigUint::one(); // the empty partition, counted once
        }
        acc
    }

    /// Number of Young diagrams with at most `max_boxes` boxes, at most
    /// `max_rows` rows, and exactly `distinct` distinct row lengths.
    ///
    /// For `distinct >= 2` the recursion deletes the full-width rectangle
    /// spanned by the shortest row: a diagram with `i` rows whose shortest
    /// row has length `j` maps to a diagram with at most `max_boxes - i*j`
    /// boxes, at most `i - 1` rows and one fewer distinct length. For
    /// `distinct = 1` the diagrams are the `i x j` rectangles with
    /// `i <= max_rows` and `i*j <= max_boxes`.
    pub fn young_diagrams(&self, max_boxes: u64, max_rows: u64, distinct: u64) -> BigUint {
        if distinct == 0 {
            return BigUint::one();
        }
        if max_boxes < distinct * (distinct + 1) / 2 || max_rows < distinct {
            return BigUint::zero();
        }
        let key = (max_boxes, max_rows, distinct);
        if let Some(v) = self.young.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = BigUint::zero();
        if distinct == 1 {
            for rows in 1..=max_rows {
                acc += BigUint::from(max_boxes / rows);
            }
        } else {
            // Boxes that the remaining distinct-1 distinct rows still need.
            let reserved = (distinct - 1) * distinct / 2;
            for rows in 1..=max_rows {
                let max_width = (max_boxes - reserved) / rows;
                for width in 1..=max_width {
                    acc += self.young_diagrams(max_boxes - rows * width, rows - 1, distinct - 1);
                }
            }
        }
        self.young
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| acc.clone());
        acc
    }
}

impl Default for CountTable {
    fn default() -> Self {
        CountTable::new()
    }
}

static SHARED: LazyLock<CountTable> = LazyLock::new(CountTable::new);

/// Process-wide shared memo table used by the free functions below.
pub fn shared_table() -> &'static CountTable {
    &SHARED
}

/// See [`CountTable::partitions`].
pub fn count_partitions(total: u64, distinct: u64) -> BigUint {
    SHARED.partitions(total, distinct)
}

/// See [`CountTable::partitions_at_most`].
pub fn count_partitions_at_most(max_total: u64, distinct: u64) -> BigUint {
    SHARED.partitions_at_most(max_total, distinct)
}

/// See [`CountTable::young_diagrams`].
pub fn count_young_diagrams(max_boxes: u64, max_rows: u64, distinct: u64) -> BigUint {
    SHARED.young_diagrams(max_boxes, max_rows, distinct)
}

/// Full table of partition counts by total and distinct part sizes, computed
/// through the truncated bivariate product
///
/// ```text
/// prod_{i=1}^{max_total} (1 + t * (x^i + x^{2i} + x^{3i} + ...))
/// ```
///
/// where the coefficient of `x^j t^d` counts partitions of `j` with `d`
/// distinct part sizes (choosing the `t`-term of factor `i` with exponent
/// `x^{i*r}` uses part size `i` with multiplicity `r`). Factors beyond
/// `i = max_total` only contribute above degree `max_total`, so truncating
/// the product there is exact.
///
/// Returns `table[j][d]` for `j <= max_total`, `d <= max_distinct`;
/// `table[0][0] = 1` by the empty-partition convention. This is an
/// independent route kept deliberately separate from the recurrence in
/// [`CountTable::partitions`].
pub fn gf_table(max_total: u64, max_distinct: u64) -> Vec<Vec<BigUint>> {
    let jm = max_total as usize;
    let dm = max_distinct as usize;
    let mut table = vec![vec![BigUint::zero(); dm + 1]; jm + 1];
    table[0][0] = BigUint::one();
    for i in 1..=jm {
        let prev = table.clone(); // the `1` of factor i keeps prev as-is
        for r in 1..=(jm / i) {
            let shift = i * r;
            for j in 0..=(jm - shift) {
                for d in 0..dm {
                    if !prev[j][d].is_zero() {
                        let add = prev[j][d].clone();
                        table[j + shift][d + 1] += add;
                    }
                }
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: enumerate all partitions of `j` as nondecreasing
    /// part lists and classify by distinct part sizes.
    fn oracle_partitions(total: u64, distinct: u64) -> u64 {
        fn rec(remaining: u64, min_part: u64, acc: &mut Vec<u64>, hits: &mut Vec<Vec<u64>>) {
            if remaining == 0 {
                hits.push(acc.clone());
                return;
            }
            for p in min_part..=remaining {
                acc.push(p);
                rec(remaining - p, p, acc, hits);
                acc.pop();
            }
        }
        let mut hits = Vec::new();
        rec(total, 1, &mut Vec::new(), &mut hits);
        hits.iter()
            .filter(|parts| Partition::new((*parts).clone()).distinct_parts() == distinct)
            .count() as u64
    }

    /// Brute-force oracle for Young diagrams: enumerate partitions with
    /// total <= max_boxes and at most max_rows parts.
    fn oracle_young(max_boxes: u64, max_rows: u64, distinct: u64) -> u64 {
        fn rec(
            budget: u64,
            max_rows: u64,
            min_part: u64,
            acc: &mut Vec<u64>,
            out: &mut Vec<Vec<u64>>,
        ) {
            out.push(acc.clone());
            if acc.len() as u64 == max_rows {
                return;
            }
            for p in min_part..=budget {
                acc.push(p);
                rec(budget - p, max_rows, p, acc, out);
                acc.pop();
            }
        }
        let mut all = Vec::new();
        rec(max_boxes, max_rows, 1, &mut Vec::new(), &mut all);
        all.iter()
            .filter(|parts| Partition::new((*parts).clone()).distinct_parts() == distinct)
            .count() as u64
    }

    #[test]
    fn partition_type_basics() {
        let p = Partition::new(vec![3, 1, 1, 2]);
        assert_eq!(p.parts(), &[1, 1, 2, 3]);
        assert_eq!(p.total(), 7);
        assert_eq!(p.part_count(), 4);
        assert_eq!(p.distinct_parts(), 3);
        assert_eq!(Partition::empty().distinct_parts(), 0);
    }

    #[test]
    fn distinct_part_counts_of_seven() {
        assert_eq!(count_partitions(7, 1), BigUint::from(2u32));
        assert_eq!(count_partitions(7, 2), BigUint::from(11u32));
        assert_eq!(count_partitions(7, 3), BigUint::from(2u32));
        for d in 4..=7 {
            assert_eq!(count_partitions(7, d), BigUint::zero());
        }
    }

    #[test]
    fn empty_partition_conventions() {
        assert_eq!(count_partitions(0, 0), BigUint::one());
        for j in 1..=6 {
            assert_eq!(count_partitions(j, 0), BigUint::zero());
        }
    }

    #[test]
    fn frozen_oracle_value() {
        // Computed with oracle_partitions and frozen.
        assert_eq!(oracle_partitions(10, 2), 22);
        assert_eq!(count_partitions(10, 2), BigUint::from(22u32));
    }

    #[test]
    fn matches_oracle_up_to_twenty() {
        for j in 0..=20u64 {
            for d in 0..=6u64 {
                assert_eq!(
                    count_partitions(j, d),
                    BigUint::from(oracle_partitions(j, d)),
                    "mismatch at (j, d) = ({j}, {d})"
                );
            }
        }
    }

    #[test]
    fn row_sums_give_unrestricted_partition_numbers() {
        // sum_d partitions(j, d) = p(j), checked against direct enumeration.
        for j in 0..=40u64 {
            let direct: u64 = (0..=j).map(|d| oracle_partitions(j, d)).sum();
            let summed: BigUint = (0..=j).map(|d| count_partitions(j, d)).sum();
            assert_eq!(summed, BigUint::from(direct), "p({j})");
        }
    }

    #[test]
    fn positivity_needs_triangular_total() {
        for j in 0..=25u64 {
            for d in 0..=8u64 {
                if !count_partitions(j, d).is_zero() {
                    assert!(
                        d * (d + 1) / 2 <= j,
                        "positive count at (j, d) = ({j}, {d})"
                    );
                }
            }
        }
    }

    #[test]
    fn cumulative_counts() {
        assert_eq!(count_partitions_at_most(2, 1), BigUint::from(3u32));
        for k in 0..=10 {
            assert_eq!(count_partitions_at_most(k, 0), BigUint::one());
        }
        assert_eq!(count_partitions_at_most(7, 3), BigUint::from(3u32));
    }

    #[test]
    fn gf_table_matches_recurrence() {
        let table = gf_table(30, 7);
        for j in 0..=30u64 {
            for d in 0..=7u64 {
                assert_eq!(
                    table[j as usize][d as usize],
                    count_partitions(j, d),
                    "generating-function mismatch at (j, d) = ({j}, {d})"
                );
            }
        }
    }

    #[test]
    fn gf_table_single_cell() {
        let table = gf_table(1, 1);
        assert_eq!(table[1][1], BigUint::one());
    }

    #[test]
    fn young_diagram_examples() {
        assert_eq!(count_young_diagrams(3, 2, 1), BigUint::from(4u32));
        assert_eq!(count_young_diagrams(2, 5, 2), BigUint::zero());
        assert_eq!(count_young_diagrams(3, 3, 2), BigUint::one());
        assert_eq!(count_young_diagrams(7, 0, 0), BigUint::one());
    }

    #[test]
    fn young_matches_direct_enumeration() {
        for b in 0..=12u64 {
            for c in 0..=12u64 {
                for d in 0..=4u64 {
                    assert_eq!(
                        count_young_diagrams(b, c, d),
                        BigUint::from(oracle_young(b, c, d)),
                        "mismatch at (b, c, d) = ({b}, {c}, {d})"
                    );
                }
            }
        }
    }

    #[test]
    fn cumulative_equals_square_young() {
        for k in 0..=25u64 {
            for d in 0..=6u64 {
                assert_eq!(
                    count_partitions_at_most(k, d),
                    count_young_diagrams(k, k, d),
                    "identity fails at (k, d) = ({k}, {d})"
                );
            }
        }
    }

    #[test]
    fn isolated_table_agrees_with_shared() {
        let local = CountTable::new();
        assert_eq!(local.partitions(12, 3), count_partitions(12, 3));
        assert_eq!(local.young_diagrams(9, 4, 2), count_young_diagrams(9, 4, 2));
    }
}
