//! Exact combinatorics of zero-sum free sequences over the cyclic group `C_n`,
//! together with randomized validation of their behaviour inside Bernoulli
//! random subsets.
//!
//! A sequence over `C_n` is an unordered multiset of group elements; it is
//! *zero-sum free* when no nonempty sub-multiset sums to the identity. In the
//! long-length regime (length `n-1-k` with `k <= n/3`) such sequences are
//! generated by a generator `g` repeated many times plus `k` small multiples
//! of `g`, which makes exact counting, exact expectations under the random
//! subset model, and tail-bound evaluation all tractable. This crate provides:
//!
//! - [`group`]: residue arithmetic in `C_n`, Euler's totient, generators;
//! - [`sequence`]: multiset sequences, the zero-sum-free predicate, and a
//!   brute-force enumerator used as ground truth;
//! - [`partition`]: exact, memoized partition and Young-diagram counts with
//!   arbitrary precision;
//! - [`structure`]: generator-form enumeration, exact counts per
//!   distinct-element class, support/weight maps, and exact expectations;
//! - [`subset`]: reproducible Bernoulli subsets and exact counting of the
//!   sequences contained in a subset;
//! - [`bounds`]: Chernoff and polynomial-concentration tail bounds plus the
//!   exact-rational conditional-expectation bounds they need;
//! - [`montecarlo`]: a deterministic, seedable trial harness comparing
//!   empirical statistics against the exact formulas and bounds;
//! - [`report`] and [`cli`]: the table/record format and the command-line
//!   front end (`count`, `expect`, `enumerate`, `support`, `partitions`,
//!   `bounds`, `simulate`, `verify`).
//!
//! Counts are exact [`num::BigUint`] values and probabilities are exact
//! [`num::BigRational`] values throughout; floating point appears only in
//! Monte Carlo summaries and in bound factors that are genuinely irrational.
//!
//! The `examples/` directory contains one runnable program per capability;
//! `cargo run --example worked_example` is a good place to start.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod group;
pub mod montecarlo;
pub mod partition;
pub mod report;
pub mod sequence;
pub mod structure;
pub mod subset;

pub use error::{Error, Result};
pub use group::CyclicGroup;
pub use sequence::SequenceMultiset;
pub use structure::Statistic;
