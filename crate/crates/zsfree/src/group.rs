//! Residue arithmetic in the cyclic group `C_n`, Euler's totient, and
//! generator enumeration.

use crate::error::{Error, Result};

/// The cyclic group `C_n` with elements stored as canonical residues in
/// `[0, n-1]`.
///
/// `n >= 1` is accepted for plain arithmetic; sequence-level operations
/// require `n >= 2` and check it themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicGroup {
    n: u64,
}

impl CyclicGroup {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        Ok(CyclicGroup { n })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Canonical residue of an arbitrary integer.
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.n
    }

    /// `(a + b) mod n` for canonical residues `a`, `b`.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.n && b < self.n);
        ((a as u128 + b as u128) % self.n as u128) as u64
    }

    /// `(c * a) mod n` for a canonical residue `a` and any scalar `c >= 0`.
    pub fn scalar_mul(&self, c: u64, a: u64) -> u64 {
        debug_assert!(a < self.n);
        ((c as u128 * a as u128) % self.n as u128) as u64
    }

    /// Number of generators of `C_n`, i.e. `totient(n)`.
    pub fn generator_count(&self) -> u64 {
        totient(self.n)
    }

    /// Ascending list of the generators of `C_n` (residues coprime to `n`).
    ///
    /// Meaningful for `n >= 2`; for `n = 1` the list is empty.
    pub fn generators(&self) -> Vec<u64> {
        (1..self.n).filter(|&u| gcd(u, self.n) == 1).collect()
    }

    pub fn is_generator(&self, a: u64) -> bool {
        a >= 1 && a < self.n && gcd(a, self.n) == 1
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euler's totient by trial-division factorization; `totient(1) = 1`.
///
/// Adequate for desk-scale orders (up to around `10^9`); all inputs in this
/// crate stay far below that.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut m = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            result -= result / p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
