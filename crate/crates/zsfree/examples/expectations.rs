//! Exact expected counts of zero-sum free sequences in Bernoulli(p) random
//! subsets, per distinct-element class and in first-order form.
//!
//! Run with `cargo run --example expectations`.

use num::{BigInt, BigRational};
use zsfree::structure::{
    expectation_by_distinct, expectation_first_order, expectation_total, max_distinct_count,
};
use zsfree::CyclicGroup;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let group = CyclicGroup::new(101).unwrap();
    let k = 2;

    println!(
        "expected counts over C_101, k = {k} (sequence length {}):\n",
        101 - 1 - k
    );
    println!("{:<8} {:<16} {:<16} total", "p", "class d=1", "class d=2");
    for (num, denom) in [
        (1i64, 10i64),
        (1, 5),
        (3, 10),
        (1, 4),
        (1, 2),
        (3, 4),
        (1, 1),
    ] {
        let p = ratio(num, denom);
        let d1 = expectation_by_distinct(group, k, 1, &p).unwrap();
        let d2 = expectation_by_distinct(group, k, 2, &p).unwrap();
        let total = expectation_total(group, k, &p).unwrap();
        println!("{:<8} {:<16} {:<16} {}", p.to_string(), d1, d2, total);
    }

    let p = ratio(3, 10);
    let total = expectation_total(group, k, &p).unwrap();
    println!("\nat p = 3/10 the exact total is {total} (= 30 + 27)");

    let (leading, correction) = expectation_first_order(group, k, &p).unwrap();
    println!(
        "first-order form: leading term {} with correction coefficient {},",
        leading, correction
    );
    println!(
        "so the total lies within leading * {} * p of the leading term for p <= 1.",
        correction
    );

    println!("\nclass breakdown for a larger k over C_1009:");
    let group = CyclicGroup::new(1009).unwrap();
    let k = 10;
    let p = ratio(1, 100);
    for d in 1..=max_distinct_count(k) {
        println!(
            "  d = {d}: {}",
            expectation_by_distinct(group, k, d, &p).unwrap()
        );
    }
    println!("  total: {}", expectation_total(group, k, &p).unwrap());
}
