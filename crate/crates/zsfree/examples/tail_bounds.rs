//! Tail-bound evaluation: pinned conditional-expectation bounds, the derived
//! (E', E*) pair, and the polynomial-concentration threshold and failure
//! probability across a lambda grid.
//!
//! Run with `cargo run --example tail_bounds`.

use num::{BigInt, BigRational};
use zsfree::bounds::{
    e_prime_and_star, e_single_bound, e_subset_bound, is_vacuous, kim_vu_failure_prob,
    kim_vu_threshold, ratio_to_f64, KimVuParams,
};
use zsfree::structure::{max_distinct_count, Statistic};
use zsfree::CyclicGroup;

fn main() {
    let n = 101u64;
    let group = CyclicGroup::new(n).unwrap();
    let k = 2;
    let p = BigRational::new(BigInt::from(3), BigInt::from(10));
    let dmax = max_distinct_count(k);

    println!("pinned conditional-expectation bounds over C_{n}, k = {k}, p = {p}:\n");
    for d in 1..=dmax {
        println!(
            "  one pinned element, class d={d}: {}",
            e_single_bound(k, d, &p).unwrap()
        );
        for i in 1..=d {
            println!(
                "  {i} pinned elements,  class d={d}: {}",
                e_subset_bound(k, d, i, &p).unwrap()
            );
        }
    }

    for (label, statistic, ell) in [
        ("total count", Statistic::Total, dmax),
        ("class d=2", Statistic::ByDistinct(2), 2),
    ] {
        let (e_prime, e_star) = e_prime_and_star(group, k, statistic, &p).unwrap();
        println!("\nstatistic: {label} (edge size {ell})");
        println!("  E' = {e_prime} = {}", ratio_to_f64(&e_prime));
        println!("  E* = {e_star} = {}", ratio_to_f64(&e_star));
        println!(
            "  {:>10} {:>14} {:>16} binding?",
            "lambda", "threshold", "failure bound"
        );
        let base = ell as f64 * (n as f64).ln();
        for lambda in [1.5, base / 2.0, base, 2.0 * base] {
            let params = KimVuParams {
                ell,
                lambda,
                n,
                e_prime: ratio_to_f64(&e_prime),
                e_star: ratio_to_f64(&e_star),
            };
            let threshold = kim_vu_threshold(&params).unwrap();
            let failure = kim_vu_failure_prob(&params).unwrap();
            println!(
                "  {:>10.3} {:>14.2} {:>16.3e} {}",
                lambda,
                threshold,
                failure,
                if is_vacuous(failure) {
                    "vacuous"
                } else {
                    "yes"
                }
            );
        }
    }

    println!("\nThe failure bound beats 1 only once lambda is a few log n;");
    println!("the matching threshold then scales like sqrt(E' E*) (log n)^ell.");
}
