//! The worked example over C_8: every zero-sum free sequence of length 5,
//! its generator-form representation, and the support/weight table.
//!
//! Run with `cargo run --example worked_example`.

use zsfree::structure::{enumerate_structured, support_map};
use zsfree::CyclicGroup;

fn main() {
    let group = CyclicGroup::new(8).unwrap();
    let k = 2;

    let enumeration = enumerate_structured(group, k, true).unwrap();
    println!(
        "zero-sum free sequences of length {} over C_8 (k = {k}):\n",
        8 - 1 - k
    );
    println!("generator  multipliers  sequence");
    for (config, multiset) in &enumeration.pairs {
        let multipliers: Vec<String> = config.multipliers().iter().map(|x| x.to_string()).collect();
        println!(
            "{:<10} {:<12} {}",
            config.generator,
            multipliers.join(","),
            multiset
        );
    }
    println!(
        "\n{} representations, {} distinct sequences, {} collisions",
        enumeration.representation_count(),
        enumeration.distinct.len(),
        enumeration.collisions.len()
    );

    let map = support_map(group, k).unwrap();
    println!("\nsupport sets and their weights (sequences sharing the support):\n");
    println!("{:<12} weight", "support");
    for (support, weight) in map.entries() {
        let support: Vec<String> = support.iter().map(|r| r.to_string()).collect();
        println!("{{{}}}{:<6} {}", support.join(","), "", weight);
    }
    println!("\ntotal weight: {}", map.total_weight());
}
