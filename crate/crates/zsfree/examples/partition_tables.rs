//! Partition counts by distinct part sizes, their cumulative form, and
//! Young-diagram counts, including the generating-function cross-check.
//!
//! Run with `cargo run --example partition_tables`.

use zsfree::partition::{
    count_partitions, count_partitions_at_most, count_young_diagrams, gf_table,
};

fn main() {
    println!("partitions of j with exactly d distinct part sizes, j <= 12:\n");
    print!("{:>4}", "j\\d");
    for d in 1..=4 {
        print!("{d:>8}");
    }
    println!();
    for j in 1..=12u64 {
        print!("{j:>4}");
        for d in 1..=4u64 {
            print!("{:>8}", count_partitions(j, d));
        }
        println!();
    }

    println!("\ncumulative counts (total at most k), k <= 12:\n");
    print!("{:>4}", "k\\d");
    for d in 1..=4 {
        print!("{d:>8}");
    }
    println!();
    for k in 1..=12u64 {
        print!("{k:>4}");
        for d in 1..=4u64 {
            print!("{:>8}", count_partitions_at_most(k, d));
        }
        println!();
    }

    println!("\nthe cumulative count equals the square Young-diagram count:\n");
    for (k, d) in [(12u64, 2u64), (20, 3), (40, 4), (60, 5)] {
        let x = count_partitions_at_most(k, d);
        let y = count_young_diagrams(k, k, d);
        println!("  k={k:<3} d={d}: at_most = {x:<12} young(k,k,d) = {y}");
        assert_eq!(x, y);
    }

    println!("\ngenerating-function route agrees with the recurrence up to (30, 7):");
    let table = gf_table(30, 7);
    let mut checked = 0;
    for j in 0..=30u64 {
        for d in 0..=7u64 {
            assert_eq!(table[j as usize][d as usize], count_partitions(j, d));
            checked += 1;
        }
    }
    println!("  {checked} cells identical");

    println!("\nlarge exact values (arbitrary precision):");
    for (k, d) in [(200u64, 10u64), (400, 12)] {
        println!(
            "  partitions with total <= {k} and {d} distinct sizes: {}",
            count_partitions_at_most(k, d)
        );
    }
}
