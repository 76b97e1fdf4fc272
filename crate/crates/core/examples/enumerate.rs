//! Pruned parallel enumeration, checked against the brute-force search.
//!
//! `cargo run --release --example enumerate -- 2 4 3` enumerates half-dimension
//! 2, four points, weights up to 3.

use circlefix::enumerate::{brute_force_admissible, enumerate_admissible, EnumerationQuery};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let (n, k, w) = match args[..] {
        [n, k, w] => (n, k, w as i64),
        _ => (2, 4, 3),
    };
    let q = EnumerationQuery::new(n, k, w);
    let report = enumerate_admissible(&q).unwrap();
    println!(
        "n={n} k={k} |w|<={w}: {} admissible in {:.2?}",
        report.admissible.len(),
        report.wall_time
    );
    for (d, g) in report.admissible.iter().zip(&report.diagnostics) {
        println!("  {d}  N={:?} types={:?}", g.n_vector.0, g.weight_types);
    }
    println!("candidates: {}", report.counters.candidates);
    for (stage, count) in &report.counters.pruned {
        println!("  pruned at {stage}: {count}");
    }

    match brute_force_admissible(&q) {
        Ok(oracle) => println!("brute force agrees: {}", oracle.admissible == report.admissible),
        Err(e) => println!("brute force skipped: {e}"),
    }
    let flipped = enumerate_admissible(&q.clone().dedup_sign_flip(true)).unwrap();
    println!("up to sign flip: {}", flipped.admissible.len());
}
