//! Data with two fixed points in half-dimensions 1 to 4.

use circlefix::enumerate::classify_two_points;

fn main() {
    let max_weight = 3;
    let c = classify_two_points(max_weight, &[1, 2, 3, 4]).unwrap();
    for row in &c.rows {
        println!("n = {}: {} admissible", row.half_dim, row.admissible.len());
        for d in &row.admissible {
            println!("  {d}");
        }
    }
    println!("consistent with S^2 / S^6 forms (|w| <= {max_weight}): {}", c.consistent);
}
