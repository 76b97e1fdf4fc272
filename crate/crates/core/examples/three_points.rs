//! Data with three fixed points; every survivor should be a CP^2 action.

use circlefix::enumerate::{classify_three_points, is_cp2_form};

fn main() {
    let c = classify_three_points(4, &[1, 2, 3]).unwrap();
    for row in &c.rows {
        println!("n = {}: {} admissible", row.half_dim, row.admissible.len());
        for d in &row.admissible {
            println!("  {d}  CP^2 form: {}", is_cp2_form(d));
        }
    }
    println!("consistent (|w| <= 4): {}", c.consistent);
}
