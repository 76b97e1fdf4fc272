//! Kosniowski bound against the fewest fixed points of known products.

use circlefix::enumerate::bound_table;
use circlefix::verify::chi_vector;

fn main() {
    println!("{:>4} {:>6} {:>6}  manifold", "dim", "bound", "known");
    for row in bound_table(12) {
        let witness = row.witness();
        assert_eq!(witness.len(), row.known_minimum);
        assert!(chi_vector(&witness).is_ok());
        println!(
            "{:>4} {:>6} {:>6}  {}",
            row.dim, row.kosniowski_bound, row.known_minimum, row.known_manifold
        );
    }
}
