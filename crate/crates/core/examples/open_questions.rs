//! Crowdedness and middle-range checks over small admissible data.

use circlefix::enumerate::{experiment_open_questions, EnumerationQuery};

fn main() {
    let mut total = 0;
    for n in 1..=3 {
        for k in 1..=4 {
            let r = experiment_open_questions(&EnumerationQuery::new(n, k, 3)).unwrap();
            total += r.admissible_count;
            println!("n={n} k={k}: {} admissible, {} violators", r.admissible_count, r.violators.len());
            for v in &r.violators {
                println!("  {}: {}", v.datum, serde_json::to_string(&v.failed).unwrap());
            }
        }
    }
    println!("{total} admissible data checked");
}
