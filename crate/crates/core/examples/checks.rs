//! Every check on a few data, including ones that fail.

use circlefix::fpdata::{gen_cpn, gen_s6, FixedPointDatum};
use circlefix::verify::{run_all_checks, theorem_scope, CheckOptions, Outcome};

fn show(label: &str, d: &FixedPointDatum) {
    println!("== {label}: {d}");
    for r in run_all_checks(d, &CheckOptions { strict_pairing: true }) {
        let tag = match r.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::NotApplicable => "n/a",
            Outcome::Skipped => "skip",
        };
        let witness = r
            .witness
            .map(|w| serde_json::to_string(&w).unwrap())
            .unwrap_or_default();
        println!("  {tag:4} {:28} {witness}", r.check.as_str());
    }
}

fn main() {
    show("S^6", &gen_s6(1, 2).unwrap());
    show("CP^3", &gen_cpn(&[0, 1, 2, 3]).unwrap());
    show(
        "unpaired weight",
        &FixedPointDatum::new(1, vec![vec![1], vec![2]]).unwrap(),
    );
    show(
        "not rigid",
        &FixedPointDatum::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap(),
    );
    let scope = theorem_scope(&gen_cpn(&[0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap());
    println!("CP^8 scope: {}", serde_json::to_string_pretty(&scope).unwrap());
}
