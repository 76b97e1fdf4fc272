//! Localization sums for the `S^6` action and for a non-rigid datum.
//!
//! Run with `cargo run --example localization`.

use circlefix::fpdata::{gen_s6, FixedPointDatum};
use circlefix::poly::{elementary_symmetric, one_minus_t_pow, RationalFunction};
use circlefix::verify::{chi_vector, localization_sum};

fn main() {
    let s6 = gen_s6(1, 2).unwrap();
    println!("{s6}");

    // one term by hand: sigma_1(t^w) / prod (1 - t^w) at the first point
    let p = &s6.points()[0];
    let numer = elementary_symmetric(1, p.weights()).unwrap();
    let denom = p
        .weights()
        .iter()
        .map(|&w| one_minus_t_pow(w).unwrap())
        .fold(circlefix::poly::LaurentPolynomial::one(), |acc, f| &acc * &f);
    let term = RationalFunction::new(numer, denom).unwrap();
    println!("degree-1 term at {p}: {term}");

    for i in 0..=3 {
        let sum = localization_sum(&s6, i).unwrap();
        println!("chi^{i} = {}", sum.constant_value().unwrap());
    }
    println!("chi vector: {:?}", chi_vector(&s6).unwrap().0);

    let bad = FixedPointDatum::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap();
    for i in 0..=2 {
        println!("{bad}, degree {i}: {}", localization_sum(&bad, i).unwrap().simplify());
    }
    println!("{}", chi_vector(&bad).unwrap_err());
}
