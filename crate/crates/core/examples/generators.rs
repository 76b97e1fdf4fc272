//! Generator families and the constructions built from them.

use circlefix::fpdata::{disjoint_union, gen_cpn, gen_s2, gen_s6, product, product_power};
use circlefix::verify::chi_vector;

fn main() {
    let s2 = gen_s2(1).unwrap();
    let s6 = gen_s6(1, 2).unwrap();
    let cp2 = gen_cpn(&[0, 1, 3]).unwrap();

    for d in [&s2, &s6, &cp2] {
        println!("{d}\n  N = {:?}, chi = {:?}", d.n_vector().0, chi_vector(d).unwrap().0);
    }

    let s2s6 = product(&s2, &s6);
    println!("S^2 x S^6: {} points, N = {:?}", s2s6.len(), s2s6.n_vector().0);

    let torus = product_power(&s2, 3);
    println!("(S^2)^3: {torus}");

    let two_cp2 = disjoint_union(&cp2, &cp2.sign_flip()).unwrap();
    println!("CP^2 + flipped CP^2: N = {:?}", two_cp2.n_vector().0);
    println!("canonical form: {}", two_cp2.canonicalize());
    println!("JSON: {}", serde_json::to_string(&cp2).unwrap());

    for bad in [gen_cpn(&[0, 1, 1]).map(|_| ()), gen_s6(0, 1).map(|_| ())] {
        println!("rejected: {}", bad.unwrap_err());
    }
}
