//! Builds the named subalgebras from matrix data and prints their labels.

use split_octonion::classify::classify;
use split_octonion::constructions::{
    first_row, heisenberg, quaternions, right_ideal_double, upper_triangular, NamedElements,
};
use split_octonion::{OrbitLabel, PrimeField};

fn main() {
    let f = PrimeField::GF3;
    let n = NamedElements::new(f);
    println!("n0 (p0 w) = {}", n.n0 * n.p0w);

    let l = first_row(f);
    for (name, a) in [("H", quaternions(f)), ("U", upper_triangular(f))] {
        let s = right_ideal_double(&a, &l).unwrap();
        println!("{name} + Lw: dim {}, label {}", s.dim(), classify(&s).unwrap());
    }

    let h = heisenberg(&n.n0, &n.p0w).unwrap();
    println!("Heisenberg span{{n0, p0w, n0 p0w}} = {h}, label {}", classify(&h).unwrap());

    for l in OrbitLabel::reachable_labels(f) {
        let s = split_octonion::rep(l, f).unwrap();
        println!("{:>12}  dim {}  {}", l.name(), s.dim(), s);
    }
}
