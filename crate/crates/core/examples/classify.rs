//! Classifies the subalgebra generated by a few elements.

use split_octonion::classify::{classify, Features};
use split_octonion::record::SubalgebraRecord;
use split_octonion::subspace::closure;
use split_octonion::{Octonion, PrimeField};

fn main() {
    let f = PrimeField::GF3;
    let gens = [Octonion::new(f, [0, 1, 0, 0, 0, 0, 0, 0]), Octonion::new(f, [0, 0, 0, 0, 1, 0, 0, 0])];
    let a = closure(f, &gens);
    println!("closure = {a}");
    println!("features: {:?}", Features::of(&a));
    println!("label: {}", classify(&a).unwrap());
    println!("{}", SubalgebraRecord::analyze(a).to_json_line());
}
