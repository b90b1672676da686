//! An isotope of the octonions: a new product with its own unit and a scaled norm.

use split_octonion::{IsotopeAlgebra, Octonion, PrimeField};

fn main() {
    let f = PrimeField::GF5;
    let a = Octonion::new(f, [1, 2, 0, 1, 0, 3, 0, 0]);
    let b = Octonion::new(f, [2, 0, 1, 1, 1, 0, 0, 4]);
    let iso = IsotopeAlgebra::new(a, b).unwrap();
    let e = iso.neutral();
    println!("neutral element {e}, scale {}", iso.scale());

    let x = Octonion::new(f, [0, 1, 2, 3, 4, 0, 1, 2]);
    let y = Octonion::new(f, [3, 3, 0, 1, 2, 2, 0, 1]);
    let xy = iso.mul(&x, &y);
    println!("x * y = {xy}");
    println!("e * x = x: {}", iso.mul(&e, &x) == x);
    println!("s N(x*y) = N(x) N(y): {}", iso.scale() * xy.norm() == x.norm() * y.norm());
}
