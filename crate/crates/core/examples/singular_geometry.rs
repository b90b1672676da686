//! Left and right ideals of a singular element and how they meet.

use split_octonion::constructions::{find_isomorphism, left_kernel, left_mul_space, right_mul_space};
use split_octonion::verify::singular_directions;
use split_octonion::PrimeField;

fn main() {
    let f = PrimeField::GF2;
    let dirs = singular_directions(f);
    let nilpotent = dirs.iter().filter(|a| a.trace().is_zero()).count();
    println!("{} singular directions over {f}, {nilpotent} nilpotent", dirs.len());

    let a = dirs[0];
    let ao = left_mul_space(&a);
    println!("a = {a}");
    println!("aO = {ao}");
    println!("aO = ker of left multiplication by conj(a): {}", ao == left_kernel(&a.conj()));
    println!("aO closed: {}", ao.is_closed());

    let mut table = std::collections::BTreeMap::new();
    for b in &dirs {
        let d = ao.intersection(&left_mul_space(b)).dim();
        *table.entry(d).or_insert(0) += 1;
    }
    println!("dim(aO ∩ bO) over all b: {table:?}");

    let n = dirs.iter().find(|x| x.trace().is_zero()).unwrap();
    let iso = find_isomorphism(&left_mul_space(n), &right_mul_space(n));
    println!("nO isomorphic to On for n = {n}: {}", iso.is_some());
}
