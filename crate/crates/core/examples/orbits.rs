//! Generates the automorphism group over F_2 and splits subalgebras into orbits.

use split_octonion::automorphism::{default_generators, generate_group, orbit_partition, orbit_reports};
use split_octonion::enumerate::{enumerate_subalgebras, EnumerationOptions};
use split_octonion::PrimeField;

fn main() {
    let f = PrimeField::GF2;
    let gens = default_generators(f).unwrap();
    let group = generate_group(f, &gens, 20_000);
    println!("{} generators, group order {}", gens.len(), group.order());

    let records = enumerate_subalgebras(f, &[1, 2, 3, 4], &EnumerationOptions::default()).unwrap();
    let orbits = orbit_partition(&records, &gens).unwrap();
    for r in orbit_reports(&records, &orbits) {
        println!("{}", serde_json::to_string(&r).unwrap());
    }
}
