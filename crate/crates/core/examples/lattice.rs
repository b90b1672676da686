//! Inclusion lattice of orbit types, as DOT (default) or JSON.
//!
//! `cargo run --example lattice -- 3 json`

use split_octonion::lattice::{build_lattice, emit_dot, emit_json};
use split_octonion::PrimeField;

fn main() {
    let mut args = std::env::args().skip(1);
    let p = args.next().map_or(2, |s| s.parse().expect("prime"));
    let g = build_lattice(PrimeField::new(p).expect("supported prime")).unwrap();
    match args.next().as_deref() {
        Some("json") => print!("{}", emit_json(&g)),
        _ => print!("{}", emit_dot(&g)),
    }
}
