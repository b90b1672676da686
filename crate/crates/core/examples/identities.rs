//! Runs the identity suite over a field given on the command line (default F_2).

use split_octonion::verify::{run_suite, Suite, VerifyOptions};
use split_octonion::PrimeField;

fn main() {
    let p = std::env::args().nth(1).map_or(2, |s| s.parse().expect("prime"));
    let f = PrimeField::new(p).expect("supported prime");
    let report = run_suite(Suite::Identities, f, &VerifyOptions { samples: 20_000, ..Default::default() }).unwrap();
    print!("{report}");
}
