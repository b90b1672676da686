//! Every subalgebra of the split octonions over F_2, counted by dimension and label.

use std::time::Instant;

use split_octonion::enumerate::{census_report, enumerate_subalgebras, EnumerationOptions};
use split_octonion::PrimeField;

fn main() {
    let f = PrimeField::GF2;
    let dims: Vec<usize> = (0..=8).collect();
    let start = Instant::now();
    let records = enumerate_subalgebras(f, &dims, &EnumerationOptions::default()).unwrap();
    let summary = census_report(f, &dims, &records);
    println!("scanned {} subspaces in {:.2?}", summary.total_scanned(), start.elapsed());
    for ((d, l), n) in &summary.counts {
        println!("  dim {d}  {:<12} {n}", l.to_string());
    }
    println!("unlabeled: {}", summary.unlabeled.len());
    println!("first record: {}", records[1].to_json_line());
}
