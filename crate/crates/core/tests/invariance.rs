use std::sync::OnceLock;

use proptest::prelude::*;
use split_octonion::automorphism::GroupClosure;
use split_octonion::record::SubalgebraRecord;
use split_octonion::automorphism::{default_generators, generate_group};
use split_octonion::classify::classify;
use split_octonion::enumerate::{enumerate_subalgebras, EnumerationOptions};
use split_octonion::{OrbitLabel, PrimeField};

fn f2_group() -> &'static GroupClosure {
    static G: OnceLock<GroupClosure> = OnceLock::new();
    G.get_or_init(|| generate_group(PrimeField::GF2, &default_generators(PrimeField::GF2).unwrap(), 20_000))
}

fn f2_records() -> &'static [SubalgebraRecord] {
    static R: OnceLock<Vec<SubalgebraRecord>> = OnceLock::new();
    R.get_or_init(|| {
        enumerate_subalgebras(PrimeField::GF2, &(0..=8).collect::<Vec<_>>(), &EnumerationOptions::default()).unwrap()
    })
}

fn f3_partial_group() -> &'static GroupClosure {
    static G: OnceLock<GroupClosure> = OnceLock::new();
    G.get_or_init(|| generate_group(PrimeField::GF3, &default_generators(PrimeField::GF3).unwrap(), 2_000))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Labels are constant on orbits: moving a subalgebra keeps its label.
    #[test]
    fn labels_survive_automorphisms(g_idx in 0usize..12096, r_idx in 0usize..2491) {
        let (group, records) = (f2_group(), f2_records());
        let g = &group.elements[g_idx % group.order()];
        let r = &records[r_idx % records.len()];
        let moved = g.apply_subspace(&r.space);
        prop_assert!(moved.is_closed());
        prop_assert_eq!(classify(&moved).ok(), r.label);
    }

    #[test]
    fn automorphisms_preserve_norm_and_trace(g_idx in 0usize..20_000, x in proptest::array::uniform8(0u8..3)) {
        let f = PrimeField::GF3;
        let group = f3_partial_group();
        let g = &group.elements[g_idx % group.order()];
        let x = split_octonion::Octonion::from_coords(f, x);
        let y = g.apply(&x);
        prop_assert_eq!((y.norm(), y.trace()), (x.norm(), x.trace()));
    }
}

#[test]
fn dimension_six_is_one_label_over_f3() {
    let f = PrimeField::GF3;
    let records = enumerate_subalgebras(f, &[6], &EnumerationOptions::default()).unwrap();
    assert_eq!(records.len(), 364);
    assert!(records.iter().all(|r| r.label == Some(OrbitLabel::Dim6)));
}
