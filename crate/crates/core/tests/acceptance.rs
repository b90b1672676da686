//! Acceptance criteria 1-7. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use split_octonion::automorphism::{default_generators, generate_group, DEFAULT_GROUP_CAP};
use split_octonion::classify::{classify, OrbitLabel};
use split_octonion::composition::{Gf2Table, Octonion};
use split_octonion::constructions::{
    centralizer, first_row, left_mul_space, quaternions, rep, right_ideal_double, right_mul_space,
    upper_triangular, NamedElements,
};
use split_octonion::enumerate::{census_report, enumerate_subalgebras, EnumerationOptions};
use split_octonion::lattice::{build_lattice, emit_dot};
use split_octonion::subspace::Subspace;
use split_octonion::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use split_octonion::PrimeField;

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn report_failure(reports: &[SuiteReport]) -> String {
    reports
        .iter()
        .filter_map(|r| r.first_failure().map(|c| format!("{} over F_{}: {} ({:?})", r.suite, r.field, c.name, c.counterexample)))
        .next()
        .unwrap_or_default()
}

fn suite(s: Suite, p: u64, opts: &VerifyOptions) -> SuiteReport {
    run_suite(s, PrimeField::new(p).unwrap(), opts).unwrap_or_else(|e| panic!("{s} over F_{p}: {e}"))
}

// ------------------------------------------------------------- oracles

/// Number of k-subspaces of F_q^n by the q-Pascal recursion.
fn q_pascal(n: usize, k: usize, q: u128) -> u128 {
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for j in 1..m {
            next[j] = row[j - 1] + q.pow(j as u32) * row[j];
        }
        row = next;
    }
    row[k]
}

/// Counts the unital multiplicative bijections of the octonions over F_2 by
/// trying every image of the generating triple (E12, E21, w).
fn brute_force_automorphism_count() -> usize {
    let t = Gf2Table::new();
    let f = PrimeField::GF2;
    let pack = |x: Octonion| Gf2Table::pack(&x);
    let a = pack(Octonion::basis(f, 1));
    let b = pack(Octonion::basis(f, 2));
    let c = pack(Octonion::basis(f, 4) + Octonion::basis(f, 7));
    // Words in the generators: their values on (a, b, c) form a basis.
    type Word = fn(&Gf2Table, u8, u8, u8) -> u8;
    let words: [Word; 8] = [
        |t, a, b, _| t.mul(a, b),
        |_, a, _, _| a,
        |_, _, b, _| b,
        |t, a, b, _| t.mul(b, a),
        |t, a, b, c| t.mul(t.mul(a, b), c),
        |t, a, _, c| t.mul(a, c),
        |t, _, b, c| t.mul(b, c),
        |t, a, b, c| t.mul(t.mul(b, a), c),
    ];
    let source: Vec<u8> = words.iter().map(|w| w(&t, a, b, c)).collect();
    let source_basis: Vec<Octonion> = source.iter().map(|&x| Gf2Table::unpack(x)).collect();
    assert_eq!(Subspace::from_octonions(f, &source_basis).dim(), 8, "words do not span");
    // Matrix taking a packed vector to its coordinates in the word basis.
    let coords_in_words: Vec<[u8; 8]> = (0..8)
        .map(|i| {
            let target = 1u8 << i;
            (0u16..256)
                .map(|m| m as u8)
                .find(|&m| (0..8).filter(|j| m >> j & 1 == 1).fold(0u8, |acc, j| acc ^ source[j]) == target)
                .map(|m| std::array::from_fn(|j| m >> j & 1))
                .expect("basis")
        })
        .collect();
    let nil: Vec<u8> = (1..=255u8).filter(|&x| t.mul(x, x) == 0).collect();
    let mut count = 0;
    for &a2 in &nil {
        for &b2 in &nil {
            if t.mul(a2, b2) ^ t.mul(b2, a2) != 0b1001 {
                continue;
            }
            for c2 in 0..=255u8 {
                if t.mul(c2, c2) != 0b1001 || t.trace(c2) != 0 {
                    continue;
                }
                let image: Vec<u8> = words.iter().map(|w| w(&t, a2, b2, c2)).collect();
                // phi(e_i) = sum over word-coordinates of e_i of the word images.
                let phi: Vec<u8> = coords_in_words
                    .iter()
                    .map(|cw| (0..8).filter(|&j| cw[j] == 1).fold(0u8, |acc, j| acc ^ image[j]))
                    .collect();
                let apply = |x: u8| (0..8).filter(|i| x >> i & 1 == 1).fold(0u8, |acc, i| acc ^ phi[i]);
                let bijective = (1..=255u8).all(|x| apply(x) != 0);
                let multiplicative = bijective
                    && (0..8).all(|i| (0..8).all(|j| apply(t.mul(1 << i, 1 << j)) == t.mul(phi[i], phi[j])));
                if multiplicative {
                    count += 1;
                }
            }
        }
    }
    count
}

fn read_edges(name: &str) -> BTreeSet<(String, String)> {
    std::fs::read_to_string(format!("{FIXTURES}/{name}"))
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            (it.next().unwrap().to_string(), it.next().unwrap().to_string())
        })
        .collect()
}

fn computed_edges(p: u64) -> BTreeSet<(String, String)> {
    build_lattice(PrimeField::new(p).unwrap())
        .unwrap()
        .edges
        .iter()
        .map(|(x, y)| (x.name().to_string(), y.name().to_string()))
        .collect()
}

// ------------------------------------------------------------- criteria

fn criterion_1() -> Outcome {
    let opts = VerifyOptions::default();
    let start = Instant::now();
    let f2 = suite(Suite::Identities, 2, &opts);
    let f2_time = start.elapsed();
    let odd = [3, 5].map(|p| suite(Suite::Identities, p, &opts));
    let samples_ok = odd.iter().all(|r| r.checks.iter().take(9).all(|c| c.checked >= 100_000));
    let all = [f2.clone(), odd[0].clone(), odd[1].clone()];
    let ok = all.iter().all(SuiteReport::passed) && samples_ok && f2_time < Duration::from_secs(10);
    let checked: u64 = f2.checks.iter().map(|c| c.checked).sum();
    outcome(
        ok,
        format!("F_2 exhaustive {checked} instances in {f2_time:.2?} (<10s), F_3/F_5 >=1e5 samples each {}", report_failure(&all)),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = suite(Suite::Singular, 2, &VerifyOptions::default());
    let elapsed = start.elapsed();
    let dirs = r.check("aO = ker lambda_conj(a)").map_or(0, |c| c.checked);
    // (2^4 - 1)(2^3 + 1) nonzero singular vectors, each its own line.
    let ok = r.passed() && dirs == 135 && elapsed < Duration::from_secs(60);
    outcome(ok, format!("{dirs} singular directions, intersection table and non-isomorphism in {elapsed:.2?} (<60s) {}", report_failure(&[r])))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let reports = [2, 3].map(|p| suite(Suite::Centralizers, p, &VerifyOptions::default()));
    let elapsed = start.elapsed();
    let g3 = PrimeField::GF3;
    let n = NamedElements::new(g3);
    let example = centralizer(&n.n0) == Subspace::from_octonions(g3, &[n.one, n.n0, n.n0w, n.p0bar_w]);
    let ok = reports.iter().all(SuiteReport::passed) && example && elapsed < Duration::from_secs(30);
    outcome(ok, format!("all elements of F_2 and F_3 in {elapsed:.2?} (<30s), n0 example {example} {}", report_failure(&reports)))
}

fn criterion_4() -> Outcome {
    let f = PrimeField::GF2;
    let start = Instant::now();
    let dims: Vec<usize> = (0..=8).collect();
    let records = enumerate_subalgebras(f, &dims, &EnumerationOptions::default()).unwrap();
    let summary = census_report(f, &dims, &records);
    let (checks, _) = split_octonion::verify::classification_checks(f, &dims, &records, &summary);
    let elapsed = start.elapsed();
    let expected_scan: u128 = (0..=8).map(|k| q_pascal(8, k, 2)).sum();
    let scan_ok = summary.total_scanned() == expected_scan;
    let failed = checks.iter().find(|c| !c.passed());
    let ok = scan_ok && failed.is_none() && summary.unlabeled.is_empty() && elapsed < Duration::from_secs(120);
    outcome(
        ok,
        format!(
            "scanned {} subspaces (q-Pascal oracle {expected_scan}), {} subalgebras, all labeled, census theorems hold in {elapsed:.2?} (<2min){}",
            summary.total_scanned(),
            records.len(),
            failed.map(|c| format!("; failed: {} {:?}", c.name, c.counterexample)).unwrap_or_default()
        ),
    )
}

fn criterion_5() -> Outcome {
    let f = PrimeField::GF2;
    let start = Instant::now();
    let r = suite(Suite::Orbits, 2, &VerifyOptions::default());
    let group = generate_group(f, &default_generators(f).unwrap(), DEFAULT_GROUP_CAP);
    let gate_time = start.elapsed();
    let oracle_start = Instant::now();
    let brute = brute_force_automorphism_count();
    let oracle_time = oracle_start.elapsed();
    let elements_checked = {
        // Every nonzero element lies in exactly one orbit, grouped by (N, tr).
        let orbits = split_octonion::automorphism::element_orbits(f, &group.generators);
        orbits.iter().map(Vec::len).sum::<usize>()
    };
    let ok = r.passed()
        && group.complete
        && group.order() == brute
        && elements_checked == 256
        && gate_time + oracle_time < Duration::from_secs(300);
    outcome(
        ok,
        format!(
            "closure order {} vs brute-force count {brute}; every label class one orbit; element orbits = (N,tr) classes over {elements_checked} elements; {:.2?} (<5min) {}",
            group.order(),
            gate_time + oracle_time,
            report_failure(&[r])
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    let f2_ok = computed_edges(2) == read_edges("lattice_char2.edges");
    // Two drawn edges into nOcapOn would put an idempotent inside an algebra
    // with only nilpotent elements; they are checked to be impossible and
    // excluded from the comparison.
    let f3 = PrimeField::GF3;
    let heis = rep(OrbitLabel::HeisNOcapOn, f3).unwrap();
    let heis_nil = heis.elements().iter().filter(|x| !x.is_zero()).all(Octonion::is_nilpotent);
    let erratum: BTreeSet<(String, String)> =
        [("Fn+Fp", "nOcapOn"), ("Fn+Fpbar", "nOcapOn")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let has_idempotent = |l: OrbitLabel| rep(l, f3).unwrap().elements().iter().any(|x| *x * *x == *x && !x.is_zero());
    let erratum_impossible = heis_nil && has_idempotent(OrbitLabel::FnFp) && has_idempotent(OrbitLabel::FnFpbar);
    let odd_fixture = read_edges("lattice_odd.edges");
    let drawn_but_absent: Vec<_> = odd_fixture.difference(&computed_edges(3)).cloned().collect();
    if !drawn_but_absent.is_empty() {
        notes.push(format!("drawn but impossible: {drawn_but_absent:?}"));
    }
    let corrected: BTreeSet<_> = odd_fixture.difference(&erratum).cloned().collect();
    let f3_ok = computed_edges(3) == corrected && computed_edges(5) == corrected;
    let dot_ok = ["f2", "f3"].iter().zip([2u64, 3]).all(|(name, p)| {
        let golden = std::fs::read_to_string(format!("{FIXTURES}/lattice_{name}.dot")).unwrap();
        let g = build_lattice(PrimeField::new(p).unwrap()).unwrap();
        emit_dot(&g) == golden && emit_dot(&build_lattice(PrimeField::new(p).unwrap()).unwrap()) == golden
    });
    let ok = f2_ok && f3_ok && erratum_impossible && dot_ok;
    outcome(
        ok,
        format!(
            "F_2 fixture {f2_ok}, odd fixture (F_3, F_5) {f3_ok}, erratum edges impossible {erratum_impossible}, DOT byte-stable {dot_ok}; {}",
            notes.join("; ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for p in [2u64, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        for l in OrbitLabel::reachable_labels(f) {
            let got = rep(l, f).and_then(|s| classify(&s));
            if got != Ok(l) {
                failures.push(format!("rep({l}) over F_{p} gives {got:?}"));
            }
        }
        let n = NamedElements::new(f);
        let l = first_row(f);
        let six = right_ideal_double(&quaternions(f), &l).unwrap();
        if six.dim() != 6 || six != right_mul_space(&n.n0w).sum(&right_mul_space(&n.p0w)) {
            failures.push(format!("H + Lw over F_{p}"));
        }
        let five = right_ideal_double(&upper_triangular(f), &l).unwrap();
        let five_radical = five.radicals().0;
        let five_ok = five.dim() == 5
            && classify(&five) == Ok(OrbitLabel::Dim5)
            && five_radical
                .elements()
                .iter()
                .any(|m| m.is_nilpotent() && left_mul_space(m).sum(&right_mul_space(m)) == five);
        if !five_ok {
            failures.push(format!("U + Lw over F_{p}"));
        }
        let family: Vec<usize> = [
            Subspace::from_octonions(f, &[n.one]),
            Subspace::from_octonions(f, &[n.one, n.p0]),
            upper_triangular(f),
        ]
        .iter()
        .map(|a| right_ideal_double(a, &l).map_or(0, |s| s.dim()))
        .collect();
        if family != [3, 4, 5] {
            failures.push(format!("A + Lw family over F_{p}: {family:?}"));
        }
        let three = right_ideal_double(&Subspace::from_octonions(f, &[n.p0, n.n0]), &Subspace::from_octonions(f, &[n.n0]))
            .unwrap();
        if three.dim() != 3 || three != left_mul_space(&n.n0).intersection(&right_mul_space(&n.n0w)) {
            failures.push(format!("(Fp0 + Fn0) + Fn0 w over F_{p}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("classify(rep(L)) = L over F_2, F_3, F_5; doubles of dims 6, 5, (3,4,5), 3 {}", failures.join("; ")),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("identities", criterion_1),
        ("singular geometry", criterion_2),
        ("centralizers", criterion_3),
        ("F_2 census", criterion_4),
        ("F_2 orbits", criterion_5),
        ("lattice fixtures", criterion_6),
        ("construction round-trips", criterion_7),
    ];
    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all_ok &= o.ok;
        println!(
            "criterion {} {:<26} {} ({:.2?}) {}",
            i + 1,
            name,
            if o.ok { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail.trim_end()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
