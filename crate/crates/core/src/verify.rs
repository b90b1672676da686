//! Verification suites that check the structure theory by exhaustion or sampling.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automorphism::{
    alpha_family, default_generators, element_orbits, generate_group, orbit_partition, two_transitive_on_lines, Automorphism,
};
use crate::classify::{classify, element_orbit_invariant, OrbitLabel};
use crate::composition::{Gf2Table, Octonion};
use crate::constructions::{
    centralizer, find_isomorphism, left_kernel, left_mul_space, rep, right_mul_space, NamedElements,
};
use crate::enumerate::{census_report, enumerate_subalgebras, EnumerationOptions};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::record::SubalgebraRecord;
use crate::subspace::{closure, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Singular,
    Centralizers,
    Classification,
    Orbits,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Identities, Suite::Singular, Suite::Centralizers, Suite::Classification, Suite::Orbits];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Singular => "singular",
            Suite::Centralizers => "centralizers",
            Suite::Classification => "classification",
            Suite::Orbits => "orbits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Random samples per identity for odd characteristic.
    pub samples: usize,
    pub seed: u64,
    pub budget: u128,
    pub group_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 100_000,
            seed: 0x5eed,
            budget: crate::enumerate::DEFAULT_BUDGET,
            group_cap: crate::automorphism::DEFAULT_GROUP_CAP,
        }
    }
}

/// Outcome of one family of checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), ..Default::default() }
    }

    pub fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(context());
            }
        }
    }

    fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub field: u8,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
    /// Facts worth printing alongside the checks, such as group orders.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} suite={} field=F_{} ({:.2?})", self.suite, self.field, self.elapsed)?;
        for c in &self.checks {
            write!(f, "  {:<6} {:<44} {:>10} checked", if c.passed() { "ok" } else { "FAILED" }, c.name, c.checked)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  first counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, field: PrimeField, opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let (checks, notes) = match suite {
        Suite::Identities => (identities(field, opts), Vec::new()),
        Suite::Singular => (singular(field, opts), Vec::new()),
        Suite::Centralizers => (centralizers(field), Vec::new()),
        Suite::Classification => classification(field, opts)?,
        Suite::Orbits => orbits(field, opts)?,
    };
    Ok(SuiteReport { suite, field: field.p(), checks, elapsed: start.elapsed(), notes })
}

// ---------------------------------------------------------------- identities

const IDENTITY_NAMES: [&str; 8] = [
    "norm multiplicative N(uv)=N(u)N(v)",
    "involution anti-automorphism",
    "involution squares to identity",
    "adjoint (cu|v)=(u|conj(c)v)",
    "adjoint (uc|v)=(u|v conj(c))",
    "Moufang (au)(va)=a((uv)a)",
    "Moufang a(u(av))=((au)a)v",
    "Moufang u(a(va))=((ua)v)a",
];

fn identity_checks() -> Vec<Check> {
    let mut v: Vec<Check> = IDENTITY_NAMES.iter().map(|n| Check::new(*n)).collect();
    v.push(Check::new("degree 2 u^2-tr(u)u+N(u)=0"));
    v.push(Check::new("two-generated span in F+Fx+Fy+Fxy"));
    v.push(Check::new("two-generated subalgebra associative"));
    v
}

fn merge_all(mut acc: Vec<Check>, other: Vec<Check>) -> Vec<Check> {
    for (a, b) in acc.iter_mut().zip(other) {
        a.merge(b);
    }
    acc
}

pub fn identities(field: PrimeField, opts: &VerifyOptions) -> Vec<Check> {
    if field.is_char_two() {
        identities_gf2()
    } else {
        identities_sampled(field, opts)
    }
}

/// Closure of `{x, y}` over `F_2` as a list of basis bytes.
fn gf2_closure(t: &Gf2Table, gens: &[u8]) -> Vec<u8> {
    let mut basis: Vec<u8> = Vec::new();
    let mut span = [0u64; 4];
    span[0] = 1;
    let mut members = vec![0u8];
    let add = |x: u8, basis: &mut Vec<u8>, span: &mut [u64; 4], members: &mut Vec<u8>| {
        if span[(x >> 6) as usize] >> (x & 63) & 1 == 1 {
            return false;
        }
        basis.push(x);
        let n = members.len();
        for i in 0..n {
            let e = members[i] ^ x;
            members.push(e);
            span[(e >> 6) as usize] |= 1 << (e & 63);
        }
        true
    };
    for &g in gens {
        add(g, &mut basis, &mut span, &mut members);
    }
    loop {
        let mut grew = false;
        let snapshot = basis.clone();
        for &x in &snapshot {
            for &y in &snapshot {
                grew |= add(t.mul(x, y), &mut basis, &mut span, &mut members);
            }
        }
        if !grew {
            return basis;
        }
    }
}

fn identities_gf2() -> Vec<Check> {
    let t = Gf2Table::new();
    let show = |xs: &[u8]| xs.iter().map(|&x| Gf2Table::unpack(x).to_string()).collect::<Vec<_>>().join(" | ");
    let per_a: Vec<Vec<Check>> = (0..=255u8)
        .into_par_iter()
        .map(|a| {
            let mut c = identity_checks();
            let ca = t.conj(a);
            for u in 0..=255u8 {
                let au = t.mul(a, u);
                let ua = t.mul(u, a);
                let aua = t.mul(au, a);
                for v in 0..=255u8 {
                    let av = t.mul(a, v);
                    let va = t.mul(v, a);
                    let uv = t.mul(u, v);
                    c[3].record(t.polar(au, v) == t.polar(u, t.mul(ca, v)), || show(&[a, u, v]));
                    c[4].record(t.polar(ua, v) == t.polar(u, t.mul(v, ca)), || show(&[a, u, v]));
                    c[5].record(t.mul(au, va) == t.mul(a, t.mul(uv, a)), || show(&[a, u, v]));
                    c[6].record(t.mul(a, t.mul(u, av)) == t.mul(aua, v), || show(&[a, u, v]));
                    c[7].record(t.mul(u, t.mul(a, va)) == t.mul(t.mul(ua, v), a), || show(&[a, u, v]));
                }
                // Pairs (a, u).
                c[0].record(t.norm(au) == t.norm(a) & t.norm(u), || show(&[a, u]));
                c[1].record(t.conj(au) == t.mul(t.conj(u), ca), || show(&[a, u]));
                let cl = gf2_closure(&t, &[a, u]);
                let allowed = [1u8 << 0 | 1 << 3, a, u, au];
                let span_ok = cl.iter().all(|&x| in_gf2_span(&allowed, x));
                c[9].record(span_ok, || show(&[a, u]));
                let assoc = cl.iter().all(|&x| {
                    cl.iter().all(|&y| cl.iter().all(|&z| t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z))))
                });
                c[10].record(assoc, || show(&[a, u]));
            }
            c[2].record(t.conj(ca) == a, || show(&[a]));
            let sq = t.mul(a, a) ^ if t.trace(a) == 1 { a } else { 0 } ^ if t.norm(a) == 1 { 0b1001 } else { 0 };
            c[8].record(sq == 0, || show(&[a]));
            c
        })
        .collect();
    per_a.into_iter().reduce(merge_all).expect("256 chunks")
}

fn in_gf2_span(gens: &[u8], x: u8) -> bool {
    (0u32..1 << gens.len()).any(|mask| {
        gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u8, |acc, (_, &g)| acc ^ g) == x
    })
}

fn random_octonion(f: PrimeField, rng: &mut ChaCha8Rng) -> Octonion {
    Octonion::from_coords(f, std::array::from_fn(|_| rng.gen_range(0..f.p())))
}

fn identities_sampled(f: PrimeField, opts: &VerifyOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ f.p() as u64);
    let mut c = identity_checks();
    let one = Octonion::one(f);
    for _ in 0..opts.samples {
        let a = random_octonion(f, &mut rng);
        let u = random_octonion(f, &mut rng);
        let v = random_octonion(f, &mut rng);
        let ctx = || format!("a={a} | u={u} | v={v}");
        c[0].record((u * v).norm() == u.norm() * v.norm(), ctx);
        c[1].record((u * v).conj() == v.conj() * u.conj(), ctx);
        c[2].record(u.conj().conj() == u, ctx);
        c[3].record((a * u).polar(&v) == u.polar(&(a.conj() * v)), ctx);
        c[4].record((u * a).polar(&v) == u.polar(&(v * a.conj())), ctx);
        c[5].record((a * u) * (v * a) == a * ((u * v) * a), ctx);
        c[6].record(a * (u * (a * v)) == ((a * u) * a) * v, ctx);
        c[7].record(u * (a * (v * a)) == ((u * a) * v) * a, ctx);
        c[8].record(u * u - u.scale(u.trace()) + one.scale(u.norm()) == Octonion::zero(f), ctx);
    }
    for _ in 0..(opts.samples / 100).max(100) {
        let x = random_octonion(f, &mut rng);
        let y = random_octonion(f, &mut rng);
        let cl = closure(f, &[x, y]);
        let allowed = Subspace::from_octonions(f, &[one, x, y, x * y]);
        c[9].record(cl.is_subspace_of(&allowed), || format!("x={x} | y={y}"));
        let b = cl.basis();
        let assoc = b.iter().all(|p| b.iter().all(|q| b.iter().all(|r| (*p * *q) * *r == *p * (*q * *r))));
        c[10].record(assoc, || format!("x={x} | y={y}"));
    }
    c
}

// ---------------------------------------------------------------- singular geometry

/// One representative per line of nonzero singular vectors.
pub fn singular_directions(f: PrimeField) -> Vec<Octonion> {
    Octonion::all(f)
        .filter(|x| !x.is_zero() && x.norm().is_zero())
        .filter(|x| {
            // Normalised: first nonzero coordinate equals 1.
            x.coords().iter().find(|&&v| v != 0) == Some(&1)
        })
        .collect()
}

pub fn singular(f: PrimeField, opts: &VerifyOptions) -> Vec<Check> {
    let dirs = singular_directions(f);
    let mut c_ker = Check::new("aO = ker lambda_conj(a)");
    let mut c_max = Check::new("aO, Oa maximal totally singular (dim 4)");
    let mut c_sub = Check::new("aO and Oa subalgebras iff tr(a)=0");
    let mut c_table = Check::new("intersection table aO∩bO in {4,2,0}");
    let mut c_cross = Check::new("intersection table aO∩Ob in {1,3}");
    let mut c_anti = Check::new("conj maps aO onto O conj(a)");
    let mut c_noniso = Check::new("aO not isomorphic to Oa");
    let lo: Vec<Subspace> = dirs.iter().map(left_mul_space).collect();
    let ro: Vec<Subspace> = dirs.iter().map(right_mul_space).collect();
    for (i, a) in dirs.iter().enumerate() {
        c_ker.record(lo[i] == left_kernel(&a.conj()), || a.to_string());
        c_max.record(
            lo[i].dim() == 4 && ro[i].dim() == 4 && lo[i].is_totally_singular() && ro[i].is_totally_singular(),
            || a.to_string(),
        );
        let nil = a.trace().is_zero();
        c_sub.record(lo[i].is_closed() == nil && ro[i].is_closed() == nil, || a.to_string());
        c_anti.record(lo[i].map(|x| x.conj()) == right_mul_space(&a.conj()), || a.to_string());
    }
    // All pairs over F_2, a deterministic sample otherwise.
    let pairs: Vec<(usize, usize)> = if f.is_char_two() {
        (0..dirs.len()).flat_map(|i| (0..dirs.len()).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..(opts.samples / 10).max(1000)).map(|_| (rng.gen_range(0..dirs.len()), rng.gen_range(0..dirs.len()))).collect()
    };
    for (i, j) in pairs {
        let (a, b) = (&dirs[i], &dirs[j]);
        let ctx = || format!("a={a} | b={b}");
        let meet = lo[i].intersection(&lo[j]);
        let same_line = i == j;
        let orth = a.polar(b).is_zero();
        let ok = match meet.dim() {
            4 => same_line,
            2 => {
                orth && !same_line
                    && meet == left_mul_space_of(a, &left_mul_space(&b.conj()))
                    && meet == left_mul_space_of(b, &left_mul_space(&a.conj()))
            }
            0 => !orth,
            _ => false,
        };
        c_table.record(ok, ctx);
        let cross = lo[i].intersection(&ro[j]);
        let ab = *a * *b;
        let ok = match cross.dim() {
            1 => !ab.is_zero() && cross == Subspace::from_octonions(f, &[ab]),
            3 => {
                ab.is_zero()
                    && cross == left_mul_space_of(a, &Subspace::from_octonions(f, &[*b]).perp())
                    && cross == right_mul_space_of(b, &Subspace::from_octonions(f, &[*a]).perp())
            }
            _ => false,
        };
        c_cross.record(ok, ctx);
    }
    // Non-isomorphism over F_2 for every nilpotent direction; otherwise for n0.
    let nil_dirs: Vec<&Octonion> = if f.is_char_two() {
        dirs.iter().filter(|a| a.trace().is_zero()).collect()
    } else {
        Vec::new()
    };
    let n0 = NamedElements::new(f).n0;
    let targets: Vec<&Octonion> = if nil_dirs.is_empty() { vec![&n0] } else { nil_dirs };
    for a in targets {
        c_noniso.record(find_isomorphism(&left_mul_space(a), &right_mul_space(a)).is_none(), || a.to_string());
    }
    vec![c_ker, c_max, c_sub, c_table, c_cross, c_anti, c_noniso]
}

/// `{a y : y in s}`.
fn left_mul_space_of(a: &Octonion, s: &Subspace) -> Subspace {
    s.map(|y| *a * *y)
}

/// `{x b : x in s}`.
fn right_mul_space_of(b: &Octonion, s: &Subspace) -> Subspace {
    s.map(|x| *x * *b)
}

// ---------------------------------------------------------------- centralizers

/// Centralizer dimension predicted by the case analysis on `v`.
pub fn predicted_centralizer_dim(v: &Octonion) -> usize {
    if v.as_scalar().is_some() {
        return 8;
    }
    let d = *v - v.conj();
    if d.is_zero() {
        6
    } else if !d.norm().is_zero() {
        2
    } else {
        4
    }
}

pub fn centralizers(f: PrimeField) -> Vec<Check> {
    let n = NamedElements::new(f);
    let mut c_dim = Check::new("centralizer dimension matches case analysis");
    let mut c_six = Check::new("dim 6: C(v) = {1,v}^perp and not closed");
    let mut c_four = Check::new("dim 4: closed, F+(nO∩On), local");
    let mut c_example = Check::new("centralizer of n0 reproduced");
    let mut dims_seen = BTreeSet::new();
    let per_v: Vec<(usize, usize, bool, bool, Octonion)> = Octonion::all(f)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|v| {
            let c = centralizer(v);
            let want = predicted_centralizer_dim(v);
            let six_ok = c.dim() != 6 || (c == Subspace::from_octonions(f, &[Octonion::one(f), *v]).perp() && !c.is_closed());
            let four_ok = c.dim() != 4 || local_centralizer_ok(&c);
            (c.dim(), want, six_ok, four_ok, *v)
        })
        .collect();
    for (got, want, six_ok, four_ok, v) in per_v {
        dims_seen.insert(got);
        c_dim.record(got == want, || format!("v={v}: dim {got}, expected {want}"));
        if got == 6 {
            c_six.record(six_ok, || v.to_string());
        }
        if got == 4 {
            c_four.record(four_ok, || v.to_string());
        }
    }
    let expected = if f.is_char_two() {
        Subspace::from_octonions(f, &[n.one, n.n0]).sum(&Subspace::span(f, (4..8).map(crate::subspace::unit)))
    } else {
        Subspace::from_octonions(f, &[n.one, n.n0, n.n0w, n.p0bar_w])
    };
    c_example.record(centralizer(&n.n0) == expected, || format!("{}", centralizer(&n.n0)));
    let mut c_range = Check::new("dimensions lie in {2,4,6,8}");
    c_range.record(dims_seen.iter().all(|d| [2, 4, 6, 8].contains(d)), || format!("{dims_seen:?}"));
    vec![c_dim, c_six, c_four, c_example, c_range]
}

fn local_centralizer_ok(c: &Subspace) -> bool {
    let f = c.field();
    if !c.is_closed() || classify(c).ok() != Some(OrbitLabel::FplusHeis) {
        return false;
    }
    let non_inv: Vec<Octonion> = c.elements().into_iter().filter(|x| !x.is_invertible()).collect();
    let ideal = Subspace::from_octonions(f, &non_inv);
    ideal.dim() == 3
        && non_inv.len() == (f.p() as usize).pow(3)
        && c.product_span(&ideal).is_subspace_of(&ideal)
        && ideal.product_span(c).is_subspace_of(&ideal)
}

// ---------------------------------------------------------------- classification census

/// Dimensions scanned by default: everything over `F_2`; otherwise the
/// dimensions whose scan fits the budget on its own, greedily in order.
pub fn default_dims(f: PrimeField, budget: u128) -> Vec<usize> {
    if f.is_char_two() {
        return (0..=8).collect();
    }
    let mut spent = 0;
    let mut dims = Vec::new();
    for k in [0, 1, 7, 8, 2, 6] {
        let cost = crate::enumerate::projected_cost(f, &[k]);
        if spent + cost <= budget {
            spent += cost;
            dims.push(k);
        }
    }
    dims.sort_unstable();
    dims
}

/// Labels whose subalgebras are commutative.
pub fn expected_commutative_labels(f: PrimeField) -> BTreeSet<OrbitLabel> {
    use OrbitLabel::*;
    let mut s: BTreeSet<OrbitLabel> = [Zero, F, Fp, Fn, S, FplusFn, E, Q, FplusQ].into_iter().collect();
    if f.is_char_two() {
        s.insert(HeisNOcapOn);
        s.insert(FplusHeis);
    }
    s
}

/// Closed-form number of nonzero singular vectors of the 8-dimensional hyperbolic form.
pub fn singular_vector_count(q: u64) -> u64 {
    (q.pow(4) - 1) * (q.pow(3) + 1)
}

fn two_sided_neutral(s: &Subspace) -> Vec<Octonion> {
    let basis = s.basis();
    s.elements()
        .into_iter()
        .filter(|e| basis.iter().all(|x| *e * *x == *x && *x * *e == *x))
        .collect()
}

pub fn classification(f: PrimeField, opts: &VerifyOptions) -> Result<(Vec<Check>, Vec<String>)> {
    let dims = default_dims(f, opts.budget);
    let records = enumerate_subalgebras(f, &dims, &EnumerationOptions { budget: opts.budget })?;
    let summary = census_report(f, &dims, &records);
    Ok(classification_checks(f, &dims, &records, &summary))
}

pub fn classification_checks(
    f: PrimeField,
    dims: &[usize],
    records: &[SubalgebraRecord],
    summary: &crate::enumerate::CensusSummary,
) -> (Vec<Check>, Vec<String>) {
    use OrbitLabel::*;
    let one = Octonion::one(f);
    let mut c_label = Check::new("every subalgebra labeled");
    let mut c_seven = Check::new("no 7-dimensional subalgebra");
    let mut c_eight = Check::new("exactly one 8-dimensional subalgebra");
    let mut c_assoc = Check::new("associativity census");
    let mut c_comm = Check::new("commutativity census");
    let mut c_comm_assoc = Check::new("commutative implies associative");
    let mut c_unital = Check::new("contains 1 iff has an invertible element");
    let mut c_singular = Check::new("no 1 iff totally singular");
    let mut c_big = Check::new("dims 5/6 single label each");
    let mut c_struct = Check::new("structure spot checks nO / nO+On / Qperp");
    let mut c_qdim = Check::new("unital dim 3 with R>=2 has Q>=2");
    let mut c_neutral = Check::new("neutral element other than 0,1 only in Fp");
    let mut c_lines = Check::new("singular lines = Fp + Fn count");
    let comm_labels = expected_commutative_labels(f);
    let mut comm_by_label: BTreeMap<OrbitLabel, BTreeSet<bool>> = BTreeMap::new();
    for r in records {
        let ctx = || format!("{} (dim {}, label {:?})", r.space, r.dim, r.label);
        c_label.record(r.label.is_some(), || format!("{}: {}", r.space, r.classification_error.clone().unwrap_or_default()));
        c_seven.record(r.dim != 7, ctx);
        let assoc_expected = match r.dim {
            0..=3 => Some(true),
            4 => r.label.map(|l| !matches!(l, NO | ON)),
            5 | 6 => Some(false),
            _ => None,
        };
        if let Some(want) = assoc_expected {
            c_assoc.record(r.associative == want, ctx);
        }
        if let Some(l) = r.label {
            comm_by_label.entry(l).or_default().insert(r.commutative);
            c_comm.record(r.commutative == comm_labels.contains(&l), ctx);
        }
        if r.commutative {
            c_comm_assoc.record(r.associative, ctx);
        }
        let has_invertible = r.space.elements().iter().any(Octonion::is_invertible);
        c_unital.record(r.contains_one == has_invertible, ctx);
        c_singular.record(r.contains_one != r.totally_singular, ctx);
        match r.dim {
            5 => c_big.record(r.label == Some(Dim5), ctx),
            6 => c_big.record(r.label == Some(Dim6), ctx),
            _ => {}
        }
        match r.label {
            Some(NO) => {
                let ok = r.space.elements().iter().any(|a| a.is_nilpotent() && left_mul_space(a) == r.space);
                c_struct.record(ok, ctx);
            }
            Some(Dim5) => {
                let (rad, _) = r.space.radicals();
                let ok = rad
                    .elements()
                    .iter()
                    .any(|n| n.is_nilpotent() && left_mul_space(n).sum(&right_mul_space(n)) == r.space);
                c_struct.record(ok, ctx);
            }
            Some(Dim6) => {
                let ok = r.space.elements().iter().any(|m| {
                    r.space.elements().iter().any(|n| {
                        let q = Subspace::from_octonions(f, &[*m, *n]);
                        q.dim() == 2 && q.is_closed() && classify(&q).ok() == Some(Q) && q.perp() == r.space
                    })
                });
                c_struct.record(ok, ctx);
            }
            _ => {}
        }
        if r.dim == 3 && r.contains_one && r.radical_r_dim >= 2 {
            c_qdim.record(r.radical_q_dim >= 2, ctx);
        }
        for e in two_sided_neutral(&r.space) {
            if !e.is_zero() && e != one {
                c_neutral.record(r.dim == 1 && r.label == Some(Fp), ctx);
            }
        }
    }
    if dims.contains(&8) {
        c_eight.record(records.iter().filter(|r| r.dim == 8).count() == 1, || "count".into());
    }
    if dims.contains(&1) {
        let q = f.p() as u64;
        let lines = singular_vector_count(q) / (q - 1);
        let found = (summary.count(1, Fp) + summary.count(1, Fn)) as u64;
        c_lines.record(found == lines, || format!("found {found}, closed form {lines}"));
    }
    // Commutativity must be a property of the label class.
    for (l, vals) in &comm_by_label {
        c_comm.record(vals.len() == 1, || format!("label {l} mixes commutative and non-commutative records"));
    }
    let notes = summary
        .counts
        .iter()
        .map(|((d, l), n)| format!("dim {d} {l}: {n}"))
        .chain(std::iter::once(format!(
            "scanned {} subspaces, {} subalgebras",
            summary.total_scanned(),
            records.len()
        )))
        .collect();
    let checks = vec![
        c_label, c_seven, c_eight, c_assoc, c_comm, c_comm_assoc, c_unital, c_singular, c_big, c_struct, c_qdim, c_neutral,
        c_lines,
    ];
    (checks, notes)
}

// ---------------------------------------------------------------- orbits

pub fn orbits(f: PrimeField, opts: &VerifyOptions) -> Result<(Vec<Check>, Vec<String>)> {
    let gens = default_generators(f)?;
    let group = generate_group(f, &gens, opts.group_cap);
    let mut notes = vec![format!(
        "{} generators, closure of order {}{}",
        gens.len(),
        group.order(),
        if group.complete { "" } else { " (truncated at the cap)" }
    )];
    let mut c_valid = Check::new("generators are automorphisms");
    for g in &gens {
        c_valid.record(g.verify().is_ok(), || format!("{g:?}"));
    }
    let mut c_orth = Check::new("generators preserve norm and trace");
    for g in &gens {
        let ok = (0..8).all(|i| {
            let e = Octonion::basis(f, i);
            let ge = g.apply(&e);
            ge.norm() == e.norm() && ge.trace() == e.trace()
        });
        c_orth.record(ok, || format!("{g:?}"));
    }
    let dims: Vec<usize> = default_dims(f, opts.budget).into_iter().filter(|&k| k != 2).collect();
    let records = enumerate_subalgebras(f, &dims, &EnumerationOptions { budget: opts.budget })?;
    let (c_sound, c_complete, more) = orbit_label_checks(&records, &gens)?;
    notes.extend(more);
    let c_elems = element_orbit_check(f, &gens);
    let mut c_two = Check::new("stabilizer of rep(Q) two-transitive on lines");
    let q = rep(OrbitLabel::Q, f)?;
    // A truncated closure is not a subgroup; the stabilizer of H is, and it suffices here.
    let autos: Vec<Automorphism> = if group.complete { group.elements.clone() } else { alpha_family(f) };
    c_two.record(two_transitive_on_lines(&q, &autos), || q.to_string());
    Ok((vec![c_valid, c_orth, c_sound, c_complete, c_elems, c_two], notes))
}

/// Soundness (no orbit mixes labels) and completeness (one orbit per label
/// class, apart from the separate F and Fp classes which are different labels).
pub fn orbit_label_checks(records: &[SubalgebraRecord], gens: &[Automorphism]) -> Result<(Check, Check, Vec<String>)> {
    let orbits = orbit_partition(records, gens)?;
    let mut sound = Check::new("orbits lie inside one label class");
    let mut complete = Check::new("each label class is one orbit");
    let mut per_label: BTreeMap<Option<OrbitLabel>, Vec<usize>> = BTreeMap::new();
    for o in &orbits {
        sound.record(o.labels.len() == 1, || format!("orbit with labels {:?}", o.labels));
        for l in &o.labels {
            per_label.entry(*l).or_default().push(o.members.len());
        }
    }
    let mut notes = Vec::new();
    for (l, sizes) in &per_label {
        complete.record(sizes.len() == 1, || format!("label {l:?} splits into orbits of sizes {sizes:?}"));
        notes.push(format!(
            "{}: {} orbit(s) of size {:?}",
            l.map_or("unlabeled", |l| l.name()),
            sizes.len(),
            sizes
        ));
    }
    Ok((sound, complete, notes))
}

/// Element orbits of the generated group coincide with `(N, tr)` classes of
/// non-central elements.
pub fn element_orbit_check(f: PrimeField, gens: &[Automorphism]) -> Check {
    let mut c = Check::new("element orbits = (norm, trace) classes");
    let orbits = element_orbits(f, gens);
    let mut class_of: HashMap<(u8, u8), usize> = HashMap::new();
    for (i, o) in orbits.iter().enumerate() {
        let (n, t, central) = element_orbit_invariant(&o[0]);
        if central {
            c.record(o.len() == 1, || format!("central element {} moved", o[0]));
            continue;
        }
        c.record(o.iter().all(|x| element_orbit_invariant(x) == (n, t, false)), || o[0].to_string());
        if let Some(prev) = class_of.insert((n.value(), t.value()), i) {
            c.record(false, || format!("{} and {} share (N, tr) but lie in different orbits", orbits[prev][0], o[0]));
        }
    }
    c
}
