//! Exhaustive enumeration of subspaces and subalgebras.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::OrbitLabel;
use crate::composition::{Gf2Table, Octonion};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::record::SubalgebraRecord;
use crate::subspace::{Row, Subspace};

pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// Number of `k`-dimensional subspaces of `F_q^n`, by the product formula.
pub fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Pivot-column sets of size `k` in `0..n`, lexicographically.
pub fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            if n - c < k - cur.len() {
                break;
            }
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Visits every RREF basis (rows of length `n <= 8`, zero-padded) whose pivot
/// columns are `pivots`, in lexicographic order of the free entries.
pub fn for_each_in_partition(field: PrimeField, n: usize, pivots: &[usize], mut visit: impl FnMut(&[Row])) {
    assert!(n <= 8);
    let p = field.p();
    let mut rows: Vec<Row> = pivots
        .iter()
        .map(|&c| {
            let mut r = [0u8; 8];
            r[c] = 1;
            r
        })
        .collect();
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
        .collect();
    loop {
        visit(&rows);
        // Odometer with the last free entry running fastest.
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            let (i, c) = free[pos];
            rows[i][c] += 1;
            if rows[i][c] < p {
                break;
            }
            rows[i][c] = 0;
        }
    }
}

/// Visits every `k`-dimensional subspace of `F^8` exactly once.
pub fn enumerate_subspaces(field: PrimeField, k: usize, mut visit: impl FnMut(&Subspace)) {
    for pivots in pivot_sets(8, k) {
        for_each_in_partition(field, 8, &pivots, |rows| {
            visit(&Subspace::from_rref_unchecked(field, rows.to_vec()));
        });
    }
}

/// Whether the span of `rows` over `F_2` is closed, using the full product table.
fn gf2_closed(table: &Gf2Table, rows: &[Row]) -> bool {
    let packed: Vec<u8> = rows.iter().map(Gf2Table::pack_coords).collect();
    let mut members = [0u64; 4];
    let mut elems = vec![0u8];
    members[0] |= 1;
    for &b in &packed {
        let n = elems.len();
        for i in 0..n {
            let e = elems[i] ^ b;
            elems.push(e);
            members[(e >> 6) as usize] |= 1 << (e & 63);
        }
    }
    packed.iter().all(|&x| {
        packed.iter().all(|&y| {
            let z = table.mul(x, y);
            members[(z >> 6) as usize] >> (z & 63) & 1 == 1
        })
    })
}

fn generic_closed(field: PrimeField, rows: &[Row]) -> bool {
    let s = Subspace::from_rref_unchecked(field, rows.to_vec());
    rows.iter().all(|x| rows.iter().all(|y| s.contains_coords(&Octonion::mul_raw(field, x, y))))
}

/// Closed `k`-dimensional subspaces inside `F^n` (coordinates relative to the
/// first `n` basis vectors of `ambient`), as subspaces of `F^8`.
pub(crate) fn closed_subspaces_of(ambient: &Subspace, k: usize) -> Vec<Subspace> {
    let f = ambient.field();
    let n = ambient.dim();
    let parts = pivot_sets(n, k);
    parts
        .par_iter()
        .flat_map_iter(|pivots| {
            let mut found = Vec::new();
            for_each_in_partition(f, n, pivots, |coeffs| {
                let rows: Vec<Row> = coeffs.iter().map(|c| ambient.combine(&c[..n])).collect();
                let s = Subspace::span(f, rows);
                if s.is_closed() {
                    found.push(s);
                }
            });
            found
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub budget: u128,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { budget: DEFAULT_BUDGET }
    }
}

/// Projected number of subspaces visited when scanning `dims`.
pub fn projected_cost(field: PrimeField, dims: &[usize]) -> u128 {
    dims.iter().map(|&k| gaussian_binomial(8, k as u32, field.p() as u128)).sum()
}

fn check_request(field: PrimeField, dims: &[usize], opts: &EnumerationOptions) -> Result<Vec<usize>> {
    if field.p() >= 7 {
        return Err(Error::UnsupportedField(field.p()));
    }
    if let Some(&k) = dims.iter().find(|&&k| k > 8) {
        return Err(Error::Input(format!("dimension {k} exceeds 8")));
    }
    let projected = projected_cost(field, dims);
    if projected > opts.budget {
        return Err(Error::CostLimitExceeded { projected, budget: opts.budget });
    }
    let mut dims = dims.to_vec();
    dims.sort_unstable();
    dims.dedup();
    Ok(dims)
}

/// Every subalgebra of the requested dimensions, with invariants and labels,
/// ordered by dimension, then pivot set, then entries.
pub fn enumerate_subalgebras(field: PrimeField, dims: &[usize], opts: &EnumerationOptions) -> Result<Vec<SubalgebraRecord>> {
    let dims = check_request(field, dims, opts)?;
    let table = field.is_char_two().then(Gf2Table::new);
    let mut out = Vec::new();
    for k in dims {
        let parts = pivot_sets(8, k);
        let per_part: Vec<Vec<SubalgebraRecord>> = parts
            .par_iter()
            .map(|pivots| {
                let mut found = Vec::new();
                for_each_in_partition(field, 8, pivots, |rows| {
                    let closed = match &table {
                        Some(t) => gf2_closed(t, rows),
                        None => generic_closed(field, rows),
                    };
                    if closed {
                        found.push(SubalgebraRecord::analyze(Subspace::from_rref_unchecked(field, rows.to_vec())));
                    }
                });
                found
            })
            .collect();
        out.extend(per_part.into_iter().flatten());
    }
    Ok(out)
}

/// Number of `k`-subspaces the enumerator visits, for cross-checking counts.
pub fn count_subspaces(field: PrimeField, k: usize) -> u128 {
    pivot_sets(8, k)
        .par_iter()
        .map(|pivots| {
            let mut c = 0u128;
            for_each_in_partition(field, 8, pivots, |_| c += 1);
            c
        })
        .sum()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusSummary {
    pub field: u8,
    /// Subspaces visited per dimension.
    pub scanned: BTreeMap<usize, u128>,
    /// Subalgebras found per dimension.
    pub closed: BTreeMap<usize, usize>,
    /// Count per `(dimension, label)`.
    pub counts: BTreeMap<(usize, String), usize>,
    /// Records the classifier could not label; must stay empty.
    #[serde(skip)]
    pub unlabeled: Vec<SubalgebraRecord>,
    #[serde(skip)]
    pub exemplars: BTreeMap<OrbitLabel, Subspace>,
}

impl CensusSummary {
    pub fn count(&self, dim: usize, label: OrbitLabel) -> usize {
        self.counts.get(&(dim, label.name().to_string())).copied().unwrap_or(0)
    }

    pub fn total_scanned(&self) -> u128 {
        self.scanned.values().sum()
    }
}

pub fn census_report(field: PrimeField, dims: &[usize], records: &[SubalgebraRecord]) -> CensusSummary {
    let mut s = CensusSummary { field: field.p(), ..Default::default() };
    for &k in dims {
        s.scanned.insert(k, gaussian_binomial(8, k as u32, field.p() as u128));
        s.closed.insert(k, 0);
    }
    for r in records {
        *s.closed.entry(r.dim).or_default() += 1;
        match r.label {
            Some(l) => {
                *s.counts.entry((r.dim, l.name().to_string())).or_default() += 1;
                s.exemplars.entry(l).or_insert_with(|| r.space.clone());
            }
            None => s.unlabeled.push(r.clone()),
        }
    }
    s
}
