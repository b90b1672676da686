//! Subspaces of `F^8` in canonical reduced row-echelon form.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::composition::Octonion;
use crate::field::PrimeField;
use crate::linalg::Matrix;

pub type Row = [u8; 8];

/// A subspace of `F^8` held as its RREF basis. Equal subspaces have
/// identical bases, so derived `Eq`/`Hash` are subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: PrimeField,
    rows: Vec<Row>,
}

/// Canonical RREF span of the given rows.
pub fn rref(field: PrimeField, rows: impl IntoIterator<Item = Row>) -> Subspace {
    Subspace::span(field, rows)
}

/// Smallest multiplicatively closed subspace containing `gens`.
pub fn closure(field: PrimeField, gens: &[Octonion]) -> Subspace {
    let mut s = Subspace::from_octonions(field, gens);
    // The dimension grows each round until it stabilises, so 8 rounds suffice.
    for _ in 0..=8 {
        let basis = s.basis();
        let mut rows = s.rows.clone();
        for x in &basis {
            for y in &basis {
                rows.push((*x * *y).coords());
            }
        }
        let next = Subspace::span(field, rows);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
    unreachable!("closure did not stabilise within 8 rounds")
}

fn rref_rows(f: PrimeField, mut rows: Vec<Row>) -> Vec<Row> {
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v %= f.p();
        }
    }
    let mut r = 0;
    for c in 0..8 {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        if inv != 1 {
            for v in rows[r].iter_mut() {
                *v = f.mul(*v, inv);
            }
        }
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            let factor = row[c];
            if i == r || factor == 0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v = f.sub(*v, f.mul(factor, pv));
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

impl Subspace {
    pub fn zero(field: PrimeField) -> Self {
        Subspace { field, rows: Vec::new() }
    }

    pub fn full(field: PrimeField) -> Self {
        Subspace { field, rows: (0..8).map(unit).collect() }
    }

    pub fn span(field: PrimeField, rows: impl IntoIterator<Item = Row>) -> Self {
        Subspace { field, rows: rref_rows(field, rows.into_iter().collect()) }
    }

    pub fn from_octonions(field: PrimeField, xs: &[Octonion]) -> Self {
        for x in xs {
            assert_eq!(x.field(), field, "modulus mismatch");
        }
        Subspace::span(field, xs.iter().map(|x| x.coords()))
    }

    /// Wraps rows already known to be in RREF.
    pub(crate) fn from_rref_unchecked(field: PrimeField, rows: Vec<Row>) -> Self {
        debug_assert_eq!(rref_rows(field, rows.clone()), rows);
        Subspace { field, rows }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Octonion> {
        self.rows.iter().map(|r| Octonion::from_coords(self.field, *r)).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().position(|&v| v != 0).expect("nonzero row")).collect()
    }

    /// Residue of `v` after eliminating against the pivots; zero iff `v` is in the span.
    pub fn reduce(&self, v: &Row) -> Row {
        let f = self.field;
        let mut v = *v;
        for row in &self.rows {
            let pc = row.iter().position(|&x| x != 0).expect("nonzero row");
            let c = v[pc];
            if c != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = f.sub(*a, f.mul(c, b));
                }
            }
        }
        v
    }

    pub fn contains_coords(&self, v: &Row) -> bool {
        self.reduce(v) == [0; 8]
    }

    pub fn contains(&self, x: &Octonion) -> bool {
        self.contains_coords(&x.coords())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains_coords(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.field, self.rows.iter().chain(&other.rows).copied())
    }

    /// `{y : sum_i x_i y_i = 0 for all x}`, the annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.field);
        }
        let m = Matrix::from_rows(self.field, &self.rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        Subspace::span(self.field, m.nullspace().into_iter().map(to_row))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Orthogonal complement under the polar form of the norm.
    pub fn perp(&self) -> Subspace {
        let f = self.field;
        let gram = gram_matrix(f);
        let rows = self.rows.iter().map(|r| -> Row {
            std::array::from_fn(|j| (0..8).fold(0u8, |acc, i| f.add(acc, f.mul(r[i], gram[i][j]))))
        });
        Subspace::span(f, rows).annihilator()
    }

    /// The radicals `R = A ∩ A^⊥` and `Q = {x in R : N(x) = 0}`.
    pub fn radicals(&self) -> (Subspace, Subspace) {
        let f = self.field;
        let r = self.intersection(&self.perp());
        if !f.is_char_two() {
            // (x|x) = 2N(x) vanishes on R, so N does too.
            return (r.clone(), r);
        }
        // Over F_2 the norm is additive on R (the polar form vanishes there) and
        // homogeneous, so Q is the kernel of a linear functional.
        let values: Vec<u8> = r.basis().iter().map(|x| x.norm().value()).collect();
        let m = Matrix::from_rows(f, &[values]);
        let q = m
            .nullspace()
            .into_iter()
            .map(|coeffs| r.combine(&coeffs))
            .collect::<Vec<_>>();
        let q = Subspace::span(f, q);
        (r, q)
    }

    /// `sum_i coeffs[i] * rows[i]`.
    pub fn combine(&self, coeffs: &[u8]) -> Row {
        let f = self.field;
        let mut out = [0u8; 8];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, v));
            }
        }
        out
    }

    /// All `p^dim` elements, ordered by coefficient vector.
    pub fn elements(&self) -> Vec<Octonion> {
        let p = self.field.p() as usize;
        let k = self.dim();
        let count = p.pow(k as u32);
        let mut out = Vec::with_capacity(count);
        let mut coeffs = vec![0u8; k];
        for mut i in 0..count {
            for c in coeffs.iter_mut() {
                *c = (i % p) as u8;
                i /= p;
            }
            out.push(Octonion::from_coords(self.field, self.combine(&coeffs)));
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        let f = self.field;
        self.rows.iter().all(|x| {
            self.rows.iter().all(|y| self.contains_coords(&Octonion::mul_raw(f, x, y)))
        })
    }

    /// Span of all products `a b` with `a` in `self`, `b` in `other`.
    pub fn product_span(&self, other: &Subspace) -> Subspace {
        let f = self.field;
        Subspace::span(
            f,
            self.rows.iter().flat_map(|x| other.rows.iter().map(move |y| Octonion::mul_raw(f, x, y))),
        )
    }

    /// Image under a linear map given by its 8x8 matrix.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(self.field, self.rows.iter().map(|r| to_row(m.mul_vec(r))))
    }

    pub fn map(&self, g: impl Fn(&Octonion) -> Octonion) -> Subspace {
        Subspace::span(self.field, self.basis().iter().map(|x| g(x).coords()))
    }

    /// Whether the norm vanishes on every element.
    pub fn is_totally_singular(&self) -> bool {
        let b = self.basis();
        b.iter().all(|x| x.norm().is_zero())
            && b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| x.polar(y).is_zero()))
    }

    pub fn contains_one(&self) -> bool {
        self.contains(&Octonion::one(self.field))
    }

    /// Bit-packed basis (one byte per row) over `F_2`.
    pub fn gf2_key(&self) -> u64 {
        assert!(self.field.is_char_two());
        self.rows.iter().enumerate().fold(0u64, |acc, (i, r)| {
            acc | (crate::composition::Gf2Table::pack_coords(r) as u64) << (8 * i)
        })
    }
}

pub(crate) fn unit(i: usize) -> Row {
    let mut r = [0u8; 8];
    r[i] = 1;
    r
}

pub(crate) fn to_row(v: Vec<u8>) -> Row {
    v.try_into().expect("vector of length 8")
}

/// `gram[i][j] = (e_i | e_j)`.
pub fn gram_matrix(f: PrimeField) -> [[u8; 8]; 8] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| Octonion::basis(f, i).polar(&Octonion::basis(f, j)).value())
    })
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace<{}>{:?}", self.field, self.rows)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, x) in self.basis().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows.len()))?;
        for r in &self.rows {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}
