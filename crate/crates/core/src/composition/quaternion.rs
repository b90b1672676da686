use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// A 2x2 matrix over `F_p`, stored row-major as `[a11, a12, a21, a22]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quaternion {
    m: [u8; 4],
    #[serde(rename = "p")]
    field: PrimeField,
}

impl Quaternion {
    pub fn new(field: PrimeField, m: [i64; 4]) -> Self {
        Quaternion { m: m.map(|v| field.reduce(v)), field }
    }

    pub fn from_residues(field: PrimeField, m: [u8; 4]) -> Self {
        debug_assert!(m.iter().all(|&v| v < field.p()));
        Quaternion { m, field }
    }

    pub fn zero(field: PrimeField) -> Self {
        Quaternion { m: [0; 4], field }
    }

    pub fn one(field: PrimeField) -> Self {
        Quaternion { m: [1, 0, 0, 1], field }
    }

    /// Matrix unit `E_ij` with `i, j` in `{1, 2}`.
    pub fn unit(field: PrimeField, i: usize, j: usize) -> Self {
        let mut m = [0; 4];
        m[2 * (i - 1) + (j - 1)] = 1;
        Quaternion { m, field }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn entries(&self) -> [u8; 4] {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m == [0; 4]
    }

    /// Every matrix over the field, in residue-lexicographic order.
    pub fn all(field: PrimeField) -> impl Iterator<Item = Quaternion> {
        let p = field.p() as usize;
        (0..p.pow(4)).map(move |mut i| {
            let mut m = [0u8; 4];
            for e in m.iter_mut() {
                *e = (i % p) as u8;
                i /= p;
            }
            Quaternion { m, field }
        })
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        assert_eq!(c.field(), self.field, "modulus mismatch");
        Quaternion { m: self.m.map(|v| self.field.mul(v, c.value())), field: self.field }
    }

    /// Adjugate matrix, the standard involution of `F^{2x2}`.
    pub fn conj(&self) -> Self {
        let f = self.field;
        let [a, b, c, d] = self.m;
        Quaternion { m: [d, f.neg(b), f.neg(c), a], field: f }
    }

    /// Determinant.
    pub fn norm(&self) -> FieldElement {
        let f = self.field;
        let [a, b, c, d] = self.m;
        FieldElement::from_raw(f, f.sub(f.mul(a, d), f.mul(b, c)))
    }

    pub fn trace(&self) -> FieldElement {
        FieldElement::from_raw(self.field, self.field.add(self.m[0], self.m[3]))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scale(n.inv()?))
    }

    #[inline]
    pub(crate) fn mul_raw(f: PrimeField, x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
        let dot = |a: u8, b: u8, c: u8, d: u8| f.add(f.mul(a, b), f.mul(c, d));
        [
            dot(x[0], y[0], x[1], y[2]),
            dot(x[0], y[1], x[1], y[3]),
            dot(x[2], y[0], x[3], y[2]),
            dot(x[2], y[1], x[3], y[3]),
        ]
    }

    #[inline]
    pub(crate) fn conj_raw(f: PrimeField, x: &[u8; 4]) -> [u8; 4] {
        [x[3], f.neg(x[1]), f.neg(x[2]), x[0]]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        let f = self.field;
        Quaternion { m: std::array::from_fn(|i| f.add(self.m[i], rhs.m[i])), field: f }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        let f = self.field;
        Quaternion { m: self.m.map(|v| f.neg(v)), field: f }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        Quaternion { m: Quaternion::mul_raw(self.field, &self.m, &rhs.m), field: self.field }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m[0], self.m[1], self.m[2], self.m[3])
    }
}
