use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::quaternion::Quaternion;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

pub const BASIS_NAMES: [&str; 8] = ["E11", "E12", "E21", "E22", "E11w", "E12w", "E21w", "E22w"];

/// An element `a + xw` of the split octonions, with `a, x` in `F^{2x2}`.
///
/// Coordinates follow [`BASIS_NAMES`]: the four matrix entries of `a`
/// (row-major) and then those of `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Octonion {
    #[serde(rename = "coords")]
    c: [u8; 8],
    #[serde(rename = "p")]
    field: PrimeField,
}

impl Octonion {
    /// Builds an element from integer coordinates, reducing each mod p.
    pub fn new(field: PrimeField, coords: [i64; 8]) -> Self {
        Octonion { c: coords.map(|v| field.reduce(v)), field }
    }

    pub fn from_coords(field: PrimeField, c: [u8; 8]) -> Self {
        assert!(c.iter().all(|&v| v < field.p()), "coordinate out of range for {field}");
        Octonion { c, field }
    }

    pub fn from_parts(a: Quaternion, x: Quaternion) -> Self {
        assert_eq!(a.field(), x.field(), "modulus mismatch");
        let field = a.field();
        let (a, x) = (a.entries(), x.entries());
        Octonion { c: [a[0], a[1], a[2], a[3], x[0], x[1], x[2], x[3]], field }
    }

    pub fn zero(field: PrimeField) -> Self {
        Octonion { c: [0; 8], field }
    }

    pub fn one(field: PrimeField) -> Self {
        Octonion { c: [1, 0, 0, 1, 0, 0, 0, 0], field }
    }

    pub fn basis(field: PrimeField, i: usize) -> Self {
        let mut c = [0; 8];
        c[i] = 1;
        Octonion { c, field }
    }

    /// The embedding `F -> F*1`.
    pub fn scalar(c: FieldElement) -> Self {
        Octonion::one(c.field()).scale(c)
    }

    /// `Some(c)` when the element is `c*1`.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        let c = self.c;
        (c[1] == 0 && c[2] == 0 && c[0] == c[3] && c[4..] == [0; 4])
            .then(|| FieldElement::from_raw(self.field, c[0]))
    }

    /// Every element of the algebra, enumerated by [`Octonion::index`].
    pub fn all(field: PrimeField) -> impl Iterator<Item = Octonion> {
        let n = (field.p() as usize).pow(8);
        (0..n).map(move |i| Octonion::from_index(field, i))
    }

    /// Base-p digits of the coordinates, least significant first.
    pub fn index(&self) -> usize {
        let p = self.field.p() as usize;
        self.c.iter().rev().fold(0, |acc, &v| acc * p + v as usize)
    }

    pub fn from_index(field: PrimeField, mut i: usize) -> Self {
        let p = field.p() as usize;
        let mut c = [0u8; 8];
        for v in c.iter_mut() {
            *v = (i % p) as u8;
            i /= p;
        }
        Octonion { c, field }
    }

    #[inline]
    pub fn coords(&self) -> [u8; 8] {
        self.c
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn h_part(&self) -> Quaternion {
        Quaternion::from_residues(self.field, [self.c[0], self.c[1], self.c[2], self.c[3]])
    }

    pub fn w_part(&self) -> Quaternion {
        Quaternion::from_residues(self.field, [self.c[4], self.c[5], self.c[6], self.c[7]])
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 8]
    }

    pub fn scale(&self, s: FieldElement) -> Self {
        assert_eq!(s.field(), self.field, "modulus mismatch");
        let f = self.field;
        Octonion { c: self.c.map(|v| f.mul(v, s.value())), field: f }
    }

    /// Standard involution: `a + xw -> adj(a) - xw`.
    pub fn conj(&self) -> Self {
        let f = self.field;
        let c = self.c;
        Octonion {
            c: [c[3], f.neg(c[1]), f.neg(c[2]), c[0], f.neg(c[4]), f.neg(c[5]), f.neg(c[6]), f.neg(c[7])],
            field: f,
        }
    }

    /// `N(a + xw) = det a - det x`.
    pub fn norm(&self) -> FieldElement {
        let f = self.field;
        let c = self.c;
        let det = |a: u8, b: u8, cc: u8, d: u8| f.sub(f.mul(a, d), f.mul(b, cc));
        FieldElement::from_raw(f, f.sub(det(c[0], c[1], c[2], c[3]), det(c[4], c[5], c[6], c[7])))
    }

    pub fn trace(&self) -> FieldElement {
        FieldElement::from_raw(self.field, self.field.add(self.c[0], self.c[3]))
    }

    /// Polar form `(u|v) = N(u+v) - N(u) - N(v)`.
    pub fn polar(&self, other: &Octonion) -> FieldElement {
        (*self + *other).norm() - self.norm() - other.norm()
    }

    pub fn is_invertible(&self) -> bool {
        !self.norm().is_zero()
    }

    /// Nonzero with `N = tr = 0`, equivalently `x^2 = 0 != x`.
    pub fn is_nilpotent(&self) -> bool {
        !self.is_zero() && self.norm().is_zero() && self.trace().is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scale(n.inv()?))
    }

    #[inline]
    pub(crate) fn mul_raw(f: PrimeField, u: &[u8; 8], v: &[u8; 8]) -> [u8; 8] {
        let a = [u[0], u[1], u[2], u[3]];
        let x = [u[4], u[5], u[6], u[7]];
        let b = [v[0], v[1], v[2], v[3]];
        let y = [v[4], v[5], v[6], v[7]];
        // (a + xw)(b + yw) = ab + conj(y)x + (ya + x conj(b))w
        let ab = Quaternion::mul_raw(f, &a, &b);
        let yx = Quaternion::mul_raw(f, &Quaternion::conj_raw(f, &y), &x);
        let ya = Quaternion::mul_raw(f, &y, &a);
        let xb = Quaternion::mul_raw(f, &x, &Quaternion::conj_raw(f, &b));
        let mut out = [0u8; 8];
        for i in 0..4 {
            out[i] = f.add(ab[i], yx[i]);
            out[i + 4] = f.add(ya[i], xb[i]);
        }
        out
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        let f = self.field;
        Octonion { c: std::array::from_fn(|i| f.add(self.c[i], rhs.c[i])), field: f }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        let f = self.field;
        Octonion { c: std::array::from_fn(|i| f.sub(self.c[i], rhs.c[i])), field: f }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        let f = self.field;
        Octonion { c: self.c.map(|v| f.neg(v)), field: f }
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        Octonion { c: Octonion::mul_raw(self.field, &self.c, &rhs.c), field: self.field }
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &v) in self.c.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if v == 1 {
                write!(f, "{}", BASIS_NAMES[i])?;
            } else {
                write!(f, "{}*{}", v, BASIS_NAMES[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn named(f: PrimeField) -> (Octonion, Octonion, Octonion, Octonion, Octonion, Octonion) {
        let e = |i| Octonion::basis(f, i);
        // p0, p0bar, n0, p0w, p0bar w, n0w
        (e(0), e(3), e(1), e(4), e(7), e(5))
    }

    #[test]
    fn products_of_named_elements() {
        for f in [PrimeField::GF2, PrimeField::GF3, PrimeField::GF5] {
            let (p0, p0bar, n0, p0w, p0bar_w, n0w) = named(f);
            assert_eq!(n0 * p0w, n0w);
            assert_eq!(n0w * p0bar_w, n0);
            assert_eq!(p0 * (p0bar_w * n0w), -n0);
            assert!(((p0 * p0bar_w) * n0w).is_zero());
            let w = p0w + p0bar_w;
            assert_eq!(w * w, Octonion::one(f));
            assert_eq!(p0 + p0bar, Octonion::one(f));
        }
    }

    #[test]
    fn conjugation_norm_trace_examples() {
        let f = PrimeField::GF5;
        let (p0, p0bar, n0, ..) = named(f);
        let one = Octonion::one(f);
        assert_eq!(one.conj(), one);
        assert_eq!(p0.conj(), p0bar);
        assert_eq!(n0.conj(), -n0);
        assert_eq!((n0.norm(), n0.trace()), (f.zero(), f.zero()));
        assert_eq!((p0.norm(), p0.trace()), (f.zero(), f.one()));
        assert_eq!(one.polar(&one), f.elem(2));
        assert!(Octonion::one(PrimeField::GF2).polar(&Octonion::one(PrimeField::GF2)).is_zero());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::GF3;
        let one = Octonion::one(f);
        assert_eq!(one.inverse().unwrap(), one);
        let two = one.scale(f.elem(2));
        assert_eq!(two.inverse().unwrap(), two);
        assert_eq!(Octonion::basis(f, 1).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn index_round_trip_covers_f2() {
        let f = PrimeField::GF2;
        let all: Vec<Octonion> = Octonion::all(f).collect();
        assert_eq!(all.len(), 256);
        for (i, x) in all.iter().enumerate() {
            assert_eq!(x.index(), i);
            assert_eq!(Octonion::from_index(f, i), *x);
        }
    }

    #[test]
    fn display_lists_terms() {
        let f = PrimeField::GF3;
        assert_eq!(Octonion::zero(f).to_string(), "0");
        assert!(Octonion::basis(f, 5).to_string().contains("E12w"));
    }

    fn arb(p: u8) -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8(0..p).prop_map(move |c| Octonion::from_coords(PrimeField::new(p as u64).unwrap(), c))
    }

    proptest! {
        #[test]
        fn unit_is_neutral(x in arb(7)) {
            let one = Octonion::one(x.field());
            prop_assert_eq!(one * x, x);
            prop_assert_eq!(x * one, x);
        }

        #[test]
        fn inverse_when_norm_nonzero(x in arb(5)) {
            match x.inverse() {
                Ok(y) => {
                    prop_assert_eq!(x * y, Octonion::one(x.field()));
                    prop_assert_eq!(y * x, Octonion::one(x.field()));
                }
                Err(_) => prop_assert!(x.norm().is_zero()),
            }
        }

        #[test]
        fn alternative_laws(x in arb(3), y in arb(3)) {
            prop_assert_eq!((x * x) * y, x * (x * y));
            prop_assert_eq!((y * x) * x, y * (x * x));
        }
    }
}
