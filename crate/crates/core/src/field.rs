//! Prime fields `F_p` for the small primes the crate supports.
//!
//! Residues are stored as `u8`. [`PrimeField`] carries the modulus and offers
//! raw residue arithmetic for hot loops; [`FieldElement`] pairs a residue with
//! its field and panics when two moduli meet.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct PrimeField {
    p: u8,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::GF2
    }
}

impl TryFrom<u8> for PrimeField {
    type Error = Error;
    fn try_from(p: u8) -> Result<Self> {
        PrimeField::new(p as u64)
    }
}

impl From<PrimeField> for u8 {
    fn from(f: PrimeField) -> u8 {
        f.p
    }
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };
    pub const GF3: PrimeField = PrimeField { p: 3 };
    pub const GF5: PrimeField = PrimeField { p: 5 };

    pub fn new(p: u64) -> Result<Self> {
        if SUPPORTED_PRIMES.iter().any(|&q| q as u64 == p) {
            Ok(PrimeField { p: p as u8 })
        } else {
            Err(Error::UnsupportedPrime(p))
        }
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn is_char_two(self) -> bool {
        self.p == 2
    }

    /// Number of field elements as a `usize`, handy for counting loops.
    #[inline]
    pub fn order(self) -> usize {
        self.p as usize
    }

    pub fn elem(self, v: i64) -> FieldElement {
        FieldElement { value: self.reduce(v), field: self }
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, field: self }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, field: self }
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(move |value| FieldElement { value, field: self })
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(self, a: u8) -> Result<u8> {
        if a.is_multiple_of(self.p) {
            return Err(Error::InvZero);
        }
        // a^(p-2) by Fermat.
        let mut acc = 1u8;
        for _ in 0..self.p - 2 {
            acc = self.mul(acc, a);
        }
        Ok(acc)
    }

    /// Roots of `X^2 - t X + n` in the field, found by trying every element.
    pub fn quadratic_roots(self, t: u8, n: u8) -> Vec<u8> {
        (0..self.p)
            .filter(|&x| {
                let v = self.add(self.sub(self.mul(x, x), self.mul(t, x)), n);
                v == 0
            })
            .collect()
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub(crate) fn from_raw(field: PrimeField, value: u8) -> FieldElement {
        debug_assert!(value < field.p);
        FieldElement { value, field }
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement { value: self.field.inv(self.value)?, field: self.field })
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    #[inline]
    fn check(self, rhs: FieldElement) {
        assert_eq!(
            self.field, rhs.field,
            "modulus mismatch: {} vs {}",
            self.field, rhs.field
        );
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check(rhs);
        FieldElement { value: self.field.add(self.value, rhs.value), field: self.field }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check(rhs);
        FieldElement { value: self.field.sub(self.value, rhs.value), field: self.field }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check(rhs);
        FieldElement { value: self.field.mul(self.value, rhs.value), field: self.field }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { value: self.field.neg(self.value), field: self.field }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f2 = PrimeField::GF2;
        assert_eq!(f2.one() + f2.one(), f2.zero());
        let f3 = PrimeField::GF3;
        assert_eq!((f3.elem(2) * f3.elem(2)).value(), 1);
        let f5 = PrimeField::GF5;
        assert_eq!((-f5.one()).value(), 4);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.elem(3).inv().unwrap().value(), 5);
        assert_eq!(f2.one().inv().unwrap().value(), 1);
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(f13.elem(2).inv().unwrap().value(), 7);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        for &p in &SUPPORTED_PRIMES {
            let f = PrimeField::new(p as u64).unwrap();
            assert_eq!(f.zero().inv(), Err(Error::InvZero));
        }
    }

    #[test]
    fn unsupported_primes_rejected() {
        for p in [0, 1, 4, 9, 17, 256] {
            assert!(PrimeField::new(p).is_err());
        }
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn mixed_moduli_panic() {
        let _ = PrimeField::GF2.one() + PrimeField::GF3.one();
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                assert_eq!(a + f.zero(), a);
                assert_eq!(a * f.one(), a);
                assert_eq!(a + (-a), f.zero());
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), f.one());
                }
                for b in f.elements() {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!((a - b) + b, a);
                    for c in f.elements() {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_additive_only_in_char_two() {
        for &p in &SUPPORTED_PRIMES {
            let f = PrimeField::new(p as u64).unwrap();
            let additive = f
                .elements()
                .all(|a| f.elements().all(|b| (a + b).square() == a.square() + b.square()));
            assert_eq!(additive, p == 2, "p = {p}");
        }
    }

    #[test]
    fn quadratic_roots_by_search() {
        let f2 = PrimeField::GF2;
        assert!(f2.quadratic_roots(1, 1).is_empty());
        let f3 = PrimeField::GF3;
        assert!(f3.quadratic_roots(0, 1).is_empty());
        assert_eq!(f3.quadratic_roots(0, 2), vec![1, 2]);
    }
}
