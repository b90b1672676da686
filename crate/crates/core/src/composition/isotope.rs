use super::octonion::Octonion;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// The isotope `x * y = rho_a^{-1}(x) lambda_b^{-1}(y) = (x a^{-1})(b^{-1} y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsotopeAlgebra {
    a: Octonion,
    b: Octonion,
    a_inv: Octonion,
    b_inv: Octonion,
}

impl IsotopeAlgebra {
    pub fn new(a: Octonion, b: Octonion) -> Result<Self> {
        let a_inv = a.inverse().map_err(|_| Error::NotInvertible)?;
        let b_inv = b.inverse().map_err(|_| Error::NotInvertible)?;
        Ok(IsotopeAlgebra { a, b, a_inv, b_inv })
    }

    pub fn a(&self) -> Octonion {
        self.a
    }

    pub fn b(&self) -> Octonion {
        self.b
    }

    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        (*x * self.a_inv) * (self.b_inv * *y)
    }

    /// `b a`, a two-sided neutral element for `*`.
    pub fn neutral(&self) -> Octonion {
        self.b * self.a
    }

    /// `s = N(b a)`, so that `s N(x * y) = N(x) N(y)`.
    pub fn scale(&self) -> FieldElement {
        self.neutral().norm()
    }
}
