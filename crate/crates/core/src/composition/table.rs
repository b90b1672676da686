use super::octonion::Octonion;
use crate::field::PrimeField;
use crate::linalg::Matrix;

/// Structure constants: `prod[i][j]` is the coordinate vector of `e_i e_j`.
#[derive(Clone, Debug)]
pub struct MultTable {
    field: PrimeField,
    prod: [[[u8; 8]; 8]; 8],
}

impl MultTable {
    pub fn new(field: PrimeField) -> Self {
        let mut prod = [[[0u8; 8]; 8]; 8];
        for (i, row) in prod.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (Octonion::basis(field, i) * Octonion::basis(field, j)).coords();
            }
        }
        MultTable { field, prod }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis_product(&self, i: usize, j: usize) -> [u8; 8] {
        self.prod[i][j]
    }

    /// Bilinear expansion over the structure constants.
    pub fn mul(&self, u: &Octonion, v: &Octonion) -> Octonion {
        let f = self.field;
        let (u, v) = (u.coords(), v.coords());
        let mut acc = [0u8; 8];
        for i in 0..8 {
            if u[i] == 0 {
                continue;
            }
            for j in 0..8 {
                let s = f.mul(u[i], v[j]);
                if s == 0 {
                    continue;
                }
                for (a, &e) in acc.iter_mut().zip(&self.prod[i][j]) {
                    *a = f.add(*a, f.mul(s, e));
                }
            }
        }
        Octonion::from_coords(f, acc)
    }

    /// Matrix of `x -> a x`; column `j` holds `a e_j`.
    pub fn left_matrix(&self, a: &Octonion) -> Matrix {
        self.translation(a, true)
    }

    /// Matrix of `x -> x a`.
    pub fn right_matrix(&self, a: &Octonion) -> Matrix {
        self.translation(a, false)
    }

    fn translation(&self, a: &Octonion, left: bool) -> Matrix {
        let f = self.field;
        let mut m = Matrix::zero(f, 8, 8);
        for j in 0..8 {
            let e = Octonion::basis(f, j);
            let col = if left { self.mul(a, &e) } else { self.mul(&e, a) };
            for (i, &v) in col.coords().iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }
}

/// Full multiplication table of the 256 elements over `F_2`.
///
/// Elements are bytes with bit `i` holding coordinate `i`.
pub struct Gf2Table {
    prod: Vec<u8>,
    norm: [u8; 256],
    trace: [u8; 256],
    conj: [u8; 256],
}

impl Default for Gf2Table {
    fn default() -> Self {
        Self::new()
    }
}

impl Gf2Table {
    pub fn new() -> Self {
        let mut prod = vec![0u8; 1 << 16];
        let mut norm = [0u8; 256];
        let mut trace = [0u8; 256];
        let mut conj = [0u8; 256];
        for u in 0..=255u8 {
            let ou = Self::unpack(u);
            norm[u as usize] = ou.norm().value();
            trace[u as usize] = ou.trace().value();
            conj[u as usize] = Self::pack(&ou.conj());
            for v in 0..=255u8 {
                prod[(u as usize) << 8 | v as usize] = Self::pack(&(ou * Self::unpack(v)));
            }
        }
        Gf2Table { prod, norm, trace, conj }
    }

    #[inline]
    pub fn mul(&self, u: u8, v: u8) -> u8 {
        self.prod[(u as usize) << 8 | v as usize]
    }

    #[inline]
    pub fn norm(&self, u: u8) -> u8 {
        self.norm[u as usize]
    }

    #[inline]
    pub fn trace(&self, u: u8) -> u8 {
        self.trace[u as usize]
    }

    #[inline]
    pub fn conj(&self, u: u8) -> u8 {
        self.conj[u as usize]
    }

    #[inline]
    pub fn polar(&self, u: u8, v: u8) -> u8 {
        self.norm(u ^ v) ^ self.norm(u) ^ self.norm(v)
    }

    pub fn pack(x: &Octonion) -> u8 {
        assert!(x.field().is_char_two(), "packing needs F_2");
        Self::pack_coords(&x.coords())
    }

    #[inline]
    pub fn pack_coords(c: &[u8; 8]) -> u8 {
        c.iter().enumerate().fold(0u8, |acc, (i, &v)| acc | ((v & 1) << i))
    }

    pub fn unpack(b: u8) -> Octonion {
        Octonion::from_coords(PrimeField::GF2, Self::unpack_coords(b))
    }

    #[inline]
    pub fn unpack_coords(b: u8) -> [u8; 8] {
        std::array::from_fn(|i| (b >> i) & 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bilinear_expansion_agrees_with_direct_product() {
        let f = PrimeField::GF5;
        let t = MultTable::new(f);
        for x in Octonion::all(f).step_by(7919).take(40) {
            for y in Octonion::all(f).step_by(6007).take(40) {
                assert_eq!(t.mul(&x, &y), x * y);
            }
        }
    }

    #[test]
    fn translation_matrices_act_by_multiplication() {
        let f = PrimeField::GF3;
        let t = MultTable::new(f);
        let a = Octonion::new(f, [1, 2, 0, 0, 1, 1, 0, 2]);
        let x = Octonion::new(f, [0, 1, 1, 2, 0, 0, 1, 1]);
        let col = |m: &Matrix| Octonion::from_coords(f, m.mul_vec(&x.coords()).try_into().unwrap());
        assert_eq!(col(&t.left_matrix(&a)), a * x);
        assert_eq!(col(&t.right_matrix(&a)), x * a);
    }

    #[test]
    fn gf2_table_packing() {
        let t = Gf2Table::new();
        for b in 0..=255u8 {
            assert_eq!(Gf2Table::pack(&Gf2Table::unpack(b)), b);
        }
        let one = Gf2Table::pack(&Octonion::one(PrimeField::GF2));
        assert_eq!(one, 0b1001);
        assert!((0..=255u8).all(|u| t.mul(one, u) == u && t.mul(u, one) == u));
        // (2^4 - 1)(2^3 + 1) singular vectors; the trace-0 ones form a
        // parabolic quadric in 1^perp with 2^6 - 1 points.
        let singular = (1..=255u8).filter(|&u| t.norm(u) == 0).count();
        let nilpotent = (1..=255u8).filter(|&u| t.norm(u) == 0 && t.trace(u) == 0).count();
        assert_eq!((singular, nilpotent), (135, 63));
    }
}
