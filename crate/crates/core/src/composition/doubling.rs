use super::quaternion::Quaternion;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// A finite-dimensional algebra with involution given by structure constants.
///
/// Only used to rebuild the octonions by repeated doubling; the hot paths use
/// [`super::Octonion`] directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    field: PrimeField,
    dim: usize,
    /// `table[(i * dim + j) * dim + k]` is coordinate `k` of `e_i e_j`.
    table: Vec<u8>,
    /// `conj[j * dim + k]` is coordinate `k` of the involution applied to `e_j`.
    conj: Vec<u8>,
    unit: Vec<u8>,
}

impl StructAlgebra {
    /// `F` itself with the identity involution.
    pub fn scalars(field: PrimeField) -> Self {
        StructAlgebra { field, dim: 1, table: vec![1], conj: vec![1], unit: vec![1] }
    }

    /// `F^{2x2}` on the matrix units with the adjugate involution.
    pub fn split_quaternions(field: PrimeField) -> Self {
        let units: Vec<Quaternion> =
            [(1, 1), (1, 2), (2, 1), (2, 2)].iter().map(|&(i, j)| Quaternion::unit(field, i, j)).collect();
        let mut table = Vec::with_capacity(64);
        for x in &units {
            for y in &units {
                table.extend_from_slice(&(*x * *y).entries());
            }
        }
        let conj = units.iter().flat_map(|x| x.conj().entries()).collect();
        StructAlgebra { field, dim: 4, table, conj, unit: vec![1, 0, 0, 1] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u8] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u8] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![0u8; d];
        for i in 0..d {
            for j in 0..d {
                let s = f.mul(x[i], y[j]);
                if s == 0 {
                    continue;
                }
                for (o, &e) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = f.add(*o, f.mul(s, e));
                }
            }
        }
        out
    }

    pub fn conj(&self, x: &[u8]) -> Vec<u8> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![0u8; d];
        for j in 0..d {
            for k in 0..d {
                out[k] = f.add(out[k], f.mul(x[j], self.conj[j * d + k]));
            }
        }
        out
    }

    fn add(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    fn scale(&self, s: u8, x: &[u8]) -> Vec<u8> {
        x.iter().map(|&a| self.field.mul(s, a)).collect()
    }

    /// The scalar `N(x)` with `x conj(x) = N(x) 1`.
    pub fn norm(&self, x: &[u8]) -> FieldElement {
        let xx = self.mul(x, &self.conj(x));
        let k = self.unit.iter().position(|&u| u != 0).expect("unit is nonzero");
        let f = self.field;
        let n = f.mul(xx[k], f.inv(self.unit[k]).expect("nonzero"));
        debug_assert_eq!(xx, self.scale(n, &self.unit));
        f.elem(n as i64)
    }

    /// Doubling `D + Dw` with `(x + yw)(u + vw) = (xu - mu conj(v) y) + (vx + y conj(u))w`.
    pub fn double(&self, mu: FieldElement) -> Result<StructAlgebra> {
        if mu.is_zero() {
            return Err(Error::PreconditionFailed("doubling parameter must be nonzero".into()));
        }
        let f = self.field;
        let d = self.dim;
        let n = 2 * d;
        let neg_mu = (-mu).value();
        let split = |z: &[u8]| (z[..d].to_vec(), z[d..].to_vec());
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            let mut ei = vec![0u8; n];
            ei[i] = 1;
            let (x, y) = split(&ei);
            for j in 0..n {
                let mut ej = vec![0u8; n];
                ej[j] = 1;
                let (u, v) = split(&ej);
                let h = self.add(&self.mul(&x, &u), &self.scale(neg_mu, &self.mul(&self.conj(&v), &y)));
                let k = self.add(&self.mul(&v, &x), &self.mul(&y, &self.conj(&u)));
                table.extend(h);
                table.extend(k);
            }
        }
        let mut conj = Vec::with_capacity(n * n);
        for j in 0..n {
            let mut ej = vec![0u8; n];
            ej[j] = 1;
            let (x, y) = split(&ej);
            conj.extend(self.conj(&x));
            conj.extend(y.iter().map(|&v| f.neg(v)));
        }
        let mut unit = self.unit.clone();
        unit.resize(n, 0);
        Ok(StructAlgebra { field: f, dim: n, table, conj, unit })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{MultTable, Octonion};

    #[test]
    fn doubling_matrices_reproduces_octonion_table() {
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let o = StructAlgebra::split_quaternions(f).double(-f.one()).unwrap();
            let t = MultTable::new(f);
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(o.basis_product(i, j), &t.basis_product(i, j)[..], "p={p} e{i}e{j}");
                }
            }
        }
    }

    #[test]
    fn w_squares_to_one() {
        let f = PrimeField::GF3;
        let o = StructAlgebra::split_quaternions(f).double(-f.one()).unwrap();
        let w = Octonion::new(f, [0, 0, 0, 0, 1, 0, 0, 1]).coords();
        assert_eq!(o.mul(&w, &w), o.unit());
    }

    #[test]
    fn triple_doubling_of_scalars_is_a_split_composition_algebra() {
        // In characteristic 2 doubling F with the identity involution gives a degenerate norm.
        for p in [3u64, 5] {
            let f = PrimeField::new(p).unwrap();
            let mut a = StructAlgebra::scalars(f);
            for _ in 0..3 {
                a = a.double(-f.one()).unwrap();
            }
            assert_eq!(a.dim(), 8);
            let basis: Vec<Vec<u8>> = (0..8)
                .map(|i| {
                    let mut e = vec![0u8; 8];
                    e[i] = 1;
                    e
                })
                .collect();
            for x in &basis {
                for y in &basis {
                    assert_eq!(a.norm(&a.mul(x, y)), a.norm(x) * a.norm(y));
                }
            }
            // Sums of two basis vectors exercise the cross terms of the norm.
            for i in 0..8 {
                for j in 0..8 {
                    let mut x = basis[i].clone();
                    x[j] = f.add(x[j], 1);
                    for y in &basis {
                        assert_eq!(a.norm(&a.mul(&x, y)), a.norm(&x) * a.norm(y));
                    }
                }
            }
            let split = (1..8).any(|i| (1..8).any(|j| {
                let mut x = basis[0].clone();
                x[i] = f.add(x[i], 1);
                x[j] = f.add(x[j], 1);
                a.norm(&x).is_zero()
            }));
            assert!(split, "p={p}");
        }
    }

    #[test]
    fn zero_parameter_rejected() {
        let f = PrimeField::GF3;
        assert!(StructAlgebra::scalars(f).double(f.zero()).is_err());
    }
}
