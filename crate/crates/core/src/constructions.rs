//! Named elements and subalgebras: right-ideal doubles, Heisenberg algebras,
//! singular subspaces, centralizers and one representative per orbit label.

use crate::classify::OrbitLabel;
use crate::composition::{MultTable, Octonion, Quaternion};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::subspace::{to_row, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedElements {
    pub one: Octonion,
    /// `E11`
    pub p0: Octonion,
    /// `E12`
    pub n0: Octonion,
    /// `E11 w + E22 w`, with `w^2 = 1`.
    pub w: Octonion,
    pub p0w: Octonion,
    pub n0w: Octonion,
    /// `E22 = 1 - p0`
    pub p0bar: Octonion,
    pub p0bar_w: Octonion,
}

impl NamedElements {
    pub fn new(f: PrimeField) -> Self {
        let e = |i| Octonion::basis(f, i);
        NamedElements {
            one: Octonion::one(f),
            p0: e(0),
            n0: e(1),
            w: e(4) + e(7),
            p0w: e(4),
            n0w: e(5),
            p0bar: e(3),
            p0bar_w: e(7),
        }
    }
}

/// `a + 0w`.
pub fn embed(q: Quaternion) -> Octonion {
    Octonion::from_parts(q, Quaternion::zero(q.field()))
}

/// `0 + q w`.
pub fn embed_w(q: Quaternion) -> Octonion {
    Octonion::from_parts(Quaternion::zero(q.field()), q)
}

/// Span of matrices, placed in the `H` half.
pub fn h_span(f: PrimeField, qs: &[Quaternion]) -> Subspace {
    Subspace::span(f, qs.iter().map(|q| embed(*q).coords()))
}

fn units(f: PrimeField) -> [Quaternion; 4] {
    [Quaternion::unit(f, 1, 1), Quaternion::unit(f, 1, 2), Quaternion::unit(f, 2, 1), Quaternion::unit(f, 2, 2)]
}

/// `H = F^{2x2}`.
pub fn quaternions(f: PrimeField) -> Subspace {
    h_span(f, &units(f))
}

/// Upper triangular matrices `U`.
pub fn upper_triangular(f: PrimeField) -> Subspace {
    let [e11, e12, _, e22] = units(f);
    h_span(f, &[e11, e12, e22])
}

/// `L`, matrices with zero second row.
pub fn first_row(f: PrimeField) -> Subspace {
    let [e11, e12, _, _] = units(f);
    h_span(f, &[e11, e12])
}

/// `kappa(L)`, matrices with zero first column.
pub fn last_column(f: PrimeField) -> Subspace {
    let [_, e12, _, e22] = units(f);
    h_span(f, &[e12, e22])
}

/// `R_v = {X : vX = 0}` for a nonzero row vector `v`.
pub fn right_ideal(f: PrimeField, v: [i64; 2]) -> Result<Subspace> {
    let v = v.map(|x| f.reduce(x));
    if v == [0, 0] {
        return Err(Error::PreconditionFailed("row vector must be nonzero".into()));
    }
    let members: Vec<Quaternion> = Quaternion::all(f)
        .filter(|q| {
            let m = q.entries();
            let c1 = f.add(f.mul(v[0], m[0]), f.mul(v[1], m[2]));
            let c2 = f.add(f.mul(v[0], m[1]), f.mul(v[1], m[3]));
            c1 == 0 && c2 == 0
        })
        .collect();
    Ok(h_span(f, &members))
}

fn in_h(s: &Subspace) -> bool {
    s.rows().iter().all(|r| r[4..] == [0; 4])
}

/// `A + Rw` for a subalgebra `A` of `H` and a subspace `R` of `H` with
/// `RA ⊆ R` and `conj(R) R ⊆ A`.
pub fn right_ideal_double(a: &Subspace, r: &Subspace) -> Result<Subspace> {
    let f = a.field();
    if !in_h(a) || !in_h(r) {
        return Err(Error::PreconditionFailed("A and R must lie in H".into()));
    }
    if !a.is_closed() {
        return Err(Error::PreconditionFailed("A is not a subalgebra of H".into()));
    }
    if !r.product_span(a).is_subspace_of(r) {
        return Err(Error::PreconditionFailed("RA is not contained in R".into()));
    }
    let rb = r.basis();
    let conj_rr = Subspace::span(f, rb.iter().flat_map(|x| rb.iter().map(move |y| (y.conj() * *x).coords())));
    if !conj_rr.is_subspace_of(a) {
        return Err(Error::PreconditionFailed("conj(R)R is not contained in A".into()));
    }
    let shifted = r.rows().iter().map(|row| {
        let mut s = [0u8; 8];
        s[4..].copy_from_slice(&row[..4]);
        s
    });
    let out = Subspace::span(f, a.rows().iter().copied().chain(shifted));
    if !out.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(out)
}

/// `span{a, b, ab}` for nilpotent `a` and nilpotent `b` in `a^⊥` outside `F + Fa`.
pub fn heisenberg(a: &Octonion, b: &Octonion) -> Result<Subspace> {
    let f = a.field();
    if !a.is_nilpotent() {
        return Err(Error::PreconditionFailed(format!("{a} is not nilpotent")));
    }
    if !b.is_nilpotent() {
        return Err(Error::PreconditionFailed(format!("{b} is not nilpotent")));
    }
    if !a.polar(b).is_zero() {
        return Err(Error::PreconditionFailed("b is not orthogonal to a".into()));
    }
    if Subspace::from_octonions(f, &[Octonion::one(f), *a]).contains(b) {
        return Err(Error::PreconditionFailed("b lies in F + Fa".into()));
    }
    Ok(Subspace::from_octonions(f, &[*a, *b, *a * *b]))
}

/// `a O`.
pub fn left_mul_space(a: &Octonion) -> Subspace {
    let f = a.field();
    Subspace::span(f, (0..8).map(|i| (*a * Octonion::basis(f, i)).coords()))
}

/// `O a`.
pub fn right_mul_space(a: &Octonion) -> Subspace {
    let f = a.field();
    Subspace::span(f, (0..8).map(|i| (Octonion::basis(f, i) * *a).coords()))
}

/// Kernel of the left translation by `a`.
pub fn left_kernel(a: &Octonion) -> Subspace {
    let t = MultTable::new(a.field());
    Subspace::span(a.field(), t.left_matrix(a).nullspace().into_iter().map(to_row))
}

/// `{x : xv = vx}`, as the kernel of `x -> xv - vx`.
pub fn centralizer(v: &Octonion) -> Subspace {
    let t = MultTable::new(v.field());
    let m = t.right_matrix(v).sub(&t.left_matrix(v));
    Subspace::span(v.field(), m.nullspace().into_iter().map(to_row))
}

/// The 2-dimensional field `F[z]` inside `H`, where `z` is the companion
/// matrix of the first irreducible `X^2 + c1 X + c0` in `(c1, c0)` order.
pub fn quadratic_extension(f: PrimeField) -> Subspace {
    let p = f.p();
    let (c1, c0) = (0..p)
        .flat_map(|c1| (0..p).map(move |c0| (c1, c0)))
        .find(|&(c1, c0)| f.quadratic_roots(f.neg(c1), c0).is_empty())
        .expect("every finite field has an irreducible quadratic");
    let z = Quaternion::from_residues(f, [0, f.neg(c0), 1, f.neg(c1)]);
    h_span(f, &[Quaternion::one(f), z])
}

/// A fixed representative of each label that occurs over `f`.
pub fn rep(label: OrbitLabel, f: PrimeField) -> Result<Subspace> {
    use OrbitLabel::*;
    let n = NamedElements::new(f);
    let span = |xs: &[Octonion]| Subspace::from_octonions(f, xs);
    let with_one = |s: Subspace| s.sum(&span(&[n.one]));
    let heis = || left_mul_space(&n.n0).intersection(&right_mul_space(&n.n0));
    let q = span(&[n.p0w, n.n0w]);
    Ok(match label {
        Zero => Subspace::zero(f),
        F => span(&[n.one]),
        Fp => span(&[n.p0]),
        Fn => span(&[n.n0]),
        S => span(&[n.p0, n.p0bar]),
        FplusFn => span(&[n.one, n.n0]),
        FnFp => span(&[n.n0, n.p0]),
        FnFpbar => span(&[n.n0, n.p0bar]),
        Q => q,
        E => quadratic_extension(f),
        T => upper_triangular(f),
        FplusQ => with_one(q),
        mOcapOn => left_mul_space(&n.n0).intersection(&right_mul_space(&n.n0w)),
        HeisNOcapOn => heis(),
        SplitQuat => quaternions(f),
        SplusQ => right_ideal_double(&span(&[n.p0, n.p0bar]), &first_row(f))?,
        EplusQ => right_ideal_double(&quadratic_extension(f), &first_row(f))?,
        FplusHeis => with_one(heis()),
        NO => left_mul_space(&n.n0),
        ON => right_mul_space(&n.n0),
        Dim5 => left_mul_space(&n.n0).sum(&right_mul_space(&n.n0)),
        Dim6 => right_ideal_double(&quaternions(f), &first_row(f))?,
        Full => Subspace::full(f),
        D | DplusQ | K | QuatField => return Err(Error::UnreachableLabel { label, p: f.p() }),
    })
}

/// Coordinates of `x` in the RREF basis of `s` (read off at the pivots).
pub fn coordinates_in(s: &Subspace, x: &Octonion) -> Option<Vec<u8>> {
    let c = x.coords();
    let coeffs: Vec<u8> = s.pivots().iter().map(|&pc| c[pc]).collect();
    (s.combine(&coeffs) == c).then_some(coeffs)
}

/// A linear multiplicative bijection `a -> b`, given as the images of the
/// basis of `a`, found by backtracking over the elements of `b`.
pub fn find_isomorphism(a: &Subspace, b: &Subspace) -> Option<Vec<Octonion>> {
    let f = a.field();
    if a.dim() != b.dim() {
        return None;
    }
    let k = a.dim();
    let basis = a.basis();
    // consts[i][j] = coordinates of a_i a_j in the basis of a.
    let mut consts = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            consts[i][j] = coordinates_in(a, &(basis[i] * basis[j]))?;
        }
    }
    let candidates: Vec<Octonion> = b.elements().into_iter().filter(|x| !x.is_zero()).collect();
    let image = |imgs: &[Octonion], coeffs: &[u8]| {
        coeffs.iter().zip(imgs).fold(Octonion::zero(f), |acc, (&c, x)| acc + x.scale(f.elem(c as i64)))
    };
    fn go(
        m: usize,
        k: usize,
        imgs: &mut Vec<Octonion>,
        candidates: &[Octonion],
        consts: &[Vec<Vec<u8>>],
        image: &dyn Fn(&[Octonion], &[u8]) -> Octonion,
    ) -> bool {
        if m == k {
            return true;
        }
        let f = candidates[0].field();
        for &c in candidates {
            let mut trial = imgs.clone();
            trial.push(c);
            if Subspace::from_octonions(f, &trial).dim() != m + 1 {
                continue;
            }
            // Check each product once, as soon as every index it touches is assigned.
            let ok = (0..=m).flat_map(|x| (0..=m).map(move |y| (x, y))).all(|(x, y)| {
                let co = &consts[x][y];
                let last = co.iter().rposition(|&v| v != 0).unwrap_or(0);
                if x.max(y).max(last) != m {
                    return true;
                }
                trial[x] * trial[y] == image(&trial, &co[..=m])
            });
            if !ok {
                continue;
            }
            imgs.push(c);
            if go(m + 1, k, imgs, candidates, consts, image) {
                return true;
            }
            imgs.pop();
        }
        false
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let mut imgs = Vec::with_capacity(k);
    go(0, k, &mut imgs, &candidates, &consts, &image).then_some(imgs)
}
