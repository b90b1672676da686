//! Explicit automorphisms of the split octonions, group closure and orbits.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::classify::OrbitLabel;
use crate::composition::{Octonion, Quaternion};
use crate::constructions::{embed, embed_w, quaternions};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::record::SubalgebraRecord;
use crate::subspace::{Row, Subspace};

pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// An F-linear automorphism as an 8x8 matrix; column `j` is the image of `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    field: PrimeField,
    m: [u8; 64],
}

impl std::fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Automorphism").field("field", &self.field).field("columns", &self.images()).finish()
    }
}

impl Automorphism {
    pub fn identity(field: PrimeField) -> Self {
        let mut m = [0u8; 64];
        for i in 0..8 {
            m[i * 8 + i] = 1;
        }
        Automorphism { field, m }
    }

    /// Builds the map sending `e_j` to `images[j]` and checks it is an automorphism.
    pub fn from_images(field: PrimeField, images: &[Octonion; 8]) -> Result<Self> {
        let mut m = [0u8; 64];
        for (j, x) in images.iter().enumerate() {
            for (i, &v) in x.coords().iter().enumerate() {
                m[i * 8 + j] = v;
            }
        }
        let a = Automorphism { field, m };
        a.verify()?;
        Ok(a)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn key(&self) -> &[u8; 64] {
        &self.m
    }

    pub fn images(&self) -> [Octonion; 8] {
        std::array::from_fn(|j| Octonion::from_coords(self.field, std::array::from_fn(|i| self.m[i * 8 + j])))
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, &(0..8).map(|i| self.m[i * 8..i * 8 + 8].to_vec()).collect::<Vec<_>>())
    }

    #[inline]
    pub fn apply_coords(&self, x: &Row) -> Row {
        let f = self.field;
        std::array::from_fn(|i| {
            let row = &self.m[i * 8..i * 8 + 8];
            row.iter().zip(x).fold(0u8, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
        })
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        Octonion::from_coords(self.field, self.apply_coords(&x.coords()))
    }

    pub fn apply_subspace(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.field, s.rows().iter().map(|r| self.apply_coords(r)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let f = self.field;
        let mut m = [0u8; 64];
        for i in 0..8 {
            for k in 0..8 {
                let a = self.m[i * 8 + k];
                if a == 0 {
                    continue;
                }
                for j in 0..8 {
                    let idx = i * 8 + j;
                    m[idx] = f.add(m[idx], f.mul(a, other.m[k * 8 + j]));
                }
            }
        }
        Automorphism { field: f, m }
    }

    pub fn inverse(&self) -> Automorphism {
        let inv = self.matrix().inverse().expect("automorphisms are invertible");
        let mut m = [0u8; 64];
        m.copy_from_slice(inv.data());
        Automorphism { field: self.field, m }
    }

    /// Invertible, fixes 1, multiplicative on all basis pairs.
    pub fn verify(&self) -> Result<()> {
        let f = self.field;
        if !self.matrix().is_invertible() {
            return Err(Error::PreconditionFailed("map is not bijective".into()));
        }
        let one = Octonion::one(f);
        if self.apply(&one) != one {
            return Err(Error::PreconditionFailed("map does not fix 1".into()));
        }
        let img = self.images();
        for i in 0..8 {
            for j in 0..8 {
                let lhs = self.apply(&(Octonion::basis(f, i) * Octonion::basis(f, j)));
                if lhs != img[i] * img[j] {
                    return Err(Error::PreconditionFailed(format!("not multiplicative on e{i} e{j}")));
                }
            }
        }
        Ok(())
    }
}

/// `a + xw -> s a s^{-1} + (t x s^{-1}) w`.
pub fn alpha_st(s: Quaternion, t: Quaternion) -> Result<Automorphism> {
    let f = s.field();
    if s.norm().is_zero() || t.norm().is_zero() {
        return Err(Error::PreconditionFailed("s and t must be invertible".into()));
    }
    if s.norm() != t.norm() {
        return Err(Error::PreconditionFailed("N(s) and N(t) differ".into()));
    }
    let s_inv = s.inverse()?;
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)].map(|(i, j)| Quaternion::unit(f, i, j));
    let images: [Octonion; 8] = std::array::from_fn(|j| {
        if j < 4 {
            embed(s * units[j] * s_inv)
        } else {
            embed_w(t * units[j - 4] * s_inv)
        }
    });
    Automorphism::from_images(f, &images)
}

/// Extends an embedding `beta` of `H` (given by the images of `E11, E12, E21, E22`)
/// to `a + xw -> beta(a) + beta(x) w'`.
pub fn doubling_extension(beta: &[Octonion; 4], w_target: &Octonion) -> Result<Automorphism> {
    let f = w_target.field();
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)].map(|(i, j)| Quaternion::unit(f, i, j));
    if beta[0] + beta[3] != Octonion::one(f) {
        return Err(Error::PreconditionFailed("beta is not unital".into()));
    }
    for i in 0..4 {
        for j in 0..4 {
            let prod = (units[i] * units[j]).entries();
            let want = (0..4).fold(Octonion::zero(f), |acc, k| acc + beta[k].scale(f.elem(prod[k] as i64)));
            if beta[i] * beta[j] != want {
                return Err(Error::PreconditionFailed("beta is not multiplicative".into()));
            }
        }
    }
    if beta.iter().any(|b| !b.polar(w_target).is_zero()) {
        return Err(Error::PreconditionFailed("w' is not orthogonal to beta(H)".into()));
    }
    if w_target.norm() != -f.one() {
        return Err(Error::PreconditionFailed("N(w') differs from N(w) = -1".into()));
    }
    let images: [Octonion; 8] = std::array::from_fn(|j| if j < 4 { beta[j] } else { beta[j - 4] * *w_target });
    Automorphism::from_images(f, &images)
}

/// An extension moving `H`: matrix units `p0, E12', E21', 1 - p0` with
/// `E12'` outside `H`, found by search in the Peirce spaces of `p0`, and the
/// first `w'` of norm -1 orthogonal to their span.
pub fn h_moving_extension(f: PrimeField) -> Result<Automorphism> {
    let e = |i| Octonion::basis(f, i);
    let p0 = e(0);
    let p0bar = e(3);
    let h = quaternions(f);
    let combos = |a: Octonion, b: Octonion, c: Octonion| {
        let p = f.p() as i64;
        (0..p * p * p).map(move |i| {
            a.scale(f.elem(i % p)) + b.scale(f.elem(i / p % p)) + c.scale(f.elem(i / (p * p)))
        })
    };
    for e12 in combos(e(1), e(4), e(6)) {
        if h.contains(&e12) || !(e12 * e12).is_zero() {
            continue;
        }
        for e21 in combos(e(2), e(5), e(7)) {
            if !(e21 * e21).is_zero() || e12 * e21 != p0 || e21 * e12 != p0bar {
                continue;
            }
            let beta = [p0, e12, e21, p0bar];
            let hp = Subspace::from_octonions(f, &beta);
            let Some(w) = hp.perp().elements().into_iter().find(|x| x.norm() == -f.one()) else { continue };
            return doubling_extension(&beta, &w);
        }
    }
    Err(Error::PreconditionFailed("no quaternion subalgebra moving H found".into()))
}

/// All distinct `alpha_{s,t}` with `det s = det t`.
pub fn alpha_family(f: PrimeField) -> Vec<Automorphism> {
    let gl: Vec<Quaternion> = Quaternion::all(f).filter(|q| !q.norm().is_zero()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in &gl {
        for t in gl.iter().filter(|t| t.norm() == s.norm()) {
            let a = alpha_st(*s, *t).expect("valid pair");
            if seen.insert(*a.key()) {
                out.push(a);
            }
        }
    }
    out
}

/// Keeps a generator only when it lies outside the group generated by the
/// ones kept before it. Only sensible when that group stays small.
pub fn reduce_generators(f: PrimeField, gens: &[Automorphism]) -> Vec<Automorphism> {
    let mut kept: Vec<Automorphism> = Vec::new();
    let mut group: HashSet<[u8; 64]> = HashSet::from([*Automorphism::identity(f).key()]);
    for g in gens {
        if group.contains(g.key()) {
            continue;
        }
        kept.push(g.clone());
        let closure = generate_group(f, &kept, usize::MAX);
        group = closure.elements.iter().map(|a| *a.key()).collect();
    }
    kept
}

/// The generating set: a reduced `alpha_{s,t}` family plus one `H`-moving extension.
pub fn default_generators(f: PrimeField) -> Result<Vec<Automorphism>> {
    let mut gens = reduce_generators(f, &alpha_family(f));
    gens.push(h_moving_extension(f)?);
    Ok(gens)
}

#[derive(Clone, Debug)]
pub struct GroupClosure {
    pub field: PrimeField,
    pub generators: Vec<Automorphism>,
    pub elements: Vec<Automorphism>,
    /// False when the BFS stopped at the cap.
    pub complete: bool,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cap_error(&self) -> Option<Error> {
        (!self.complete).then_some(Error::CapExceeded(self.elements.len()))
    }
}

/// Breadth-first closure of `gens` under composition, stopping at `cap` elements.
pub fn generate_group(field: PrimeField, gens: &[Automorphism], cap: usize) -> GroupClosure {
    let id = Automorphism::identity(field);
    let mut seen: HashSet<[u8; 64]> = HashSet::new();
    seen.insert(*id.key());
    let mut elements = vec![id];
    let mut head = 0;
    let mut complete = true;
    'bfs: while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(*h.key()) {
                if elements.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                elements.push(h);
            }
        }
    }
    GroupClosure { field, generators: gens.to_vec(), elements, complete }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Indices into the record list, ascending.
    pub members: Vec<usize>,
    pub labels: BTreeSet<Option<OrbitLabel>>,
}

/// Orbits of the records under the group generated by `gens`.
pub fn orbit_partition(records: &[SubalgebraRecord], gens: &[Automorphism]) -> Result<Vec<Orbit>> {
    let index: HashMap<&Subspace, usize> = records.iter().enumerate().map(|(i, r)| (&r.space, i)).collect();
    let mut orbit_of = vec![usize::MAX; records.len()];
    let mut orbits = Vec::new();
    for start in 0..records.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let img = g.apply_subspace(&records[i].space);
                let &j = index
                    .get(&img)
                    .ok_or_else(|| Error::Input(format!("image {img} is missing from the record set")))?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let labels = members.iter().map(|&i| records[i].label).collect();
        orbits.push(Orbit { members, labels });
    }
    Ok(orbits)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub dim: usize,
    pub label: String,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
}

/// One report per `(dim, label)`, counting the orbits inside that label class.
pub fn orbit_reports(records: &[SubalgebraRecord], orbits: &[Orbit]) -> Vec<OrbitReport> {
    let mut by_class: BTreeMap<(usize, String), Vec<usize>> = BTreeMap::new();
    for o in orbits {
        let r = &records[o.members[0]];
        let label = r.label.map_or("unlabeled".to_string(), |l| l.name().to_string());
        by_class.entry((r.dim, label)).or_default().push(o.members.len());
    }
    by_class
        .into_iter()
        .map(|((dim, label), mut sizes)| {
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            OrbitReport { dim, label, orbit_count: sizes.len(), orbit_sizes: sizes }
        })
        .collect()
}

/// Orbits of the group generated by `gens` on all elements of the algebra.
pub fn element_orbits(f: PrimeField, gens: &[Automorphism]) -> Vec<Vec<Octonion>> {
    let n = (f.p() as usize).pow(8);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![Octonion::from_index(f, start)];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in gens {
                let y = g.apply(&x);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    orbit.push(y);
                }
            }
        }
        out.push(orbit);
    }
    out
}

/// One-dimensional subspaces of `s`.
pub fn lines(s: &Subspace) -> Vec<Subspace> {
    let f = s.field();
    let mut out: Vec<Subspace> = s
        .elements()
        .into_iter()
        .filter(|x| !x.is_zero())
        .map(|x| Subspace::from_octonions(f, &[x]))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether the automorphisms in `autos` that stabilise `s` generate a group
/// acting transitively on ordered pairs of distinct lines of `s`.
pub fn two_transitive_on_lines(s: &Subspace, autos: &[Automorphism]) -> bool {
    let ls = lines(s);
    if ls.len() < 2 {
        return true;
    }
    let stab: Vec<&Automorphism> = autos.iter().filter(|g| &g.apply_subspace(s) == s).collect();
    let start = (ls[0].clone(), ls[1].clone());
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, b)) = queue.pop_front() {
        for g in &stab {
            let next = (g.apply_subspace(&a), g.apply_subspace(&b));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len() == ls.len() * (ls.len() - 1)
}
