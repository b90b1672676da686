//! Orbit labels and the decision tree that assigns them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Octonion;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::subspace::Subspace;

/// The orbit catalog of subalgebras of the split octonions.
#[allow(non_camel_case_types, clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum OrbitLabel {
    Zero,
    F,
    Fp,
    Fn,
    S,
    FplusFn,
    FnFp,
    FnFpbar,
    Q,
    E,
    D,
    T,
    FplusQ,
    mOcapOn,
    HeisNOcapOn,
    SplitQuat,
    QuatField,
    SplusQ,
    EplusQ,
    DplusQ,
    K,
    FplusHeis,
    NO,
    ON,
    Dim5,
    Dim6,
    Full,
}

impl OrbitLabel {
    pub const ALL: [OrbitLabel; 27] = [
        OrbitLabel::Zero,
        OrbitLabel::F,
        OrbitLabel::Fp,
        OrbitLabel::Fn,
        OrbitLabel::S,
        OrbitLabel::FplusFn,
        OrbitLabel::FnFp,
        OrbitLabel::FnFpbar,
        OrbitLabel::Q,
        OrbitLabel::E,
        OrbitLabel::D,
        OrbitLabel::T,
        OrbitLabel::FplusQ,
        OrbitLabel::mOcapOn,
        OrbitLabel::HeisNOcapOn,
        OrbitLabel::SplitQuat,
        OrbitLabel::QuatField,
        OrbitLabel::SplusQ,
        OrbitLabel::EplusQ,
        OrbitLabel::DplusQ,
        OrbitLabel::K,
        OrbitLabel::FplusHeis,
        OrbitLabel::NO,
        OrbitLabel::ON,
        OrbitLabel::Dim5,
        OrbitLabel::Dim6,
        OrbitLabel::Full,
    ];

    /// Caption used in DOT, JSON and on the command line.
    pub fn name(self) -> &'static str {
        use OrbitLabel::*;
        match self {
            Zero => "0",
            F => "F",
            Fp => "Fp",
            Fn => "Fn",
            S => "S",
            FplusFn => "F+Fn",
            FnFp => "Fn+Fp",
            FnFpbar => "Fn+Fpbar",
            Q => "Q",
            E => "E",
            D => "D",
            T => "T",
            FplusQ => "F+Q",
            mOcapOn => "mOcapOn",
            HeisNOcapOn => "nOcapOn",
            SplitQuat => "F2x2",
            QuatField => "H",
            SplusQ => "S+Q",
            EplusQ => "E+Q",
            DplusQ => "D+Q",
            K => "K",
            FplusHeis => "F+(nOcapOn)",
            NO => "nO",
            ON => "On",
            Dim5 => "nO+On",
            Dim6 => "Qperp",
            Full => "O",
        }
    }

    pub fn dim(self) -> usize {
        use OrbitLabel::*;
        match self {
            Zero => 0,
            F | Fp | Fn => 1,
            S | FplusFn | FnFp | FnFpbar | Q | E | D => 2,
            T | FplusQ | mOcapOn | HeisNOcapOn => 3,
            SplitQuat | QuatField | SplusQ | EplusQ | DplusQ | K | FplusHeis | NO | ON => 4,
            Dim5 => 5,
            Dim6 => 6,
            Full => 8,
        }
    }

    /// Whether subalgebras of this type exist over the given finite field.
    ///
    /// Finite fields are perfect and have no quaternion division algebras,
    /// so the inseparable and division types never occur.
    pub fn reachable(self, _field: PrimeField) -> bool {
        !matches!(self, OrbitLabel::D | OrbitLabel::DplusQ | OrbitLabel::K | OrbitLabel::QuatField)
    }

    pub fn reachable_labels(field: PrimeField) -> Vec<OrbitLabel> {
        OrbitLabel::ALL.iter().copied().filter(|l| l.reachable(field)).collect()
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<OrbitLabel> for &'static str {
    fn from(l: OrbitLabel) -> &'static str {
        l.name()
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OrbitLabel::ALL
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown label {s:?}")))
    }
}

impl TryFrom<String> for OrbitLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Shape of `X^2 - t X + n` over the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticType {
    DistinctRoots,
    DoubleRoot,
    Separable,
    Inseparable,
}

impl QuadraticType {
    pub fn of(field: PrimeField, trace: FieldElement, norm: FieldElement) -> Self {
        match field.quadratic_roots(trace.value(), norm.value()).len() {
            2 => QuadraticType::DistinctRoots,
            1 => QuadraticType::DoubleRoot,
            _ if field.is_char_two() && trace.is_zero() => QuadraticType::Inseparable,
            _ => QuadraticType::Separable,
        }
    }
}

/// The invariants the decision tree looks at. Only the entries relevant to
/// the subalgebra's branch are filled in by [`Features::of`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Features {
    pub dim: usize,
    pub contains_one: bool,
    pub generator_trace_nonzero: bool,
    pub zero_products: bool,
    pub left_identity: bool,
    pub right_identity: bool,
    pub in_one_perp: bool,
    pub left_annihilator: bool,
    pub r_dim: usize,
    pub q_dim: usize,
    pub quadratic: Option<QuadraticType>,
    pub has_singular: bool,
}

impl Features {
    pub fn of(a: &Subspace) -> Features {
        let f = a.field();
        let dim = a.dim();
        let mut feat = Features { dim, contains_one: a.contains_one(), ..Default::default() };
        if dim == 0 || dim >= 5 {
            return feat;
        }
        let basis = a.basis();
        if !feat.contains_one {
            match dim {
                1 => feat.generator_trace_nonzero = !basis[0].trace().is_zero(),
                2 => {
                    let elems = a.elements();
                    feat.zero_products = basis.iter().all(|x| basis.iter().all(|y| (*x * *y).is_zero()));
                    feat.left_identity = elems.iter().any(|e| basis.iter().all(|x| *e * *x == *x));
                    feat.right_identity = elems.iter().any(|e| basis.iter().all(|x| *x * *e == *x));
                }
                3 => feat.in_one_perp = basis.iter().all(|x| x.trace().is_zero()),
                4 => {
                    feat.left_annihilator = a
                        .elements()
                        .iter()
                        .any(|x| !x.is_zero() && basis.iter().all(|y| (*x * *y).is_zero()))
                }
                _ => unreachable!(),
            }
            return feat;
        }
        let (r, q) = a.radicals();
        feat.r_dim = r.dim();
        feat.q_dim = q.dim();
        let one = Octonion::one(f);
        match dim {
            2 => {
                let g = basis.iter().find(|x| x.as_scalar().is_none()).expect("2-dim unital has a non-scalar");
                feat.quadratic = Some(QuadraticType::of(f, g.trace(), g.norm()));
            }
            4 if feat.r_dim == 0 => {
                feat.has_singular = a.elements().iter().any(|x| !x.is_zero() && x.norm().is_zero());
            }
            4 if feat.r_dim == 2 => {
                let fr = r.sum(&Subspace::from_octonions(f, &[one]));
                let g = basis.iter().find(|x| !fr.contains(x)).expect("A is larger than F + R");
                feat.quadratic = Some(QuadraticType::of(f, g.trace(), g.norm()));
            }
            _ => {}
        }
        feat
    }
}

fn fail(dim: usize, reason: impl Into<String>) -> Error {
    Error::Classification { dim, reason: reason.into() }
}

/// The decision tree on precomputed invariants. May return labels that are
/// unreachable over finite fields; [`classify`] rejects those.
pub fn decide(ft: &Features) -> Result<OrbitLabel> {
    use OrbitLabel::*;
    let d = ft.dim;
    match d {
        0 => return Ok(Zero),
        8 => return Ok(Full),
        7 => return Err(fail(7, "no subalgebra of dimension 7 exists")),
        _ => {}
    }
    if !ft.contains_one {
        return match d {
            1 if ft.generator_trace_nonzero => Ok(Fp),
            1 => Ok(Fn),
            2 => {
                if ft.left_identity && ft.right_identity {
                    return Err(fail(2, "two-sided identity in a totally singular algebra"));
                }
                if ft.zero_products {
                    Ok(Q)
                } else if ft.left_identity {
                    Ok(FnFp)
                } else if ft.right_identity {
                    Ok(FnFpbar)
                } else {
                    Err(fail(2, "nonzero products without a one-sided identity"))
                }
            }
            3 if ft.in_one_perp => Ok(HeisNOcapOn),
            3 => Ok(mOcapOn),
            4 if ft.left_annihilator => Ok(NO),
            4 => Ok(ON),
            _ => Err(fail(d, "totally singular subalgebra of dimension above 4")),
        };
    }
    match d {
        1 => Ok(F),
        2 => match ft.quadratic {
            Some(QuadraticType::DistinctRoots) => Ok(S),
            Some(QuadraticType::DoubleRoot) => Ok(FplusFn),
            Some(QuadraticType::Separable) => Ok(E),
            Some(QuadraticType::Inseparable) => Ok(D),
            None => Err(fail(2, "missing minimal polynomial")),
        },
        3 if ft.r_dim == 1 => Ok(T),
        3 if ft.r_dim >= 2 => Ok(FplusQ),
        3 => Err(fail(3, format!("radical of dimension {}", ft.r_dim))),
        4 => match (ft.r_dim, ft.q_dim) {
            (0, _) if ft.has_singular => Ok(SplitQuat),
            (0, _) => Ok(QuatField),
            (_, 3) => Ok(FplusHeis),
            (2, _) => match ft.quadratic {
                Some(QuadraticType::DistinctRoots) => Ok(SplusQ),
                Some(QuadraticType::Separable) => Ok(EplusQ),
                Some(QuadraticType::Inseparable) => Ok(DplusQ),
                other => Err(fail(4, format!("quotient by the radical has type {other:?}"))),
            },
            (4, 2) => Ok(DplusQ),
            (4, 0) => Ok(K),
            (r, q) => Err(fail(4, format!("radicals of dimensions R={r}, Q={q}"))),
        },
        5 => Ok(Dim5),
        6 => Ok(Dim6),
        _ => unreachable!(),
    }
}

/// Orbit label of a subalgebra over a finite field.
pub fn classify(a: &Subspace) -> Result<OrbitLabel> {
    if !a.is_closed() {
        return Err(Error::NotClosed);
    }
    let label = decide(&Features::of(a))?;
    if !label.reachable(a.field()) {
        return Err(fail(a.dim(), format!("label {label} cannot occur over {}", a.field())));
    }
    Ok(label)
}

/// `(N(v), tr(v), v in F)`, a complete orbit invariant for non-central elements.
pub fn element_orbit_invariant(v: &Octonion) -> (FieldElement, FieldElement, bool) {
    (v.norm(), v.trace(), v.as_scalar().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{left_mul_space, right_mul_space};

    fn span(f: PrimeField, idx: &[usize]) -> Subspace {
        Subspace::from_octonions(f, &idx.iter().map(|&i| Octonion::basis(f, i)).collect::<Vec<_>>())
    }

    #[test]
    fn examples() {
        for f in [PrimeField::GF2, PrimeField::GF3] {
            let n0 = Octonion::basis(f, 1);
            let t = Subspace::from_octonions(f, &[Octonion::one(f), Octonion::basis(f, 0), n0]);
            assert_eq!(classify(&t), Ok(OrbitLabel::T));
            assert_eq!(classify(&span(f, &[1, 4, 5])), Ok(OrbitLabel::HeisNOcapOn));
            assert_eq!(classify(&left_mul_space(&n0)), Ok(OrbitLabel::NO));
            assert_eq!(classify(&right_mul_space(&n0)), Ok(OrbitLabel::ON));
            assert_eq!(classify(&span(f, &[1])), Ok(OrbitLabel::Fn));
            assert_eq!(classify(&span(f, &[0])), Ok(OrbitLabel::Fp));
        }
    }

    #[test]
    fn open_subspace_is_rejected() {
        let f = PrimeField::GF3;
        let w = Octonion::basis(f, 4) + Octonion::basis(f, 7);
        let s = Subspace::from_octonions(f, &[Octonion::one(f), w, Octonion::basis(f, 0)]);
        assert_eq!(classify(&s), Err(Error::NotClosed));
    }

    #[test]
    fn names_round_trip() {
        for l in OrbitLabel::ALL {
            assert_eq!(l.name().parse::<OrbitLabel>(), Ok(l));
            let json = serde_json::to_string(&l).unwrap();
            assert_eq!(serde_json::from_str::<OrbitLabel>(&json).unwrap(), l);
        }
        assert!("F+G".parse::<OrbitLabel>().is_err());
        assert_eq!(OrbitLabel::reachable_labels(PrimeField::GF2).len(), 23);
    }

    #[test]
    fn quadratic_types() {
        let f = PrimeField::GF2;
        assert_eq!(QuadraticType::of(f, f.one(), f.zero()), QuadraticType::DistinctRoots);
        assert_eq!(QuadraticType::of(f, f.zero(), f.one()), QuadraticType::DoubleRoot);
        assert_eq!(QuadraticType::of(f, f.one(), f.one()), QuadraticType::Separable);
        let g = PrimeField::GF3;
        // X^2 + 1 has no root mod 3.
        assert_eq!(QuadraticType::of(g, g.zero(), g.one()), QuadraticType::Separable);
    }

    #[test]
    fn orbit_invariants() {
        let f = PrimeField::GF5;
        assert_eq!(element_orbit_invariant(&Octonion::basis(f, 1)), (f.zero(), f.zero(), false));
        assert_eq!(element_orbit_invariant(&Octonion::basis(f, 0)), (f.zero(), f.one(), false));
        assert_eq!(element_orbit_invariant(&Octonion::one(f)), (f.one(), f.elem(2), true));
    }

    // The branches below have no finite-field instance; synthetic features exercise them.

    fn unital(dim: usize) -> Features {
        Features { dim, contains_one: true, ..Default::default() }
    }

    #[test]
    fn guard_inseparable_quadratic() {
        let ft = Features { quadratic: Some(QuadraticType::Inseparable), ..unital(2) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::D));
        let ft = Features { r_dim: 2, q_dim: 2, quadratic: Some(QuadraticType::Inseparable), ..unital(4) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::DplusQ));
        let ft = Features { r_dim: 4, q_dim: 2, ..unital(4) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::DplusQ));
    }

    #[test]
    fn guard_purely_inseparable_field() {
        let ft = Features { r_dim: 4, q_dim: 0, ..unital(4) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::K));
    }

    #[test]
    fn guard_division_quaternions() {
        let ft = Features { r_dim: 0, has_singular: false, ..unital(4) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::QuatField));
        let ft = Features { r_dim: 0, has_singular: true, ..unital(4) };
        assert_eq!(decide(&ft), Ok(OrbitLabel::SplitQuat));
    }

    #[test]
    fn guard_impossible_shapes() {
        assert!(matches!(decide(&Features { dim: 7, ..Default::default() }), Err(Error::Classification { dim: 7, .. })));
        let ft = Features { dim: 2, left_identity: true, right_identity: true, ..Default::default() };
        assert!(decide(&ft).is_err());
        let ft = Features { dim: 2, ..Default::default() };
        assert!(decide(&ft).is_err());
        assert!(decide(&Features { dim: 5, ..Default::default() }).is_err());
        assert!(decide(&Features { r_dim: 3, q_dim: 1, ..unital(4) }).is_err());
        assert!(decide(&Features { r_dim: 2, quadratic: Some(QuadraticType::DoubleRoot), ..unital(4) }).is_err());
        assert!(decide(&Features { r_dim: 0, ..unital(3) }).is_err());
        assert!(decide(&unital(2)).is_err());
    }

    #[test]
    fn unreachable_labels_never_leave_classify() {
        for l in [OrbitLabel::D, OrbitLabel::DplusQ, OrbitLabel::K, OrbitLabel::QuatField] {
            assert!(!l.reachable(PrimeField::GF2));
        }
    }
}
