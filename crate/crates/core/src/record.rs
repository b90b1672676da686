//! Per-subalgebra invariants and their JSON-lines form.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, OrbitLabel};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraRecord {
    pub space: Subspace,
    pub dim: usize,
    pub contains_one: bool,
    pub totally_singular: bool,
    pub radical_r_dim: usize,
    pub radical_q_dim: usize,
    pub associative: bool,
    pub commutative: bool,
    /// `None` when the classifier rejected the subalgebra.
    pub label: Option<OrbitLabel>,
    pub classification_error: Option<String>,
}

impl SubalgebraRecord {
    /// Computes every invariant of a closed subspace.
    pub fn analyze(space: Subspace) -> Self {
        debug_assert!(space.is_closed());
        let basis = space.basis();
        let associative = basis.iter().all(|x| {
            basis.iter().all(|y| basis.iter().all(|z| (*x * *y) * *z == *x * (*y * *z)))
        });
        let commutative = basis.iter().enumerate().all(|(i, x)| basis[i + 1..].iter().all(|y| *x * *y == *y * *x));
        let (r, q) = space.radicals();
        let contains_one = space.contains_one();
        let (label, classification_error) = match classify(&space) {
            Ok(l) => (Some(l), None),
            Err(e) => (None, Some(e.to_string())),
        };
        SubalgebraRecord {
            dim: space.dim(),
            contains_one,
            totally_singular: space.is_totally_singular(),
            radical_r_dim: r.dim(),
            radical_q_dim: q.dim(),
            associative,
            commutative,
            label,
            classification_error,
            space,
        }
    }

    pub fn to_json(&self) -> RecordJson {
        RecordJson {
            dim: self.dim,
            basis: self.space.rows().iter().map(|r| r.to_vec()).collect(),
            label: self.label.map(|l| l.name().to_string()),
            flags: Flags { assoc: self.associative, comm: self.commutative, unital: self.contains_one },
            r_dim: self.radical_r_dim,
            q_dim: self.radical_q_dim,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("record serialises")
    }
}

/// One line of the records file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordJson {
    pub dim: usize,
    pub basis: Vec<Vec<u8>>,
    pub label: Option<String>,
    pub flags: Flags,
    #[serde(rename = "R_dim")]
    pub r_dim: usize,
    #[serde(rename = "Q_dim")]
    pub q_dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    pub assoc: bool,
    pub comm: bool,
    pub unital: bool,
}

impl RecordJson {
    /// Rebuilds the subspace, checking that the stored basis is canonical.
    pub fn space(&self, field: PrimeField) -> Result<Subspace> {
        let rows = self
            .basis
            .iter()
            .map(|r| {
                <[u8; 8]>::try_from(r.as_slice()).map_err(|_| Error::Input("basis rows need 8 entries".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Subspace::span(field, rows.iter().copied());
        if s.rows() != rows.as_slice() {
            return Err(Error::Input("basis is not in reduced row-echelon form".into()));
        }
        Ok(s)
    }
}
