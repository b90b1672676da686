//! Exact arithmetic in the split octonions over small prime fields, with
//! exhaustive enumeration of subalgebras and their classification up to
//! automorphism.
//!
//! ```
//! use split_octonion::{Octonion, PrimeField};
//!
//! let f = PrimeField::new(3).unwrap();
//! let x = Octonion::new(f, [1, 2, 0, 1, 0, 1, 1, 0]);
//! let y = Octonion::new(f, [0, 1, 1, 2, 1, 0, 0, 2]);
//! assert_eq!((x * y).norm(), x.norm() * y.norm());
//! ```

pub mod automorphism;
pub mod classify;
pub mod composition;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod lattice;
pub mod linalg;
pub mod record;
pub mod subspace;
pub mod verify;

pub use automorphism::{Automorphism, GroupClosure};
pub use classify::{classify, OrbitLabel};
pub use composition::{IsotopeAlgebra, MultTable, Octonion, Quaternion, StructAlgebra};
pub use constructions::{rep, NamedElements};
pub use enumerate::{enumerate_subalgebras, EnumerationOptions};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use lattice::{build_lattice, LatticeGraph};
pub use linalg::Matrix;
pub use record::SubalgebraRecord;
pub use subspace::Subspace;
