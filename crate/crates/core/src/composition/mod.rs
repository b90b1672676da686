//! Split quaternions `F^{2x2}`, split octonions `H + Hw` with `w^2 = 1`, and
//! the constructions built on them.

mod doubling;
mod isotope;
mod octonion;
mod quaternion;
mod table;

pub use doubling::StructAlgebra;
pub use isotope::IsotopeAlgebra;
pub use octonion::{Octonion, BASIS_NAMES};
pub use quaternion::Quaternion;
pub use table::{Gf2Table, MultTable};
