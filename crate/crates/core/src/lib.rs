//! Exact symbolic kernel for free metabelian anticommutative algebras and
//! the free anticommutative algebras that cover them.
//!
//! * [`ncpoly`]: noncommutative polynomials, necklaces and matrices over them.
//! * [`metabelian`]: elements, Fox derivatives, Jacobians, inversion and Chein maps.
//! * [`anticomm`]: the free anticommutative algebra, derivations and divergence.
//! * [`wildness`]: the divergence certificate for absolute wildness.
//! * [`textio`]: parsing and printing.

pub mod anticomm;
mod error;
mod field;
mod level;
pub mod metabelian;
pub mod ncpoly;
pub mod sample;
pub mod textio;
pub mod wildness;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use level::Level;
