//! The free anticommutative algebra `B` on `ξ_1..ξ_n`: regular monomials,
//! Fox derivatives into `U(B)`, derivations and endomorphisms.

mod derivation;
mod element;
mod endo;
mod monomial;

pub use derivation::BDerivation;
pub use element::{BElement, BFoxColumn};
pub use endo::{quotient_to_a, BEndomorphism};
pub use monomial::{enumerate_basis, Monomial, Shape};

/// Lowest degree of a nonzero element of the ideal generated by all
/// `(uv)(wq)`: each of the four factors has degree at least one.
pub const METABELIAN_IDEAL_MIN_DEGREE: usize = 4;
