//! The free metabelian anticommutative algebra `A` of rank `n`.
//!
//! Elements live in the module form `y + Σ t_i u_i` of `Y ⊕ T`, which is a
//! faithful image of `A`; the left-normed monomial basis is derived on demand.

mod basis;
mod chein;
mod columns;
mod element;
mod endo;
mod inversion;
mod rigidity;

pub use basis::{basis_compose, basis_decompose, basis_keys, dimension, BasisKey, CanonicalSum};
pub use chein::{chein, chein_at, chein_inverse};
pub use columns::{reconstruct, validate_columns, AntisymmetricFamily};
pub use element::AElement;
pub use endo::AEndomorphism;
pub use inversion::{invert_ia, InversionResult, DEFAULT_MAX_DEGREE};
pub use rigidity::{rank2_rigidity_search, RigidityEntry, RigidityReport};
