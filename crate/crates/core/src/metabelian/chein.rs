//! Automorphisms that move a single generator: `δ = (x_1 + f, x_2, …, x_n)`.

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::{AElement, AEndomorphism};

/// `(x_1 + f, x_2, …, x_n)`, accepted iff `f ∈ A²` and `∂f/∂x_1 = 0`.
///
/// Such `f` lie in the ideal generated by the `x_i x_j` with `i, j > 1`, and the
/// inverse is `(x_1 − f, x_2, …, x_n)`.
pub fn chein(f: &AElement, n: usize) -> Result<AEndomorphism> {
    if f.rank() != n {
        return Err(Error::RankMismatch(n, f.rank()));
    }
    if !f.in_square() {
        return Err(Error::NotInASquared);
    }
    let d1 = &f.fox()[0];
    if !d1.is_zero() {
        return Err(Error::NotChein {
            witness: d1.clone(),
        });
    }
    let mut corrections = vec![AElement::zero(f.field(), n)?; n];
    corrections[0] = f.clone();
    AEndomorphism::from_corrections(corrections)
}

/// The inverse `(x_1 − f, x_2, …, x_n)` of an accepted [`chein`] automorphism.
pub fn chein_inverse(f: &AElement, n: usize) -> Result<AEndomorphism> {
    chein(&f.neg(), n)
}

/// The Chein automorphism moving `x_position`, obtained by conjugating the
/// position-1 form with the transposition `x_1 ↔ x_position`.
pub fn chein_at(position: usize, f: &AElement, n: usize) -> Result<AEndomorphism> {
    if position == 0 || position > n {
        return Err(Error::IndexOutOfRange { index: position, rank: n });
    }
    if position == 1 {
        return chein(f, n);
    }
    let field = f.field();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let target = if i == 0 {
                position - 1
            } else if i == position - 1 {
                0
            } else {
                i
            };
            (0..n)
                .map(|j| if j == target { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    let swap = AEndomorphism::linear(field, &rows)?;
    let moved = chein(&swap.apply(f)?, n).map_err(|e| match e {
        Error::NotChein { witness } => Error::NotChein {
            witness: swap.induced_substitution().apply(&witness).unwrap_or(witness),
        },
        other => other,
    })?;
    swap.compose(&moved)?.compose(&swap)
}
