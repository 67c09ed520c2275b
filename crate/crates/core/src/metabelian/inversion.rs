use crate::error::{Error, Result};

use super::{AElement, AEndomorphism};

pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InversionResult {
    /// Two-sided inverse, verified by exact composition.
    Exact(AEndomorphism),
    /// Inverse modulo `A^(verified_degree + 1)` only.
    Truncated {
        partial: AEndomorphism,
        verified_degree: usize,
    },
}

impl InversionResult {
    pub fn is_exact(&self) -> bool {
        matches!(self, InversionResult::Exact(_))
    }

    pub fn endomorphism(&self) -> &AEndomorphism {
        match self {
            InversionResult::Exact(e) => e,
            InversionResult::Truncated { partial, .. } => partial,
        }
    }
}

/// Inverts an IA-endomorphism `x + g` by the fixed-point iteration
/// `h ← −g − (φ(h) − h)` truncated at total degree `max_degree`.
///
/// The candidate `x + h` is accepted as exact only if both composites with
/// `φ` are the identity on the nose.
pub fn invert_ia(phi: &AEndomorphism, max_degree: usize) -> Result<InversionResult> {
    if max_degree < 2 {
        return Err(Error::DegreeTooSmall {
            found: max_degree,
            min: 2,
        });
    }
    let g = phi.corrections();
    if !g.iter().all(AElement::in_square) {
        return Err(Error::NotIA);
    }
    let mut h: Vec<AElement> = g.iter().map(|c| c.neg().truncate(max_degree)).collect();
    for _ in 0..max_degree {
        let next = g
            .iter()
            .zip(&h)
            .map(|(gi, hi)| {
                let drift = phi.apply(hi)?.sub(hi);
                Ok(gi.add(&drift).neg().truncate(max_degree))
            })
            .collect::<Result<Vec<_>>>()?;
        if next == h {
            break;
        }
        h = next;
    }
    let psi = AEndomorphism::from_corrections(h)?;
    let left = phi.compose(&psi)?;
    let right = psi.compose(phi)?;
    if left.is_identity() && right.is_identity() {
        return Ok(InversionResult::Exact(psi));
    }
    let residual = left
        .corrections()
        .iter()
        .chain(right.corrections().iter())
        .filter_map(AElement::degree)
        .min()
        .expect("nonzero residual");
    Ok(InversionResult::Truncated {
        partial: psi,
        verified_degree: residual - 1,
    })
}
