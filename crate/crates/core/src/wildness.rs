//! Divergence certificate for absolute wildness.
//!
//! Given `ε` in `IE(i) \ IE(i+1)` of the free anticommutative algebra that
//! induces an automorphism `φ` of the metabelian quotient, and given that the
//! metabelian identities have no consequences of degree `≤ i + 1`, a nonzero
//! divergence of the tangent derivation `T(ε)` shows `φ` is absolutely wild.

use std::fmt;

use crate::anticomm::{BDerivation, BElement, BEndomorphism, Monomial, METABELIAN_IDEAL_MIN_DEGREE};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::level::Level;
use crate::metabelian::{invert_ia, AElement, AEndomorphism, InversionResult};
use crate::ncpoly::CyclicPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InconclusiveReason {
    ZeroDivergence,
    IdealDegreeCheckFailed,
    /// No exact inverse of the induced map was found up to this degree.
    AutomorphismUnverified(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    AbsolutelyWild,
    Inconclusive(InconclusiveReason),
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InconclusiveReason::ZeroDivergence => write!(f, "ZeroDivergence"),
            InconclusiveReason::IdealDegreeCheckFailed => write!(f, "IdealDegreeCheckFailed"),
            InconclusiveReason::AutomorphismUnverified(d) => write!(f, "AutomorphismUnverified({d})"),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::AbsolutelyWild => write!(f, "AbsolutelyWild"),
            Verdict::Inconclusive(r) => write!(f, "Inconclusive({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WildnessCertificate {
    pub verdict: Verdict,
    pub ie_level: Level,
    pub ideal_min_degree: usize,
    pub degree_check: bool,
    pub tangent: BDerivation,
    pub divergence_value: CyclicPoly<Monomial>,
    /// The induced map on the quotient.
    pub induced: AEndomorphism,
    /// `None` when the induced map is not IA, so no inversion was attempted.
    pub automorphism_evidence: Option<InversionResult>,
}

/// Runs the full pipeline on a lift `ε`; `max_degree` bounds both the
/// filtration search and the inversion of the induced map.
pub fn certify_absolutely_wild(eps: &BEndomorphism, max_degree: usize) -> Result<WildnessCertificate> {
    if eps.rank() < 2 {
        return Err(Error::RankTooSmall { rank: eps.rank(), min: 2 });
    }
    if max_degree < 4 {
        return Err(Error::DegreeTooSmall { found: max_degree, min: 4 });
    }
    if eps.is_identity() {
        return Err(Error::IdentityEndomorphism);
    }

    let induced = eps.quotient();
    let automorphism_evidence = match invert_ia(&induced, max_degree) {
        Ok(r) => Some(r),
        Err(Error::NotIA) => None,
        Err(e) => return Err(e),
    };
    let automorphism_ok = matches!(automorphism_evidence, Some(InversionResult::Exact(_)));

    let ie_level = eps.ie_level(max_degree);
    let degree_check = match ie_level {
        Level::Exactly(i) => i + 1 < METABELIAN_IDEAL_MIN_DEGREE,
        Level::AtLeast(_) => false,
    };

    let tangent = eps.tangent()?;
    let divergence_value = tangent.divergence();

    let verdict = if !automorphism_ok {
        Verdict::Inconclusive(InconclusiveReason::AutomorphismUnverified(max_degree))
    } else if !degree_check {
        Verdict::Inconclusive(InconclusiveReason::IdealDegreeCheckFailed)
    } else if divergence_value.is_zero() {
        Verdict::Inconclusive(InconclusiveReason::ZeroDivergence)
    } else {
        Verdict::AbsolutelyWild
    };

    Ok(WildnessCertificate {
        verdict,
        ie_level,
        ideal_min_degree: METABELIAN_IDEAL_MIN_DEGREE,
        degree_check,
        tangent,
        divergence_value,
        induced,
        automorphism_evidence,
    })
}

/// `σ = (ξ_1 + (ξ_3ξ_2)ξ_1, ξ_2, …, ξ_n)`.
pub fn builtin_sigma(field: Field, n: usize) -> Result<BEndomorphism> {
    if n < 3 {
        return Err(Error::RankTooSmall { rank: n, min: 3 });
    }
    let x = |i| BElement::generator(field, i, n);
    let mut corrections = vec![BElement::zero(field, n)?; n];
    corrections[0] = x(3)?.mul(&x(2)?).mul(&x(1)?);
    BEndomorphism::from_corrections(corrections)
}

/// `τ = (x_1 + (x_3x_2)x_1, x_2, …, x_n)`.
pub fn builtin_tau(field: Field, n: usize) -> Result<AEndomorphism> {
    if n < 3 {
        return Err(Error::RankTooSmall { rank: n, min: 3 });
    }
    let mut corrections = vec![AElement::zero(field, n)?; n];
    corrections[0] = AElement::left_normed(field, n, &[3, 2, 1])?;
    AEndomorphism::from_corrections(corrections)
}
