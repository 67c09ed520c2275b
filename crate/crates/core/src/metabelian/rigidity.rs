//! Search for nontrivial IA-automorphisms in rank 2, where none should exist.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::sample;

use super::basis::{basis_compose, basis_keys, CanonicalSum};
use super::inversion::{invert_ia, InversionResult};
use super::{AElement, AEndomorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityEntry {
    pub endomorphism: AEndomorphism,
    pub exact: bool,
    /// `None` when the inverse was exact.
    pub verified_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub degree_bound: usize,
    pub samples: usize,
    pub seed: u64,
    pub inversion_degree: usize,
    pub control_exact: bool,
    pub exhaustive: Vec<RigidityEntry>,
    pub random: Vec<RigidityEntry>,
}

impl RigidityReport {
    /// Non-identity candidates that inverted exactly.
    pub fn counterexamples(&self) -> Vec<&RigidityEntry> {
        self.exhaustive
            .iter()
            .chain(&self.random)
            .filter(|e| e.exact)
            .collect()
    }
}

fn run(phi: AEndomorphism, inversion_degree: usize) -> Result<RigidityEntry> {
    let result = invert_ia(&phi, inversion_degree)?;
    Ok(RigidityEntry {
        exact: result.is_exact(),
        verified_degree: match &result {
            InversionResult::Exact(_) => None,
            InversionResult::Truncated { verified_degree, .. } => Some(*verified_degree),
        },
        endomorphism: phi,
    })
}

/// Runs the identity control, every single-monomial correction of degree
/// `2..=degree_bound` in either slot, and `samples` seeded random
/// IA-endomorphisms, inverting each up to `inversion_degree`.
pub fn rank2_rigidity_search(
    field: Field,
    degree_bound: usize,
    samples: usize,
    seed: u64,
    inversion_degree: usize,
) -> Result<RigidityReport> {
    let n = 2;
    let control = run(AEndomorphism::identity(field, n)?, inversion_degree)?;

    let mut exhaustive = Vec::new();
    for d in 2..=degree_bound {
        for key in basis_keys(n, d) {
            for slot in 0..n {
                let mut terms = std::collections::BTreeMap::new();
                terms.insert(key.clone(), field.one());
                let f = basis_compose(&CanonicalSum {
                    field,
                    linear: vec![field.zero(); n],
                    terms,
                })?;
                let mut corrections = vec![AElement::zero(field, n)?; n];
                corrections[slot] = f;
                exhaustive.push(run(AEndomorphism::from_corrections(corrections)?, inversion_degree)?);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = Vec::with_capacity(samples);
    while random.len() < samples {
        let phi = sample::ia_endomorphism(&mut rng, field, n, degree_bound, 3);
        if phi.is_identity() {
            continue;
        }
        random.push(run(phi, inversion_degree)?);
    }

    Ok(RigidityReport {
        degree_bound,
        samples,
        seed,
        inversion_degree,
        control_exact: control.exact,
        exhaustive,
        random,
    })
}
