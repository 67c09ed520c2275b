use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::level::Level;
use crate::ncpoly::{LinearSubstitution, MatU, NCPoly};

use super::basis::basis_decompose;
use super::AElement;

/// The endomorphism `x_i ↦ f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AEndomorphism {
    field: Field,
    images: Vec<AElement>,
}

impl AEndomorphism {
    pub fn new(images: Vec<AElement>) -> Result<Self> {
        let n = images.len();
        let Some(field) = images.first().map(AElement::field) else {
            return Err(Error::ZeroRank);
        };
        for f in &images {
            if f.rank() != n {
                return Err(Error::RankMismatch(n, f.rank()));
            }
            if f.field() != field {
                return Err(Error::FieldMismatch(field, f.field()));
            }
        }
        Ok(AEndomorphism { field, images })
    }

    pub fn identity(field: Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(AEndomorphism {
            field,
            images: (1..=n)
                .map(|i| AElement::generator(field, i, n))
                .collect::<Result<_>>()?,
        })
    }

    /// The linear endomorphism `x_i ↦ Σ_j rows[i][j] x_j`.
    pub fn linear(field: Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let n = rows.len();
        let images = rows
            .iter()
            .map(|row| {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
                let mut acc = AElement::zero(field, n)?;
                for (j, c) in row.iter().enumerate() {
                    acc = acc.add(&AElement::generator(field, j + 1, n)?.scale(c));
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        AEndomorphism::new(images)
    }

    /// `x_i ↦ x_i + corrections[i]`.
    pub fn from_corrections(corrections: Vec<AElement>) -> Result<Self> {
        let n = corrections.len();
        let images = corrections
            .into_iter()
            .enumerate()
            .map(|(i, c)| AElement::generator(c.field(), i + 1, n)?.try_add(&c))
            .collect::<Result<_>>()?;
        AEndomorphism::new(images)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[AElement] {
        &self.images
    }

    /// `f_i − x_i` for each `i`.
    pub fn corrections(&self) -> Vec<AElement> {
        let n = self.rank();
        self.images
            .iter()
            .enumerate()
            .map(|(i, f)| f.sub(&AElement::generator(self.field, i + 1, n).unwrap()))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.corrections().iter().all(AElement::is_zero)
    }

    /// True when the induced map on `A/A²` is the identity.
    pub fn is_ia(&self) -> bool {
        self.corrections().iter().all(AElement::in_square)
    }

    fn check(&self, a: &AElement) -> Result<()> {
        if a.rank() != self.rank() {
            return Err(Error::RankMismatch(self.rank(), a.rank()));
        }
        if a.field() != self.field {
            return Err(Error::FieldMismatch(self.field, a.field()));
        }
        Ok(())
    }

    /// `φ(a)`, evaluating the basis expansion of `a` with the algebra product.
    pub fn apply(&self, a: &AElement) -> Result<AElement> {
        self.check(a)?;
        let n = self.rank();
        let mut out = AElement::zero_unchecked(self.field, n);
        for (c, f) in a.linear().iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&f.scale(c));
            }
        }
        let sum = basis_decompose(a);
        // Group the tails of each (i, j) into one polynomial and evaluate it
        // along its prefix trie: P·(k w) = (P·f_k)·w.
        let mut by_pair: std::collections::BTreeMap<(u32, u32), NCPoly<u32>> = Default::default();
        for (key, c) in &sum.terms {
            by_pair
                .entry((key.i, key.j))
                .or_insert_with(|| NCPoly::zero(self.field))
                .add_term(key.tail.clone(), c.clone());
        }
        for ((i, j), tails) in by_pair {
            let head = self.images[i as usize - 1].mul(&self.images[j as usize - 1]);
            out = out.add(&self.eval_tails(&head, &tails));
        }
        Ok(out)
    }

    fn eval_tails(&self, head: &AElement, tails: &NCPoly<u32>) -> AElement {
        let n = self.rank();
        let constant = tails.augmentation();
        let mut out = head.scale(&constant);
        if head.is_zero() {
            return out;
        }
        let mut rest = tails.clone();
        rest.add_term(crate::ncpoly::Word::empty(), -&constant);
        if rest.is_zero() {
            return out;
        }
        let parts = rest.left_decompose(n).expect("constant term removed");
        for (k, part) in parts.iter().enumerate() {
            if !part.is_zero() {
                let next = head.mul(&self.images[k]);
                out = out.add(&self.eval_tails(&next, part));
            }
        }
        out
    }

    /// Fox columns of `φ(g)` via `∂(φ(g)) = Σ_i ∂(f_i) (∂g/∂x_i)^φ̃`.
    pub fn chain_rule_columns(&self, g: &AElement) -> Result<Vec<NCPoly<u32>>> {
        self.check(g)?;
        let s = self.induced_substitution();
        let mut out = vec![NCPoly::zero(self.field); self.rank()];
        for (f, u) in self.images.iter().zip(g.fox()) {
            if u.is_zero() {
                continue;
            }
            let twisted = s.apply(&u)?;
            for (acc, df) in out.iter_mut().zip(f.fox()) {
                acc.add_assign(&df.mul(&twisted));
            }
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AEndomorphism) -> Result<AEndomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let images = other
            .images
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<_>>()?;
        Ok(AEndomorphism {
            field: self.field,
            images,
        })
    }

    /// `J(φ) = [∂f_j/∂x_i]`; column `j` is the Fox column of `f_j`.
    pub fn jacobian(&self) -> MatU {
        let cols: Vec<Vec<NCPoly<u32>>> = self.images.iter().map(AElement::fox).collect();
        MatU::from_columns(self.field, &cols).expect("square by construction")
    }

    /// The induced endomorphism of `U`: `z_i ↦ R_{f̃_i}`.
    pub fn induced_substitution(&self) -> LinearSubstitution {
        LinearSubstitution::new(
            self.field,
            self.images.iter().map(|f| f.linear().to_vec()).collect(),
        )
        .expect("square by construction")
    }

    /// Largest `k ≤ bound` with every `f_i − x_i ∈ A^(k+1)`.
    pub fn ia_level(&self, bound: usize) -> Level {
        let m = self.corrections().iter().filter_map(AElement::degree).min();
        Level::from_min_correction_degree(m, bound)
    }

    /// Drops all components of total degree above `d` from every image.
    pub fn truncate(&self, d: usize) -> AEndomorphism {
        AEndomorphism {
            field: self.field,
            images: self.images.iter().map(|f| f.truncate(d)).collect(),
        }
    }
}

impl fmt::Display for AEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_a_map(self))
    }
}
