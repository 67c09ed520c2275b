use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::level::Level;
use crate::metabelian::{AElement, AEndomorphism};

use super::derivation::BDerivation;
use super::element::BElement;
use super::monomial::{Monomial, Shape};

/// The endomorphism `ξ_i ↦ f_i` of the free anticommutative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BEndomorphism {
    field: Field,
    images: Vec<BElement>,
}

impl BEndomorphism {
    pub fn new(images: Vec<BElement>) -> Result<Self> {
        let n = images.len();
        let Some(field) = images.first().map(BElement::field) else {
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
        Ok(BEndomorphism { field, images })
    }

    pub fn identity(field: Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        BEndomorphism::new((1..=n).map(|i| BElement::generator(field, i, n)).collect::<Result<_>>()?)
    }

    /// `ξ_i ↦ ξ_i + corrections[i]`.
    pub fn from_corrections(corrections: Vec<BElement>) -> Result<Self> {
        let n = corrections.len();
        let images = corrections
            .into_iter()
            .enumerate()
            .map(|(i, c)| BElement::generator(c.field(), i + 1, n)?.try_add(&c))
            .collect::<Result<_>>()?;
        BEndomorphism::new(images)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[BElement] {
        &self.images
    }

    pub fn corrections(&self) -> Vec<BElement> {
        let n = self.rank();
        self.images
            .iter()
            .enumerate()
            .map(|(i, f)| f.sub(&BElement::generator(self.field, i + 1, n).unwrap()))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.corrections().iter().all(BElement::is_zero)
    }

    fn apply_monomial(&self, m: &Monomial, memo: &mut HashMap<Monomial, BElement>) -> BElement {
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let out = match m.shape() {
            Shape::Leaf(i) => self.images[*i as usize - 1].clone(),
            Shape::Pair(u, v) => {
                let a = self.apply_monomial(u, memo);
                let b = self.apply_monomial(v, memo);
                a.mul(&b)
            }
        };
        memo.insert(m.clone(), out.clone());
        out
    }

    pub fn apply(&self, a: &BElement) -> Result<BElement> {
        if a.rank() != self.rank() {
            return Err(Error::RankMismatch(self.rank(), a.rank()));
        }
        let mut memo = HashMap::new();
        let mut out = BElement::zero_unchecked(self.field, self.rank());
        for (m, c) in a.terms() {
            out = out.add(&self.apply_monomial(m, &mut memo).scale(c));
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BEndomorphism) -> Result<BEndomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        BEndomorphism::new(other.images.iter().map(|g| self.apply(g)).collect::<Result<_>>()?)
    }

    /// Largest `i ≤ bound` with every `ε(ξ_j) − ξ_j ∈ B^(i+1)`.
    pub fn ie_level(&self, bound: usize) -> Level {
        let m = self.corrections().iter().filter_map(BElement::degree).min();
        Level::from_min_correction_degree(m, bound)
    }

    /// The lowest-degree homogeneous corrections, as a derivation.
    pub fn tangent(&self) -> Result<BDerivation> {
        let corrections = self.corrections();
        let m = corrections
            .iter()
            .filter_map(BElement::degree)
            .min()
            .ok_or(Error::IdentityEndomorphism)?;
        BDerivation::new(corrections.iter().map(|c| c.homogeneous(m)).collect())
    }

    /// The induced endomorphism of the metabelian quotient.
    pub fn quotient(&self) -> AEndomorphism {
        AEndomorphism::new(self.images.iter().map(quotient_to_a).collect())
            .expect("ranks agree by construction")
    }
}

fn quotient_monomial(m: &Monomial, n: usize, field: Field, memo: &mut HashMap<Monomial, AElement>) -> AElement {
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let out = match m.shape() {
        Shape::Leaf(i) => AElement::generator(field, *i as usize, n).expect("in range"),
        Shape::Pair(u, v) => {
            let a = quotient_monomial(u, n, field, memo);
            let b = quotient_monomial(v, n, field, memo);
            a.mul(&b)
        }
    };
    memo.insert(m.clone(), out.clone());
    out
}

/// Image in the metabelian quotient, `ξ_i ↦ x_i`.
pub fn quotient_to_a(b: &BElement) -> AElement {
    let n = b.rank();
    let mut memo = HashMap::new();
    let mut out = AElement::zero_unchecked(b.field(), n);
    for (m, c) in b.terms() {
        out = out.add(&quotient_monomial(m, n, b.field(), &mut memo).scale(c));
    }
    out
}

impl fmt::Display for BEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_b_map(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn xi(i: usize, n: usize) -> BElement {
        BElement::generator(Q, i, n).unwrap()
    }

    fn sigma(n: usize) -> BEndomorphism {
        let mut c = vec![BElement::zero(Q, n).unwrap(); n];
        c[0] = xi(3, n).mul(&xi(2, n)).mul(&xi(1, n));
        BEndomorphism::from_corrections(c).unwrap()
    }

    fn lift_elementary() -> BEndomorphism {
        let mut c = vec![BElement::zero(Q, 3).unwrap(); 3];
        c[0] = xi(3, 3).mul(&xi(2, 3));
        BEndomorphism::from_corrections(c).unwrap()
    }

    #[test]
    fn ie_levels() {
        assert_eq!(BEndomorphism::identity(Q, 3).unwrap().ie_level(7), Level::AtLeast(7));
        assert_eq!(sigma(3).ie_level(10), Level::Exactly(2));
        assert_eq!(lift_elementary().ie_level(10), Level::Exactly(1));
    }

    #[test]
    fn tangents() {
        let t = sigma(3).tangent().unwrap();
        assert_eq!(t, BDerivation::single(xi(3, 3).mul(&xi(2, 3)).mul(&xi(1, 3)), 1).unwrap());
        let t = lift_elementary().tangent().unwrap();
        assert_eq!(t, BDerivation::single(xi(3, 3).mul(&xi(2, 3)), 1).unwrap());
        assert_eq!(
            BEndomorphism::identity(Q, 3).unwrap().tangent(),
            Err(Error::IdentityEndomorphism)
        );
    }

    #[test]
    fn tangent_takes_lowest_degree_only() {
        let mut c = vec![BElement::zero(Q, 3).unwrap(); 3];
        let cubic = xi(3, 3).mul(&xi(2, 3)).mul(&xi(1, 3));
        c[0] = cubic.clone();
        c[1] = xi(3, 3).mul(&xi(1, 3)).add(&cubic);
        let eps = BEndomorphism::from_corrections(c).unwrap();
        let t = eps.tangent().unwrap();
        assert_eq!(t.homogeneous_degree(), Some(1));
        assert!(t.components()[0].is_zero());
    }

    #[test]
    fn quotient_examples() {
        let cubic = xi(3, 3).mul(&xi(2, 3)).mul(&xi(1, 3));
        assert_eq!(quotient_to_a(&cubic), AElement::left_normed(Q, 3, &[3, 2, 1]).unwrap());
        let killed = xi(3, 3).mul(&xi(2, 3)).mul(&xi(2, 3).mul(&xi(1, 3)));
        assert!(!killed.is_zero());
        assert!(quotient_to_a(&killed).is_zero());

        let tau = sigma(3).quotient();
        assert!(tau.is_ia());
        assert_eq!(tau.images()[0], AElement::generator(Q, 1, 3).unwrap().add(&AElement::left_normed(Q, 3, &[3, 2, 1]).unwrap()));
    }

    #[test]
    fn compose_is_homomorphic() {
        let s = sigma(3);
        let a = xi(3, 3).mul(&xi(1, 3));
        let b = xi(2, 3).mul(&xi(1, 3)).mul(&xi(1, 3));
        assert_eq!(s.apply(&a.mul(&b)).unwrap(), s.apply(&a).unwrap().mul(&s.apply(&b).unwrap()));
        let ss = s.compose(&s).unwrap();
        assert_eq!(ss.apply(&a).unwrap(), s.apply(&s.apply(&a).unwrap()).unwrap());
    }
}
