use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ncpoly::{CyclicPoly, NCPoly};

use super::element::BElement;
use super::monomial::{Monomial, Shape};

/// The derivation `D_F = f_1∂_1 + … + f_n∂_n` with `D(ξ_i) = f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BDerivation {
    field: Field,
    components: Vec<BElement>,
}

impl BDerivation {
    pub fn new(components: Vec<BElement>) -> Result<Self> {
        let n = components.len();
        let Some(field) = components.first().map(BElement::field) else {
            return Err(Error::ZeroRank);
        };
        for f in &components {
            if f.rank() != n {
                return Err(Error::RankMismatch(n, f.rank()));
            }
            if f.field() != field {
                return Err(Error::FieldMismatch(field, f.field()));
            }
        }
        Ok(BDerivation { field, components })
    }

    pub fn zero(field: Field, n: usize) -> Result<Self> {
        BDerivation::new(vec![BElement::zero(field, n)?; n])
    }

    /// The single-slot derivation `f ∂_j` (1-based).
    pub fn single(f: BElement, j: usize) -> Result<Self> {
        let n = f.rank();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, rank: n });
        }
        let mut comps = vec![BElement::zero(f.field(), n)?; n];
        comps[j - 1] = f;
        BDerivation::new(comps)
    }

    /// The matrix unit `e_ij = ξ_i ∂_j`.
    pub fn matrix_unit(field: Field, n: usize, i: usize, j: usize) -> Result<Self> {
        Self::single(BElement::generator(field, i, n)?, j)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[BElement] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(BElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        BDerivation {
            field: self.field,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &crate::field::Scalar) -> Self {
        BDerivation {
            field: self.field,
            components: self.components.iter().map(|a| a.scale(s)).collect(),
        }
    }

    fn apply_monomial(&self, m: &Monomial, memo: &mut BTreeMap<Monomial, BElement>) -> BElement {
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let n = self.rank();
        let out = match m.shape() {
            Shape::Leaf(i) => self.components[*i as usize - 1].clone(),
            Shape::Pair(u, v) => {
                let du = self.apply_monomial(u, memo);
                let dv = self.apply_monomial(v, memo);
                let bu = BElement::monomial(self.field, u.clone(), n).expect("in range");
                let bv = BElement::monomial(self.field, v.clone(), n).expect("in range");
                du.mul(&bv).add(&bu.mul(&dv))
            }
        };
        memo.insert(m.clone(), out.clone());
        out
    }

    /// Leibniz extension: `D(uv) = D(u)v + uD(v)`.
    pub fn apply(&self, a: &BElement) -> Result<BElement> {
        if a.rank() != self.rank() {
            return Err(Error::RankMismatch(self.rank(), a.rank()));
        }
        if a.field() != self.field {
            return Err(Error::FieldMismatch(self.field, a.field()));
        }
        let mut memo = BTreeMap::new();
        let mut out = BElement::zero_unchecked(self.field, self.rank());
        for (m, c) in a.terms() {
            out = out.add(&self.apply_monomial(m, &mut memo).scale(c));
        }
        Ok(out)
    }

    /// `[D1, D2](ξ_i) = D1(D2(ξ_i)) − D2(D1(ξ_i))`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| Ok(self.apply(g)?.sub(&other.apply(f)?)))
            .collect::<Result<_>>()?;
        BDerivation::new(components)
    }

    /// Homogeneous pieces keyed by derivation degree (component degree − 1).
    pub fn graded_components(&self) -> BTreeMap<usize, BDerivation> {
        let mut degrees: Vec<usize> = self
            .components
            .iter()
            .flat_map(|f| f.terms().map(|(m, _)| m.degree()).collect::<Vec<_>>())
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|d| {
                (
                    d - 1,
                    BDerivation {
                        field: self.field,
                        components: self.components.iter().map(|f| f.homogeneous(d)).collect(),
                    },
                )
            })
            .collect()
    }

    /// The degree `i` if every `f_j ∈ B_{i+1}`; `None` if mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let g = self.graded_components();
        if g.len() == 1 {
            g.keys().next().copied()
        } else {
            None
        }
    }

    /// `J(D) = [∂f_j/∂ξ_i]`, as a list of rows.
    pub fn jacobian(&self) -> Vec<Vec<NCPoly<Monomial>>> {
        let cols: Vec<_> = self.components.iter().map(BElement::fox).collect();
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn trace(&self) -> NCPoly<Monomial> {
        let mut t = NCPoly::zero(self.field);
        for (i, f) in self.components.iter().enumerate() {
            t.add_assign(&f.fox()[i]);
        }
        t
    }

    /// Image of the Jacobian trace in `U(B)/[U(B),U(B)]`.
    pub fn divergence(&self) -> CyclicPoly<Monomial> {
        self.trace().cyclic_project()
    }
}

impl fmt::Display for BDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_derivation(self))
    }
}
