use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ncpoly::{NCPoly, Word};

use super::monomial::{Monomial, Shape};

/// A finite linear combination of regular monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BElement {
    field: Field,
    rank: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Coordinates of the universal derivation `D(a) = Σ dξ_i u_i` in `U(B)`.
pub type BFoxColumn = Vec<NCPoly<Monomial>>;

impl BElement {
    pub fn zero(field: Field, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self::zero_unchecked(field, rank))
    }

    pub(crate) fn zero_unchecked(field: Field, rank: usize) -> Self {
        BElement {
            field,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `ξ_i`, 1-based.
    pub fn generator(field: Field, i: usize, rank: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        Self::monomial(field, Monomial::leaf(i as u32), rank)
    }

    pub fn monomial(field: Field, m: Monomial, rank: usize) -> Result<Self> {
        Self::term(m, field.one(), rank)
    }

    pub fn term(m: Monomial, c: Scalar, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if m.max_index() as usize > rank {
            return Err(Error::IndexOutOfRange {
                index: m.max_index() as usize,
                rank,
            });
        }
        let mut e = Self::zero_unchecked(c.field(), rank);
        e.add_term(m, c);
        Ok(e)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Panics on rank or field mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("rank/field mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|c| c * s)
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        BElement {
            field: self.field,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Bilinear extension of `u·u = 0`, `u·v = (u v)` for `u ≻ v`, `u·v = −(v u)` otherwise.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero_unchecked(self.field, self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                match u.cmp(v) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => out.add_term(Monomial::pair_unchecked(u, v), a * b),
                    std::cmp::Ordering::Less => out.add_term(Monomial::pair_unchecked(v, u), -&(a * b)),
                }
            }
        }
        Ok(out)
    }

    /// Panics on rank or field mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("rank/field mismatch")
    }

    /// Lowest monomial degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Highest monomial degree, `None` for zero.
    pub fn top_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn homogeneous(&self, d: usize) -> Self {
        self.filter(|m| m.degree() == d)
    }

    pub fn truncate(&self, d: usize) -> Self {
        self.filter(|m| m.degree() <= d)
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        BElement {
            field: self.field,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Fox derivatives `∂a/∂ξ_i` from `D(ξ_i) = dξ_i` and
    /// `D(uv) = D(u) R_v − D(v) R_u`.
    pub fn fox(&self) -> BFoxColumn {
        let mut out = vec![NCPoly::zero(self.field); self.rank];
        for (m, c) in &self.terms {
            monomial_fox(m, &Word::empty(), c, &mut out);
        }
        out
    }
}

/// Adds `c · D(m) · tail` into `out`.
fn monomial_fox(m: &Monomial, tail: &Word<Monomial>, c: &Scalar, out: &mut [NCPoly<Monomial>]) {
    match m.shape() {
        Shape::Leaf(i) => out[*i as usize - 1].add_term(tail.clone(), c.clone()),
        Shape::Pair(u, v) => {
            let mut tv = vec![v.clone()];
            tv.extend_from_slice(tail.letters());
            monomial_fox(u, &Word(tv), c, out);
            let mut tu = vec![u.clone()];
            tu.extend_from_slice(tail.letters());
            monomial_fox(v, &Word(tu), &-c, out);
        }
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_b_element(self))
    }
}
