use std::collections::BTreeMap;
use std::fmt;

use super::{Letter, NCPoly, Word};
use crate::field::{Field, Scalar};

/// An element of `U/[U,U]`: coefficients on necklaces, each keyed by its
/// lexicographically least rotation. The empty word is its own class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPoly<L> {
    field: Field,
    terms: BTreeMap<Word<L>, Scalar>,
}

impl<L: Letter> CyclicPoly<L> {
    pub fn zero(field: Field) -> Self {
        CyclicPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: &NCPoly<L>) -> Self {
        let mut out = Self::zero(p.field());
        for (w, c) in p.terms() {
            out.add_term(w.min_rotation(), c.clone());
        }
        out
    }

    fn add_term(&mut self, necklace: Word<L>, c: Scalar) {
        let entry = self
            .terms
            .entry(necklace)
            .or_insert_with(|| self.field.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<L>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word<L>) -> Scalar {
        self.terms
            .get(&w.min_rotation())
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.field);
        }
        CyclicPoly {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CyclicPoly {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl<L: Letter> fmt::Display for CyclicPoly<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "[{w}]")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
