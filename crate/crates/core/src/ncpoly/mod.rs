//! Noncommutative polynomials over an ordered alphabet, linear substitutions,
//! matrices over the free associative algebra and its cyclic quotient.

mod cyclic;
mod matrix;
mod word;

use std::collections::BTreeMap;
use std::fmt;

pub use cyclic::CyclicPoly;
pub use matrix::{LinearSubstitution, MatU};
pub use word::{Letter, Word};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A polynomial in the free associative algebra with identity over `field`.
///
/// Canonical sparse form: no stored zero coefficients, so structural equality
/// is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly<L> {
    field: Field,
    terms: BTreeMap<Word<L>, Scalar>,
}

impl<L: Letter> NCPoly<L> {
    pub fn zero(field: Field) -> Self {
        NCPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(field: Field, l: L) -> Self {
        Self::term(Word::letter(l), field.one())
    }

    pub fn term(word: Word<L>, c: Scalar) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(word, c);
        p
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

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word<L>) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficient of the empty word.
    pub fn augmentation(&self) -> Scalar {
        self.coefficient(&Word::empty())
    }

    /// Length of the longest word, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// Length of the shortest word, `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    pub fn add_term(&mut self, word: Word<L>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.field, other.field, "field mismatch");
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.field);
        }
        self.map_coefficients(|c| c * s)
    }

    fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Product by word concatenation. Panics on a field mismatch; see
    /// [`NCPoly::try_mul`] for the checked form.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("field mismatch")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = Self::zero(self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single letter.
    pub fn left_mul_letter(&self, l: &L) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut v = Vec::with_capacity(w.len() + 1);
                    v.push(l.clone());
                    v.extend_from_slice(w.letters());
                    (Word(v), c.clone())
                })
                .collect(),
        }
    }

    /// Right multiplication by a single letter.
    pub fn right_mul_letter(&self, l: &L) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut v = w.0.clone();
                    v.push(l.clone());
                    (Word(v), c.clone())
                })
                .collect(),
        }
    }

    /// Keeps only words of length at most `max_len`.
    pub fn truncate(&self, max_len: usize) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only words of length exactly `len`.
    pub fn homogeneous_part(&self, len: usize) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Image in `U/[U,U]`.
    pub fn cyclic_project(&self) -> CyclicPoly<L> {
        CyclicPoly::from_poly(self)
    }
}

impl NCPoly<u32> {
    /// `z_i`.
    pub fn z(field: Field, i: u32) -> Self {
        Self::letter(field, i)
    }

    /// Splits `r = Σ_j z_j w_j` by first letter, returning `w_1..w_n`.
    pub fn left_decompose(&self, n: usize) -> Result<Vec<NCPoly<u32>>> {
        if !self.augmentation().is_zero() {
            return Err(Error::NotInAugmentationIdeal { index: 0 });
        }
        let mut out = vec![NCPoly::zero(self.field); n];
        for (w, c) in &self.terms {
            let first = w.0[0] as usize;
            if first == 0 || first > n {
                return Err(Error::IndexOutOfRange { index: first, rank: n });
            }
            out[first - 1].add_term(Word(w.0[1..].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// `Σ_j z_j w_j`.
    pub fn left_compose(field: Field, parts: &[NCPoly<u32>]) -> Self {
        let mut out = NCPoly::zero(field);
        for (j, w) in parts.iter().enumerate() {
            out.add_assign(&w.left_mul_letter(&(j as u32 + 1)));
        }
        out
    }

    /// Largest letter index occurring.
    pub fn max_letter(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|w| w.0.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn apply_linear_substitution(&self, s: &LinearSubstitution) -> Result<Self> {
        s.apply(self)
    }
}

pub(crate) fn write_signed_terms<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Scalar, T)>,
    sep_space: bool,
) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, false) => {}
            (true, true) => write!(f, "{}", if sep_space { "- " } else { "-" })?,
            (false, false) => write!(f, " + ")?,
            (false, true) => write!(f, " - ")?,
        }
        if !abs.is_one() {
            write!(f, "{abs}*")?;
        }
        write!(f, "{body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<L: Letter> fmt::Display for NCPoly<L> {
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
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{w}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
