use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ncpoly::{NCPoly, Word};

use super::columns::validate_columns;

/// An element `y + Σ t_i (α_i + r_i)` of the free metabelian anticommutative
/// algebra, stored in its faithful module form.
///
/// `linear` holds the coefficients `α` of `x_1..x_n`; `columns` holds the
/// augmentation-free parts `r_i ∈ U`. The Fox derivatives are `α_i + r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AElement {
    field: Field,
    linear: Vec<Scalar>,
    columns: Vec<NCPoly<u32>>,
}

/// `Σ_i u_i z_{k}` scaled by `alpha_k`, i.e. `u · λ` for a linear form λ.
fn times_linear(u: &NCPoly<u32>, alpha: &[Scalar]) -> NCPoly<u32> {
    let mut out = NCPoly::zero(u.field());
    if u.is_zero() {
        return out;
    }
    for (k, c) in alpha.iter().enumerate() {
        if !c.is_zero() {
            out.add_assign(&u.right_mul_letter(&(k as u32 + 1)).scale(c));
        }
    }
    out
}

impl AElement {
    pub fn zero(field: Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self::zero_unchecked(field, n))
    }

    pub(crate) fn zero_unchecked(field: Field, n: usize) -> Self {
        AElement {
            field,
            linear: vec![field.zero(); n],
            columns: vec![NCPoly::zero(field); n],
        }
    }

    /// `x_i`, 1-based.
    pub fn generator(field: Field, i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut a = Self::zero_unchecked(field, n);
        a.linear[i - 1] = field.one();
        Ok(a)
    }

    /// Builds an element from linear coefficients and columns, checking that
    /// the columns come from an element of `A²`.
    pub fn from_parts(field: Field, linear: Vec<Scalar>, columns: Vec<NCPoly<u32>>) -> Result<Self> {
        let n = linear.len();
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if columns.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: columns.len(),
            });
        }
        if let Some(c) = linear.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, c.field()));
        }
        if let Some(p) = columns.iter().find(|p| p.field() != field) {
            return Err(Error::FieldMismatch(field, p.field()));
        }
        validate_columns(&columns, n)?;
        Ok(AElement {
            field,
            linear,
            columns,
        })
    }

    pub(crate) fn from_parts_unchecked(field: Field, linear: Vec<Scalar>, columns: Vec<NCPoly<u32>>) -> Self {
        debug_assert_eq!(linear.len(), columns.len());
        AElement {
            field,
            linear,
            columns,
        }
    }

    /// The left-normed product `(((x_{i1} x_{i2}) x_{i3}) ⋯) x_{ik}` built with
    /// the algebra multiplication.
    pub fn left_normed(field: Field, n: usize, indices: &[usize]) -> Result<Self> {
        let (first, rest) = indices.split_first().ok_or(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        })?;
        let mut acc = Self::generator(field, *first, n)?;
        for &k in rest {
            acc = acc.mul(&Self::generator(field, k, n)?);
        }
        Ok(acc)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[Scalar] {
        &self.linear
    }

    pub fn columns(&self) -> &[NCPoly<u32>] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.linear.iter().all(Scalar::is_zero) && self.columns.iter().all(NCPoly::is_zero)
    }

    pub fn in_square(&self) -> bool {
        self.linear.iter().all(Scalar::is_zero)
    }

    /// Fox derivatives `u_i = α_i + r_i`.
    pub fn fox(&self) -> Vec<NCPoly<u32>> {
        self.linear
            .iter()
            .zip(&self.columns)
            .map(|(a, r)| {
                let mut u = r.clone();
                u.add_term(Word::empty(), a.clone());
                u
            })
            .collect()
    }

    /// Right multiplication operator of the linear part, `λ = Σ α_j z_j`.
    pub fn right_operator(&self) -> NCPoly<u32> {
        let mut p = NCPoly::zero(self.field);
        for (j, c) in self.linear.iter().enumerate() {
            p.add_term(Word::letter(j as u32 + 1), c.clone());
        }
        p
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(AElement {
            field: self.field,
            linear: self.linear.iter().zip(&other.linear).map(|(a, b)| a + b).collect(),
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Panics on rank or field mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("rank/field mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AElement {
            field: self.field,
            linear: self.linear.iter().map(|a| -a).collect(),
            columns: self.columns.iter().map(NCPoly::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        AElement {
            field: self.field,
            linear: self.linear.iter().map(|a| a * s).collect(),
            columns: self.columns.iter().map(|r| r.scale(s)).collect(),
        }
    }

    /// The algebra product: `(a_1+m_1)(a_2+m_2) = m_1 R_{a_2} − m_2 R_{a_1}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let fa = self.fox();
        let fb = other.fox();
        let columns = fa
            .iter()
            .zip(&fb)
            .map(|(ua, ub)| times_linear(ua, &other.linear).sub(&times_linear(ub, &self.linear)))
            .collect();
        Ok(AElement {
            field: self.field,
            linear: vec![self.field.zero(); self.rank()],
            columns,
        })
    }

    /// Panics on rank or field mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("rank/field mismatch")
    }

    /// Total degree of the lowest nonzero component, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        if !self.in_square() {
            return Some(1);
        }
        self.columns
            .iter()
            .filter_map(NCPoly::min_degree)
            .min()
            .map(|m| m + 1)
    }

    /// Total degree of the highest nonzero component, `None` for zero.
    pub fn top_degree(&self) -> Option<usize> {
        let sq = self.columns.iter().filter_map(NCPoly::degree).max().map(|m| m + 1);
        if sq.is_some() {
            sq
        } else if self.in_square() {
            None
        } else {
            Some(1)
        }
    }

    /// Drops all components of total degree above `d`.
    pub fn truncate(&self, d: usize) -> Self {
        AElement {
            field: self.field,
            linear: if d >= 1 {
                self.linear.clone()
            } else {
                vec![self.field.zero(); self.rank()]
            },
            columns: self
                .columns
                .iter()
                .map(|r| if d >= 2 { r.truncate(d - 1) } else { NCPoly::zero(self.field) })
                .collect(),
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        AElement {
            field: self.field,
            linear: if d == 1 {
                self.linear.clone()
            } else {
                vec![self.field.zero(); self.rank()]
            },
            columns: self
                .columns
                .iter()
                .map(|r| if d >= 2 { r.homogeneous_part(d - 1) } else { NCPoly::zero(self.field) })
                .collect(),
        }
    }

    /// The `A²` component.
    pub fn square_part(&self) -> Self {
        AElement {
            field: self.field,
            linear: vec![self.field.zero(); self.rank()],
            columns: self.columns.clone(),
        }
    }
}

impl fmt::Display for AElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::print_a_element(self))
    }
}
