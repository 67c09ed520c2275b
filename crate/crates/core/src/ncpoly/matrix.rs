use std::fmt;

use super::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// `z_i ↦ Σ_j rows[i][j] z_j`, extended to an endomorphism of `U` fixing 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubstitution {
    field: Field,
    rows: Vec<Vec<Scalar>>,
}

impl LinearSubstitution {
    pub fn new(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(c) = row.iter().find(|c| c.field() != field) {
                return Err(Error::FieldMismatch(field, c.field()));
            }
        }
        Ok(LinearSubstitution { field, rows })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearSubstitution { field, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.dim())
    }

    /// Image of `z_i` (1-based).
    pub fn image_of(&self, i: u32) -> NCPoly<u32> {
        let mut p = NCPoly::zero(self.field);
        for (j, c) in self.rows[i as usize - 1].iter().enumerate() {
            p.add_term(Word::letter(j as u32 + 1), c.clone());
        }
        p
    }

    pub fn apply(&self, p: &NCPoly<u32>) -> Result<NCPoly<u32>> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch(self.field, p.field()));
        }
        let max = p.max_letter() as usize;
        if max > self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: max,
            });
        }
        if self.is_identity() {
            return Ok(p.clone());
        }
        let images: Vec<NCPoly<u32>> = (1..=self.dim() as u32).map(|i| self.image_of(i)).collect();
        let mut out = NCPoly::zero(self.field);
        for (w, c) in p.terms() {
            let mut acc = NCPoly::constant(c.clone());
            for l in w.letters() {
                acc = acc.mul(&images[*l as usize - 1]);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }
}

/// A square matrix over the free associative algebra on `z_1..z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatU {
    field: Field,
    entries: Vec<Vec<NCPoly<u32>>>,
}

impl MatU {
    pub fn new(field: Field, entries: Vec<Vec<NCPoly<u32>>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(p) = row.iter().find(|p| p.field() != field) {
                return Err(Error::FieldMismatch(field, p.field()));
            }
        }
        Ok(MatU { field, entries })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, columns: &[Vec<NCPoly<u32>>]) -> Result<Self> {
        let n = columns.len();
        let mut entries = vec![Vec::with_capacity(n); n];
        for col in columns {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: col.len(),
                });
            }
            for (i, p) in col.iter().enumerate() {
                entries[i].push(p.clone());
            }
        }
        MatU::new(field, entries)
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            NCPoly::one(field)
                        } else {
                            NCPoly::zero(field)
                        }
                    })
                    .collect()
            })
            .collect();
        MatU { field, entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &NCPoly<u32> {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<NCPoly<u32>>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<NCPoly<u32>> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    /// Matrix of constant terms.
    pub fn constant_part(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(NCPoly::augmentation).collect())
            .collect()
    }

    pub fn mul(&self, other: &MatU) -> Result<MatU> {
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: other.dim(),
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut entries = vec![vec![NCPoly::zero(self.field); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..n {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if !a.is_zero() && !b.is_zero() {
                        e.add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(MatU {
            field: self.field,
            entries,
        })
    }

    /// Entrywise image under a linear substitution.
    pub fn substitute(&self, s: &LinearSubstitution) -> Result<MatU> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.dim(),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| s.apply(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(MatU {
            field: self.field,
            entries,
        })
    }

    /// `self · other^s`, the product rule for Jacobians of composites.
    pub fn mul_twisted(&self, other: &MatU, s: &LinearSubstitution) -> Result<MatU> {
        self.mul(&other.substitute(s)?)
    }
}

impl fmt::Display for MatU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, p) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
