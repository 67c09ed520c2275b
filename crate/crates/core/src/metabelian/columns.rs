//! The correspondence between elements of `A²` and columns
//! `r_i = Σ_j z_j w_j^(i)` with an antisymmetric family `w`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ncpoly::NCPoly;

use super::AElement;

/// `w_j^(i)` for `1 ≤ i, j ≤ n` with `w_j^(i) = −w_i^(j)` and `w_i^(i) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AntisymmetricFamily {
    field: Field,
    // entries[i][j] = w_{j+1}^{(i+1)}
    entries: Vec<Vec<NCPoly<u32>>>,
}

impl AntisymmetricFamily {
    pub fn zero(field: Field, n: usize) -> Self {
        AntisymmetricFamily {
            field,
            entries: vec![vec![NCPoly::zero(field); n]; n],
        }
    }

    /// Checks the antisymmetry exactly as stored; `entries[i-1][j-1]` is `w_j^(i)`.
    pub fn new(field: Field, entries: Vec<Vec<NCPoly<u32>>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for i in 0..n {
            if !entries[i][i].is_zero() {
                return Err(Error::NotAntisymmetric { i: i + 1, j: i + 1 });
            }
            for j in i + 1..n {
                if !entries[i][j].add(&entries[j][i]).is_zero() {
                    return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(AntisymmetricFamily { field, entries })
    }

    /// Sets `w_j^(i) = w` and `w_i^(j) = −w` (1-based, `i ≠ j`).
    pub fn with(mut self, i: usize, j: usize, w: NCPoly<u32>) -> Self {
        assert_ne!(i, j);
        self.entries[j - 1][i - 1] = w.neg();
        self.entries[i - 1][j - 1] = w;
        self
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `w_j^(i)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &NCPoly<u32> {
        &self.entries[i - 1][j - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(NCPoly::is_zero)
    }
}

/// Recovers the antisymmetric family behind a column vector, or reports
/// the first pair where antisymmetry fails.
pub fn validate_columns(columns: &[NCPoly<u32>], n: usize) -> Result<AntisymmetricFamily> {
    if columns.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: columns.len(),
        });
    }
    let Some(field) = columns.first().map(NCPoly::field) else {
        return Err(Error::ZeroRank);
    };
    let entries = columns
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.left_decompose(n).map_err(|e| match e {
                Error::NotInAugmentationIdeal { .. } => Error::NotInAugmentationIdeal { index: i + 1 },
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let family = AntisymmetricFamily::new(field, entries)?;

    // r_n = Σ_{j<n} −z_j w_n^(j)
    let mut last = NCPoly::zero(field);
    for j in 1..n {
        last.add_assign(&family.get(j, n).left_mul_letter(&(j as u32)).neg());
    }
    if last != columns[n - 1] {
        return Err(Error::NotAntisymmetric { i: n, j: n });
    }
    Ok(family)
}

/// The element `g = Σ_{j<i} (x_i x_j) w_j^(i)` of `A²`, whose columns are
/// `r_i = Σ_j z_j w_j^(i)`.
pub fn reconstruct(w: &AntisymmetricFamily) -> AElement {
    let n = w.rank();
    let columns = (1..=n)
        .map(|i| {
            NCPoly::left_compose(w.field, &w.entries[i - 1])
        })
        .collect();
    AElement::from_parts_unchecked(w.field, vec![w.field.zero(); n], columns)
}
