//! Coordinates in the basis of left-normed monomials `(((x_i x_j) x_k1) ⋯) x_ks`, `i > j`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ncpoly::{NCPoly, Word};

use super::columns::validate_columns;
use super::AElement;

/// The monomial `(((x_i x_j) x_k1) ⋯) x_ks` with `i > j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisKey {
    pub i: u32,
    pub j: u32,
    pub tail: Word<u32>,
}

impl BasisKey {
    pub fn new(i: u32, j: u32, tail: Vec<u32>) -> Result<Self> {
        if i <= j || j == 0 {
            return Err(Error::NotRegular {
                left: format!("x{i}"),
                right: format!("x{j}"),
            });
        }
        Ok(BasisKey { i, j, tail: Word(tail) })
    }

    pub fn degree(&self) -> usize {
        self.tail.len() + 2
    }

    /// The letters of the left-normed product, first factor first.
    pub fn indices(&self) -> Vec<usize> {
        let mut v = vec![self.i as usize, self.j as usize];
        v.extend(self.tail.letters().iter().map(|&k| k as usize));
        v
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

/// An element written in the monomial basis: a linear part plus
/// coefficients on left-normed monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalSum {
    pub field: Field,
    pub linear: Vec<Scalar>,
    pub terms: BTreeMap<BasisKey, Scalar>,
}

impl CanonicalSum {
    pub fn rank(&self) -> usize {
        self.linear.len()
    }
}

pub fn basis_decompose(a: &AElement) -> CanonicalSum {
    let n = a.rank();
    let family = validate_columns(a.columns(), n).expect("AElement columns are always valid");
    let mut terms = BTreeMap::new();
    for i in 2..=n {
        for j in 1..i {
            for (w, c) in family.get(i, j).terms() {
                terms.insert(
                    BasisKey {
                        i: i as u32,
                        j: j as u32,
                        tail: w.clone(),
                    },
                    c.clone(),
                );
            }
        }
    }
    CanonicalSum {
        field: a.field(),
        linear: a.linear().to_vec(),
        terms,
    }
}

pub fn basis_compose(s: &CanonicalSum) -> Result<AElement> {
    let n = s.rank();
    let mut columns = vec![NCPoly::zero(s.field); n];
    for (key, c) in &s.terms {
        let (i, j) = (key.i as usize, key.j as usize);
        let top = key.tail.letters().iter().copied().chain([key.i]).max().unwrap_or(0) as usize;
        if top > n || key.tail.letters().contains(&0) {
            return Err(Error::IndexOutOfRange { index: top, rank: n });
        }
        // (x_i x_j) w  ↦  t_i z_j w − t_j z_i w
        let mut zj = vec![key.j];
        zj.extend_from_slice(key.tail.letters());
        let mut zi = vec![key.i];
        zi.extend_from_slice(key.tail.letters());
        columns[i - 1].add_term(Word(zj), c.clone());
        columns[j - 1].add_term(Word(zi), -c);
    }
    Ok(AElement::from_parts_unchecked(s.field, s.linear.clone(), columns))
}

/// All basis monomials of degree `d ≥ 2` in rank `n`, in key order.
pub fn basis_keys(n: usize, d: usize) -> Vec<BasisKey> {
    assert!(d >= 2);
    let mut tails: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..d - 2 {
        tails = tails
            .into_iter()
            .flat_map(|t| {
                (1..=n as u32).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    let mut keys = Vec::new();
    for i in 2..=n as u32 {
        for j in 1..i {
            for t in &tails {
                keys.push(BasisKey {
                    i,
                    j,
                    tail: Word(t.clone()),
                });
            }
        }
    }
    keys.sort();
    keys
}

/// Dimension of the degree-`d` component: `n` for `d = 1`, else `C(n,2)·n^(d−2)`.
pub fn dimension(n: usize, d: usize) -> usize {
    match d {
        0 => 0,
        1 => n,
        _ => n * (n - 1) / 2 * n.pow(d as u32 - 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn decompose_examples() {
        let g = AElement::left_normed(Q, 3, &[3, 2]).unwrap();
        let s = basis_decompose(&g);
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[&BasisKey::new(3, 2, vec![]).unwrap()], Q.one());

        let x1 = AElement::generator(Q, 1, 3).unwrap();
        let s = basis_decompose(&x1);
        assert!(s.terms.is_empty());
        assert_eq!(s.linear[0], Q.one());

        let a = AElement::left_normed(Q, 3, &[3, 2, 1])
            .unwrap()
            .add(&x1.scale(&Q.from_i64(2)));
        let s = basis_decompose(&a);
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[&BasisKey::new(3, 2, vec![1]).unwrap()], Q.one());
        assert_eq!(s.linear, vec![Q.from_i64(2), Q.zero(), Q.zero()]);
        assert_eq!(basis_compose(&s).unwrap(), a);
    }

    #[test]
    fn compose_matches_left_normed_products() {
        for d in 2..=4 {
            for key in basis_keys(3, d) {
                let mut terms = BTreeMap::new();
                terms.insert(key.clone(), Q.one());
                let s = CanonicalSum {
                    field: Q,
                    linear: vec![Q.zero(); 3],
                    terms,
                };
                let via_product = AElement::left_normed(Q, 3, &key.indices()).unwrap();
                assert_eq!(basis_compose(&s).unwrap(), via_product);
            }
        }
    }

    #[test]
    fn key_counts() {
        for n in 2..=4 {
            for d in 2..=5 {
                assert_eq!(basis_keys(n, d).len(), dimension(n, d));
            }
        }
        assert_eq!(dimension(3, 2), 3);
        assert_eq!(dimension(3, 3), 9);
        assert_eq!(dimension(3, 4), 27);
    }

    #[test]
    fn key_requires_descending_pair() {
        assert!(BasisKey::new(2, 2, vec![]).is_err());
        assert!(BasisKey::new(1, 2, vec![]).is_err());
    }
}
