//! Seeded random generators for tests, searches and the CLI.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::anticomm::{enumerate_basis, BDerivation, BElement, BEndomorphism, Monomial};
use crate::field::{Field, Scalar};
use crate::metabelian::{basis_compose, AElement, AEndomorphism, BasisKey, CanonicalSum};
use crate::ncpoly::{NCPoly, Word};

/// A small nonzero scalar: `±a/b` with `a ≤ 3`, `b ≤ 2` over ℚ; any nonzero residue otherwise.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    match field {
        Field::Rationals => {
            let num = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den = rng.gen_range(1..=2);
            field
                .ratio(&num.into(), &den.into())
                .expect("nonzero denominator")
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(1..p as i64)),
    }
}

/// Zero with probability `p_zero`, otherwise [`nonzero_scalar`].
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, field: Field, p_zero: f64) -> Scalar {
    if rng.gen_bool(p_zero) {
        field.zero()
    } else {
        nonzero_scalar(rng, field)
    }
}

pub fn basis_key<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize) -> BasisKey {
    assert!(n >= 2 && degree >= 2);
    let i = rng.gen_range(2..=n as u32);
    let j = rng.gen_range(1..i);
    let tail = (0..degree - 2).map(|_| rng.gen_range(1..=n as u32)).collect();
    BasisKey::new(i, j, tail).expect("i > j")
}

/// An element of `A²` with up to `max_terms` monomials of degree `min_degree..=max_degree`.
pub fn a_square<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    min_degree: usize,
    max_degree: usize,
    max_terms: usize,
) -> AElement {
    let mut terms = BTreeMap::new();
    if n >= 2 && max_degree >= min_degree.max(2) {
        for _ in 0..rng.gen_range(0..=max_terms) {
            let d = rng.gen_range(min_degree.max(2)..=max_degree);
            terms.insert(basis_key(rng, n, d), nonzero_scalar(rng, field));
        }
    }
    basis_compose(&CanonicalSum {
        field,
        linear: vec![field.zero(); n],
        terms,
    })
    .expect("keys within rank")
}

/// An element of `A²` whose Fox derivative in `x_1` vanishes: every basis
/// key `(x_i x_j) w` has `j ≥ 2`.
pub fn chein_square<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, max_degree: usize, max_terms: usize) -> AElement {
    let mut terms = BTreeMap::new();
    if n >= 3 {
        for _ in 0..rng.gen_range(0..=max_terms) {
            let d = rng.gen_range(2..=max_degree.max(2));
            let i = rng.gen_range(3..=n as u32);
            let j = rng.gen_range(2..i);
            let tail = (0..d - 2).map(|_| rng.gen_range(1..=n as u32)).collect();
            terms.insert(BasisKey::new(i, j, tail).expect("i > j"), nonzero_scalar(rng, field));
        }
    }
    basis_compose(&CanonicalSum {
        field,
        linear: vec![field.zero(); n],
        terms,
    })
    .expect("keys within rank")
}

/// A random element with linear part and square part of degree `≤ max_degree`.
pub fn a_element<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, max_degree: usize, max_terms: usize) -> AElement {
    let linear: Vec<Scalar> = (0..n).map(|_| scalar(rng, field, 0.4)).collect();
    let mut y = AElement::zero(field, n).expect("n > 0");
    for (i, c) in linear.iter().enumerate() {
        y = y.add(&AElement::generator(field, i + 1, n).unwrap().scale(c));
    }
    y.add(&a_square(rng, field, n, 2, max_degree, max_terms))
}

/// `x_i ↦ x_i + f_i` with every `f_i ∈ A²` of degree `≤ max_degree`.
pub fn ia_endomorphism<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_degree: usize,
    max_terms: usize,
) -> AEndomorphism {
    let corrections = (0..n)
        .map(|_| a_square(rng, field, n, 2, max_degree, max_terms))
        .collect();
    AEndomorphism::from_corrections(corrections).expect("uniform rank")
}

/// Arbitrary linear part plus corrections in `A²`.
pub fn a_endomorphism<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_degree: usize,
    max_terms: usize,
) -> AEndomorphism {
    let images = (0..n)
        .map(|_| {
            let mut y = a_square(rng, field, n, 2, max_degree, max_terms);
            for k in 1..=n {
                let c = scalar(rng, field, 0.5);
                y = y.add(&AElement::generator(field, k, n).unwrap().scale(&c));
            }
            y
        })
        .collect();
    AEndomorphism::new(images).expect("uniform rank")
}

/// A random product tree of the given degree, reduced in `B` (may vanish).
pub fn b_product<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, degree: usize) -> BElement {
    if degree <= 1 {
        return BElement::generator(field, rng.gen_range(1..=n), n).expect("in range");
    }
    let left = rng.gen_range(1..degree);
    b_product(rng, field, n, left).mul(&b_product(rng, field, n, degree - left))
}

/// A random regular monomial of degree `d`, drawn from the enumerated basis.
pub fn b_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize) -> Monomial {
    enumerate_basis(n, degree)
        .choose(rng)
        .cloned()
        .expect("nonempty basis")
}

pub fn b_element<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    min_degree: usize,
    max_degree: usize,
    max_terms: usize,
) -> BElement {
    let mut out = BElement::zero(field, n).expect("n > 0");
    for _ in 0..rng.gen_range(0..=max_terms) {
        let d = rng.gen_range(min_degree.max(1)..=max_degree.max(1));
        let c = nonzero_scalar(rng, field);
        out = out.add(&b_product(rng, field, n, d).scale(&c));
    }
    out
}

/// `ξ_i ↦ ξ_i + f_i` with `f_i` of degree `2..=max_degree`.
pub fn b_endomorphism<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_degree: usize,
    max_terms: usize,
) -> BEndomorphism {
    let corrections = (0..n).map(|_| b_element(rng, field, n, 2, max_degree, max_terms)).collect();
    BEndomorphism::from_corrections(corrections).expect("uniform rank")
}

pub fn b_derivation<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    min_degree: usize,
    max_degree: usize,
    max_terms: usize,
) -> BDerivation {
    let comps = (0..n)
        .map(|_| b_element(rng, field, n, min_degree, max_degree, max_terms))
        .collect();
    BDerivation::new(comps).expect("uniform rank")
}

/// A polynomial in `z_1..z_n` with words of length `≤ max_len`.
pub fn ncpoly<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize, max_len: usize, max_terms: usize) -> NCPoly<u32> {
    let mut p = NCPoly::zero(field);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let len = rng.gen_range(0..=max_len);
        let w = Word((0..len).map(|_| rng.gen_range(1..=n as u32)).collect());
        p.add_term(w, nonzero_scalar(rng, field));
    }
    p
}

/// A basis of the homogeneous derivations of degree `d` (components in
/// `B_{d+1}`) with zero divergence, by exact elimination.
pub fn divergence_free_basis(field: Field, n: usize, degree: usize) -> Vec<BDerivation> {
    let monomials = enumerate_basis(n, degree + 1);
    let mut spanning = Vec::new();
    for j in 1..=n {
        for m in &monomials {
            let f = BElement::monomial(field, m.clone(), n).expect("in range");
            spanning.push(BDerivation::single(f, j).expect("in range"));
        }
    }
    let mut rows: BTreeMap<Word<Monomial>, usize> = BTreeMap::new();
    let columns: Vec<Vec<(usize, Scalar)>> = spanning
        .iter()
        .map(|d| {
            d.divergence()
                .terms()
                .map(|(w, c)| {
                    let next = rows.len();
                    (*rows.entry(w.clone()).or_insert(next), c.clone())
                })
                .collect()
        })
        .collect();
    let mut matrix = vec![vec![field.zero(); spanning.len()]; rows.len()];
    for (col, entries) in columns.iter().enumerate() {
        for (row, c) in entries {
            matrix[*row][col] = c.clone();
        }
    }
    kernel(field, matrix, spanning.len())
        .into_iter()
        .map(|v| {
            let mut acc = BDerivation::zero(field, n).expect("n > 0");
            for (d, c) in spanning.iter().zip(&v) {
                if !c.is_zero() {
                    acc = acc.add(&d.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Null space of a dense matrix via reduced row echelon form.
fn kernel(field: Field, mut m: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[row][free];
        }
        basis.push(v);
    }
    basis
}

/// A random combination of [`divergence_free_basis`] elements.
pub fn divergence_free<R: Rng + ?Sized>(rng: &mut R, basis: &[BDerivation], field: Field, n: usize) -> BDerivation {
    let mut acc = BDerivation::zero(field, n).expect("n > 0");
    for d in basis {
        let c = scalar(rng, field, 0.6);
        if !c.is_zero() {
            acc = acc.add(&d.scale(&c));
        }
    }
    acc
}
