use std::fmt;

use crate::anticomm::{BDerivation, BElement, BEndomorphism};
use crate::field::Scalar;
use crate::metabelian::{basis_decompose, AElement, AEndomorphism};
use crate::ncpoly::write_signed_terms;

struct Signed<T>(Vec<(Scalar, T)>);

impl<T: fmt::Display> fmt::Display for Signed<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.0.iter().map(|(c, t)| (c, t)), true)
    }
}

/// Fully parenthesised left-normed product.
fn left_normed(indices: &[usize]) -> String {
    let mut s = format!("x{}", indices[0]);
    for k in &indices[1..] {
        s = format!("({s}*x{k})");
    }
    s
}

/// Linear terms first, then basis monomials in key order.
pub fn print_a_element(a: &AElement) -> String {
    let s = basis_decompose(a);
    let mut terms: Vec<(Scalar, String)> = s
        .linear
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), format!("x{}", i + 1)))
        .collect();
    terms.extend(s.terms.iter().map(|(k, c)| (c.clone(), left_normed(&k.indices()))));
    Signed(terms).to_string()
}

pub fn print_b_element(b: &BElement) -> String {
    Signed(b.terms().map(|(m, c)| (c.clone(), m.to_string())).collect()).to_string()
}

fn print_rows<'a>(kind: &str, rows: impl Iterator<Item = String> + 'a) -> String {
    let mut out = format!("kind: {kind}\n");
    for (i, r) in rows.enumerate() {
        out.push_str(&format!("x{} -> {r}\n", i + 1));
    }
    out
}

pub fn print_a_map(m: &AEndomorphism) -> String {
    print_rows("endomorphism", m.images().iter().map(print_a_element))
}

pub fn print_b_map(m: &BEndomorphism) -> String {
    print_rows("endomorphism", m.images().iter().map(print_b_element))
}

pub fn print_derivation(d: &BDerivation) -> String {
    print_rows("derivation", d.components().iter().map(print_b_element))
}
