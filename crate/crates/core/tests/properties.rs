use std::collections::BTreeSet;

use mfa_core::anticomm::{enumerate_basis, quotient_to_a, BDerivation, BElement, Monomial, Shape};
use mfa_core::metabelian::{
    basis_compose, basis_decompose, chein, dimension, invert_ia, reconstruct, validate_columns, AElement,
    AEndomorphism, InversionResult,
};
use mfa_core::ncpoly::{LinearSubstitution, NCPoly, Word};
use mfa_core::sample;
use mfa_core::textio::{parse_a_element, parse_b_element, print_a_element, print_b_element};
use mfa_core::{Field, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rationals;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Q), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

fn r_of(b: &BElement) -> NCPoly<Monomial> {
    let mut p = NCPoly::zero(b.field());
    for (m, c) in b.terms() {
        p.add_term(Word::letter(m.clone()), c.clone());
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nc_mul_associative_and_distributive(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let p = sample::ncpoly(&mut r, field, 3, 4, 5);
        let q = sample::ncpoly(&mut r, field, 3, 4, 5);
        let s = sample::ncpoly(&mut r, field, 3, 4, 5);
        prop_assert_eq!(p.mul(&q).mul(&s), p.mul(&q.mul(&s)));
        prop_assert_eq!(p.mul(&q.add(&s)), p.mul(&q).add(&p.mul(&s)));
        prop_assert_eq!(p.add(&q).mul(&s), p.mul(&s).add(&q.mul(&s)));
    }

    #[test]
    fn substitution_is_multiplicative(seed: u64) {
        let mut r = rng(seed);
        let rows: Vec<Vec<Scalar>> = (0..3).map(|_| (0..3).map(|_| sample::scalar(&mut r, Q, 0.4)).collect()).collect();
        let s = LinearSubstitution::new(Q, rows).unwrap();
        let p = sample::ncpoly(&mut r, Q, 3, 3, 4);
        let q = sample::ncpoly(&mut r, Q, 3, 3, 4);
        prop_assert_eq!(s.apply(&p.mul(&q)).unwrap(), s.apply(&p).unwrap().mul(&s.apply(&q).unwrap()));
    }

    #[test]
    fn commutators_vanish_cyclically(seed: u64) {
        let mut r = rng(seed);
        let p = sample::ncpoly(&mut r, Q, 3, 4, 5);
        let q = sample::ncpoly(&mut r, Q, 3, 4, 5);
        prop_assert!(p.mul(&q).sub(&q.mul(&p)).cyclic_project().is_zero());
    }

    #[test]
    fn left_decompose_recomposes(seed: u64) {
        let mut r = rng(seed);
        let mut p = sample::ncpoly(&mut r, Q, 3, 4, 6);
        p = p.sub(&NCPoly::constant(p.augmentation()));
        let parts = p.left_decompose(3).unwrap();
        prop_assert_eq!(NCPoly::left_compose(Q, &parts), p);
    }

    #[test]
    fn anticommutative_and_metabelian(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let mut el = || sample::a_element(&mut r, field, 3, 3, 3);
        let (a, b, c, d) = (el(), el(), el(), el());
        prop_assert!(a.mul(&a).is_zero());
        prop_assert_eq!(a.mul(&b), b.mul(&a).neg());
        prop_assert!(a.mul(&b).mul(&c.mul(&d)).is_zero());
        let ab = a.mul(&b);
        prop_assert!(validate_columns(ab.columns(), 3).is_ok());
    }

    #[test]
    fn module_form_round_trips(seed: u64) {
        let mut r = rng(seed);
        let g = sample::a_square(&mut r, Q, 4, 2, 5, 5);
        let fam = validate_columns(&g.fox(), 4).unwrap();
        prop_assert_eq!(reconstruct(&fam), g.clone());
        prop_assert_eq!(validate_columns(&reconstruct(&fam).fox(), 4).unwrap(), fam);
        let a = sample::a_element(&mut r, Q, 4, 5, 5);
        prop_assert_eq!(basis_compose(&basis_decompose(&a)).unwrap(), a);
    }

    #[test]
    fn chain_rule(seed: u64, n in 3usize..=4) {
        let mut r = rng(seed);
        let phi = sample::a_endomorphism(&mut r, Q, n, 3, 2);
        let g = sample::a_element(&mut r, Q, n, 4, 3);
        prop_assert_eq!(phi.apply(&g).unwrap().fox(), phi.chain_rule_columns(&g).unwrap());
        let psi = sample::a_endomorphism(&mut r, Q, n, 3, 2);
        let lhs = phi.compose(&psi).unwrap().jacobian();
        let rhs = phi.jacobian().mul_twisted(&psi.jacobian(), &phi.induced_substitution()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobian_embeds_ia(seed: u64) {
        let mut r = rng(seed);
        let phi = sample::ia_endomorphism(&mut r, Q, 3, 3, 2);
        let psi = sample::ia_endomorphism(&mut r, Q, 3, 3, 2);
        prop_assert_eq!(
            phi.compose(&psi).unwrap().jacobian(),
            phi.jacobian().mul(&psi.jacobian()).unwrap()
        );
        let id: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|j| if i == j { Q.one() } else { Q.zero() }).collect()).collect();
        prop_assert_eq!(phi.jacobian().constant_part(), id);
        prop_assert_eq!(phi.jacobian() == psi.jacobian(), phi == psi);
    }

    #[test]
    fn chein_additive(seed: u64) {
        let mut r = rng(seed);
        let mut accepted = || sample::chein_square(&mut r, Q, 3, 4, 4);
        let f = accepted();
        let g = accepted();
        prop_assert_eq!(chein(&f, 3).unwrap().compose(&chein(&g, 3).unwrap()).unwrap(), chein(&f.add(&g), 3).unwrap());
    }

    #[test]
    fn inversion_is_two_sided_when_exact(seed: u64) {
        let mut r = rng(seed);
        let phi = sample::ia_endomorphism(&mut r, Q, 3, 3, 2);
        if let InversionResult::Exact(inv) = invert_ia(&phi, 6).unwrap() {
            prop_assert!(phi.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&phi).unwrap().is_identity());
        }
    }

    #[test]
    fn b_squares_vanish(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let a = sample::b_element(&mut r, field, 3, 1, 3, 4);
        let b = sample::b_element(&mut r, field, 3, 1, 3, 4);
        prop_assert!(a.mul(&a).is_zero());
        prop_assert_eq!(a.mul(&b), b.mul(&a).neg());
    }

    #[test]
    fn fox_b_expansions_agree(seed: u64) {
        let mut r = rng(seed);
        let a = sample::b_element(&mut r, Q, 3, 1, 3, 3);
        let b = sample::b_element(&mut r, Q, 3, 1, 3, 3);
        let (ra, rb) = (r_of(&a), r_of(&b));
        let (da, db) = (a.fox(), b.fox());
        let by_operators: Vec<_> = (0..3).map(|i| da[i].mul(&rb).sub(&db[i].mul(&ra))).collect();
        let mut by_terms = vec![NCPoly::zero(Q); 3];
        for (u, c) in a.terms() {
            for (v, e) in b.terms() {
                let uv = BElement::term(u.clone(), c.clone(), 3).unwrap().mul(&BElement::term(v.clone(), e.clone(), 3).unwrap());
                for (acc, col) in by_terms.iter_mut().zip(uv.fox()) {
                    acc.add_assign(&col);
                }
            }
        }
        prop_assert_eq!(&a.mul(&b).fox(), &by_operators);
        prop_assert_eq!(by_terms, by_operators);
        let s = a.add(&b).fox();
        for i in 0..3 {
            prop_assert_eq!(&s[i], &da[i].add(&db[i]));
        }
    }

    #[test]
    fn divergence_is_linear(seed: u64) {
        let mut r = rng(seed);
        let d1 = sample::b_derivation(&mut r, Q, 3, 1, 3, 3);
        let d2 = sample::b_derivation(&mut r, Q, 3, 1, 3, 3);
        let c = sample::nonzero_scalar(&mut r, Q);
        prop_assert_eq!(d1.add(&d2.scale(&c)).divergence(), d1.divergence().add(&d2.divergence().scale(&c)));
    }

    #[test]
    fn bracket_respects_grading(seed: u64, i in 0usize..=2, j in 0usize..=2) {
        let mut r = rng(seed);
        let d1 = sample::b_derivation(&mut r, Q, 3, i + 1, i + 1, 3);
        let d2 = sample::b_derivation(&mut r, Q, 3, j + 1, j + 1, 3);
        let b = d1.bracket(&d2).unwrap();
        prop_assert!(b.is_zero() || b.homogeneous_degree() == Some(i + j));
    }

    #[test]
    fn quotient_is_homomorphism(seed: u64) {
        let mut r = rng(seed);
        let a = sample::b_element(&mut r, Q, 3, 1, 3, 3);
        let b = sample::b_element(&mut r, Q, 3, 1, 3, 3);
        prop_assert_eq!(quotient_to_a(&a.mul(&b)), quotient_to_a(&a).mul(&quotient_to_a(&b)));
        prop_assert_eq!(quotient_to_a(&a.add(&b)), quotient_to_a(&a).add(&quotient_to_a(&b)));
    }

    #[test]
    fn print_parse_round_trip(seed: u64, field in fields()) {
        let mut r = rng(seed);
        let a = sample::a_element(&mut r, field, 3, 4, 4);
        prop_assert_eq!(parse_a_element(&print_a_element(&a), 3, field).unwrap(), a);
        let b = sample::b_element(&mut r, field, 3, 1, 4, 4);
        prop_assert_eq!(parse_b_element(&print_b_element(&b), 3, field).unwrap(), b);
    }

    #[test]
    fn parser_never_panics(s in "[-+*/()x0-9 ]{0,40}") {
        let _ = parse_a_element(&s, 3, Q);
        let _ = parse_b_element(&s, 3, Field::Prime(2));
    }

    #[test]
    fn parser_survives_arbitrary_text(s in "\\PC{0,60}") {
        let _ = parse_a_element(&s, 3, Q);
    }
}

#[test]
fn word_order_is_strict_total() {
    let mut words = vec![Word::<u32>::empty()];
    let mut frontier = vec![Vec::<u32>::new()];
    for _ in 0..4 {
        frontier = frontier
            .iter()
            .flat_map(|w| (1..=2).map(move |k| [w.clone(), vec![k]].concat()))
            .collect();
        words.extend(frontier.iter().cloned().map(Word));
    }
    for a in &words {
        assert!(a.cmp(a).is_eq());
        for b in &words {
            assert_eq!(a.cmp(b), b.cmp(a).reverse());
            assert_eq!(a == b, a.cmp(b).is_eq());
            for c in &words {
                if a < b && b < c {
                    assert!(a < c);
                }
            }
        }
    }
}

#[test]
fn a_dimension_counts() {
    assert_eq!((2..=4).map(|d| dimension(3, d)).collect::<Vec<_>>(), vec![3, 9, 27]);
    for d in 2..=4 {
        assert_eq!(mfa_core::metabelian::basis_keys(3, d).len(), dimension(3, d));
    }
}

#[derive(Clone)]
enum Tree {
    Leaf(u32),
    Node(Box<Tree>, Box<Tree>),
}

fn trees(n: u32, d: usize) -> Vec<Tree> {
    if d == 1 {
        return (1..=n).map(Tree::Leaf).collect();
    }
    let mut out = Vec::new();
    for l in 1..d {
        for a in trees(n, l) {
            for b in trees(n, d - l) {
                out.push(Tree::Node(Box::new(a.clone()), Box::new(b)));
            }
        }
    }
    out
}

/// `Some(monomial)` iff every node has left factor above right factor.
fn regular(t: &Tree) -> Option<Monomial> {
    match t {
        Tree::Leaf(i) => Some(Monomial::leaf(*i)),
        Tree::Node(a, b) => {
            let (a, b) = (regular(a)?, regular(b)?);
            if a > b {
                Monomial::pair(&a, &b).ok()
            } else {
                None
            }
        }
    }
}

#[test]
fn regular_filter_matches_enumeration() {
    for n in 1..=3 {
        for d in 1..=5 {
            let filtered: BTreeSet<Monomial> = trees(n, d).iter().filter_map(regular).collect();
            let enumerated: BTreeSet<Monomial> = enumerate_basis(n as usize, d).into_iter().collect();
            assert_eq!(filtered, enumerated, "n = {n}, d = {d}");
        }
    }
}

#[test]
fn b_mul_of_basis_monomials_is_signed_monomial() {
    let basis: Vec<Monomial> = (1..=3).flat_map(|d| enumerate_basis(3, d)).collect();
    for u in &basis {
        for v in &basis {
            let p = BElement::monomial(Q, u.clone(), 3)
                .unwrap()
                .mul(&BElement::monomial(Q, v.clone(), 3).unwrap());
            if u == v {
                assert!(p.is_zero());
            } else {
                let terms: Vec<_> = p.terms().collect();
                assert_eq!(terms.len(), 1);
                assert!(terms[0].1 == &Q.one() || terms[0].1 == &Q.from_i64(-1));
                assert!(matches!(terms[0].0.shape(), Shape::Pair(..)));
            }
        }
    }
}

#[test]
fn off_diagonal_linear_derivations_are_divergence_free() {
    for i in 1..=3 {
        for j in 1..=3 {
            let d = BDerivation::matrix_unit(Q, 3, i, j).unwrap();
            assert_eq!(d.divergence().is_zero(), i != j);
        }
    }
}

#[test]
fn linear_bracket_table_is_gl_n() {
    let e = |i, j| BDerivation::matrix_unit(Q, 3, i, j).unwrap();
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                for l in 1..=3 {
                    let mut expected = BDerivation::zero(Q, 3).unwrap();
                    if j == k {
                        expected = expected.add(&e(i, l));
                    }
                    if i == l {
                        expected = expected.add(&e(k, j).scale(&Q.from_i64(-1)));
                    }
                    assert_eq!(e(i, j).bracket(&e(k, l)).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn quotient_kills_metabelian_generators() {
    let squares: Vec<BElement> = (2..=4)
        .flat_map(|d| enumerate_basis(3, d))
        .map(|m| BElement::monomial(Q, m, 3).unwrap())
        .collect();
    let mut checked = 0;
    for p in &squares {
        for q in &squares {
            let deg = p.degree().unwrap() + q.degree().unwrap();
            if deg <= 6 {
                let pq = p.mul(q);
                assert!(quotient_to_a(&pq).is_zero());
                checked += usize::from(!pq.is_zero());
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn metabelian_and_free_fox_contrast() {
    let a = AElement::left_normed(Q, 3, &[3, 2, 1]).unwrap();
    assert!(a.fox()[0].is_zero());
    let x = |i| BElement::generator(Q, i, 3).unwrap();
    let b = x(3).mul(&x(2)).mul(&x(1));
    let x32 = Monomial::pair(&Monomial::leaf(3), &Monomial::leaf(2)).unwrap();
    assert_eq!(b.fox()[0], NCPoly::letter(Q, x32).neg());
}

#[test]
fn random_ia_maps_in_rank_two_have_trivial_jacobian_constant() {
    let mut r = rng(11);
    for _ in 0..20 {
        let phi: AEndomorphism = sample::ia_endomorphism(&mut r, Q, 2, 3, 2);
        let c = phi.jacobian().constant_part();
        assert_eq!(c[0][0], Q.one());
        assert_eq!(c[1][1], Q.one());
    }
}
