//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::HashSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mfa_core::anticomm::{enumerate_basis, BElement, BEndomorphism, Monomial};
use mfa_core::metabelian::{
    basis_compose, basis_decompose, basis_keys, chein, dimension, rank2_rigidity_search, reconstruct,
    validate_columns, AElement, AEndomorphism, InversionResult, DEFAULT_MAX_DEGREE,
};
use mfa_core::ncpoly::{CyclicPoly, NCPoly};
use mfa_core::sample;
use mfa_core::textio::{parse_a_element, parse_b_element, print_a_element, print_b_element};
use mfa_core::wildness::{builtin_sigma, builtin_tau, certify_absolutely_wild, InconclusiveReason, Verdict};
use mfa_core::{Field, Level};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rationals;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:.0?}"))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn basis_faithfulness() -> Check {
    let start = Instant::now();
    let n = 3;
    let mut forms = HashSet::new();
    let mut count = 0;
    for d in 2..=5 {
        for key in basis_keys(n, d) {
            let a = AElement::left_normed(Q, n, &key.indices()).map_err(|e| e.to_string())?;
            count += 1;
            ensure(!a.is_zero() && forms.insert(a), || format!("duplicate or zero module form at {key:?}"))?;
        }
    }
    let mut r = rng(1);
    for k in 0..200 {
        let a = sample::a_element(&mut r, Q, n, 5, 6);
        ensure(basis_compose(&basis_decompose(&a)).as_ref() == Ok(&a), || format!("round trip failed on sample {k}"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{count} monomials distinct, 200 round trips"))
}

fn module_form_round_trip() -> Check {
    let mut r = rng(2);
    for k in 0..200 {
        let n = 3 + k % 3;
        let g = sample::a_square(&mut r, Q, n, 2, 5, 5);
        let fam = validate_columns(&g.fox(), n).map_err(|e| format!("sample {k}: {e}"))?;
        ensure(reconstruct(&fam) == g, || format!("reconstruct failed on sample {k}"))?;
        let mut rn = NCPoly::zero(Q);
        for j in 1..n {
            rn.add_assign(&NCPoly::z(Q, j as u32).mul(&fam.get(j, n).neg()));
        }
        ensure(g.fox()[n - 1] == rn, || format!("last-column identity failed on sample {k}"))?;
    }
    Ok("200 samples, n = 3..5".into())
}

fn identities() -> Check {
    let fields = [Q, Field::Prime(2), Field::Prime(3)];
    for (s, field) in fields.iter().enumerate() {
        let mut r = rng(30 + s as u64);
        for k in 0..200 {
            let mut el = || sample::a_element(&mut r, *field, 3, 3, 3);
            let (a, b, c, d) = (el(), el(), el(), el());
            ensure(a.mul(&a).is_zero(), || format!("{field}: a·a ≠ 0 on sample {k}"))?;
            ensure(a.mul(&b) == b.mul(&a).neg(), || format!("{field}: ab ≠ −ba on sample {k}"))?;
            ensure(a.mul(&b).mul(&c.mul(&d)).is_zero(), || format!("{field}: (ab)(cd) ≠ 0 on sample {k}"))?;
        }
    }
    for field in [Q, Field::Prime(2)] {
        let mut r = rng(33);
        for k in 0..200 {
            let a = sample::b_element(&mut r, field, 3, 1, 4, 5);
            ensure(a.mul(&a).is_zero(), || format!("{field}: square in B ≠ 0 on sample {k}"))?;
        }
    }
    Ok("a1/a2/a3 over Q, GF(2), GF(3); B squares over Q, GF(2)".into())
}

fn chain_rule() -> Check {
    let mut r = rng(4);
    for k in 0..100 {
        let n = 3 + k % 2;
        let phi = sample::a_endomorphism(&mut r, Q, n, 3, 2);
        let psi = sample::a_endomorphism(&mut r, Q, n, 3, 2);
        let lhs = phi.compose(&psi).map_err(|e| e.to_string())?.jacobian();
        let rhs = phi
            .jacobian()
            .mul_twisted(&psi.jacobian(), &phi.induced_substitution())
            .map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("pair {k} (n = {n}) violates the chain rule"))?;
    }
    Ok("100 pairs, n = 3, 4".into())
}

fn chein_criterion() -> Check {
    let mut r = rng(5);
    let (mut accepted, mut rejected) = (0, 0);
    for k in 0..200 {
        let f = if r.gen_bool(0.5) {
            sample::chein_square(&mut r, Q, 3, 4, 4)
        } else {
            sample::a_square(&mut r, Q, 3, 2, 4, 4)
        };
        let zero_first = f.fox()[0].is_zero();
        match chein(&f, 3) {
            Ok(delta) => {
                ensure(zero_first, || format!("candidate {k} accepted with nonzero ∂f/∂x1"))?;
                let mut c = vec![AElement::zero(Q, 3).unwrap(); 3];
                c[0] = f.neg();
                let inv = AEndomorphism::from_corrections(c).unwrap();
                ensure(
                    delta.compose(&inv).unwrap().is_identity() && inv.compose(&delta).unwrap().is_identity(),
                    || format!("candidate {k}: (x1 − f, …) is not a two-sided inverse"),
                )?;
                accepted += 1;
            }
            Err(e) => {
                ensure(!zero_first, || format!("candidate {k} rejected ({e}) despite ∂f/∂x1 = 0"))?;
                rejected += 1;
            }
        }
    }
    ensure(accepted > 0 && rejected > 0, || "candidates were not mixed".into())?;
    Ok(format!("{accepted} accepted, {rejected} rejected"))
}

fn chein_additivity() -> Check {
    let mut r = rng(6);
    for k in 0..100 {
        let f = sample::chein_square(&mut r, Q, 3, 4, 4);
        let g = sample::chein_square(&mut r, Q, 3, 4, 4);
        let lhs = chein(&f, 3).and_then(|a| a.compose(&chein(&g, 3)?)).map_err(|e| e.to_string())?;
        let rhs = chein(&f.add(&g), 3).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("pair {k} is not additive"))?;
    }
    Ok("100 pairs".into())
}

fn rank2_rigidity() -> Check {
    let start = Instant::now();
    let report = rank2_rigidity_search(Q, 3, 100, 0, 8).map_err(|e| e.to_string())?;
    ensure(report.control_exact, || "identity control did not invert exactly".into())?;
    let found = report.counterexamples().len();
    ensure(found == 0, || format!("{found} exact inverses found"))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} exhaustive + {} random, none exact at degree 8 ({:.1?})",
        report.exhaustive.len(),
        report.random.len(),
        start.elapsed()
    ))
}

fn x32() -> Monomial {
    Monomial::pair(&Monomial::leaf(3), &Monomial::leaf(2)).unwrap()
}

fn tangent_divergence() -> Check {
    for field in [Q, Field::Prime(5)] {
        let expected = CyclicPoly::from_poly(&NCPoly::letter(field, x32()).neg());
        for n in 3..=5 {
            let div = builtin_sigma(field, n)
                .and_then(|s| s.tangent())
                .map_err(|e| e.to_string())?
                .divergence();
            ensure(div == expected, || format!("{field}, n = {n}: divergence {div}"))?;
        }
    }
    Ok("n = 3, 4, 5 over Q and GF(5)".into())
}

fn wildness_pipeline() -> Check {
    let start = Instant::now();
    for n in 3..=5 {
        let cert = certify_absolutely_wild(&builtin_sigma(Q, n).unwrap(), DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        ensure(cert.verdict == Verdict::AbsolutelyWild, || format!("n = {n}: {}", cert.verdict))?;
        ensure(cert.ie_level == Level::Exactly(2), || format!("n = {n}: ie_level {}", cert.ie_level))?;
        ensure(cert.degree_check, || format!("n = {n}: degree check failed"))?;
        ensure(cert.induced == builtin_tau(Q, n).unwrap(), || format!("n = {n}: induced map is not τ"))?;
        let mut c = vec![AElement::zero(Q, n).unwrap(); n];
        c[0] = AElement::left_normed(Q, n, &[3, 2, 1]).unwrap().neg();
        let expected = AEndomorphism::from_corrections(c).unwrap();
        ensure(
            cert.automorphism_evidence == Some(InversionResult::Exact(expected)),
            || format!("n = {n}: inverse is not (x1 − (x3x2)x1, …)"),
        )?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("n = 3, 4, 5 ({:.1?})", start.elapsed()))
}

fn lift(n: usize, c: BElement) -> BEndomorphism {
    let mut cs = vec![BElement::zero(Q, n).unwrap(); n];
    cs[0] = c;
    BEndomorphism::from_corrections(cs).unwrap()
}

fn negative_controls() -> Check {
    let x = |i| BElement::generator(Q, i, 3).unwrap();
    let elementary = certify_absolutely_wild(&lift(3, x(3).mul(&x(2))), 10).map_err(|e| e.to_string())?;
    ensure(
        elementary.verdict == Verdict::Inconclusive(InconclusiveReason::ZeroDivergence),
        || format!("elementary lift: {}", elementary.verdict),
    )?;
    let quartic = certify_absolutely_wild(&lift(3, x(3).mul(&x(2)).mul(&x(1)).mul(&x(1))), 10).map_err(|e| e.to_string())?;
    ensure(
        quartic.verdict == Verdict::Inconclusive(InconclusiveReason::IdealDegreeCheckFailed),
        || format!("degree-4 correction: {}", quartic.verdict),
    )?;
    Ok("ZeroDivergence and IdealDegreeCheckFailed".into())
}

fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// All binary trees on `d` leaves from `1..=n`, kept when regular.
fn generate_and_filter(n: u32, d: usize) -> HashSet<Monomial> {
    fn all(n: u32, d: usize) -> Vec<Option<Monomial>> {
        if d == 1 {
            return (1..=n).map(|i| Some(Monomial::leaf(i))).collect();
        }
        let mut out = Vec::new();
        for l in 1..d {
            for a in all(n, l) {
                for b in all(n, d - l) {
                    out.push(match (&a, &b) {
                        (Some(a), Some(b)) if a > b => Monomial::pair(a, b).ok(),
                        _ => None,
                    });
                }
            }
        }
        out
    }
    all(n, d).into_iter().flatten().collect()
}

fn dimension_tables() -> Check {
    for n in 2..=4 {
        for d in 2..=5 {
            let expected = binom2(n) * n.pow(d as u32 - 2);
            let found = basis_keys(n, d).len();
            ensure(found == expected && dimension(n, d) == expected, || {
                format!("dim A_{d} for n = {n}: {found}, expected {expected}")
            })?;
        }
    }
    let dims: Vec<usize> = (1..=4).map(|d| enumerate_basis(3, d).len()).collect();
    ensure(dims == [3, 3, 9, 30], || format!("dim B_d for n = 3: {dims:?}"))?;
    for d in 1..=4 {
        let filtered = generate_and_filter(3, d);
        let enumerated: HashSet<Monomial> = enumerate_basis(3, d).into_iter().collect();
        ensure(filtered == enumerated, || format!("generate-and-filter disagrees at d = {d}"))?;
    }
    Ok("A: n = 2..4, d = 2..5; B: (3, 3, 9, 30)".into())
}

fn special_subalgebra() -> Check {
    let bases: Vec<_> = (0..=2).map(|d| sample::divergence_free_basis(Q, 3, d)).collect();
    let mut r = rng(12);
    let mut nonzero = 0;
    for k in 0..50 {
        let (i, j) = (r.gen_range(0..=2), r.gen_range(0..=2));
        let d1 = sample::divergence_free(&mut r, &bases[i], Q, 3);
        let d2 = sample::divergence_free(&mut r, &bases[j], Q, 3);
        ensure(d1.divergence().is_zero() && d2.divergence().is_zero(), || format!("pair {k}: sample not in S"))?;
        let b = d1.bracket(&d2).map_err(|e| e.to_string())?;
        ensure(b.divergence().is_zero(), || format!("pair {k}: bracket has divergence {}", b.divergence()))?;
        nonzero += usize::from(!b.is_zero());
    }
    ensure(nonzero > 0, || "all brackets vanished".into())?;
    Ok(format!("50 pairs, {nonzero} nonzero brackets"))
}

fn parser_round_trip() -> Check {
    let mut r = rng(13);
    let fields = [Q, Field::Prime(2), Field::Prime(5)];
    for k in 0..500 {
        let field = fields[k % 3];
        let a = sample::a_element(&mut r, field, 3, 4, 4);
        let text = print_a_element(&a);
        ensure(parse_a_element(&text, 3, field).as_ref() == Ok(&a), || format!("A round trip failed on '{text}'"))?;
        let b = sample::b_element(&mut r, field, 3, 1, 4, 4);
        let text = print_b_element(&b);
        ensure(parse_b_element(&text, 3, field).as_ref() == Ok(&b), || format!("B round trip failed on '{text}'"))?;
    }
    let alphabet: Vec<char> = "x0123456789+-*/() \n#:>ab".chars().collect();
    let prev = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut crashes = 0;
    for _ in 0..5000 {
        let len = r.gen_range(0..40);
        let s: String = (0..len).map(|_| alphabet[r.gen_range(0..alphabet.len())]).collect();
        let ok = panic::catch_unwind(|| {
            let _ = parse_a_element(&s, 3, Q);
            let _ = parse_b_element(&s, 3, Field::Prime(2));
            let _ = mfa_core::textio::parse_map(&s, 3, mfa_core::textio::AlgebraKind::Free, Q, None);
        })
        .is_ok();
        crashes += usize::from(!ok);
    }
    panic::set_hook(prev);
    ensure(crashes == 0, || format!("{crashes} fuzz inputs crashed"))?;
    Ok("500 values per algebra, 5000 fuzz inputs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("basis faithfulness", basis_faithfulness),
        ("module-form round trip", module_form_round_trip),
        ("identities", identities),
        ("chain rule", chain_rule),
        ("Chein criterion", chein_criterion),
        ("Chein additivity", chein_additivity),
        ("rank-2 rigidity evidence", rank2_rigidity),
        ("divergence of tangent(sigma)", tangent_divergence),
        ("wildness pipeline", wildness_pipeline),
        ("negative controls", negative_controls),
        ("dimension tables", dimension_tables),
        ("special subalgebra closure", special_subalgebra),
        ("parser round trip", parser_round_trip),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
