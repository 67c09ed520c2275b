use std::fmt::Write as _;
use std::path::Path;

use mfa_core::anticomm::{enumerate_basis, BDerivation, BElement, BEndomorphism};
use mfa_core::metabelian::{
    basis_keys, chein_at, invert_ia, rank2_rigidity_search, AElement, AEndomorphism, InversionResult,
    DEFAULT_MAX_DEGREE,
};
use mfa_core::textio::{
    parse_a_element, parse_b_element, parse_map, print_a_element, print_a_map, print_b_element, print_b_map,
    print_derivation, AlgebraKind, MapKind, ParsedMap,
};
use mfa_core::wildness::{builtin_sigma, certify_absolutely_wild, Verdict};
use mfa_core::{Field, Level};
use serde_json::{json, Value};

use crate::report::{CliError, Outcome};
use crate::{Algebra, Builtin, Command, Global};

struct Ctx {
    field: Field,
    rank: usize,
    algebra: AlgebraKind,
    max_degree: Option<usize>,
    seed: u64,
}

impl Ctx {
    fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
    }

    fn algebra_name(&self) -> &'static str {
        match self.algebra {
            AlgebraKind::Metabelian => "metabelian",
            AlgebraKind::Free => "free",
        }
    }
}

fn parse_field(s: &str) -> Result<Field, CliError> {
    let lower = s.trim().to_ascii_lowercase();
    if lower == "q" {
        return Ok(Field::Rationals);
    }
    let p = lower
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::usage("invalid_field", format!("field must be 'q' or 'gf:P', found '{s}'")))?;
    Ok(Field::prime(p)?)
}

fn context(g: &Global) -> Result<Ctx, CliError> {
    if g.rank == 0 {
        return Err(CliError::usage("zero_rank", "rank must be at least 1"));
    }
    if let Some(d) = g.max_degree {
        if d < 2 {
            return Err(CliError::usage("degree_too_small", "max-degree must be at least 2"));
        }
    }
    Ok(Ctx {
        field: parse_field(&g.field)?,
        rank: g.rank,
        algebra: match g.algebra {
            Algebra::Metabelian => AlgebraKind::Metabelian,
            Algebra::Free => AlgebraKind::Free,
        },
        max_degree: g.max_degree,
        seed: g.seed,
    })
}

pub fn run(g: &Global, command: &Command) -> Result<Outcome, CliError> {
    let ctx = context(g)?;
    match command {
        Command::Normalize { expr } => normalize(&ctx, expr),
        Command::Mul { left, right } => mul(&ctx, left, right),
        Command::Fox { expr } => fox(&ctx, expr),
        Command::Basis { degree } => basis(&ctx, *degree),
        Command::Jacobian { file } => jacobian(&ctx, file),
        Command::Compose { first, second } => compose(&ctx, first, second),
        Command::Apply { file, expr } => apply(&ctx, file, expr),
        Command::Invert { file } => invert(&ctx, file),
        Command::CheinCheck { f, position } => chein_check(&ctx, f, *position),
        Command::IaLevel { file } => ia_level(&ctx, file),
        Command::IeLevel { file } => ie_level(&ctx, file),
        Command::Tangent { file } => tangent(&ctx, file),
        Command::Divergence { file } => divergence(&ctx, file),
        Command::Quotient { file } => quotient(&ctx, file),
        Command::WildCert { file, builtin } => wild_cert(&ctx, file.as_deref(), *builtin),
        Command::Rank2Search { degree, samples } => rank2_search(&ctx, *degree, *samples),
    }
}

enum Elem {
    A(AElement),
    B(BElement),
}

impl Elem {
    fn print(&self) -> String {
        match self {
            Elem::A(a) => print_a_element(a),
            Elem::B(b) => print_b_element(b),
        }
    }
}

fn element(ctx: &Ctx, text: &str) -> Result<Elem, CliError> {
    Ok(match ctx.algebra {
        AlgebraKind::Metabelian => Elem::A(parse_a_element(text, ctx.rank, ctx.field)?),
        AlgebraKind::Free => Elem::B(parse_b_element(text, ctx.rank, ctx.field)?),
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage("io", format!("{}: {e}", path.display())))
}

fn load_map(ctx: &Ctx, path: &Path, algebra: AlgebraKind, expected: Option<MapKind>) -> Result<ParsedMap, CliError> {
    Ok(parse_map(&read(path)?, ctx.rank, algebra, ctx.field, expected)?)
}

fn load_a_endo(ctx: &Ctx, path: &Path) -> Result<AEndomorphism, CliError> {
    match load_map(ctx, path, AlgebraKind::Metabelian, Some(MapKind::Endomorphism))? {
        ParsedMap::MetabelianEndomorphism(m) => Ok(m),
        _ => unreachable!("kind checked by parser"),
    }
}

fn load_b_endo(ctx: &Ctx, path: &Path) -> Result<BEndomorphism, CliError> {
    match load_map(ctx, path, AlgebraKind::Free, Some(MapKind::Endomorphism))? {
        ParsedMap::FreeEndomorphism(m) => Ok(m),
        _ => unreachable!("kind checked by parser"),
    }
}

fn load_b_derivation(ctx: &Ctx, path: &Path) -> Result<BDerivation, CliError> {
    match load_map(ctx, path, AlgebraKind::Free, Some(MapKind::Derivation))? {
        ParsedMap::FreeDerivation(d) => Ok(d),
        _ => unreachable!("kind checked by parser"),
    }
}

fn rows_of(text: &str) -> Vec<String> {
    text.lines()
        .filter_map(|l| l.split_once(" -> ").map(|(_, r)| r.to_string()))
        .collect()
}

fn map_json(text: &str) -> Value {
    let kind = text
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("kind: "))
        .unwrap_or("")
        .to_string();
    json!({ "kind": kind, "images": rows_of(text) })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn normalize(ctx: &Ctx, expr: &str) -> Result<Outcome, CliError> {
    let s = element(ctx, expr)?.print();
    Ok(Outcome::ok(
        s.clone(),
        json!({ "command": "normalize", "algebra": ctx.algebra_name(), "result": s }),
    ))
}

fn mul(ctx: &Ctx, left: &str, right: &str) -> Result<Outcome, CliError> {
    let s = match (element(ctx, left)?, element(ctx, right)?) {
        (Elem::A(a), Elem::A(b)) => print_a_element(&a.mul(&b)),
        (Elem::B(a), Elem::B(b)) => print_b_element(&a.mul(&b)),
        _ => unreachable!("same algebra"),
    };
    Ok(Outcome::ok(
        s.clone(),
        json!({ "command": "mul", "algebra": ctx.algebra_name(), "result": s }),
    ))
}

fn fox(ctx: &Ctx, expr: &str) -> Result<Outcome, CliError> {
    let cols: Vec<String> = match element(ctx, expr)? {
        Elem::A(a) => a.fox().iter().map(|p| p.to_string()).collect(),
        Elem::B(b) => b.fox().iter().map(|p| p.to_string()).collect(),
    };
    let mut human = String::new();
    for (i, c) in cols.iter().enumerate() {
        let _ = writeln!(human, "∂/∂x{} = {c}", i + 1);
    }
    Ok(Outcome::ok(
        human,
        json!({ "command": "fox", "algebra": ctx.algebra_name(), "derivatives": cols }),
    ))
}

fn basis(ctx: &Ctx, degree: usize) -> Result<Outcome, CliError> {
    if degree == 0 {
        return Err(CliError::usage("degree_too_small", "degree must be at least 1"));
    }
    let n = ctx.rank;
    let monomials: Vec<String> = match ctx.algebra {
        AlgebraKind::Free => enumerate_basis(n, degree).iter().map(|m| m.to_string()).collect(),
        AlgebraKind::Metabelian if degree == 1 => (1..=n).map(|i| format!("x{i}")).collect(),
        AlgebraKind::Metabelian => basis_keys(n, degree)
            .iter()
            .map(|k| {
                let mut s = format!("x{}", k.i);
                for l in std::iter::once(k.j).chain(k.tail.letters().iter().copied()) {
                    s = format!("({s}*x{l})");
                }
                s
            })
            .collect(),
    };
    let mut human = format!("dimension: {}\n", monomials.len());
    for m in &monomials {
        human.push_str(m);
        human.push('\n');
    }
    Ok(Outcome::ok(
        human,
        json!({
            "command": "basis",
            "algebra": ctx.algebra_name(),
            "rank": n,
            "degree": degree,
            "dimension": monomials.len(),
            "basis": monomials,
        }),
    ))
}

fn matrix_outcome(command: &str, rows: Vec<Vec<String>>) -> Outcome {
    let human: String = rows.iter().map(|r| format!("[{}]\n", r.join(", "))).collect();
    Outcome::ok(human, json!({ "command": command, "matrix": rows }))
}

fn jacobian(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let rows: Vec<Vec<String>> = match load_map(ctx, file, ctx.algebra, None)? {
        ParsedMap::MetabelianEndomorphism(m) => m
            .jacobian()
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect(),
        ParsedMap::FreeEndomorphism(m) => {
            let cols: Vec<_> = m.images().iter().map(BElement::fox).collect();
            (0..m.rank())
                .map(|i| cols.iter().map(|c| c[i].to_string()).collect())
                .collect()
        }
        ParsedMap::FreeDerivation(d) => d
            .jacobian()
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect(),
    };
    Ok(matrix_outcome("jacobian", rows))
}

fn map_outcome(command: &str, text: String, extra: Value) -> Outcome {
    let mut v = json!({ "command": command, "map": map_json(&text) });
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    Outcome::ok(text, v)
}

fn compose(ctx: &Ctx, first: &Path, second: &Path) -> Result<Outcome, CliError> {
    let f = load_map(ctx, first, ctx.algebra, Some(MapKind::Endomorphism))?;
    let g = load_map(ctx, second, ctx.algebra, Some(MapKind::Endomorphism))?;
    let text = match (f, g) {
        (ParsedMap::MetabelianEndomorphism(f), ParsedMap::MetabelianEndomorphism(g)) => print_a_map(&f.compose(&g)?),
        (ParsedMap::FreeEndomorphism(f), ParsedMap::FreeEndomorphism(g)) => print_b_map(&f.compose(&g)?),
        _ => unreachable!("same algebra and kind"),
    };
    Ok(map_outcome("compose", text, json!({})))
}

fn apply(ctx: &Ctx, file: &Path, expr: &str) -> Result<Outcome, CliError> {
    let m = load_map(ctx, file, ctx.algebra, None)?;
    let s = match (&m, element(ctx, expr)?) {
        (ParsedMap::MetabelianEndomorphism(m), Elem::A(a)) => print_a_element(&m.apply(&a)?),
        (ParsedMap::FreeEndomorphism(m), Elem::B(b)) => print_b_element(&m.apply(&b)?),
        (ParsedMap::FreeDerivation(d), Elem::B(b)) => print_b_element(&d.apply(&b)?),
        _ => unreachable!("same algebra"),
    };
    Ok(Outcome::ok(
        s.clone(),
        json!({ "command": "apply", "algebra": ctx.algebra_name(), "result": s }),
    ))
}

fn require_metabelian(ctx: &Ctx, command: &str) -> Result<(), CliError> {
    if ctx.algebra != AlgebraKind::Metabelian {
        return Err(CliError::usage(
            "unsupported_algebra",
            format!("{command} works in the metabelian algebra only"),
        ));
    }
    Ok(())
}

fn inversion_json(r: &InversionResult) -> Value {
    match r {
        InversionResult::Exact(inv) => json!({ "status": "exact", "inverse": map_json(&print_a_map(inv)) }),
        InversionResult::Truncated { partial, verified_degree } => json!({
            "status": "truncated",
            "verified_degree": verified_degree,
            "partial_inverse": map_json(&print_a_map(partial)),
        }),
    }
}

fn inversion_human(r: &InversionResult) -> String {
    match r {
        InversionResult::Exact(inv) => format!("status: exact\ninverse:\n{}", indent(&print_a_map(inv))),
        InversionResult::Truncated { partial, verified_degree } => format!(
            "status: truncated\nverified_degree: {verified_degree}\npartial_inverse:\n{}",
            indent(&print_a_map(partial))
        ),
    }
}

fn invert(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    require_metabelian(ctx, "invert")?;
    let phi = load_a_endo(ctx, file)?;
    let r = invert_ia(&phi, ctx.max_degree())?;
    let human = inversion_human(&r);
    let mut v = inversion_json(&r);
    v["command"] = json!("invert");
    v["max_degree"] = json!(ctx.max_degree());
    Ok(if r.is_exact() {
        Outcome::ok(human, v)
    } else {
        Outcome::negative(human, v)
    })
}

fn chein_check(ctx: &Ctx, f_text: &str, position: usize) -> Result<Outcome, CliError> {
    require_metabelian(ctx, "chein-check")?;
    let f = parse_a_element(f_text, ctx.rank, ctx.field)?;
    match chein_at(position, &f, ctx.rank) {
        Ok(delta) => {
            let inverse = chein_at(position, &f.neg(), ctx.rank)?;
            let verified = delta.compose(&inverse)?.is_identity() && inverse.compose(&delta)?.is_identity();
            let human = format!(
                "accepted\nautomorphism:\n{}inverse:\n{}inverse_verified: {verified}\n",
                indent(&print_a_map(&delta)),
                indent(&print_a_map(&inverse))
            );
            Ok(Outcome::ok(
                human,
                json!({
                    "command": "chein-check",
                    "accepted": true,
                    "position": position,
                    "automorphism": map_json(&print_a_map(&delta)),
                    "inverse": map_json(&print_a_map(&inverse)),
                    "inverse_verified": verified,
                }),
            ))
        }
        Err(mfa_core::Error::NotChein { witness }) => {
            let w = witness.to_string();
            Ok(Outcome::negative(
                format!("rejected: ∂f/∂x{position} = {w}\n"),
                json!({
                    "command": "chein-check",
                    "accepted": false,
                    "position": position,
                    "reason": "nonzero_fox_derivative",
                    "witness": w,
                }),
            ))
        }
        Err(mfa_core::Error::NotInASquared) => Ok(Outcome::negative(
            "rejected: f has a nonzero linear part\n",
            json!({
                "command": "chein-check",
                "accepted": false,
                "position": position,
                "reason": "not_in_a_squared",
            }),
        )),
        Err(e) => Err(e.into()),
    }
}

fn level_json(l: Level) -> Value {
    match l {
        Level::Exactly(k) => json!({ "exact": true, "value": k }),
        Level::AtLeast(k) => json!({ "exact": false, "at_least": k }),
    }
}

fn ia_level(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    require_metabelian(ctx, "ia-level")?;
    let phi = load_a_endo(ctx, file)?;
    if !phi.is_ia() {
        return Err(mfa_core::Error::NotIA.into());
    }
    let l = phi.ia_level(ctx.max_degree());
    Ok(Outcome::ok(
        format!("ia_level: {l}\n"),
        json!({ "command": "ia-level", "ia_level": level_json(l) }),
    ))
}

fn ie_level(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let eps = load_b_endo(ctx, file)?;
    let l = eps.ie_level(ctx.max_degree());
    Ok(Outcome::ok(
        format!("ie_level: {l}\n"),
        json!({ "command": "ie-level", "ie_level": level_json(l) }),
    ))
}

fn tangent(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let eps = load_b_endo(ctx, file)?;
    let t = eps.tangent()?;
    let degree = t.homogeneous_degree();
    Ok(map_outcome("tangent", print_derivation(&t), json!({ "degree": degree })))
}

fn divergence(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let d = load_b_derivation(ctx, file)?;
    let div = d.divergence().to_string();
    Ok(Outcome::ok(
        format!("{div}\n"),
        json!({ "command": "divergence", "divergence": div, "zero": d.divergence().is_zero() }),
    ))
}

fn quotient(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let eps = load_b_endo(ctx, file)?;
    Ok(map_outcome("quotient", print_a_map(&eps.quotient()), json!({})))
}

fn wild_cert(ctx: &Ctx, file: Option<&Path>, builtin: Option<Builtin>) -> Result<Outcome, CliError> {
    let eps = match (file, builtin) {
        (Some(path), _) => load_b_endo(ctx, path)?,
        // τ is certified through its lift σ
        (None, Some(_)) => builtin_sigma(ctx.field, ctx.rank)?,
        (None, None) => return Err(CliError::usage("missing_argument", "give FILE or --builtin")),
    };
    let cert = certify_absolutely_wild(&eps, ctx.max_degree())?;
    let tangent = print_derivation(&cert.tangent);
    let induced = print_a_map(&cert.induced);
    let lift = print_b_map(&eps);

    let mut human = String::new();
    let _ = writeln!(human, "verdict: {}", cert.verdict);
    let _ = writeln!(human, "ie_level: {}", cert.ie_level);
    let _ = writeln!(human, "ideal_min_degree: {}", cert.ideal_min_degree);
    let _ = writeln!(human, "degree_check: {}", cert.degree_check);
    let _ = write!(human, "lift:\n{}", indent(&lift));
    let _ = write!(human, "tangent:\n{}", indent(&tangent));
    let _ = writeln!(human, "divergence: {}", cert.divergence_value);
    let _ = write!(human, "induced:\n{}", indent(&induced));
    match &cert.automorphism_evidence {
        Some(r) => {
            let _ = write!(human, "automorphism_evidence:\n{}", indent(&inversion_human(r)));
        }
        None => {
            let _ = writeln!(human, "automorphism_evidence: not IA");
        }
    }

    let v = json!({
        "command": "wild-cert",
        "builtin": builtin.map(|b| match b { Builtin::Sigma => "sigma", Builtin::Tau => "tau" }),
        "verdict": cert.verdict.to_string(),
        "ie_level": level_json(cert.ie_level),
        "ideal_min_degree": cert.ideal_min_degree,
        "degree_check": cert.degree_check,
        "lift": map_json(&lift),
        "tangent": map_json(&tangent),
        "divergence": cert.divergence_value.to_string(),
        "induced": map_json(&induced),
        "automorphism_evidence": cert.automorphism_evidence.as_ref().map(inversion_json),
        "max_degree": ctx.max_degree(),
    });
    Ok(if cert.verdict == Verdict::AbsolutelyWild {
        Outcome::ok(human, v)
    } else {
        Outcome::negative(human, v)
    })
}

fn rank2_search(ctx: &Ctx, degree: usize, samples: usize) -> Result<Outcome, CliError> {
    if degree < 2 {
        return Err(CliError::usage("degree_too_small", "degree must be at least 2"));
    }
    let inversion_degree = ctx.max_degree.unwrap_or(2 * degree);
    let report = rank2_rigidity_search(ctx.field, degree, samples, ctx.seed, inversion_degree)?;
    let found: Vec<String> = report
        .counterexamples()
        .iter()
        .map(|e| print_a_map(&e.endomorphism))
        .collect();
    let min_verified = report
        .exhaustive
        .iter()
        .chain(&report.random)
        .filter_map(|e| e.verified_degree)
        .min();

    let mut human = String::new();
    let _ = writeln!(human, "rank: 2");
    let _ = writeln!(human, "degree_bound: {degree}");
    let _ = writeln!(human, "inversion_degree: {inversion_degree}");
    let _ = writeln!(human, "seed: {}", ctx.seed);
    let _ = writeln!(human, "control_exact: {}", report.control_exact);
    let _ = writeln!(human, "exhaustive_candidates: {}", report.exhaustive.len());
    let _ = writeln!(human, "random_samples: {}", report.random.len());
    if let Some(m) = min_verified {
        let _ = writeln!(human, "min_verified_degree: {m}");
    }
    let _ = writeln!(human, "exact_inverses_found: {}", found.len());
    for f in &found {
        let _ = write!(human, "counterexample:\n{}", indent(f));
    }

    let v = json!({
        "command": "rank2-search",
        "degree_bound": degree,
        "samples": samples,
        "seed": ctx.seed,
        "inversion_degree": inversion_degree,
        "control_exact": report.control_exact,
        "exhaustive_candidates": report.exhaustive.len(),
        "random_samples": report.random.len(),
        "min_verified_degree": min_verified,
        "counterexamples": found.iter().map(|f| map_json(f)).collect::<Vec<_>>(),
    });
    Ok(if report.control_exact && found.is_empty() {
        Outcome::ok(human, v)
    } else {
        Outcome::negative(human, v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), Field::Rationals);
        assert_eq!(parse_field("GF:5").unwrap(), Field::Prime(5));
        assert_eq!(parse_field("gf:4").unwrap_err().code, "not_prime");
        assert_eq!(parse_field("r").unwrap_err().code, "invalid_field");
    }

    #[test]
    fn map_json_rows() {
        let v = map_json("kind: endomorphism\nx1 -> x1\nx2 -> - x2\n");
        assert_eq!(v["kind"], "endomorphism");
        assert_eq!(v["images"], json!(["x1", "- x2"]));
    }
}
