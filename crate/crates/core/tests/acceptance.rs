//! The acceptance criteria, one line each. Runs without the libtest harness so the
//! verdict lines always reach stdout; exits nonzero if a criterion fails other than
//! the documented printed-value discrepancy in criterion 1.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use zollstock::base_algebra::BaseOperad;
use zollstock::mtilde::{important_a_exhaustive, operad_axiom_check, MTilde, MTildeElement};
use zollstock::perm::Perm;
use zollstock::report::Check;
use zollstock::ring_r::r_monomial;
use zollstock::rt0::leading_term_check;
use zollstock::super_operad::{es_axiom_check, vowa_exhaustive, SuperSpace};
use zollstock::verify::{monomials_up_to, run_suite, Options};
use zollstock::{Monomial, Polynomial, RT0Element};

struct Outcome {
    pass: bool,
    detail: String,
    /// failing sub-checks that are known discrepancies in the printed values
    known: Vec<String>,
}

fn outcome(checks: &[Check]) -> Outcome {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let detail = match failed.first() {
        None => format!("{} checks", checks.len()),
        Some(c) => format!("{} failed: {}", c.id, c.counterexample.as_deref().unwrap_or("")),
    };
    Outcome { pass: failed.is_empty(), detail, known: Vec::new() }
}

fn suite(name: &str, opts: Options) -> Vec<Check> {
    run_suite(name, &opts).expect("suite runs").checks
}

fn only<'a>(checks: Vec<Check>, prefix: &'a str) -> impl Iterator<Item = Check> + 'a {
    checks.into_iter().filter(move |c| c.id.starts_with(prefix))
}

fn x(s: &str) -> RT0Element {
    s.parse().unwrap()
}

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let t1 = r_monomial(&[1]);
    let mut checks = vec![
        Check::equal("t1·t1", vec![], &t1.r_mul(&t1).to_polynomial(), &p("t1^2 + 2*t1*t2")),
        Check::equal(
            "t1·t1t2",
            vec![],
            &t1.r_mul(&r_monomial(&[1, 1])).to_polynomial(),
            &p("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"),
        ),
    ];
    for n in 1..=6usize {
        let prod = Monomial::with_t0(0, &vec![1; n - 1]);
        checks.push(Check::equal(
            format!("1^(⊙{n})"),
            vec![],
            &RT0Element::one().odot_pow(n),
            &RT0Element::from_monomial(&prod).unwrap(),
        ));
    }
    let printed = x("t0^2*t1 + 2*t0*t1^2 + 4*t0*t1*t2 + t1^3 + 2*t1^2*t2 + 2*t1*t2^2 + 6*t1*t2*t3");
    let iota = x("t0^2*t1").iota();
    checks.push(Check::equal("ι(t0^2*t1)", vec![], &iota, &printed));
    let mut out = outcome(&checks);

    // The printed ι value is not the image of t0^2 t1 under any ·-homomorphism: its level-3
    // projection differs from (t0+s)^2 s with s = t1+t2+t3. The computed value satisfies it.
    let s = p("t1 + t2 + t3");
    let oracle = &(&p("t0") + &s).pow(2) * &s;
    let computed_ok = iota.project_to_level(3) == oracle;
    let printed_ok = printed.project_to_level(3) == oracle;
    let others_pass = checks.iter().filter(|c| c.id != "ι(t0^2*t1)").all(|c| c.pass);
    if !out.pass && others_pass && computed_ok && !printed_ok {
        out.known.push(format!(
            "printed ι(t0^2*t1) has t1^2*t2, t1*t2^2 coefficients 2, computed {} (matches projection oracle)",
            iota
        ));
    }
    out
}

fn criterion_7() -> Outcome {
    let checks: Vec<Check> = monomials_up_to(5)
        .into_iter()
        .map(|m| {
            let ok = leading_term_check(&m);
            Check::new(format!("1⊙{m}"), Vec::<(String, String)>::new(), (!ok).then(|| m.to_string()))
        })
        .collect();
    outcome(&checks)
}

fn criterion_9() -> Outcome {
    let trivial = BaseOperad::trivial();
    let dual = BaseOperad::dual_numbers();
    let checks = vec![
        MTilde::new(&trivial).important_b_exhaustive(3, 3).unwrap(),
        MTilde::new(&dual).important_b_exhaustive(2, 3).unwrap(),
    ];
    outcome(&checks)
}

fn criterion_10() -> Outcome {
    let mut checks = Vec::new();
    for dim in 1..=3 {
        let space = SuperSpace::standard(dim).unwrap();
        checks.extend(es_axiom_check(&space, 3).into_iter().map(|mut c| {
            c.id = format!("dim{dim}-{}", c.id);
            c
        }));
        let mut v = vowa_exhaustive(&space, 3).unwrap();
        v.id = format!("dim{dim}-{}", v.id);
        checks.push(v);
    }
    outcome(&checks)
}

fn criterion_11() -> Outcome {
    let base = BaseOperad::trivial();
    let mut checks = operad_axiom_check(&base, 3, 2);
    // m = n = 1: axiom (2) is ι(x⊙y) = ι(y)⊙ι(x), axiom (4) is ⊙-associativity.
    let op = MTilde::new(&base);
    let swap = Perm::transposition(2, 0, 1);
    let ms: Vec<MTildeElement> = monomials_up_to(2)
        .iter()
        .map(|m| MTildeElement::unary(RT0Element::from_monomial(m).unwrap()))
        .collect();
    let mut failure = None;
    for a in &ms {
        for b in &ms {
            let (xa, xb) = (a.as_unary().unwrap(), b.as_unary().unwrap());
            let lhs = op.act(&swap, &op.compose(a, b, 1).unwrap()).unwrap();
            if lhs != MTildeElement::unary(xb.iota().odot(&xa.iota())) {
                failure = Some(format!("axiom 2 at x={xa} y={xb}"));
            }
            for c in &ms {
                let l = op.compose(&op.compose(a, b, 1).unwrap(), c, 1).unwrap();
                let r = MTildeElement::unary(xa.odot(xb).odot(c.as_unary().unwrap()));
                if l != r {
                    failure = Some(format!("axiom 4 at x={xa} y={xb}"));
                }
            }
        }
    }
    checks.push(Check::new("unary-reduction", Vec::<(String, String)>::new(), failure));
    outcome(&checks)
}

fn criterion_12() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_zollstock")).args(["verify", "all", "--json"]).output().unwrap();
    let schema_text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/docs/report.schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let report: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return Outcome { pass: false, detail: format!("output is not JSON: {e}"), known: vec![] },
    };
    let errors: Vec<String> = match compiled.validate(&report) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| e.to_string()).collect(),
    };
    let exit = out.status.code();
    Outcome {
        pass: exit == Some(0) && errors.is_empty(),
        detail: format!(
            "exit {:?}, {} checks, schema errors {}{}",
            exit,
            report["totals"]["checks"],
            errors.len(),
            errors.first().map(|e| format!(": {e}")).unwrap_or_default()
        ),
        known: vec![],
    }
}

fn main() -> ExitCode {
    let defaults = Options::default;
    let criteria: Vec<(u32, &str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "worked values", Duration::from_secs(1), Box::new(criterion_1)),
        (2, "monomial count 2^n, n <= 10", Duration::from_secs(1), Box::new(move || {
            outcome(&suite("dim", Options { max_degree: Some(10), ..defaults() }))
        })),
        (3, "1⊙(t0+t1)^n = t1·(t0+t1)^n, n <= 6", Duration::from_secs(5), Box::new(move || {
            outcome(&suite("identity", Options { max_n: Some(6), ..defaults() }))
        })),
        (4, "ι involution, ·-homomorphism, ⊙-antihomomorphism", Duration::from_secs(30), Box::new(move || {
            let checks: Vec<Check> = only(suite("iota", Options { max_degree: Some(5), ..defaults() }), "iota-").collect();
            outcome(&checks)
        })),
        (5, "⊙ associativity, t0-linearity, Q_k tower", Duration::from_secs(60), Box::new(move || {
            let checks: Vec<Check> = suite("odot", Options { max_degree: Some(4), max_n: Some(6), seed: 0, ..defaults() })
                .into_iter()
                .filter(|c| ["odot-associative", "odot-left-t0-linear", "q-tower-compatibility"].contains(&c.id.as_str()))
                .collect();
            assert_eq!(checks.len(), 3);
            outcome(&checks)
        })),
        (6, "⊙-word matrices invertible, expansions round-trip", Duration::from_secs(60), Box::new(move || {
            let checks: Vec<Check> = suite("structure", Options { max_degree: Some(6), ..defaults() })
                .into_iter()
                .filter(|c| !c.id.starts_with("one-odot"))
                .collect();
            outcome(&checks)
        })),
        (7, "1⊙x leading term, deg x <= 5", Duration::from_secs(10), Box::new(criterion_7)),
        (8, "ψ̃ recursion in arity 1, d0+d1 <= 6", Duration::from_secs(10), Box::new(|| {
            outcome(&[important_a_exhaustive(6).unwrap()])
        })),
        (9, "ψ̃/φ̃ recursion, trivial and dual-number bases", Duration::from_secs(60), Box::new(criterion_9)),
        (10, "super operad axioms and pairing identity, dim <= 3", Duration::from_secs(120), Box::new(criterion_10)),
        (11, "extended operad axioms, trivial base", Duration::from_secs(60), Box::new(criterion_11)),
        (12, "verify all exits 0, JSON matches schema", Duration::from_secs(120), Box::new(criterion_12)),
    ];

    let mut unexpected = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let pass = out.pass && in_time;
        let timing = if in_time { String::new() } else { format!(" (over the {:?} limit)", limit) };
        println!(
            "criterion {n:>2} {}: {name} [{:.2?}{timing}] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            out.detail
        );
        for k in &out.known {
            println!("             known discrepancy: {k}");
        }
        if !pass && (out.known.is_empty() || !in_time) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
