//! Verification suites behind `zollstock verify`. Each suite returns one [`Check`]
//! per identity family; randomized families draw from a ChaCha stream seeded by the
//! caller, so a report is reproducible from its seed and bounds.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base_algebra::{AlgElement, BaseOperad};
use crate::basis::{evaluate_expansion, expand, BasisKind, DegreeBasis};
use crate::mtilde::{important_a_exhaustive, operad_axiom_check, MTilde, MTildeElement};
use crate::perm::{all_perms, perms_fixing_zero, Perm};
use crate::poly::{scalar, Monomial, Polynomial, Scalar};
use crate::report::{Check, VerdictReport};
use crate::ring_r::{decode_rd, r_monomial, RElement};
use crate::rt0::{concatenate, leading_term_check, monomials_of_degree, q_k, RT0Element};
use crate::super_operad::{basis_tuples, es_axiom_check, es_permute, pair, vowa_exhaustive, SuperSpace, SuperTensor};
use crate::{Error, Result};

pub const SUITES: &[&str] = &[
    "ring",
    "iota",
    "odot",
    "dim",
    "identity",
    "structure",
    "super",
    "vowa",
    "important",
    "operad-axioms",
    "all",
];

/// Optional overrides; every suite has its own defaults.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub max_degree: Option<u32>,
    pub max_n: Option<usize>,
    pub max_arity: Option<usize>,
    pub dim: Option<usize>,
    pub base: Option<BaseOperad>,
    pub seed: u64,
}

struct Run<'a> {
    opts: &'a Options,
    bounds: BTreeMap<String, String>,
    rng: ChaCha8Rng,
}

impl Run<'_> {
    fn bound<T: ToString + Copy>(&mut self, key: &str, value: Option<T>, default: T) -> T {
        let v = value.unwrap_or(default);
        self.bounds.insert(key.into(), v.to_string());
        v
    }
}

/// Runs a suite by name.
pub fn run_suite(name: &str, opts: &Options) -> Result<VerdictReport> {
    let start = Instant::now();
    let mut run = Run { opts, bounds: BTreeMap::new(), rng: ChaCha8Rng::seed_from_u64(opts.seed) };
    let checks = match name {
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().filter(|s| **s != "all") {
                let mut sub = Run {
                    opts,
                    bounds: BTreeMap::new(),
                    rng: ChaCha8Rng::seed_from_u64(opts.seed),
                };
                let checks = suite_checks(s, &mut sub)?;
                for (k, v) in sub.bounds {
                    run.bounds.insert(format!("{s}.{k}"), v);
                }
                out.extend(checks);
            }
            out
        }
        _ => suite_checks(name, &mut run)?,
    };
    Ok(VerdictReport::new(name, opts.seed, run.bounds, checks, start.elapsed().as_millis() as u64))
}

fn suite_checks(name: &str, run: &mut Run) -> Result<Vec<Check>> {
    match name {
        "ring" => ring_suite(run),
        "iota" => iota_suite(run),
        "odot" => odot_suite(run),
        "dim" => dim_suite(run),
        "identity" => identity_suite(run),
        "structure" => structure_suite(run),
        "super" => super_suite(run),
        "vowa" => vowa_suite(run),
        "important" => important_suite(run),
        "operad-axioms" => operad_suite(run),
        _ => Err(Error::Usage(format!("unknown suite `{name}` (known: {})", SUITES.join(", ")))),
    }
}

fn x(s: &str) -> RT0Element {
    s.parse().expect("literal element")
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("literal polynomial")
}

/// Every monomial of `R[t0]` of degree `<= d`.
pub fn monomials_up_to(d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(monomials_of_degree).collect()
}

fn elem(m: &Monomial) -> RT0Element {
    RT0Element::from_monomial(m).expect("enumerated monomials have prefix support")
}

/// First failure over a family, or the instance count.
fn family<I, F>(id: &str, mut params: Vec<(&str, String)>, items: I, mut test: F) -> Check
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<String>,
{
    let mut count = 0usize;
    let mut failure = None;
    for item in items {
        count += 1;
        if let Some(msg) = test(item) {
            failure = Some(msg);
            break;
        }
    }
    params.push(("instances", count.to_string()));
    Check::new(id, params, failure)
}

fn random_r_element(rng: &mut ChaCha8Rng, degree: u32) -> RElement {
    let pool: Vec<Monomial> = monomials_of_degree(degree).into_iter().filter(|m| m.t0_exponent() == 0).collect();
    let mut poly = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = &pool[rng.gen_range(0..pool.len())];
        poly.add_term(m.clone(), scalar(rng.gen_range(-3..=3)));
    }
    RElement::from_polynomial(&poly).expect("pool monomials lie in R")
}

fn random_rt0_monomial(rng: &mut ChaCha8Rng, max_degree: u32) -> Monomial {
    let pool = monomials_of_degree(rng.gen_range(0..=max_degree));
    pool[rng.gen_range(0..pool.len())].clone()
}

fn ring_suite(run: &mut Run) -> Result<Vec<Check>> {
    let samples = run.bound("samples", None, 40usize);
    let max_level = run.bound("max_level", run.opts.max_degree.map(|d| d as usize), 5usize);
    let t1 = r_monomial(&[1]);
    let mut checks = vec![
        Check::equal(
            "r-mul-t1-t1",
            vec![],
            &t1.r_mul(&t1).to_polynomial(),
            &p("t1^2 + 2*t1*t2"),
        ),
        Check::equal(
            "r-mul-t1-t1t2",
            vec![],
            &t1.r_mul(&r_monomial(&[1, 1])).to_polynomial(),
            &p("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3"),
        ),
    ];
    let mut triples = Vec::new();
    for _ in 0..samples {
        let da = run.rng.gen_range(0..=2);
        let db = run.rng.gen_range(0..=2);
        let dc = run.rng.gen_range(0..=(6 - da - db).min(2));
        triples.push((
            random_r_element(&mut run.rng, da),
            random_r_element(&mut run.rng, db),
            random_r_element(&mut run.rng, dc),
        ));
    }
    checks.push(family("r-mul-commutative", vec![], &triples, |(f, g, _)| {
        let (a, b) = (f.r_mul(g), g.r_mul(f));
        (a != b).then(|| format!("f={f} g={g}: fg={a} gf={b}"))
    }));
    checks.push(family("r-mul-associative", vec![], &triples, |(f, g, h)| {
        let (a, b) = (f.r_mul(g).r_mul(h), f.r_mul(&g.r_mul(h)));
        (a != b).then(|| format!("f={f} g={g} h={h}: (fg)h={a} f(gh)={b}"))
    }));
    checks.push(family("r-mul-unit", vec![], &triples, |(f, _, _)| {
        (RElement::one().r_mul(f) != *f).then(|| format!("1*{f} != {f}"))
    }));
    checks.push(family("r-mul-grading", vec![], &triples, |(f, g, _)| {
        let h = f.r_mul(g).to_polynomial();
        let expect = f.to_polynomial().degree().zip(g.to_polynomial().degree()).map(|(a, b)| a + b);
        (!h.is_zero() && (!h.is_homogeneous() || h.degree() != expect)).then(|| format!("f={f} g={g}: {h}"))
    }));
    let pairs: Vec<(&RElement, &RElement, usize)> =
        triples.iter().flat_map(|(f, g, _)| (0..=max_level).map(move |d| (f, g, d))).collect();
    checks.push(family("projection-homomorphism", vec![], pairs.iter().copied(), |(f, g, d)| {
        let lhs = f.r_mul(g).project_to_level(d).value().clone();
        let rhs = f.project_to_level(d).value() * g.project_to_level(d).value();
        (lhs != rhs).then(|| format!("f={f} g={g} d={d}: {lhs} vs {rhs}"))
    }));
    let singles: Vec<(&RElement, usize)> =
        triples.iter().flat_map(|(f, g, h)| [f, g, h]).flat_map(|f| (1..=max_level).map(move |d| (f, d))).collect();
    checks.push(family("tower-compatibility", vec![], singles.iter().copied(), |(f, d)| {
        let down = f.project_to_level(d).restrict_level().ok()?;
        (down.value() != f.project_to_level(d - 1).value()).then(|| format!("f={f} d={d}"))
    }));
    checks.push(family("decode-project-roundtrip", vec![], singles.iter().copied(), |(f, d)| {
        if f.top_index().unwrap_or(0) > d {
            return None;
        }
        match decode_rd(f.project_to_level(d).value(), d) {
            Ok(g) if g == *f => None,
            Ok(g) => Some(format!("f={f} d={d}: decoded {g}")),
            Err(e) => Some(format!("f={f} d={d}: {e}")),
        }
    }));
    checks.push(Check::new(
        "decode-rejects-t2",
        Vec::<(String, String)>::new(),
        decode_rd(&p("t2"), 2).is_ok().then(|| "t2 decoded at level 2".to_string()),
    ));
    Ok(checks)
}

fn iota_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_degree = run.bound("max_degree", run.opts.max_degree, 5u32);
    let anti_degree = run.bound("anti_degree", None, max_degree.min(4));
    let ms = monomials_up_to(max_degree);
    let mut checks = Vec::new();
    // Projection to level 3 is a ring map sending t1 to s = t1+t2+t3 and t0 to itself,
    // so it sends ι(t0^2 t1) = ι(t0)·ι(t0)·t1 to (t0+s)^2 s.
    let s = p("t1 + t2 + t3");
    let oracle = &(&p("t0") + &s).pow(2) * &s;
    checks.push(Check::equal(
        "iota-t0^2*t1-projection",
        vec![("level", "3".into())],
        &x("t0^2*t1").iota().project_to_level(3),
        &oracle,
    ));
    checks.push(Check::equal("iota-t0", vec![], &x("t0").iota(), &x("-t0 - t1")));
    checks.push(Check::equal("iota-reverses-I2", vec![], &x("t1*t2^2").iota(), &x("t1^2*t2")));
    checks.push(family("iota-involution", vec![("max_degree", max_degree.to_string())], &ms, |m| {
        let e = elem(m);
        let back = e.iota().iota();
        (back != e).then(|| format!("ι(ι({e})) = {back}"))
    }));
    let dot_pairs: Vec<(&Monomial, &Monomial)> = ms
        .iter()
        .flat_map(|a| ms.iter().filter(move |b| a.degree() + b.degree() <= max_degree).map(move |b| (a, b)))
        .collect();
    checks.push(family(
        "iota-dot-homomorphism",
        vec![("max_total_degree", max_degree.to_string())],
        dot_pairs,
        |(a, b)| {
            let (ea, eb) = (elem(a), elem(b));
            let lhs = ea.dot_mul(&eb).iota();
            let rhs = ea.iota().dot_mul(&eb.iota());
            (lhs != rhs).then(|| format!("x={a} y={b}: ι(x·y)={lhs} ι(x)·ι(y)={rhs}"))
        },
    ));
    let anti_pairs: Vec<(&Monomial, &Monomial)> = ms
        .iter()
        .flat_map(|a| ms.iter().filter(move |b| a.degree() + b.degree() <= anti_degree).map(move |b| (a, b)))
        .collect();
    checks.push(family(
        "iota-odot-antihomomorphism",
        vec![("max_total_degree", anti_degree.to_string())],
        anti_pairs,
        |(a, b)| {
            let (ea, eb) = (elem(a), elem(b));
            let lhs = ea.odot(&eb).iota();
            let rhs = eb.iota().odot(&ea.iota());
            (lhs != rhs).then(|| format!("x={a} y={b}: ι(x⊙y)={lhs} ι(y)⊙ι(x)={rhs}"))
        },
    ));
    Ok(checks)
}

fn odot_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_degree = run.bound("max_degree", run.opts.max_degree, 4u32);
    let linear_degree = run.bound("linearity_degree", None, 3u32);
    let max_k = run.bound("max_k", run.opts.max_n, 6usize);
    let samples = run.bound("samples", None, 40usize);
    let ms = monomials_up_to(max_degree);
    let mut checks = vec![
        Check::equal("odot-1-1", vec![], &x("1").odot(&x("1")), &x("t1")),
        Check::equal("odot-t0-1", vec![], &x("t0").odot(&x("1")), &x("t0*t1")),
        Check::equal("odot-1-t0", vec![], &x("1").odot(&x("t0")), &x("t0*t1 + t1^2 + t1*t2")),
        Check::equal("odot-1-t0+t1", vec![], &x("1").odot(&x("t0 + t1")), &x("t0*t1 + t1^2 + 2*t1*t2")),
    ];
    checks.push(family("odot-power-of-1", vec![("max_n", "6".into())], 1..=6usize, |n| {
        let lhs = RT0Element::one().odot_pow(n);
        let exps = vec![1; n - 1];
        let rhs = elem(&Monomial::with_t0(0, &exps));
        (lhs != rhs).then(|| format!("1^(⊙{n}) = {lhs}"))
    }));
    let msr: &[Monomial] = &ms;
    let triples: Vec<(&Monomial, &Monomial, &Monomial)> = msr
        .iter()
        .flat_map(|a| {
            msr.iter().flat_map(move |b| {
                msr.iter()
                    .filter(move |c| a.degree() + b.degree() + c.degree() <= max_degree)
                    .map(move |c| (a, b, c))
            })
        })
        .collect();
    checks.push(family(
        "odot-associative",
        vec![("max_total_degree", max_degree.to_string())],
        triples,
        |(a, b, c)| {
            let (ea, eb, ec) = (elem(a), elem(b), elem(c));
            let lhs = ea.odot(&eb).odot(&ec);
            let rhs = ea.odot(&eb.odot(&ec));
            (lhs != rhs).then(|| format!("x={a} y={b} z={c}: (x⊙y)⊙z={lhs} x⊙(y⊙z)={rhs}"))
        },
    ));
    let low = monomials_up_to(linear_degree);
    let low: &[Monomial] = &low;
    let lin: Vec<(u32, &Monomial, &Monomial)> =
        (1..=3).flat_map(|a| low.iter().flat_map(move |m| low.iter().map(move |n| (a, m, n)))).collect();
    checks.push(family(
        "odot-left-t0-linear",
        vec![("max_a", "3".into()), ("max_degree", linear_degree.to_string())],
        lin,
        |(a, m, n)| {
            let (em, en) = (elem(m), elem(n));
            let lhs = em.mul_t0_power(a).odot(&en);
            let rhs = em.odot(&en).mul_t0_power(a);
            (lhs != rhs).then(|| format!("a={a} x={m} y={n}: {lhs} vs {rhs}"))
        },
    ));
    let pairs: Vec<(&Monomial, &Monomial)> = ms.iter().flat_map(|a| ms.iter().map(move |b| (a, b))).collect();
    checks.push(family("odot-grading", vec![], pairs.iter().copied(), |(a, b)| {
        let z = elem(a).odot(&elem(b));
        let d = a.degree() + b.degree() + 1;
        (!z.is_homogeneous() || z.degree() != Some(d)).then(|| format!("x={a} y={b}: {z}"))
    }));
    checks.push(family(
        "odot-concatenation",
        vec![],
        pairs.iter().copied().filter(|(_, b)| b.t0_exponent() == 0),
        |(a, b)| {
            let lhs = elem(a).odot(&elem(b));
            let rhs = elem(&concatenate(a, b));
            (lhs != rhs).then(|| format!("x={a} y={b}: {lhs} vs {rhs}"))
        },
    ));
    let mut random_pairs = Vec::new();
    for _ in 0..samples {
        let f = random_rt0_monomial(&mut run.rng, 3);
        let g = random_rt0_monomial(&mut run.rng, 3);
        random_pairs.push((f, g));
    }
    let tower: Vec<(&Monomial, &Monomial, usize)> =
        random_pairs.iter().flat_map(|(f, g)| (1..max_k).map(move |k| (f, g, k))).collect();
    checks.push(family("q-tower-compatibility", vec![("max_k", max_k.to_string())], tower, |(f, g, k)| {
        let up = q_k(f, g, k + 1).set_var_zero(k + 1);
        let here = q_k(f, g, k);
        (up != here).then(|| format!("f={f} g={g} k={k}: {up} vs {here}"))
    }));
    checks.push(Check::equal("q3-1-1", vec![], &q_k(&Monomial::one(), &Monomial::one(), 3), &p("t1 + t2 + t3")));
    Ok(checks)
}

/// Independent count: exponent vectors `(a0..an)` of total degree `n` whose positive
/// support is a prefix `{1..k}`.
fn brute_force_count(n: u32) -> usize {
    fn rec(remaining: u32, seen_zero: bool, count: &mut usize) {
        if remaining == 0 {
            *count += 1;
            return;
        }
        if seen_zero {
            return;
        }
        // next positive-index variable: either absent (support ends) or exponent >= 1
        for a in 1..=remaining {
            rec(remaining - a, false, count);
        }
    }
    let mut total = 0;
    for a0 in 0..=n {
        let mut c = 0;
        rec(n - a0, false, &mut c);
        total += c;
    }
    total
}

fn dim_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_degree = run.bound("max_degree", run.opts.max_degree, 10u32);
    Ok((0..=max_degree)
        .map(|n| {
            let enumerated = monomials_of_degree(n).len();
            let brute = brute_force_count(n);
            let failure = (enumerated != 1 << n || brute != 1 << n)
                .then(|| format!("degree {n}: enumerated {enumerated}, brute force {brute}, expected {}", 1u64 << n));
            Check::new(format!("dim-{n}"), [("count", enumerated.to_string())], failure)
        })
        .collect())
}

fn identity_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_n = run.bound("max_n", run.opts.max_n, 6usize);
    let g = x("t0 + t1");
    Ok((0..=max_n as u32)
        .map(|n| {
            let pow = g.dot_pow(n);
            let lhs = RT0Element::one().odot(&pow);
            let rhs = x("t1").dot_mul(&pow);
            Check::equal(format!("identity-{n}"), vec![], &lhs, &rhs)
        })
        .collect())
}

fn structure_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_degree = run.bound("max_degree", run.opts.max_degree, 6u32);
    let roundtrip_degree = run.bound("roundtrip_degree", None, max_degree.saturating_sub(1));
    let mut checks = Vec::new();
    for kind in [BasisKind::Structure, BasisKind::Iota] {
        let label = match kind {
            BasisKind::Structure => "structure",
            BasisKind::Iota => "iota-basis",
        };
        for n in 0..=max_degree {
            let b = DegreeBasis::new(n, kind);
            let rank = b.rank();
            checks.push(Check::new(
                format!("{label}-matrix-{n}"),
                [("size", (1usize << n).to_string()), ("rank", rank.to_string())],
                (rank != 1 << n).then(|| format!("degree {n}: rank {rank} < {}", 1 << n)),
            ));
        }
        checks.push(family(
            &format!("{label}-roundtrip"),
            vec![("max_degree", roundtrip_degree.to_string())],
            monomials_up_to(roundtrip_degree),
            |m| {
                let e = elem(&m);
                match expand(&e, kind) {
                    Ok(terms) if evaluate_expansion(&terms, kind) == e => None,
                    Ok(_) => Some(format!("{m}: expansion does not re-evaluate")),
                    Err(err) => Some(format!("{m}: {err}")),
                }
            },
        ));
    }
    checks.push(family(
        "one-odot-leading-term",
        vec![("max_degree", roundtrip_degree.to_string())],
        monomials_up_to(roundtrip_degree),
        |m| (!leading_term_check(&m)).then(|| format!("1⊙{m} = {}", RT0Element::one().odot(&elem(&m)))),
    ));
    Ok(checks)
}

/// Koszul sign of `π` on a basis tuple from its inversions.
pub fn koszul_sign(space: &SuperSpace, pi: &Perm, idx: &[usize]) -> Scalar {
    let mut flips = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if pi.apply(a) > pi.apply(b) {
                flips += (space.parity(idx[a]) * space.parity(idx[b])) as usize;
            }
        }
    }
    if flips % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn super_suite(run: &mut Run) -> Result<Vec<Check>> {
    let dim = run.bound("dim", run.opts.dim, 3usize);
    let max_arity = run.bound("max_arity", run.opts.max_arity, 3usize);
    let space = SuperSpace::standard(dim)?;
    let mut checks: Vec<Check> = es_axiom_check(&space, max_arity)
        .into_iter()
        .map(|mut c| {
            c.id = format!("es-{}", c.id);
            c.params.insert("space".into(), format!("standard-{dim}"));
            c
        })
        .collect();
    let even = SuperSpace::all_even(dim.min(2));
    checks.extend(es_axiom_check(&even, max_arity).into_iter().map(|mut c| {
        c.id = format!("es-even-{}", c.id);
        c.params.insert("space".into(), format!("all-even-{}", dim.min(2)));
        c
    }));
    let cases: Vec<(Vec<usize>, Perm)> = (2..=max_arity + 1)
        .flat_map(|k| {
            let perms = all_perms(k);
            basis_tuples(dim, k).into_iter().flat_map(move |t| perms.clone().into_iter().map(move |p| (t.clone(), p)))
        })
        .collect();
    checks.push(family("es-permute-koszul", vec![], &cases, |(t, pi)| {
        let got = es_permute(&space, pi, &SuperTensor::basis(t.clone())).ok()?;
        let inv = pi.inverse();
        let moved: Vec<usize> = (0..t.len()).map(|i| t[inv.apply(i)]).collect();
        let want = SuperTensor::from_terms(t.len(), [(moved, koszul_sign(&space, pi, t))]).ok()?;
        (got != want).then(|| format!("π={pi:?} on {}: {} vs {}", got.format(&space), got.format(&space), want.format(&space)))
    }));
    let even_cases: Vec<(Vec<usize>, Vec<usize>, Perm)> = (2..=3usize.min(max_arity + 1))
        .flat_map(|k| {
            let tuples: Vec<Vec<usize>> =
                basis_tuples(dim, k).into_iter().filter(|t| t.iter().map(|&i| space.parity(i)).sum::<u8>() % 2 == 0).collect();
            let perms = all_perms(k);
            let mut out = Vec::new();
            for v in &tuples {
                for a in &tuples {
                    for pi in &perms {
                        out.push((v.clone(), a.clone(), pi.clone()));
                    }
                }
            }
            out
        })
        .collect();
    checks.push(family("es-pairing-invariant", vec![], &even_cases, |(v, a, pi)| {
        let (v, a) = (SuperTensor::basis(v.clone()), SuperTensor::basis(a.clone()));
        let before = pair(&space, &v, &a).ok()?;
        let after = pair(&space, &es_permute(&space, pi, &v).ok()?, &es_permute(&space, pi, &a).ok()?).ok()?;
        (before != after).then(|| format!("π={pi:?} v={} α={}: {before} vs {after}", v.format(&space), a.format(&space)))
    }));
    Ok(checks)
}

fn vowa_suite(run: &mut Run) -> Result<Vec<Check>> {
    let dim = run.bound("dim", run.opts.dim, 3usize);
    let max_arity = run.bound("max_arity", run.opts.max_arity, 3usize);
    let mut checks = Vec::new();
    for d in 1..=dim {
        let mut c = vowa_exhaustive(&SuperSpace::standard(d)?, max_arity)?;
        c.params.insert("space".into(), format!("standard-{d}"));
        checks.push(c);
    }
    Ok(checks)
}

fn important_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_total_a = run.bound("a_max_total", None, 6u32);
    let max_n = run.bound("max_n", run.opts.max_n, 3usize);
    let max_total_b = run.bound("b_max_total", run.opts.max_degree, 3u32);
    let mut checks = vec![important_a_exhaustive(max_total_a)?];
    let trivial = BaseOperad::trivial();
    checks.push(MTilde::new(&trivial).important_b_exhaustive(max_n, max_total_b)?);
    let dual = BaseOperad::dual_numbers();
    checks.push(MTilde::new(&dual).important_b_exhaustive(2, max_total_b)?);
    if let Some(base) = &run.opts.base {
        run.bounds.insert("base".into(), base.name().to_string());
        checks.push(MTilde::new(base).important_b_exhaustive(max_n.min(3), max_total_b)?);
    }
    Ok(checks)
}

fn operad_suite(run: &mut Run) -> Result<Vec<Check>> {
    let max_arity = run.bound("max_arity", run.opts.max_arity, 3usize);
    let span_degree = run.bound("span_degree", run.opts.max_degree, 2u32);
    let trivial = BaseOperad::trivial();
    let base = run.opts.base.clone().unwrap_or_else(BaseOperad::trivial);
    run.bounds.insert("base".into(), base.name().to_string());
    let mut checks = operad_axiom_check(&base, max_arity, span_degree);
    checks.extend(morphism_f_checks(&trivial, max_arity)?);
    Ok(checks)
}

/// `F` commutes with the actions and with every composition of base basis elements
/// in arities `2..=max_arity`, and vanishes in arity 1.
pub fn morphism_f_checks(base: &BaseOperad, max_arity: usize) -> Result<Vec<Check>> {
    let op = MTilde::new(base);
    let basis = |n: usize| -> Result<Vec<AlgElement>> {
        let dim = base.algebra(n)?.dim();
        Ok((0..dim).map(|i| AlgElement::basis(dim, i)).collect())
    };
    let mut actions = Vec::new();
    let mut comps = Vec::new();
    for n in 2..=max_arity {
        for xi in basis(n)? {
            for pi in all_perms(n + 1) {
                actions.push((n, xi.clone(), pi));
            }
        }
        for m in 2..=max_arity {
            if m + n - 1 > 16 {
                continue;
            }
            for a in basis(m)? {
                for b in basis(n)? {
                    for j in 1..=m {
                        comps.push((m, n, j, a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    let f_zero = op.morphism_f(1, &AlgElement::basis(1, 0))?.is_zero();
    let mut checks = vec![Check::new(
        "morphism-f-arity-1",
        Vec::<(String, String)>::new(),
        (!f_zero).then(|| "F(1) is not zero".to_string()),
    )];
    checks.push(family("morphism-f-equivariant", vec![], &actions, |(n, xi, pi)| {
        let lhs = op.act(pi, &op.morphism_f(*n, xi).ok()?).ok()?;
        let rhs = op.morphism_f(*n, &base.act(*n, pi, xi).ok()?).ok()?;
        (lhs != rhs).then(|| format!("n={n} π={pi:?}: {} vs {}", lhs.format(base), rhs.format(base)))
    }));
    checks.push(family("morphism-f-compositions", vec![], &comps, |(m, n, j, a, b)| {
        let lhs: Result<MTildeElement> = base
            .clutch(*m, *n, *j, a, b)
            .and_then(|c| op.morphism_f(m + n - 1, &c));
        let rhs = op.morphism_f(*m, a).and_then(|fa| op.compose(&fa, &op.morphism_f(*n, b)?, *j));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => None,
            (l, r) => Some(format!("m={m} n={n} j={j}: {l:?} vs {r:?}")),
        }
    }));
    let _ = perms_fixing_zero;
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_matches_powers_of_two() {
        for n in 0..=8 {
            assert_eq!(brute_force_count(n), 1 << n);
        }
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert!(matches!(run_suite("nope", &Options::default()), Err(Error::Usage(_))));
    }

    #[test]
    fn small_suites_pass() {
        let opts = Options { max_degree: Some(3), max_n: Some(3), ..Options::default() };
        for s in ["ring", "dim", "identity", "iota"] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
