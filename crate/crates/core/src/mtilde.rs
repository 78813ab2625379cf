//! The extended cyclic operad `A M̃₀` over a pluggable base: `A(1) = R[t0]` and
//! `A(n) = B_n ⊗ R^{⊗(n+1)}` for `n >= 2`, with the four composition cases, the
//! `S_{n+}`-actions, the classes `ψ̃_i`, `φ̃_i`, the morphism `F`, and the two
//! `ψ̃`-recursions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::base_algebra::{AlgElement, BaseOperad};
use crate::perm::{CyclicOperad, Perm};
use crate::poly::{scalar, Monomial, Polynomial, Scalar};
use crate::report::Check;
use crate::rt0::{dot_mul_monomials, monomials_of_degree, RT0Element};
use crate::{Error, Result};

/// Tensor-basis key for `n >= 2`: (basis index of `B_n`, `R`-monomials of slots `0..=n`).
pub type StableKey = (usize, Vec<Monomial>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MTildeElement {
    Unary(RT0Element),
    Stable { arity: usize, terms: BTreeMap<StableKey, Scalar> },
}

impl MTildeElement {
    pub fn zero(arity: usize) -> Self {
        if arity == 1 {
            MTildeElement::Unary(RT0Element::zero())
        } else {
            MTildeElement::Stable { arity, terms: BTreeMap::new() }
        }
    }

    pub fn unary(x: RT0Element) -> Self {
        MTildeElement::Unary(x)
    }

    /// `e_basis ⊗ r_0 ⊗ .. ⊗ r_n` for `t0`-free slot polynomials with prefix support.
    pub fn stable(basis: usize, slots: &[Polynomial]) -> Result<Self> {
        let arity = slots.len().checked_sub(1).filter(|&n| n >= 2).ok_or_else(|| {
            Error::Arity(format!("a stable element needs at least 3 slots, got {}", slots.len()))
        })?;
        for p in slots {
            if p.contains_t0() {
                return Err(Error::NotR(format!("slot entry {p} contains t0")));
            }
            RT0Element::from_polynomial(p)?;
        }
        let mut terms: BTreeMap<StableKey, Scalar> = BTreeMap::new();
        terms.insert((basis, Vec::new()), Scalar::one());
        for p in slots {
            let mut next = BTreeMap::new();
            for ((b, ms), c) in &terms {
                for (m, d) in p.terms() {
                    let mut ms = ms.clone();
                    ms.push(m.clone());
                    add_term(&mut next, (*b, ms), c * d);
                }
            }
            terms = next;
        }
        Ok(MTildeElement::Stable { arity, terms })
    }

    /// `Σ_b x_b e_b ⊗ 1 ⊗ .. ⊗ 1`.
    pub fn from_base(arity: usize, x: &AlgElement) -> Self {
        let mut terms = BTreeMap::new();
        for (b, c) in x.nonzero() {
            add_term(&mut terms, (b, vec![Monomial::one(); arity + 1]), c.clone());
        }
        MTildeElement::Stable { arity, terms }
    }

    pub fn arity(&self) -> usize {
        match self {
            MTildeElement::Unary(_) => 1,
            MTildeElement::Stable { arity, .. } => *arity,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            MTildeElement::Unary(x) => x.is_zero(),
            MTildeElement::Stable { terms, .. } => terms.is_empty(),
        }
    }

    pub fn as_unary(&self) -> Option<&RT0Element> {
        match self {
            MTildeElement::Unary(x) => Some(x),
            MTildeElement::Stable { .. } => None,
        }
    }

    pub fn stable_terms(&self) -> Option<&BTreeMap<StableKey, Scalar>> {
        match self {
            MTildeElement::Unary(_) => None,
            MTildeElement::Stable { terms, .. } => Some(terms),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        match self {
            MTildeElement::Unary(x) => MTildeElement::Unary(x.scale(c)),
            MTildeElement::Stable { arity, terms } => {
                let mut out = BTreeMap::new();
                for (k, d) in terms {
                    add_term(&mut out, k.clone(), d * c);
                }
                MTildeElement::Stable { arity: *arity, terms: out }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (MTildeElement::Unary(x), MTildeElement::Unary(y)) => Ok(MTildeElement::Unary(x + y)),
            (MTildeElement::Stable { arity, terms }, MTildeElement::Stable { arity: a2, terms: t2 }) if arity == a2 => {
                let mut out = terms.clone();
                for (k, c) in t2 {
                    add_term(&mut out, k.clone(), c.clone());
                }
                Ok(MTildeElement::Stable { arity: *arity, terms: out })
            }
            _ => Err(Error::Arity(format!("adding arities {} and {}", self.arity(), other.arity()))),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Terms printed as `c*basis⊗(r_0 | .. | r_n)`.
    pub fn format(&self, base: &BaseOperad) -> String {
        match self {
            MTildeElement::Unary(x) => x.to_string(),
            MTildeElement::Stable { terms, .. } if terms.is_empty() => "0".into(),
            MTildeElement::Stable { arity, terms } => {
                let alg = base.algebra(*arity).ok();
                let parts: Vec<String> = terms
                    .iter()
                    .map(|((b, ms), c)| {
                        let name = alg.map_or_else(|| format!("e{b}"), |a| a.name(*b).to_string());
                        let slots: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                        format!("{c}*{name}⊗({})", slots.join(" | "))
                    })
                    .collect();
                parts.join(" + ")
            }
        }
    }
}

fn add_term(terms: &mut BTreeMap<StableKey, Scalar>, key: StableKey, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

type OdotCache = HashMap<(RT0Element, RT0Element), RT0Element>;

/// `A M̃₀` over a base, with a memo table for `⊙`, which dominates the cost of
/// iterated compositions.
pub struct MTilde<'a> {
    base: &'a BaseOperad,
    /// total `R`-degree bound (and `R[t0]`-degree bound) of the spanning sets
    span_degree: u32,
    cache: Mutex<OdotCache>,
}

impl<'a> MTilde<'a> {
    pub fn new(base: &'a BaseOperad) -> Self {
        Self::with_span_degree(base, 2)
    }

    pub fn with_span_degree(base: &'a BaseOperad, span_degree: u32) -> Self {
        MTilde { base, span_degree, cache: Mutex::new(HashMap::new()) }
    }

    pub fn base(&self) -> &BaseOperad {
        self.base
    }

    fn odot(&self, f: &RT0Element, g: &RT0Element) -> Result<RT0Element> {
        let key = (f.clone(), g.clone());
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = f.try_odot(g)?;
        self.cache.lock().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }

    /// `x ∘_j y`.
    pub fn compose(&self, x: &MTildeElement, y: &MTildeElement, j: usize) -> Result<MTildeElement> {
        let (m, n) = (x.arity(), y.arity());
        if j == 0 || j > m {
            return Err(Error::Arity(format!("slot {j} out of range 1..={m}")));
        }
        match (x, y) {
            (MTildeElement::Unary(f), MTildeElement::Unary(g)) => Ok(MTildeElement::Unary(self.odot(f, g)?)),
            (MTildeElement::Stable { terms, .. }, MTildeElement::Unary(g)) => self.insert_unary(m, terms, j, g),
            (MTildeElement::Unary(g), MTildeElement::Stable { terms, .. }) => {
                self.insert_unary(n, terms, 0, &g.iota())
            }
            (MTildeElement::Stable { terms: tv, .. }, MTildeElement::Stable { terms: tw, .. }) => {
                let target = m + n - 1;
                let (am, an) = (self.base.algebra(m)?.dim(), self.base.algebra(n)?.dim());
                let mut out = BTreeMap::new();
                for ((a, v), c) in tv {
                    if !v[j].is_one() {
                        continue;
                    }
                    for ((b, w), d) in tw {
                        if !w[0].is_one() {
                            continue;
                        }
                        let clutched =
                            self.base.clutch(m, n, j, &AlgElement::basis(am, *a), &AlgElement::basis(an, *b))?;
                        let mut slots = Vec::with_capacity(target + 1);
                        slots.extend_from_slice(&v[..j]);
                        slots.extend_from_slice(&w[1..]);
                        slots.extend_from_slice(&v[j + 1..]);
                        for (k, e) in clutched.nonzero() {
                            add_term(&mut out, (k, slots.clone()), e * c * d);
                        }
                    }
                }
                Ok(MTildeElement::Stable { arity: target, terms: out })
            }
        }
    }

    /// `(a ⊗ f_0..1..f_m) q'_s((f_s ⊙ g)|_{t0=φ_s})` summed over terms.
    fn insert_unary(
        &self,
        m: usize,
        terms: &BTreeMap<StableKey, Scalar>,
        slot: usize,
        g: &RT0Element,
    ) -> Result<MTildeElement> {
        let alg = self.base.algebra(m)?;
        let phi = self.base.phi(m, slot)?;
        let mut out = BTreeMap::new();
        for ((a, fs), c) in terms {
            let f = RT0Element::from_monomial(&fs[slot])?;
            let h = self.odot(&f, g)?;
            let sub = h.substitute_class(phi, alg)?;
            for ((b, r), d) in &sub.terms {
                let prod = alg.alg_mul(&AlgElement::basis(alg.dim(), *a), &AlgElement::basis(alg.dim(), *b));
                let mut slots = fs.clone();
                slots[slot] = r.clone();
                for (k, e) in prod.nonzero() {
                    add_term(&mut out, (k, slots.clone()), e * c * d);
                }
            }
        }
        Ok(MTildeElement::Stable { arity: m, terms: out })
    }

    /// `π x`: `ι` on `R[t0]`; otherwise slot `i` receives the entry of slot `π⁻¹(i)` and
    /// the base class is acted on by the base.
    pub fn act(&self, pi: &Perm, x: &MTildeElement) -> Result<MTildeElement> {
        let n = x.arity();
        if pi.len() != n + 1 {
            return Err(Error::Permutation(format!("{pi:?} does not act on arity {n}")));
        }
        match x {
            MTildeElement::Unary(f) => Ok(MTildeElement::Unary(if pi.apply(0) == 0 { f.clone() } else { f.iota() })),
            MTildeElement::Stable { terms, .. } => {
                let alg = self.base.algebra(n)?;
                let inv = pi.inverse();
                let mut out = BTreeMap::new();
                for ((a, fs), c) in terms {
                    let image = self.base.act(n, pi, &AlgElement::basis(alg.dim(), *a))?;
                    let slots: Vec<Monomial> = (0..=n).map(|i| fs[inv.apply(i)].clone()).collect();
                    for (k, e) in image.nonzero() {
                        add_term(&mut out, (k, slots.clone()), e * c);
                    }
                }
                Ok(MTildeElement::Stable { arity: n, terms: out })
            }
        }
    }

    /// Ring product in a fixed arity: `·` on `R[t0]`, otherwise the base product
    /// times the slot-wise product of `R`.
    pub fn product(&self, x: &MTildeElement, y: &MTildeElement) -> Result<MTildeElement> {
        match (x, y) {
            (MTildeElement::Unary(f), MTildeElement::Unary(g)) => Ok(MTildeElement::Unary(f.dot_mul(g))),
            (MTildeElement::Stable { arity, terms: tx }, MTildeElement::Stable { arity: a2, terms: ty })
                if arity == a2 =>
            {
                let alg = self.base.algebra(*arity)?;
                let mut out = BTreeMap::new();
                for ((a, fs), c) in tx {
                    for ((b, gs), d) in ty {
                        let prod = alg.basis_product(*a, *b);
                        if prod.is_zero() {
                            continue;
                        }
                        // expand the slot-wise products into monomial tuples
                        let mut tuples: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), c * d)];
                        for (f, g) in fs.iter().zip(gs) {
                            let p = dot_mul_monomials(f, g);
                            let mut next = Vec::with_capacity(tuples.len() * p.len());
                            for (ms, e) in &tuples {
                                for (m, k) in p.terms() {
                                    let mut ms = ms.clone();
                                    ms.push(m.clone());
                                    next.push((ms, e * k));
                                }
                            }
                            tuples = next;
                        }
                        for (k, e) in prod.nonzero() {
                            for (ms, f) in &tuples {
                                add_term(&mut out, (k, ms.clone()), e * f);
                            }
                        }
                    }
                }
                Ok(MTildeElement::Stable { arity: *arity, terms: out })
            }
            _ => Err(Error::Arity(format!("product of arities {} and {}", x.arity(), y.arity()))),
        }
    }

    /// `x^e` for the ring product, `x^0` being the unit of that arity.
    pub fn power(&self, x: &MTildeElement, e: u32) -> Result<MTildeElement> {
        let mut acc = self.unit(x.arity())?;
        for _ in 0..e {
            acc = self.product(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn unit(&self, arity: usize) -> Result<MTildeElement> {
        if arity == 1 {
            return Ok(MTildeElement::Unary(RT0Element::one()));
        }
        Ok(MTildeElement::from_base(arity, &self.base.algebra(arity)?.unit()))
    }

    /// `(ψ̃_i, φ̃_i)` in arity `n`.
    pub fn psi_phi_classes(&self, n: usize, i: usize) -> Result<(MTildeElement, MTildeElement)> {
        if i > n {
            return Err(Error::Arity(format!("slot {i} out of range 0..={n}")));
        }
        if n == 1 {
            let p = |s: &str| MTildeElement::Unary(s.parse().expect("literal"));
            return Ok(if i == 0 { (p("-t0"), p("-t0 - t1")) } else { (p("t0 + t1"), p("t0")) });
        }
        let alg = self.base.algebra(n)?;
        let phi = MTildeElement::from_base(n, self.base.phi(n, i)?);
        let mut slots = vec![Monomial::one(); n + 1];
        slots[i] = Monomial::var(1);
        let mut t1 = BTreeMap::new();
        add_term(&mut t1, (alg.unit_index(), slots), Scalar::one());
        let psi = phi.add(&MTildeElement::Stable { arity: n, terms: t1 })?;
        Ok((psi, phi))
    }

    /// `F(n)(ξ) = ξ ⊗ 1 ⊗ .. ⊗ 1`; `F(1)` is zero.
    pub fn morphism_f(&self, n: usize, xi: &AlgElement) -> Result<MTildeElement> {
        if n == 1 {
            return Ok(MTildeElement::zero(1));
        }
        let dim = self.base.algebra(n)?.dim();
        if xi.0.len() != dim {
            return Err(Error::Arity(format!("class has {} coordinates, B_{n} has dimension {dim}", xi.0.len())));
        }
        Ok(MTildeElement::from_base(n, xi))
    }

    /// Basis elements of `B_n` tensored with `R`-monomial tuples of total degree up to
    /// the spanning bound; in arity 1 the monomials of `R[t0]` up to that degree.
    pub fn spanning_set(&self, n: usize) -> Vec<MTildeElement> {
        if n == 1 {
            return (0..=self.span_degree)
                .flat_map(monomials_of_degree)
                .map(|m| MTildeElement::Unary(RT0Element::from_monomial(&m).expect("prefix monomial")))
                .collect();
        }
        let Ok(alg) = self.base.algebra(n) else { return Vec::new() };
        let r_monomials: Vec<Vec<Monomial>> = (0..=self.span_degree)
            .map(|d| monomials_of_degree(d).into_iter().filter(|m| m.t0_exponent() == 0).collect())
            .collect();
        let mut tuples: Vec<(Vec<Monomial>, u32)> = vec![(Vec::new(), 0)];
        for _ in 0..=n {
            let mut next = Vec::new();
            for (ms, deg) in &tuples {
                for (d, layer) in r_monomials.iter().enumerate() {
                    let d = d as u32;
                    if deg + d > self.span_degree {
                        break;
                    }
                    for m in layer {
                        let mut ms = ms.clone();
                        ms.push(m.clone());
                        next.push((ms, deg + d));
                    }
                }
            }
            tuples = next;
        }
        let mut out = Vec::new();
        for b in 0..alg.dim() {
            for (ms, _) in &tuples {
                let mut terms = BTreeMap::new();
                terms.insert((b, ms.clone()), Scalar::one());
                out.push(MTildeElement::Stable { arity: n, terms });
            }
        }
        out
    }

    /// Both sides of `∏ψ̃_i^{d_i}φ̃_i^{e_i} = ∏ψ̃_i^{d_i-δ_ij}φ̃_i^{e_i+δ_ij}
    /// + (φ̃_j^{e_j} ∏_{i≠j} ψ̃_i^{d_i}φ̃_i^{e_i}) ∘_j (t0+t1)^{·(d_j-1)}`.
    pub fn important_b(&self, n: usize, d: &[u32], e: &[u32], j: usize) -> Result<IdentityOutcome> {
        if n < 2 {
            return Err(Error::Arity("the stable recursion needs n >= 2".into()));
        }
        if d.len() != n + 1 || e.len() != n + 1 {
            return Err(Error::Arity(format!("exponent tuples need {} entries", n + 1)));
        }
        if j == 0 || j > n || d[j] == 0 {
            return Err(Error::Precondition(format!("need 1 <= j <= {n} and d_j > 0")));
        }
        let classes: Vec<(MTildeElement, MTildeElement)> =
            (0..=n).map(|i| self.psi_phi_classes(n, i)).collect::<Result<_>>()?;
        let monomial = |d: &[u32], e: &[u32]| -> Result<MTildeElement> {
            let mut acc = self.unit(n)?;
            for (i, (psi, phi)) in classes.iter().enumerate() {
                acc = self.product(&acc, &self.power(psi, d[i])?)?;
                acc = self.product(&acc, &self.power(phi, e[i])?)?;
            }
            Ok(acc)
        };
        let lhs = monomial(d, e)?;
        let (mut d1, mut e1) = (d.to_vec(), e.to_vec());
        d1[j] -= 1;
        e1[j] += 1;
        let first = monomial(&d1, &e1)?;
        let mut d2 = d.to_vec();
        d2[j] = 0;
        let outer = monomial(&d2, e)?;
        let g: RT0Element = "t0 + t1".parse::<RT0Element>().expect("literal").dot_pow(d[j] - 1);
        let second = self.compose(&outer, &MTildeElement::Unary(g), j)?;
        let rhs = first.add(&second)?;
        Ok(IdentityOutcome { holds: lhs == rhs, lhs, rhs })
    }

    /// Every `(d, e, j)` with `Σd + Σe <= max_total`, `d_j > 0`, in arities `2..=max_n`.
    pub fn important_b_exhaustive(&self, max_n: usize, max_total: u32) -> Result<Check> {
        let mut instances = 0usize;
        for n in 2..=max_n {
            for de in exponent_tuples(2 * (n + 1), max_total) {
                let (d, e) = de.split_at(n + 1);
                for j in 1..=n {
                    if d[j] == 0 {
                        continue;
                    }
                    instances += 1;
                    let out = self.important_b(n, d, e, j)?;
                    if !out.holds {
                        return Ok(Check::new(
                            "important-b",
                            important_params(self.base, max_n, max_total, instances),
                            Some(format!(
                                "n={n} d={d:?} e={e:?} j={j}: lhs = {}, rhs = {}",
                                out.lhs.format(self.base),
                                out.rhs.format(self.base)
                            )),
                        ));
                    }
                }
            }
        }
        Ok(Check::new("important-b", important_params(self.base, max_n, max_total, instances), None))
    }
}

fn important_params(base: &BaseOperad, max_n: usize, max_total: u32, instances: usize) -> [(&'static str, String); 4] {
    [
        ("base", base.name().to_string()),
        ("max_n", max_n.to_string()),
        ("max_total", max_total.to_string()),
        ("instances", instances.to_string()),
    ]
}

/// All tuples of `len` naturals with sum `<= total`.
pub fn exponent_tuples(len: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for t in &out {
            let used: u32 = t.iter().sum();
            for k in 0..=total - used {
                let mut u = t.clone();
                u.push(k);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub holds: bool,
    pub lhs: MTildeElement,
    pub rhs: MTildeElement,
}

/// `ψ̃_0^{d0} ψ̃_1^{d1} = -ψ̃_0^{d0+1} ψ̃_1^{d1-1} + ψ̃_0^{d0} ⊙ ψ̃_1^{d1-1}` in `R[t0]`,
/// powers taken with `·`.
pub fn important_a(d0: u32, d1: u32) -> Result<(bool, RT0Element, RT0Element)> {
    if d1 == 0 {
        return Err(Error::Precondition("d1 must be positive".into()));
    }
    let psi0: RT0Element = "-t0".parse().expect("literal");
    let psi1: RT0Element = "t0 + t1".parse().expect("literal");
    let lhs = psi0.dot_pow(d0).dot_mul(&psi1.dot_pow(d1));
    let first = psi0.dot_pow(d0 + 1).dot_mul(&psi1.dot_pow(d1 - 1));
    let second = psi0.dot_pow(d0).try_odot(&psi1.dot_pow(d1 - 1))?;
    let rhs = &second - &first;
    Ok((lhs == rhs, lhs, rhs))
}

pub fn important_a_exhaustive(max_total: u32) -> Result<Check> {
    let mut instances = 0usize;
    for d0 in 0..=max_total {
        for d1 in 1..=max_total - d0 {
            instances += 1;
            let (ok, lhs, rhs) = important_a(d0, d1)?;
            if !ok {
                return Ok(Check::new(
                    "important-a",
                    [("max_total", max_total.to_string()), ("instances", instances.to_string())],
                    Some(format!("d0={d0} d1={d1}: lhs = {lhs}, rhs = {rhs}")),
                ));
            }
        }
    }
    Ok(Check::new(
        "important-a",
        [("max_total", max_total.to_string()), ("instances", instances.to_string())],
        None,
    ))
}

impl CyclicOperad for MTilde<'_> {
    type Elem = MTildeElement;

    fn compose(&self, a: &MTildeElement, b: &MTildeElement, j: usize) -> Result<MTildeElement> {
        if a.is_zero() || b.is_zero() {
            let (m, n) = (a.arity(), b.arity());
            if j == 0 || j > m {
                return Err(Error::Arity(format!("slot {j} out of range 1..={m}")));
            }
            return Ok(MTildeElement::zero(m + n - 1));
        }
        MTilde::compose(self, a, b, j)
    }

    fn act(&self, pi: &Perm, x: &MTildeElement) -> Result<MTildeElement> {
        MTilde::act(self, pi, x)
    }

    fn describe(&self, x: &MTildeElement) -> String {
        x.format(self.base)
    }

    fn spanning(&self, n: usize) -> Vec<MTildeElement> {
        self.spanning_set(n)
    }

    fn negate(&self, x: &MTildeElement) -> MTildeElement {
        x.scale(&scalar(-1))
    }
}

/// Axioms (1)-(4) on the spanning sets in arities `<= max_arity`.
pub fn operad_axiom_check(base: &BaseOperad, max_arity: usize, span_degree: u32) -> Vec<Check> {
    let op = MTilde::with_span_degree(base, span_degree);
    let mut checks = crate::perm::check_axioms(&op, max_arity);
    for c in &mut checks {
        c.params.insert("base".into(), base.name().to_string());
        c.params.insert("span_degree".into(), span_degree.to_string());
    }
    checks
}

impl fmt::Display for MTildeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MTildeElement::Unary(x) => write!(f, "{x}"),
            MTildeElement::Stable { .. } => f.write_str(&self.format(&BaseOperad::trivial())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> MTildeElement {
        MTildeElement::Unary(s.parse().unwrap())
    }

    fn st(slots: &[&str]) -> MTildeElement {
        let ps: Vec<Polynomial> = slots.iter().map(|s| s.parse().unwrap()).collect();
        MTildeElement::stable(0, &ps).unwrap()
    }

    #[test]
    fn unary_compose_is_odot() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        assert_eq!(op.compose(&u("1"), &u("1"), 1).unwrap(), u("t1"));
    }

    #[test]
    fn stable_with_unary_trivial_base() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let x = st(&["1", "1", "1"]);
        assert_eq!(op.compose(&x, &u("1"), 1).unwrap(), st(&["1", "t1", "1"]));
        // 1 ⊙ t0 = t0 t1 + t1^2 + t1 t2, then t0 = 0
        assert_eq!(op.compose(&x, &u("t0"), 2).unwrap(), st(&["1", "1", "t1^2 + t1*t2"]));
        assert!(op.compose(&x, &u("1"), 3).is_err());
    }

    #[test]
    fn unary_with_stable_uses_iota() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let x = st(&["1", "t1", "1"]);
        // ι(t0) = -t0 - t1, 1 ⊙ (-t0 - t1) = -(t0 t1 + t1^2 + 2 t1 t2) - t1 ⊙ .. ; evaluate
        let expect_slot = RT0Element::one().odot(&"t0".parse::<RT0Element>().unwrap().iota());
        let expect_slot = expect_slot.as_polynomial().set_var_zero(0);
        let got = op.compose(&u("t0"), &x, 1).unwrap();
        let want = MTildeElement::stable(0, &[expect_slot, "t1".parse().unwrap(), Polynomial::one()]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn stable_contraction_uses_pr0() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let x = st(&["t1", "1", "t1^2"]);
        let y = st(&["1", "t1*t2", "1"]);
        assert_eq!(op.compose(&x, &y, 1).unwrap(), st(&["t1", "t1*t2", "1", "t1^2"]));
        let y = st(&["t1", "1", "1"]);
        assert!(op.compose(&x, &y, 1).unwrap().is_zero());
    }

    #[test]
    fn actions() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let swap = Perm::new(vec![1, 0]).unwrap();
        assert_eq!(op.act(&swap, &u("t0")).unwrap(), u("-t0 - t1"));
        assert_eq!(op.act(&Perm::identity(2), &u("t0")).unwrap(), u("t0"));
        let swap12 = Perm::new(vec![0, 2, 1]).unwrap();
        assert_eq!(op.act(&swap12, &st(&["1", "t1", "1"])).unwrap(), st(&["1", "1", "t1"]));
    }

    #[test]
    fn psi_phi_values() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        assert_eq!(op.psi_phi_classes(1, 0).unwrap(), (u("-t0"), u("-t0 - t1")));
        assert_eq!(op.psi_phi_classes(1, 1).unwrap(), (u("t0 + t1"), u("t0")));
        let (psi, phi) = op.psi_phi_classes(2, 1).unwrap();
        assert_eq!(psi, st(&["1", "t1", "1"]));
        assert!(phi.is_zero());
    }

    #[test]
    fn morphism_f_values() {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        assert!(op.morphism_f(1, &AlgElement::basis(1, 0)).unwrap().is_zero());
        assert_eq!(op.morphism_f(3, &AlgElement::basis(1, 0)).unwrap(), st(&["1", "1", "1", "1"]));
    }

    #[test]
    fn important_identities_small() {
        for d0 in 0..3 {
            for d1 in 1..3 {
                assert!(important_a(d0, d1).unwrap().0);
            }
        }
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let out = op.important_b(2, &[0, 1, 0], &[0, 0, 0], 1).unwrap();
        assert!(out.holds, "{:?}", out);
        let base = BaseOperad::dual_numbers();
        let op = MTilde::new(&base);
        assert!(op.important_b_exhaustive(2, 2).unwrap().pass);
    }
}
