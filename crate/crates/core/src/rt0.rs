//! The ring `R[t0] = ⊕_n I_n[t0]` with its commutative product `·`, the operadic
//! product `⊙`, and the involution `ι`.
//!
//! An element is kept as one polynomial whose monomials all have prefix support
//! (`t0^a0 t1^a1 ... tn^an` with every `a_i >= 1` for `i >= 1`); the component in
//! `I_n[t0]` is the part with prefix length `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::base_algebra::{AlgElement, GradedAlgebra, TensorR};
use crate::poly::{increasing_maps_into, relabel, scalar, Monomial, Polynomial, Scalar};
use crate::ring_r::{covering_pairs, prefix_components, project_components, RElement};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RT0Element {
    poly: Polynomial,
}

impl RT0Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        RT0Element { poly: Polynomial::one() }
    }

    pub fn t0() -> Self {
        RT0Element { poly: Polynomial::var(0) }
    }

    /// Validates that every monomial has prefix support.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if let Some((m, _)) = p.terms().find(|(m, _)| m.prefix_length().is_none()) {
            return Err(Error::NotRt0(m.to_string()));
        }
        Ok(RT0Element { poly: p.clone() })
    }

    pub fn from_monomial(m: &Monomial) -> Result<Self> {
        Self::from_polynomial(&Polynomial::monomial(m.clone()))
    }

    /// `R ⊂ R[t0]`.
    pub fn from_r(r: &RElement) -> Self {
        RT0Element { poly: r.to_polynomial() }
    }

    pub(crate) fn from_polynomial_unchecked(poly: Polynomial) -> Self {
        debug_assert!(poly.terms().all(|(m, _)| m.prefix_length().is_some()));
        RT0Element { poly }
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    /// `n -> f_n ∈ I_n[t0]`.
    pub fn components(&self) -> BTreeMap<usize, Polynomial> {
        prefix_components(&self.poly)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.poly.is_homogeneous()
    }

    pub fn homogeneous_part(&self, d: u32) -> RT0Element {
        RT0Element { poly: self.poly.homogeneous_part(d) }
    }

    pub fn contains_t0(&self) -> bool {
        self.poly.contains_t0()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.poly.terms()
    }

    pub fn scale(&self, c: &Scalar) -> RT0Element {
        RT0Element { poly: self.poly.scale(c) }
    }

    /// Plain multiplication by `t0^a`, which is the `·`-product with `t0^a`.
    pub fn mul_t0_power(&self, a: u32) -> RT0Element {
        let m = Monomial::with_t0(a, &[]);
        RT0Element { poly: self.poly.mul_monomial(&m) }
    }

    /// `x = Σ_i t0^i h_i` with `h_i ∈ R`.
    pub fn split_t0(&self) -> BTreeMap<u32, RElement> {
        self.poly
            .split_t0()
            .into_iter()
            .map(|(k, h)| (k, RElement::from_polynomial(&h).expect("t0-free part of R[t0] lies in R")))
            .collect()
    }

    /// Image in `ℚ[t0, .., td]`: `Σ_n Σ_α α_* f_n`.
    pub fn project_to_level(&self, d: usize) -> Polynomial {
        let comps = self.components();
        project_components(comps.iter().map(|(n, p)| (*n, p)), d)
    }

    pub fn dot_mul(&self, other: &RT0Element) -> RT0Element {
        let mut out = Polynomial::zero();
        for (a, c) in self.poly.terms() {
            for (b, d) in other.poly.terms() {
                out += &dot_mul_monomials(a, b).scale(&(c * d));
            }
        }
        RT0Element { poly: out }
    }

    pub fn dot_pow(&self, e: u32) -> RT0Element {
        let mut acc = RT0Element::one();
        for _ in 0..e {
            acc = acc.dot_mul(self);
        }
        acc
    }

    /// `ι(t0^a0 ∏ t_i^{a_i}) = (-t0-t1)^{·a0} · ∏ t_i^{a_{n-i+1}}`.
    pub fn iota(&self) -> RT0Element {
        let base = RT0Element { poly: -(Polynomial::var(0) + Polynomial::var(1)) };
        let mut powers: Vec<RT0Element> = vec![RT0Element::one()];
        let mut out = Polynomial::zero();
        for (m, c) in self.poly.terms() {
            let a0 = m.t0_exponent() as usize;
            while powers.len() <= a0 {
                let next = powers.last().unwrap().dot_mul(&base);
                powers.push(next);
            }
            let mut rev: Vec<u32> = m.positive_part().to_vec();
            rev.reverse();
            let reversed = RT0Element { poly: Polynomial::monomial(Monomial::with_t0(0, &rev)) };
            out += &powers[a0].dot_mul(&reversed).poly.scale(c);
        }
        RT0Element { poly: out }
    }

    /// `x ⊙ y`; panics if the two independent evaluation routes disagree, which would
    /// be a bug. Use [`RT0Element::try_odot`] to receive that as an error instead.
    pub fn odot(&self, other: &RT0Element) -> RT0Element {
        self.try_odot(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_odot(&self, other: &RT0Element) -> Result<RT0Element> {
        let mut out = Polynomial::zero();
        for (a, c) in self.poly.terms() {
            for (b, d) in other.poly.terms() {
                out += &odot_monomials(a, b)?.scale(&(c * d));
            }
        }
        Ok(RT0Element { poly: out })
    }

    /// `x ⊙ x ⊙ .. ⊙ x` with `n >= 1` factors.
    pub fn odot_pow(&self, n: usize) -> RT0Element {
        assert!(n >= 1, "⊙ has no unit, so the empty ⊙-power is undefined");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.odot(self);
        }
        acc
    }

    /// `Σ_i c^i ⊗ h_i` for `x = Σ_i t0^i h_i`, with `c` of degree 1 in `alg`.
    pub fn substitute_class(&self, c: &AlgElement, alg: &GradedAlgebra) -> Result<TensorR> {
        if !c.is_zero() && alg.homogeneous_degree(c) != Some(1) {
            return Err(Error::Degree("the substituted class must be homogeneous of degree 1".into()));
        }
        let mut out = TensorR::default();
        let mut power = alg.unit();
        let split = self.poly.split_t0();
        let top = split.keys().last().copied().unwrap_or(0);
        for i in 0..=top {
            if let Some(h) = split.get(&i) {
                out = out.add(&TensorR::from_parts(&power, h));
            }
            power = alg.alg_mul(&power, c);
            if power.is_zero() {
                break;
            }
        }
        Ok(out)
    }
}

impl TensorR {
    pub fn add(mut self, other: &TensorR) -> TensorR {
        for ((b, m), c) in &other.terms {
            self.add_term(*b, m.clone(), c.clone());
        }
        self
    }
}

/// Generator rule: `t0^{a0}∏t_i^{a_i} · t0^{b0}∏t_i^{b_i}` sums, over covering pairs
/// `(α, β)` into `[1,k]`, the monomials `t0^{a0+b0} ∏ t_i^{c_i}` with `c` the merged
/// exponents.
pub(crate) fn dot_mul_monomials(a: &Monomial, b: &Monomial) -> Polynomial {
    let (pa, pb) = (a.positive_part(), b.positive_part());
    let t0 = a.t0_exponent() + b.t0_exponent();
    let mut out = Polynomial::zero();
    for (k, alpha, beta) in covering_pairs(pa.len(), pb.len()) {
        let mut exps = vec![0u32; k + 1];
        exps[0] = t0;
        for (i, &v) in alpha.iter().enumerate() {
            exps[v] += pa[i];
        }
        for (i, &v) in beta.iter().enumerate() {
            exps[v] += pb[i];
        }
        out.add_term(Monomial::from_exponents(exps), Scalar::one());
    }
    out
}

/// `Q_k(f, g) = Σ_j (Σ_α f(t0, t_α)) · t_j · (Σ_β g(t0+..+tj, t_β))` with
/// `α: [1,n] -> [1,j-1]`, `β: [1,m] -> [j+1,k]` increasing.
pub fn q_k(f: &Monomial, g: &Monomial, k: usize) -> Polynomial {
    let (n, m) = (f.positive_part().len(), g.positive_part().len());
    let mut out = Polynomial::zero();
    for j in 1..=k {
        let left: Polynomial = Polynomial::from_terms(
            increasing_maps_into(n, 1, j - 1).iter().map(|a| (Scalar::one(), relabel(f, a))),
        );
        if left.is_zero() {
            continue;
        }
        let g_free = g.without_t0();
        let right_free: Polynomial = Polynomial::from_terms(
            increasing_maps_into(m, j + 1, k).iter().map(|b| (Scalar::one(), relabel(&g_free, b))),
        );
        if right_free.is_zero() {
            continue;
        }
        let shift: Polynomial = (0..=j).map(Polynomial::var).fold(Polynomial::zero(), |acc, v| acc + v);
        let right = &right_free * &shift.pow(g.t0_exponent());
        out += &(&left * &right).mul_monomial(&Monomial::var(j));
    }
    out
}

/// `f(t0..tn) · t_{n+1} · g(t_{n+2}, ..)` for `g` free of `t0`.
pub fn concatenate(f: &Monomial, g: &Monomial) -> Monomial {
    debug_assert_eq!(g.t0_exponent(), 0);
    let mut exps = f.exponents().to_vec();
    let n = f.positive_part().len();
    exps.resize(n + 1, 0);
    exps.push(1);
    exps.extend_from_slice(g.positive_part());
    Monomial::from_exponents(exps)
}

fn odot_monomials(f: &Monomial, g: &Monomial) -> Result<Polynomial> {
    let d = (f.degree() + g.degree() + 1) as usize;
    let q = q_k(f, g, d);
    let comps = prefix_components(&q);
    let back = project_components(comps.iter().map(|(n, p)| (*n, p)), d);
    if back != q {
        return Err(Error::Internal(format!(
            "Q_{d}({f}, {g}) does not decode to an element of R[t0]"
        )));
    }
    let mut out = Polynomial::zero();
    for (_, p) in comps {
        out += &p;
    }
    if g.t0_exponent() == 0 {
        let closed = Polynomial::monomial(concatenate(f, g));
        if closed != out {
            return Err(Error::Internal(format!(
                "{f} ⊙ {g}: decoded value {out} disagrees with the concatenation formula {closed}"
            )));
        }
    }
    Ok(out)
}

/// All valid monomials `t0^a0 ∏_{i=1}^n t_i^{a_i}` (`a_i >= 1`) of total degree `d`.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a0 in (0..=d).rev() {
        for comp in compositions(d - a0) {
            out.push(Monomial::with_t0(a0, &comp));
        }
    }
    out.sort();
    out
}

/// Ordered compositions of `n` into positive parts, lexicographic.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The degree-one classes of the two-pointed space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassConstants {
    pub psi0: RT0Element,
    pub psi1: RT0Element,
    pub phi0: RT0Element,
    pub phi1: RT0Element,
}

impl ClassConstants {
    pub fn new() -> Self {
        let t0 = Polynomial::var(0);
        let t1 = Polynomial::var(1);
        let mk = RT0Element::from_polynomial_unchecked;
        ClassConstants {
            psi0: mk(-t0.clone()),
            psi1: mk(&t0 + &t1),
            phi0: mk(-(&t0 + &t1)),
            phi1: mk(t0),
        }
    }
}

impl Default for ClassConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// `1 ⊙ x = t1^{r+1} t2^{a1} .. t_{k+1}^{ak} + (terms with smaller t1-power)` for
/// `x = t0^r ∏ t_i^{a_i}`, and `1 ⊙ x` has a `t0`-free term.
pub fn leading_term_check(x: &Monomial) -> bool {
    if x.prefix_length().is_none() {
        return false;
    }
    let y = RT0Element::one().odot(&RT0Element::from_polynomial_unchecked(Polynomial::monomial(x.clone())));
    let r = x.t0_exponent();
    let mut lead = vec![0, r + 1];
    lead.extend_from_slice(x.positive_part());
    let lead = Monomial::from_exponents(lead);
    let lead_ok = y.poly.coefficient(&lead) == scalar(1);
    let rest_ok = y.poly.terms().all(|(m, _)| *m == lead || m.exponent(1) < r + 1);
    let t0_free = y.poly.terms().any(|(m, _)| m.t0_exponent() == 0);
    lead_ok && rest_ok && t0_free
}

impl fmt::Display for RT0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for RT0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RT0Element({})", self.poly)
    }
}

impl FromStr for RT0Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_polynomial(&crate::poly::parse(s)?)
    }
}

impl Add for &RT0Element {
    type Output = RT0Element;
    fn add(self, rhs: &RT0Element) -> RT0Element {
        RT0Element { poly: &self.poly + &rhs.poly }
    }
}

impl Sub for &RT0Element {
    type Output = RT0Element;
    fn sub(self, rhs: &RT0Element) -> RT0Element {
        RT0Element { poly: &self.poly - &rhs.poly }
    }
}

impl Neg for &RT0Element {
    type Output = RT0Element;
    fn neg(self) -> RT0Element {
        RT0Element { poly: -self.poly.clone() }
    }
}

/// `*` on `R[t0]` is the `·`-product.
impl Mul for &RT0Element {
    type Output = RT0Element;
    fn mul(self, rhs: &RT0Element) -> RT0Element {
        self.dot_mul(rhs)
    }
}

impl Zero for RT0Element {
    fn zero() -> Self {
        RT0Element::zero()
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl Add for RT0Element {
    type Output = RT0Element;
    fn add(self, rhs: RT0Element) -> RT0Element {
        &self + &rhs
    }
}
