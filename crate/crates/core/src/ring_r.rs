//! The ring `R = ⊕_n I_n`, `I_n = (t1⋯tn)·ℚ[t1..tn]`, its level-`d` truncations `R_d`
//! inside `ℚ[t1..td]`, and the maps between them.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{increasing_maps_into, maps_pushforward, Monomial, Polynomial};
use crate::{Error, Result};

/// Is `p` in `I_n`? Every monomial must have positive exponent on exactly `t1..tn`
/// and no `t0`.
pub fn check_component(n: usize, p: &Polynomial) -> bool {
    p.terms().all(|(m, _)| m.t0_exponent() == 0 && m.prefix_length() == Some(n))
}

/// All pairs `(α: [1,p] -> [1,k], β: [1,q] -> [1,k])` of increasing maps whose images
/// cover `[1,k]`, for every possible `k`. Returned as `(k, α values, β values)`.
pub fn covering_pairs(p: usize, q: usize) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(p);
    let mut b = Vec::with_capacity(q);
    fn rec(
        p: usize,
        q: usize,
        pos: usize,
        a: &mut Vec<usize>,
        b: &mut Vec<usize>,
        out: &mut Vec<(usize, Vec<usize>, Vec<usize>)>,
    ) {
        let (i, j) = (a.len(), b.len());
        if i == p && j == q {
            out.push((pos, a.clone(), b.clone()));
            return;
        }
        let next = pos + 1;
        if i < p {
            a.push(next);
            rec(p, q, next, a, b, out);
            a.pop();
        }
        if j < q {
            b.push(next);
            rec(p, q, next, a, b, out);
            b.pop();
        }
        if i < p && j < q {
            a.push(next);
            b.push(next);
            rec(p, q, next, a, b, out);
            a.pop();
            b.pop();
        }
    }
    rec(p, q, 0, &mut a, &mut b, &mut out);
    out
}

/// An element `(f_n)_n` of `R`; only nonzero components are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RElement {
    components: BTreeMap<usize, Polynomial>,
}

impl RElement {
    pub fn zero() -> Self {
        RElement::default()
    }

    pub fn one() -> Self {
        Self::from_components([(0, Polynomial::one())]).unwrap()
    }

    pub fn from_components<I: IntoIterator<Item = (usize, Polynomial)>>(it: I) -> Result<Self> {
        let mut components: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (n, p) in it {
            if !check_component(n, &p) {
                return Err(Error::NotR(format!("{p} is not in I_{n}")));
            }
            let slot = components.entry(n).or_default();
            *slot += &p;
            if slot.is_zero() {
                components.remove(&n);
            }
        }
        Ok(RElement { components })
    }

    /// Splits a `t0`-free polynomial whose monomials have prefix support into components.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let mut comps: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in p.terms() {
            match (m.t0_exponent(), m.prefix_length()) {
                (0, Some(n)) => comps.entry(n).or_default().add_term(m.clone(), c.clone()),
                _ => return Err(Error::NotR(format!("monomial {m} has no prefix support"))),
            }
        }
        Ok(RElement { components: comps })
    }

    /// Sum of all components as one polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for p in self.components.values() {
            out += p;
        }
        out
    }

    pub fn component(&self, n: usize) -> Option<&Polynomial> {
        self.components.get(&n)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.components.iter().map(|(n, p)| (*n, p))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Highest index `n` with `f_n != 0`.
    pub fn top_index(&self) -> Option<usize> {
        self.components.keys().next_back().copied()
    }

    /// The `I_0 = ℚ` part.
    pub fn pr0(&self) -> crate::poly::Scalar {
        self.components
            .get(&0)
            .map(Polynomial::constant_term)
            .unwrap_or_default()
    }

    /// `h_n = Σ (α_* f_p)(β_* g_q)` over covering pairs `(α, β)` into `[1,n]`.
    pub fn r_mul(&self, other: &RElement) -> RElement {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (&p, fp) in &self.components {
            for (&q, gq) in &other.components {
                for (n, a, b) in covering_pairs(p, q) {
                    let prod = &maps_pushforward(&a, fp) * &maps_pushforward(&b, gq);
                    *out.entry(n).or_default() += &prod;
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        RElement { components: out }
    }

    /// Image `Σ_n Σ_{α:[1,n]↪[1,d]} α_* f_n` in `R_d ⊂ ℚ[t1..td]`.
    pub fn project_to_level(&self, d: usize) -> RdElement {
        RdElement { level: d, value: project_components(self.components(), d) }
    }
}

impl std::ops::Add for &RElement {
    type Output = RElement;
    fn add(self, rhs: &RElement) -> RElement {
        let mut out = self.components.clone();
        for (n, p) in &rhs.components {
            *out.entry(*n).or_default() += p;
        }
        out.retain(|_, p| !p.is_zero());
        RElement { components: out }
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_polynomial(), f)
    }
}

impl fmt::Debug for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.components.iter().map(|(n, p)| (n, p.to_string()))).finish()
    }
}

/// `Σ_n Σ_α α_* f_n` at level `d`; components with `n > d` contribute nothing.
/// Works with `t0` present, which the relabelling leaves fixed.
pub(crate) fn project_components<'a, I>(components: I, d: usize) -> Polynomial
where
    I: IntoIterator<Item = (usize, &'a Polynomial)>,
{
    let mut out = Polynomial::zero();
    for (n, f) in components {
        for a in increasing_maps_into(n, 1, d) {
            out += &maps_pushforward(&a, f);
        }
    }
    out
}

/// Groups the monomials of `f` by the length of their positive-index prefix support.
/// Monomials without prefix support are dropped: they are images of pushforwards.
pub(crate) fn prefix_components(f: &Polynomial) -> BTreeMap<usize, Polynomial> {
    let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (m, c) in f.terms() {
        if let Some(n) = m.prefix_length() {
            out.entry(n).or_default().add_term(m.clone(), c.clone());
        }
    }
    out
}

/// A polynomial known to lie in `R_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RdElement {
    level: usize,
    value: Polynomial,
}

impl RdElement {
    /// Validates membership in `R_d` by decoding.
    pub fn new(value: Polynomial, level: usize) -> Result<Self> {
        decode_rd(&value, level)?;
        Ok(RdElement { level, value })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    /// `R_d -> R_{d-1}` via `t_d -> 0`.
    pub fn restrict_level(&self) -> Result<RdElement> {
        if self.level == 0 {
            return Err(Error::Precondition("cannot restrict below level 0".into()));
        }
        Ok(RdElement { level: self.level - 1, value: self.value.set_var_zero(self.level) })
    }
}

/// Recovers `(f_n)` from `F ∈ R_d`: `f_n` collects the terms whose support is exactly
/// `{t1..tn}`. Fails unless projecting back reproduces `F`.
pub fn decode_rd(f: &Polynomial, d: usize) -> Result<RElement> {
    f.check_vars(d)?;
    if f.contains_t0() {
        return Err(Error::NotInLevel { level: d, reason: format!("{f} contains t0") });
    }
    let components = prefix_components(f);
    let back = project_components(components.iter().map(|(n, p)| (*n, p)), d);
    if &back != f {
        return Err(Error::NotInLevel {
            level: d,
            reason: format!("{f} is not a sum of symmetrised components (re-projection gives {back})"),
        });
    }
    Ok(RElement { components })
}

/// Convenience for monomials of `R`: `t1^a1 ⋯ tn^an` as an element.
pub fn r_monomial(exps: &[u32]) -> RElement {
    let m = Monomial::with_t0(0, exps);
    RElement::from_polynomial(&Polynomial::monomial(m)).expect("exponents must be positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RElement {
        RElement::from_polynomial(&p(s)).unwrap()
    }

    #[test]
    fn check_component_examples() {
        assert!(check_component(2, &p("t1*t2 + 3*t1^2*t2")));
        assert!(!check_component(2, &p("t1*t3")));
        assert!(check_component(0, &p("7")));
        assert!(!check_component(1, &p("t0*t1")));
    }

    #[test]
    fn covering_pair_counts() {
        // (p,q) = (1,1): k=1 overlap, k=2 two orders
        assert_eq!(covering_pairs(1, 1).len(), 3);
        assert_eq!(covering_pairs(0, 0), vec![(0, vec![], vec![])]);
        // Delannoy number D(2,2) = 13
        assert_eq!(covering_pairs(2, 2).len(), 13);
    }

    #[test]
    fn r_mul_worked_values() {
        assert_eq!(r("t1").r_mul(&r("t1")), r("t1^2 + 2*t1*t2"));
        assert_eq!(
            r("t1").r_mul(&r("t1*t2")),
            r("t1^2*t2 + t1*t2^2 + 3*t1*t2*t3")
        );
        let g = r("t1*t2^2 + 5");
        assert_eq!(RElement::one().r_mul(&g), g);
    }

    #[test]
    fn project_examples() {
        assert_eq!(r("t1").project_to_level(3).value(), &p("t1 + t2 + t3"));
        assert_eq!(r("4").project_to_level(5).value(), &p("4"));
        assert_eq!(r("t1*t2").project_to_level(3).value(), &p("t1*t2 + t1*t3 + t2*t3"));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_rd(&p("t1 + t2 + t3"), 3).unwrap(), r("t1"));
        assert!(matches!(decode_rd(&p("t2"), 2), Err(Error::NotInLevel { .. })));
        assert_eq!(decode_rd(&p("5"), 0).unwrap(), r("5"));
        assert!(decode_rd(&p("t3"), 2).is_err());
    }

    /// Brute force: the degree-1 part of `R_2` is spanned by the projections of the
    /// degree-1 components with index <= 2, and only `f_1 = t1` exists. `c (t1 + t2) = t2`
    /// forces `c = 0` from the `t1` coefficient and then fails on `t2`.
    #[test]
    fn t2_alone_is_not_in_r2_by_enumeration() {
        let spanning: Vec<Polynomial> = (0..=2)
            .flat_map(|n| crate::rt0::monomials_of_degree(1).into_iter().filter(move |m| {
                m.t0_exponent() == 0 && m.prefix_length() == Some(n)
            }))
            .map(|m| RElement::from_polynomial(&Polynomial::monomial(m)).unwrap())
            .map(|x| x.project_to_level(2).value().clone())
            .collect();
        assert_eq!(spanning, vec![p("t1 + t2")]);
        let c = spanning[0].coefficient(&Monomial::var(1));
        let needed = p("t2").coefficient(&Monomial::var(1));
        // c * x = needed on t1 gives x = 0, leaving 0 != 1 on t2
        assert_eq!(needed, crate::poly::scalar(0));
        assert_ne!(c, crate::poly::scalar(0));
        assert!(decode_rd(&p("t2"), 2).is_err());
    }

    #[test]
    fn restrict_examples() {
        let x = RdElement::new(p("t1 + t2"), 2).unwrap();
        assert_eq!(x.restrict_level().unwrap().value(), &p("t1"));
        let y = RdElement::new(p("t1*t2"), 2).unwrap();
        assert!(y.restrict_level().unwrap().value().is_zero());
        let z = RdElement::new(p("3"), 1).unwrap();
        let z0 = z.restrict_level().unwrap();
        assert_eq!((z0.level(), z0.value()), (0, &p("3")));
        assert!(z0.restrict_level().is_err());
    }

    #[test]
    fn invalid_component_rejected() {
        assert!(RElement::from_components([(2, p("t1*t3"))]).is_err());
        assert!(RElement::from_polynomial(&p("t0*t1")).is_err());
    }
}
