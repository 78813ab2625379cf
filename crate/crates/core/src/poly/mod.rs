//! Sparse multivariate polynomials over ℚ in the variables `t0, t1, t2, ...`.
//!
//! Monomials are stored as dense exponent vectors with trailing zeros trimmed,
//! polynomials as ordered maps from monomials to nonzero rational coefficients.
//! The ordering on monomials is graded: lower total degree first, and inside one
//! degree the monomial with the larger `t0` exponent comes first, then `t1`, and
//! so on. This is also the printing order.

mod maps;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use maps::{enumerate_increasing_maps, increasing_maps_into, pullback, pushforward, IncreasingMap};
pub use parse::parse;
pub(crate) use maps::{pushforward_unchecked as maps_pushforward, relabel};

/// Exact rational coefficient, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A monomial `t0^a0 t1^a1 ... tk^ak`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// `t0^a0 * t1^a[0] * ... * tn^a[n-1]`.
    pub fn with_t0(a0: u32, positive: &[u32]) -> Self {
        let mut exps = Vec::with_capacity(positive.len() + 1);
        exps.push(a0);
        exps.extend_from_slice(positive);
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index that occurs, `None` for the constant monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.len().checked_sub(1)
    }

    /// Iterator over `(index, exponent)` with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, e)| (i, *e))
    }

    pub fn t0_exponent(&self) -> u32 {
        self.exponent(0)
    }

    /// Exponents of `t1, t2, ...` (the `t0` exponent removed).
    pub fn positive_part(&self) -> &[u32] {
        if self.exps.is_empty() {
            &[]
        } else {
            &self.exps[1..]
        }
    }

    pub fn without_t0(&self) -> Monomial {
        let mut exps = self.exps.clone();
        if let Some(e) = exps.first_mut() {
            *e = 0;
        }
        Self::from_exponents(exps)
    }

    /// If the positive-index support is exactly `{1, ..., n}`, returns `n`.
    pub fn prefix_length(&self) -> Option<usize> {
        let pos = self.positive_part();
        if pos.iter().all(|&e| e > 0) {
            Some(pos.len())
        } else {
            None
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (&self.exps, &other.exps)
        } else {
            (&other.exps, &self.exps)
        };
        let mut exps = long.clone();
        for (e, s) in exps.iter_mut().zip(short.iter()) {
            *e += s;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.support() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{i}")?;
            } else {
                write!(f, "t{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::term(Scalar::one(), Monomial::var(i))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Scalar::one(), m)
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, collecting duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Scalar, Monomial)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * m`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest variable index occurring in any term.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    pub fn contains_t0(&self) -> bool {
        self.terms.keys().any(|m| m.t0_exponent() > 0)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    /// Applies `f` to every monomial; `None` drops the term.
    pub fn map_monomials<F: Fn(&Monomial) -> Option<Monomial>>(&self, f: F) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some(n) = f(m) {
                out.add_term(n, c.clone());
            }
        }
        out
    }

    /// Ring homomorphism sending `t_i` to `images[i]` (variables beyond the slice are kept).
    pub fn substitute(&self, images: &[Option<Polynomial>]) -> Polynomial {
        let mut out = Polynomial::zero();
        // powers cached per variable
        let mut cache: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            let mut kept = vec![0u32; m.exponents().len()];
            for (i, e) in m.support() {
                match images.get(i).and_then(|x| x.as_ref()) {
                    Some(img) => {
                        let pw = cache.entry((i, e)).or_insert_with(|| img.pow(e)).clone();
                        term = &term * &pw;
                    }
                    None => kept[i] = e,
                }
            }
            out += &term.mul_monomial(&Monomial::from_exponents(kept));
        }
        out
    }

    /// Replaces every occurrence of `t0` by `s`.
    pub fn substitute_t0(&self, s: &Polynomial) -> Polynomial {
        if !self.contains_t0() {
            return self.clone();
        }
        self.substitute(&[Some(s.clone())])
    }

    /// Drops every term divisible by `t_i` (the map `t_i -> 0`).
    pub fn set_var_zero(&self, i: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(i) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their power of `t0`: `self = Σ_k t0^k * h_k` with `h_k` free of `t0`.
    pub fn split_t0(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.t0_exponent())
                .or_default()
                .add_term(m.without_t0(), c.clone());
        }
        out
    }

    /// Rejects any variable index above `bound`.
    pub fn check_vars(&self, bound: usize) -> crate::Result<()> {
        match self.max_var() {
            Some(i) if i > bound => Err(crate::Error::VariableOutOfRange { index: i, bound }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl std::str::FromStr for Polynomial {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        parse(s)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn substitute_t0_binomial() {
        assert_eq!(
            p("t0^2*t1").substitute_t0(&p("t0+t1")),
            p("t0^2*t1 + 2*t0*t1^2 + t1^3")
        );
        assert_eq!(p("t1*t2").substitute_t0(&p("t5 + 3")), p("t1*t2"));
        assert_eq!(p("t0").substitute_t0(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn set_var_zero_examples() {
        assert_eq!(p("t1*t2 + t1").set_var_zero(2), p("t1"));
        assert_eq!(p("t0^3").set_var_zero(1), p("t0^3"));
        assert!(p("t1").set_var_zero(1).is_zero());
    }

    #[test]
    fn print_order_is_graded_then_t0_first() {
        assert_eq!(p("2*t1*t2 + t1^2 + t0*t1").to_string(), "t0*t1 + t1^2 + 2*t1*t2");
        assert_eq!(p("t1 + 1 + t0^2").to_string(), "1 + t1 + t0^2");
        assert_eq!(p("-t0 - 1/2*t1").to_string(), "-t0 - 1/2*t1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn split_t0_collects_powers() {
        let s = p("t0^2*t1 + 3*t1 + t0*t1*t2").split_t0();
        assert_eq!(s[&0], p("3*t1"));
        assert_eq!(s[&1], p("t1*t2"));
        assert_eq!(s[&2], p("t1"));
    }

    #[test]
    fn trailing_zero_exponents_are_trimmed() {
        let m = Monomial::from_exponents(vec![1, 0, 0]);
        assert_eq!(m, Monomial::var(0));
        assert_eq!(m.max_var(), Some(0));
        assert_eq!(Monomial::from_exponents(vec![0, 1, 1]).prefix_length(), Some(2));
        assert_eq!(Monomial::from_exponents(vec![0, 1, 0, 1]).prefix_length(), None);
    }
}
