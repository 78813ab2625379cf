//! Expansion of `R[t0]` elements in the bases of `⊙`-words
//! `t0^{a1} ⊙ .. ⊙ t0^{ar}` and `(t0+t1)^{·a1} ⊙ .. ⊙ (t0+t1)^{·ar}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, Polynomial, Scalar};
use crate::rt0::{compositions, monomials_of_degree, RT0Element};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisKind {
    /// Words in powers of `t0`.
    Structure,
    /// Words in `·`-powers of `t0 + t1`.
    Iota,
}

/// A word `g^{a1} ⊙ .. ⊙ g^{ar}` with `g = t0` or `g = t0 + t1` depending on the kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OdotWord {
    pub exponents: Vec<u32>,
}

impl OdotWord {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "a ⊙-word has at least one letter");
        OdotWord { exponents }
    }

    /// Degree `Σ a_i + r - 1` of the evaluated word.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum::<u32>() + self.exponents.len() as u32 - 1
    }

    pub fn evaluate(&self, kind: BasisKind) -> RT0Element {
        let letter = |a: u32| match kind {
            BasisKind::Structure => RT0Element::t0().dot_pow(a),
            BasisKind::Iota => ("t0 + t1".parse::<RT0Element>().unwrap()).dot_pow(a),
        };
        let mut it = self.exponents.iter();
        let mut acc = letter(*it.next().unwrap());
        for &a in it {
            acc = acc.odot(&letter(a));
        }
        acc
    }

    pub fn display(&self, kind: BasisKind) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|&a| match (kind, a) {
                (_, 0) => "1".to_string(),
                (BasisKind::Structure, 1) => "t0".to_string(),
                (BasisKind::Structure, a) => format!("t0^{a}"),
                (BasisKind::Iota, 1) => "(t0+t1)".to_string(),
                (BasisKind::Iota, a) => format!("(t0+t1)^{a}"),
            })
            .collect();
        parts.join(" (*) ")
    }
}

impl fmt::Display for OdotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(BasisKind::Structure))
    }
}

/// The `2^n` words of degree `n`, ordered by length and then lexicographically.
pub fn words_of_degree(n: u32) -> Vec<OdotWord> {
    let mut out = Vec::new();
    for r in 1..=n + 1 {
        // Σ a_i = n + 1 - r with a_i >= 0: shift a compositions of n+1 into r positive parts
        let mut words: Vec<OdotWord> = compositions(n + 1)
            .into_iter()
            .filter(|c| c.len() as u32 == r)
            .map(|c| OdotWord::new(c.into_iter().map(|x| x - 1).collect()))
            .collect();
        words.sort();
        out.extend(words);
    }
    out
}

/// The degree-`n` change-of-basis data: words, the monomial basis and the matrix whose
/// column `k` holds the monomial coordinates of word `k`.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: u32,
    pub kind: BasisKind,
    pub words: Vec<OdotWord>,
    pub monomials: Vec<Monomial>,
    pub matrix: Matrix,
}

impl DegreeBasis {
    pub fn new(degree: u32, kind: BasisKind) -> Self {
        let words = words_of_degree(degree);
        let monomials = monomials_of_degree(degree);
        let index: BTreeMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = vec![vec![Scalar::zero(); words.len()]; monomials.len()];
        for (k, w) in words.iter().enumerate() {
            let value = w.evaluate(kind);
            for (m, c) in value.terms() {
                matrix[index[m]][k] = c.clone();
            }
        }
        DegreeBasis { degree, kind, words, monomials, matrix }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    pub fn determinant(&self) -> Scalar {
        linalg::determinant(&self.matrix).expect("square by the monomial count")
    }

    /// Coordinates of a homogeneous element of this degree.
    pub fn expand(&self, x: &RT0Element) -> Result<Vec<(Scalar, OdotWord)>> {
        let mut rhs = vec![Scalar::zero(); self.monomials.len()];
        for (m, c) in x.terms() {
            let i = self
                .monomials
                .binary_search(m)
                .map_err(|_| Error::Degree(format!("{m} is not of degree {}", self.degree)))?;
            rhs[i] = c.clone();
        }
        let coords = linalg::solve(&self.matrix, &rhs).map_err(|e| {
            Error::Internal(format!("the degree-{} ⊙-word matrix is not invertible: {e}", self.degree))
        })?;
        Ok(coords
            .into_iter()
            .zip(&self.words)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, w)| (c, w.clone()))
            .collect())
    }
}

/// Coordinates of `x` (split into homogeneous parts) in the structure basis.
pub fn odot_basis_expand(x: &RT0Element) -> Result<Vec<(Scalar, OdotWord)>> {
    let mut out = Vec::new();
    for d in degrees(x) {
        out.extend(DegreeBasis::new(d, BasisKind::Structure).expand(&x.homogeneous_part(d))?);
    }
    Ok(out)
}

/// Coordinates in the `(t0+t1)`-basis, by conjugating with `ι`: since `ι` is a
/// `⊙`-anti-involution with `ι(t0) = -(t0+t1)`, a structure word `t0^{a1}⊙..⊙t0^{ar}`
/// maps to `(-1)^{Σa} (t0+t1)^{ar}⊙..⊙(t0+t1)^{a1}`.
pub fn odot_basis_expand_iota(x: &RT0Element) -> Result<Vec<(Scalar, OdotWord)>> {
    let mut out: Vec<(Scalar, OdotWord)> = odot_basis_expand(&x.iota())?
        .into_iter()
        .map(|(c, w)| {
            let sign: u32 = w.exponents.iter().sum();
            let mut rev = w.exponents.clone();
            rev.reverse();
            (if sign % 2 == 1 { -c } else { c }, OdotWord::new(rev))
        })
        .collect();
    out.sort_by(|a, b| (a.1.degree(), a.1.exponents.len(), &a.1).cmp(&(b.1.degree(), b.1.exponents.len(), &b.1)));
    Ok(out)
}

pub fn expand(x: &RT0Element, kind: BasisKind) -> Result<Vec<(Scalar, OdotWord)>> {
    match kind {
        BasisKind::Structure => odot_basis_expand(x),
        BasisKind::Iota => odot_basis_expand_iota(x),
    }
}

/// Re-evaluates an expansion.
pub fn evaluate_expansion(terms: &[(Scalar, OdotWord)], kind: BasisKind) -> RT0Element {
    let mut acc = Polynomial::zero();
    for (c, w) in terms {
        acc += &w.evaluate(kind).as_polynomial().scale(c);
    }
    RT0Element::from_polynomial(&acc).expect("⊙-words lie in R[t0]")
}

/// `c * (word) + ...`, one term per coefficient.
pub fn format_expansion(terms: &[(Scalar, OdotWord)], kind: BasisKind) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms.iter().map(|(c, w)| format!("{c} * ({})", w.display(kind))).collect();
    parts.join(" + ")
}

fn degrees(x: &RT0Element) -> Vec<u32> {
    let mut ds: Vec<u32> = x.terms().map(|(m, _)| m.degree()).collect();
    ds.dedup();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar;

    fn x(s: &str) -> RT0Element {
        s.parse().unwrap()
    }

    #[test]
    fn word_counts_and_order() {
        for n in 0..=6 {
            assert_eq!(words_of_degree(n).len(), 1 << n);
        }
        let w: Vec<String> = words_of_degree(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(w, ["t0^2", "1 (*) t0", "t0 (*) 1", "1 (*) 1 (*) 1"]);
    }

    #[test]
    fn small_expansions() {
        assert_eq!(odot_basis_expand(&x("t1")).unwrap(), vec![(scalar(1), OdotWord::new(vec![0, 0]))]);
        assert_eq!(odot_basis_expand(&x("t0")).unwrap(), vec![(scalar(1), OdotWord::new(vec![1]))]);
        assert_eq!(odot_basis_expand_iota(&x("t1")).unwrap(), vec![(scalar(1), OdotWord::new(vec![0, 0]))]);
        let y = x("t0*t1 + t1^2 + 2*t1*t2");
        let e = odot_basis_expand(&y).unwrap();
        assert_eq!(evaluate_expansion(&e, BasisKind::Structure), y);
        assert_eq!(format_expansion(&odot_basis_expand(&x("t0")).unwrap(), BasisKind::Structure), "1 * (t0)");
    }

    #[test]
    fn mixed_degrees_split() {
        let y = x("3 + t0 + t1*t2");
        let e = odot_basis_expand(&y).unwrap();
        assert_eq!(evaluate_expansion(&e, BasisKind::Structure), y);
        let e = odot_basis_expand_iota(&y).unwrap();
        assert_eq!(evaluate_expansion(&e, BasisKind::Iota), y);
    }

    #[test]
    fn matrices_invertible_low_degree() {
        for n in 0..=3 {
            for kind in [BasisKind::Structure, BasisKind::Iota] {
                assert_eq!(DegreeBasis::new(n, kind).rank(), 1 << n);
            }
        }
    }
}
