//! Permutations of `{0..n}` in one-line notation, the operadic composite `π∘_jρ`, and a
//! generic checker for the four cyclic-operad axioms.

use std::fmt;

use rayon::prelude::*;

use crate::report::Check;
use crate::{Error, Result};

/// A bijection of `{0, .., len-1}`; entry `i` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Permutation(format!("{images:?} is not a bijection of 0..{}", images.len())));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(len: usize) -> Self {
        Perm((0..len).collect())
    }

    /// The cycle `τ_n = (0 1 .. n)` acting on `{0..n}`.
    pub fn cycle(n: usize) -> Self {
        Perm((0..=n).map(|i| if i == n { 0 } else { i + 1 }).collect())
    }

    /// The transposition of `i` and `j` on `{0..len-1}`.
    pub fn transposition(len: usize, i: usize, j: usize) -> Self {
        let mut p: Vec<usize> = (0..len).collect();
        p.swap(i, j);
        Perm(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn fixes_zero(&self) -> bool {
        self.0.first() == Some(&0)
    }

    /// A word `[k_1, .., k_r]` with `self = s_{k_1} ∘ .. ∘ s_{k_r}`, where `s_k` swaps
    /// `k` and `k+1`. Obtained by bubble sort.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        let mut a = self.0.clone();
        let mut record = Vec::new();
        let n = a.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(1 + pass) {
                if a[k] > a[k + 1] {
                    // a ∘ s_k swaps the entries at k, k+1
                    a.swap(k, k + 1);
                    record.push(k);
                }
            }
        }
        record.reverse();
        record
    }

    /// Number of pairs `a < b` with `π(a) > π(b)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.0[a] > self.0[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Every permutation of `{0..len-1}`, lexicographic in one-line notation.
pub fn all_perms(len: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..len).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..len).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..len).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Permutations of `{0..n}` fixing `0`, i.e. `S_n` inside `S_{n+}`.
pub fn perms_fixing_zero(n: usize) -> Vec<Perm> {
    all_perms(n)
        .into_iter()
        .map(|p| {
            let mut v = vec![0];
            v.extend(p.0.iter().map(|x| x + 1));
            Perm(v)
        })
        .collect()
}

/// `π∘_jρ ∈ S_{m+n-1}` for `π ∈ S_m`, `ρ ∈ S_n` (all fixing 0), built from its inverse:
/// with `(u_1..u_{j-1}, u_{j+1}..u_m) = (1..j-1, j+n..m+n-1)` and `u'_k = j+k-1`,
///
/// ```text
/// (π∘_jρ)^{-1}(i) = u_{π^{-1}(i)}                 for 1 <= i <= π(j)-1
///                 = u'_{ρ^{-1}(i-π(j)+1)}         for π(j) <= i <= π(j)+n-1
///                 = u_{π^{-1}(i-n+1)}             for π(j)+n <= i <= m+n-1
/// ```
pub fn operadic_compose(pi: &Perm, j: usize, rho: &Perm) -> Result<Perm> {
    let (m, n) = (pi.len() - 1, rho.len() - 1);
    if !pi.fixes_zero() || !rho.fixes_zero() {
        return Err(Error::Permutation("π∘_jρ needs permutations fixing 0".into()));
    }
    if j == 0 || j > m {
        return Err(Error::Arity(format!("slot {j} out of range for arity {m}")));
    }
    let u = |k: usize| if k < j { k } else { k + n - 1 };
    let u_prime = |k: usize| j + k - 1;
    let (pi_inv, rho_inv) = (pi.inverse(), rho.inverse());
    let pj = pi.apply(j);
    let total = m + n - 1;
    let mut inv = vec![0usize; total + 1];
    for (i, slot) in inv.iter_mut().enumerate().skip(1) {
        *slot = if i < pj {
            u(pi_inv.apply(i))
        } else if i < pj + n {
            u_prime(rho_inv.apply(i - pj + 1))
        } else {
            u(pi_inv.apply(i - n + 1))
        };
    }
    Ok(Perm::new(inv)
        .map_err(|_| Error::Internal(format!("π∘_jρ formula gave a non-bijection for {pi:?} ∘_{j} {rho:?}")))?
        .inverse())
}

/// The structure the axiom checker needs.
pub trait CyclicOperad: Sync {
    type Elem: Clone + PartialEq + Send + Sync;

    fn compose(&self, a: &Self::Elem, b: &Self::Elem, j: usize) -> Result<Self::Elem>;
    fn act(&self, pi: &Perm, x: &Self::Elem) -> Result<Self::Elem>;
    fn describe(&self, x: &Self::Elem) -> String;
    /// A spanning set of homogeneous elements of the arity-`n` piece within the
    /// checker's bounds.
    fn spanning(&self, n: usize) -> Vec<Self::Elem>;
    fn negate(&self, x: &Self::Elem) -> Self::Elem;
    /// ℤ/2-degree of a homogeneous element. Axioms that exchange two inputs pick up
    /// the Koszul sign `(-1)^{|x||y|}`.
    fn parity(&self, _x: &Self::Elem) -> u8 {
        0
    }
}

/// Result of checking one axiom over all arity combinations within `max_arity`.
fn summarize(axiom: usize, name: &str, max_arity: usize, results: Vec<(usize, Option<String>)>) -> Check {
    let instances: usize = results.iter().map(|r| r.0).sum();
    let failure = results.into_iter().find_map(|r| r.1);
    Check::new(
        format!("axiom-{axiom}"),
        [("law", name.to_string()), ("max_arity", max_arity.to_string()), ("instances", instances.to_string())],
        failure,
    )
}

fn mismatch<O: CyclicOperad>(op: &O, what: impl FnOnce() -> String, lhs: &Result<O::Elem>, rhs: &Result<O::Elem>) -> Option<String> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => None,
        (Ok(l), Ok(r)) => Some(format!("{}: lhs = {}, rhs = {}", what(), op.describe(l), op.describe(r))),
        (l, r) => Some(format!(
            "{}: evaluation error ({:?} / {:?})",
            what(),
            l.as_ref().err(),
            r.as_ref().err()
        )),
    }
}

fn signed<O: CyclicOperad>(op: &O, x: Result<O::Elem>, odd: bool) -> Result<O::Elem> {
    if odd {
        x.map(|x| op.negate(&x))
    } else {
        x
    }
}

fn cloned<T: Clone>(x: &Result<T>) -> Result<T> {
    x.as_ref().map(Clone::clone).map_err(Clone::clone)
}

/// Checks axioms (1)-(4) on every combination of spanning elements with all arities
/// `<= max_arity`. Returns one record per axiom, carrying the first counterexample.
/// In (2) and (3), where two inputs trade places, the right-hand side carries the
/// Koszul sign of the exchange.
pub fn check_axioms<O: CyclicOperad>(op: &O, max_arity: usize) -> Vec<Check> {
    let span: Vec<Vec<O::Elem>> = (0..=max_arity)
        .map(|n| if n == 0 { Vec::new() } else { op.spanning(n) })
        .collect();
    let par: Vec<Vec<u8>> = span.iter().map(|s| s.iter().map(|x| op.parity(x)).collect()).collect();
    let arities: Vec<usize> = (1..=max_arity).collect();
    let pairs: Vec<(usize, usize)> = arities.iter().flat_map(|&m| arities.iter().map(move |&n| (m, n))).collect();
    let triples: Vec<(usize, usize, usize)> = arities
        .iter()
        .flat_map(|&k| pairs.iter().map(move |&(l, m)| (k, l, m)))
        .collect();

    // (1) (π∘_jρ)(a∘_j b) = (πa)∘_{π(j)}(ρb)
    let ax1 = pairs
        .par_iter()
        .map(|&(m, n)| {
            let mut count = 0;
            let pis = perms_fixing_zero(m);
            let rhos = perms_fixing_zero(n);
            let mut composites = Vec::new();
            for j in 1..=m {
                for pi in &pis {
                    for rho in &rhos {
                        composites.push(operadic_compose(pi, j, rho));
                    }
                }
            }
            for a in &span[m] {
                let pas: Vec<Result<O::Elem>> = pis.iter().map(|pi| op.act(pi, a)).collect();
                for b in &span[n] {
                    let rbs: Vec<Result<O::Elem>> = rhos.iter().map(|rho| op.act(rho, b)).collect();
                    let mut idx = 0;
                    for j in 1..=m {
                        let ab = op.compose(a, b, j);
                        for (pi, pa) in pis.iter().zip(&pas) {
                            for (rho, rb) in rhos.iter().zip(&rbs) {
                                count += 1;
                                let composite = &composites[idx];
                                idx += 1;
                                let lhs = cloned(composite)
                                    .and_then(|p| op.act(&p, ab.as_ref().map_err(Clone::clone)?));
                                let rhs = match (pa, rb) {
                                    (Ok(pa), Ok(rb)) => op.compose(pa, rb, pi.apply(j)),
                                    (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                                };
                                if let Some(msg) = mismatch(
                                    op,
                                    || format!("a={} b={} j={j} π={pi:?} ρ={rho:?}", op.describe(a), op.describe(b)),
                                    &lhs,
                                    &rhs,
                                ) {
                                    return (count, Some(msg));
                                }
                            }
                        }
                    }
                }
            }
            (count, None)
        })
        .collect();

    // (2) τ_{m+n-1}(a∘_m b) = (τ_n b)∘_1(τ_m a)
    let ax2 = pairs
        .par_iter()
        .map(|&(m, n)| {
            let mut count = 0;
            for (a, pa) in span[m].iter().zip(&par[m]) {
                for (b, pb) in span[n].iter().zip(&par[n]) {
                    count += 1;
                    let lhs = op.compose(a, b, m).and_then(|ab| op.act(&Perm::cycle(m + n - 1), &ab));
                    let rhs = op
                        .act(&Perm::cycle(n), b)
                        .and_then(|tb| op.compose(&tb, &op.act(&Perm::cycle(m), a)?, 1));
                    let rhs = signed(op, rhs, pa * pb == 1);
                    if let Some(msg) =
                        mismatch(op, || format!("a={} b={}", op.describe(a), op.describe(b)), &lhs, &rhs)
                    {
                        return (count, Some(msg));
                    }
                }
            }
            (count, None)
        })
        .collect();

    // (3) (a∘_i b)∘_{j+l-1} c = (a∘_j c)∘_i b for i < j
    let ax3 = triples
        .par_iter()
        .map(|&(k, l, m)| {
            let mut count = 0;
            if k < 2 {
                return (count, None);
            }
            for a in &span[k] {
                for (b, pb) in span[l].iter().zip(&par[l]) {
                    let abs: Vec<Result<O::Elem>> = (1..=k).map(|i| op.compose(a, b, i)).collect();
                    for (c, pc) in span[m].iter().zip(&par[m]) {
                        let acs: Vec<Result<O::Elem>> = (1..=k).map(|j| op.compose(a, c, j)).collect();
                        for i in 1..=k {
                            for j in i + 1..=k {
                                count += 1;
                                let lhs = cloned(&abs[i - 1]).and_then(|ab| op.compose(&ab, c, j + l - 1));
                                let rhs = cloned(&acs[j - 1]).and_then(|ac| op.compose(&ac, b, i));
                                let rhs = signed(op, rhs, pb * pc == 1);
                                if let Some(msg) = mismatch(
                                    op,
                                    || {
                                        format!(
                                            "a={} b={} c={} i={i} j={j}",
                                            op.describe(a),
                                            op.describe(b),
                                            op.describe(c)
                                        )
                                    },
                                    &lhs,
                                    &rhs,
                                ) {
                                    return (count, Some(msg));
                                }
                            }
                        }
                    }
                }
            }
            (count, None)
        })
        .collect();

    // (4) (a∘_i b)∘_{i+j-1} c = a∘_i(b∘_j c)
    let ax4 = triples
        .par_iter()
        .map(|&(k, l, m)| {
            let mut count = 0;
            for b in &span[l] {
                for c in &span[m] {
                    let bcs: Vec<Result<O::Elem>> = (1..=l).map(|j| op.compose(b, c, j)).collect();
                    for a in &span[k] {
                        for i in 1..=k {
                            let ab = op.compose(a, b, i);
                            for j in 1..=l {
                                count += 1;
                                let lhs = cloned(&ab).and_then(|ab| op.compose(&ab, c, i + j - 1));
                                let rhs = cloned(&bcs[j - 1]).and_then(|bc| op.compose(a, &bc, i));
                                if let Some(msg) = mismatch(
                                    op,
                                    || {
                                        format!(
                                            "a={} b={} c={} i={i} j={j}",
                                            op.describe(a),
                                            op.describe(b),
                                            op.describe(c)
                                        )
                                    },
                                    &lhs,
                                    &rhs,
                                ) {
                                    return (count, Some(msg));
                                }
                            }
                        }
                    }
                }
            }
            (count, None)
        })
        .collect();

    vec![
        summarize(1, "(π∘_jρ)(a∘_j b) = (πa)∘_{π(j)}(ρb)", max_arity, ax1),
        summarize(2, "τ_{m+n-1}(a∘_m b) = (τ_n b)∘_1(τ_m a)", max_arity, ax2),
        summarize(3, "(a∘_i b)∘_{j+l-1} c = (a∘_j c)∘_i b", max_arity, ax3),
        summarize(4, "(a∘_i b)∘_{i+j-1} c = a∘_i(b∘_j c)", max_arity, ax4),
    ]
}
