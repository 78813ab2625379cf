//! The super endomorphism cyclic operad `E^s[M, b]` of a finite-dimensional
//! `ℤ/2`-graded space with an even super-symmetric pairing, the induced pairing on
//! tensor powers, and the composition/pairing compatibility check.
//!
//! A space is described by a small text file:
//!
//! ```text
//! vector e even
//! vector o1 odd
//! vector o2 odd
//! pair e e = 2
//! pair o1 o2 = 1
//! pair o2 o1 = -1       # omitted entries are zero
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};

use crate::base_algebra::parse_scalar;
use crate::linalg;
use crate::perm::{CyclicOperad, Perm};
use crate::poly::Scalar;
use crate::report::Check;
use crate::{Error, Result};

/// A vector in coordinates with respect to the basis of a [`SuperSpace`].
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    names: Vec<String>,
    parity: Vec<u8>,
    b: Vec<Vec<Scalar>>,
}

impl SuperSpace {
    /// Validates that `b` is even and super-symmetric.
    pub fn new(names: Vec<String>, parity: Vec<u8>, b: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = names.len();
        if parity.len() != dim || b.len() != dim || b.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("names, parities and pairing matrix disagree in size".into()));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::Precondition("parities must be 0 or 1".into()));
        }
        for i in 0..dim {
            for j in 0..dim {
                if parity[i] != parity[j] && !b[i][j].is_zero() {
                    return Err(Error::AlgebraLaw(format!(
                        "pairing is not even: b({}, {}) = {}",
                        names[i], names[j], b[i][j]
                    )));
                }
                let sign = if parity[i] * parity[j] == 1 { -Scalar::one() } else { Scalar::one() };
                if b[i][j] != &b[j][i] * &sign {
                    return Err(Error::AlgebraLaw(format!(
                        "pairing is not super-symmetric on ({}, {})",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(SuperSpace { names, parity, b })
    }

    /// Purely even space with `b` = identity, where all Koszul signs are trivial.
    pub fn all_even(dim: usize) -> Self {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        let b = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        SuperSpace::new(names, vec![0; dim], b).expect("identity pairing is valid")
    }

    /// Mixed-parity spaces used by the checks:
    /// 1: `e` with `b(e,e)=1`; 2: symplectic `o1, o2`; 3: `e` with `b(e,e)=2` plus
    /// `o1, o2`; 4: `e1, e2` with Gram matrix `[[2,1],[1,0]]` plus `o1, o2`.
    pub fn standard(dim: usize) -> Result<Self> {
        let text = match dim {
            1 => "vector e even\npair e e = 1\n",
            2 => "vector o1 odd\nvector o2 odd\npair o1 o2 = 1\npair o2 o1 = -1\n",
            3 => "vector e even\nvector o1 odd\nvector o2 odd\npair e e = 2\npair o1 o2 = 1\npair o2 o1 = -1\n",
            4 => "vector e1 even\nvector e2 even\nvector o1 odd\nvector o2 odd\n\
                  pair e1 e1 = 2\npair e1 e2 = 1\npair e2 e1 = 1\npair o1 o2 = 1\npair o2 o1 = -1\n",
            _ => return Err(Error::Usage(format!("no standard super space of dimension {dim} (use 1..4)"))),
        };
        Self::parse(text)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config { line: 0, message: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Config { line, message };
        let mut names: Vec<String> = Vec::new();
        let mut parity = Vec::new();
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks.as_slice() {
                ["vector", name, p] => {
                    let p = match *p {
                        "even" | "0" => 0,
                        "odd" | "1" => 1,
                        _ => return Err(err(line, format!("parity must be even or odd, got `{p}`"))),
                    };
                    if names.iter().any(|n| n == name) {
                        return Err(err(line, format!("duplicate vector `{name}`")));
                    }
                    names.push(name.to_string());
                    parity.push(p);
                }
                ["pair", a, b, "=", v] => {
                    let v = parse_scalar(v).map_err(|m| err(line, m))?;
                    entries.push((line, a.to_string(), b.to_string(), v));
                }
                _ => return Err(err(line, format!("cannot parse `{content}`"))),
            }
        }
        if names.is_empty() {
            return Err(err(0, "space has no basis vectors".into()));
        }
        let dim = names.len();
        let mut b = vec![vec![Scalar::zero(); dim]; dim];
        for (line, x, y, v) in entries {
            let find = |n: &str| names.iter().position(|m| m == n).ok_or_else(|| err(line, format!("unknown vector `{n}`")));
            b[find(&x)?][find(&y)?] = v;
        }
        SuperSpace::new(names, parity, b)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn pairing(&self, i: usize, j: usize) -> &Scalar {
        &self.b[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        (0..self.dim()).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn vector_parity(&self, v: &[Scalar]) -> Result<u8> {
        let mut ps = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| self.parity[i]);
        let Some(p) = ps.next() else { return Ok(0) };
        if ps.all(|q| q == p) {
            Ok(p)
        } else {
            Err(Error::Precondition("vector is not homogeneous".into()))
        }
    }

    /// `b(e_i, v)`.
    fn pair_basis_vector(&self, i: usize, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() && !self.b[i][k].is_zero() {
                acc += &self.b[i][k] * c;
            }
        }
        acc
    }

    /// The standard basis together with its `b`-dual basis.
    pub fn dual_basis(&self) -> Result<DualBasisPair> {
        let dim = self.dim();
        let primal: Vec<Vector> = (0..dim).map(|i| self.basis_vector(i)).collect();
        let mut dual = Vec::with_capacity(dim);
        for nu in 0..dim {
            let rhs: Vec<Scalar> = (0..dim).map(|k| if k == nu { Scalar::one() } else { Scalar::zero() }).collect();
            let x = linalg::solve(&self.b, &rhs).map_err(|_| Error::Singular("pairing is degenerate".into()))?;
            self.vector_parity(&x)?;
            dual.push(x);
        }
        Ok(DualBasisPair { primal, dual })
    }
}

/// Homogeneous bases `Δ_ν`, `Δ^ν` with `b(Δ_ν, Δ^ν') = δ_{ν,ν'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair {
    pub primal: Vec<Vector>,
    pub dual: Vec<Vector>,
}

/// An element of `M^{⊗ arity}` in the tensor basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperTensor {
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl SuperTensor {
    pub fn zero(arity: usize) -> Self {
        SuperTensor { arity, coeffs: BTreeMap::new() }
    }

    pub fn basis(indices: Vec<usize>) -> Self {
        let arity = indices.len();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(indices, Scalar::one());
        SuperTensor { arity, coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, Scalar)>>(arity: usize, it: I) -> Result<Self> {
        let mut t = SuperTensor::zero(arity);
        for (idx, c) in it {
            if idx.len() != arity {
                return Err(Error::Arity(format!("tuple {idx:?} does not have {arity} factors")));
            }
            t.add_term(idx, c);
        }
        Ok(t)
    }

    /// `v_0 ⊗ .. ⊗ v_k` for coordinate vectors.
    pub fn decomposable(factors: &[Vector]) -> Self {
        let mut t = SuperTensor { arity: 0, coeffs: BTreeMap::from([(Vec::new(), Scalar::one())]) };
        for f in factors {
            let mut next = SuperTensor::zero(t.arity + 1);
            for (idx, c) in &t.coeffs {
                for (k, d) in f.iter().enumerate() {
                    if !d.is_zero() {
                        let mut i = idx.clone();
                        i.push(k);
                        next.add_term(i, c * d);
                    }
                }
            }
            t = next;
        }
        t
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(idx.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn neg(&self) -> Self {
        SuperTensor { arity: self.arity, coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    /// Operadic arity `n` of an element of `M^{⊗(n+1)}`.
    pub fn operadic_arity(&self) -> usize {
        self.arity - 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total parity if every term has the same parity.
    pub fn parity(&self, space: &SuperSpace) -> Option<u8> {
        let mut ps = self.coeffs.keys().map(|idx| tuple_parity(space, idx));
        let Some(p) = ps.next() else { return Some(0) };
        ps.all(|q| q == p).then_some(p)
    }

    pub fn format(&self, space: &SuperSpace) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, c)| {
                let names: Vec<&str> = idx.iter().map(|&i| space.name(i)).collect();
                format!("{c}*{}", names.join("⊗"))
            })
            .collect();
        parts.join(" + ")
    }
}

fn tuple_parity(space: &SuperSpace, idx: &[usize]) -> u8 {
    idx.iter().map(|&i| space.parity(i)).sum::<u8>() % 2
}

fn sign(exponent: usize) -> Scalar {
    if exponent % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `(-1)^N b(v_j, w_0) v_0..v_{j-1} w_1..w_n v_{j+1}..v_m` with
/// `N = Σ_{r=0..n} Σ_{s=j+1..m} |w_r||v_s|`.
pub fn es_compose(space: &SuperSpace, v: &SuperTensor, w: &SuperTensor, j: usize) -> Result<SuperTensor> {
    let (m, n) = (v.operadic_arity(), w.operadic_arity());
    if v.arity < 2 || w.arity < 2 {
        return Err(Error::Arity("tensors in the operad have at least two factors".into()));
    }
    if j == 0 || j > m {
        return Err(Error::Arity(format!("slot {j} out of range 1..={m}")));
    }
    let mut out = SuperTensor::zero(m + n);
    for (vi, vc) in &v.coeffs {
        for (wi, wc) in &w.coeffs {
            let b = space.pairing(vi[j], wi[0]);
            if b.is_zero() {
                continue;
            }
            let w_par: usize = wi.iter().map(|&i| space.parity(i) as usize).sum();
            let v_tail: usize = vi[j + 1..].iter().map(|&i| space.parity(i) as usize).sum();
            let mut idx = Vec::with_capacity(m + n);
            idx.extend_from_slice(&vi[..j]);
            idx.extend_from_slice(&wi[1..]);
            idx.extend_from_slice(&vi[j + 1..]);
            out.add_term(idx, sign(w_par * v_tail) * b * vc * wc);
        }
    }
    Ok(out)
}

/// Action of `π` on `M^{⊗(n+1)}` through adjacent transpositions, each swapping two
/// neighbouring factors with the sign `(-1)^{|v_k||v_{k+1}|}`.
pub fn es_permute(space: &SuperSpace, pi: &Perm, v: &SuperTensor) -> Result<SuperTensor> {
    if pi.len() != v.arity {
        return Err(Error::Permutation(format!("{pi:?} does not act on {} factors", v.arity)));
    }
    let word = pi.adjacent_transpositions();
    let mut out = SuperTensor::zero(v.arity);
    for (idx, c) in &v.coeffs {
        let mut idx = idx.clone();
        let mut flips = 0usize;
        for &k in word.iter().rev() {
            flips += (space.parity(idx[k]) * space.parity(idx[k + 1])) as usize;
            idx.swap(k, k + 1);
        }
        out.add_term(idx, sign(flips) * c);
    }
    Ok(out)
}

/// `⟨v, α⟩ = Σ (-1)^S ∏ b(v_i, α_i)` with `S = Σ_{i>j} |v_i||α_j|`.
pub fn pair(space: &SuperSpace, v: &SuperTensor, alpha: &SuperTensor) -> Result<Scalar> {
    if v.arity != alpha.arity {
        return Err(Error::Arity(format!("pairing tensors with {} and {} factors", v.arity, alpha.arity)));
    }
    let mut acc = Scalar::zero();
    for (vi, vc) in &v.coeffs {
        for (ai, ac) in &alpha.coeffs {
            if let Some(p) = pair_tuples(space, vi, ai) {
                acc += p * vc * ac;
            }
        }
    }
    Ok(acc)
}

fn pair_tuples(space: &SuperSpace, vi: &[usize], ai: &[usize]) -> Option<Scalar> {
    let mut prod = Scalar::one();
    for (x, y) in vi.iter().zip(ai) {
        let b = space.pairing(*x, *y);
        if b.is_zero() {
            return None;
        }
        prod *= b;
    }
    let mut s = 0usize;
    let mut alpha_before = 0usize;
    for (x, y) in vi.iter().zip(ai) {
        s += space.parity(*x) as usize * alpha_before;
        alpha_before += space.parity(*y) as usize;
    }
    Some(sign(s) * prod)
}

/// Pairing of `v` against a decomposable tensor given by its factors.
fn pair_decomposable(space: &SuperSpace, v: &SuperTensor, factors: &[&Vector], parities: &[u8]) -> Scalar {
    let mut acc = Scalar::zero();
    'terms: for (vi, vc) in &v.coeffs {
        let mut prod = vc.clone();
        for (x, f) in vi.iter().zip(factors) {
            let b = space.pair_basis_vector(*x, f);
            if b.is_zero() {
                continue 'terms;
            }
            prod *= b;
        }
        let mut s = 0usize;
        let mut alpha_before = 0usize;
        for (x, p) in vi.iter().zip(parities) {
            s += space.parity(*x) as usize * alpha_before;
            alpha_before += *p as usize;
        }
        acc += sign(s) * prod;
    }
    acc
}

/// Both sides of the composition/pairing identity, with the per-`ν` signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VowaOutcome {
    pub lhs: Scalar,
    /// right-hand side with the full sign `(-1)^{N_ν}`
    pub rhs_full: Scalar,
    /// right-hand side with `(-1)^{|Δ_ν|}`
    pub rhs_simplified: Scalar,
    /// first `ν` whose nonzero term gets different signs from the two rules
    pub sign_disagreement: Option<usize>,
}

impl VowaOutcome {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs_full && self.lhs == self.rhs_simplified && self.sign_disagreement.is_none()
    }
}

/// Evaluates `⟨v∘_j w, α⟩` and `Σ_ν ± ⟨v, α_0..α_{j-1} Δ_ν α_{j+n}..⟩⟨w, Δ^ν α_j..α_{j+n-1}⟩`.
/// Refuses odd `v` or `w`, which the identity does not cover.
pub fn vowa_check(
    space: &SuperSpace,
    duals: &DualBasisPair,
    v: &SuperTensor,
    w: &SuperTensor,
    j: usize,
    alpha: &[Vector],
) -> Result<VowaOutcome> {
    if v.parity(space) != Some(0) || w.parity(space) != Some(0) {
        return Err(Error::Precondition("v and w must be even".into()));
    }
    let (m, n) = (v.operadic_arity(), w.operadic_arity());
    if alpha.len() != m + n {
        return Err(Error::Arity(format!("α needs {} factors, got {}", m + n, alpha.len())));
    }
    let ap: Vec<u8> = alpha.iter().map(|a| space.vector_parity(a)).collect::<Result<_>>()?;
    let alpha_refs: Vec<&Vector> = alpha.iter().collect();
    let lhs = pair_decomposable(space, &es_compose(space, v, w, j)?, &alpha_refs, &ap);

    let outer_par: usize = ap[..j].iter().map(|&p| p as usize).sum();
    let inner_par: usize = ap[j..j + n].iter().map(|&p| p as usize).sum();
    let mut rhs_full = Scalar::zero();
    let mut rhs_simplified = Scalar::zero();
    let mut sign_disagreement = None;
    for nu in 0..duals.primal.len() {
        let (d_lo, d_hi) = (&duals.primal[nu], &duals.dual[nu]);
        let (p_lo, p_hi) = (space.vector_parity(d_lo)?, space.vector_parity(d_hi)?);
        let mut vf: Vec<&Vector> = alpha_refs[..j].to_vec();
        vf.push(d_lo);
        vf.extend_from_slice(&alpha_refs[j + n..]);
        let mut vp: Vec<u8> = ap[..j].to_vec();
        vp.push(p_lo);
        vp.extend_from_slice(&ap[j + n..]);
        let left = pair_decomposable(space, v, &vf, &vp);
        if left.is_zero() {
            continue;
        }
        let mut wf: Vec<&Vector> = vec![d_hi];
        wf.extend_from_slice(&alpha_refs[j..j + n]);
        let mut wp = vec![p_hi];
        wp.extend_from_slice(&ap[j..j + n]);
        let right = pair_decomposable(space, w, &wf, &wp);
        let term = left * right;
        if term.is_zero() {
            continue;
        }
        let n_nu = outer_par * p_lo as usize + inner_par * p_hi as usize + inner_par * outer_par;
        let full = sign(n_nu);
        let simple = sign(p_lo as usize);
        if full != simple && sign_disagreement.is_none() {
            sign_disagreement = Some(nu);
        }
        rhs_full += &full * &term;
        rhs_simplified += simple * term;
    }
    Ok(VowaOutcome { lhs, rhs_full, rhs_simplified, sign_disagreement })
}

/// Every basis tuple of `M^{⊗k}`.
pub fn basis_tuples(dim: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

/// Runs [`vowa_check`] on every even basis `v` (arity `m <= max_arity`), even basis
/// `w` (arity `n <= max_arity`), slot `j` and basis tuple `α`. When some `α_i` pairs
/// to zero with the factor it meets on both sides, every term on both sides contains
/// that zero factor, so the instance holds as `0 = 0` without further evaluation.
pub fn vowa_exhaustive(space: &SuperSpace, max_arity: usize) -> Result<Check> {
    let duals = space.dual_basis()?;
    let dim = space.dim();
    let nonzero: Vec<Vec<bool>> = (0..dim).map(|i| (0..dim).map(|k| !space.pairing(i, k).is_zero()).collect()).collect();
    let even = |k: usize| -> Vec<Vec<usize>> {
        basis_tuples(dim, k).into_iter().filter(|t| tuple_parity(space, t) == 0).collect()
    };
    let basis_vectors: Vec<Vector> = (0..dim).map(|i| space.basis_vector(i)).collect();
    let mut instances = 0usize;
    let mut evaluated = 0usize;
    for m in 1..=max_arity {
        let vs = even(m + 1);
        for n in 1..=max_arity {
            let ws = even(n + 1);
            let alphas = basis_tuples(dim, m + n);
            for vi in &vs {
                for wi in &ws {
                    for j in 1..=m {
                        // partner of α_i: v_0..v_{j-1}, w_1..w_n, v_{j+1}..v_m
                        let mut partner = Vec::with_capacity(m + n);
                        partner.extend_from_slice(&vi[..j]);
                        partner.extend_from_slice(&wi[1..]);
                        partner.extend_from_slice(&vi[j + 1..]);
                        for ai in &alphas {
                            instances += 1;
                            if partner.iter().zip(ai).any(|(p, a)| !nonzero[*p][*a]) {
                                continue;
                            }
                            evaluated += 1;
                            let alpha: Vec<Vector> = ai.iter().map(|&i| basis_vectors[i].clone()).collect();
                            let out = vowa_check(
                                space,
                                &duals,
                                &SuperTensor::basis(vi.clone()),
                                &SuperTensor::basis(wi.clone()),
                                j,
                                &alpha,
                            )?;
                            if !out.holds() {
                                let name = |t: &[usize]| t.iter().map(|&i| space.name(i)).collect::<Vec<_>>().join("⊗");
                                return Ok(vowa_record(
                                    dim,
                                    max_arity,
                                    instances,
                                    evaluated,
                                    Some(format!(
                                        "v={} w={} j={j} α={}: lhs={} rhs(N_ν)={} rhs(|Δ_ν|)={} sign disagreement at ν={:?}",
                                        name(vi),
                                        name(wi),
                                        name(ai),
                                        out.lhs,
                                        out.rhs_full,
                                        out.rhs_simplified,
                                        out.sign_disagreement
                                    )),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(vowa_record(dim, max_arity, instances, evaluated, None))
}

fn vowa_record(dim: usize, max_arity: usize, instances: usize, evaluated: usize, failure: Option<String>) -> Check {
    Check::new(
        "vowa",
        [
            ("dim", dim.to_string()),
            ("max_arity", max_arity.to_string()),
            ("instances", instances.to_string()),
            ("nonzero_instances", evaluated.to_string()),
        ],
        failure,
    )
}

/// `E^s[M, b]` as a cyclic operad whose spanning sets are the basis tensors.
pub struct EsOperad<'a> {
    pub space: &'a SuperSpace,
}

impl CyclicOperad for EsOperad<'_> {
    type Elem = SuperTensor;

    fn compose(&self, a: &SuperTensor, b: &SuperTensor, j: usize) -> Result<SuperTensor> {
        if a.is_zero() || b.is_zero() {
            return Ok(SuperTensor::zero(a.arity + b.arity - 2));
        }
        es_compose(self.space, a, b, j)
    }

    fn act(&self, pi: &Perm, x: &SuperTensor) -> Result<SuperTensor> {
        es_permute(self.space, pi, x)
    }

    fn describe(&self, x: &SuperTensor) -> String {
        x.format(self.space)
    }

    fn spanning(&self, n: usize) -> Vec<SuperTensor> {
        basis_tuples(self.space.dim(), n + 1).into_iter().map(SuperTensor::basis).collect()
    }

    fn negate(&self, x: &SuperTensor) -> SuperTensor {
        x.neg()
    }

    fn parity(&self, x: &SuperTensor) -> u8 {
        x.parity(self.space).unwrap_or(0)
    }
}

/// Axioms (1)-(4) on all basis tensors with operadic arity `<= max_arity`, with
/// Koszul signs where inputs are exchanged.
pub fn es_axiom_check(space: &SuperSpace, max_arity: usize) -> Vec<Check> {
    crate::perm::check_axioms(&EsOperad { space }, max_arity)
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.parity)
            .map(|(n, p)| format!("{n}:{}", if *p == 0 { "even" } else { "odd" }))
            .collect();
        write!(f, "M = <{}>", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar;

    fn mixed_unit() -> SuperSpace {
        SuperSpace::parse("vector e even\nvector o1 odd\nvector o2 odd\npair e e = 1\npair o1 o2 = 1\npair o2 o1 = -1\n")
            .unwrap()
    }

    #[test]
    fn compose_examples() {
        let s = mixed_unit();
        let v = SuperTensor::basis(vec![0, 1]);
        let w = SuperTensor::basis(vec![2, 0]);
        assert_eq!(es_compose(&s, &v, &w, 1).unwrap(), SuperTensor::basis(vec![0, 0]));
        // parities of v_1 and w_0 differ
        let w = SuperTensor::basis(vec![0, 0]);
        assert!(es_compose(&s, &v, &w, 1).unwrap().is_zero());
        assert!(es_compose(&s, &v, &w, 2).is_err());
    }

    #[test]
    fn even_space_has_no_signs() {
        let s = SuperSpace::all_even(2);
        let v = SuperTensor::basis(vec![0, 1, 0]);
        let w = SuperTensor::basis(vec![1, 1]);
        assert_eq!(es_compose(&s, &v, &w, 1).unwrap(), SuperTensor::basis(vec![0, 1, 0]));
        let swap = Perm::new(vec![1, 0, 2]).unwrap();
        assert_eq!(es_permute(&s, &swap, &v).unwrap(), SuperTensor::basis(vec![1, 0, 0]));
    }

    #[test]
    fn odd_swap_flips_sign() {
        let s = mixed_unit();
        let v = SuperTensor::basis(vec![1, 2]);
        let swap = Perm::new(vec![1, 0]).unwrap();
        let expect = SuperTensor::from_terms(2, [(vec![2, 1], scalar(-1))]).unwrap();
        assert_eq!(es_permute(&s, &swap, &v).unwrap(), expect);
        assert_eq!(es_permute(&s, &Perm::identity(2), &v).unwrap(), v);
    }

    #[test]
    fn pairing_examples() {
        let s = SuperSpace::all_even(2);
        let v = SuperTensor::basis(vec![0, 1]);
        assert_eq!(pair(&s, &v, &SuperTensor::basis(vec![0, 1])).unwrap(), scalar(1));
        assert_eq!(pair(&s, &v, &SuperTensor::zero(2)).unwrap(), scalar(0));
        let m = mixed_unit();
        // v = e ⊗ o1, α = o2 ⊗ e would be odd against even; use v = o1 ⊗ o1, α = o2 ⊗ o2:
        // S = |v_2||α_1| = 1
        let v = SuperTensor::basis(vec![1, 1]);
        let a = SuperTensor::basis(vec![2, 2]);
        assert_eq!(pair(&m, &v, &a).unwrap(), scalar(-1));
    }

    #[test]
    fn dual_basis_is_dual() {
        for dim in 1..=4 {
            let s = SuperSpace::standard(dim).unwrap();
            let d = s.dual_basis().unwrap();
            for nu in 0..dim {
                for mu in 0..dim {
                    let b = s.pair_basis_vector(nu, &d.dual[mu]);
                    assert_eq!(b, if nu == mu { scalar(1) } else { scalar(0) });
                }
            }
        }
    }

    #[test]
    fn invalid_spaces_rejected() {
        assert!(matches!(
            SuperSpace::parse("vector e even\nvector o odd\npair e o = 1\npair o e = 1\n"),
            Err(Error::AlgebraLaw(_))
        ));
        assert!(matches!(
            SuperSpace::parse("vector o1 odd\nvector o2 odd\npair o1 o2 = 1\npair o2 o1 = 1\n"),
            Err(Error::AlgebraLaw(_))
        ));
        assert!(matches!(SuperSpace::parse("vector e sideways\n"), Err(Error::Config { line: 1, .. })));
    }

    #[test]
    fn vowa_refuses_odd_inputs() {
        let s = SuperSpace::standard(3).unwrap();
        let d = s.dual_basis().unwrap();
        let v = SuperTensor::basis(vec![0, 1]);
        let w = SuperTensor::basis(vec![0, 0]);
        let alpha = vec![s.basis_vector(0), s.basis_vector(0)];
        assert!(matches!(vowa_check(&s, &d, &v, &w, 1, &alpha), Err(Error::Precondition(_))));
    }

    #[test]
    fn vowa_small_exhaustive() {
        let s = SuperSpace::standard(2).unwrap();
        let c = vowa_exhaustive(&s, 2).unwrap();
        assert!(c.pass, "{:?}", c.counterexample);
    }
}
