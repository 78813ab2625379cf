//! Pluggable finite-dimensional graded commutative algebras standing in for the Chow
//! rings of the stable genus-zero moduli spaces, together with φ-classes, permutation
//! actions and clutching maps.
//!
//! A base is described by a line-oriented text file:
//!
//! ```text
//! # comment
//! [algebra n=2]            # or n=* for every arity without its own section
//! basis pt deg 0
//! basis h deg 1
//! unit pt                  # optional, defaults to the first degree-0 basis element
//! mul h h = 0
//! phi 0 = h                # or `phi * = h` for every slot
//! perm 0,2,1 h = h         # one-line permutation of {0..n}, then a basis element
//! clutch m=2 n=2 j=1 pt pt = pt    # m, n, j may be `*`
//! ```
//!
//! Omitted products are zero, omitted permutation images are the identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};

use crate::perm::{self, Perm};
use crate::poly::{Monomial, Polynomial, Scalar};
use crate::{Error, Result};

/// Arities synthesised from an `n=*` section.
pub const WILDCARD_MAX_ARITY: usize = 16;

/// Dense coordinate vector in a [`GradedAlgebra`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgElement(pub Vec<Scalar>);

impl AlgElement {
    pub fn zero(dim: usize) -> Self {
        AlgElement(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(&mut self, other: &AlgElement, c: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * c;
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgElement {
        AlgElement(self.0.iter().map(|a| a * c).collect())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    names: Vec<String>,
    degrees: Vec<u32>,
    unit: usize,
    /// `table[i][j]` = product of basis elements `i` and `j`.
    table: Vec<Vec<AlgElement>>,
}

impl GradedAlgebra {
    /// Builds and validates an algebra. `products` lists `(i, j, e_i * e_j)`; the
    /// symmetric entry is filled in when missing.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<u32>,
        unit: usize,
        products: Vec<(usize, usize, AlgElement)>,
    ) -> Result<Self> {
        let dim = names.len();
        let mut table = vec![vec![AlgElement::zero(dim); dim]; dim];
        let mut given = vec![vec![false; dim]; dim];
        for (i, j, v) in products {
            table[i][j] = v.clone();
            given[i][j] = true;
            if !given[j][i] {
                table[j][i] = v;
            }
        }
        // unit products are forced
        for i in 0..dim {
            if !given[unit][i] {
                table[unit][i] = AlgElement::basis(dim, i);
            }
            if !given[i][unit] {
                table[i][unit] = AlgElement::basis(dim, i);
            }
        }
        let alg = GradedAlgebra { names, degrees, unit, table };
        alg.validate()?;
        Ok(alg)
    }

    /// The one-dimensional algebra ℚ.
    pub fn rationals() -> Self {
        GradedAlgebra::new(vec!["pt".into()], vec![0], 0, vec![]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit(&self) -> AlgElement {
        AlgElement::basis(self.dim(), self.unit)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement::zero(self.dim())
    }

    /// Degree of a nonzero homogeneous element, `None` if zero or mixed.
    pub fn homogeneous_degree(&self, x: &AlgElement) -> Option<u32> {
        let mut degs = x.nonzero().map(|(i, _)| self.degrees[i]);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &AlgElement {
        &self.table[i][j]
    }

    pub fn alg_mul(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = self.zero();
        for (i, a) in x.nonzero() {
            for (j, b) in y.nonzero() {
                out.add_scaled(&self.table[i][j], &(a * b));
            }
        }
        out
    }

    pub fn alg_pow(&self, x: &AlgElement, e: u32) -> AlgElement {
        let mut acc = self.unit();
        for _ in 0..e {
            acc = self.alg_mul(&acc, x);
        }
        acc
    }

    fn fmt_basis(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn format(&self, x: &AlgElement) -> String {
        format_combination(x.nonzero().map(|(i, c)| (c.clone(), self.fmt_basis(i).to_string())))
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dim();
        if self.degrees[self.unit] != 0 {
            return Err(Error::AlgebraLaw(format!("unit {} has nonzero degree", self.names[self.unit])));
        }
        for i in 0..dim {
            for j in 0..dim {
                let p = &self.table[i][j];
                if p != &self.table[j][i] {
                    return Err(Error::AlgebraLaw(format!(
                        "not commutative on ({}, {})",
                        self.names[i], self.names[j]
                    )));
                }
                let want = self.degrees[i] + self.degrees[j];
                if let Some((k, _)) = p.nonzero().find(|(k, _)| self.degrees[*k] != want) {
                    return Err(Error::AlgebraLaw(format!(
                        "{} * {} has a component on {} of the wrong degree",
                        self.names[i], self.names[j], self.names[k]
                    )));
                }
            }
            if self.table[self.unit][i] != AlgElement::basis(dim, i) {
                return Err(Error::AlgebraLaw(format!("unit law fails on {}", self.names[i])));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let ei = AlgElement::basis(dim, i);
                    let ek = AlgElement::basis(dim, k);
                    let left = self.alg_mul(&self.table[i][j], &ek);
                    let right = self.alg_mul(&ei, &self.table[j][k]);
                    if left != right {
                        return Err(Error::AlgebraLaw(format!(
                            "not associative on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Everything the base provides at one arity `n`: the algebra `B_n`, the classes
/// `φ_0..φ_n` and the explicitly given permutation images.
#[derive(Clone, Debug)]
pub struct ArityData {
    pub algebra: GradedAlgebra,
    pub phi: Vec<AlgElement>,
    /// permutation (one-line, on `{0..n}`) -> images of the basis elements
    pub perms: BTreeMap<Perm, Vec<AlgElement>>,
}

type ClutchKey = (Option<usize>, Option<usize>, Option<usize>);
type ClutchTable = HashMap<(String, String), Vec<(Scalar, String)>>;

/// A family of base algebras `B_n` (`n >= 2`) with φ-classes, actions and clutchings.
#[derive(Clone, Debug)]
pub struct BaseOperad {
    name: String,
    arities: BTreeMap<usize, ArityData>,
    clutch: BTreeMap<ClutchKey, ClutchTable>,
}

const TRIVIAL: &str = include_str!("../data/trivial.base");
const DUAL_NUMBERS: &str = include_str!("../data/dual_numbers.base");

impl BaseOperad {
    /// `B_n = ℚ`, all φ zero, clutching is multiplication, trivial actions.
    pub fn trivial() -> Self {
        Self::parse(TRIVIAL, "trivial").expect("bundled trivial base is valid")
    }

    /// `B_n = ℚ[h]/h²` with `φ_i = h`, clutching by multiplication, trivial actions.
    pub fn dual_numbers() -> Self {
        Self::parse(DUAL_NUMBERS, "dual-numbers").expect("bundled rank-2 base is valid")
    }

    pub fn load_config(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config { line: 0, message: format!("{}: {e}", path.display()) })?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Self::parse(&text, &name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self, n: usize) -> Result<&ArityData> {
        self.arities
            .get(&n)
            .ok_or_else(|| Error::MissingBase(format!("no algebra for arity {n} in base `{}`", self.name)))
    }

    pub fn algebra(&self, n: usize) -> Result<&GradedAlgebra> {
        Ok(&self.arity(n)?.algebra)
    }

    pub fn defined_arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.arities.keys().copied()
    }

    pub fn phi(&self, n: usize, i: usize) -> Result<&AlgElement> {
        let data = self.arity(n)?;
        data.phi
            .get(i)
            .ok_or_else(|| Error::MissingBase(format!("no phi_{i} at arity {n}")))
    }

    /// Action of `π ∈ S_{n+}` on `B_n`.
    pub fn act(&self, n: usize, pi: &Perm, x: &AlgElement) -> Result<AlgElement> {
        let data = self.arity(n)?;
        if pi.len() != n + 1 {
            return Err(Error::Permutation(format!("{pi:?} does not act on arity {n}")));
        }
        match data.perms.get(pi) {
            None => Ok(x.clone()),
            Some(images) => {
                let mut out = data.algebra.zero();
                for (i, c) in x.nonzero() {
                    out.add_scaled(&images[i], c);
                }
                Ok(out)
            }
        }
    }

    /// Clutching `∘_j : B_m ⊗ B_n -> B_{m+n-1}`.
    pub fn clutch(&self, m: usize, n: usize, j: usize, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        let table = [
            (Some(m), Some(n), Some(j)),
            (Some(m), Some(n), None),
            (None, None, None),
        ]
        .iter()
        .find_map(|k| self.clutch.get(k))
        .or_else(|| {
            self.clutch
                .iter()
                .find(|((km, kn, kj), _)| {
                    km.map_or(true, |v| v == m) && kn.map_or(true, |v| v == n) && kj.map_or(true, |v| v == j)
                })
                .map(|(_, t)| t)
        })
        .ok_or_else(|| Error::MissingBase(format!("no clutching map for m={m} n={n} j={j}")))?;
        let (am, an, target) = (self.algebra(m)?, self.algebra(n)?, self.algebra(m + n - 1)?);
        let mut out = target.zero();
        for (i, x) in a.nonzero() {
            for (k, y) in b.nonzero() {
                let key = (am.name(i).to_string(), an.name(k).to_string());
                if let Some(comb) = table.get(&key) {
                    for (c, name) in comb {
                        let idx = target.index_of(name).ok_or_else(|| {
                            Error::MissingBase(format!("clutch image `{name}` not in arity {}", m + n - 1))
                        })?;
                        out.0[idx] += x * y * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Parses the text format described in the module docs and validates every law.
    pub fn parse(text: &str, name: &str) -> Result<Self> {
        ConfigParser::default().run(text, name)
    }
}

/// `Σ c_i name_i`, printed like polynomials.
pub(crate) fn format_combination<I: IntoIterator<Item = (Scalar, String)>>(it: I) -> String {
    let mut out = String::new();
    for (c, name) in it {
        let neg = c < Scalar::zero();
        let abs = if neg { -c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{abs}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `2*h - 1/2*x + y` or `0` into `(coefficient, name)` pairs.
pub(crate) fn parse_combination(text: &str) -> std::result::Result<Vec<(Scalar, String)>, String> {
    let text = text.trim();
    if text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sign = Scalar::one();
    let mut rest = text;
    let mut first = true;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if !first {
            return Err(format!("expected `+` or `-` before `{rest}`"));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let term = term.trim();
        let (coef, name) = match term.rsplit_once('*') {
            Some((c, n)) => (parse_scalar(c.trim())?, n.trim()),
            None => match parse_scalar(term) {
                Ok(c) => (c, ""),
                Err(_) => (Scalar::one(), term),
            },
        };
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(format!("bad term `{term}`"));
        }
        out.push((coef * &sign, name.to_string()));
        sign = Scalar::one();
        rest = tail;
    }
    Ok(out)
}

pub(crate) fn parse_scalar(s: &str) -> std::result::Result<Scalar, String> {
    let bad = || format!("bad number `{s}`");
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Default)]
struct SectionDraft {
    line: usize,
    names: Vec<String>,
    degrees: Vec<u32>,
    unit: Option<String>,
    muls: Vec<(usize, String, String, Vec<(Scalar, String)>)>,
    phis: Vec<(usize, Option<usize>, Vec<(Scalar, String)>)>,
    perms: Vec<(usize, Perm, String, Vec<(Scalar, String)>)>,
}

#[derive(Default)]
struct ConfigParser {
    sections: BTreeMap<Option<usize>, SectionDraft>,
    clutch: BTreeMap<ClutchKey, ClutchTable>,
}

fn cfg_err(line: usize, message: impl Into<String>) -> Error {
    Error::Config { line, message: message.into() }
}

fn parse_key(tok: &str, key: &str, line: usize) -> Result<Option<usize>> {
    let v = tok
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| cfg_err(line, format!("expected `{key}=<value>`, got `{tok}`")))?;
    if v == "*" {
        Ok(None)
    } else {
        v.parse().map(Some).map_err(|_| cfg_err(line, format!("bad value in `{tok}`")))
    }
}

impl ConfigParser {
    fn run(mut self, text: &str, name: &str) -> Result<BaseOperad> {
        let mut current: Option<Option<usize>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(header) = content.strip_prefix('[') {
                let header = header
                    .strip_suffix(']')
                    .ok_or_else(|| cfg_err(line, "unterminated section header"))?;
                let mut toks = header.split_whitespace();
                if toks.next() != Some("algebra") {
                    return Err(cfg_err(line, format!("unknown section `{header}`")));
                }
                let n = parse_key(toks.next().unwrap_or(""), "n", line)?;
                if matches!(n, Some(k) if k < 2) {
                    return Err(cfg_err(line, "base algebras exist only for arity n >= 2"));
                }
                if self.sections.contains_key(&n) {
                    return Err(cfg_err(line, "duplicate section"));
                }
                self.sections.insert(n, SectionDraft { line, ..Default::default() });
                current = Some(n);
                continue;
            }
            let (lhs, rhs) = match content.split_once('=') {
                Some((l, r)) if !content.starts_with("clutch") && !content.starts_with("[") => (l.trim(), Some(r)),
                _ => (content, None),
            };
            let toks: Vec<&str> = lhs.split_whitespace().collect();
            match toks.first().copied() {
                Some("clutch") => self.clutch_line(content, line)?,
                Some(kw) => {
                    let key = current.ok_or_else(|| cfg_err(line, format!("`{kw}` outside a section")))?;
                    let sec = self.sections.get_mut(&key).unwrap();
                    let comb = || -> Result<Vec<(Scalar, String)>> {
                        let r = rhs.ok_or_else(|| cfg_err(line, "expected `= <linear combination>`"))?;
                        parse_combination(r).map_err(|m| cfg_err(line, m))
                    };
                    match (kw, toks.len()) {
                        ("basis", 4) if toks[2] == "deg" && rhs.is_none() => {
                            let d = toks[3].parse().map_err(|_| cfg_err(line, "bad degree"))?;
                            if sec.names.iter().any(|n| n == toks[1]) {
                                return Err(cfg_err(line, format!("duplicate basis element `{}`", toks[1])));
                            }
                            sec.names.push(toks[1].to_string());
                            sec.degrees.push(d);
                        }
                        ("unit", 2) if rhs.is_none() => sec.unit = Some(toks[1].to_string()),
                        ("mul", 3) => sec.muls.push((line, toks[1].into(), toks[2].into(), comb()?)),
                        ("phi", 2) => {
                            let slot = if toks[1] == "*" {
                                None
                            } else {
                                Some(toks[1].parse().map_err(|_| cfg_err(line, "bad phi slot"))?)
                            };
                            sec.phis.push((line, slot, comb()?));
                        }
                        ("perm", 3) => {
                            let p: Vec<usize> = toks[1]
                                .split(',')
                                .map(|t| t.trim().parse())
                                .collect::<std::result::Result<_, _>>()
                                .map_err(|_| cfg_err(line, "bad permutation"))?;
                            let p = Perm::new(p).map_err(|e| cfg_err(line, e.to_string()))?;
                            sec.perms.push((line, p, toks[2].into(), comb()?));
                        }
                        _ => return Err(cfg_err(line, format!("cannot parse `{content}`"))),
                    }
                }
                None => {}
            }
        }
        self.finish(name)
    }

    fn clutch_line(&mut self, content: &str, line: usize) -> Result<()> {
        let (lhs, rhs) = content
            .split_once('=')
            .and_then(|_| {
                // the first three `=` belong to m=, n=, j=
                let mut idx = 0;
                let mut seen = 0;
                for (i, ch) in content.char_indices() {
                    if ch == '=' {
                        seen += 1;
                        if seen == 4 {
                            idx = i;
                            break;
                        }
                    }
                }
                (idx > 0).then(|| (&content[..idx], &content[idx + 1..]))
            })
            .ok_or_else(|| cfg_err(line, "expected `clutch m=<m> n=<n> j=<j> <a> <b> = <combination>`"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 6 {
            return Err(cfg_err(line, "expected `clutch m=<m> n=<n> j=<j> <a> <b> = ...`"));
        }
        let key = (parse_key(toks[1], "m", line)?, parse_key(toks[2], "n", line)?, parse_key(toks[3], "j", line)?);
        if let (Some(m), Some(j)) = (key.0, key.2) {
            if j == 0 || j > m {
                return Err(cfg_err(line, format!("slot j={j} out of range for m={m}")));
            }
        }
        let comb = parse_combination(rhs).map_err(|m| cfg_err(line, m))?;
        self.clutch
            .entry(key)
            .or_default()
            .insert((toks[4].to_string(), toks[5].to_string()), comb);
        Ok(())
    }

    fn build_arity(n: usize, sec: &SectionDraft) -> Result<ArityData> {
        if sec.names.is_empty() {
            return Err(cfg_err(sec.line, "section has no basis"));
        }
        let dim = sec.names.len();
        let lookup = |name: &str, line: usize| -> Result<usize> {
            sec.names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| cfg_err(line, format!("unknown basis element `{name}`")))
        };
        let vector = |comb: &[(Scalar, String)], line: usize| -> Result<AlgElement> {
            let mut v = AlgElement::zero(dim);
            for (c, name) in comb {
                v.0[lookup(name, line)?] += c;
            }
            Ok(v)
        };
        let unit = match &sec.unit {
            Some(u) => lookup(u, sec.line)?,
            None => sec
                .degrees
                .iter()
                .position(|&d| d == 0)
                .ok_or_else(|| cfg_err(sec.line, "no degree-0 basis element for the unit"))?,
        };
        let mut products = Vec::new();
        for (line, a, b, comb) in &sec.muls {
            products.push((lookup(a, *line)?, lookup(b, *line)?, vector(comb, *line)?));
        }
        let algebra = GradedAlgebra::new(sec.names.clone(), sec.degrees.clone(), unit, products)?;
        let mut phi: Vec<Option<AlgElement>> = vec![None; n + 1];
        for (line, slot, comb) in &sec.phis {
            let v = vector(comb, *line)?;
            if !v.is_zero() && algebra.homogeneous_degree(&v) != Some(1) {
                return Err(cfg_err(*line, "phi classes must be homogeneous of degree 1"));
            }
            match slot {
                None => phi.iter_mut().for_each(|p| *p = Some(v.clone())),
                Some(i) if *i <= n => phi[*i] = Some(v),
                Some(i) => return Err(cfg_err(*line, format!("phi slot {i} out of range for arity {n}"))),
            }
        }
        let phi = phi
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| cfg_err(sec.line, format!("missing phi {i} for arity {n}"))))
            .collect::<Result<Vec<_>>>()?;
        let mut perms: BTreeMap<Perm, Vec<AlgElement>> = BTreeMap::new();
        for (line, p, basis, comb) in &sec.perms {
            if p.len() != n + 1 {
                return Err(cfg_err(*line, format!("permutation must act on {{0..{n}}}")));
            }
            let images = perms.entry(p.clone()).or_insert_with(|| (0..dim).map(|i| AlgElement::basis(dim, i)).collect());
            images[lookup(basis, *line)?] = vector(comb, *line)?;
        }
        let data = ArityData { algebra, phi, perms };
        validate_action(n, &data, sec.line)?;
        Ok(data)
    }

    fn finish(self, name: &str) -> Result<BaseOperad> {
        let mut arities = BTreeMap::new();
        for (key, sec) in &self.sections {
            if let Some(n) = key {
                arities.insert(*n, Self::build_arity(*n, sec)?);
            }
        }
        if let Some(template) = self.sections.get(&None) {
            if !template.perms.is_empty() {
                return Err(cfg_err(template.line, "`perm` lines are not allowed in an n=* section"));
            }
            for n in 2..=WILDCARD_MAX_ARITY {
                if let std::collections::btree_map::Entry::Vacant(e) = arities.entry(n) {
                    e.insert(Self::build_arity(n, template)?);
                }
            }
        }
        if arities.is_empty() {
            return Err(cfg_err(0, "config defines no algebra"));
        }
        Ok(BaseOperad { name: name.to_string(), arities, clutch: self.clutch })
    }
}

/// Checks `act(πρ) = act(π) act(ρ)` on all pairs when the arity is small enough to
/// enumerate `S_{n+}`.
fn validate_action(n: usize, data: &ArityData, line: usize) -> Result<()> {
    if data.perms.is_empty() || n > 4 {
        return Ok(());
    }
    let dim = data.algebra.dim();
    let apply = |p: &Perm, x: &AlgElement| -> AlgElement {
        match data.perms.get(p) {
            None => x.clone(),
            Some(images) => {
                let mut out = AlgElement::zero(dim);
                for (i, c) in x.nonzero() {
                    out.add_scaled(&images[i], c);
                }
                out
            }
        }
    };
    let all = perm::all_perms(n + 1);
    for p in &all {
        for q in &all {
            let pq = p.compose(q);
            for i in 0..dim {
                let e = AlgElement::basis(dim, i);
                if apply(&pq, &e) != apply(p, &apply(q, &e)) {
                    return Err(cfg_err(
                        line,
                        format!("permutation images do not form a group action ({p:?}, {q:?})"),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// An element of `B ⊗ R`, collected on (basis element, `R`-monomial).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct TensorR {
    pub terms: BTreeMap<(usize, Monomial), Scalar>,
}

impl TensorR {
    pub fn add_term(&mut self, basis: usize, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (basis, m);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ e_b ⊗ p` for `p = R`-polynomial.
    pub fn from_parts(alg: &AlgElement, p: &Polynomial) -> Self {
        let mut out = TensorR::default();
        for (b, c) in alg.nonzero() {
            for (m, d) in p.terms() {
                out.add_term(b, m.clone(), c * d);
            }
        }
        out
    }

    pub fn format(&self, alg: &GradedAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((b, m), c)| format!("{c}*{}⊗{m}", alg.name(*b)))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ratio, scalar};

    #[test]
    fn trivial_base_is_rationals_everywhere() {
        let b = BaseOperad::trivial();
        for n in 2..=6 {
            let a = b.algebra(n).unwrap();
            assert_eq!(a.dim(), 1);
            assert!(b.phi(n, 0).unwrap().is_zero());
        }
        let one = AlgElement(vec![scalar(3)]);
        let two = AlgElement(vec![scalar(2)]);
        assert_eq!(b.clutch(2, 3, 1, &one, &two).unwrap(), AlgElement(vec![scalar(6)]));
        assert!(b.arity(1).is_err());
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        let b = BaseOperad::dual_numbers();
        let a = b.algebra(2).unwrap();
        let h = AlgElement::basis(2, a.index_of("h").unwrap());
        assert!(a.alg_mul(&h, &h).is_zero());
        assert_eq!(a.alg_mul(&a.unit(), &h), h);
        assert_eq!(b.phi(3, 2).unwrap(), &h);
        assert_eq!(a.homogeneous_degree(&h), Some(1));
    }

    #[test]
    fn non_associative_constants_rejected() {
        // x*x = y, x*y = 0, but y*x... make (x*x)*x != x*(x*x) impossible with commutativity,
        // so use three generators: a*b = c, (a*b)*a = c*a = c, a*(b*a) = a*c = 0
        let text = "[algebra n=2]\nbasis one deg 0\nbasis a deg 0\nbasis b deg 0\nbasis c deg 0\n\
                    mul a b = c\nmul c a = c\nmul a a = 0\nmul b b = 0\nmul c c = 0\nmul b c = 0\nphi * = 0\n";
        match BaseOperad::parse(text, "bad") {
            Err(Error::AlgebraLaw(msg)) => assert!(msg.contains("associative"), "{msg}"),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn degree_violation_rejected() {
        let text = "[algebra n=2]\nbasis pt deg 0\nbasis h deg 1\nmul h h = h\nphi * = h\n";
        assert!(matches!(BaseOperad::parse(text, "bad"), Err(Error::AlgebraLaw(_))));
    }

    #[test]
    fn schema_errors_carry_line_numbers() {
        match BaseOperad::parse("[algebra n=2]\nbasis pt deg 0\nfrobnicate pt\n", "bad") {
            Err(Error::Config { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(BaseOperad::parse("basis pt deg 0\n", "bad"), Err(Error::Config { line: 1, .. })));
        assert!(matches!(
            BaseOperad::parse("[algebra n=2]\nbasis pt deg 0\n", "bad"),
            Err(Error::Config { .. })
        ));
        assert!(matches!(
            BaseOperad::parse("[algebra n=2]\nbasis pt deg 0\nbasis h deg 1\nphi * = pt\n", "bad"),
            Err(Error::Config { line: 4, .. })
        ));
    }

    #[test]
    fn explicit_permutation_action() {
        // x spans the sign representation of S_3
        let text = "[algebra n=2]\nbasis pt deg 0\nbasis x deg 1\nphi * = x\n\
                    perm 0,2,1 x = -x\nperm 1,0,2 x = -x\nperm 2,1,0 x = -x\n";
        let b = BaseOperad::parse(text, "sign").unwrap();
        let x = AlgElement::basis(2, 1);
        let swap = Perm::new(vec![0, 2, 1]).unwrap();
        assert_eq!(b.act(2, &swap, &x).unwrap(), x.scale(&scalar(-1)));
        assert_eq!(b.act(2, &Perm::cycle(2), &x).unwrap(), x);
        assert_eq!(b.act(2, &Perm::identity(3), &x).unwrap(), x);
    }

    #[test]
    fn broken_group_action_rejected() {
        let text = "[algebra n=2]\nbasis pt deg 0\nbasis x deg 1\nphi * = x\nperm 0,2,1 x = 2*x\n";
        assert!(matches!(BaseOperad::parse(text, "bad"), Err(Error::Config { .. })));
    }

    #[test]
    fn combination_parser() {
        assert_eq!(
            parse_combination("2*h - 1/2*x + y").unwrap(),
            vec![(scalar(2), "h".into()), (ratio(-1, 2), "x".into()), (scalar(1), "y".into())]
        );
        assert_eq!(parse_combination("0").unwrap(), vec![]);
        assert_eq!(parse_combination("-pt").unwrap(), vec![(scalar(-1), "pt".into())]);
        assert!(parse_combination("2*").is_err());
    }

    #[test]
    fn missing_clutch_is_an_error() {
        let text = "[algebra n=*]\nbasis pt deg 0\nphi * = 0\n";
        let b = BaseOperad::parse(text, "noclutch").unwrap();
        let u = b.algebra(2).unwrap().unit();
        assert!(matches!(b.clutch(2, 2, 1, &u, &u), Err(Error::MissingBase(_))));
    }

    #[test]
    fn alg_mul_is_degree_additive() {
        let b = BaseOperad::dual_numbers();
        let a = b.algebra(2).unwrap();
        let h = AlgElement::basis(2, 1);
        let x = a.alg_mul(&a.unit(), &h);
        assert_eq!(a.homogeneous_degree(&x), Some(1));
    }
}
