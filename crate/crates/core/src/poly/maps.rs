use super::{Monomial, Polynomial};
use crate::{Error, Result};

/// A strictly increasing map `[1, n] -> [1, d]`, stored by its value list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingMap {
    target: usize,
    values: Vec<usize>,
}

impl IncreasingMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        let increasing = values.windows(2).all(|w| w[0] < w[1]);
        let in_range = values.iter().all(|&v| v >= 1 && v <= target);
        if !increasing || !in_range {
            return Err(Error::Precondition(format!(
                "{values:?} is not a strictly increasing map into [1,{target}]"
            )));
        }
        Ok(IncreasingMap { target, values })
    }

    pub fn identity(n: usize) -> Self {
        IncreasingMap { target: n, values: (1..=n).collect() }
    }

    pub fn source_size(&self) -> usize {
        self.values.len()
    }

    pub fn target_size(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }
}

/// All strictly increasing maps `[1,n] -> [1,d]` in lexicographic order of value lists.
pub fn enumerate_increasing_maps(n: usize, d: usize) -> Vec<IncreasingMap> {
    increasing_maps_into(n, 1, d)
        .into_iter()
        .map(|values| IncreasingMap { target: d, values })
        .collect()
}

/// Value lists of all strictly increasing maps `[1,n] -> [lo,hi]`, lexicographic.
/// An empty range (`lo > hi`) admits only the empty map, and only when `n = 0`.
pub fn increasing_maps_into(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, next: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let remaining = n - cur.len();
        let mut v = next;
        while v + remaining <= hi + 1 {
            cur.push(v);
            rec(n, v + 1, hi, cur, out);
            cur.pop();
            v += 1;
        }
    }
    rec(n, lo, hi, &mut cur, &mut out);
    out
}

/// Relabels a monomial along an increasing value list: `t_i -> t_{values[i-1]}`, `t0` fixed.
/// Caller guarantees every positive index is within the list.
pub(crate) fn relabel(m: &Monomial, values: &[usize]) -> Monomial {
    let top = values.last().copied().unwrap_or(0);
    let mut exps = vec![0u32; top + 1];
    exps[0] = m.t0_exponent();
    for (i, e) in m.support() {
        if i >= 1 {
            exps[values[i - 1]] = e;
        }
    }
    Monomial::from_exponents(exps)
}

/// `α_*`: renames `t_i` to `t_{α(i)}` for `i >= 1`, leaving `t0` alone.
pub fn pushforward(alpha: &IncreasingMap, p: &Polynomial) -> Result<Polynomial> {
    p.check_vars(alpha.source_size())?;
    Ok(pushforward_unchecked(&alpha.values, p))
}

pub(crate) fn pushforward_unchecked(values: &[usize], p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        out.add_term(relabel(m, values), c.clone());
    }
    out
}

/// `α^*`: `t_{α(j)} -> t_j`, every other positive variable to zero, `t0` fixed.
pub fn pullback(alpha: &IncreasingMap, p: &Polynomial) -> Result<Polynomial> {
    p.check_vars(alpha.target_size())?;
    let mut inverse = vec![0usize; alpha.target_size() + 1];
    for (j, &v) in alpha.values().iter().enumerate() {
        inverse[v] = j + 1;
    }
    Ok(p.map_monomials(|m| {
        let mut exps = vec![0u32; alpha.source_size() + 1];
        exps[0] = m.t0_exponent();
        for (i, e) in m.support() {
            if i == 0 {
                continue;
            }
            match inverse[i] {
                0 => return None,
                j => exps[j] = e,
            }
        }
        Some(Monomial::from_exponents(exps))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn vals(maps: &[IncreasingMap]) -> Vec<Vec<usize>> {
        maps.iter().map(|m| m.values().to_vec()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(vals(&enumerate_increasing_maps(0, 3)), vec![Vec::<usize>::new()]);
        assert_eq!(
            vals(&enumerate_increasing_maps(2, 3)),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert!(enumerate_increasing_maps(3, 2).is_empty());
        assert_eq!(vals(&enumerate_increasing_maps(0, 0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn empty_range_admits_only_empty_map() {
        assert_eq!(increasing_maps_into(0, 4, 3), vec![Vec::<usize>::new()]);
        assert!(increasing_maps_into(1, 4, 3).is_empty());
        assert_eq!(increasing_maps_into(2, 3, 5), vec![vec![3, 4], vec![3, 5], vec![4, 5]]);
    }

    #[test]
    fn pushforward_examples() {
        let a = IncreasingMap::new(vec![1, 3], 3).unwrap();
        assert_eq!(pushforward(&a, &p("t1*t2")).unwrap(), p("t1*t3"));
        let b = IncreasingMap::new(vec![2], 2).unwrap();
        assert_eq!(pushforward(&b, &p("t0^2*t1")).unwrap(), p("t0^2*t2"));
        let e = IncreasingMap::new(vec![], 0).unwrap();
        assert_eq!(pushforward(&e, &p("5")).unwrap(), p("5"));
        assert!(matches!(
            pushforward(&b, &p("t2")),
            Err(Error::VariableOutOfRange { index: 2, bound: 1 })
        ));
    }

    #[test]
    fn pullback_examples() {
        let a = IncreasingMap::new(vec![1, 3], 3).unwrap();
        assert!(pullback(&a, &p("t1*t2*t3")).unwrap().is_zero());
        assert_eq!(pullback(&a, &p("t1*t3")).unwrap(), p("t1*t2"));
        let b = IncreasingMap::new(vec![2], 2).unwrap();
        assert_eq!(pullback(&b, &p("t0 + t2")).unwrap(), p("t0 + t1"));
        assert!(pullback(&b, &p("t3")).is_err());
    }

    #[test]
    fn invalid_maps_rejected() {
        assert!(IncreasingMap::new(vec![2, 1], 3).is_err());
        assert!(IncreasingMap::new(vec![1, 4], 3).is_err());
        assert!(IncreasingMap::new(vec![0], 3).is_err());
    }
}
