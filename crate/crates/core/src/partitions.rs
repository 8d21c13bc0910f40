//! Partitions, 2-partitions, hooks, dominance and the quotient-core bijection.

use crate::algebra::RatFun;
use crate::error::{Error, Result};
use std::fmt;

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn dual(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Multiplicities `m_i` indexed by part size.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        self.multiplicities().iter().map(|&(i, m)| (i as u128).pow(m as u32) * factorial(m)).product()
    }

    /// `(arm, leg, hook)` for every box, row by row.
    pub fn hooks(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dual();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let a = row - j - 1;
                let l = d.0[j] - i - 1;
                out.push((a, l, a + l + 1));
            }
        }
        out
    }

    /// `H_λ(q) = Π (1 - q^{h(x)})`, as a function of the first variable.
    pub fn hook_poly(&self) -> RatFun {
        self.hooks().iter().map(|&(_, _, h)| RatFun::one() - RatFun::monomial(h as i64, 0, 1)).product()
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let sep = if t.contains('+') { '+' } else { ',' };
        let mut parts = Vec::new();
        for p in t.split(sep) {
            let v: usize = p.trim().parse().map_err(|_| Error::Parse(format!("bad partition '{}'", s)))?;
            parts.push(v);
        }
        let sorted = Partition::new(parts.clone());
        if sorted.0 != parts {
            return Err(Error::Parse(format!("parts must be positive and weakly decreasing: '{}'", s)));
        }
        Ok(sorted)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

pub fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// Partitions of `n` in reverse lexicographic order (largest first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance `λ ≥ μ` for partitions of equal size.
pub fn dominance_geq(l: &Partition, m: &Partition) -> Result<bool> {
    if l.size() != m.size() {
        return Err(Error::SizeMismatch(l.size(), m.size()));
    }
    let (mut sl, mut sm) = (0, 0);
    for i in 0..l.len().max(m.len()) {
        sl += l.part(i);
        sm += m.part(i);
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        BiPartition { first, second }
    }

    pub fn from_parts(a: &[usize], b: &[usize]) -> Self {
        BiPartition::new(Partition::new(a.to_vec()), Partition::new(b.to_vec()))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// `(λ⁽¹⁾*, λ⁽⁰⁾*)`.
    pub fn dual(&self) -> BiPartition {
        BiPartition::new(self.second.dual(), self.first.dual())
    }

    /// `z_𝛌 = 2^{l(𝛌)} z_{λ⁽⁰⁾} z_{λ⁽¹⁾}`.
    pub fn z(&self) -> u128 {
        (1u128 << self.len()) * self.first.z() * self.second.z()
    }

    pub fn parse(s: &str) -> Result<BiPartition> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bipartition must look like ([2],[1,1]): '{}'", s)))?;
        let close = inner.find(']').ok_or_else(|| Error::Parse(s.into()))?;
        let (a, rest) = inner.split_at(close + 1);
        let b = rest.trim().strip_prefix(',').ok_or_else(|| Error::Parse(s.into()))?;
        Ok(BiPartition::new(Partition::parse(a)?, Partition::parse(b)?))
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// All 2-partitions of `n`, ordered by first-component size descending.
pub fn bipartitions_of(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions_of(k) {
            for b in partitions_of(n - k) {
                out.push(BiPartition::new(a.clone(), b));
            }
        }
    }
    out
}

fn beta_set(l: &Partition, r: usize) -> Vec<usize> {
    (0..r).map(|i| l.part(i) + r - 1 - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let r = beta.len();
    Partition::new((0..r).map(|i| beta[i] - (r - 1 - i)).collect())
}

/// Quotient-core decomposition. Returns `d` (core `(d, d-1, …, 1)`) and the
/// 2-quotient read with `r ≡ d + 1 (mod 2)` beta-numbers.
pub fn core2_quotient2(l: &Partition) -> (usize, BiPartition) {
    let r0 = l.len();
    let beta = beta_set(l, r0);
    let l0 = beta.iter().filter(|b| *b % 2 == 0).count();
    let l1 = r0 - l0;
    let mut core_beta: Vec<usize> = (0..l0).map(|i| 2 * i).chain((0..l1).map(|i| 2 * i + 1)).collect();
    core_beta.sort_unstable();
    let core = from_beta(core_beta);
    let d = core.len();
    let r = if (r0 + d) % 2 == 1 { r0 } else { r0 + 1 };
    let beta = beta_set(l, r);
    let mut ev: Vec<usize> = beta.iter().filter(|b| *b % 2 == 0).map(|b| b / 2).collect();
    let mut od: Vec<usize> = beta.iter().filter(|b| *b % 2 == 1).map(|b| (b - 1) / 2).collect();
    ev.sort_unstable_by(|a, b| b.cmp(a));
    od.sort_unstable_by(|a, b| b.cmp(a));
    let q = |ys: &[usize]| Partition::new(ys.iter().enumerate().map(|(k, y)| y + k + 1 - ys.len()).collect());
    (d, BiPartition::new(q(&ev), q(&od)))
}

/// `{𝛂}_e`: the partition with 2-core of size `e ∈ {0,1}` and 2-quotient `𝛂`.
pub fn brace_e(a: &BiPartition, e: usize) -> Partition {
    assert!(e <= 1, "2-core must be (0) or (1)");
    // core (0) with r odd has l0 = l1 + 1; core (1) with r even has l0 = l1 + 2
    let c = e + 1;
    let l1 = a.second.len().max(a.first.len().saturating_sub(c));
    let l0 = l1 + c;
    let mut beta: Vec<usize> = (0..l0).map(|k| 2 * (a.first.part(k) + l0 - 1 - k)).collect();
    beta.extend((0..l1).map(|k| 2 * (a.second.part(k) + l1 - 1 - k) + 1));
    from_beta(beta)
}

pub fn hook_poly(l: &Partition) -> RatFun {
    l.hook_poly()
}

pub fn n_lambda(l: &Partition) -> usize {
    l.n()
}

pub fn dual(l: &Partition) -> Partition {
    l.dual()
}

pub fn hooks(l: &Partition) -> Vec<(usize, usize, usize)> {
    l.hooks()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn quotient_core_examples() {
        assert_eq!(core2_quotient2(&p(&[3])), (1, BiPartition::from_parts(&[1], &[])));
        assert_eq!(core2_quotient2(&p(&[2])), (0, BiPartition::from_parts(&[1], &[])));
        assert_eq!(core2_quotient2(&p(&[1, 1])), (0, BiPartition::from_parts(&[], &[1])));
        assert_eq!(core2_quotient2(&p(&[2, 2, 1])), (1, BiPartition::from_parts(&[], &[2])));
        assert_eq!(core2_quotient2(&p(&[3, 2])), (1, BiPartition::from_parts(&[1, 1], &[])));
        assert_eq!(brace_e(&BiPartition::from_parts(&[1], &[]), 0), p(&[2]));
        assert_eq!(brace_e(&BiPartition::from_parts(&[1], &[]), 1), p(&[3]));
        assert_eq!(brace_e(&BiPartition::from_parts(&[], &[1]), 1), p(&[1, 1, 1]));
        assert_eq!(brace_e(&BiPartition::empty(), 1), p(&[1]));
        assert_eq!(brace_e(&BiPartition::empty(), 0), p(&[]));
    }

    #[test]
    fn hooks_of_221() {
        let mut h: Vec<usize> = p(&[2, 2, 1]).hooks().iter().map(|x| x.2).collect();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 2, 3, 4]);
        assert_eq!(p(&[2, 2, 1]).n(), 4);
        assert_eq!(p(&[2, 2, 1]).dual(), p(&[3, 2]));
    }

    #[test]
    fn dominance() {
        assert!(dominance_geq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_geq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominance_geq(&p(&[2]), &p(&[1, 1])).unwrap());
        assert!(dominance_geq(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("3+1+1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::parse("[3,1,1]").unwrap(), p(&[3, 1, 1]));
        assert_eq!(BiPartition::parse("([2],[1,1])").unwrap(), BiPartition::from_parts(&[2], &[1, 1]));
        assert_eq!(BiPartition::parse("([],[1])").unwrap(), BiPartition::from_parts(&[], &[1]));
    }
}
