//! Sparse bivariate polynomials over ℤ with non-negative exponents.
//!
//! Terms are kept sorted by decreasing graded-lex order with the first
//! variable smaller than the second, so `terms()[0]` is the leading term.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

/// Exponent pair `(a, b)` for `x^a y^b`.
pub type Mono = (u32, u32);

#[inline]
pub(crate) fn order_key(m: Mono) -> (u32, u32) {
    (m.0 + m.1, m.1)
}

/// Graded lex with `x ≺ y`.
pub fn cmp_mono(a: Mono, b: Mono) -> Ordering {
    order_key(a).cmp(&order_key(b))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut map: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in it {
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Mono, BigInt>) -> Self {
        let mut terms: Vec<(Mono, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| cmp_mono(b.0, a.0));
        Poly { terms }
    }

    /// Terms must already be sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<(Mono, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| cmp_mono(w[0].0, w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lead(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn lead_is_negative(&self) -> bool {
        self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0)
    }

    pub fn min_exps(&self) -> Mono {
        let a = self.terms.iter().map(|t| t.0 .0).min().unwrap_or(0);
        let b = self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0);
        (a, b)
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match cmp_mono(*ma, *mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().map(|(m, c)| (*m, if negate { -c } else { c.clone() })));
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.mul_term(*m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.mul_term(*m, c);
        }
        let (dx, dy) = (self.deg_x() + o.deg_x(), self.deg_y() + o.deg_y());
        let cells = (dx as usize + 1) * (dy as usize + 1);
        if cells <= 4 * self.terms.len() * o.terms.len() + 64 {
            // dense accumulator
            let w = dx as usize + 1;
            let mut acc = vec![BigInt::zero(); cells];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &o.terms {
                    let idx = (ma.1 + mb.1) as usize * w + (ma.0 + mb.0) as usize;
                    acc[idx] += ca * cb;
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((((idx % w) as u32, (idx / w) as u32), c));
                }
            }
            terms.sort_unstable_by(|a, b| cmp_mono(b.0, a.0));
            return Poly { terms };
        }
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *map.entry((ma.0 + mb.0, ma.1 + mb.1)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Self::from_map(map)
    }

    pub fn mul_term(&self, m: Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(mm, cc)| ((mm.0 + m.0, mm.1 + m.1), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term((0, 0), c)
    }

    /// Exact division by an integer known to divide every coefficient.
    pub fn div_scalar(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, cc)| (*m, cc / c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive(&self) -> (BigInt, Poly) {
        let c = self.content();
        if c.is_zero() {
            return (c, Poly::zero());
        }
        let p = self.div_scalar(&c);
        (c, p)
    }

    /// Divides by `x^m.0 y^m.1`; every term must be divisible.
    pub fn unshift(&self, m: Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(mm, c)| ((mm.0 - m.0, mm.1 - m.1), c.clone())).collect() }
    }

    /// Applies an order-preserving injective exponent map (e.g. scaling).
    pub(crate) fn map_monotone<F: Fn(Mono) -> Mono>(&self, f: F) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect() }
    }

    /// Applies an arbitrary injective exponent map, re-sorting.
    pub(crate) fn map_injective<F: Fn(Mono) -> Mono>(&self, f: F) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> = self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect();
        terms.sort_unstable_by(|a, b| cmp_mono(b.0, a.0));
        Poly { terms }
    }

    /// Exact quotient `self / d` if it exists in ℤ[x,y].
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if m.0 < dm.0 || m.1 < dm.1 {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push(((m.0 - dm.0, m.1 - dm.1), q));
            }
            return Some(Poly { terms: out });
        }
        if self.deg_x() < d.deg_x() || self.deg_y() < d.deg_y() {
            return None;
        }
        let (me, de) = (self.min_exps(), d.min_exps());
        if me.0 < de.0 || me.1 < de.1 {
            return None;
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem: BTreeMap<(u32, u32), (Mono, BigInt)> =
            self.terms.iter().map(|(m, c)| (order_key(*m), (*m, c.clone()))).collect();
        let mut q = Vec::new();
        while let Some((&k, _)) = rem.iter().next_back() {
            let (rm, rc) = rem.remove(&k).unwrap();
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return None;
            }
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = (rm.0 - dm.0, rm.1 - dm.1);
            for (m, c) in &d.terms[1..] {
                let nm = (m.0 + qm.0, m.1 + qm.1);
                let nk = order_key(nm);
                let prod = c * &qc;
                match rem.get_mut(&nk) {
                    Some(entry) => {
                        entry.1 -= prod;
                        if entry.1.is_zero() {
                            rem.remove(&nk);
                        }
                    }
                    None => {
                        rem.insert(nk, (nm, -prod));
                    }
                }
            }
            q.push((qm, qc));
        }
        Some(Poly { terms: q })
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        use num_traits::Pow;
        let mut s = BigInt::zero();
        for ((a, b), c) in &self.terms {
            s += c * Pow::pow(x, *a) * Pow::pow(y, *b);
        }
        s
    }

    /// Dense form indexed `[deg_y][deg_x]`.
    pub(crate) fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let (dx, dy) = (self.deg_x() as usize, self.deg_y() as usize);
        let mut out = vec![vec![BigInt::zero(); dx + 1]; dy + 1];
        for ((a, b), c) in &self.terms {
            out[*b as usize][*a as usize] = c.clone();
        }
        for row in out.iter_mut() {
            trim(row);
        }
        while out.len() > 1 && out.last().map(|r| r.is_empty()).unwrap_or(false) {
            out.pop();
        }
        out
    }

    pub(crate) fn from_dense(rows: &[Vec<BigInt>]) -> Poly {
        let mut terms = Vec::new();
        for (b, row) in rows.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((a as u32, b as u32), c.clone()));
                }
            }
        }
        terms.sort_unstable_by(|a, b| cmp_mono(b.0, a.0));
        Poly { terms }
    }
}

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ts: &[((u32, u32), i64)]) -> Poly {
        Poly::from_terms(ts.iter().map(|(m, c)| (*m, BigInt::from(*c))))
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[((2, 0), 1), ((0, 1), -3), ((1, 1), 2)]);
        let b = p(&[((1, 0), 1), ((0, 2), 1), ((0, 0), -1)]);
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert!(ab.add(&Poly::one()).div_exact(&a).is_none());
    }

    #[test]
    fn leading_term_is_grlex_max() {
        let a = p(&[((3, 0), 1), ((0, 3), 2), ((2, 0), 5)]);
        assert_eq!(a.lead().unwrap().0, (0, 3));
    }
}
