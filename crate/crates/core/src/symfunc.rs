//! Symmetric functions in one alphabet and in two alphabets `(x⁰, x¹)`.
//!
//! Coefficients live in ℚ(x, y). Plethysm and products go through power
//! sums; Schur is the canonical output basis.

use crate::algebra::{Mat2, RatFun};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, BiPartition, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

// ---------------------------------------------------------------------------
// per-degree tables

struct Tables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chi[λ][μ] = χ^λ_μ`
    chi: Vec<Vec<i64>>,
    /// `kostka[λ][μ] = K_{λμ}`
    kostka: Vec<Vec<i64>>,
    kostka_inv: Vec<Vec<i64>>,
    z: Vec<BigRational>,
}

fn tables(n: usize) -> Arc<Tables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_tables(n));
    cache.write().unwrap().entry(n).or_insert(t).clone()
}

fn build_tables(n: usize) -> Tables {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let chi = parts.iter().map(|l| parts.iter().map(|m| mn_character(l, m)).collect()).collect();
    let kostka: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|m| kostka_number(l, m)).collect()).collect();
    let kostka_inv = invert_unitriangular(&kostka);
    let z = parts.iter().map(|p| BigRational::from_integer(BigInt::from(p.z()))).collect();
    Tables { parts, index, chi, kostka, kostka_inv, z }
}

/// Murnaghan–Nakayama rule on beta-numbers.
pub fn mn_character(l: &Partition, m: &Partition) -> i64 {
    if l.size() != m.size() {
        return 0;
    }
    let r = l.len().max(1);
    let beta: Vec<usize> = (0..r).map(|i| l.part(i) + r - 1 - i).collect();
    mn_rec(beta, m.parts())
}

fn mn_rec(beta: Vec<usize>, rims: &[usize]) -> i64 {
    let Some((&k, rest)) = rims.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(nb, rest);
    }
    total
}

/// Number of semistandard tableaux of shape `l` and content `m`.
pub fn kostka_number(l: &Partition, m: &Partition) -> i64 {
    if l.size() != m.size() {
        return 0;
    }
    fn rec(shape: &[usize], content: &[usize]) -> i64 {
        let Some((&k, rest)) = content.split_last() else {
            return if shape.iter().all(|&s| s == 0) { 1 } else { 0 };
        };
        // remove a horizontal strip of size k from `shape`
        let mut total = 0;
        let mut inner = vec![0usize; shape.len()];
        fn strips(shape: &[usize], i: usize, left: usize, inner: &mut Vec<usize>, rest: &[usize], total: &mut i64) {
            if i == shape.len() {
                if left == 0 {
                    *total += rec(inner, rest);
                }
                return;
            }
            let lower = shape.get(i + 1).copied().unwrap_or(0);
            let max_remove = (shape[i] - lower).min(left);
            for t in 0..=max_remove {
                inner[i] = shape[i] - t;
                strips(shape, i + 1, left - t, inner, rest, total);
            }
        }
        strips(shape, 0, k, &mut inner, rest, &mut total);
        total
    }
    rec(l.parts(), m.parts())
}

fn invert_unitriangular(k: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = k.len();
    let mut a: Vec<Vec<BigRational>> =
        k.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).collect();
    let inv = rational_inverse(&mut a);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &inv[i][j];
                    assert!(v.is_integer());
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

fn rational_inverse(a: &mut [Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("invertible");
        a.swap(c, p);
        inv.swap(c, p);
        let pv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &pv;
            inv[c][j] = &inv[c][j] / &pv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                    let t = &f * &inv[c][j];
                    inv[i][j] -= t;
                }
            }
        }
    }
    inv
}

fn rat(v: i64) -> RatFun {
    RatFun::from_int(v)
}

fn ratq(v: &BigRational) -> RatFun {
    RatFun::from_rational(v)
}

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, RatFun>, k: K, c: RatFun) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

// ---------------------------------------------------------------------------
// one alphabet

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis1 {
    Schur,
    Power,
    Complete,
    Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc1 {
    basis: Basis1,
    terms: BTreeMap<Partition, RatFun>,
}

impl SymFunc1 {
    pub fn zero(basis: Basis1) -> Self {
        SymFunc1 { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::elem(Basis1::Schur, Partition::empty())
    }

    pub fn elem(basis: Basis1, l: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(l, RatFun::one());
        SymFunc1 { basis, terms }
    }

    pub fn schur(l: &[usize]) -> Self {
        Self::elem(Basis1::Schur, Partition::new(l.to_vec()))
    }

    pub fn power(l: &[usize]) -> Self {
        Self::elem(Basis1::Power, Partition::new(l.to_vec()))
    }

    pub fn complete(l: &[usize]) -> Self {
        Self::elem(Basis1::Complete, Partition::new(l.to_vec()))
    }

    pub fn monomial(l: &[usize]) -> Self {
        Self::elem(Basis1::Monomial, Partition::new(l.to_vec()))
    }

    pub fn from_terms(basis: Basis1, it: impl IntoIterator<Item = (Partition, RatFun)>) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            add_into(&mut terms, k, c);
        }
        SymFunc1 { basis, terms }
    }

    pub fn basis(&self) -> Basis1 {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFun> {
        &self.terms
    }

    pub fn coeff(&self, l: &Partition) -> RatFun {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    pub fn add(&self, o: &SymFunc1) -> Self {
        let o = o.convert(self.basis);
        let mut terms = self.terms.clone();
        for (k, v) in o.terms {
            add_into(&mut terms, k, v);
        }
        SymFunc1 { basis: self.basis, terms }
    }

    pub fn sub(&self, o: &SymFunc1) -> Self {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn convert(&self, target: Basis1) -> SymFunc1 {
        if target == self.basis {
            return self.clone();
        }
        let s = self.to_schur();
        if target == Basis1::Schur {
            return s;
        }
        let mut out = BTreeMap::new();
        for (l, c) in &s.terms {
            let t = tables(l.size());
            let i = t.index[l];
            for (j, m) in t.parts.iter().enumerate() {
                let f = match target {
                    Basis1::Power => {
                        let v = t.chi[i][j];
                        if v == 0 {
                            continue;
                        }
                        ratq(&(BigRational::from_integer(BigInt::from(v)) / &t.z[j]))
                    }
                    // s_λ = Σ_μ (K^T)^{-1}... via h_μ = Σ_λ K_{λμ} s_λ
                    Basis1::Complete => {
                        let v = t.kostka_inv[j][i];
                        if v == 0 {
                            continue;
                        }
                        rat(v)
                    }
                    Basis1::Monomial => {
                        let v = t.kostka[i][j];
                        if v == 0 {
                            continue;
                        }
                        rat(v)
                    }
                    Basis1::Schur => unreachable!(),
                };
                add_into(&mut out, m.clone(), c * &f);
            }
        }
        SymFunc1 { basis: target, terms: out }
    }

    fn to_schur(&self) -> SymFunc1 {
        if self.basis == Basis1::Schur {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let t = tables(m.size());
            let j = t.index[m];
            for (i, l) in t.parts.iter().enumerate() {
                let v = match self.basis {
                    Basis1::Power => t.chi[i][j],
                    Basis1::Complete => t.kostka[i][j],
                    Basis1::Monomial => t.kostka_inv[j][i],
                    Basis1::Schur => unreachable!(),
                };
                if v != 0 {
                    add_into(&mut out, l.clone(), c * &rat(v));
                }
            }
        }
        SymFunc1 { basis: Basis1::Schur, terms: out }
    }

    /// Product, returned in the Schur basis.
    pub fn mul(&self, o: &SymFunc1) -> SymFunc1 {
        let a = self.convert(Basis1::Power);
        let b = o.convert(Basis1::Power);
        let mut out = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let mut parts = ka.parts().to_vec();
                parts.extend_from_slice(kb.parts());
                add_into(&mut out, Partition::new(parts), ca * cb);
            }
        }
        SymFunc1 { basis: Basis1::Power, terms: out }.convert(Basis1::Schur)
    }

    /// `u ↦ u[c Z]`, returned in the Schur basis.
    pub fn plethysm_scalar(&self, c: &RatFun) -> SymFunc1 {
        let p = self.convert(Basis1::Power);
        let mut cache: HashMap<usize, RatFun> = HashMap::new();
        let mut out = BTreeMap::new();
        for (m, v) in &p.terms {
            let mut f = v.clone();
            for &r in m.parts() {
                let cr = cache.entry(r).or_insert_with(|| c.adams(r as u32)).clone();
                f = &f * &cr;
            }
            add_into(&mut out, m.clone(), f);
        }
        SymFunc1 { basis: Basis1::Power, terms: out }.convert(Basis1::Schur)
    }

    /// `u[c]` for a scalar alphabet `c` (so `p_r ↦ c(x^r, y^r)`).
    pub fn eval_scalar(&self, c: &RatFun) -> RatFun {
        let p = self.convert(Basis1::Power);
        let mut cache: HashMap<usize, RatFun> = HashMap::new();
        let mut s = RatFun::zero();
        for (m, v) in &p.terms {
            let mut f = v.clone();
            for &r in m.parts() {
                let cr = cache.entry(r).or_insert_with(|| c.adams(r as u32)).clone();
                f = &f * &cr;
            }
            s += &f;
        }
        s
    }

    /// `u(z) ↦ u[x⁰ + x¹]`, returned in the Schur basis.
    pub fn embed_diagonal(&self) -> SymFunc2 {
        let p = self.convert(Basis1::Power);
        let mut out = BTreeMap::new();
        for (m, v) in &p.terms {
            let f: Vec<(usize, RatFun, RatFun)> = m.parts().iter().map(|&r| (r, RatFun::one(), RatFun::one())).collect();
            for (k, c) in expand_linear(&f) {
                add_into(&mut out, k, v * &c);
            }
        }
        SymFunc2 { basis: Basis2::Power2, terms: out }.convert(Basis2::Schur2)
    }

    /// Hall inner product.
    pub fn hall(&self, o: &SymFunc1) -> RatFun {
        let a = self.convert(Basis1::Schur);
        let b = o.convert(Basis1::Schur);
        let mut s = RatFun::zero();
        for (k, c) in &a.terms {
            if let Some(d) = b.terms.get(k) {
                s += &(c * d);
            }
        }
        s
    }

    /// Applies `f` to every coefficient's variables via a map on ℚ(x,y).
    pub fn map_ratfun(&self, f: impl Fn(&RatFun) -> RatFun) -> SymFunc1 {
        self.map_coeffs(f)
    }
}

// ---------------------------------------------------------------------------
// two alphabets

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis2 {
    /// `s_λ(x⁰) s_μ(x¹)`
    Schur2,
    /// `p_λ(x⁰) p_μ(x¹)`
    Power2,
    /// `Π p⁽⁰⁾_{λ_i} Π p⁽¹⁾_{μ_j}` with `p⁽⁰⁾_r = p_r(x⁰)+p_r(x¹)`, `p⁽¹⁾_r = p_r(x⁰)-p_r(x¹)`
    WreathPower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc2 {
    basis: Basis2,
    terms: BTreeMap<BiPartition, RatFun>,
}

/// Expands `Π_i (a_i p_{r_i}(x⁰) + b_i p_{r_i}(x¹))` in the `Power2` basis.
fn expand_linear(factors: &[(usize, RatFun, RatFun)]) -> Vec<(BiPartition, RatFun)> {
    let mut cur: Vec<((Vec<usize>, Vec<usize>), RatFun)> = vec![((Vec::new(), Vec::new()), RatFun::one())];
    for (r, a, b) in factors {
        let mut next: HashMap<(Vec<usize>, Vec<usize>), RatFun> = HashMap::new();
        for ((x0, x1), c) in &cur {
            if !a.is_zero() {
                let mut k0 = x0.clone();
                k0.push(*r);
                k0.sort_unstable_by(|p, q| q.cmp(p));
                let v = c * a;
                let e = next.entry((k0, x1.clone())).or_default();
                *e += &v;
            }
            if !b.is_zero() {
                let mut k1 = x1.clone();
                k1.push(*r);
                k1.sort_unstable_by(|p, q| q.cmp(p));
                let v = c * b;
                let e = next.entry((x0.clone(), k1)).or_default();
                *e += &v;
            }
        }
        cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    cur.into_iter().map(|((a, b), c)| (BiPartition::new(Partition::new(a), Partition::new(b)), c)).collect()
}

impl SymFunc2 {
    pub fn zero(basis: Basis2) -> Self {
        SymFunc2 { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::elem(Basis2::Schur2, BiPartition::empty())
    }

    pub fn elem(basis: Basis2, k: BiPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, RatFun::one());
        SymFunc2 { basis, terms }
    }

    pub fn schur(a: &[usize], b: &[usize]) -> Self {
        Self::elem(Basis2::Schur2, BiPartition::from_parts(a, b))
    }

    pub fn wreath_power(a: &[usize], b: &[usize]) -> Self {
        Self::elem(Basis2::WreathPower, BiPartition::from_parts(a, b))
    }

    pub fn from_terms(basis: Basis2, it: impl IntoIterator<Item = (BiPartition, RatFun)>) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            add_into(&mut terms, k, c);
        }
        SymFunc2 { basis, terms }
    }

    /// `f(x⁰) g(x¹)`, in the Schur basis.
    pub fn from_pair(f: &SymFunc1, g: &SymFunc1) -> Self {
        let f = f.convert(Basis1::Schur);
        let g = g.convert(Basis1::Schur);
        let mut terms = BTreeMap::new();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                add_into(&mut terms, BiPartition::new(a.clone(), b.clone()), c * d);
            }
        }
        SymFunc2 { basis: Basis2::Schur2, terms }
    }

    /// `h_{α⁰}(x⁰) h_{α¹}(x¹)`.
    pub fn complete(a: &BiPartition) -> Self {
        Self::from_pair(
            &SymFunc1::elem(Basis1::Complete, a.first.clone()),
            &SymFunc1::elem(Basis1::Complete, a.second.clone()),
        )
    }

    pub fn basis(&self) -> Basis2 {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<BiPartition, RatFun> {
        &self.terms
    }

    pub fn coeff(&self, k: &BiPartition) -> RatFun {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    pub fn add(&self, o: &SymFunc2) -> Self {
        let o = o.convert(self.basis);
        let mut terms = self.terms.clone();
        for (k, v) in o.terms {
            add_into(&mut terms, k, v);
        }
        SymFunc2 { basis: self.basis, terms }
    }

    pub fn sub(&self, o: &SymFunc2) -> Self {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn convert(&self, target: Basis2) -> SymFunc2 {
        if target == self.basis {
            return self.clone();
        }
        let p = self.to_power2();
        match target {
            Basis2::Power2 => p,
            Basis2::Schur2 => p.power2_to_schur2(),
            Basis2::WreathPower => p.power2_to_wreath(),
        }
    }

    fn to_power2(&self) -> SymFunc2 {
        match self.basis {
            Basis2::Power2 => self.clone(),
            Basis2::Schur2 => {
                let mut out = BTreeMap::new();
                for (k, c) in &self.terms {
                    let (t0, t1) = (tables(k.first.size()), tables(k.second.size()));
                    let (i0, i1) = (t0.index[&k.first], t1.index[&k.second]);
                    for (j0, m0) in t0.parts.iter().enumerate() {
                        let v0 = t0.chi[i0][j0];
                        if v0 == 0 {
                            continue;
                        }
                        for (j1, m1) in t1.parts.iter().enumerate() {
                            let v1 = t1.chi[i1][j1];
                            if v1 == 0 {
                                continue;
                            }
                            let f = BigRational::from_integer(BigInt::from(v0 * v1)) / (&t0.z[j0] * &t1.z[j1]);
                            add_into(&mut out, BiPartition::new(m0.clone(), m1.clone()), c * &ratq(&f));
                        }
                    }
                }
                SymFunc2 { basis: Basis2::Power2, terms: out }
            }
            Basis2::WreathPower => {
                let mut out = BTreeMap::new();
                for (k, c) in &self.terms {
                    let mut f: Vec<(usize, RatFun, RatFun)> =
                        k.first.parts().iter().map(|&r| (r, RatFun::one(), RatFun::one())).collect();
                    f.extend(k.second.parts().iter().map(|&r| (r, RatFun::one(), rat(-1))));
                    for (kk, v) in expand_linear(&f) {
                        add_into(&mut out, kk, c * &v);
                    }
                }
                SymFunc2 { basis: Basis2::Power2, terms: out }
            }
        }
    }

    fn power2_to_schur2(&self) -> SymFunc2 {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let (t0, t1) = (tables(k.first.size()), tables(k.second.size()));
            let (j0, j1) = (t0.index[&k.first], t1.index[&k.second]);
            for (i0, l0) in t0.parts.iter().enumerate() {
                let v0 = t0.chi[i0][j0];
                if v0 == 0 {
                    continue;
                }
                for (i1, l1) in t1.parts.iter().enumerate() {
                    let v1 = t1.chi[i1][j1];
                    if v1 != 0 {
                        add_into(&mut out, BiPartition::new(l0.clone(), l1.clone()), c * &rat(v0 * v1));
                    }
                }
            }
        }
        SymFunc2 { basis: Basis2::Schur2, terms: out }
    }

    fn power2_to_wreath(&self) -> SymFunc2 {
        let half = RatFun::from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            // p_r(x⁰) = (p⁽⁰⁾ + p⁽¹⁾)/2, p_r(x¹) = (p⁽⁰⁾ - p⁽¹⁾)/2
            let mut f: Vec<(usize, RatFun, RatFun)> =
                k.first.parts().iter().map(|&r| (r, half.clone(), half.clone())).collect();
            f.extend(k.second.parts().iter().map(|&r| (r, half.clone(), -&half)));
            for (kk, v) in expand_linear(&f) {
                add_into(&mut out, kk, c * &v);
            }
        }
        SymFunc2 { basis: Basis2::WreathPower, terms: out }
    }

    /// Product, returned in the `Power2` basis.
    pub fn mul_power(&self, o: &SymFunc2) -> SymFunc2 {
        let a = self.convert(Basis2::Power2);
        let b = o.convert(Basis2::Power2);
        let mut out = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let mut p0 = ka.first.parts().to_vec();
                p0.extend_from_slice(kb.first.parts());
                let mut p1 = ka.second.parts().to_vec();
                p1.extend_from_slice(kb.second.parts());
                add_into(&mut out, BiPartition::new(Partition::new(p0), Partition::new(p1)), ca * cb);
            }
        }
        SymFunc2 { basis: Basis2::Power2, terms: out }
    }

    /// Product, returned in the Schur basis.
    pub fn mul(&self, o: &SymFunc2) -> SymFunc2 {
        self.mul_power(o).convert(Basis2::Schur2)
    }

    /// `f ↦ f(M x)`: `p_r(xⁱ) ↦ Σ_j M[i][j](x^r, y^r) p_r(xʲ)`. Result in Schur.
    pub fn alphabet_substitute(&self, m: &Mat2) -> SymFunc2 {
        self.alphabet_substitute_power(m).convert(Basis2::Schur2)
    }

    pub fn alphabet_substitute_power(&self, m: &Mat2) -> SymFunc2 {
        let p = self.convert(Basis2::Power2);
        let mut cache: HashMap<usize, [[RatFun; 2]; 2]> = HashMap::new();
        let mut out = BTreeMap::new();
        for (k, c) in &p.terms {
            let mut f = Vec::new();
            for (slot, part) in [(0usize, &k.first), (1usize, &k.second)] {
                for &r in part.parts() {
                    let mr = cache
                        .entry(r)
                        .or_insert_with(|| {
                            let a = |i: usize, j: usize| m[i][j].adams(r as u32);
                            [[a(0, 0), a(0, 1)], [a(1, 0), a(1, 1)]]
                        })
                        .clone();
                    f.push((r, mr[slot][0].clone(), mr[slot][1].clone()));
                }
            }
            for (kk, v) in expand_linear(&f) {
                add_into(&mut out, kk, c * &v);
            }
        }
        SymFunc2 { basis: Basis2::Power2, terms: out }
    }

    /// Hall inner product: Schur functions orthonormal.
    pub fn hall(&self, o: &SymFunc2) -> RatFun {
        if self.basis == Basis2::Power2 && o.basis == Basis2::Power2 {
            return hall_power2(self, o);
        }
        let a = self.convert(Basis2::Schur2);
        let b = o.convert(Basis2::Schur2);
        let mut s = RatFun::zero();
        for (k, c) in &a.terms {
            if let Some(d) = b.terms.get(k) {
                s += &(c * d);
            }
        }
        s
    }

    /// Keeps only terms of total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> SymFunc2 {
        SymFunc2 {
            basis: self.basis,
            terms: self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }
}

fn hall_power2(a: &SymFunc2, b: &SymFunc2) -> RatFun {
    let (small, big) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
    let mut s = RatFun::zero();
    for (k, c) in &small.terms {
        if let Some(d) = big.terms.get(k) {
            let z = BigInt::from(k.first.z()) * BigInt::from(k.second.z());
            s += &(&(c * d) * &RatFun::from_bigint(z));
        }
    }
    s
}

/// Convenience: `p_λ` of one alphabet, `s_λ`, etc. are built via `SymFunc1::elem`.
pub fn convert_basis1(f: &SymFunc1, target: Basis1) -> SymFunc1 {
    f.convert(target)
}

pub fn convert_basis2(f: &SymFunc2, target: Basis2) -> SymFunc2 {
    f.convert(target)
}

pub fn alphabet_substitute(f: &SymFunc2, m: &Mat2) -> SymFunc2 {
    f.alphabet_substitute(m)
}

pub fn scalar_plethysm1(f: &SymFunc1, c: &RatFun) -> SymFunc1 {
    f.plethysm_scalar(c)
}

pub fn embed_diagonal(f: &SymFunc1) -> SymFunc2 {
    f.embed_diagonal()
}

pub fn hall_inner(f: &SymFunc2, g: &SymFunc2) -> RatFun {
    f.hall(g)
}

/// Character value `χ^𝛂_𝛃` of the hyperoctahedral group.
pub fn wreath_char(a: &BiPartition, b: &BiPartition) -> Result<i64> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let s = SymFunc2::elem(Basis2::WreathPower, b.clone()).convert(Basis2::Schur2);
    let c = s.coeff(a).constant_value().expect("integer character value");
    Ok(i64::try_from(c.to_integer()).expect("small character value"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_to_schur() {
        assert_eq!(SymFunc1::complete(&[2]).convert(Basis1::Schur), SymFunc1::schur(&[2]));
        let h11 = SymFunc1::complete(&[1, 1]).convert(Basis1::Schur);
        assert_eq!(h11, SymFunc1::schur(&[2]).add(&SymFunc1::schur(&[1, 1])));
    }

    #[test]
    fn basis_roundtrips() {
        for b in [Basis1::Power, Basis1::Complete, Basis1::Monomial] {
            let f = SymFunc1::schur(&[3, 1]).add(&SymFunc1::schur(&[2, 1, 1]).scale(&RatFun::x()));
            assert_eq!(f.convert(b).convert(Basis1::Schur), f);
        }
    }

    #[test]
    fn wreath_power_degree_one() {
        let p = SymFunc2::wreath_power(&[1], &[]).convert(Basis2::Schur2);
        assert_eq!(p, SymFunc2::schur(&[1], &[]).add(&SymFunc2::schur(&[], &[1])));
        assert_eq!(wreath_char(&BiPartition::from_parts(&[], &[1]), &BiPartition::from_parts(&[], &[1])).unwrap(), -1);
    }

    #[test]
    fn hall_of_wreath_power() {
        let p = SymFunc2::wreath_power(&[1], &[]);
        assert_eq!(p.hall(&p), RatFun::from_int(2));
    }

    #[test]
    fn swap_matrix_dualizes() {
        let m: Mat2 = [[RatFun::zero(), RatFun::from_int(-1)], [RatFun::from_int(-1), RatFun::zero()]];
        let s = SymFunc2::schur(&[2], &[1]);
        let t = s.alphabet_substitute(&m);
        assert_eq!(t, SymFunc2::schur(&[1], &[1, 1]).scale(&RatFun::from_int(-1)));
    }
}
