//! Wreath Macdonald polynomials for `(ℤ/2)^N ⋊ S_N` at a fixed 2-core, and
//! their q,t-pairings. Variables: `q = x`, `t = y`.

use crate::algebra::{mat2, mat2_mul, solve_unique, Mat2, RatFun};
use crate::error::{Error, Result};
use crate::partitions::{bipartitions_of, brace_e, dominance_geq, BiPartition, Partition};
use crate::symfunc::{Basis2, SymFunc2};
use num_traits::Signed;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathMacPoly {
    pub label: BiPartition,
    pub core: u8,
    /// Schur expansion over ℚ(q, t).
    pub expansion: SymFunc2,
}

impl WreathMacPoly {
    /// Every Schur coefficient is a Laurent polynomial with nonnegative coefficients.
    pub fn is_schur_positive(&self) -> bool {
        self.expansion.terms().values().all(|c| match c.to_laurent() {
            Some(l) => l.iter().all(|(_, v)| !v.is_negative()),
            None => false,
        })
    }
}

fn check_core(e: u8) -> Result<()> {
    if e > 1 {
        return Err(Error::Invalid(format!("2-core must be 0 or 1, got {}", e)));
    }
    Ok(())
}

/// `𝛂 ≥ 𝛃` in the order induced from dominance through `{·}_e`.
pub fn induced_order_geq(a: &BiPartition, b: &BiPartition, e: u8) -> Result<bool> {
    check_core(e)?;
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    dominance_geq(&brace_e(a, e as usize), &brace_e(b, e as usize))
}

/// `[[1, −c], [−c, 1]]`.
pub fn twist_matrix(c: &RatFun) -> Mat2 {
    mat2(RatFun::one(), -c, -c, RatFun::one())
}

pub fn swap_matrix() -> Mat2 {
    mat2(RatFun::zero(), RatFun::from_int(-1), RatFun::from_int(-1), RatFun::zero())
}

fn substitution_matrix(keys: &[BiPartition], m: &Mat2) -> Vec<Vec<RatFun>> {
    keys.iter()
        .map(|b| {
            let f = SymFunc2::elem(Basis2::Schur2, b.clone()).alphabet_substitute(m);
            keys.iter().map(|g| f.coeff(g)).collect()
        })
        .collect()
}

type Family = HashMap<BiPartition, WreathMacPoly>;

fn family_cache() -> &'static RwLock<HashMap<(usize, u8), std::sync::Arc<Family>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, u8), std::sync::Arc<Family>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All `H̃_𝛂` with `|𝛂| = size` at core `e`, memoized per `(size, e)`.
pub fn wreath_family(size: usize, e: u8) -> Result<std::sync::Arc<Family>> {
    check_core(e)?;
    if let Some(f) = family_cache().read().unwrap().get(&(size, e)) {
        return Ok(f.clone());
    }
    let keys = bipartitions_of(size);
    let q = RatFun::x();
    let t = RatFun::y();
    let aq = substitution_matrix(&keys, &twist_matrix(&q));
    let at = substitution_matrix(&keys, &twist_matrix(&t));
    let top = BiPartition::new(Partition::new(if size == 0 { vec![] } else { vec![size] }), Partition::empty());
    let mut fam = Family::new();
    for a in &keys {
        let ad = a.dual();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (j, g) in keys.iter().enumerate() {
            if !induced_order_geq(g, a, e)? {
                rows.push(aq.iter().map(|r| r[j].clone()).collect::<Vec<_>>());
                rhs.push(RatFun::zero());
            }
            if !induced_order_geq(g, &ad, e)? {
                rows.push(at.iter().map(|r| r[j].clone()).collect());
                rhs.push(RatFun::zero());
            }
        }
        rows.push(keys.iter().map(|k| if *k == top { RatFun::one() } else { RatFun::zero() }).collect());
        rhs.push(RatFun::one());
        let sol = solve_unique(&rows, &rhs)
            .map_err(|err| Error::Singular(format!("wreath Macdonald system for {} (core {}): {}", a, e, err)))?;
        let expansion = SymFunc2::from_terms(Basis2::Schur2, keys.iter().cloned().zip(sol));
        fam.insert(a.clone(), WreathMacPoly { label: a.clone(), core: e, expansion });
    }
    let fam = std::sync::Arc::new(fam);
    Ok(family_cache().write().unwrap().entry((size, e)).or_insert(fam).clone())
}

pub fn wreath_h(a: &BiPartition, e: u8) -> Result<WreathMacPoly> {
    Ok(wreath_family(a.size(), e)?[a].clone())
}

/// `[[0,−1],[−1,0]]·[[1,−q],[−q,1]]·[[1,−t],[−t,1]]`.
pub fn pairing_matrix() -> Mat2 {
    mat2_mul(&mat2_mul(&swap_matrix(), &twist_matrix(&RatFun::x())), &twist_matrix(&RatFun::y()))
}

/// `⟨f, g[M X]⟩` with the pairing matrix above.
pub fn qt_inner2(f: &SymFunc2, g: &SymFunc2) -> RatFun {
    f.hall(&g.alphabet_substitute(&pairing_matrix()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingData {
    pub label: BiPartition,
    pub core: u8,
    /// `Ñ_𝛂(q, t)`.
    pub n_total: RatFun,
    /// `Ñ^cot_𝛂(1, q, t)`.
    pub n_cot1: RatFun,
    /// `Ñ / Ñ^cot(1)`, not assumed polynomial.
    pub n_nabla: RatFun,
}

/// Boxes of `{𝛂}_e` with even hook length, as `(arm, leg)`.
fn even_hook_boxes(a: &BiPartition, e: u8) -> Vec<(usize, usize)> {
    brace_e(a, e as usize).hooks().into_iter().filter(|h| h.2 % 2 == 0).map(|(arm, leg, _)| (arm, leg)).collect()
}

impl PairingData {
    /// `Ñ^cot_𝛂(u, q, t)` at arbitrary values.
    pub fn n_cot(&self, u: &RatFun, q: &RatFun, t: &RatFun) -> RatFun {
        let ui = u.inv().expect("u must be nonzero");
        let mut out = RatFun::one();
        for (a, l) in even_hook_boxes(&self.label, self.core) {
            let f1 = &q.pow(a as i64 + 1) - &(u * &t.pow(l as i64));
            let f2 = &q.pow(a as i64) - &(&ui * &t.pow(l as i64 + 1));
            out = &out * &(&f1 * &f2);
        }
        out
    }

    /// `Ñ_𝛂(u, q, t) = Ñ^∇(q, t) · Ñ^cot(u, q, t)`.
    pub fn deformed(&self, u: &RatFun, q: &RatFun, t: &RatFun) -> Result<RatFun> {
        Ok(&self.n_nabla.compose(q, t)? * &self.n_cot(u, q, t))
    }

    /// `Ñ_𝛂(zw, z², w²)` in the variables `z = x`, `w = y`.
    pub fn deformed_zw(&self) -> RatFun {
        let (z, w) = (RatFun::x(), RatFun::y());
        &self.n_nabla.adams(2) * &self.n_cot(&(&z * &w), &z.pow(2), &w.pow(2))
    }
}

pub fn wreath_n(a: &BiPartition, e: u8) -> Result<PairingData> {
    static CACHE: OnceLock<RwLock<HashMap<(BiPartition, u8), PairingData>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&(a.clone(), e)) {
        return Ok(p.clone());
    }
    let h = wreath_h(a, e)?;
    let n_total = qt_inner2(&h.expansion, &h.expansion);
    let mut pd = PairingData {
        label: a.clone(),
        core: e,
        n_total: n_total.clone(),
        n_cot1: RatFun::one(),
        n_nabla: RatFun::one(),
    };
    pd.n_cot1 = pd.n_cot(&RatFun::one(), &RatFun::x(), &RatFun::y());
    pd.n_nabla = n_total.checked_div(&pd.n_cot1)?;
    cache.write().unwrap().insert((a.clone(), e), pd.clone());
    Ok(pd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(a: &[usize], b: &[usize]) -> BiPartition {
        BiPartition::from_parts(a, b)
    }

    #[test]
    fn degree_one() {
        for e in [0, 1] {
            let h = wreath_h(&bp(&[1], &[]), e).unwrap();
            let want = SymFunc2::schur(&[1], &[]).add(&SymFunc2::schur(&[], &[1]).scale(&RatFun::x()));
            assert_eq!(h.expansion, want);
        }
    }

    #[test]
    fn pairing_degree_one() {
        let h = wreath_h(&bp(&[1], &[]), 0).unwrap().expansion;
        let q = RatFun::x();
        let t = RatFun::y();
        let want = &(&q.pow(2) - &RatFun::one()) * &(&q - &t);
        assert_eq!(qt_inner2(&h, &h), want);
        let pd = wreath_n(&bp(&[1], &[]), 0).unwrap();
        assert!(pd.n_nabla.is_one());
    }
}
