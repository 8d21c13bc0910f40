//! Modified Macdonald polynomials `H_λ(Z; q, t)` with `q = x`, `t = y`.

use crate::algebra::{solve_unique, RatFun};
use crate::error::{Error, Result};
use crate::partitions::{dominance_geq, partitions_of, Partition};
use crate::symfunc::{Basis1, SymFunc1};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldPoly {
    pub label: Partition,
    /// Schur expansion over ℚ(q, t).
    pub expansion: SymFunc1,
}

fn q() -> RatFun {
    RatFun::x()
}

fn t() -> RatFun {
    RatFun::y()
}

/// Row `ν ↦ coefficient of s_μ in s_ν[c Z]`, for every `ν, μ ⊢ n`.
fn plethysm_matrix(parts: &[Partition], c: &RatFun) -> Vec<Vec<RatFun>> {
    parts
        .iter()
        .map(|nu| {
            let f = SymFunc1::elem(Basis1::Schur, nu.clone()).plethysm_scalar(c);
            parts.iter().map(|mu| f.coeff(mu)).collect()
        })
        .collect()
}

pub fn macdonald_h(l: &Partition) -> Result<MacdonaldPoly> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, MacdonaldPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(h) = cache.read().unwrap().get(l) {
        return Ok(h.clone());
    }
    let h = solve_macdonald(l)?;
    cache.write().unwrap().insert(l.clone(), h.clone());
    Ok(h)
}

fn solve_macdonald(l: &Partition) -> Result<MacdonaldPoly> {
    let n = l.size();
    let parts = partitions_of(n);
    let one = RatFun::one();
    let aq = plethysm_matrix(&parts, &(&one - &q()));
    let at = plethysm_matrix(&parts, &(&one - &t()));
    let ld = l.dual();
    let mut rows: Vec<Vec<RatFun>> = Vec::new();
    let mut rhs: Vec<RatFun> = Vec::new();
    for (j, mu) in parts.iter().enumerate() {
        if !dominance_geq(mu, l)? {
            rows.push(aq.iter().map(|r| r[j].clone()).collect());
            rhs.push(RatFun::zero());
        }
        if !dominance_geq(mu, &ld)? {
            rows.push(at.iter().map(|r| r[j].clone()).collect());
            rhs.push(RatFun::zero());
        }
    }
    // normalization: coefficient of s_(n)
    let top = Partition::new(if n == 0 { vec![] } else { vec![n] });
    rows.push(parts.iter().map(|p| if *p == top { RatFun::one() } else { RatFun::zero() }).collect());
    rhs.push(RatFun::one());
    let sol = solve_unique(&rows, &rhs).map_err(|e| Error::Singular(format!("Macdonald system for {}: {}", l, e)))?;
    Ok(MacdonaldPoly {
        label: l.clone(),
        expansion: SymFunc1::from_terms(Basis1::Schur, parts.into_iter().zip(sol)),
    })
}

/// `Π_x (q^{a+1} − u t^l)(q^a − u⁻¹ t^{l+1})` for arbitrary values of `u, q, t`.
pub fn n_deformed(l: &Partition, u: &RatFun, qv: &RatFun, tv: &RatFun) -> RatFun {
    let ui = u.inv().expect("u must be nonzero");
    let mut out = RatFun::one();
    for (a, leg, _) in l.hooks() {
        let f1 = &qv.pow(a as i64 + 1) - &(u * &tv.pow(leg as i64));
        let f2 = &qv.pow(a as i64) - &(&ui * &tv.pow(leg as i64 + 1));
        out = &out * &(&f1 * &f2);
    }
    out
}

/// `N_λ(q, t)`.
pub fn n_pairing(l: &Partition) -> RatFun {
    n_deformed(l, &RatFun::one(), &q(), &t())
}

/// `⟨f, g[(q−1)(1−t) Z]⟩`.
pub fn qt_inner1(f: &SymFunc1, g: &SymFunc1) -> RatFun {
    let c = &(&q() - &RatFun::one()) * &(&RatFun::one() - &t());
    f.hall(&g.plethysm_scalar(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn small_cases() {
        assert_eq!(macdonald_h(&p(&[1])).unwrap().expansion, SymFunc1::schur(&[1]));
        let h2 = SymFunc1::schur(&[2]).add(&SymFunc1::schur(&[1, 1]).scale(&q()));
        assert_eq!(macdonald_h(&p(&[2])).unwrap().expansion, h2);
        let h11 = SymFunc1::schur(&[2]).add(&SymFunc1::schur(&[1, 1]).scale(&t()));
        assert_eq!(macdonald_h(&p(&[1, 1])).unwrap().expansion, h11);
    }

    #[test]
    fn pairing_n2() {
        let one = RatFun::one();
        let want = &(&(&(&q().pow(2) - &one) * &(&q() - &t())) * &(&q() - &one)) * &(&one - &t());
        assert_eq!(n_pairing(&p(&[2])), want);
        let h = macdonald_h(&p(&[2])).unwrap().expansion;
        assert_eq!(qt_inner1(&h, &h), want);
    }
}
