//! Truncated series `Ω₀, Ω₁, Ω★` (two parameters `z = x, w = y`, or one
//! parameter `q = x`) and the formal inverse of `Ω★`.
//!
//! Every term carries one symmetric function that is inserted identically in
//! each of the `2k` alphabets, so a product over alphabets is stored once.

use crate::algebra::{mat2_inv, RatFun};
use crate::error::{Error, Result};
use crate::macdonald::{macdonald_h, n_deformed};
use crate::partitions::{bipartitions_of, brace_e, factorial, partitions_of, BiPartition, Partition};
use crate::symfunc::{Basis1, Basis2, SymFunc1, SymFunc2};
use crate::wreath_macdonald::{twist_matrix, wreath_h, wreath_n};
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeriesIndex {
    Bi(BiPartition),
    Part(Partition),
    Multi(Vec<Partition>),
}

impl fmt::Display for SeriesIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesIndex::Bi(b) => write!(f, "{}", b),
            SeriesIndex::Part(p) => write!(f, "{}", p),
            SeriesIndex::Multi(v) => {
                let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", s.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SeriesTerm {
    pub index: SeriesIndex,
    pub coeff: RatFun,
    /// Homogeneous of degree `degree`, stored in the `Power2` basis.
    pub factor: SymFunc2,
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    One,
    Zero,
    Star,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    Ok(())
}

fn zw() -> (RatFun, RatFun, RatFun) {
    let (z, w) = (RatFun::x(), RatFun::y());
    (&z * &w, z.pow(2), w.pow(2))
}

/// Terms of `Ω_e(z, w)` with `|𝛂| ≤ maxdeg`.
pub fn omega_e_terms(e: u8, g: usize, k: usize, maxdeg: usize) -> Result<Vec<SeriesTerm>> {
    check_k(k)?;
    let labels: Vec<BiPartition> = (0..=maxdeg).flat_map(bipartitions_of).collect();
    labels
        .par_iter()
        .map(|a| {
            let (u, q, t) = zw();
            let lam = brace_e(a, e as usize);
            let num = n_deformed(&lam, &u, &q, &t).pow((g + k - 1) as i64);
            let (den, factor) = if a.is_empty() {
                (RatFun::one(), SymFunc2::one())
            } else {
                let pd = wreath_n(a, e)?;
                let den = &pd.n_total.adams(2) * &pd.deformed_zw().pow(k as i64 - 1);
                let h = wreath_h(a, e)?;
                (den, h.expansion.map_coeffs(|c| c.adams(2)))
            };
            Ok(SeriesTerm {
                index: SeriesIndex::Bi(a.clone()),
                coeff: num.checked_div(&den)?,
                factor: factor.convert(Basis2::Power2),
                degree: a.size(),
            })
        })
        .collect()
}

/// Terms of `Ω★(z, w)` with `|α| ≤ maxdeg`.
pub fn omega_star_terms(g: usize, k: usize, maxdeg: usize) -> Result<Vec<SeriesTerm>> {
    check_k(k)?;
    let labels: Vec<Partition> = (0..=maxdeg).flat_map(partitions_of).collect();
    labels
        .par_iter()
        .map(|a| {
            let (u, q, t) = zw();
            let num = n_deformed(a, &u, &q, &t).pow((2 * g + k - 1) as i64);
            let den = n_deformed(a, &RatFun::one(), &q, &t);
            let factor = if a.is_empty() {
                SymFunc2::one()
            } else {
                macdonald_h(a)?.expansion.map_coeffs(|c| c.adams(2)).embed_diagonal()
            };
            Ok(SeriesTerm {
                index: SeriesIndex::Part(a.clone()),
                coeff: num.checked_div(&den)?,
                factor: factor.convert(Basis2::Power2),
                degree: a.size(),
            })
        })
        .collect()
}

/// Multisets of indices into `sizes` (entries with size 0 are skipped) with
/// total size ≤ `maxdeg`, as nondecreasing index lists.
fn multisets(sizes: &[usize], maxdeg: usize) -> Vec<Vec<usize>> {
    fn rec(sizes: &[usize], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for i in start..sizes.len() {
            if sizes[i] == 0 || sizes[i] > left {
                continue;
            }
            cur.push(i);
            rec(sizes, i, left - sizes[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sizes, 0, maxdeg, &mut Vec::new(), &mut out);
    out
}

/// `1/Ω★` truncated at `maxdeg`, from the terms of `Ω★` (either parameter set).
///
/// Each multiset `S` gets `(−1)^{|S|} |S|!/Π mult! · Π coeff`, i.e. the weight
/// `K(ω★)/N(ω★)` of the corresponding type.
pub fn omega_star_inverse_from(star: &[SeriesTerm], maxdeg: usize) -> Vec<SeriesTerm> {
    let sizes: Vec<usize> = star.iter().map(|t| t.degree).collect();
    let sets = multisets(&sizes, maxdeg);
    sets.par_iter()
        .map(|s| {
            let l = s.len();
            let mut mult = std::collections::BTreeMap::new();
            for &i in s {
                *mult.entry(i).or_insert(0usize) += 1;
            }
            let denom: u128 = mult.values().map(|&m| factorial(m)).product();
            let w = factorial(l) / denom;
            let sign = if l % 2 == 0 { 1i64 } else { -1 };
            let mut coeff = RatFun::from_bigint(num_bigint::BigInt::from(w) * sign);
            let mut factor = SymFunc2::one().convert(Basis2::Power2);
            let mut idx = Vec::with_capacity(l);
            let mut degree = 0;
            for &i in s {
                coeff = &coeff * &star[i].coeff;
                factor = factor.mul_power(&star[i].factor);
                degree += star[i].degree;
                if let SeriesIndex::Part(p) = &star[i].index {
                    idx.push(p.clone());
                }
            }
            SeriesTerm { index: SeriesIndex::Multi(idx), coeff, factor, degree }
        })
        .collect()
}

pub fn omega_star_inverse(g: usize, k: usize, maxdeg: usize) -> Result<Vec<SeriesTerm>> {
    Ok(omega_star_inverse_from(&omega_star_terms(g, k, maxdeg)?, maxdeg))
}

/// `(H_λ(q) q^{−n(λ)})`.
fn hook_q(l: &Partition) -> RatFun {
    &l.hook_poly() * &RatFun::monomial(-(l.n() as i64), 0, 1)
}

/// Terms of the one-parameter series `Ω₁(q)`, `Ω₀(q)` or `Ω★(q)`.
pub fn omega_one_param(which: Which, g: usize, k: usize, maxdeg: usize) -> Result<Vec<SeriesTerm>> {
    check_k(k)?;
    let (g, k) = (g as i64, k as i64);
    let q = RatFun::x();
    let e = 2 * g + 2 * k - 2;
    match which {
        Which::One | Which::Zero => {
            let core = usize::from(which == Which::One);
            let p = mat2_inv(&twist_matrix(&q))?;
            let labels: Vec<BiPartition> = (0..=maxdeg).flat_map(bipartitions_of).collect();
            labels
                .par_iter()
                .map(|a| {
                    let lam = brace_e(a, core);
                    let coeff = &(&q.pow(k * a.size() as i64) * &q.pow((1 - g - k) * lam.size() as i64))
                        * &hook_q(&lam).pow(e);
                    let factor = SymFunc2::elem(Basis2::Schur2, a.clone()).alphabet_substitute_power(&p);
                    Ok(SeriesTerm { index: SeriesIndex::Bi(a.clone()), coeff, factor, degree: a.size() })
                })
                .collect()
        }
        Which::Star => {
            let c = RatFun::one().checked_div(&(&RatFun::one() - &q))?;
            let labels: Vec<Partition> = (0..=maxdeg).flat_map(partitions_of).collect();
            labels
                .par_iter()
                .map(|a| {
                    let hq = hook_q(a);
                    let coeff = &q.pow((2 - 2 * g - k) * a.size() as i64) * &(&hq * &hq).pow(e);
                    let factor = SymFunc1::elem(Basis1::Schur, a.clone())
                        .plethysm_scalar(&c)
                        .embed_diagonal()
                        .convert(Basis2::Power2);
                    Ok(SeriesTerm { index: SeriesIndex::Part(a.clone()), coeff, factor, degree: a.size() })
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_index_coefficients() {
        let t1 = omega_e_terms(1, 0, 2, 1).unwrap();
        assert_eq!(t1.len(), 3);
        let (z, w) = (RatFun::x(), RatFun::y());
        let zw2 = (&z - &w).pow(2);
        // g + k − 1 = 1
        assert_eq!(t1[0].coeff, zw2);
        let t0 = omega_e_terms(0, 0, 2, 1).unwrap();
        assert!(t0[0].coeff.is_one());
    }

    #[test]
    fn star_degree_one() {
        let t = omega_star_terms(0, 2, 2).unwrap();
        assert_eq!(t.len(), 4);
        let (z, w) = (RatFun::x(), RatFun::y());
        let one = RatFun::one();
        let want = (&z - &w).pow(2).pow(1).checked_div(&(&(&z.pow(2) - &one) * &(&one - &w.pow(2)))).unwrap();
        // 2g + k − 1 = 1
        assert_eq!(t[1].coeff, want);
    }

    #[test]
    fn inverse_low_order() {
        let star = omega_star_terms(0, 1, 2).unwrap();
        let inv = omega_star_inverse_from(&star, 2);
        let c1 = &star[1].coeff;
        let find = |idx: Vec<Partition>| inv.iter().find(|t| t.index == SeriesIndex::Multi(idx.clone())).unwrap();
        assert!(find(vec![]).coeff.is_one());
        assert_eq!(find(vec![Partition::new(vec![1])]).coeff, -c1);
        assert_eq!(find(vec![Partition::new(vec![1]); 2]).coeff, c1 * c1);
    }
}
