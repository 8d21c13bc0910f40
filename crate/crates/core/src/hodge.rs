//! Assembly of `H_B(z, w)`, the dimension `d`, the E-polynomial (two routes)
//! and the conjectural mixed Hodge polynomial, with the property checks.

use crate::algebra::{substitute_powers, RatFun, SubstMode};
use crate::error::{Error, Result};
use crate::series::{omega_e_terms, omega_one_param, omega_star_inverse_from, omega_star_terms, SeriesTerm, Which};
use crate::symfunc::{Basis2, SymFunc2};
use crate::types::{h_of_type, simple_dual, SimpleType};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub g: usize,
    pub k: usize,
    pub n: usize,
    pub classes: Vec<SimpleType>,
}

impl ProblemSpec {
    /// Validates shape: `k ≥ 1`, `n ≥ 1`, exactly `2k` classes of size `⌊n/2⌋`.
    pub fn new(g: usize, k: usize, n: usize, classes: Vec<SimpleType>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("k must be at least 1".into()));
        }
        if n == 0 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        if classes.len() != 2 * k {
            return Err(Error::Invalid(format!("expected {} classes, got {}", 2 * k, classes.len())));
        }
        let big_n = n / 2;
        for c in &classes {
            if c.size() != big_n {
                return Err(Error::Invalid(format!("class {} has size {}, expected {}", c, c.size(), big_n)));
            }
        }
        Ok(ProblemSpec { g, k, n, classes })
    }

    pub fn big_n(&self) -> usize {
        self.n / 2
    }

    /// No class has eigenvalue `±i` (every `m₋ = 0`).
    pub fn ccl_ok(&self) -> bool {
        self.classes.iter().all(|c| c.m_minus == 0)
    }

    pub fn n_is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if !self.ccl_ok() {
            w.push(
                "some class has m- > 0: the CCL hypothesis fails, so the E-polynomial formula and the Hodge checks do not apply"
                    .to_string(),
            );
        }
        w
    }
}

/// Dimension of a centralizer `C_G(tσ)` for a class of the given simple type.
pub fn centralizer_dim(c: &SimpleType, n_odd: bool) -> i64 {
    let (p, m) = (c.m_plus as i64, c.m_minus as i64);
    let star: i64 = c.m_star.iter().map(|&x| (x * x) as i64).sum();
    if n_odd {
        p * (2 * p + 1) + m * (2 * m + 1) + star
    } else {
        p * (2 * p + 1) + m * (2 * m - 1) + star
    }
}

pub fn dimension_d(spec: &ProblemSpec) -> i64 {
    let n2 = (spec.n * spec.n) as i64;
    let classes: i64 = spec.classes.iter().map(|c| n2 - centralizer_dim(c, spec.n_is_odd())).sum();
    (2 * spec.g as i64 - 2) * n2 + classes
}

/// `Σ_{a,b,s} c_a c_b c_s Π_j ⟨F_a F_b F_s, h_j⟩` over index triples of total
/// degree `N`.
fn pair_with_classes(
    a: &[SeriesTerm],
    b: &[SeriesTerm],
    s: &[SeriesTerm],
    classes: &[SimpleType],
    big_n: usize,
) -> RatFun {
    let mut counts: BTreeMap<&SimpleType, i64> = BTreeMap::new();
    for c in classes {
        *counts.entry(c).or_insert(0) += 1;
    }
    let hs: Vec<(SymFunc2, i64)> = counts
        .iter()
        .map(|(c, &m)| (h_of_type(&simple_dual(c)).convert(Basis2::Power2), m))
        .collect();
    let mut triples = Vec::new();
    for ta in a {
        for tb in b {
            for ts in s {
                if ta.degree + tb.degree + ts.degree == big_n {
                    triples.push((ta, tb, ts));
                }
            }
        }
    }
    triples
        .par_iter()
        .map(|(ta, tb, ts)| {
            let f = ta.factor.mul_power(&tb.factor).mul_power(&ts.factor);
            let mut v = &(&ta.coeff * &tb.coeff) * &ts.coeff;
            for (h, m) in &hs {
                if v.is_zero() {
                    break;
                }
                v = &v * &f.hall(h).pow(*m);
            }
            v
        })
        .reduce(RatFun::zero, |x, y| &x + &y)
}

/// `H_B(z, w)` as a reduced rational function.
pub fn hb_rational(spec: &ProblemSpec) -> Result<RatFun> {
    let big_n = spec.big_n();
    let (g, k) = (spec.g, spec.k);
    let zero = omega_e_terms(0, g, k, big_n)?;
    let first = if spec.n_is_odd() { omega_e_terms(1, g, k, big_n)? } else { zero.clone() };
    let inv = omega_star_inverse_from(&omega_star_terms(g, k, big_n)?, big_n);
    Ok(pair_with_classes(&first, &zero, &inv, &spec.classes, big_n))
}

/// Route B: `q^{d/2} ⟨Ω₁(q)Ω₀(q)/Ω★(q), Π h⟩` (with `Ω₀²` for even `n`).
pub fn e_polynomial_one_param(spec: &ProblemSpec) -> Result<RatFun> {
    let big_n = spec.big_n();
    let (g, k) = (spec.g, spec.k);
    let zero = omega_one_param(Which::Zero, g, k, big_n)?;
    let first = if spec.n_is_odd() { omega_one_param(Which::One, g, k, big_n)? } else { zero.clone() };
    let inv = omega_star_inverse_from(&omega_one_param(Which::Star, g, k, big_n)?, big_n);
    let d = dimension_d(spec);
    if d % 2 != 0 {
        return Err(Error::Parity(format!("odd dimension {}", d)));
    }
    Ok(&pair_with_classes(&first, &zero, &inv, &spec.classes, big_n) * &RatFun::monomial(d / 2, 0, 1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub is_polynomial: bool,
    pub deg_z: Option<i64>,
    pub deg_w: Option<i64>,
    pub degree_le_d: bool,
    pub degree_eq_d: bool,
    pub even_total_degree: bool,
    /// A monomial of odd total degree, if any.
    pub odd_degree_witness: Option<(i64, i64)>,
    pub nonneg_minus_z: bool,
    /// A monomial of `HB(−z, w)` with negative coefficient, if any.
    pub negative_witness: Option<(i64, i64)>,
    pub symmetric: bool,
    pub sign_symmetric: bool,
    pub e_routes_agree: Option<bool>,
    pub e_palindromic: Option<bool>,
    pub mhp_specializes_to_e: Option<bool>,
    pub curious_poincare: Option<bool>,
}

impl Checks {
    /// All property checks that apply came out true.
    pub fn all_pass(&self) -> bool {
        self.is_polynomial
            && self.degree_le_d
            && self.even_total_degree
            && self.nonneg_minus_z
            && self.symmetric
            && self.sign_symmetric
            && self.e_routes_agree != Some(false)
            && self.e_palindromic != Some(false)
            && self.mhp_specializes_to_e != Some(false)
            && self.curious_poincare != Some(false)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "is_polynomial": self.is_polynomial,
            "deg_z": self.deg_z,
            "deg_w": self.deg_w,
            "degree_le_d": self.degree_le_d,
            "degree_eq_d": self.degree_eq_d,
            "even_total_degree": self.even_total_degree,
            "odd_degree_witness": self.odd_degree_witness,
            "nonneg_minus_z": self.nonneg_minus_z,
            "negative_witness": self.negative_witness,
            "symmetric": self.symmetric,
            "sign_symmetric": self.sign_symmetric,
            "e_routes_agree": self.e_routes_agree,
            "e_palindromic": self.e_palindromic,
            "mhp_specializes_to_e": self.mhp_specializes_to_e,
            "curious_poincare": self.curious_poincare,
        })
    }
}

#[derive(Clone, Debug)]
pub struct HodgeResult {
    pub spec: ProblemSpec,
    pub hb: RatFun,
    pub d: i64,
    pub e_poly: Option<RatFun>,
    pub mhp: Option<RatFun>,
    pub checks: Checks,
    pub warnings: Vec<String>,
}

impl HodgeResult {
    pub fn to_json(&self) -> Value {
        json!({
            "hb": self.hb.to_json(),
            "d": self.d,
            "e_poly": self.e_poly.as_ref().map(|e| e.to_json()),
            "mhp": self.mhp.as_ref().map(|m| m.to_json()),
            "checks": self.checks.to_json(),
            "warnings": self.warnings,
        })
    }
}

fn check_hb(hb: &RatFun, d: i64) -> Checks {
    let mut c = Checks {
        symmetric: hb.swap_vars() == *hb,
        sign_symmetric: hb.negate_x().swap_vars().negate_x().swap_vars() == *hb,
        ..Default::default()
    };
    let Some(l) = hb.to_laurent().filter(|_| hb.is_polynomial()) else {
        return c;
    };
    c.is_polynomial = l.iter().all(|(&(a, b), _)| a >= 0 && b >= 0);
    c.deg_z = l.iter().map(|(e, _)| e.0).max();
    c.deg_w = l.iter().map(|(e, _)| e.1).max();
    let dz = c.deg_z.unwrap_or(0);
    let dw = c.deg_w.unwrap_or(0);
    c.degree_le_d = dz <= d && dw <= d;
    c.degree_eq_d = dz == d && dw == d;
    c.odd_degree_witness = l.iter().map(|(e, _)| *e).find(|e| (e.0 + e.1) % 2 != 0);
    c.even_total_degree = c.odd_degree_witness.is_none();
    c.negative_witness = l
        .iter()
        .find(|(e, v)| {
            let s = if e.0 % 2 == 0 { (*v).clone() } else { -(*v).clone() };
            s.is_negative()
        })
        .map(|(e, _)| *e);
    c.nonneg_minus_z = c.negative_witness.is_none() && l.iter().all(|(_, v)| v.is_integer());
    c
}

/// `H_B`, `d`, both E routes, the mixed Hodge polynomial and all checks.
pub fn compute_hb(spec: &ProblemSpec) -> Result<HodgeResult> {
    let hb = hb_rational(spec)?;
    let d = dimension_d(spec);
    let mut checks = check_hb(&hb, d);
    let mut e_poly = None;
    let mut mhp = None;
    if checks.is_polynomial && checks.even_total_degree {
        let ea = substitute_powers(&hb, SubstMode::E, d)?;
        let eb = e_polynomial_one_param(spec)?;
        checks.e_routes_agree = Some(ea == eb);
        checks.e_palindromic = Some(palindromic(&ea, d));
        let m = substitute_powers(&hb, SubstMode::Mhp, d)?;
        checks.mhp_specializes_to_e = Some(m.compose(&RatFun::x(), &RatFun::from_int(-1))? == ea);
        checks.curious_poincare = Some(curious_poincare(&m, d)?);
        e_poly = Some(ea);
        mhp = Some(m);
    }
    Ok(HodgeResult { spec: spec.clone(), hb, d, e_poly, mhp, checks, warnings: spec.warnings() })
}

/// `q^d E(1/q) = E(q)`.
pub fn palindromic(e: &RatFun, d: i64) -> bool {
    let inv = e.map_exps(|(a, b)| (-a, b));
    &inv * &RatFun::monomial(d, 0, 1) == *e
}

/// `MHP(1/(q t²), t) (q t)^d = MHP(q, t)`.
pub fn curious_poincare(m: &RatFun, d: i64) -> Result<bool> {
    let (q, t) = (RatFun::x(), RatFun::y());
    let arg = RatFun::one().checked_div(&(&q * &t.pow(2)))?;
    let lhs = &m.compose(&arg, &t)? * &(&q * &t).pow(d);
    Ok(lhs == *m)
}

/// The E-polynomial via both routes; errors if they differ.
pub fn e_polynomial(spec: &ProblemSpec) -> Result<RatFun> {
    let hb = hb_rational(spec)?;
    let d = dimension_d(spec);
    let ea = substitute_powers(&hb, SubstMode::E, d)?;
    let eb = e_polynomial_one_param(spec)?;
    if ea != eb {
        return Err(Error::RouteMismatch(format!(
            "route A gives {}, route B gives {}",
            ea.to_text(["q", "t"]),
            eb.to_text(["q", "t"])
        )));
    }
    Ok(ea)
}

pub fn mixed_hodge_poly(spec: &ProblemSpec) -> Result<RatFun> {
    substitute_powers(&hb_rational(spec)?, SubstMode::Mhp, dimension_d(spec))
}

/// Leading coefficient of `E` (informational: number of top-dimensional components).
pub fn leading_coefficient(e: &RatFun) -> Option<num_rational::BigRational> {
    let l = e.to_laurent()?;
    l.iter().max_by_key(|(e, _)| e.0).map(|(_, c)| c.clone()).filter(|c| !c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(v: &[&str]) -> Vec<SimpleType> {
        v.iter().map(|s| SimpleType::parse(s).unwrap()).collect()
    }

    #[test]
    fn dimensions() {
        let s = ProblemSpec::new(0, 2, 4, cls(&["0,0:1 1", "0,0:1 1", "2,0:", "2,0:"])).unwrap();
        assert_eq!(dimension_d(&s), 8);
        let s = ProblemSpec::new(0, 2, 5, cls(&["0,0:1 1", "1,0:1", "2,0:", "2,0:"])).unwrap();
        assert_eq!(dimension_d(&s), 24);
        let s = ProblemSpec::new(1, 1, 1, cls(&["0,0:", "0,0:"])).unwrap();
        assert_eq!(dimension_d(&s), 2);
    }

    #[test]
    fn rank_one() {
        let s = ProblemSpec::new(0, 2, 1, cls(&["0,0:"; 4])).unwrap();
        let r = compute_hb(&s).unwrap();
        let (z, w) = (RatFun::x(), RatFun::y());
        assert_eq!(r.hb, (&z - &w).pow(2));
        let (q, t) = (RatFun::x(), RatFun::y());
        assert_eq!(r.mhp.unwrap(), (&t + &(&q * &t.pow(2))).pow(2));
        assert!(r.checks.all_pass());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ProblemSpec::new(0, 1, 4, cls(&["0,0:1 1"])).is_err());
        assert!(ProblemSpec::new(0, 1, 4, cls(&["0,0:1", "2,0:"])).is_err());
    }
}
