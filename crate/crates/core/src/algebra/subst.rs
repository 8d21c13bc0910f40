//! Specializations of rational functions in (z, w).

use super::laurent::LaurentPoly;
use super::ratfun::RatFun;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubstMode {
    /// `z^a w^b ↦ q^{(d+a-b)/2}`.
    E,
    /// `z^a w^b ↦ (-1)^a t^{d+a} q^{(d+a-b)/2}`.
    Mhp,
}

/// `(√q)^d p(√q, 1/√q)` or `(t√q)^d p(-t√q, 1/√q)`; result in (q, t).
pub fn substitute_powers(p: &RatFun, mode: SubstMode, d: i64) -> Result<RatFun> {
    if d % 2 != 0 {
        return Err(Error::Parity(format!("odd d = {}", d)));
    }
    let l = p.to_laurent().filter(|_| p.is_polynomial()).ok_or_else(|| Error::NotPolynomial(p.to_text(["z", "w"])))?;
    let mut out = LaurentPoly::zero();
    for (&(a, b), c) in l.iter() {
        if (a + b) % 2 != 0 {
            return Err(Error::Parity(format!("monomial z^{} w^{} has odd degree", a, b)));
        }
        let qe = (d + a - b) / 2;
        match mode {
            SubstMode::E => out.add_term((qe, 0), c.clone()),
            SubstMode::Mhp => {
                let s = if a % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term((qe, d + a), s);
            }
        }
    }
    Ok(RatFun::from_laurent(&out))
}

/// `z ↦ √q, w ↦ 1/√q`. Numerator and denominator must each involve a
/// single parity of `a - b`; a common odd parity cancels.
pub fn half_specialize(p: &RatFun) -> Result<RatFun> {
    let map = |l: &LaurentPoly| -> Result<(LaurentPoly, i64)> {
        let m = l.map_exps(|(a, b)| (a - b, 0));
        let mut parity = None;
        for (&(e, _), _) in m.iter() {
            let pe = e.rem_euclid(2);
            match parity {
                None => parity = Some(pe),
                Some(pp) if pp != pe => {
                    return Err(Error::Parity("half-integral power of q after specialization".into()))
                }
                _ => {}
            }
        }
        Ok((m, parity.unwrap_or(0)))
    };
    let (n, pn) = map(&p.numerator())?;
    let (d, pd) = map(&p.denominator())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if n.is_zero() {
        return Ok(RatFun::zero());
    }
    if pn != pd {
        return Err(Error::Parity("odd power of sqrt(q) survives".into()));
    }
    let halve = |l: &LaurentPoly| l.map_exps(|(e, _)| ((e - pn) / 2, 0));
    RatFun::from_laurent(&halve(&n)).checked_div(&RatFun::from_laurent(&halve(&d)))
}

/// `f(q, 1/q)` for a function of (q, t).
pub fn at_inverse(p: &RatFun) -> RatFun {
    p.map_exps(|(a, b)| (a - b, 0))
}

/// Evaluates a univariate (first-variable) function at `x`.
pub fn eval1(p: &RatFun, x: &BigRational) -> Result<BigRational> {
    p.eval(x, &BigRational::one())
}

