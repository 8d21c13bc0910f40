//! Reduced fractions of integer bivariate polynomials.

use super::gcd::gcd;
use super::laurent::{Exp, LaurentPoly};
use super::poly::{Mono, Poly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of ℚ(x, y). Canonical form: `num`, `den` in ℤ[x,y] coprime
/// (content included), leading coefficient of `den` positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFun { num: Poly::constant(BigInt::from(c)), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFun { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Self::from_parts(Poly::constant(c.numer().clone()), Poly::constant(c.denom().clone()))
    }

    /// `c · x^a y^b` with integer exponents of either sign.
    pub fn monomial(a: i64, b: i64, c: i64) -> Self {
        let mut l = LaurentPoly::zero();
        l.add_term((a, b), BigRational::from_integer(BigInt::from(c)));
        Self::from_laurent(&l)
    }

    /// The first variable.
    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The second variable.
    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    /// Reduces an arbitrary pair.
    pub fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::signed(n, d)
    }

    fn signed(n: Poly, d: Poly) -> Self {
        if d.lead_is_negative() {
            RatFun { num: n.neg(), den: d.neg() }
        } else {
            RatFun { num: n, den: d }
        }
    }

    pub fn try_from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Self::from_parts(num, den))
        }
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        if l.is_zero() {
            return Self::zero();
        }
        let (num, den) = laurent_to_parts(l);
        Self::from_parts(num, den)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn numerator(&self) -> LaurentPoly {
        poly_to_laurent(&self.num)
    }

    pub fn denominator(&self) -> LaurentPoly {
        poly_to_laurent(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a nonzero constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when the denominator is a single monomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let ((da, db), dc) = self.den.lead().unwrap().clone();
        let mut out = LaurentPoly::zero();
        for ((a, b), c) in self.num.terms() {
            out.add_term(
                (*a as i64 - da as i64, *b as i64 - db as i64),
                BigRational::new(c.clone(), dc.clone()),
            );
        }
        Some(out)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match (self.num.constant_value(), self.den.constant_value()) {
            (Some(n), Some(d)) => Some(BigRational::new(n, d)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::signed(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFun) -> Result<RatFun> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> RatFun {
        if e == 0 {
            return Self::one();
        }
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let e = e as u32;
        Self::signed(self.num.pow(e), self.den.pow(e))
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> RatFun {
        let f = |m: Mono| (m.1, m.0);
        Self::signed(self.num.map_injective(f), self.den.map_injective(f))
    }

    /// `f(x^r, y^r)`; reducedness is preserved.
    pub fn adams(&self, r: u32) -> RatFun {
        if r == 1 {
            return self.clone();
        }
        let f = move |m: Mono| (m.0 * r, m.1 * r);
        RatFun { num: self.num.map_monotone(f), den: self.den.map_monotone(f) }
    }

    /// `f(-x, y)`.
    pub fn negate_x(&self) -> RatFun {
        let flip = |p: &Poly| {
            Poly::from_sorted(
                p.terms().iter().map(|(m, c)| (*m, if m.0 % 2 == 1 { -c } else { c.clone() })).collect(),
            )
        };
        Self::signed(flip(&self.num), flip(&self.den))
    }

    /// Applies an exponent map to numerator and denominator separately and
    /// re-reduces; the map must be a monoid homomorphism ℤ² → ℤ².
    pub fn map_exps<F: Fn(Exp) -> Exp>(&self, f: F) -> RatFun {
        let n = self.numerator().map_exps(&f);
        let d = self.denominator().map_exps(&f);
        let (nn, nd) = laurent_to_parts(&n);
        let (dn, dd) = laurent_to_parts(&d);
        if dn.is_zero() {
            panic!("exponent map sends denominator to zero");
        }
        RatFun::from_parts(nn.mul(&dd), nd.mul(&dn))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational> {
        let d = eval_poly(&self.den, x, y);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(eval_poly(&self.num, x, y) / d)
    }

    /// `f(u, v)` for rational functions `u, v`.
    pub fn compose(&self, u: &RatFun, v: &RatFun) -> Result<RatFun> {
        let d = compose_poly(&self.den, u, v);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        compose_poly(&self.num, u, v).checked_div(&d)
    }

    pub fn to_text(&self, vars: [&str; 2]) -> String {
        if let Some(l) = self.to_laurent() {
            return l.to_text(vars);
        }
        format!("({})/({})", self.numerator().to_text(vars), self.denominator().to_text(vars))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self.to_laurent() {
            Some(l) => l.to_json(),
            None => serde_json::json!({
                "num": self.numerator().to_json(),
                "den": self.denominator().to_json(),
            }),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RatFun> {
        if v.is_array() {
            return Ok(RatFun::from_laurent(&LaurentPoly::from_json(v)?));
        }
        let n = LaurentPoly::from_json(v.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
        let d = LaurentPoly::from_json(v.get("den").ok_or_else(|| Error::Parse("missing den".into()))?)?;
        RatFun::from_laurent(&n).checked_div(&RatFun::from_laurent(&d))
    }

    /// Parses `p` or `(p)/(p)` in the text syntax of [`LaurentPoly`].
    pub fn parse(s: &str, vars: [&str; 2]) -> Result<RatFun> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(") {
                let n = &rest[..idx];
                let d = rest[idx + 3..].trim_end().strip_suffix(')').ok_or_else(|| Error::Parse(s.into()))?;
                let n = RatFun::from_laurent(&LaurentPoly::parse(n, vars)?);
                let d = RatFun::from_laurent(&LaurentPoly::parse(d, vars)?);
                return n.checked_div(&d);
            }
        }
        Ok(RatFun::from_laurent(&LaurentPoly::parse(t, vars)?))
    }
}

fn eval_poly(p: &Poly, x: &BigRational, y: &BigRational) -> BigRational {
    use num_traits::Pow;
    let mut s = BigRational::zero();
    for ((a, b), c) in p.terms() {
        s += BigRational::from_integer(c.clone()) * Pow::pow(x, *a) * Pow::pow(y, *b);
    }
    s
}

fn compose_poly(p: &Poly, u: &RatFun, v: &RatFun) -> RatFun {
    let mut up: Vec<RatFun> = vec![RatFun::one()];
    let mut vp: Vec<RatFun> = vec![RatFun::one()];
    let mut s = RatFun::zero();
    for ((a, b), c) in p.terms() {
        while up.len() <= *a as usize {
            let n = up.last().unwrap() * u;
            up.push(n);
        }
        while vp.len() <= *b as usize {
            let n = vp.last().unwrap() * v;
            vp.push(n);
        }
        s += &(&(&up[*a as usize] * &vp[*b as usize]) * &RatFun::from_bigint(c.clone()));
    }
    s
}

fn poly_to_laurent(p: &Poly) -> LaurentPoly {
    let mut l = LaurentPoly::zero();
    for ((a, b), c) in p.terms() {
        l.add_term((*a as i64, *b as i64), BigRational::from_integer(c.clone()));
    }
    l
}

/// Writes `l = num / den` with integer polynomials.
fn laurent_to_parts(l: &LaurentPoly) -> (Poly, Poly) {
    if l.is_zero() {
        return (Poly::zero(), Poly::one());
    }
    let ma = l.iter().map(|(e, _)| e.0).min().unwrap().min(0);
    let mb = l.iter().map(|(e, _)| e.1).min().unwrap().min(0);
    let mut lcm = BigInt::one();
    for (_, c) in l.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let num = Poly::from_terms(l.iter().map(|(e, c)| {
        let v = c.numer() * (&lcm / c.denom());
        (((e.0 - ma) as u32, (e.1 - mb) as u32), v)
    }));
    let den = Poly::monomial(((-ma) as u32, (-mb) as u32), lcm);
    (num, den)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(["x", "y"]))
    }
}

fn add_impl(a: &RatFun, b: &RatFun, negate: bool) -> RatFun {
    if b.is_zero() {
        return a.clone();
    }
    let bn = if negate { b.num.neg() } else { b.num.clone() };
    if a.is_zero() {
        return RatFun { num: bn, den: b.den.clone() };
    }
    if a.den == b.den {
        let num = a.num.add(&bn);
        if a.den.is_one() || num.is_zero() {
            return if num.is_zero() { RatFun::zero() } else { RatFun { num, den: a.den.clone() } };
        }
        return RatFun::from_parts(num, a.den.clone());
    }
    let g = gcd(&a.den, &b.den);
    if g.is_one() {
        let num = a.num.mul(&b.den).add(&bn.mul(&a.den));
        if num.is_zero() {
            return RatFun::zero();
        }
        // coprime denominators: the sum is already reduced
        return RatFun::signed(num, a.den.mul(&b.den));
    }
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let t = a.num.mul(&bd).add(&bn.mul(&ad));
    if t.is_zero() {
        return RatFun::zero();
    }
    let g2 = gcd(&t, &g);
    if g2.is_one() {
        return RatFun::signed(t, ad.mul(&b.den));
    }
    let num = t.div_exact(&g2).unwrap();
    let den = ad.mul(&b.den.div_exact(&g2).unwrap());
    RatFun::signed(num, den)
}

fn mul_impl(a: &RatFun, b: &RatFun) -> RatFun {
    if a.is_zero() || b.is_zero() {
        return RatFun::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatFun { num: a.num.mul(&b.num), den: Poly::one() };
    }
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let an = if g1.is_one() { a.num.clone() } else { a.num.div_exact(&g1).unwrap() };
    let bd = if g1.is_one() { b.den.clone() } else { b.den.div_exact(&g1).unwrap() };
    let bn = if g2.is_one() { b.num.clone() } else { b.num.div_exact(&g2).unwrap() };
    let ad = if g2.is_one() { a.den.clone() } else { a.den.div_exact(&g2).unwrap() };
    RatFun::signed(an.mul(&bn), ad.mul(&bd))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                $body(self, o)
            }
        }
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                $body(&self, &o)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                $body(&self, o)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a, b| add_impl(a, b, false));
binop!(Sub, sub, |a, b| add_impl(a, b, true));
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a: &RatFun, b: &RatFun| a.checked_div(b).expect("division by zero"));

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

impl std::ops::AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, o: &RatFun) {
        *self = add_impl(self, o, false);
    }
}

impl std::ops::SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, o: &RatFun) {
        *self = add_impl(self, o, true);
    }
}

impl std::ops::MulAssign<&RatFun> for RatFun {
    fn mul_assign(&mut self, o: &RatFun) {
        *self = mul_impl(self, o);
    }
}

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(it: I) -> RatFun {
        let mut s = RatFun::zero();
        for x in it {
            s += &x;
        }
        s
    }
}

impl std::iter::Product for RatFun {
    fn product<I: Iterator<Item = RatFun>>(it: I) -> RatFun {
        let mut s = RatFun::one();
        for x in it {
            s *= &x;
        }
        s
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        RatFun::from_int(c)
    }
}

/// Sign of the leading coefficient of the denominator, for tests.
pub fn den_lead_positive(r: &RatFun) -> bool {
    r.den.lead().map(|t| t.1.is_positive()).unwrap_or(false)
}
