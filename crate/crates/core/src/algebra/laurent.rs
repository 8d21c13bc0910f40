//! Sparse Laurent polynomials in two variables with rational coefficients,
//! plus their text and JSON forms.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub type Exp = (i64, i64);

/// Graded lex with the first variable smaller than the second.
pub fn cmp_exp(a: Exp, b: Exp) -> Ordering {
    (a.0 + a.1, a.1).cmp(&(b.0 + b.1, b.1))
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial((0, 0), BigRational::one())
    }

    pub fn monomial(e: Exp, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted by decreasing graded lex order.
    pub fn sorted_terms(&self) -> Vec<(Exp, BigRational)> {
        let mut v: Vec<(Exp, BigRational)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| cmp_exp(b.0, a.0));
        v
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn map_exps<F: Fn(Exp) -> Exp>(&self, f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }

    pub fn to_text(&self, vars: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || e == (0, 0) {
                factors.push(a.to_string());
            }
            for (k, name) in [(e.0, vars[0]), (e.1, vars[1])] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{}^{}", name, k)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parses the text produced by [`LaurentPoly::to_text`] (spaces ignored).
    pub fn parse(src: &str, vars: [&str; 2]) -> Result<LaurentPoly> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes: Vec<char> = s.chars().collect();
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, &ch) in bytes.iter().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && bytes[i - 1] != '^' && bytes[i - 1] != '(' {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = LaurentPoly::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, t.strip_prefix('+').unwrap_or(&t).to_string()),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in '{}'", src)));
            }
            let mut coef = BigRational::from_integer(BigInt::from(sign));
            let mut e: Exp = (0, 0);
            for f in body.split('*') {
                if f.is_empty() {
                    return Err(Error::Parse(format!("empty factor in '{}'", src)));
                }
                let (base, pow) = match f.split_once('^') {
                    Some((b, p)) => {
                        let p = p.trim_start_matches('(').trim_end_matches(')');
                        (b, p.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent '{}'", p)))?)
                    }
                    None => (f, 1),
                };
                if base == vars[0] {
                    e.0 += pow;
                } else if base == vars[1] {
                    e.1 += pow;
                } else {
                    let v = parse_rational(base)?;
                    if pow < 0 && v.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    coef *= num_traits::pow::Pow::pow(&v, pow as i32);
                }
            }
            out.add_term(e, coef);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(e, c)| Value::Array(vec![Value::from(e.0), Value::from(e.1), Value::from(c.to_string())]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<LaurentPoly> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected array of terms".into()))?;
        let mut out = LaurentPoly::zero();
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::Parse("expected [a,b,c]".into()))?;
            let a = t[0].as_i64().ok_or_else(|| Error::Parse("bad exponent".into()))?;
            let b = t[1].as_i64().ok_or_else(|| Error::Parse("bad exponent".into()))?;
            let c = t[2].as_str().ok_or_else(|| Error::Parse("coefficient must be a string".into()))?;
            out.add_term((a, b), parse_rational(c)?);
        }
        Ok(out)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad number '{}'", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let p = LaurentPoly::parse("2*w^8 - 4*z*w^7 + 1/2*z^-1 - 3", ["z", "w"]).unwrap();
        let s = p.to_text(["z", "w"]);
        assert_eq!(LaurentPoly::parse(&s, ["z", "w"]).unwrap(), p);
        assert_eq!(s, "2*w^8 - 4*z*w^7 - 3 + 1/2*z^-1");
    }

    #[test]
    fn json_roundtrip() {
        let p = LaurentPoly::parse("q^2 - 7/3*q*t + t^-1", ["q", "t"]).unwrap();
        let j = p.to_json();
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }
}
