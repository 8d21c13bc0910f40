//! Polynomial gcd over ℤ[x,y].
//!
//! Heuristic gcd (evaluation at a large integer, integer gcd, balanced
//! base-ξ reconstruction, trial division) with a primitive-PRS fallback.

use super::poly::{trim, Poly};
use num_bigint::BigInt;
use num_integer::Integer;

use num_traits::{One, Signed, Zero};

const HEU_TRIES: usize = 6;

type UPoly = Vec<BigInt>;
type Biv = Vec<UPoly>;

/// Greatest common divisor, normalized to a positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return positive(b.clone());
    }
    if b.is_zero() {
        return positive(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return positive(a.clone());
    }
    let (ma, mb) = (a.min_exps(), b.min_exps());
    let shift = (ma.0.min(mb.0), ma.1.min(mb.1));
    let (ca, cb) = (a.content(), b.content());
    let c = ca.gcd(&cb);
    if a.is_monomial() || b.is_monomial() {
        return Poly::monomial(shift, c);
    }
    let pa = a.unshift(ma).div_scalar(&ca);
    let pb = b.unshift(mb).div_scalar(&cb);
    let core = if pa.is_constant() || pb.is_constant() {
        Poly::one()
    } else if pa.deg_y() == 0 && pb.deg_y() == 0 {
        uni_to_poly(&uni_gcd(&row0(&pa), &row0(&pb)), false)
    } else if pa.deg_x() == 0 && pb.deg_x() == 0 {
        uni_to_poly(&uni_gcd(&col0(&pa), &col0(&pb)), true)
    } else {
        match heu_gcd_biv(&pa, &pb) {
            Some(g) => g,
            None => Poly::from_dense(&prs_gcd_biv(&pa.to_dense(), &pb.to_dense())),
        }
    };
    positive(core.mul_term(shift, &c))
}

fn positive(p: Poly) -> Poly {
    if p.lead_is_negative() {
        p.neg()
    } else {
        p
    }
}

fn row0(p: &Poly) -> UPoly {
    let mut v = vec![BigInt::zero(); p.deg_x() as usize + 1];
    for ((a, _), c) in p.terms() {
        v[*a as usize] = c.clone();
    }
    v
}

fn col0(p: &Poly) -> UPoly {
    let mut v = vec![BigInt::zero(); p.deg_y() as usize + 1];
    for ((_, b), c) in p.terms() {
        v[*b as usize] = c.clone();
    }
    v
}

fn uni_to_poly(u: &UPoly, in_y: bool) -> Poly {
    Poly::from_terms(u.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
        let m = if in_y { (0, i as u32) } else { (i as u32, 0) };
        (m, c.clone())
    }))
}

// ---- univariate helpers (index = degree) ----

fn u_content(f: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in f {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_is_zero(f: &UPoly) -> bool {
    f.iter().all(|c| c.is_zero())
}

fn u_div_scalar(f: &UPoly, c: &BigInt) -> UPoly {
    f.iter().map(|x| x / c).collect()
}

fn u_eval(f: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn u_max_norm(f: &UPoly) -> BigInt {
    f.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Exact quotient in ℤ[x].
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let mut r = a.clone();
    trim(&mut r);
    let mut b = b.clone();
    trim(&mut b);
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let (qc, rem) = r.last().unwrap().div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= c * &qc;
        }
        q[shift] = qc;
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn sym_mod(h: &BigInt, x: &BigInt) -> BigInt {
    let r = h.mod_floor(x);
    if &r + &r > *x {
        r - x
    } else {
        r
    }
}

fn u_interpolate(h: &BigInt, x: &BigInt) -> UPoly {
    let mut f = Vec::new();
    let mut h = h.clone();
    while !h.is_zero() {
        let g = sym_mod(&h, x);
        h = (&h - &g) / x;
        f.push(g);
    }
    if f.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in f.iter_mut() {
            *c = -&*c;
        }
    }
    f
}

fn start_point(f_norm: &BigInt, g_norm: &BigInt, f_lc: &BigInt, g_lc: &BigInt) -> BigInt {
    let b: BigInt = BigInt::from(2) * f_norm.min(g_norm) + 29;
    let a = b.clone().min(BigInt::from(99) * b.sqrt());
    let c = BigInt::from(2) * (f_norm / f_lc.abs()).min(g_norm / g_lc.abs()) + 4;
    a.max(c)
}

fn grow(x: &BigInt) -> BigInt {
    BigInt::from(73794) * x * x.sqrt().sqrt() / 27011
}

/// gcd in ℤ[x], positive leading coefficient.
fn uni_gcd(f: &UPoly, g: &UPoly) -> UPoly {
    let mut f = f.clone();
    let mut g = g.clone();
    trim(&mut f);
    trim(&mut g);
    if f.is_empty() {
        return u_positive(g);
    }
    if g.is_empty() {
        return u_positive(f);
    }
    heu_gcd_uni(&f, &g).unwrap_or_else(|| prs_gcd_uni(&f, &g))
}

fn u_positive(mut f: UPoly) -> UPoly {
    if f.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in f.iter_mut() {
            *c = -&*c;
        }
    }
    f
}

fn heu_gcd_uni(f: &UPoly, g: &UPoly) -> Option<UPoly> {
    let (cf, cg) = (u_content(f), u_content(g));
    let gc = cf.gcd(&cg);
    let f = u_div_scalar(f, &cf);
    let g = u_div_scalar(g, &cg);
    if f.len() == 1 || g.len() == 1 {
        return Some(vec![gc]);
    }
    let (fn_, gn) = (u_max_norm(&f), u_max_norm(&g));
    let mut x = start_point(&fn_, &gn, f.last().unwrap(), g.last().unwrap());
    for _ in 0..HEU_TRIES {
        let ff = u_eval(&f, &x);
        let gg = u_eval(&g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cff = &ff / &h;
            let cfg = &gg / &h;
            let hp = u_interpolate(&h, &x);
            let hc = u_content(&hp);
            let hp = u_div_scalar(&hp, &hc);
            if u_div_exact(&f, &hp).is_some()
                && u_div_exact(&g, &hp).is_some() {
                    return Some(u_positive(hp.iter().map(|c| c * &gc).collect()));
                }
            let cffp = u_interpolate(&cff, &x);
            if let Some(h2) = u_div_exact(&f, &cffp) {
                if u_div_exact(&g, &h2).is_some() {
                    return Some(u_positive(h2.iter().map(|c| c * &gc).collect()));
                }
            }
            let cfgp = u_interpolate(&cfg, &x);
            if let Some(h3) = u_div_exact(&g, &cfgp) {
                if u_div_exact(&f, &h3).is_some() {
                    return Some(u_positive(h3.iter().map(|c| c * &gc).collect()));
                }
            }
        }
        x = grow(&x);
    }
    None
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    trim(&mut r);
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= c * &lr;
        }
        trim(&mut r);
    }
    r
}

fn prs_gcd_uni(f: &UPoly, g: &UPoly) -> UPoly {
    let (cf, cg) = (u_content(f), u_content(g));
    let c = cf.gcd(&cg);
    let mut a = u_div_scalar(f, &cf);
    let mut b = u_div_scalar(g, &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = u_prem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let rc = u_content(&r);
            u_div_scalar(&r, &rc)
        };
    }
    let ac = u_content(&a);
    u_positive(a.iter().map(|x| x / &ac * &c).collect())
}

// ---- bivariate heuristic ----

fn biv_max_norm(p: &Poly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Evaluates the y variable at `x`, giving a polynomial in the first variable.
fn eval_y(p: &Poly, x: &BigInt) -> UPoly {
    let d = p.to_dense();
    let n = d.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = vec![BigInt::zero(); n];
    for row in d.iter().rev() {
        for c in out.iter_mut() {
            *c *= x;
        }
        for (i, c) in row.iter().enumerate() {
            out[i] += c;
        }
    }
    trim(&mut out);
    out
}

fn biv_interpolate(h: &UPoly, x: &BigInt) -> Poly {
    let mut rows: Biv = Vec::new();
    let mut h = h.clone();
    while !u_is_zero(&h) {
        let g: UPoly = h.iter().map(|c| sym_mod(c, x)).collect();
        h = h.iter().zip(g.iter()).map(|(a, b)| (a - b) / x).collect();
        rows.push(g);
    }
    let p = Poly::from_dense(&rows);
    if p.lead_is_negative() {
        p.neg()
    } else {
        p
    }
}

fn heu_gcd_biv(f: &Poly, g: &Poly) -> Option<Poly> {
    let (fn_, gn) = (biv_max_norm(f), biv_max_norm(g));
    let flc = ground_lc(f);
    let glc = ground_lc(g);
    let mut x = start_point(&fn_, &gn, &flc, &glc);
    for _ in 0..HEU_TRIES {
        let ff = eval_y(f, &x);
        let gg = eval_y(g, &x);
        if !ff.is_empty() && !gg.is_empty() {
            let h = uni_gcd(&ff, &gg);
            let hp = biv_interpolate(&h, &x).primitive().1;
            if !hp.is_zero()
                && f.div_exact(&hp).is_some() && g.div_exact(&hp).is_some() {
                    return Some(hp);
                }
            if let Some(cff) = u_div_exact(&ff, &h) {
                let cffp = biv_interpolate(&cff, &x);
                if !cffp.is_zero() {
                    if let Some(h2) = f.div_exact(&cffp) {
                        if g.div_exact(&h2).is_some() {
                            return Some(h2);
                        }
                    }
                }
            }
            if let Some(cfg) = u_div_exact(&gg, &h) {
                let cfgp = biv_interpolate(&cfg, &x);
                if !cfgp.is_zero() {
                    if let Some(h3) = g.div_exact(&cfgp) {
                        if f.div_exact(&h3).is_some() {
                            return Some(h3);
                        }
                    }
                }
            }
        }
        x = grow(&x);
    }
    None
}

/// Leading coefficient when viewed in ℤ[x][y] (highest y row, highest x).
fn ground_lc(p: &Poly) -> BigInt {
    let dy = p.deg_y();
    p.terms()
        .iter()
        .filter(|(m, _)| m.1 == dy)
        .max_by_key(|(m, _)| m.0)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::one)
}

// ---- bivariate primitive PRS fallback, polynomials in y over ℤ[x] ----

fn b_trim(v: &mut Biv) {
    while v.last().map(|r| r.is_empty()).unwrap_or(false) {
        v.pop();
    }
}

fn b_content(f: &Biv) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in f {
        if row.is_empty() {
            continue;
        }
        g = uni_gcd(&g, row);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_uni(f: &Biv, c: &UPoly) -> Biv {
    f.iter().map(|r| if r.is_empty() { Vec::new() } else { u_div_exact(r, c).expect("content divides") }).collect()
}

fn b_prem(a: &Biv, b: &Biv) -> Biv {
    let mut r = a.clone();
    b_trim(&mut r);
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for row in r.iter_mut() {
            *row = u_mul(row, &lb);
        }
        for (i, row) in b.iter().enumerate() {
            let t = u_mul(row, &lr);
            r[i + shift] = u_sub(&r[i + shift], &t);
        }
        b_trim(&mut r);
    }
    r
}

fn prs_gcd_biv(f: &Biv, g: &Biv) -> Biv {
    let mut f = f.clone();
    let mut g = g.clone();
    b_trim(&mut f);
    b_trim(&mut g);
    let (cf, cg) = (b_content(&f), b_content(&g));
    let c = uni_gcd(&cf, &cg);
    let mut a = b_div_uni(&f, &cf);
    let mut b = b_div_uni(&g, &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = b_prem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let rc = b_content(&r);
            b_div_uni(&r, &rc)
        };
    }
    let ac = b_content(&a);
    let a = b_div_uni(&a, &ac);
    a.iter().map(|r| if r.is_empty() { Vec::new() } else { u_mul(r, &c) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ts: &[((u32, u32), i64)]) -> Poly {
        Poly::from_terms(ts.iter().map(|(m, c)| (*m, BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[((1, 0), 1), ((0, 1), -1)]); // x - y
        let b = p(&[((2, 0), 1), ((0, 0), -1)]); // x^2 - 1
        let c = p(&[((3, 0), 1), ((0, 1), -1)]); // x^3 - y
        let g = gcd(&a.mul(&b).mul(&c).scale(&BigInt::from(6)), &a.mul(&c).mul(&c).scale(&BigInt::from(4)));
        assert_eq!(g, positive(a.mul(&c).scale(&BigInt::from(2))));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let a = p(&[((1, 0), 1), ((0, 1), 2), ((1, 1), -3)]);
        let b = p(&[((2, 0), 1), ((0, 2), 1), ((0, 0), 5)]);
        let c = p(&[((1, 0), 7), ((0, 0), -1)]);
        let f = a.mul(&b);
        let g = a.mul(&c);
        let h1 = heu_gcd_biv(&f, &g).unwrap();
        let h2 = positive(Poly::from_dense(&prs_gcd_biv(&f.to_dense(), &g.to_dense())));
        assert_eq!(positive(h1), h2);
        assert_eq!(h2, positive(a));
    }
}
