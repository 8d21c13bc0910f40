//! Exact arithmetic: integer bivariate polynomials, Laurent polynomials and
//! the rational function field ℚ(x, y).

mod gcd;
mod laurent;
mod linsolve;
mod poly;
mod ratfun;
mod subst;

pub use gcd::gcd;
pub use laurent::{cmp_exp, parse_rational, Exp, LaurentPoly};
pub use linsolve::solve_unique;
pub use poly::{cmp_mono, Mono, Poly};
pub use ratfun::{den_lead_positive, RatFun};
pub use subst::{at_inverse, eval1, half_specialize, substitute_powers, SubstMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Div,
    Neg,
}

/// Field arithmetic with explicit division-by-zero reporting.
pub fn ratfun_arith(x: &RatFun, y: &RatFun, op: ArithOp) -> crate::Result<RatFun> {
    match op {
        ArithOp::Add => Ok(x + y),
        ArithOp::Mul => Ok(x * y),
        ArithOp::Div => x.checked_div(y),
        ArithOp::Neg => Ok(-x),
    }
}

/// A 2×2 matrix of scalars used for alphabet substitution.
pub type Mat2 = [[RatFun; 2]; 2];

pub fn mat2(a: RatFun, b: RatFun, c: RatFun, d: RatFun) -> Mat2 {
    [[a, b], [c, d]]
}

pub fn mat2_mul(m: &Mat2, n: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &(&m[i][0] * &n[0][j]) + &(&m[i][1] * &n[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn mat2_inv(m: &Mat2) -> crate::Result<Mat2> {
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    let di = det.inv()?;
    Ok([[&m[1][1] * &di, -(&m[0][1] * &di)], [-(&m[1][0] * &di), &m[0][0] * &di]])
}
