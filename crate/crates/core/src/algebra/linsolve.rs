//! Fraction-free (Bareiss) elimination for overdetermined systems over ℚ(x,y).

use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// Solves `A c = b` where `A` has full column rank; rejects rank deficiency
/// and inconsistency.
pub fn solve_unique(a: &[Vec<RatFun>], b: &[RatFun]) -> Result<Vec<RatFun>> {
    let m = a.len();
    let p = a.first().map(|r| r.len()).unwrap_or(0);
    if b.len() != m {
        return Err(Error::SizeMismatch(b.len(), m));
    }
    let mut mat: Vec<Vec<RatFun>> =
        a.iter().zip(b.iter()).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let mut prev = RatFun::one();
    let mut r = 0;
    for col in 0..p {
        let piv = (r..m).filter(|&i| !mat[i][col].is_zero()).min_by_key(|&i| weight(&mat[i][col]));
        let piv = match piv {
            Some(i) => i,
            None => return Err(Error::Singular(format!("no pivot in column {}", col))),
        };
        mat.swap(r, piv);
        let pivot = mat[r][col].clone();
        for i in r + 1..m {
            let f = mat[i][col].clone();
            if f.is_zero() {
                for j in col + 1..=p {
                    mat[i][j] = (&pivot * &mat[i][j]) / &prev;
                }
            } else {
                for j in col + 1..=p {
                    let v = &(&pivot * &mat[i][j]) - &(&f * &mat[r][j]);
                    mat[i][j] = v / &prev;
                }
            }
            mat[i][col] = RatFun::zero();
        }
        prev = pivot;
        r += 1;
    }
    for row in mat.iter().skip(r) {
        if !row[p].is_zero() || row[..p].iter().any(|x| !x.is_zero()) {
            return Err(Error::Singular("inconsistent system".into()));
        }
    }
    let mut x = vec![RatFun::zero(); p];
    for col in (0..p).rev() {
        let mut s = mat[col][p].clone();
        for j in col + 1..p {
            if !mat[col][j].is_zero() {
                s = &s - &(&mat[col][j] * &x[j]);
            }
        }
        x[col] = s / &mat[col][col];
    }
    Ok(x)
}

fn weight(r: &RatFun) -> usize {
    r.num().len() + r.den().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_system() {
        let q = RatFun::x();
        let one = RatFun::one();
        // c0 = 1, q c0 - c1 = 0, c1 - q = 0 (redundant)
        let a = vec![
            vec![one.clone(), RatFun::zero()],
            vec![q.clone(), -one.clone()],
            vec![RatFun::zero(), one.clone()],
        ];
        let b = vec![one.clone(), RatFun::zero(), q.clone()];
        let x = solve_unique(&a, &b).unwrap();
        assert_eq!(x, vec![one, q]);
    }

    #[test]
    fn rank_deficient_rejected() {
        let a = vec![vec![RatFun::one(), RatFun::one()], vec![RatFun::from_int(2), RatFun::from_int(2)]];
        let b = vec![RatFun::one(), RatFun::from_int(2)];
        assert!(solve_unique(&a, &b).is_err());
    }
}
