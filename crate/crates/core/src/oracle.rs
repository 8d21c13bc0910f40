//! Brute-force cross-checks: genericity of explicit eigenvalue data, point
//! counts of twisted `GL_n(F_p)` representation spaces for `n ≤ 2`, a
//! Frobenius-formula counter and hyperoctahedral characters.

use crate::error::{Error, Result};
use crate::partitions::{BiPartition, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if !is_odd_prime(p) {
        return Err(Error::Invalid(format!("q = {} is not an odd prime", p)));
    }
    Ok(())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

// ---------------------------------------------------------------- genericity

/// One choice of subsets `𝐀_j` and signs `𝐞^j` whose product is `product`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subsets: Vec<Vec<usize>>,
    pub signs: Vec<Vec<i8>>,
    pub product: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub generic: bool,
    pub witness: Option<Witness>,
}

fn subsets_of_size(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, 0, &mut Vec::new(), &mut out);
    out
}

/// Tests `Π_j [𝐀_j, 𝐞^j]_j ≠ 1` (or `≠ ±1` when `strong`) over all
/// `1 ≤ M ≤ N`, subsets of size `M` and sign vectors. Residues are mod `p`.
pub fn genericity_check(eigs: &[Vec<u64>], p: u64, strong: bool) -> Result<GenericityReport> {
    check_prime(p)?;
    let n = eigs.first().map_or(0, |v| v.len());
    if eigs.iter().any(|v| v.len() != n) {
        return Err(Error::Invalid("eigenvalue tuples have different lengths".into()));
    }
    if eigs.iter().flatten().any(|&a| a % p == 0) {
        return Err(Error::Invalid("eigenvalues must be nonzero mod q".into()));
    }
    let sq: Vec<Vec<(u64, u64)>> = eigs
        .iter()
        .map(|v| {
            v.iter()
                .map(|&a| {
                    let s = a % p * (a % p) % p;
                    (s, inv_mod(s, p))
                })
                .collect()
        })
        .collect();
    let bad = |x: u64| x == 1 || (strong && x == p - 1);
    for m in 1..=n {
        // every (subset, signs) choice for one puncture, with its product
        let mut choices: Vec<(Vec<usize>, Vec<i8>)> = Vec::new();
        for s in subsets_of_size(n, m) {
            for mask in 0..(1u32 << m) {
                let signs = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                choices.push((s.clone(), signs));
            }
        }
        let value = |j: usize, c: &(Vec<usize>, Vec<i8>)| {
            c.0.iter().zip(&c.1).fold(1u64, |acc, (&g, &e)| {
                let (s, si) = sq[j][g];
                acc * if e > 0 { s } else { si } % p
            })
        };
        let mut pick = vec![0usize; eigs.len()];
        loop {
            let prod = pick.iter().enumerate().fold(1u64, |acc, (j, &c)| acc * value(j, &choices[c]) % p);
            if bad(prod) {
                return Ok(GenericityReport {
                    generic: false,
                    witness: Some(Witness {
                        subsets: pick.iter().map(|&c| choices[c].0.clone()).collect(),
                        signs: pick.iter().map(|&c| choices[c].1.clone()).collect(),
                        product: prod,
                    }),
                });
            }
            // odometer
            let mut j = 0;
            while j < pick.len() {
                pick[j] += 1;
                if pick[j] < choices.len() {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
            if j == pick.len() {
                break;
            }
        }
    }
    Ok(GenericityReport { generic: true, witness: None })
}

// ---------------------------------------------------------------- GL_n(F_p)

/// Row-major 2×2 matrix; `GL_1` elements are stored as `diag(a, 1)`.
pub type Mat = [u64; 4];

pub struct FiniteGl {
    pub n: usize,
    pub p: u64,
    pub elems: Vec<Mat>,
    index: Vec<u32>,
    class_of: Vec<u32>,
    pub class_size: Vec<u64>,
    class_rep: Vec<u32>,
    class_inv: Vec<u32>,
}

type ClassFn = Vec<u128>;

fn overflow() -> Error {
    Error::Invalid("count overflows 128 bits".into())
}

impl FiniteGl {
    /// `GL_n(F_p)` for `n ∈ {1, 2}`, memoized.
    pub fn get(n: usize, p: u64) -> Result<Arc<FiniteGl>> {
        static CACHE: OnceLock<RwLock<HashMap<(usize, u64), Arc<FiniteGl>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(g) = cache.read().unwrap().get(&(n, p)) {
            return Ok(g.clone());
        }
        let g = Arc::new(FiniteGl::build(n, p)?);
        Ok(cache.write().unwrap().entry((n, p)).or_insert(g).clone())
    }

    fn build(n: usize, p: u64) -> Result<FiniteGl> {
        check_prime(p)?;
        if !(1..=2).contains(&n) {
            return Err(Error::Invalid(format!("finite-field oracle supports n = 1, 2, got {}", n)));
        }
        if p > 31 {
            return Err(Error::Invalid(format!("q = {} too large for enumeration", p)));
        }
        let mut elems = Vec::new();
        if n == 1 {
            for a in 1..p {
                elems.push([a, 0, 0, 1]);
            }
        } else {
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        for d in 0..p {
                            if !(a * d + p * p - b * c).is_multiple_of(p) {
                                elems.push([a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        let mut index = vec![u32::MAX; (p * p * p * p) as usize];
        for (i, m) in elems.iter().enumerate() {
            index[code(m, p)] = i as u32;
        }
        let mut g = FiniteGl { n, p, elems, index, class_of: vec![], class_size: vec![], class_rep: vec![], class_inv: vec![] };
        let mut keys: HashMap<(u64, u64, bool), u32> = HashMap::new();
        let mut class_of = Vec::with_capacity(g.elems.len());
        for (i, m) in g.elems.iter().enumerate() {
            let k = g.class_key(m);
            let next = keys.len() as u32;
            let c = *keys.entry(k).or_insert(next);
            if c == next {
                g.class_rep.push(i as u32);
                g.class_size.push(0);
            }
            g.class_size[c as usize] += 1;
            class_of.push(c);
        }
        g.class_of = class_of;
        g.class_inv = g.class_rep.iter().map(|&r| g.class(&g.inv(&g.elems[r as usize]))).collect();
        Ok(g)
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn num_classes(&self) -> usize {
        self.class_rep.len()
    }

    /// Conjugacy-class invariant: the element itself for `n = 1`;
    /// `(trace, det, is scalar)` for `n = 2`.
    fn class_key(&self, m: &Mat) -> (u64, u64, bool) {
        if self.n == 1 {
            (m[0], 0, true)
        } else {
            let scalar = m[1] == 0 && m[2] == 0 && m[0] == m[3];
            ((m[0] + m[3]) % self.p, self.det(m), scalar)
        }
    }

    fn class(&self, m: &Mat) -> u32 {
        self.class_of[self.idx(m)]
    }

    fn idx(&self, m: &Mat) -> usize {
        self.index[code(m, self.p)] as usize
    }

    pub fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        let p = self.p;
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    }

    pub fn det(&self, m: &Mat) -> u64 {
        (m[0] * m[3] + self.p * self.p - m[1] * m[2]) % self.p
    }

    pub fn inv(&self, m: &Mat) -> Mat {
        let p = self.p;
        let di = inv_mod(self.det(m), p);
        [m[3] * di % p, (p - m[1]) % p * di % p, (p - m[2]) % p * di % p, m[0] * di % p]
    }

    /// `σ(g) = 𝒥 g^{−T} 𝒥^{−1}`: inversion for `n = 1`, `g / det g` for `n = 2`.
    pub fn sigma(&self, m: &Mat) -> Mat {
        if self.n == 1 {
            return self.inv(m);
        }
        let di = inv_mod(self.det(m), self.p);
        m.map(|v| v * di % self.p)
    }

    /// `(F * G)(z) = Σ_x F(x) G(x⁻¹ z)` for class functions.
    fn convolve(&self, f: &ClassFn, g: &ClassFn) -> Result<ClassFn> {
        self.class_rep
            .par_iter()
            .map(|&r| {
                let z = self.elems[r as usize];
                let mut acc: u128 = 0;
                for x in &self.elems {
                    let fx = f[self.class(x) as usize];
                    if fx == 0 {
                        continue;
                    }
                    let gx = g[self.class(&self.mul(&self.inv(x), &z)) as usize];
                    acc = fx.checked_mul(gx).and_then(|v| acc.checked_add(v)).ok_or_else(overflow)?;
                }
                Ok(acc)
            })
            .collect()
    }

    fn delta_one(&self) -> ClassFn {
        let one = self.class(&[1, 0, 0, 1]);
        (0..self.num_classes()).map(|c| u128::from(c as u32 == one)).collect()
    }

    /// `f₁(y) = #{(A, B) : [A, B] = y}`.
    fn commutator_fn(&self) -> ClassFn {
        let order = self.order();
        self.class_rep
            .par_iter()
            .map(|&r| {
                let y = self.elems[r as usize];
                let mut acc: u128 = 0;
                for a in &self.elems {
                    let ai = self.inv(a);
                    if self.class(&self.mul(&ai, &y)) == self.class(&ai) {
                        acc += u128::from(order / self.class_size[self.class(a) as usize]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `f_g(y) = #{(A_i, B_i)_{i≤g} : Π [A_i, B_i] = y}`.
    pub fn commutator_power(&self, g: usize) -> Result<Vec<u128>> {
        let f1 = self.commutator_fn();
        let mut f = self.delta_one();
        for _ in 0..g {
            f = self.convolve(&f, &f1)?;
        }
        Ok(f)
    }
}

fn code(m: &Mat, p: u64) -> usize {
    (m[0] + p * (m[1] + p * (m[2] + p * m[3]))) as usize
}

// ---------------------------------------------------------------- twisted classes

/// A set of elements `x` standing for the twisted elements `xσ`.
#[derive(Clone, Debug)]
pub struct TwistedClass {
    pub n: usize,
    pub p: u64,
    /// `diag(a₁, …, a_N, a_N⁻¹, …, a₁⁻¹)`; the identity for `n = 1`.
    pub rep: Mat,
    /// The `N`-tuple of eigenvalues of the representative.
    pub eigs: Vec<u64>,
    pub members: HashSet<Mat>,
}

fn semisimple_rep(n: usize, p: u64, eigs: &[u64]) -> Result<Mat> {
    match (n, eigs) {
        (1, []) => Ok([1, 0, 0, 1]),
        (2, [a]) if a % p != 0 => Ok([a % p, 0, 0, inv_mod(a % p, p)]),
        _ => Err(Error::Invalid(format!("n = {} needs {} eigenvalue(s), got {:?}", n, n / 2, eigs))),
    }
}

impl TwistedClass {
    /// The rational orbit `{g s σ(g)⁻¹}` of the representative `s`.
    pub fn orbit(n: usize, p: u64, eigs: &[u64]) -> Result<TwistedClass> {
        let gl = FiniteGl::get(n, p)?;
        let rep = semisimple_rep(n, p, eigs)?;
        let members = gl.elems.par_iter().map(|g| gl.mul(&gl.mul(g, &rep), &gl.inv(&gl.sigma(g)))).collect();
        Ok(TwistedClass { n, p, rep, eigs: eigs.to_vec(), members })
    }

    /// All rational points of the geometric class of `sσ`: the `y` with
    /// `y σ(y)` semisimple and conjugate to `s σ(s)`.
    pub fn geometric(n: usize, p: u64, eigs: &[u64]) -> Result<TwistedClass> {
        let gl = FiniteGl::get(n, p)?;
        let rep = semisimple_rep(n, p, eigs)?;
        let key = gl.class_key(&gl.mul(&rep, &gl.sigma(&rep)));
        let members = gl
            .elems
            .par_iter()
            .filter(|y| gl.class_key(&gl.mul(y, &gl.sigma(y))) == key)
            .copied()
            .collect();
        Ok(TwistedClass { n, p, rep, eigs: eigs.to_vec(), members })
    }

    /// Splits `self` into rational twisted orbits.
    pub fn split_orbits(&self) -> Result<Vec<TwistedClass>> {
        let gl = FiniteGl::get(self.n, self.p)?;
        let mut left: HashSet<Mat> = self.members.clone();
        let mut out = Vec::new();
        let mut all: Vec<Mat> = self.members.iter().copied().collect();
        all.sort();
        for s in all {
            if !left.contains(&s) {
                continue;
            }
            let members: HashSet<Mat> = gl.elems.iter().map(|g| gl.mul(&gl.mul(g, &s), &gl.inv(&gl.sigma(g)))).collect();
            for m in &members {
                left.remove(m);
            }
            out.push(TwistedClass { n: self.n, p: self.p, rep: s, eigs: self.eigs.clone(), members });
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// `D(z) = #{(x, y) ∈ C_a × C_b : x σ(y) = z}`, i.e. `(xσ)(yσ) = z`.
fn pair_distribution(gl: &FiniteGl, a: &TwistedClass, b: &TwistedClass) -> ClassFn {
    let mut in_b = vec![false; gl.elems.len()];
    for y in &b.members {
        in_b[gl.idx(y)] = true;
    }
    let xs: Vec<Mat> = a.members.iter().copied().collect();
    gl.class_rep
        .par_iter()
        .map(|&r| {
            let z = gl.elems[r as usize];
            xs.iter().filter(|x| in_b[gl.idx(&gl.sigma(&gl.mul(&gl.inv(x), &z)))]).count() as u128
        })
        .collect()
}

/// `|Rep| / |GL_n(F_p)|` for `Π[A_i, B_i] Π X_j = 1`, `X_j ∈ C_j σ`.
pub fn count_points(n: usize, g: usize, p: u64, classes: &[TwistedClass]) -> Result<BigInt> {
    let gl = FiniteGl::get(n, p)?;
    if classes.is_empty() || classes.len() % 2 == 1 {
        return Err(Error::Parity(format!("need a positive even number of classes, got {}", classes.len())));
    }
    if classes.iter().any(|c| c.n != n || c.p != p) {
        return Err(Error::Invalid("class defined over a different group".into()));
    }
    let eigs: Vec<Vec<u64>> = classes.iter().map(|c| c.eigs.clone()).collect();
    let gen = genericity_check(&eigs, p, false)?;
    if !gen.generic {
        return Err(Error::Invalid(format!("classes are not generic: {:?}", gen.witness)));
    }
    let rep = rep_count(&gl, g, classes)?;
    let order = u128::from(gl.order());
    if rep % order != 0 {
        return Err(Error::Inexact(format!("|Rep| = {} is not divisible by |GL_{}({})| = {}", rep, n, p, order)));
    }
    Ok(BigInt::from(rep / order))
}

/// `|Rep|` itself.
pub fn rep_count(gl: &FiniteGl, g: usize, classes: &[TwistedClass]) -> Result<u128> {
    let mut e = gl.delta_one();
    for pair in classes.chunks(2) {
        let d = pair_distribution(gl, &pair[0], &pair[1]);
        e = gl.convolve(&e, &d)?;
    }
    let f = gl.commutator_power(g)?;
    let mut total: u128 = 0;
    for c in 0..gl.num_classes() {
        let v = f[c]
            .checked_mul(e[gl.class_inv[c] as usize])
            .and_then(|v| v.checked_mul(u128::from(gl.class_size[c])))
            .ok_or_else(overflow)?;
        total = total.checked_add(v).ok_or_else(overflow)?;
    }
    Ok(total)
}

// ---------------------------------------------------------------- Frobenius formula

#[derive(Clone, Debug, PartialEq)]
pub struct CharRow {
    pub degree: u64,
    /// Values of one extension `χ̃` on the listed classes of `H ∖ N`.
    pub values: Vec<BigRational>,
}

/// Character data of a group `H` with a normal subgroup `N` of index 2.
#[derive(Clone, Debug, PartialEq)]
pub struct CharTable {
    pub nsub_order: u64,
    /// Sizes of the listed classes of `H ∖ N`.
    pub class_sizes: Vec<u64>,
    /// One row per `σ`-stable irreducible character of `N`.
    pub chars: Vec<CharRow>,
}

impl CharTable {
    /// Dihedral group of order `2m`, `m` odd, `N` the rotations. The only
    /// stable character of `N` is trivial; the reflections form one class.
    pub fn dihedral(m: u64) -> Result<CharTable> {
        if m.is_multiple_of(2) {
            return Err(Error::Invalid("dihedral table needs m odd".into()));
        }
        Ok(CharTable {
            nsub_order: m,
            class_sizes: vec![m],
            chars: vec![CharRow { degree: 1, values: vec![BigRational::one()] }],
        })
    }
}

/// `|N| Σ_χ (|N|/χ(1))^{2g−2} Π_j |C_j| χ̃(C_j)/χ(1)`.
pub fn frobenius_count(table: &CharTable, g: usize, classes: &[usize]) -> Result<BigInt> {
    if classes.len() % 2 == 1 {
        return Err(Error::Parity("need an even number of classes".into()));
    }
    if let Some(&c) = classes.iter().find(|&&c| c >= table.class_sizes.len()) {
        return Err(Error::Invalid(format!("unknown class id {}", c)));
    }
    let big = |v: u64| BigRational::from_integer(BigInt::from(v));
    let n = big(table.nsub_order);
    let mut total = BigRational::zero();
    for row in &table.chars {
        if row.values.len() != table.class_sizes.len() || row.degree == 0 {
            return Err(Error::Invalid("malformed character row".into()));
        }
        let d = big(row.degree);
        let mut term = num_traits::pow(&n / &d, 2 * g) / ((&n / &d) * (&n / &d));
        for &c in classes {
            term = term * big(table.class_sizes[c]) * &row.values[c] / &d;
        }
        total += term;
    }
    total *= n;
    if !total.is_integer() {
        return Err(Error::Inexact(format!("Frobenius count {} is not an integer", total)));
    }
    Ok(total.to_integer())
}

/// Direct count of `Π[A_i, B_i] Π X_j = 1` in the dihedral group of order
/// `2m` with `A_i, B_i` rotations and `X_j` reflections.
pub fn dihedral_direct_count(m: u64, g: usize, two_k: usize) -> BigInt {
    // element (i, e) = r^i s^e, with s r = r^{-1} s
    let mul = |(i, e): (u64, u8), (j, f): (u64, u8)| -> (u64, u8) {
        let j = if e == 1 { (m - j) % m } else { j };
        ((i + j) % m, e ^ f)
    };
    let inv = |(i, e): (u64, u8)| -> (u64, u8) { if e == 1 { (i, 1) } else { ((m - i) % m, 0) } };
    let slot = |(i, e): (u64, u8)| (i + m * u64::from(e)) as usize;
    let size = 2 * m as usize;
    let mut dist = vec![BigInt::zero(); size];
    dist[slot((0, 0))] = BigInt::one();
    let step = |dist: &Vec<BigInt>, gens: &[(u64, u8)], word: &dyn Fn(&[(u64, u8)]) -> (u64, u8), arity: usize| {
        let mut out = vec![BigInt::zero(); size];
        let mut tuple = vec![0usize; arity];
        loop {
            let w: Vec<(u64, u8)> = tuple.iter().map(|&t| gens[t]).collect();
            let h = word(&w);
            for (s, v) in dist.iter().enumerate() {
                if !v.is_zero() {
                    let x = ((s as u64) % m, (s as u64 / m) as u8);
                    out[slot(mul(x, h))] += v;
                }
            }
            let mut j = 0;
            while j < arity {
                tuple[j] += 1;
                if tuple[j] < gens.len() {
                    break;
                }
                tuple[j] = 0;
                j += 1;
            }
            if j == arity {
                break;
            }
        }
        out
    };
    let rotations: Vec<(u64, u8)> = (0..m).map(|i| (i, 0)).collect();
    let reflections: Vec<(u64, u8)> = (0..m).map(|i| (i, 1)).collect();
    let comm = |w: &[(u64, u8)]| mul(mul(w[0], w[1]), mul(inv(w[0]), inv(w[1])));
    for _ in 0..g {
        dist = step(&dist, &rotations, &comm, 2);
    }
    for _ in 0..two_k {
        dist = step(&dist, &reflections, &|w: &[(u64, u8)]| w[0], 1);
    }
    dist[slot((0, 0))].clone()
}

// ---------------------------------------------------------------- hyperoctahedral characters

/// Signed permutation: `i ↦ perm[i]` with sign `neg[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Signed {
    perm: Vec<usize>,
    neg: Vec<bool>,
}

impl Signed {
    fn compose(&self, o: &Signed) -> Signed {
        // (self ∘ o)(i) = self(o(i))
        let m = self.perm.len();
        let perm = (0..m).map(|i| self.perm[o.perm[i]]).collect();
        let neg = (0..m).map(|i| o.neg[i] ^ self.neg[o.perm[i]]).collect();
        Signed { perm, neg }
    }

    fn inverse(&self) -> Signed {
        let m = self.perm.len();
        let mut perm = vec![0; m];
        let mut neg = vec![false; m];
        for i in 0..m {
            perm[self.perm[i]] = i;
            neg[self.perm[i]] = self.neg[i];
        }
        Signed { perm, neg }
    }

    /// Cycles as `(length, product of signs is negative)`.
    fn cycles(&self) -> Vec<(usize, bool)> {
        let m = self.perm.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let (mut i, mut len, mut sgn) = (s, 0, false);
            while !seen[i] {
                seen[i] = true;
                sgn ^= self.neg[i];
                i = self.perm[i];
                len += 1;
            }
            out.push((len, sgn));
        }
        out
    }

    fn class(&self) -> BiPartition {
        let c = self.cycles();
        BiPartition::new(
            Partition::new(c.iter().filter(|x| !x.1).map(|x| x.0).collect()),
            Partition::new(c.iter().filter(|x| x.1).map(|x| x.0).collect()),
        )
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn hyperoctahedral(m: usize) -> Vec<Signed> {
    let mut out = Vec::new();
    for perm in permutations(m) {
        for mask in 0..(1usize << m) {
            out.push(Signed { perm: perm.clone(), neg: (0..m).map(|i| mask >> i & 1 == 1).collect() });
        }
    }
    out
}

/// Number of row assignments of the cycles with row sums `mu`, i.e. the
/// permutation character on tabloids of shape `mu`.
fn tabloid_fixed(cycle_lengths: &[usize], mu: &[i64]) -> i64 {
    fn rec(c: &[usize], left: &mut Vec<i64>) -> i64 {
        match c.split_first() {
            None => i64::from(left.iter().all(|&v| v == 0)),
            Some((&len, rest)) => {
                let mut total = 0;
                for r in 0..left.len() {
                    if left[r] >= len as i64 {
                        left[r] -= len as i64;
                        total += rec(rest, left);
                        left[r] += len as i64;
                    }
                }
                total
            }
        }
    }
    if mu.iter().any(|&v| v < 0) {
        return 0;
    }
    rec(cycle_lengths, &mut mu.to_vec())
}

/// `χ^λ(w)` of the symmetric group from the Jacobi–Trudi expansion in
/// tabloid permutation characters.
fn sym_char(l: &Partition, cycle_lengths: &[usize]) -> i64 {
    let len = l.len();
    let mut total = 0;
    for w in permutations(len) {
        let mu: Vec<i64> = (0..len).map(|i| l.part(i) as i64 - i as i64 + w[i] as i64).collect();
        total += perm_sign(&w) * tabloid_fixed(cycle_lengths, &mu);
    }
    total
}

/// `χ^{(α,β)}` on the class `(ρ⁺, ρ⁻)` of `(ℤ/2)^m ⋊ S_m`, computed as the
/// character induced from `B_{|α|} × B_{|β|}` of `χ^α ⊗ χ^β·ε`, where `ε`
/// is the product of signs, by summing over the whole group.
pub fn wreath_group_char(a: &BiPartition, class: &BiPartition) -> Result<i64> {
    let m = a.size();
    if class.size() != m {
        return Err(Error::SizeMismatch(m, class.size()));
    }
    if m > 4 {
        return Err(Error::Invalid(format!("brute-force characters limited to m ≤ 4, got {}", m)));
    }
    let na = a.first.size();
    let group = hyperoctahedral(m);
    let g0 = group
        .iter()
        .find(|x| x.class() == *class)
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("no element of class {}", class)))?;
    // character of the Young-type subgroup preserving {0..na} and {na..m}
    let phi = |x: &Signed| -> i64 {
        if (0..na).any(|i| x.perm[i] >= na) {
            return 0;
        }
        let mut c1 = Vec::new();
        let mut c2 = Vec::new();
        let mut eps = 1;
        let mut seen = vec![false; m];
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut i = s;
            let mut len = 0;
            while !seen[i] {
                seen[i] = true;
                i = x.perm[i];
                len += 1;
            }
            if s < na {
                c1.push(len);
            } else {
                c2.push(len);
            }
        }
        for i in na..m {
            if x.neg[i] {
                eps = -eps;
            }
        }
        sym_char(&a.first, &c1) * sym_char(&a.second, &c2) * eps
    };
    let mut sum = 0i64;
    for x in &group {
        sum += phi(&x.compose(&g0).compose(&x.inverse()));
    }
    let sub = (factorial_i64(na) << na) * (factorial_i64(m - na) << (m - na));
    if sum % sub != 0 {
        return Err(Error::Inexact(format!("induced character sum {} not divisible by {}", sum, sub)));
    }
    Ok(sum / sub)
}

fn factorial_i64(n: usize) -> i64 {
    (1..=n as i64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genericity_examples() {
        let r = genericity_check(&[vec![2], vec![1]], 7, true).unwrap();
        assert!(r.generic);
        let r = genericity_check(&[vec![2], vec![3]], 7, false).unwrap();
        assert!(!r.generic);
        assert_eq!(r.witness.unwrap().product, 1);
        assert!(genericity_check(&[vec![], vec![]], 7, true).unwrap().generic);
    }

    #[test]
    fn group_sizes() {
        let g = FiniteGl::get(2, 5).unwrap();
        assert_eq!(g.order(), 24 * 20);
        assert_eq!(g.num_classes(), 24);
        assert_eq!(FiniteGl::get(1, 5).unwrap().order(), 4);
    }

    #[test]
    fn sigma_class_orbit_size() {
        let c = TwistedClass::orbit(2, 7, &[1]).unwrap();
        assert_eq!(c.size(), 6);
        let geo = TwistedClass::geometric(2, 7, &[1]).unwrap();
        assert_eq!(geo.size(), 6);
    }

    #[test]
    fn dihedral_counts_agree() {
        for m in [3, 5] {
            let t = CharTable::dihedral(m).unwrap();
            for g in 0..2 {
                assert_eq!(frobenius_count(&t, g, &[0, 0]).unwrap(), dihedral_direct_count(m, g, 2));
            }
        }
    }

    #[test]
    fn wreath_characters_match_symfunc() {
        for m in 0..=3 {
            let labels = crate::partitions::bipartitions_of(m);
            for a in &labels {
                for c in &labels {
                    assert_eq!(wreath_group_char(a, c).unwrap(), crate::symfunc::wreath_char(a, c).unwrap(), "{} at {}", a, c);
                }
            }
        }
    }

    #[test]
    fn trivial_wreath_character() {
        let triv = BiPartition::from_parts(&[2], &[]);
        for c in crate::partitions::bipartitions_of(2) {
            assert_eq!(wreath_group_char(&triv, &c).unwrap(), 1);
        }
    }
}
