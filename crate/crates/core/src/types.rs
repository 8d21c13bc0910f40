//! Types `ω = ω₊ ω₋ (ωᵢ)` and simple types `m₊ m₋ (mᵢ)`.

use crate::error::{Error, Result};
use crate::partitions::{brace_e, factorial, BiPartition, Partition};
use crate::symfunc::{Basis1, SymFunc1, SymFunc2};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeData {
    pub plus: BiPartition,
    pub minus: BiPartition,
    /// Sorted; never contains the empty partition.
    pub star: Vec<Partition>,
}

impl TypeData {
    pub fn new(plus: BiPartition, minus: BiPartition, mut star: Vec<Partition>) -> Result<Self> {
        if star.iter().any(|p| p.is_empty()) {
            return Err(Error::Invalid("star part of a type contains an empty partition".into()));
        }
        star.sort();
        Ok(TypeData { plus, minus, star })
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size() + self.star.iter().map(|p| p.size()).sum::<usize>()
    }
}

impl fmt::Display for TypeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star: Vec<String> = self.star.iter().map(|p| p.to_string()).collect();
        write!(f, "{}{}({})", self.plus, self.minus, star.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleType {
    pub m_plus: usize,
    pub m_minus: usize,
    /// Sorted decreasingly, all entries positive.
    pub m_star: Vec<usize>,
}

impl SimpleType {
    pub fn new(m_plus: usize, m_minus: usize, mut m_star: Vec<usize>) -> Result<Self> {
        if m_star.contains(&0) {
            return Err(Error::Invalid("simple type multiplicities must be positive".into()));
        }
        m_star.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SimpleType { m_plus, m_minus, m_star })
    }

    pub fn size(&self) -> usize {
        self.m_plus + self.m_minus + self.m_star.iter().sum::<usize>()
    }

    /// Parses `"m+,m-:m1 m2 ..."`, e.g. `"2,0:"` or `"0,0:1 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad class '{}': {}", s, why));
        let (head, tail) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let (a, b) = head.split_once(',').ok_or_else(|| bad("expected 'm+,m-'"))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad("not a nonnegative integer"));
        let mut star = Vec::new();
        for t in tail.split_whitespace() {
            let v = num(t)?;
            if v == 0 {
                return Err(bad("multiplicities after ':' must be positive"));
            }
            star.push(v);
        }
        SimpleType::new(num(a)?, num(b)?, star)
    }

    /// The type `(∅,(1^{m₊}))(∅,(1^{m₋}))((1^{mᵢ}))ᵢ`.
    pub fn to_type(&self) -> TypeData {
        TypeData {
            plus: BiPartition::new(Partition::empty(), Partition::new(vec![1; self.m_plus])),
            minus: BiPartition::new(Partition::empty(), Partition::new(vec![1; self.m_minus])),
            star: {
                let mut v: Vec<Partition> = self.m_star.iter().map(|&m| Partition::new(vec![1; m])).collect();
                v.sort();
                v
            },
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star: Vec<String> = self.m_star.iter().map(|m| m.to_string()).collect();
        write!(f, "{},{}:{}", self.m_plus, self.m_minus, star.join(" "))
    }
}

fn row(m: usize) -> Partition {
    Partition::new(if m == 0 { vec![] } else { vec![m] })
}

/// `β* = ((m₊),∅)((m₋),∅)((mᵢ))ᵢ`.
pub fn simple_dual(b: &SimpleType) -> TypeData {
    let mut star: Vec<Partition> = b.m_star.iter().map(|&m| row(m)).collect();
    star.sort();
    TypeData {
        plus: BiPartition::new(row(b.m_plus), Partition::empty()),
        minus: BiPartition::new(row(b.m_minus), Partition::empty()),
        star,
    }
}

fn of_type(w: &TypeData, basis: Basis1) -> SymFunc2 {
    let pair = |a: &BiPartition| {
        SymFunc2::from_pair(&SymFunc1::elem(basis, a.first.clone()), &SymFunc1::elem(basis, a.second.clone()))
    };
    let mut f = pair(&w.plus).mul_power(&pair(&w.minus));
    for p in &w.star {
        f = f.mul_power(&SymFunc1::elem(basis, p.clone()).embed_diagonal());
    }
    f.convert(crate::symfunc::Basis2::Schur2)
}

/// `h_ω = h_{ω₊}(𝐱) h_{ω₋}(𝐱) Π h_{ωᵢ}[𝐱⁽⁰⁾+𝐱⁽¹⁾]`, in the Schur basis.
pub fn h_of_type(w: &TypeData) -> SymFunc2 {
    of_type(w, Basis1::Complete)
}

pub fn s_of_type(w: &TypeData) -> SymFunc2 {
    of_type(w, Basis1::Schur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeStats {
    /// `N(ω★) = Π m_λ!`
    pub n: u128,
    /// `K(ω★) = (−1)^l l!`
    pub k: i128,
    pub z: u128,
}

pub fn star_multiplicities(star: &[Partition]) -> BTreeMap<Partition, usize> {
    let mut m = BTreeMap::new();
    for p in star {
        *m.entry(p.clone()).or_insert(0) += 1;
    }
    m
}

pub fn type_statistics(w: &TypeData) -> TypeStats {
    let n = star_multiplicities(&w.star).values().map(|&m| factorial(m)).product();
    let l = w.star.len();
    let k = if l.is_multiple_of(2) { 1 } else { -1 } * factorial(l) as i128;
    let z = w.plus.z() * w.minus.z() * w.star.iter().map(|p| p.z()).product::<u128>();
    TypeStats { n, k, z }
}

/// Element `λ₊ λ₋ (λᵢ)` of the unordered partition-sequence set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionTriple {
    pub plus: Partition,
    pub minus: Partition,
    pub star: Vec<Partition>,
}

impl PartitionTriple {
    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size() + self.star.iter().map(|p| p.size()).sum::<usize>()
    }
}

/// `{εω}`: quotients `ω±`, core `(1)` on the slot selected by `ε`, star doubled.
pub fn type_brace(eps: i8, w: &TypeData) -> Result<PartitionTriple> {
    if !(-1..=1).contains(&eps) {
        return Err(Error::Invalid(format!("epsilon must be -1, 0 or 1, got {}", eps)));
    }
    let plus = brace_e(&w.plus, usize::from(eps == 1));
    let minus = brace_e(&w.minus, usize::from(eps == -1));
    let mut star = Vec::with_capacity(2 * w.star.len());
    for p in &w.star {
        star.push(p.clone());
        star.push(p.clone());
    }
    star.sort();
    Ok(PartitionTriple { plus, minus, star })
}

/// `[ω]`: union of signed parts; parts of `ωᵢ` are positive.
pub fn type_bracket(w: &TypeData) -> BiPartition {
    let mut pos: Vec<usize> = Vec::new();
    let mut neg: Vec<usize> = Vec::new();
    for b in [&w.plus, &w.minus] {
        pos.extend_from_slice(b.first.parts());
        neg.extend_from_slice(b.second.parts());
    }
    for p in &w.star {
        pos.extend_from_slice(p.parts());
    }
    BiPartition::new(Partition::new(pos), Partition::new(neg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_classes() {
        let b = SimpleType::parse("0,0:1 1").unwrap();
        assert_eq!(b, SimpleType::new(0, 0, vec![1, 1]).unwrap());
        assert_eq!(SimpleType::parse("2,0:").unwrap().size(), 2);
        assert!(SimpleType::parse("2:0").is_err());
        assert!(SimpleType::parse("1,0:0").is_err());
    }

    #[test]
    fn statistics() {
        let one = Partition::new(vec![1]);
        let two = Partition::new(vec![2]);
        let w = TypeData::new(BiPartition::empty(), BiPartition::empty(), vec![one.clone(), one.clone()]).unwrap();
        let s = type_statistics(&w);
        assert_eq!((s.n, s.k), (2, 2));
        let w = TypeData::new(BiPartition::empty(), BiPartition::empty(), vec![one, two]).unwrap();
        let s = type_statistics(&w);
        assert_eq!((s.n, s.k), (1, 2));
        let s = type_statistics(&TypeData::default());
        assert_eq!((s.n, s.k), (1, 1));
    }

    #[test]
    fn h_of_simple_duals() {
        let h = h_of_type(&simple_dual(&SimpleType::parse("1,0:").unwrap()));
        assert_eq!(h, SymFunc2::schur(&[1], &[]));
        let h = h_of_type(&simple_dual(&SimpleType::parse("0,0:1").unwrap()));
        assert_eq!(h, SymFunc2::schur(&[1], &[]).add(&SymFunc2::schur(&[], &[1])));
        assert_eq!(s_of_type(&TypeData::default()), SymFunc2::one());
    }

    #[test]
    fn brace_and_bracket() {
        let w = simple_dual(&SimpleType::parse("1,0:").unwrap());
        let b = type_brace(1, &w).unwrap();
        assert_eq!(b.plus, Partition::new(vec![3]));
        assert!(b.minus.is_empty() && b.star.is_empty());
        let w = TypeData::new(BiPartition::from_parts(&[], &[1]), BiPartition::empty(), vec![Partition::new(vec![2])])
            .unwrap();
        assert_eq!(type_bracket(&w), BiPartition::from_parts(&[2], &[1]));
    }
}
