use num_bigint::BigInt;
use wreathmac::macdonald::macdonald_h;
use wreathmac::oracle::{count_points, dihedral_direct_count, frobenius_count, CharTable, FiniteGl, TwistedClass};
use wreathmac::partitions::{bipartitions_of, partitions_of, BiPartition};
use wreathmac::series::{omega_star_inverse, omega_star_terms, SeriesTerm};
use wreathmac::symfunc::{Basis1, Basis2, SymFunc1, SymFunc2};
use wreathmac::wreath_macdonald::wreath_h;
use wreathmac::RatFun;

fn truncated_product(a: &[SeriesTerm], b: &[SeriesTerm], maxdeg: usize) -> SymFunc2 {
    let mut acc = SymFunc2::zero(Basis2::Power2);
    for x in a {
        for y in b {
            if x.degree + y.degree <= maxdeg {
                let f = x.factor.mul_power(&y.factor).scale(&(&x.coeff * &y.coeff));
                acc = acc.add(&f);
            }
        }
    }
    acc
}

#[test]
fn omega_star_times_inverse_is_one() {
    for (g, k) in [(0, 2), (1, 1), (0, 3)] {
        let maxdeg = 3;
        let star = omega_star_terms(g, k, maxdeg).unwrap();
        let inv = omega_star_inverse(g, k, maxdeg).unwrap();
        let p = truncated_product(&star, &inv, maxdeg);
        assert_eq!(p.convert(Basis2::Schur2), SymFunc2::one().convert(Basis2::Schur2), "g={} k={}", g, k);
    }
}

#[test]
fn macdonald_low_degree() {
    let q = RatFun::x();
    let t = RatFun::y();
    let h2 = macdonald_h(&wreathmac::Partition::new(vec![2])).unwrap().expansion;
    let h11 = macdonald_h(&wreathmac::Partition::new(vec![1, 1])).unwrap().expansion;
    let s = |l: &[usize]| SymFunc1::schur(l);
    assert_eq!(h2.convert(Basis1::Schur), s(&[2]).add(&s(&[1, 1]).scale(&q)));
    assert_eq!(h11.convert(Basis1::Schur), s(&[2]).add(&s(&[1, 1]).scale(&t)));
}

#[test]
fn macdonald_q_t_duality() {
    for n in 1..=4 {
        for l in partitions_of(n) {
            let a = macdonald_h(&l).unwrap().expansion.map_coeffs(|c| c.swap_vars());
            let b = macdonald_h(&l.dual()).unwrap().expansion;
            assert_eq!(a.convert(Basis1::Schur), b.convert(Basis1::Schur), "{}", l);
        }
    }
}

#[test]
fn macdonald_at_q_t_one_is_h1_power() {
    for n in 1..=4 {
        let want = SymFunc1::complete(&vec![1; n]).convert(Basis1::Schur);
        for l in partitions_of(n) {
            let h = macdonald_h(&l).unwrap().expansion.map_coeffs(|c| c.compose(&RatFun::one(), &RatFun::one()).unwrap());
            assert_eq!(h.convert(Basis1::Schur), want, "{}", l);
        }
    }
}

#[test]
fn wreath_h_positive_and_normalized() {
    for size in 1..=3 {
        for core in 0..=1u8 {
            for a in bipartitions_of(size) {
                let h = wreath_h(&a, core).unwrap();
                assert!(h.is_schur_positive(), "{} core {}", a, core);
                let top = BiPartition::from_parts(&[size], &[]);
                assert!(h.expansion.coeff(&top).is_one(), "{} core {}", a, core);
            }
        }
    }
}

#[test]
fn group_orders_and_sigma() {
    for p in [3u64, 5, 7] {
        let gl = FiniteGl::get(2, p).unwrap();
        assert_eq!(gl.order(), (p * p - 1) * (p * p - p));
        assert_eq!(gl.num_classes() as u64, p * p - 1);
        for x in gl.elems.iter().step_by(7) {
            assert_eq!(gl.sigma(&gl.sigma(x)), *x);
            for y in gl.elems.iter().step_by(11) {
                assert_eq!(gl.sigma(&gl.mul(x, y)), gl.mul(&gl.sigma(x), &gl.sigma(y)));
            }
        }
        let gl1 = FiniteGl::get(1, p).unwrap();
        assert_eq!(gl1.order(), p - 1);
    }
}

#[test]
fn orbits_partition_geometric_class() {
    for p in [7u64, 13] {
        for a in 2..p - 1 {
            let Ok(c) = TwistedClass::geometric(2, p, &[a]) else { continue };
            let orbits = c.split_orbits().unwrap();
            assert_eq!(orbits.iter().map(|o| o.size()).sum::<usize>(), c.size());
            let mut seen = std::collections::HashSet::new();
            for o in &orbits {
                for m in &o.members {
                    assert!(seen.insert(*m));
                }
            }
        }
    }
}

#[test]
fn rank_one_counts() {
    for q in [3u64, 5, 7, 11] {
        for g in 0..=2usize {
            for k in 1..=2usize {
                let cls: Vec<TwistedClass> = (0..2 * k).map(|_| TwistedClass::geometric(1, q, &[]).unwrap()).collect();
                let want = BigInt::from(q - 1).pow(2 * (g + k - 1) as u32);
                assert_eq!(count_points(1, g, q, &cls).unwrap(), want, "q={} g={} k={}", q, g, k);
            }
        }
    }
}

#[test]
fn frobenius_matches_direct_count() {
    for m in [3u64, 5] {
        let t = CharTable::dihedral(m).unwrap();
        for g in 0..=2usize {
            assert_eq!(frobenius_count(&t, g, &[0, 0]).unwrap(), dihedral_direct_count(m, g, 2));
            assert_eq!(frobenius_count(&t, g, &[0, 0, 0, 0]).unwrap(), dihedral_direct_count(m, g, 4));
        }
    }
}

#[test]
fn frobenius_is_symmetric_in_classes() {
    let t = CharTable::dihedral(5).unwrap();
    let n = t.class_sizes.len();
    for i in 0..n {
        for j in 0..n {
            let a = frobenius_count(&t, 1, &[i, j, 0]);
            let b = frobenius_count(&t, 1, &[0, j, i]);
            assert_eq!(a.ok(), b.ok());
        }
    }
}
