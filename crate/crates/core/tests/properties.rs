use proptest::prelude::*;
use wreathmac::algebra::{mat2, RatFun};
use wreathmac::oracle::genericity_check;
use wreathmac::partitions::{bipartitions_of, brace_e, core2_quotient2, partitions_of, BiPartition, Partition};
use wreathmac::symfunc::{wreath_char, Basis1, Basis2, SymFunc1, SymFunc2};
use num_rational::BigRational;
use wreathmac::LaurentPoly;

fn r(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn poly() -> impl Strategy<Value = RatFun> {
    prop::collection::vec((0i64..4, 0i64..4, -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().fold(RatFun::zero(), |acc, (a, b, c)| &acc + &RatFun::monomial(a, b, c))
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| n.checked_div(&d).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max, 0..=max).prop_map(move |mut v| {
        let mut total = 0;
        v.retain(|&p| {
            total += p;
            total <= max
        });
        Partition::new(v)
    })
}

fn bipartition(max: usize) -> impl Strategy<Value = BiPartition> {
    (partition(max / 2), partition(max / 2)).prop_map(|(a, b)| BiPartition::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn text_and_json_round_trip(a in ratfun()) {
        prop_assert_eq!(RatFun::parse(&a.to_text(["q", "t"]), ["q", "t"]).unwrap(), a.clone());
        let j = a.to_json();
        prop_assert_eq!(RatFun::from_json(&j).unwrap().to_json(), j);
    }

    #[test]
    fn laurent_text_round_trip(terms in prop::collection::vec((-4i64..4, -4i64..4, -9i64..=9), 0..6)) {
        let mut l = LaurentPoly::zero();
        for (a, b, c) in terms {
            l.add_term((a, b), r(c));
        }
        prop_assert_eq!(LaurentPoly::parse(&l.to_text(["z", "w"]), ["z", "w"]).unwrap(), l);
    }

    #[test]
    fn adams_and_swap_are_ring_maps(a in ratfun(), b in ratfun()) {
        prop_assert_eq!((&a * &b).adams(2), &a.adams(2) * &b.adams(2));
        prop_assert_eq!((&a + &b).swap_vars(), &a.swap_vars() + &b.swap_vars());
        prop_assert_eq!(a.swap_vars().swap_vars(), a);
    }

    #[test]
    fn compose_matches_eval(a in poly(), x in 1i64..4, y in 1i64..4) {
        let v = a.compose(&RatFun::from_int(x), &RatFun::from_int(y)).unwrap();
        let e = a.eval(&r(x), &r(y)).unwrap();
        prop_assert_eq!(v, RatFun::from_rational(&e));
    }

    #[test]
    fn basis_round_trips_one_alphabet(l in partition(5), c in ratfun()) {
        let f = SymFunc1::elem(Basis1::Schur, l).scale(&c);
        for b in [Basis1::Power, Basis1::Complete, Basis1::Monomial] {
            prop_assert_eq!(f.convert(b).convert(Basis1::Schur), f.clone());
        }
    }

    #[test]
    fn basis_round_trips_two_alphabets(k in bipartition(4), c in ratfun()) {
        let f = SymFunc2::elem(Basis2::Schur2, k).scale(&c);
        for b in [Basis2::Power2, Basis2::WreathPower] {
            prop_assert_eq!(f.convert(b).convert(Basis2::Schur2), f.clone());
        }
    }

    #[test]
    fn schur_times_schur_is_littlewood_richardson(a in partition(3), b in partition(3)) {
        let prod = SymFunc1::elem(Basis1::Schur, a.clone()).mul(&SymFunc1::elem(Basis1::Schur, b.clone()));
        // integer, nonnegative structure constants
        for c in prod.terms().values() {
            let v = c.constant_value().expect("constant");
            prop_assert!(v.is_integer() && v >= r(0));
        }
        // and commutative
        prop_assert_eq!(prod, SymFunc1::elem(Basis1::Schur, b).mul(&SymFunc1::elem(Basis1::Schur, a)));
    }

    #[test]
    fn alphabet_substitution_is_multiplicative(
        a in bipartition(2), b in bipartition(2),
        m in prop::array::uniform4(-2i64..=2),
    ) {
        let m = mat2(RatFun::from_int(m[0]), RatFun::from_int(m[1]), RatFun::from_int(m[2]), RatFun::from_int(m[3]));
        let f = SymFunc2::elem(Basis2::Schur2, a);
        let g = SymFunc2::elem(Basis2::Schur2, b);
        let lhs = f.mul(&g).alphabet_substitute(&m);
        let rhs = f.alphabet_substitute(&m).mul(&g.alphabet_substitute(&m));
        prop_assert_eq!(lhs.convert(Basis2::Schur2), rhs.convert(Basis2::Schur2));
    }

    #[test]
    fn hook_sum(l in partition(12)) {
        let s: usize = l.hooks().iter().map(|h| h.2).sum();
        prop_assert_eq!(s, l.size() + l.n() + l.dual().n());
    }

    #[test]
    fn quotient_core_round_trip(l in partition(30)) {
        let (d, q) = core2_quotient2(&l);
        prop_assert_eq!(2 * q.size() + d * (d + 1) / 2, l.size());
        if d <= 1 {
            prop_assert_eq!(brace_e(&q, d), l);
        }
    }

    #[test]
    fn brace_is_injective_and_keeps_core(a in bipartition(10), e in 0usize..2) {
        let l = brace_e(&a, e);
        prop_assert_eq!(l.size(), 2 * a.size() + e);
        prop_assert_eq!(core2_quotient2(&l), (e, a));
    }

    #[test]
    fn genericity_is_symmetric(
        eigs in prop::collection::vec(prop::collection::vec(1u64..13, 2), 2..=4),
        strong in any::<bool>(),
    ) {
        let r = genericity_check(&eigs, 13, strong).unwrap();
        let mut rev = eigs.clone();
        rev.reverse();
        prop_assert_eq!(genericity_check(&rev, 13, strong).unwrap().generic, r.generic);
        if strong && r.generic {
            prop_assert!(genericity_check(&eigs, 13, false).unwrap().generic);
        }
        if let Some(w) = r.witness {
            prop_assert!(w.product == 1 || (strong && w.product == 12));
        }
    }
}

#[test]
fn wreath_character_orthogonality() {
    for m in 0..=4 {
        let labels = bipartitions_of(m);
        for a in &labels {
            for b in &labels {
                let mut s = r(0);
                for c in &labels {
                    let v = wreath_char(a, c).unwrap() * wreath_char(b, c).unwrap();
                    s += BigRational::new(v.into(), c.z().into());
                }
                let want = i64::from(a == b);
                assert_eq!(s, r(want), "{} {}", a, b);
            }
        }
    }
}

#[test]
fn character_degrees_square_sum() {
    for m in 0..=5 {
        let labels = bipartitions_of(m);
        let e = BiPartition::new(Partition::new(vec![1; m]), Partition::empty());
        let s: i64 = labels.iter().map(|a| wreath_char(a, &e).unwrap().pow(2)).sum();
        let order: i64 = (1..=m as i64).product::<i64>() << m;
        assert_eq!(s, order);
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let bi: Vec<usize> = (0..=5).map(|n| bipartitions_of(n).len()).collect();
    assert_eq!(bi, [1, 2, 5, 10, 20, 36]);
}
