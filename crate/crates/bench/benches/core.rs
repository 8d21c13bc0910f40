use criterion::{black_box, criterion_group, criterion_main, Criterion};
use wreathmac::hodge::hb_rational;
use wreathmac::macdonald::n_pairing;
use wreathmac::oracle::{count_points, TwistedClass};
use wreathmac::partitions::{bipartitions_of, partitions_of};
use wreathmac::symfunc::{Basis2, SymFunc2};
use wreathmac::wreath_macdonald::{qt_inner2, wreath_family};
use wreathmac::RatFun;
use wreathmac_bench::reference_specs;

fn ratfun(c: &mut Criterion) {
    let (x, y) = (RatFun::x(), RatFun::y());
    let a = (&(&x - &y).pow(6) + &x.pow(3)).checked_div(&(&RatFun::one() - &(&x * &y)).pow(3)).unwrap();
    let b = (&x + &y).pow(5).checked_div(&(&RatFun::one() - &x).pow(2)).unwrap();
    c.bench_function("ratfun/add-mul", |bch| bch.iter(|| black_box(&(&a + &b) * &a)));
    let l = partitions_of(6);
    c.bench_function("ratfun/n_pairing-size6", |bch| bch.iter(|| l.iter().map(n_pairing).count()));
}

fn symfunc(c: &mut Criterion) {
    let keys = bipartitions_of(4);
    c.bench_function("symfunc/schur2-to-power2-size4", |bch| {
        bch.iter(|| {
            for k in &keys {
                black_box(SymFunc2::elem(Basis2::Schur2, k.clone()).convert(Basis2::Power2));
            }
        })
    });
}

fn wreath(c: &mut Criterion) {
    // families are memoized; time the (uncached) self-pairings instead
    let fam = wreath_family(3, 1).unwrap();
    c.bench_function("wreath/qt-pairing-size3-core1", |bch| {
        bch.iter(|| fam.values().map(|h| qt_inner2(&h.expansion, &h.expansion)).count())
    });
}

fn hodge(c: &mut Criterion) {
    let mut g = c.benchmark_group("hodge");
    g.sample_size(10);
    for (name, spec) in reference_specs() {
        g.bench_function(format!("hb/{}", name), |bch| bch.iter(|| black_box(hb_rational(&spec).unwrap())));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let cls = [TwistedClass::geometric(2, 7, &[2]).unwrap(), TwistedClass::geometric(2, 7, &[1]).unwrap()];
    g.bench_function("count/q7-g1", |bch| bch.iter(|| black_box(count_points(2, 1, 7, &cls).unwrap())));
    g.finish();
}

criterion_group!(benches, ratfun, symfunc, wreath, hodge, oracle);
criterion_main!(benches);
