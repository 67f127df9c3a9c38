use std::hint::black_box;

use cherednik_bench::{dense_poly, words};
use cherednik_core::charform::{Contraction, ModularParams, Pipeline};
use cherednik_core::cherednik::fp::Fp;
use cherednik_core::cherednik::{
    CherednikAlgebra, DunklOperator, GroebnerBasis, MonomialOrder, Poly, Strategy, VermaModule,
};
use cherednik_core::macdonald::{kostka_table, modified_macdonald, KostkaTable};
use cherednik_core::partitions::partitions_of;
use cherednik_core::Partition;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn macdonald(c: &mut Criterion) {
    let mut g = c.benchmark_group("modified_macdonald");
    for n in [3usize, 4, 5] {
        let mus = partitions_of(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &mus, |b, mus| {
            b.iter(|| mus.iter().map(|mu| modified_macdonald(mu).unwrap()).collect::<Vec<_>>())
        });
    }
    g.finish();

    let text = kostka_table(5).unwrap().to_cache_json();
    c.bench_function("kostka_cache_parse_n5", |b| {
        b.iter(|| KostkaTable::from_cache_json(black_box(&text)).unwrap())
    });
}

fn character(c: &mut Criterion) {
    let params = ModularParams::new(5, 1, 1, Some(1)).unwrap();
    let lam = Partition::new(vec![1, 1]).unwrap();
    c.bench_function("char_n2_p5", |b| {
        b.iter(|| {
            let pipe = Pipeline::new(&params, 2).unwrap();
            pipe.character(&lam, Contraction::Columns).unwrap()
        })
    });
}

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner_coinvariants");
    for (n, p) in [(2usize, 7u64), (3, 5)] {
        let field = Fp::new(p).unwrap();
        let gens: Vec<Poly> = (1..=n).map(|k| Poly::elementary_in_powers(n, field, k, p as u16)).collect();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            g.bench_with_input(BenchmarkId::new(order.name(), format!("n{n}_p{p}")), &gens, |b, gens| {
                b.iter(|| GroebnerBasis::new(gens, order).standard_monomials())
            });
        }
    }
    g.finish();
}

fn dunkl(c: &mut Criterion) {
    let f = dense_poly(3, 7, 8);
    let d = DunklOperator::new(3, f.field(), 2, 0);
    c.bench_function("dunkl_n3_p7_deg8", |b| b.iter(|| d.apply(black_box(&f))));
}

fn rewriting(c: &mut Criterion) {
    let alg = CherednikAlgebra::new(3, 5, 2).unwrap();
    let ws = words(&alg, 50, 8);
    let mut g = c.benchmark_group("pbw_normalize");
    for strategy in [Strategy::Leftmost, Strategy::Rightmost] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{strategy:?}")), &ws, |b, ws| {
            b.iter(|| ws.iter().map(|w| alg.normalize_with(w, strategy)).collect::<Vec<_>>())
        });
    }
    g.finish();
}

fn verma(c: &mut Criterion) {
    let triv = Partition::new(vec![2]).unwrap();
    let mut g = c.benchmark_group("verma_n2");
    g.sample_size(10);
    for p in [5u64, 7] {
        g.bench_with_input(BenchmarkId::new("simple_character", p), &p, |b, &p| {
            b.iter(|| VermaModule::build(2, p, 1, &triv).unwrap().simple_character())
        });
    }
    g.finish();
}

criterion_group!(benches, macdonald, character, groebner, dunkl, rewriting, verma);
criterion_main!(benches);
