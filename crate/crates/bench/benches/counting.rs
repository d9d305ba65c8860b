use criterion::{black_box, criterion_group, criterion_main, Criterion};
use packcount::{
    canonical_key, chromatic_polynomial, classical_packing_count, constant_assignment,
    count_packings_direct, derangements, enumerate_patterns, generate_named, latin_array_count,
    ChromaticSolver, Family,
};

fn bench_chromatic(c: &mut Criterion) {
    let c10 = generate_named(Family::Cycle { n: 10 }).unwrap();
    c.bench_function("chromatic_polynomial/C10", |b| {
        b.iter(|| chromatic_polynomial(black_box(&c10)))
    });

    let g = generate_named(Family::RandomGraph { n: 10, seed: 3 }).unwrap();
    c.bench_function("chromatic_polynomial/random_n10", |b| {
        b.iter(|| chromatic_polynomial(black_box(&g)))
    });

    c.bench_function("chromatic_polynomial/random_n10_warm_memo", |b| {
        let solver = ChromaticSolver::new();
        solver.chromatic_polynomial(&g);
        b.iter(|| solver.chromatic_polynomial(black_box(&g)))
    });
}

fn bench_counting(c: &mut Criterion) {
    let c8 = generate_named(Family::Cycle { n: 8 }).unwrap();
    let l = constant_assignment(&c8, 3);
    c.bench_function("count_packings_direct/C8_q3_k2", |b| {
        b.iter(|| count_packings_direct(black_box(&c8), black_box(&l), 2).unwrap())
    });

    let p6 = generate_named(Family::Path { n: 6 }).unwrap();
    c.bench_function("classical_packing_count/P6_q3_k3", |b| {
        b.iter(|| classical_packing_count(black_box(&p6), 3, 3).unwrap())
    });

    c.bench_function("latin_array_count/4x3_q5", |b| {
        b.iter(|| latin_array_count(4, 3, 5).unwrap())
    });

    c.bench_function("derangements/500", |b| b.iter(|| derangements(black_box(500))));
}

fn bench_enumeration(c: &mut Criterion) {
    let p4 = generate_named(Family::Path { n: 4 }).unwrap();
    c.bench_function("enumerate_patterns/P4_q3", |b| {
        b.iter(|| {
            let iter = enumerate_patterns(black_box(&p4), 3, usize::MAX).unwrap();
            iter.count()
        })
    });

    let g = generate_named(Family::RandomGraph { n: 12, seed: 11 }).unwrap();
    c.bench_function("canonical_key/random_n12", |b| {
        b.iter(|| canonical_key(black_box(&g)))
    });
}

criterion_group!(benches, bench_chromatic, bench_counting, bench_enumeration);
criterion_main!(benches);
