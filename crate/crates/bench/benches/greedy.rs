use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use graygreed_core::{
    brute_force_gen_set, greedy_run, predict_last_word, BinaryWord, LanguageSpec, MoveOrder,
    Rational,
};

fn languages() -> Vec<LanguageSpec> {
    vec![
        LanguageSpec::fibonacci(16, 5).unwrap(),
        LanguageSpec::prefix_constrained(16, Rational::integer(1), 6).unwrap(),
        LanguageSpec::prefix_constrained(18, Rational::integer(2), 5).unwrap(),
        LanguageSpec::prefix_constrained(16, Rational::new(3, 2).unwrap(), 5).unwrap(),
    ]
}

fn bench_greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_run");
    for spec in languages() {
        let start = spec.enumerate().into_iter().next_back().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(spec), &start, |b, start| {
            b.iter(|| greedy_run(black_box(start), &spec, MoveOrder::OneFirst).unwrap())
        });
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for spec in languages() {
        group.bench_function(BenchmarkId::from_parameter(spec), |b| {
            b.iter(|| black_box(&spec).enumerate())
        });
    }
    group.finish();
}

fn bench_gen_set(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_gen_set");
    group.sample_size(10);
    for spec in [
        LanguageSpec::fibonacci(12, 4).unwrap(),
        LanguageSpec::prefix_constrained(12, Rational::integer(1), 5).unwrap(),
    ] {
        group.bench_function(BenchmarkId::from_parameter(spec), |b| {
            b.iter(|| brute_force_gen_set(black_box(&spec), MoveOrder::OneFirst))
        });
    }
    group.finish();
}

fn bench_predict(c: &mut Criterion) {
    let spec = LanguageSpec::prefix_constrained(40, Rational::integer(2), 12).unwrap();
    let start: BinaryWord = "001001001001001001001001001001001001"
        .parse::<BinaryWord>()
        .unwrap();
    let start = start.concat(&BinaryWord::zeros(4));
    c.bench_function("predict_last_word", |b| {
        b.iter(|| predict_last_word(black_box(&spec), black_box(&start)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_greedy,
    bench_enumerate,
    bench_gen_set,
    bench_predict
);
criterion_main!(benches);
