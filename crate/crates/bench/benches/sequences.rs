use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use moser_bench::{families, BASES, PREFIX_LENGTHS};
use moser_core::{bfile, collinearity, moser, moser_prefix};

fn digit_formula_vs_recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("moser_prefix");
    for &r in &BASES {
        for &len in &PREFIX_LENGTHS {
            let id = format!("r{r}/{len}");
            group.bench_with_input(BenchmarkId::new("recursion", &id), &len, |b, &len| {
                b.iter(|| moser_prefix(black_box(len), r).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("digits", &id), &len, |b, &len| {
                b.iter(|| {
                    (0..len as u64)
                        .map(|n| moser(black_box(n), r).unwrap())
                        .collect::<Vec<_>>()
                })
            });
        }
    }
    group.finish();
}

fn psi_sweep(c: &mut Criterion) {
    c.bench_function("psi_range/4001", |b| {
        b.iter(|| collinearity::psi_range(black_box(4001)).unwrap())
    });
    c.bench_function("psi/4001", |b| {
        b.iter(|| collinearity::psi(black_box(4001)).unwrap())
    });
}

fn bfile_export(c: &mut Criterion) {
    let mut group = c.benchmark_group("bfile_export");
    for family in families() {
        group.bench_function(family.to_string(), |b| {
            b.iter(|| bfile::render(&bfile::records(&family, 10_000).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, digit_formula_vs_recursion, psi_sweep, bfile_export);
criterion_main!(benches);
