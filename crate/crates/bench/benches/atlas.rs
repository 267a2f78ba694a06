use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sheet_atlas::liealg::{centralizer_dim, char_poly};
use sheet_atlas::partitions::Partition;
use sheet_atlas::sheets::enumerate_sheets_gln;
use sheet_atlas::spectral::{in_heart, mu_s};
use sheet_atlas::triples::{build_bcd_triple, sp4_slice_symbolic, SliceVariant};
use sheet_atlas_bench::{bcd_labels, spread_point};

fn classification(c: &mut Criterion) {
    for n in [10, 20, 30] {
        c.bench_with_input(BenchmarkId::new("enumerate_sheets_gln", n), &n, |b, &n| {
            b.iter(|| enumerate_sheets_gln(n).unwrap())
        });
    }
}

fn triples(c: &mut Criterion) {
    let labels = bcd_labels(8);
    c.bench_function("build_bcd_triple n<=8", |b| {
        b.iter(|| {
            for (kind, levi) in &labels {
                build_bcd_triple(*kind, levi).unwrap();
            }
        })
    });
    let (kind, levi) = bcd_labels(12).pop().unwrap();
    let triple = build_bcd_triple(kind, &levi).unwrap();
    c.bench_function("centralizer_dim largest n<=12", |b| {
        b.iter(|| centralizer_dim(&triple.e, &triple.model).unwrap())
    });
    let x = sp4_slice_symbolic(SliceVariant::Corrected);
    c.bench_function("char_poly symbolic sp4 slice", |b| b.iter(|| char_poly(&x)));
}

fn spectral(c: &mut Criterion) {
    for parts in [vec![3, 2, 2, 1, 1, 1], vec![1; 10]] {
        let m = Partition::new(parts).unwrap();
        let point = spread_point(&m);
        c.bench_with_input(BenchmarkId::new("mu_s", &m), &point, |b, p| b.iter(|| mu_s(p)));
        c.bench_with_input(BenchmarkId::new("in_heart", &m), &point, |b, p| {
            b.iter(|| in_heart(p))
        });
    }
}

criterion_group!(benches, classification, triples, spectral);
criterion_main!(benches);
