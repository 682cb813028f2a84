use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hlzeta::models::{ez_data, mt2_data};
use hlzeta::numeric::{hl_zeta_direct, hl_zeta_mb, EvalConfig};
use hlzeta::padic::{padic_l_sum, PadicLRequest};
use hlzeta::par::Execution;
use num_complex::Complex64;

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn direct_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("direct");
    g.sample_size(20);
    let data = mt2_data();
    let s = [Complex64::new(2.5, 1.0), Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)];
    for (name, exec) in MODES {
        let cfg = EvalConfig { exec, ..EvalConfig::default() };
        g.bench_with_input(BenchmarkId::new("mordell-tornheim", name), &cfg, |b, cfg| {
            b.iter(|| black_box(hl_zeta_direct(&data, &s, cfg).unwrap()))
        });
    }
    g.finish();
}

fn contour(c: &mut Criterion) {
    let mut g = c.benchmark_group("mellin-barnes");
    g.sample_size(20);
    let data = ez_data(2);
    let s = [Complex64::new(-1.5, 2.0), Complex64::new(0.3, 1.0)];
    for (name, exec) in MODES {
        let cfg = EvalConfig { exec, ..EvalConfig::default() };
        g.bench_with_input(BenchmarkId::new("ez2", name), &cfg, |b, cfg| {
            b.iter(|| black_box(hl_zeta_mb(&data, &s, cfg).unwrap()))
        });
    }
    g.finish();
}

// Twisted Bernoulli numbers are memoized, so after warm-up this measures the
// enumeration and summation over the cp-th roots of unity.
fn padic(c: &mut Criterion) {
    let mut g = c.benchmark_group("padic");
    let req = PadicLRequest { n: vec![2, 1], c: 3, p: 5 };
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("depth2", name), &exec, |b, &exec| {
            b.iter(|| black_box(padic_l_sum(&req, exec).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, direct_sums, contour, padic);
criterion_main!(benches);
