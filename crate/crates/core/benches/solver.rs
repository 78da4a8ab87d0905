//! Parallel (rayon) against sequential: exact search and certificate checking.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sdepth_core::papercheck::{run_suite, SuiteConfig};
use sdepth_core::verify::verify_with;
use sdepth_core::{parse_module, sdepth_exact, Parallelism, SolverConfig};

const MODULES: &[(&str, &str)] = &[
    ("triangle", "(x1,x2,x3) / (x1*x2*x3)"),
    ("vars5", "(x1,x2,x3,x4,x5) / (x1*x2*x3*x4*x5)"),
    ("mixed4", "(x1^2,x2*x3,x4^3) / (x1^3*x2*x3, x2*x3*x4^3)"),
    ("ci5", "(x1*x2,x3^2,x4,x5^2) / (x1^2*x2^2,x3^3*x4)"),
];

const MODES: [(&str, Parallelism); 2] = [("parallel", Parallelism::Auto), ("sequential", Parallelism::Sequential)];

fn exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("sdepth_exact");
    for (name, text) in MODULES {
        let m = parse_module(text, None).unwrap();
        for (mode, par) in MODES {
            let cfg = SolverConfig {
                parallelism: par,
                compress: false,
                ..SolverConfig::default()
            };
            g.bench_with_input(BenchmarkId::new(mode, name), &m, |b, m| {
                b.iter(|| sdepth_exact(black_box(m), &cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    for (name, text) in MODULES {
        let m = parse_module(text, None).unwrap();
        let cfg = SolverConfig {
            compress: false,
            ..SolverConfig::sequential()
        };
        let d = sdepth_exact(&m, &cfg).unwrap().certificate.unwrap();
        for (mode, par) in MODES {
            g.bench_with_input(BenchmarkId::new(mode, name), &d, |b, d| {
                b.iter(|| verify_with(black_box(d), par).unwrap())
            });
        }
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("paper_check");
    g.sample_size(10);
    for (mode, par) in MODES {
        let cfg = SuiteConfig {
            parallelism: par,
            ..SuiteConfig::default()
        };
        g.bench_function(mode, |b| b.iter(|| run_suite(black_box(&cfg))));
    }
    g.finish();
}

criterion_group!(benches, exact, verify, suite);
criterion_main!(benches);
