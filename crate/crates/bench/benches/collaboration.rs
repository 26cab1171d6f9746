use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use normdyn_core::collaboration::{failure_report, norm_comparison_grid, preference_grid, Axis, GridSpec};
use normdyn_core::priors::derive_contribution_stats;
use normdyn_core::{BetaPrior, Norm, WjMode};

fn reports(c: &mut Criterion) {
    let stats = derive_contribution_stats(&BetaPrior::new(2.0, 5.0).unwrap(), WjMode::Exact).unwrap();
    c.bench_function("derive_contribution_stats", |b| {
        b.iter(|| derive_contribution_stats(&BetaPrior::new(black_box(2.0), 5.0).unwrap(), WjMode::Exact))
    });
    for norm in Norm::BOTH {
        c.bench_function(&format!("failure_report_{norm}"), |b| {
            b.iter(|| failure_report(norm, &stats, black_box(0.3)).unwrap())
        });
    }
}

fn grids(c: &mut Criterion) {
    let spec = GridSpec {
        mu: Axis {
            min: 0.05,
            max: 0.95,
            steps: 10,
        },
        c_hat: Axis {
            min: 0.01,
            max: 0.5,
            steps: 10,
        },
        shape_sum: 7.0,
        wj_mode: WjMode::Exact,
    };
    let mut group = c.benchmark_group("grid_10x10");
    group.sample_size(10);
    group.bench_function("norm_comparison", |b| b.iter(|| norm_comparison_grid(&spec).unwrap()));
    group.bench_function("preference", |b| b.iter(|| preference_grid(&spec).unwrap()));
    group.finish();
}

criterion_group!(benches, reports, grids);
criterion_main!(benches);
