use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ternalg::par::Execution;
use ternalg::search::{enumerate_models, SearchConfig};
use ternalg::structures::{BASE_AXIOMS, TERNARY_MV_AXIOMS};

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    let cases = [("base", &BASE_AXIOMS[..], 4), ("base", &BASE_AXIOMS[..], 5), ("ternary-mv", &TERNARY_MV_AXIOMS[..], 4)];
    for (name, axioms, n) in cases {
        for (label, exec) in [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)] {
            let cfg = SearchConfig::new(n, axioms).up_to_iso(true).execution(exec);
            group.bench_with_input(BenchmarkId::new(format!("{name}/{label}"), n), &cfg, |b, cfg| {
                b.iter(|| enumerate_models(cfg).unwrap().total_models)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, census);
criterion_main!(benches);
