use criterion::{criterion_group, criterion_main, Criterion};
use limitcm::lab::{list_scenarios, run_scenario, ScenarioConfig};

fn scenarios(c: &mut Criterion) {
    let cfg = ScenarioConfig::default();
    let mut g = c.benchmark_group("scenario");
    g.sample_size(10);
    for info in list_scenarios() {
        g.bench_function(info.id, |b| b.iter(|| run_scenario(info.id, &cfg).unwrap().passed));
    }
    g.finish();
}

criterion_group!(benches, scenarios);
criterion_main!(benches);
