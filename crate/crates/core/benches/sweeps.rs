use condlog::corpus::FormulaGen;
use condlog::kmodel::{cem_sweep, truncation_oracle, SweepConfig};
use condlog::search::{correspondence_sweep, ds_sweep, AccessPolicy, DsMode, EnumerationParams};
use condlog::{Exec, Language};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cem(c: &mut Criterion) {
    let mut g = c.benchmark_group("cem_sweep size 5");
    g.sample_size(10);
    for (name, exec) in MODES {
        let mut cfg = SweepConfig::new(5, 2, Language::Plain);
        cfg.exec = exec;
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| cem_sweep(&cfg)));
    }
    g.finish();
}

fn ds(c: &mut Criterion) {
    let mut g = c.benchmark_group("ds_sweep frames |W|<=3 |D|<=2");
    g.sample_size(10);
    let p = EnumerationParams::weakly_stalnakerian();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| ds_sweep(&p, DsMode::Frames, exec).unwrap()));
    }
    g.finish();
}

fn correspondence(c: &mut Criterion) {
    let mut g = c.benchmark_group("correspondence |W|<=2 |D|<=1");
    g.sample_size(10);
    let p = EnumerationParams::new(2, 1, &[], AccessPolicy::All);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| correspondence_sweep(&p, exec).unwrap()));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("truncation oracle 100 formulas");
    g.sample_size(10);
    let corpus = FormulaGen::k_fragment(Language::Plain, 2).corpus(&mut ChaCha8Rng::seed_from_u64(0), 100, 9);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| truncation_oracle(&corpus, 6, exec)));
    }
    g.finish();
}

criterion_group!(benches, cem, ds, correspondence, oracle);
criterion_main!(benches);
