use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tauweave::models::preprojective;
use tauweave::oracle::{homotopy_vanishes, FiniteDimAlgebra};
use tauweave::par::Exec;
use tauweave::silting::{SttiltPoset, VanishingTable};
use tauweave::verify::realize_all;
use tauweave::xi::CriterionOptions;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn vanishing_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("vanishing_table");
    for n in [6, 8] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| VanishingTable::new(n, CriterionOptions::default(), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn sttilt_poset(c: &mut Criterion) {
    let mut g = c.benchmark_group("sttilt_poset");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| SttiltPoset::build(4, CriterionOptions::default(), exec).unwrap())
        });
    }
    g.finish();
}

fn oracle_matrix(c: &mut Criterion) {
    let alg = FiniteDimAlgebra::build(&preprojective(3)).unwrap();
    let (_, cx) = realize_all(&alg).unwrap();
    let mut g = c.benchmark_group("oracle_matrix");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 3), |b| {
            b.iter(|| exec.matrix(cx.len(), |x, y| homotopy_vanishes(&alg, &cx[x], &cx[y])))
        });
    }
    g.finish();
}

criterion_group!(benches, vanishing_table, sttilt_poset, oracle_matrix);
criterion_main!(benches);
