//! Parallel vs sequential benchmarks for the two data-parallel stages:
//! distance-table construction (one Dijkstra per site) and per-route local
//! search. On a single hardware thread the two variants should be within
//! noise of each other; with more cores the parallel side pulls ahead
//! roughly linearly in the route/site count.
//!
//! Run with `cargo bench -p fdvrp --bench par_vs_seq`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fdvrp::heuristics::{cluster_nearest_depot, improve_parallel, improve_serial, SolverConfig};
use fdvrp::instgen::{generate, InstanceSpec};
use fdvrp::routing::{build_oracle_parallel, build_oracle_serial, DistanceOracle};
use fdvrp::streetmap::build_graph;
use fdvrp::synth::city_map;

fn spec(deliveries: usize, depots: usize, vehicles: usize, seed: u64) -> InstanceSpec {
    InstanceSpec {
        name: format!("bench_{deliveries}_{depots}"),
        deliveries,
        depots,
        max_vehicles: vehicles,
        seed,
        r_max: None,
    }
}

fn bench_oracle(c: &mut Criterion) {
    let model = city_map();
    let graph = build_graph(&model);
    let mut group = c.benchmark_group("oracle_build");
    group.sample_size(10);

    for deliveries in [100usize, 300] {
        let inst = generate(&model, &graph, &spec(deliveries, 3, 20, 42)).unwrap();
        group.bench_with_input(BenchmarkId::new("serial", deliveries), &inst, |b, inst| {
            b.iter(|| build_oracle_serial(&graph, &inst.sites, inst.depots, model.delivery_cost).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", deliveries), &inst, |b, inst| {
            b.iter(|| build_oracle_parallel(&graph, &inst.sites, inst.depots, model.delivery_cost).unwrap())
        });
    }
    group.finish();
}

fn bench_improve(c: &mut Criterion) {
    let model = city_map();
    let graph = build_graph(&model);
    let mut group = c.benchmark_group("improve_2opt");
    group.sample_size(10);

    for deliveries in [200usize, 500] {
        let inst = generate(&model, &graph, &spec(deliveries, 5, 40, 42)).unwrap();
        let oracle: DistanceOracle = inst.build_oracle(&model, &graph).unwrap();
        let seq = cluster_nearest_depot(&inst, &oracle);
        let config = SolverConfig::two_opt();

        group.bench_with_input(BenchmarkId::new("serial", deliveries), &seq, |b, seq| {
            b.iter(|| improve_serial(seq, &oracle, &config))
        });
        group.bench_with_input(BenchmarkId::new("parallel", deliveries), &seq, |b, seq| {
            b.iter(|| improve_parallel(seq, &oracle, &config))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_oracle, bench_improve);
criterion_main!(benches);
