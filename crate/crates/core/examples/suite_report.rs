//! Runs the committed benchmark suite end to end and prints one line per
//! instance: clusterization f1, 2-opt and 3-opt f1, the relative reduction
//! and the 2-opt/3-opt gap. Useful when tuning the synthetic city or the
//! solvers.
//!
//! Usage:
//!   cargo run --release -p fdvrp --example suite_report [-- nn] [skip3]
//!
//! `nn` switches clusterization to nearest-neighbor construction order;
//! `skip3` skips the 3-opt column (much faster on the big instances).

use std::time::Instant;

use fdvrp::heuristics::{
    cluster_with_order, improve_serial, ConstructionOrder, SolverConfig,
};
use fdvrp::instgen::{generate, parse_instances};
use fdvrp::solution::{f1, f2, f3};
use fdvrp::streetmap::build_graph;
use fdvrp::synth::city_map;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let order = if args.iter().any(|a| a == "nn") {
        ConstructionOrder::NearestNeighbor
    } else {
        ConstructionOrder::Assignment
    };
    let skip3 = args.iter().any(|a| a == "skip3");

    let model = city_map();
    let graph = build_graph(&model);
    let list = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/benchmark.instances.txt"),
    )
    .expect("read instance list");
    let specs = parse_instances(&list).expect("parse instance list");

    println!(
        "{:<22} {:>5} {:>3} {:>4} {:>12} {:>12} {:>7} {:>12} {:>7} {:>8} {:>8}",
        "instance", "n", "n'", "k", "f1 cluster", "f1 2opt", "red%", "f1 3opt", "gap%", "t2 ms", "t3 ms"
    );

    for spec in &specs {
        let inst = generate(&model, &graph, spec).expect("generate");
        let oracle = inst.build_oracle(&model, &graph).expect("oracle");
        let seq = cluster_with_order(&inst, &oracle, order);
        let base = f1(&seq, &oracle);
        let (base_f2, base_f3) = (f2(&seq), f3(&seq, inst.depots));

        let t = Instant::now();
        let two = improve_serial(&seq, &oracle, &SolverConfig::two_opt());
        let t2 = t.elapsed().as_millis();
        let f1_two = f1(&two, &oracle);
        assert_eq!(f2(&two), base_f2);
        assert_eq!(f3(&two, inst.depots), base_f3);

        let (f1_three, t3) = if skip3 {
            (f1_two, 0)
        } else {
            let t = Instant::now();
            let three = improve_serial(&seq, &oracle, &SolverConfig::three_opt());
            let t3 = t.elapsed().as_millis();
            assert_eq!(f2(&three), base_f2);
            assert_eq!(f3(&three, inst.depots), base_f3);
            (f1(&three, &oracle), t3)
        };

        let red = 100.0 * (base - f1_two) as f64 / base as f64;
        let gap = 100.0 * (f1_three - f1_two) as f64 / f1_two as f64;
        println!(
            "{:<22} {:>5} {:>3} {:>4} {:>12} {:>12} {:>7.2} {:>12} {:>7.3} {:>8} {:>8}",
            inst.name, inst.deliveries, inst.depots, inst.max_vehicles,
            base, f1_two, red, f1_three, gap, t2, t3
        );
    }
}
