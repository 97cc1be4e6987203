//! Regenerates the committed fixtures from the deterministic generators:
//!
//! * `fixtures/city.model.txt` — the synthetic benchmark city.
//! * `fixtures/benchmark.instances.txt` — the 23-instance benchmark suite.
//!
//! Run from anywhere with `cargo run -p fdvrp --example gen_fixtures`.
//! Output is byte-stable, so rerunning must leave git clean.

use std::fs;
use std::path::Path;

use fdvrp::streetmap::serialize_model;
use fdvrp::synth::city_map;

/// (deliveries, depots, max vehicles) per suite row; seed = row number.
const SUITE: [(usize, usize, usize); 23] = [
    (10, 2, 5),
    (10, 3, 5),
    (10, 4, 5),
    (20, 2, 5),
    (20, 3, 5),
    (20, 4, 5),
    (50, 4, 5),
    (50, 5, 5),
    (50, 6, 5),
    (100, 5, 10),
    (100, 6, 10),
    (100, 7, 10),
    (200, 5, 10),
    (200, 6, 10),
    (200, 7, 10),
    (500, 5, 20),
    (500, 6, 20),
    (500, 7, 20),
    (1000, 5, 40),
    (1000, 6, 40),
    (1000, 7, 40),
    (2000, 7, 80),
    (2000, 7, 80),
];

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let fixtures = root.join("fixtures");
    fs::create_dir_all(&fixtures).expect("create fixtures dir");

    let model_path = fixtures.join("city.model.txt");
    fs::write(&model_path, serialize_model(&city_map())).expect("write model");
    println!("wrote {}", model_path.display());

    let mut lines = String::from(
        "# FoodDeliveryVRP benchmark suite: name deliveries depots max_vehicles seed\n",
    );
    let mut series = 0usize;
    let mut last_n = 0usize;
    for (id, &(n, nd, k)) in SUITE.iter().enumerate() {
        if n != last_n {
            series = 0;
            last_n = n;
        }
        lines.push_str(&format!("FoodDelivery_{n}_{series} {n} {nd} {k} {}\n", id + 1));
        series += 1;
    }
    let list_path = fixtures.join("benchmark.instances.txt");
    fs::write(&list_path, lines).expect("write instance list");
    println!("wrote {}", list_path.display());
}
