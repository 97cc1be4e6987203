//! Benchmark toolkit for a multi-depot food-delivery vehicle routing
//! problem on polyline street maps.
//!
//! The crate covers the whole benchmark pipeline:
//!
//! * [`streetmap`] — map model files, the street weight law, and the street
//!   graph that distances are measured on;
//! * [`routing`] — exact shortest-path travel distances between sites and
//!   the precomputed [`routing::DistanceOracle`];
//! * [`instgen`] — deterministic benchmark instance generation by weighted
//!   street sampling;
//! * [`solution`] — the depot-interleaved permutation encoding, route
//!   partitioning, the three objectives (f1 cost, f2 vehicles, f3 balance)
//!   and feasibility checks;
//! * [`heuristics`] — the nearest-depot clusterization and 2-opt / 3-opt
//!   intra-route local search;
//! * [`render`] — deterministic SVG rendering of maps, instances and
//!   solutions;
//! * [`synth`] — synthetic map builders used by tests, benches and the
//!   shipped fixtures.
//!
//! With the default `parallel` feature the distance oracle build and the
//! per-route optimization fan out with rayon; the sequential fallbacks
//! produce bit-identical results.

pub mod error;
pub mod heuristics;
pub mod instgen;
pub mod render;
pub mod routing;
pub mod solution;
pub mod streetmap;
pub mod synth;

pub use error::{Error, Result};
