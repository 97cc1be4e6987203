//! Deterministic benchmark instance generation.
//!
//! Sites are drawn by weighted street sampling: a street is chosen with
//! probability proportional to its [`street_weight`], then a position is
//! drawn uniformly by arc length along the chain. The first `depots` draws
//! of the stream become the depots, the remaining `deliveries` draws the
//! delivery points.
//!
//! The random stream is a `ChaCha8Rng` seeded with `seed_from_u64(seed)`;
//! each site attempt consumes exactly two `f64` draws (street pick, then
//! position). That makes generation a pure function of the seed — the same
//! seed always reproduces the same instance file byte for byte, on every
//! platform. Draws landing outside the dominant street component (the
//! component holding the largest total weight) are rejected and redrawn a
//! bounded number of times, so all sites of an instance are mutually
//! reachable.
//!
//! Instance list format (`#` comments, blank lines ignored), one spec per
//! line:
//!
//! ```text
//! # name deliveries depots max_vehicles seed [r_max_px]
//! FoodDelivery_10_0 10 2 5 1
//! ```
//!
//! The optional trailing field overrides the model's `MAX_ROUTE` for that
//! instance only.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::routing::SitePoint;
use crate::streetmap::{chain_length, serialize_model, street_weight, MapModel, StreetGraph};

/// One line of an instance list: what to generate.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceSpec {
    pub name: String,
    pub deliveries: usize,
    pub depots: usize,
    pub max_vehicles: usize,
    pub seed: u64,
    /// Per-instance override of the model's `MAX_ROUTE`.
    pub r_max: Option<i64>,
}

/// A generated (or parsed) benchmark instance. `sites` holds the depots
/// first, then the deliveries.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub deliveries: usize,
    pub depots: usize,
    pub max_vehicles: usize,
    pub seed: u64,
    pub r_max: i64,
    /// Hex SHA-256 of the canonical serialization of the generating model.
    pub model_sha: String,
    pub sites: Vec<SitePoint>,
}

impl Instance {
    pub fn num_sites(&self) -> usize {
        self.depots + self.deliveries
    }

    /// Site index of depot `j` (0-based).
    pub fn depot_site(&self, j: usize) -> usize {
        debug_assert!(j < self.depots);
        j
    }

    /// Site index of client `c` (0-based).
    pub fn client_site(&self, c: usize) -> usize {
        debug_assert!(c < self.deliveries);
        self.depots + c
    }

    /// Build the travel oracle for this instance's sites.
    pub fn build_oracle(
        &self,
        model: &MapModel,
        graph: &StreetGraph,
    ) -> Result<crate::routing::DistanceOracle> {
        crate::routing::build_oracle(graph, &self.sites, self.depots, model.delivery_cost)
    }
}

/// Parse an instance list. An empty (or comment-only) file is an empty list.
pub fn parse_instances(text: &str) -> Result<Vec<InstanceSpec>> {
    let mut specs: Vec<InstanceSpec> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::InstanceListParse { line: ln, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 5 || fields.len() > 6 {
            return Err(err(format!(
                "expected 'name deliveries depots max_vehicles seed [r_max]', found {} fields",
                fields.len()
            )));
        }
        let name = fields[0].to_string();
        if specs.iter().any(|s| s.name == name) {
            return Err(err(format!("duplicate instance name '{name}'")));
        }
        let parse_count = |what: &str, tok: &str| -> Result<usize> {
            let v: usize = tok
                .parse()
                .map_err(|_| err(format!("invalid {what} '{tok}'")))?;
            if v == 0 {
                return Err(err(format!("{what} must be positive")));
            }
            Ok(v)
        };
        let deliveries = parse_count("deliveries", fields[1])?;
        let depots = parse_count("depots", fields[2])?;
        let max_vehicles = parse_count("max_vehicles", fields[3])?;
        let seed: u64 = fields[4]
            .parse()
            .map_err(|_| err(format!("invalid seed '{}'", fields[4])))?;
        let r_max = match fields.get(5) {
            None => None,
            Some(tok) => {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| err(format!("invalid r_max '{tok}'")))?;
                if v <= 0 {
                    return Err(err("r_max must be positive".into()));
                }
                Some(v)
            }
        };
        specs.push(InstanceSpec {
            name,
            deliveries,
            depots,
            max_vehicles,
            seed,
            r_max,
        });
    }
    Ok(specs)
}

/// Cumulative-weight sampler over a model's streets.
pub struct StreetSampler {
    /// `cum[i]` = total weight of streets `0..=i`.
    cum: Vec<f64>,
}

impl StreetSampler {
    pub fn new(model: &MapModel) -> Result<StreetSampler> {
        let mut cum = Vec::with_capacity(model.streets.len());
        let mut acc = 0.0;
        for s in &model.streets {
            acc += street_weight(s, &model.penalties);
            cum.push(acc);
        }
        if !(acc > 0.0) {
            return Err(Error::AllWeightsZero);
        }
        Ok(StreetSampler { cum })
    }

    fn total(&self) -> f64 {
        *self.cum.last().unwrap()
    }

    /// Draw one site: two `f64` draws from `rng` (street, then position).
    /// Zero-weight streets can never be selected.
    pub fn sample<R: Rng>(&self, model: &MapModel, rng: &mut R) -> SitePoint {
        let t = rng.gen::<f64>() * self.total();
        // First street whose cumulative weight exceeds t; zero-weight
        // streets collapse onto their predecessor's cumulative value and
        // are skipped by the strict inequality.
        let street = self.cum.partition_point(|&c| c <= t);
        let street = street.min(self.cum.len() - 1);
        let chain = &model.streets[street];
        let len = chain_length(chain);
        let pos = rng.gen::<f64>() * len;

        // Walk the chain to the segment containing pos.
        let mut acc = 0.0;
        let last = chain.points.len() - 2;
        for (seg, w) in chain.points.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            let sl = {
                let dx = (b.0 - a.0) as f64;
                let dy = (b.1 - a.1) as f64;
                dx.hypot(dy)
            };
            if pos < acc + sl || seg == last {
                let offset = (pos - acc).clamp(0.0, sl);
                let t = offset / sl;
                return SitePoint {
                    street,
                    segment: seg,
                    offset,
                    x: a.0 as f64 + (b.0 - a.0) as f64 * t,
                    y: a.1 as f64 + (b.1 - a.1) as f64 * t,
                };
            }
            acc += sl;
        }
        unreachable!("chain walk always terminates on the last segment");
    }
}

/// Draw one site from the model's weight law. Convenience wrapper that
/// builds a [`StreetSampler`] per call; use the sampler directly in loops.
pub fn sample_site<R: Rng>(model: &MapModel, rng: &mut R) -> Result<SitePoint> {
    Ok(StreetSampler::new(model)?.sample(model, rng))
}

/// Hex SHA-256 of the model's canonical serialization. Instance files embed
/// this so that evaluating against the wrong map fails loudly.
pub fn model_sha256(model: &MapModel) -> String {
    let digest = Sha256::digest(serialize_model(model).as_bytes());
    let mut hex = String::with_capacity(64);
    for b in digest {
        let _ = write!(hex, "{b:02x}");
    }
    hex
}

const MAX_SITE_RETRIES: usize = 1000;

/// Generate an instance from a spec. Deterministic in `spec.seed`.
pub fn generate(model: &MapModel, graph: &StreetGraph, spec: &InstanceSpec) -> Result<Instance> {
    let sampler = StreetSampler::new(model)?;

    // Sites must be mutually reachable: accept only draws landing in the
    // street component carrying the largest total weight (ties to the
    // lowest component id).
    let comp = graph.components();
    let num_comps = comp.iter().max().map_or(0, |m| m + 1);
    let mut comp_weight = vec![0.0f64; num_comps];
    for (i, street) in model.streets.iter().enumerate() {
        let c = comp[graph.segments[i][0].u];
        comp_weight[c] += street_weight(street, &model.penalties);
    }
    let main = comp_weight
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1).then(b.0.cmp(&a.0)))
        .map_or(0, |(i, _)| i);

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let total = spec.depots + spec.deliveries;
    let mut sites = Vec::with_capacity(total);
    for k in 0..total {
        let mut accepted = None;
        for _ in 0..MAX_SITE_RETRIES {
            let s = sampler.sample(model, &mut rng);
            if comp[graph.segments[s.street][s.segment].u] == main {
                accepted = Some(s);
                break;
            }
        }
        match accepted {
            Some(s) => sites.push(s),
            None => {
                return Err(Error::SampleRetriesExhausted {
                    site: k,
                    attempts: MAX_SITE_RETRIES,
                })
            }
        }
    }

    Ok(Instance {
        name: spec.name.clone(),
        deliveries: spec.deliveries,
        depots: spec.depots,
        max_vehicles: spec.max_vehicles,
        seed: spec.seed,
        r_max: spec.r_max.unwrap_or(model.max_route),
        model_sha: model_sha256(model),
        sites,
    })
}

/// Serialize an instance. Floats use the shortest representation that
/// parses back to the same value, so write -> parse -> write is stable.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    out.push_str(&format!("NAME {}\n", inst.name));
    out.push_str(&format!("DELIVERIES {}\n", inst.deliveries));
    out.push_str(&format!("DEPOTS {}\n", inst.depots));
    out.push_str(&format!("MAX_VEHICLES {}\n", inst.max_vehicles));
    out.push_str(&format!("R_MAX {}\n", inst.r_max));
    out.push_str(&format!("SEED {}\n", inst.seed));
    out.push_str(&format!("MODEL_SHA256 {}\n", inst.model_sha));
    for (i, s) in inst.sites.iter().enumerate() {
        let tag = if i < inst.depots { 'D' } else { 'C' };
        out.push_str(&format!(
            "{tag} {} {} {} {} {}\n",
            s.street, s.segment, s.offset, s.x, s.y
        ));
    }
    out
}

/// Parse an instance file and check it against the model it claims to be
/// generated from (street bounds, coordinate consistency, checksum).
pub fn parse_instance(text: &str, model: &MapModel) -> Result<Instance> {
    let mut name: Option<String> = None;
    let mut deliveries: Option<usize> = None;
    let mut depots: Option<usize> = None;
    let mut max_vehicles: Option<usize> = None;
    let mut r_max: Option<i64> = None;
    let mut seed: Option<u64> = None;
    let mut sha: Option<String> = None;
    let mut sites: Vec<SitePoint> = Vec::new();
    let mut d_count = 0usize;
    let mut seen_client = false;
    let mut last_line = 0;

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = ln;
        let err = |msg: String| Error::InstanceParse { line: ln, msg };
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "NAME" => name = Some(rest.to_string()),
            "DELIVERIES" => {
                deliveries = Some(rest.parse().map_err(|_| err(format!("invalid DELIVERIES '{rest}'")))?)
            }
            "DEPOTS" => {
                depots = Some(rest.parse().map_err(|_| err(format!("invalid DEPOTS '{rest}'")))?)
            }
            "MAX_VEHICLES" => {
                max_vehicles =
                    Some(rest.parse().map_err(|_| err(format!("invalid MAX_VEHICLES '{rest}'")))?)
            }
            "R_MAX" => r_max = Some(rest.parse().map_err(|_| err(format!("invalid R_MAX '{rest}'")))?),
            "SEED" => seed = Some(rest.parse().map_err(|_| err(format!("invalid SEED '{rest}'")))?),
            "MODEL_SHA256" => sha = Some(rest.to_string()),
            "D" | "C" => {
                if key == "D" && seen_client {
                    return Err(err("depot line after client lines".into()));
                }
                if key == "C" {
                    seen_client = true;
                } else {
                    d_count += 1;
                }
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 5 {
                    return Err(err(format!(
                        "site line needs 'street segment offset x y', found {} fields",
                        f.len()
                    )));
                }
                let street: usize =
                    f[0].parse().map_err(|_| err(format!("invalid street index '{}'", f[0])))?;
                let segment: usize =
                    f[1].parse().map_err(|_| err(format!("invalid segment index '{}'", f[1])))?;
                let offset: f64 =
                    f[2].parse().map_err(|_| err(format!("invalid offset '{}'", f[2])))?;
                let x: f64 = f[3].parse().map_err(|_| err(format!("invalid x '{}'", f[3])))?;
                let y: f64 = f[4].parse().map_err(|_| err(format!("invalid y '{}'", f[4])))?;

                let chain = model.streets.get(street).ok_or_else(|| {
                    err(format!("street {street} out of range (model has {})", model.streets.len()))
                })?;
                let nsegs = chain.points.len() - 1;
                if segment >= nsegs {
                    return Err(err(format!(
                        "segment {segment} out of range (street '{}' has {nsegs})",
                        chain.name
                    )));
                }
                let (a, b) = (chain.points[segment], chain.points[segment + 1]);
                let sl = {
                    let dx = (b.0 - a.0) as f64;
                    let dy = (b.1 - a.1) as f64;
                    dx.hypot(dy)
                };
                if !(0.0..=sl + 1e-9).contains(&offset) {
                    return Err(err(format!(
                        "offset {offset} outside segment length {sl}"
                    )));
                }
                let t = offset / sl;
                let ex = a.0 as f64 + (b.0 - a.0) as f64 * t;
                let ey = a.1 as f64 + (b.1 - a.1) as f64 * t;
                if (ex - x).abs() > 1e-6 || (ey - y).abs() > 1e-6 {
                    return Err(err(format!(
                        "coordinate ({x}, {y}) does not lie at offset {offset} of street {street}"
                    )));
                }
                sites.push(SitePoint { street, segment, offset, x, y });
            }
            other => return Err(err(format!("unknown line '{other}'"))),
        }
    }

    let missing = |what: &str| Error::InstanceParse {
        line: last_line,
        msg: format!("missing {what} header"),
    };
    let name = name.ok_or_else(|| missing("NAME"))?;
    let deliveries = deliveries.ok_or_else(|| missing("DELIVERIES"))?;
    let depots = depots.ok_or_else(|| missing("DEPOTS"))?;
    let max_vehicles = max_vehicles.ok_or_else(|| missing("MAX_VEHICLES"))?;
    let r_max = r_max.ok_or_else(|| missing("R_MAX"))?;
    let seed = seed.ok_or_else(|| missing("SEED"))?;
    let sha = sha.ok_or_else(|| missing("MODEL_SHA256"))?;

    let actual = model_sha256(model);
    if sha != actual {
        return Err(Error::ChecksumMismatch {
            expected: sha,
            actual,
        });
    }

    if d_count != depots || sites.len() != depots + deliveries {
        return Err(Error::InstanceParse {
            line: last_line,
            msg: format!(
                "site counts do not match headers: {} depot and {} site lines for DEPOTS {depots}, DELIVERIES {deliveries}",
                d_count,
                sites.len()
            ),
        });
    }

    Ok(Instance {
        name,
        deliveries,
        depots,
        max_vehicles,
        seed,
        r_max,
        model_sha: sha,
        sites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streetmap::{build_graph, parse_model};

    fn small_model() -> MapModel {
        let text = "PIXEL_VALUE 0.137\nDELIVERY_COST 2190\nMAX_ROUTE 13138\nSTREETS 3\n\
                    MAIN [CENTRAL,LARGEAVENUE,COMMERCIAL]\n[0,0]-[1000,0]\n\
                    SIDE [PERIPHERAL,STREET,RESIDENTIAL]\n[1000,0]-[1000,500]\n\
                    RING [DISTANT,HIGHWAY,RESIDENTIAL]\n[0,10]-[2000,10]\n";
        parse_model(text).unwrap()
    }

    #[test]
    fn parses_a_benchmark_spec_line() {
        let specs = parse_instances("# comment\nFoodDelivery_10_0 10 2 5 1\n").unwrap();
        assert_eq!(
            specs,
            vec![InstanceSpec {
                name: "FoodDelivery_10_0".into(),
                deliveries: 10,
                depots: 2,
                max_vehicles: 5,
                seed: 1,
                r_max: None,
            }]
        );
    }

    #[test]
    fn empty_list_is_fine_but_bad_lines_are_not() {
        assert!(parse_instances("").unwrap().is_empty());
        assert!(parse_instances("# only comments\n\n").unwrap().is_empty());

        assert!(matches!(
            parse_instances("A 10 2 5 1\nA 5 1 2 9\n"),
            Err(Error::InstanceListParse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instances("A 0 2 5 1\n"),
            Err(Error::InstanceListParse { line: 1, .. })
        ));
        assert!(matches!(
            parse_instances("A 10 2 5\n"),
            Err(Error::InstanceListParse { line: 1, .. })
        ));
    }

    #[test]
    fn r_max_override_is_optional() {
        let specs = parse_instances("A 10 2 5 1 9000\nB 10 2 5 2\n").unwrap();
        assert_eq!(specs[0].r_max, Some(9000));
        assert_eq!(specs[1].r_max, None);

        let model = small_model();
        let graph = build_graph(&model);
        let a = generate(&model, &graph, &specs[0]).unwrap();
        let b = generate(&model, &graph, &specs[1]).unwrap();
        assert_eq!(a.r_max, 9000);
        assert_eq!(b.r_max, 13138);
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let model = small_model();
        let graph = build_graph(&model);
        let spec = InstanceSpec {
            name: "X".into(),
            deliveries: 10,
            depots: 2,
            max_vehicles: 5,
            seed: 42,
            r_max: None,
        };
        let a = generate(&model, &graph, &spec).unwrap();
        let b = generate(&model, &graph, &spec).unwrap();
        assert_eq!(write_instance(&a), write_instance(&b));

        let other = generate(
            &model,
            &graph,
            &InstanceSpec { seed: 43, ..spec.clone() },
        )
        .unwrap();
        assert_ne!(write_instance(&a), write_instance(&other));
    }

    #[test]
    fn depots_are_the_first_draws_of_the_stream() {
        let model = small_model();
        let graph = build_graph(&model);
        let spec = InstanceSpec {
            name: "X".into(),
            deliveries: 7,
            depots: 3,
            max_vehicles: 2,
            seed: 7,
            r_max: None,
        };
        let inst = generate(&model, &graph, &spec).unwrap();

        let sampler = StreetSampler::new(&model).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for j in 0..3 {
            let s = sampler.sample(&model, &mut rng);
            assert_eq!(s, inst.sites[j], "depot {j} must be draw {j}");
        }
    }

    #[test]
    fn highways_are_never_sampled() {
        let model = small_model();
        let sampler = StreetSampler::new(&model).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..2000 {
            let s = sampler.sample(&model, &mut rng);
            assert_ne!(s.street, 2, "zero-weight highway must never be drawn");
        }
    }

    #[test]
    fn all_zero_weights_is_an_error() {
        let text = "PIXEL_VALUE 1\nDELIVERY_COST 0\nMAX_ROUTE 1\nSTREETS 1\nR [DISTANT,HIGHWAY,RESIDENTIAL]\n[0,0]-[100,0]\n";
        let model = parse_model(text).unwrap();
        assert!(matches!(StreetSampler::new(&model), Err(Error::AllWeightsZero)));
    }

    #[test]
    fn sites_stay_in_the_dominant_component() {
        // Two disconnected streets; the side one still has 25% of the weight
        // so rejected draws exercise the retry path.
        let text = "PIXEL_VALUE 1\nDELIVERY_COST 0\nMAX_ROUTE 1\nSTREETS 2\n\
                    A [CENTRAL,LARGEAVENUE,COMMERCIAL]\n[0,0]-[3000,0]\n\
                    B [CENTRAL,LARGEAVENUE,COMMERCIAL]\n[0,100]-[1000,100]\n";
        let model = parse_model(text).unwrap();
        let graph = build_graph(&model);
        let spec = InstanceSpec {
            name: "X".into(),
            deliveries: 30,
            depots: 2,
            max_vehicles: 3,
            seed: 5,
            r_max: None,
        };
        let inst = generate(&model, &graph, &spec).unwrap();
        assert!(inst.sites.iter().all(|s| s.street == 0));
    }

    #[test]
    fn instance_round_trips_byte_identically() {
        let model = small_model();
        let graph = build_graph(&model);
        let spec = InstanceSpec {
            name: "RT".into(),
            deliveries: 12,
            depots: 3,
            max_vehicles: 4,
            seed: 99,
            r_max: Some(10000),
        };
        let inst = generate(&model, &graph, &spec).unwrap();
        let text = write_instance(&inst);
        let reparsed = parse_instance(&text, &model).unwrap();
        assert_eq!(write_instance(&reparsed), text);
        assert_eq!(reparsed.sites, inst.sites);
    }

    #[test]
    fn hand_written_instances_parse() {
        let model = small_model();
        let text = format!(
            "NAME tiny\nDELIVERIES 2\nDEPOTS 1\nMAX_VEHICLES 1\nR_MAX 13138\nSEED 0\nMODEL_SHA256 {}\n\
             D 0 0 0 0 0\nC 0 0 500 500 0\nC 1 0 100 1000 100\n",
            model_sha256(&model)
        );
        let inst = parse_instance(&text, &model).unwrap();
        assert_eq!(inst.depots, 1);
        assert_eq!(inst.deliveries, 2);
        assert_eq!(inst.sites[1].offset, 500.0);
    }

    #[test]
    fn instance_parse_rejects_bad_references() {
        let model = small_model();
        let sha = model_sha256(&model);
        // Street out of range.
        let text = format!(
            "NAME t\nDELIVERIES 1\nDEPOTS 1\nMAX_VEHICLES 1\nR_MAX 1\nSEED 0\nMODEL_SHA256 {sha}\n\
             D 0 0 0 0 0\nC 9999 0 0 0 0\n"
        );
        match parse_instance(&text, &model) {
            Err(Error::InstanceParse { line, msg }) => {
                assert_eq!(line, 9);
                assert!(msg.contains("9999"));
            }
            other => panic!("expected street range error, got {other:?}"),
        }

        // Wrong checksum.
        let text = format!(
            "NAME t\nDELIVERIES 1\nDEPOTS 1\nMAX_VEHICLES 1\nR_MAX 1\nSEED 0\nMODEL_SHA256 {}\n\
             D 0 0 0 0 0\nC 0 0 1 1 0\n",
            "0".repeat(64)
        );
        assert!(matches!(
            parse_instance(&text, &model),
            Err(Error::ChecksumMismatch { .. })
        ));

        // Coordinate that does not match the offset.
        let text = format!(
            "NAME t\nDELIVERIES 1\nDEPOTS 1\nMAX_VEHICLES 1\nR_MAX 1\nSEED 0\nMODEL_SHA256 {sha}\n\
             D 0 0 0 0 0\nC 0 0 500 123 0\n"
        );
        assert!(matches!(
            parse_instance(&text, &model),
            Err(Error::InstanceParse { line: 9, .. })
        ));

        // Count mismatch.
        let text = format!(
            "NAME t\nDELIVERIES 2\nDEPOTS 1\nMAX_VEHICLES 1\nR_MAX 1\nSEED 0\nMODEL_SHA256 {sha}\n\
             D 0 0 0 0 0\nC 0 0 1 1 0\n"
        );
        assert!(matches!(
            parse_instance(&text, &model),
            Err(Error::InstanceParse { .. })
        ));
    }

    #[test]
    fn positions_cover_whole_chains() {
        // A two-segment chain: samples should land on both segments with
        // offsets inside the segment bounds.
        let text = "PIXEL_VALUE 1\nDELIVERY_COST 0\nMAX_ROUTE 1\nSTREETS 1\nZ [CENTRAL,STREET,MIXED]\n[0,0]-[30,40]-[60,0]\n";
        let model = parse_model(text).unwrap();
        let sampler = StreetSampler::new(&model).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = [false; 2];
        for _ in 0..200 {
            let s = sampler.sample(&model, &mut rng);
            assert!(s.offset >= 0.0 && s.offset <= 50.0);
            seen[s.segment] = true;
        }
        assert!(seen[0] && seen[1]);
    }
}
