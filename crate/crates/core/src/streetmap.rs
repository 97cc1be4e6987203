//! Street map model: attributed polyline chains, the weight law used for
//! site sampling, and the street graph the router runs on.
//!
//! A map is a list of streets. Each street is a polygonal chain of integer
//! pixel coordinates plus three attributes (region, kind, zone) that scale
//! its sampling weight. Two streets are connected exactly where they list
//! the same integer coordinate; geometric crossings without a shared listed
//! point are overpasses and do not join the graph.
//!
//! Text format (`#` starts a comment line, blank lines are ignored):
//!
//! ```text
//! PIXEL_VALUE 0.137
//! DELIVERY_COST 2190
//! MAX_ROUTE 13138
//! STREETS 1
//! AV. PRES JOHN KENNEDY [CENTRAL,LARGEAVENUE,COMMERCIAL]
//! [4062,8629]-[4086,8652]-[4366,9040]
//! ```
//!
//! An optional `BACKGROUND <path>` header may follow `MAX_ROUTE`. Attribute
//! tokens are case-insensitive and accept both the English spellings used in
//! serialized files (`CENTRAL`, `PERIPHERAL`, ..., `LARGEAVENUE`, `AVENUE`,
//! `STREET`, `ALLEY`, `HIGHWAY`, `COMMERCIAL`, `MIXED`, `RESIDENTIAL`) and
//! the Portuguese originals (`PERIFERICO`, `DISTANTE`, `ISOLADO`, `AVENIDA`,
//! `RUA`, `ALAMEDA`, `RODOVIA`, `COMERCIAL`, `MISTO`, `RESIDENCIAL`).
//! `LARGEAVENUE` and `AVENUE` are the same kind.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Central,
    Peripheral,
    Distant,
    Isolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StreetKind {
    /// Avenues (`LARGEAVENUE` / `AVENUE` / `AVENIDA`).
    Avenue,
    /// Ordinary streets (`STREET` / `RUA`).
    Street,
    /// Alleys (`ALLEY` / `ALAMEDA`).
    Alley,
    /// Highways (`HIGHWAY` / `RODOVIA`); weight zero, never sampled.
    Highway,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Zone {
    Commercial,
    Mixed,
    Residential,
}

/// Multiplicative penalty factors applied to a street's length to obtain its
/// sampling weight. All factors live in `[0, 1]`.
#[derive(Debug, Clone)]
pub struct PenaltyTable {
    pub region: [f64; 4],
    pub kind: [f64; 4],
    pub zone: [f64; 3],
}

impl Default for PenaltyTable {
    fn default() -> Self {
        PenaltyTable {
            region: [1.0, 0.75, 0.4, 0.2],
            kind: [1.0, 0.75, 0.4, 0.0],
            zone: [1.0, 0.75, 0.4],
        }
    }
}

impl PenaltyTable {
    pub fn region_factor(&self, r: Region) -> f64 {
        self.region[r as usize]
    }
    pub fn kind_factor(&self, k: StreetKind) -> f64 {
        self.kind[k as usize]
    }
    pub fn zone_factor(&self, z: Zone) -> f64 {
        self.zone[z as usize]
    }
}

/// One named street: an attributed polygonal chain of integer pixel points.
#[derive(Debug, Clone, PartialEq)]
pub struct StreetChain {
    pub name: String,
    pub region: Region,
    pub kind: StreetKind,
    pub zone: Zone,
    pub points: Vec<(i64, i64)>,
}

/// A parsed street map plus the physical constants attached to it.
#[derive(Debug, Clone)]
pub struct MapModel {
    /// Seconds of travel per pixel.
    pub pixel_value: f64,
    /// Fixed service surcharge per delivery, in pixels.
    pub delivery_cost: i64,
    /// Default maximum route cost, in pixels.
    pub max_route: i64,
    /// Optional background image path (informational only).
    pub background: Option<String>,
    pub streets: Vec<StreetChain>,
    pub penalties: PenaltyTable,
}

/// Polyline length of a chain: the sum of its segment lengths in pixels.
pub fn chain_length(chain: &StreetChain) -> f64 {
    chain
        .points
        .windows(2)
        .map(|w| segment_len(w[0], w[1]))
        .sum()
}

fn segment_len(a: (i64, i64), b: (i64, i64)) -> f64 {
    let dx = (b.0 - a.0) as f64;
    let dy = (b.1 - a.1) as f64;
    dx.hypot(dy)
}

/// Sampling weight of a street: its length scaled by the three attribute
/// factors. Highways get factor 0 and are therefore never sampled.
pub fn street_weight(chain: &StreetChain, table: &PenaltyTable) -> f64 {
    chain_length(chain)
        * table.region_factor(chain.region)
        * table.kind_factor(chain.kind)
        * table.zone_factor(chain.zone)
}

/// Convert a pixel distance to seconds using the model's pixel value.
pub fn px_to_seconds(px: f64, model: &MapModel) -> f64 {
    px * model.pixel_value
}

/// Convert a pixel distance to hours (the unit used in reports).
pub fn px_to_hours(px: i64, model: &MapModel) -> f64 {
    px as f64 * model.pixel_value / 3600.0
}

fn region_token(r: Region) -> &'static str {
    match r {
        Region::Central => "CENTRAL",
        Region::Peripheral => "PERIPHERAL",
        Region::Distant => "DISTANT",
        Region::Isolated => "ISOLATED",
    }
}

fn kind_token(k: StreetKind) -> &'static str {
    match k {
        StreetKind::Avenue => "LARGEAVENUE",
        StreetKind::Street => "STREET",
        StreetKind::Alley => "ALLEY",
        StreetKind::Highway => "HIGHWAY",
    }
}

fn zone_token(z: Zone) -> &'static str {
    match z {
        Zone::Commercial => "COMMERCIAL",
        Zone::Mixed => "MIXED",
        Zone::Residential => "RESIDENTIAL",
    }
}

fn parse_region(tok: &str, line: usize) -> Result<Region> {
    match tok.to_uppercase().as_str() {
        "CENTRAL" => Ok(Region::Central),
        "PERIPHERAL" | "PERIFERICO" | "PERIFÉRICO" => Ok(Region::Peripheral),
        "DISTANT" | "DISTANTE" => Ok(Region::Distant),
        "ISOLATED" | "ISOLADO" => Ok(Region::Isolated),
        _ => Err(Error::ModelParse {
            line,
            msg: format!("unknown region '{tok}'"),
        }),
    }
}

fn parse_kind(tok: &str, line: usize) -> Result<StreetKind> {
    match tok.to_uppercase().as_str() {
        "LARGEAVENUE" | "AVENUE" | "AVENIDA" => Ok(StreetKind::Avenue),
        "STREET" | "RUA" => Ok(StreetKind::Street),
        "ALLEY" | "ALAMEDA" => Ok(StreetKind::Alley),
        "HIGHWAY" | "RODOVIA" => Ok(StreetKind::Highway),
        _ => Err(Error::ModelParse {
            line,
            msg: format!("unknown street kind '{tok}'"),
        }),
    }
}

fn parse_zone(tok: &str, line: usize) -> Result<Zone> {
    match tok.to_uppercase().as_str() {
        "COMMERCIAL" | "COMERCIAL" => Ok(Zone::Commercial),
        "MIXED" | "MISTO" => Ok(Zone::Mixed),
        "RESIDENTIAL" | "RESIDENCIAL" => Ok(Zone::Residential),
        _ => Err(Error::ModelParse {
            line,
            msg: format!("unknown zone '{tok}'"),
        }),
    }
}

/// Parse a model file. See the module docs for the grammar.
pub fn parse_model(text: &str) -> Result<MapModel> {
    let mut pixel_value: Option<f64> = None;
    let mut delivery_cost: Option<i64> = None;
    let mut max_route: Option<i64> = None;
    let mut background: Option<String> = None;
    let mut street_count: Option<usize> = None;

    // (1-based line number, content) with comments and blanks stripped.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut last_line = 0;
    for (ln, line) in lines.by_ref() {
        last_line = ln;
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        let err = |msg: String| Error::ModelParse { line: ln, msg };
        match key {
            "PIXEL_VALUE" => {
                pixel_value = Some(rest.parse().map_err(|_| {
                    err(format!("invalid PIXEL_VALUE '{rest}'"))
                })?)
            }
            "DELIVERY_COST" => {
                delivery_cost = Some(rest.parse().map_err(|_| {
                    err(format!("invalid DELIVERY_COST '{rest}'"))
                })?)
            }
            "MAX_ROUTE" => {
                max_route = Some(rest.parse().map_err(|_| {
                    err(format!("invalid MAX_ROUTE '{rest}'"))
                })?)
            }
            "BACKGROUND" => background = Some(rest.to_string()),
            "STREETS" => {
                street_count = Some(rest.parse().map_err(|_| {
                    err(format!("invalid STREETS count '{rest}'"))
                })?);
                break;
            }
            other => {
                return Err(err(format!("unknown header '{other}'")));
            }
        }
    }

    let missing = |what: &str| Error::ModelParse {
        line: last_line,
        msg: format!("missing {what} header"),
    };
    let pixel_value = pixel_value.ok_or_else(|| missing("PIXEL_VALUE"))?;
    let delivery_cost = delivery_cost.ok_or_else(|| missing("DELIVERY_COST"))?;
    let max_route = max_route.ok_or_else(|| missing("MAX_ROUTE"))?;
    let street_count = street_count.ok_or_else(|| missing("STREETS"))?;
    if street_count == 0 {
        return Err(Error::ModelParse {
            line: last_line,
            msg: "no streets".into(),
        });
    }

    let mut streets = Vec::with_capacity(street_count);
    for _ in 0..street_count {
        let (name_ln, name_line) = lines.next().ok_or_else(|| Error::ModelParse {
            line: last_line,
            msg: format!(
                "expected {street_count} streets, found {}",
                streets.len()
            ),
        })?;
        let (name, region, kind, zone) = parse_street_header(name_line, name_ln)?;

        let (pts_ln, pts_line) = lines.next().ok_or_else(|| Error::ModelParse {
            line: name_ln,
            msg: format!("street '{name}' has no coordinate line"),
        })?;
        last_line = pts_ln;
        let points = parse_points(pts_line, pts_ln)?;

        streets.push(StreetChain {
            name,
            region,
            kind,
            zone,
            points,
        });
    }

    if let Some((ln, _)) = lines.next() {
        return Err(Error::ModelParse {
            line: ln,
            msg: format!("trailing content after {street_count} streets"),
        });
    }

    Ok(MapModel {
        pixel_value,
        delivery_cost,
        max_route,
        background,
        streets,
        penalties: PenaltyTable::default(),
    })
}

/// Split `NAME [REGION,KIND,ZONE]` into its pieces.
fn parse_street_header(line: &str, ln: usize) -> Result<(String, Region, StreetKind, Zone)> {
    let err = |msg: String| Error::ModelParse { line: ln, msg };
    if !line.ends_with(']') {
        return Err(err("street line must end with an attribute triple '[..,..,..]'".into()));
    }
    let open = line
        .rfind('[')
        .ok_or_else(|| err("missing '[' before attribute triple".into()))?;
    let name = line[..open].trim();
    if name.is_empty() {
        return Err(err("missing street name".into()));
    }
    let attrs: Vec<&str> = line[open + 1..line.len() - 1]
        .split(',')
        .map(str::trim)
        .collect();
    if attrs.len() != 3 {
        return Err(err(format!(
            "expected 3 attributes (region,kind,zone), found {}",
            attrs.len()
        )));
    }
    Ok((
        name.to_string(),
        parse_region(attrs[0], ln)?,
        parse_kind(attrs[1], ln)?,
        parse_zone(attrs[2], ln)?,
    ))
}

/// Parse `[x,y]-[x,y]-...` into a point list.
fn parse_points(line: &str, ln: usize) -> Result<Vec<(i64, i64)>> {
    let err = |msg: String| Error::ModelParse { line: ln, msg };
    let mut points = Vec::new();
    for tok in line.split('-') {
        let tok = tok.trim();
        let inner = tok
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err(format!("malformed point '{tok}'")))?;
        let (xs, ys) = inner
            .split_once(',')
            .ok_or_else(|| err(format!("malformed point '{tok}'")))?;
        let x: i64 = xs
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid coordinate '{}'", xs.trim())))?;
        let y: i64 = ys
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid coordinate '{}'", ys.trim())))?;
        if x < 0 || y < 0 {
            return Err(err(format!("negative coordinate in '{tok}'")));
        }
        points.push((x, y));
    }
    if points.len() < 2 {
        return Err(err("street needs at least 2 points".into()));
    }
    if points.windows(2).any(|w| w[0] == w[1]) {
        return Err(err("zero-length segment (repeated consecutive point)".into()));
    }
    Ok(points)
}

/// Serialize a model in canonical form. `parse_model` of the output yields
/// the same model, and serializing again reproduces the bytes exactly.
pub fn serialize_model(model: &MapModel) -> String {
    let mut out = String::new();
    out.push_str(&format!("PIXEL_VALUE {}\n", model.pixel_value));
    out.push_str(&format!("DELIVERY_COST {}\n", model.delivery_cost));
    out.push_str(&format!("MAX_ROUTE {}\n", model.max_route));
    if let Some(bg) = &model.background {
        out.push_str(&format!("BACKGROUND {bg}\n"));
    }
    out.push_str(&format!("STREETS {}\n", model.streets.len()));
    for s in &model.streets {
        out.push_str(&format!(
            "{} [{},{},{}]\n",
            s.name,
            region_token(s.region),
            kind_token(s.kind),
            zone_token(s.zone)
        ));
        let pts: Vec<String> = s.points.iter().map(|(x, y)| format!("[{x},{y}]")).collect();
        out.push_str(&pts.join("-"));
        out.push('\n');
    }
    out
}

/// One street segment inside the graph: its two endpoint vertices and its
/// real-valued length in pixels.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub u: usize,
    pub v: usize,
    pub len: f64,
}

/// Undirected graph over the distinct integer coordinates of a model.
///
/// There is one vertex per distinct coordinate and one edge per chain
/// segment (duplicate geometry yields parallel edges). Junctions exist only
/// where chains list exactly the same integer point.
#[derive(Debug, Clone)]
pub struct StreetGraph {
    /// Vertex id -> integer coordinate.
    pub coords: Vec<(i64, i64)>,
    /// Vertex id -> (neighbor vertex, segment length).
    pub adj: Vec<Vec<(usize, f64)>>,
    /// `segments[street][segment]` -> endpoints and length, in chain order.
    pub segments: Vec<Vec<Segment>>,
}

/// Build the street graph of a model.
pub fn build_graph(model: &MapModel) -> StreetGraph {
    let mut index: std::collections::HashMap<(i64, i64), usize> = std::collections::HashMap::new();
    let mut coords: Vec<(i64, i64)> = Vec::new();
    let mut adj: Vec<Vec<(usize, f64)>> = Vec::new();
    let mut segments: Vec<Vec<Segment>> = Vec::with_capacity(model.streets.len());

    let mut vertex = |p: (i64, i64), coords: &mut Vec<(i64, i64)>, adj: &mut Vec<Vec<(usize, f64)>>| {
        *index.entry(p).or_insert_with(|| {
            coords.push(p);
            adj.push(Vec::new());
            coords.len() - 1
        })
    };

    for street in &model.streets {
        let mut segs = Vec::with_capacity(street.points.len() - 1);
        for w in street.points.windows(2) {
            let u = vertex(w[0], &mut coords, &mut adj);
            let v = vertex(w[1], &mut coords, &mut adj);
            let len = segment_len(w[0], w[1]);
            adj[u].push((v, len));
            adj[v].push((u, len));
            segs.push(Segment { u, v, len });
        }
        segments.push(segs);
    }

    StreetGraph {
        coords,
        adj,
        segments,
    }
}

impl StreetGraph {
    pub fn num_vertices(&self) -> usize {
        self.coords.len()
    }

    pub fn num_edges(&self) -> usize {
        self.segments.iter().map(Vec::len).sum()
    }

    /// Connected component id per vertex (BFS labelling, ids start at 0 in
    /// vertex order).
    pub fn components(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }
}
