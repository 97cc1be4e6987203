//! Exact travel distances between sites on the street graph.
//!
//! A *site* (depot or delivery point) lives on a street segment at a real
//! arc-length offset from the segment start. For shortest paths a site is
//! attached to the graph through its segment's two endpoint vertices with
//! the partial arc lengths; two sites on the same segment may additionally
//! connect directly along the segment. Path lengths stay real-valued all
//! the way through the search and are rounded half-up to integer pixels
//! only at the end, once per site pair.
//!
//! [`build_oracle`] runs one single-source search per site. Sources are
//! independent, so with the `parallel` feature the rows are computed with
//! rayon; the final table takes each unordered pair from the lower-indexed
//! source, which makes the result symmetric and independent of scheduling.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::streetmap::StreetGraph;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A depot or delivery point pinned to a street segment.
#[derive(Debug, Clone, PartialEq)]
pub struct SitePoint {
    /// Street index in the model.
    pub street: usize,
    /// Segment index within the street's chain.
    pub segment: usize,
    /// Arc-length offset in pixels from the segment start point.
    pub offset: f64,
    /// Derived pixel coordinate (interpolated along the segment).
    pub x: f64,
    pub y: f64,
}

impl SitePoint {
    /// Construct a site on `street`/`segment` at `offset`, interpolating the
    /// coordinate from the graph geometry.
    pub fn on_segment(graph: &StreetGraph, street: usize, segment: usize, offset: f64) -> SitePoint {
        let seg = graph.segments[street][segment];
        let (ux, uy) = graph.coords[seg.u];
        let (vx, vy) = graph.coords[seg.v];
        let t = if seg.len > 0.0 { offset / seg.len } else { 0.0 };
        SitePoint {
            street,
            segment,
            offset,
            x: ux as f64 + (vx - ux) as f64 * t,
            y: uy as f64 + (vy - uy) as f64 * t,
        }
    }
}

/// Round to the nearest integer pixel, ties away from zero (half-up for the
/// non-negative distances used here). Matches the usual integer-distance
/// convention of routing benchmarks.
pub fn round_half_up(x: f64) -> i64 {
    (x + 0.5).floor() as i64
}

#[derive(Copy, Clone)]
struct HeapEntry {
    dist: f64,
    vertex: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.dist == other.dist && self.vertex == other.vertex
    }
}
impl Eq for HeapEntry {}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the smallest distance.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Real-valued distances from `site` to every graph vertex.
fn vertex_distances(graph: &StreetGraph, site: &SitePoint) -> Vec<f64> {
    let n = graph.num_vertices();
    let mut dist = vec![f64::INFINITY; n];
    let mut heap = BinaryHeap::new();
    let seg = graph.segments[site.street][site.segment];

    let mut seed = |v: usize, d: f64| {
        if d < dist[v] {
            dist[v] = d;
            heap.push(HeapEntry { dist: d, vertex: v });
        }
    };
    seed(seg.u, site.offset);
    seed(seg.v, seg.len - site.offset);

    while let Some(HeapEntry { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, len) in &graph.adj[u] {
            let nd = d + len;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(HeapEntry { dist: nd, vertex: v });
            }
        }
    }
    dist
}

/// Real-valued shortest travel from a source (given by its vertex distance
/// field) to `b`, including the same-segment shortcut.
fn site_distance(graph: &StreetGraph, from: &SitePoint, vdist: &[f64], b: &SitePoint) -> f64 {
    let seg = graph.segments[b.street][b.segment];
    let mut d = f64::min(vdist[seg.u] + b.offset, vdist[seg.v] + (seg.len - b.offset));
    if from.street == b.street && from.segment == b.segment {
        d = d.min((from.offset - b.offset).abs());
    }
    d
}

/// Shortest travel distance in integer pixels between two sites.
pub fn shortest_travel(graph: &StreetGraph, a: &SitePoint, b: &SitePoint) -> Result<i64> {
    let vdist = vertex_distances(graph, a);
    let d = site_distance(graph, a, &vdist, b);
    if d.is_infinite() {
        return Err(Error::UnreachablePair);
    }
    Ok(round_half_up(d))
}

/// Precomputed site-to-site travel table plus the constants needed to price
/// route legs.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    /// All sites, depots first.
    pub sites: Vec<SitePoint>,
    /// Number of leading depot sites in `sites`.
    pub num_depots: usize,
    /// Service surcharge per delivery, in pixels.
    pub delivery_cost: i64,
    n: usize,
    travel: Vec<i64>,
}

impl DistanceOracle {
    /// Build an oracle from an explicit travel table (row-major, `n x n`).
    /// Panics if the table is not square, symmetric, zero-diagonal and
    /// non-negative — those are structural invariants, not runtime inputs.
    pub fn from_travel(
        sites: Vec<SitePoint>,
        num_depots: usize,
        n: usize,
        travel: Vec<i64>,
        delivery_cost: i64,
    ) -> DistanceOracle {
        assert_eq!(travel.len(), n * n, "travel table must be n x n");
        assert!(sites.is_empty() || sites.len() == n, "sites must match the table");
        assert!(num_depots <= n);
        for i in 0..n {
            assert_eq!(travel[i * n + i], 0, "diagonal must be zero");
            for j in 0..i {
                assert!(travel[i * n + j] >= 0, "distances must be non-negative");
                assert_eq!(travel[i * n + j], travel[j * n + i], "table must be symmetric");
            }
        }
        DistanceOracle {
            sites,
            num_depots,
            delivery_cost,
            n,
            travel,
        }
    }

    pub fn num_sites(&self) -> usize {
        self.n
    }

    /// Travel distance in pixels between sites `a` and `b`.
    #[inline]
    pub fn travel(&self, a: usize, b: usize) -> i64 {
        self.travel[a * self.n + b]
    }

    /// Cost of moving from `u` to `v`: travel plus the service surcharge
    /// when `v` is a delivery site. Depot arrivals carry no surcharge, so
    /// the cost is asymmetric at route ends.
    #[inline]
    pub fn cost_w(&self, u: usize, v: usize) -> i64 {
        self.travel(u, v) + if v >= self.num_depots { self.delivery_cost } else { 0 }
    }

    /// True when `site` is a delivery (not a depot).
    #[inline]
    pub fn is_delivery(&self, site: usize) -> bool {
        site >= self.num_depots
    }
}

fn check_connected(graph: &StreetGraph, sites: &[SitePoint]) -> Result<()> {
    if sites.is_empty() {
        return Ok(());
    }
    let comp = graph.components();
    let site_comp = |s: &SitePoint| comp[graph.segments[s.street][s.segment].u];
    let reference = site_comp(&sites[0]);
    let offenders: Vec<usize> = sites
        .iter()
        .enumerate()
        .filter(|(_, s)| site_comp(s) != reference)
        .map(|(i, _)| i)
        .collect();
    if offenders.is_empty() {
        Ok(())
    } else {
        Err(Error::DisconnectedSites(offenders))
    }
}

/// One rounded distance row from site `i` to every site.
fn site_row(graph: &StreetGraph, sites: &[SitePoint], i: usize) -> Vec<i64> {
    let vdist = vertex_distances(graph, &sites[i]);
    let from = &sites[i];
    sites
        .iter()
        .enumerate()
        .map(|(j, b)| {
            if i == j {
                0
            } else {
                round_half_up(site_distance(graph, from, &vdist, b))
            }
        })
        .collect()
}

fn assemble(sites: &[SitePoint], num_depots: usize, delivery_cost: i64, rows: Vec<Vec<i64>>) -> DistanceOracle {
    let n = sites.len();
    let mut travel = vec![0i64; n * n];
    // Take each unordered pair from the lower-indexed source so the table is
    // symmetric by construction.
    for i in 0..n {
        for j in i + 1..n {
            let d = rows[i][j];
            travel[i * n + j] = d;
            travel[j * n + i] = d;
        }
    }
    DistanceOracle {
        sites: sites.to_vec(),
        num_depots,
        delivery_cost,
        n,
        travel,
    }
}

/// Build the full travel table for `sites` (depots first). Errors if any
/// site is disconnected from the street component of site 0.
pub fn build_oracle(
    graph: &StreetGraph,
    sites: &[SitePoint],
    num_depots: usize,
    delivery_cost: i64,
) -> Result<DistanceOracle> {
    #[cfg(feature = "parallel")]
    {
        build_oracle_parallel(graph, sites, num_depots, delivery_cost)
    }
    #[cfg(not(feature = "parallel"))]
    {
        build_oracle_serial(graph, sites, num_depots, delivery_cost)
    }
}

/// Sequential oracle build. Same output as [`build_oracle`].
pub fn build_oracle_serial(
    graph: &StreetGraph,
    sites: &[SitePoint],
    num_depots: usize,
    delivery_cost: i64,
) -> Result<DistanceOracle> {
    check_connected(graph, sites)?;
    let rows: Vec<Vec<i64>> = (0..sites.len()).map(|i| site_row(graph, sites, i)).collect();
    Ok(assemble(sites, num_depots, delivery_cost, rows))
}

/// Parallel oracle build (rayon over source sites). Same output as
/// [`build_oracle_serial`] regardless of thread count.
#[cfg(feature = "parallel")]
pub fn build_oracle_parallel(
    graph: &StreetGraph,
    sites: &[SitePoint],
    num_depots: usize,
    delivery_cost: i64,
) -> Result<DistanceOracle> {
    check_connected(graph, sites)?;
    let rows: Vec<Vec<i64>> = (0..sites.len())
        .into_par_iter()
        .map(|i| site_row(graph, sites, i))
        .collect();
    Ok(assemble(sites, num_depots, delivery_cost, rows))
}

/// Serialize the travel table: a line with the site count, then one line per
/// row of space-separated integer pixels.
pub fn write_matrix(oracle: &DistanceOracle) -> String {
    let n = oracle.num_sites();
    let mut out = String::new();
    out.push_str(&format!("{n}\n"));
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| oracle.travel(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a travel table written by [`write_matrix`]. Returns the dimension
/// and the row-major table.
pub fn parse_matrix(text: &str) -> Result<(usize, Vec<i64>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, first) = lines.next().ok_or(Error::MatrixParse {
        line: 1,
        msg: "empty matrix file".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::MatrixParse {
        line: ln,
        msg: format!("invalid site count '{first}'"),
    })?;
    let mut travel = Vec::with_capacity(n * n);
    for row in 0..n {
        let (ln, line) = lines.next().ok_or(Error::MatrixParse {
            line: ln + row,
            msg: format!("expected {n} rows, found {row}"),
        })?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| Error::MatrixParse {
                line: ln,
                msg: format!("invalid entry '{tok}'"),
            })?;
            travel.push(v);
            count += 1;
        }
        if count != n {
            return Err(Error::MatrixParse {
                line: ln,
                msg: format!("row has {count} entries, expected {n}"),
            });
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::MatrixParse {
            line: ln,
            msg: "trailing content after matrix".into(),
        });
    }
    Ok((n, travel))
}
