//! Deterministic synthetic street maps.
//!
//! Three generators, all reproducible run to run:
//!
//! * [`city_map`] — the shipped benchmark city (~200 streets): a jittered
//!   21x21 grid with avenues every fifth line, split into pieces that share
//!   junction points, two diagonal avenues, dead-end alleys and a zero-weight
//!   highway ring. Attributes follow rings around the center: commercial
//!   avenues downtown, residential alleys at the fringe.
//! * [`grid48`] — a plain 8x8 grid cut into exactly 48 chains, small enough
//!   to check vertex/edge dedup counts by hand.
//! * [`random_map`] — seeded random lattice walks, every new walk anchored
//!   at an existing point so the graph stays connected. Used by oracle
//!   equivalence tests that need many small diverse maps.
//!
//! Junctions only exist where chains share exact integer coordinates, so
//! all generators draw their chains from a common pool of lattice points.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::streetmap::{MapModel, Region, StreetChain, StreetKind, Zone};

const PIXEL_VALUE: f64 = 0.137;
const DELIVERY_COST: i64 = 2190;
const MAX_ROUTE: i64 = 13138;

fn base_model(streets: Vec<StreetChain>) -> MapModel {
    MapModel {
        pixel_value: PIXEL_VALUE,
        delivery_cost: DELIVERY_COST,
        max_route: MAX_ROUTE,
        background: None,
        streets,
        penalties: Default::default(),
    }
}

/// Grid size of the benchmark city (points per side).
const CITY_GRID: usize = 21;
const CITY_SPACING: i64 = 280;
const CITY_ORIGIN: i64 = 300;
const CITY_JITTER: i64 = 60;
const CITY_SEED: u64 = 0xF00D_2026;
/// Row/column pieces split at these indices (consecutive pieces share the
/// boundary point, which keeps the long lines connected).
const CITY_CUTS: [usize; 5] = [0, 5, 10, 15, 20];

const ROW_NAMES: [&str; 21] = [
    "AMAZONAS", "BAHIA", "CEARA", "PARANA", "SERGIPE", "ALAGOAS", "MARANHAO",
    "PIAUI", "PARAIBA", "RONDONIA", "RORAIMA", "TOCANTINS", "ACRE", "AMAPA",
    "GOIAS", "MINAS GERAIS", "SAO PAULO", "PERNAMBUCO", "SANTA CATARINA",
    "MATO GROSSO", "ESPIRITO SANTO",
];
const COL_NAMES: [&str; 21] = [
    "IPE", "JACARANDA", "PALMEIRA", "AROEIRA", "CEDRO", "JATOBA", "PEROBA",
    "ANGICO", "EMBAUBA", "FIGUEIRA", "MANGUEIRA", "GOIABEIRA", "JABUTICABEIRA",
    "PITANGUEIRA", "QUARESMEIRA", "SIBIPIRUNA", "PAINEIRA", "ARAUCARIA",
    "CAJUEIRO", "SERINGUEIRA", "BURITI",
];

/// Chebyshev ring of a grid index around the city center.
fn city_ring(i: usize, j: usize) -> usize {
    let c = (CITY_GRID / 2) as i64;
    let di = (i as i64 - c).unsigned_abs() as usize;
    let dj = (j as i64 - c).unsigned_abs() as usize;
    di.max(dj)
}

fn city_region(ring: usize) -> Region {
    match ring {
        0..=3 => Region::Central,
        4..=6 => Region::Peripheral,
        7..=8 => Region::Distant,
        _ => Region::Isolated,
    }
}

fn city_zone(ring: usize) -> Zone {
    match ring {
        0..=2 => Zone::Commercial,
        3..=6 => Zone::Mixed,
        _ => Zone::Residential,
    }
}

/// The shipped benchmark city. Deterministic: every call builds the exact
/// same map, so the committed model file can be regenerated byte for byte.
pub fn city_map() -> MapModel {
    let mut rng = ChaCha8Rng::seed_from_u64(CITY_SEED);
    let n = CITY_GRID;

    // Jittered grid points, row-major draw order. Chains reference these
    // shared points, so crossings on the grid are real junctions.
    let mut pt = vec![vec![(0i64, 0i64); n]; n];
    for (i, row) in pt.iter_mut().enumerate() {
        for (j, p) in row.iter_mut().enumerate() {
            let x = CITY_ORIGIN + j as i64 * CITY_SPACING + rng.gen_range(-CITY_JITTER..=CITY_JITTER);
            let y = CITY_ORIGIN + i as i64 * CITY_SPACING + rng.gen_range(-CITY_JITTER..=CITY_JITTER);
            *p = (x, y);
        }
    }

    let mut streets = Vec::new();
    let line_kind = |idx: usize| {
        if idx % 5 == 0 {
            StreetKind::Avenue
        } else {
            StreetKind::Street
        }
    };
    let prefix = |kind: StreetKind| if kind == StreetKind::Avenue { "AV." } else { "R." };

    // Horizontal lines, 4 pieces each.
    for i in 0..n {
        let kind = line_kind(i);
        for w in CITY_CUTS.windows(2) {
            let (c0, c1) = (w[0], w[1]);
            let mid = (c0 + c1) / 2;
            let ring = city_ring(i, mid);
            streets.push(StreetChain {
                name: format!("{} {}", prefix(kind), ROW_NAMES[i]),
                region: city_region(ring),
                kind,
                zone: city_zone(ring),
                points: (c0..=c1).map(|j| pt[i][j]).collect(),
            });
        }
    }

    // Vertical lines, 4 pieces each.
    for j in 0..n {
        let kind = line_kind(j);
        for w in CITY_CUTS.windows(2) {
            let (r0, r1) = (w[0], w[1]);
            let mid = (r0 + r1) / 2;
            let ring = city_ring(mid, j);
            streets.push(StreetChain {
                name: format!("{} {}", prefix(kind), COL_NAMES[j]),
                region: city_region(ring),
                kind,
                zone: city_zone(ring),
                points: (r0..=r1).map(|i| pt[i][j]).collect(),
            });
        }
    }

    // Two diagonal avenues through downtown, 2 pieces each.
    for (name, flip) in [("AV. TRANSVERSAL LESTE", false), ("AV. TRANSVERSAL OESTE", true)] {
        for (lo, hi) in [(0usize, 10usize), (10, 20)] {
            let mid = (lo + hi) / 2;
            let ring = city_ring(mid, if flip { n - 1 - mid } else { mid });
            streets.push(StreetChain {
                name: name.to_string(),
                region: city_region(ring),
                kind: StreetKind::Avenue,
                zone: city_zone(ring),
                points: (lo..=hi)
                    .map(|i| if flip { pt[i][n - 1 - i] } else { pt[i][i] })
                    .collect(),
            });
        }
    }

    // Dead-end alleys at distinct interior grid points.
    let dirs = [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)];
    let mut picked: Vec<(usize, usize)> = Vec::new();
    while picked.len() < 20 {
        let i = rng.gen_range(3..=17);
        let j = rng.gen_range(3..=17);
        let (sx, sy) = dirs[rng.gen_range(0..4)];
        let dx = rng.gen_range(80..=160);
        let dy = rng.gen_range(80..=160);
        if picked.contains(&(i, j)) {
            continue;
        }
        picked.push((i, j));
        let base = pt[i][j];
        let ring = city_ring(i, j);
        streets.push(StreetChain {
            name: format!("TV. {}", picked.len()),
            region: city_region(ring),
            kind: StreetKind::Alley,
            zone: city_zone(ring),
            points: vec![base, (base.0 + sx * dx, base.1 + sy * dy)],
        });
    }

    // Highway ring around the city. It touches the grid at the four edge
    // midpoints, so it belongs to the same component, but its weight is
    // zero and it never receives sites.
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
    for row in &pt {
        for &(x, y) in row {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
    }
    let m = 150;
    let (w, e, no, so) = (min_x - m, max_x + m, min_y - m, max_y + m);
    let mid = n / 2;
    let (p_top, p_right, p_bottom, p_left) =
        (pt[0][mid], pt[mid][n - 1], pt[n - 1][mid], pt[mid][0]);
    streets.push(StreetChain {
        name: "ROD. ANEL VIARIO".to_string(),
        region: Region::Isolated,
        kind: StreetKind::Highway,
        zone: Zone::Residential,
        points: vec![
            p_top,
            (e, no),
            p_right,
            (e, so),
            p_bottom,
            (w, so),
            p_left,
            (w, no),
            p_top,
        ],
    });

    base_model(streets)
}

/// A plain 8x8 grid (spacing 400) cut into exactly 48 chains: every row and
/// every column is split at indices 2 and 5. No jitter, so the dedup counts
/// are checkable by hand: 64 vertices, 112 segments, one component.
pub fn grid48() -> MapModel {
    const N: usize = 8;
    const CUTS: [usize; 4] = [0, 2, 5, 7];
    let coord = |k: usize| 200 + 400 * k as i64;
    let regions = [Region::Central, Region::Peripheral, Region::Distant, Region::Isolated];
    let kinds = [StreetKind::Avenue, StreetKind::Street, StreetKind::Alley];
    let zones = [Zone::Commercial, Zone::Mixed, Zone::Residential];

    let mut streets = Vec::new();
    let mut idx = 0usize;
    for i in 0..N {
        for w in CUTS.windows(2) {
            streets.push(StreetChain {
                name: format!("H{i}"),
                region: regions[idx % 4],
                kind: kinds[idx % 3],
                zone: zones[idx % 3],
                points: (w[0]..=w[1]).map(|j| (coord(j), coord(i))).collect(),
            });
            idx += 1;
        }
    }
    for j in 0..N {
        for w in CUTS.windows(2) {
            streets.push(StreetChain {
                name: format!("V{j}"),
                region: regions[idx % 4],
                kind: kinds[idx % 3],
                zone: zones[idx % 3],
                points: (w[0]..=w[1]).map(|i| (coord(j), coord(i))).collect(),
            });
            idx += 1;
        }
    }
    base_model(streets)
}

/// A small random map: straight lattice walks (spacing 250), each anchored
/// at an already-used point, so the result is one connected component with
/// at most ~48 distinct vertices. Kinds cycle through all four (the first
/// street is always a plain street, so total weight is positive).
pub fn random_map(seed: u64) -> MapModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const CELLS: i64 = 12;
    let coord = |c: (i64, i64)| (100 + 250 * c.0, 100 + 250 * c.1);

    let target: usize = rng.gen_range(28..=44);
    let mut used: Vec<(i64, i64)> = Vec::new();
    let mut streets = Vec::new();
    let kinds = [
        StreetKind::Street,
        StreetKind::Avenue,
        StreetKind::Alley,
        StreetKind::Street,
        StreetKind::Highway,
    ];
    let regions = [Region::Central, Region::Peripheral, Region::Distant, Region::Isolated];
    let zones = [Zone::Commercial, Zone::Mixed, Zone::Residential];

    while used.len() < target && streets.len() < 40 {
        let anchor = if used.is_empty() {
            (rng.gen_range(3..CELLS - 3), rng.gen_range(3..CELLS - 3))
        } else {
            used[rng.gen_range(0..used.len())]
        };
        let dir = [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let len = rng.gen_range(2..=4);
        let mut cells = vec![anchor];
        let mut cur = anchor;
        for _ in 0..len {
            let next = (cur.0 + dir.0, cur.1 + dir.1);
            if next.0 < 0 || next.0 >= CELLS || next.1 < 0 || next.1 >= CELLS {
                break;
            }
            cells.push(next);
            cur = next;
        }
        if cells.len() < 2 {
            continue;
        }
        let idx = streets.len();
        streets.push(StreetChain {
            name: format!("W{idx}"),
            region: regions[idx % 4],
            kind: kinds[idx % 5],
            zone: zones[idx % 3],
            points: cells.iter().map(|&c| coord(c)).collect(),
        });
        for c in cells {
            if !used.contains(&c) {
                used.push(c);
            }
        }
    }
    base_model(streets)
}
