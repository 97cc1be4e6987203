//! Baseline solvers: nearest-depot clusterization and intra-route local
//! search (2-opt and 3-opt), both deterministic.
//!
//! Clusterization assigns every client to its nearest depot by travel
//! distance (ties to the lower depot index) and emits one route per depot;
//! the unused depot copies are appended at the end of the sequence where
//! they form empty, discarded routes. The local search then optimizes each
//! route independently: it never moves a depot token, so the vehicle count
//! (f2) and the depot balance (f3) of the input are preserved exactly.
//!
//! Both optimizers use *best improvement*: a scan evaluates the whole
//! neighborhood, the single most-improving move is applied (ties broken by
//! the lexicographically smallest move indices), and scanning repeats until
//! no strictly improving move remains. Move deltas are computed on travel
//! distances only — the service surcharge is invariant under reordering —
//! and in integer arithmetic, so applying a move changes the route cost by
//! exactly the predicted delta. Two equal-shape neighborhoods on scaled
//! distance tables therefore pick identical move sequences.
//!
//! Routes are independent, so with the `parallel` feature [`improve`] fans
//! the per-route optimization out with rayon; results are identical to the
//! sequential fallback regardless of scheduling.

use std::time::{Duration, Instant};

use crate::instgen::Instance;
use crate::routing::DistanceOracle;
use crate::solution::{partition, Route, Token};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Move-selection strategy. Only best improvement is implemented; the enum
/// leaves room for first-improvement variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    BestImprovement,
}

/// Which intra-route neighborhood [`improve`] explores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalSearch {
    TwoOpt,
    ThreeOpt,
}

/// How clusterization orders the clients of a route before local search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionOrder {
    /// Clients in assignment (instance) order — a deliberately naive start
    /// that leaves the tightening to the local search.
    Assignment,
    /// Greedy nearest-neighbor chain from the depot.
    NearestNeighbor,
}

/// Configuration for [`improve`].
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub local_search: LocalSearch,
    pub strategy: Strategy,
    /// Cap on applied moves per route (None = run to the local optimum).
    pub max_passes: Option<usize>,
    /// Wall-clock budget per route. Results under a budget depend on
    /// machine speed; leave None for reproducible output.
    pub time_budget: Option<Duration>,
}

impl SolverConfig {
    pub fn two_opt() -> SolverConfig {
        SolverConfig {
            local_search: LocalSearch::TwoOpt,
            strategy: Strategy::BestImprovement,
            max_passes: None,
            time_budget: None,
        }
    }

    pub fn three_opt() -> SolverConfig {
        SolverConfig {
            local_search: LocalSearch::ThreeOpt,
            ..SolverConfig::two_opt()
        }
    }
}

#[derive(Clone, Copy)]
struct Caps {
    max_moves: Option<usize>,
    deadline: Option<Instant>,
}

impl Caps {
    fn unlimited() -> Caps {
        Caps { max_moves: None, deadline: None }
    }

    fn from_config(config: &SolverConfig) -> Caps {
        Caps {
            max_moves: config.max_passes,
            deadline: config.time_budget.map(|b| Instant::now() + b),
        }
    }

    fn allows(&self, moves_done: usize) -> bool {
        if let Some(cap) = self.max_moves {
            if moves_done >= cap {
                return false;
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return false;
            }
        }
        true
    }
}

/// Assign every client to the depot with the smallest travel distance
/// (ties to the lower depot index) and build the solution sequence with
/// one leading route per depot. The first token is a depot, so the result
/// never has a prefix route, and every depot token appears exactly
/// `inst.max_vehicles` times.
pub fn cluster_nearest_depot(inst: &Instance, oracle: &DistanceOracle) -> Vec<Token> {
    cluster_with_order(inst, oracle, ConstructionOrder::Assignment)
}

/// [`cluster_nearest_depot`] with an explicit construction order.
pub fn cluster_with_order(
    inst: &Instance,
    oracle: &DistanceOracle,
    order: ConstructionOrder,
) -> Vec<Token> {
    let n = inst.deliveries;
    let nd = inst.depots;
    assert_eq!(nd, oracle.num_depots, "instance and oracle disagree on depots");
    assert_eq!(n + nd, oracle.num_sites(), "instance and oracle disagree on sites");

    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); nd];
    for c in 0..n {
        let site = nd + c;
        let mut best = 0;
        for d in 1..nd {
            if oracle.travel(d, site) < oracle.travel(best, site) {
                best = d;
            }
        }
        assigned[best].push(c);
    }

    let mut seq = Vec::with_capacity(n + nd * inst.max_vehicles);
    for (d, clients) in assigned.iter().enumerate() {
        seq.push(Token::Depot(d));
        let ordered = match order {
            ConstructionOrder::Assignment => clients.clone(),
            ConstructionOrder::NearestNeighbor => nearest_neighbor_order(d, clients, oracle),
        };
        seq.extend(ordered.into_iter().map(Token::Client));
    }
    // Remaining vehicle copies go to the tail as empty (discarded) routes.
    for d in 0..nd {
        seq.extend(std::iter::repeat(Token::Depot(d)).take(inst.max_vehicles - 1));
    }
    seq
}

fn nearest_neighbor_order(depot: usize, clients: &[usize], oracle: &DistanceOracle) -> Vec<usize> {
    let mut remaining = clients.to_vec();
    let mut order = Vec::with_capacity(remaining.len());
    let mut at = depot;
    while !remaining.is_empty() {
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .min_by_key(|&(_, &c)| (oracle.travel(at, oracle.num_depots + c), c))
            .unwrap();
        let c = remaining.swap_remove(pos);
        order.push(c);
        at = oracle.num_depots + c;
    }
    order
}

/// Per-route scratch: the closed tour as local ids (0 = depot, fixed) plus
/// a dense local travel matrix for cache-friendly delta evaluation.
struct TourScratch {
    /// tour[i] is a local id; local id p maps to global site `sites[p]`.
    tour: Vec<usize>,
    sites: Vec<usize>,
    /// Local travel matrix, (m+1) x (m+1).
    d: Vec<i64>,
    n: usize,
}

impl TourScratch {
    fn new(route: &Route, oracle: &DistanceOracle) -> TourScratch {
        let m = route.clients.len();
        let n = m + 1;
        let mut sites = Vec::with_capacity(n);
        sites.push(route.depot);
        sites.extend(route.clients.iter().map(|&c| oracle.num_depots + c));
        let mut d = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                d[i * n + j] = oracle.travel(sites[i], sites[j]);
            }
        }
        TourScratch {
            tour: (0..n).collect(),
            sites,
            d,
            n,
        }
    }

    #[inline]
    fn dist(&self, p: usize, q: usize) -> i64 {
        self.d[p * self.n + q]
    }

    fn into_route(self, route: &Route, oracle: &DistanceOracle) -> Route {
        Route {
            depot: route.depot,
            clients: self.tour[1..]
                .iter()
                .map(|&p| self.sites[p] - oracle.num_depots)
                .collect(),
            is_prefix: route.is_prefix,
        }
    }
}

/// One best-improvement 2-opt scan. Returns the best move as
/// `(delta, a, b)` if a strictly improving one exists.
fn best_two_opt_move(s: &TourScratch) -> Option<(i64, usize, usize)> {
    let n = s.tour.len();
    let mut best: Option<(i64, usize, usize)> = None;
    for a in 0..n - 1 {
        let ta = s.tour[a];
        let ta1 = s.tour[a + 1];
        let e_a = s.dist(ta, ta1);
        for b in a + 2..n {
            let tb = s.tour[b];
            let tb1 = s.tour[if b + 1 == n { 0 } else { b + 1 }];
            let delta = s.dist(ta, tb) + s.dist(ta1, tb1) - e_a - s.dist(tb, tb1);
            if delta < best.map_or(0, |(d, _, _)| d) {
                best = Some((delta, a, b));
            }
        }
    }
    best
}

/// One best-improvement 3-opt scan over all edge triples `a < b < c` and
/// all seven reconnection cases. Returns `(delta, a, b, c, case)`.
fn best_three_opt_move(s: &TourScratch) -> Option<(i64, usize, usize, usize, u8)> {
    let n = s.tour.len();
    let stride = s.n;
    let tour = &s.tour;
    let d = &s.d;

    // Current edge lengths, edge i = (tour[i], tour[i+1 mod n]).
    let mut edge = Vec::with_capacity(n);
    for i in 0..n {
        let u = tour[i];
        let v = tour[if i + 1 == n { 0 } else { i + 1 }];
        edge.push(d[u * stride + v]);
    }

    let mut best_delta = 0i64;
    let mut best: Option<(i64, usize, usize, usize, u8)> = None;

    for a in 0..n - 2 {
        let t_a = tour[a];
        let t_a1 = tour[a + 1];
        let e_a = edge[a];
        let row_a = &d[t_a * stride..t_a * stride + stride];
        let row_a1 = &d[t_a1 * stride..t_a1 * stride + stride];
        for b in a + 1..n - 1 {
            let t_b = tour[b];
            let t_b1 = tour[b + 1];
            let e_b = edge[b];
            let row_b = &d[t_b * stride..t_b * stride + stride];
            let row_b1 = &d[t_b1 * stride..t_b1 * stride + stride];
            let d_a_b = row_a[t_b]; // A - S1 last
            let d_a1_b1 = row_a1[t_b1]; // S1 first - S2 first
            let d_a_b1 = row_a[t_b1]; // A - S2 first
            let rem_ab = e_a + e_b;
            for c in b + 1..n {
                let t_c = tour[c];
                let t_c1 = tour[if c + 1 == n { 0 } else { c + 1 }];
                let rem = rem_ab + edge[c];

                let d_a_c = row_a[t_c]; // A - S2 last
                let d_a1_c = row_a1[t_c]; // S1 first - S2 last
                let d_b_c = row_b[t_c]; // S1 last - S2 last
                let d_a1_c1 = row_a1[t_c1]; // S1 first - B
                let d_b_c1 = row_b[t_c1]; // S1 last - B
                let d_b1_c1 = row_b1[t_c1]; // S2 first - B

                // Reconnection cases over segments S1 = (a+1..=b),
                // S2 = (b+1..=c); ' marks reversal.
                let adds = [
                    d_a_b + d_a1_b1 + edge[c],   // 1: S1'
                    e_a + d_b_c + d_b1_c1,       // 2: S2'
                    d_a_b + d_a1_c + d_b1_c1,    // 3: S1' S2'
                    d_a_b1 + d_a1_c + d_b_c1,    // 4: S2 S1
                    d_a_b1 + d_b_c + d_a1_c1,    // 5: S2 S1'
                    d_a_c + d_a1_b1 + d_b_c1,    // 6: S2' S1
                    d_a_c + e_b + d_a1_c1,       // 7: (S1 S2)'
                ];
                for (k, &add) in adds.iter().enumerate() {
                    let delta = add - rem;
                    if delta < best_delta {
                        best_delta = delta;
                        best = Some((delta, a, b, c, k as u8 + 1));
                    }
                }
            }
        }
    }
    best
}

fn apply_three_opt(tour: &mut [usize], a: usize, b: usize, c: usize, case: u8) {
    match case {
        1 => tour[a + 1..=b].reverse(),
        2 => tour[b + 1..=c].reverse(),
        3 => {
            tour[a + 1..=b].reverse();
            tour[b + 1..=c].reverse();
        }
        7 => tour[a + 1..=c].reverse(),
        4 | 5 | 6 => {
            let mut s1 = tour[a + 1..=b].to_vec();
            let mut s2 = tour[b + 1..=c].to_vec();
            if case == 5 {
                s1.reverse();
            }
            if case == 6 {
                s2.reverse();
            }
            let slice = &mut tour[a + 1..=c];
            slice[..s2.len()].copy_from_slice(&s2);
            slice[s2.len()..].copy_from_slice(&s1);
        }
        _ => unreachable!("3-opt case ids are 1..=7"),
    }
}

fn optimize_route(route: &Route, oracle: &DistanceOracle, kind: LocalSearch, caps: Caps) -> Route {
    let m = route.clients.len();
    let enough = match kind {
        LocalSearch::TwoOpt => m >= 2,
        LocalSearch::ThreeOpt => m >= 3,
    };
    if !enough {
        return route.clone();
    }

    let mut s = TourScratch::new(route, oracle);
    let mut moves = 0usize;
    while caps.allows(moves) {
        match kind {
            LocalSearch::TwoOpt => match best_two_opt_move(&s) {
                Some((_, a, b)) => s.tour[a + 1..=b].reverse(),
                None => break,
            },
            LocalSearch::ThreeOpt => match best_three_opt_move(&s) {
                Some((_, a, b, c, case)) => apply_three_opt(&mut s.tour, a, b, c, case),
                None => break,
            },
        }
        moves += 1;
    }
    s.into_route(route, oracle)
}

/// Best-improvement 2-opt on one route, run to the local optimum. The
/// result visits the same clients at a travel cost no worse than the input.
pub fn two_opt(route: &Route, oracle: &DistanceOracle) -> Route {
    optimize_route(route, oracle, LocalSearch::TwoOpt, Caps::unlimited())
}

/// Best-improvement 3-opt on one route (all seven reconnection cases), run
/// to the local optimum. The seven cases include every 2-exchange, so the
/// result is also 2-opt optimal. Routes with fewer than 3 clients are
/// returned unchanged.
pub fn three_opt(route: &Route, oracle: &DistanceOracle) -> Route {
    optimize_route(route, oracle, LocalSearch::ThreeOpt, Caps::unlimited())
}

/// Optimize every route of a sequence independently and reassemble it with
/// the depot tokens in their original positions, so f2 and f3 are exactly
/// preserved. With the `parallel` feature routes run under rayon.
pub fn improve(tokens: &[Token], oracle: &DistanceOracle, config: &SolverConfig) -> Vec<Token> {
    #[cfg(feature = "parallel")]
    {
        improve_parallel(tokens, oracle, config)
    }
    #[cfg(not(feature = "parallel"))]
    {
        improve_serial(tokens, oracle, config)
    }
}

/// Sequential [`improve`]. Same output.
pub fn improve_serial(tokens: &[Token], oracle: &DistanceOracle, config: &SolverConfig) -> Vec<Token> {
    let caps = Caps::from_config(config);
    let optimized: Vec<Route> = partition(tokens)
        .iter()
        .map(|r| optimize_route(r, oracle, config.local_search, caps))
        .collect();
    reassemble(tokens, &optimized)
}

/// Parallel [`improve`] (rayon over routes). Same output as the sequential
/// version regardless of thread count.
#[cfg(feature = "parallel")]
pub fn improve_parallel(tokens: &[Token], oracle: &DistanceOracle, config: &SolverConfig) -> Vec<Token> {
    let caps = Caps::from_config(config);
    let routes = partition(tokens);
    let optimized: Vec<Route> = routes
        .par_iter()
        .map(|r| optimize_route(r, oracle, config.local_search, caps))
        .collect();
    reassemble(tokens, &optimized)
}

/// Splice optimized client orders back into the original token layout.
fn reassemble(tokens: &[Token], optimized: &[Route]) -> Vec<Token> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut next_route = 0;
    let mut i = 0;
    while i < tokens.len() {
        match tokens[i] {
            Token::Depot(_) => {
                out.push(tokens[i]);
                i += 1;
            }
            Token::Client(_) => {
                let mut j = i;
                while j < tokens.len() && matches!(tokens[j], Token::Client(_)) {
                    j += 1;
                }
                out.extend(optimized[next_route].clients.iter().map(|&c| Token::Client(c)));
                next_route += 1;
                i = j;
            }
        }
    }
    out
}
