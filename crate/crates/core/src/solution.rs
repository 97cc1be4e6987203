//! Solution encoding, route partitioning, objectives and feasibility.
//!
//! A solution is a single sequence over client and depot tokens: every
//! client appears exactly once and every depot appears exactly `k_max`
//! times. Splitting the sequence at depot tokens yields the routes: a depot
//! token opens a route that collects the clients up to the next depot token
//! (or the end), and routes that stay empty are discarded. Clients before
//! the first depot token form the *prefix route*, which is served by depot
//! 0; evaluators flag such sequences so users notice the convention.
//!
//! Objectives, all to be minimized:
//!
//! * `f1` — total cost in pixels: every route is priced as the closed walk
//!   depot -> clients -> depot, each arrival at a client paying the service
//!   surcharge on top of travel;
//! * `f2` — number of non-empty routes (vehicles actually used);
//! * `f3` — population standard deviation of the per-depot delivery counts,
//!   depots with no deliveries included at count 0.
//!
//! Solution file format: a `INSTANCE <name>` header, then one token per
//! line, `C i` for clients and `D j` for depots, both 1-based in the file
//! (internally everything is 0-based).

use crate::error::{Error, Result};
use crate::routing::DistanceOracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    /// 0-based depot index.
    Depot(usize),
    /// 0-based client index.
    Client(usize),
}

/// A solution sequence tied to the instance it answers.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub instance: String,
    pub tokens: Vec<Token>,
}

/// One route extracted from a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    /// 0-based owning depot.
    pub depot: usize,
    /// 0-based client indices in visiting order.
    pub clients: Vec<usize>,
    /// True for the prefix route (clients before any depot token).
    pub is_prefix: bool,
}

/// The canonical sequence: all clients in index order, then every depot
/// repeated `k_max` times. Its partition is a single prefix route holding
/// all clients.
pub fn canonical_sequence(deliveries: usize, depots: usize, k_max: usize) -> Vec<Token> {
    let mut seq = Vec::with_capacity(deliveries + depots * k_max);
    seq.extend((0..deliveries).map(Token::Client));
    for d in 0..depots {
        seq.extend(std::iter::repeat(Token::Depot(d)).take(k_max));
    }
    seq
}

/// Split a sequence into its non-empty routes, in encounter order.
pub fn partition(tokens: &[Token]) -> Vec<Route> {
    let mut routes = Vec::new();
    let mut current: Option<Route> = None;

    for &tok in tokens {
        match tok {
            Token::Depot(d) => {
                if let Some(r) = current.take() {
                    if !r.clients.is_empty() {
                        routes.push(r);
                    }
                }
                current = Some(Route {
                    depot: d,
                    clients: Vec::new(),
                    is_prefix: false,
                });
            }
            Token::Client(c) => match current.as_mut() {
                Some(r) => r.clients.push(c),
                None => {
                    // Clients before any depot: the prefix route, owned by
                    // depot 0.
                    current = Some(Route {
                        depot: 0,
                        clients: vec![c],
                        is_prefix: true,
                    });
                }
            },
        }
    }
    if let Some(r) = current {
        if !r.clients.is_empty() {
            routes.push(r);
        }
    }
    routes
}

/// True when the sequence opens with clients (a prefix route exists).
pub fn has_prefix_route(tokens: &[Token]) -> bool {
    matches!(tokens.first(), Some(Token::Client(_)))
}

/// Cost of one route: the closed walk depot -> c1 -> ... -> cm -> depot,
/// with the service surcharge paid on every client arrival. Reversing the
/// client order does not change the cost.
pub fn route_cost(route: &Route, oracle: &DistanceOracle) -> i64 {
    let depot = route.depot; // depots are sites 0..num_depots
    let mut cost = 0i64;
    let mut at = depot;
    for &c in &route.clients {
        let site = oracle.num_depots + c;
        cost += oracle.cost_w(at, site);
        at = site;
    }
    cost + oracle.cost_w(at, depot)
}

/// f1: total cost of all routes, in integer pixels.
pub fn f1(tokens: &[Token], oracle: &DistanceOracle) -> i64 {
    partition(tokens)
        .iter()
        .map(|r| route_cost(r, oracle))
        .sum()
}

/// f2: number of non-empty routes.
pub fn f2(tokens: &[Token]) -> usize {
    partition(tokens).len()
}

/// f3: population standard deviation (divisor = number of depots) of the
/// per-depot delivery counts. Depots without routes count as 0.
pub fn f3(tokens: &[Token], num_depots: usize) -> f64 {
    if num_depots == 0 {
        return 0.0;
    }
    let mut counts = vec![0usize; num_depots];
    for r in partition(tokens) {
        counts[r.depot] += r.clients.len();
    }
    let mean = counts.iter().sum::<usize>() as f64 / num_depots as f64;
    let var = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - mean;
            d * d
        })
        .sum::<f64>()
        / num_depots as f64;
    var.sqrt()
}

/// All three objective values of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector {
    pub f1_px: i64,
    pub f2: usize,
    pub f3: f64,
}

pub fn objectives(tokens: &[Token], oracle: &DistanceOracle) -> ObjectiveVector {
    ObjectiveVector {
        f1_px: f1(tokens, oracle),
        f2: f2(tokens),
        f3: f3(tokens, oracle.num_depots),
    }
}

/// A route that exceeds the length cap.
#[derive(Debug, Clone, PartialEq)]
pub struct OverLengthRoute {
    /// Index into the partition (encounter order).
    pub route: usize,
    pub depot: usize,
    pub cost_px: i64,
    pub r_max: i64,
}

/// Outcome of validating a sequence against an instance.
#[derive(Debug, Clone)]
pub struct FeasibilityReport {
    /// Token multiset errors (empty when the encoding is well-formed).
    pub multiset_errors: Vec<String>,
    pub over_length: Vec<OverLengthRoute>,
    pub feasible: bool,
}

/// Check the token multiset (every client once, every depot exactly `k_max`
/// times) and every route against the length cap `r_max`.
pub fn validate(
    tokens: &[Token],
    deliveries: usize,
    depots: usize,
    k_max: usize,
    r_max: i64,
    oracle: &DistanceOracle,
) -> FeasibilityReport {
    let mut errors = Vec::new();
    let mut client_count = vec![0usize; deliveries];
    let mut depot_count = vec![0usize; depots];
    for &tok in tokens {
        match tok {
            Token::Client(c) if c < deliveries => client_count[c] += 1,
            Token::Client(c) => errors.push(format!("client {} out of range", c + 1)),
            Token::Depot(d) if d < depots => depot_count[d] += 1,
            Token::Depot(d) => errors.push(format!("depot {} out of range", d + 1)),
        }
    }
    for (c, &n) in client_count.iter().enumerate() {
        if n != 1 {
            errors.push(format!("client {} appears {n} times, expected 1", c + 1));
        }
    }
    for (d, &n) in depot_count.iter().enumerate() {
        if n != k_max {
            errors.push(format!("depot {} appears {n} times, expected {k_max}", d + 1));
        }
    }

    let mut over_length = Vec::new();
    if errors.is_empty() {
        for (i, r) in partition(tokens).iter().enumerate() {
            let cost = route_cost(r, oracle);
            if cost > r_max {
                over_length.push(OverLengthRoute {
                    route: i,
                    depot: r.depot,
                    cost_px: cost,
                    r_max,
                });
            }
        }
    }

    FeasibilityReport {
        feasible: errors.is_empty() && over_length.is_empty(),
        multiset_errors: errors,
        over_length,
    }
}

/// Serialize a solution (token indices are 1-based in the file).
pub fn write_solution(sol: &Solution) -> String {
    let mut out = String::new();
    out.push_str(&format!("INSTANCE {}\n", sol.instance));
    for tok in &sol.tokens {
        match tok {
            Token::Client(c) => out.push_str(&format!("C {}\n", c + 1)),
            Token::Depot(d) => out.push_str(&format!("D {}\n", d + 1)),
        }
    }
    out
}

/// Parse a solution file written by [`write_solution`].
pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut instance: Option<String> = None;
    let mut tokens = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::SolutionParse { line: ln, msg };
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "INSTANCE" => instance = Some(rest.to_string()),
            "C" | "D" => {
                let idx: usize = rest
                    .parse()
                    .map_err(|_| err(format!("invalid token index '{rest}'")))?;
                if idx == 0 {
                    return Err(err("token indices are 1-based".into()));
                }
                tokens.push(if key == "C" {
                    Token::Client(idx - 1)
                } else {
                    Token::Depot(idx - 1)
                });
            }
            other => return Err(err(format!("unknown line '{other}'"))),
        }
    }
    let instance = instance.ok_or(Error::SolutionParse {
        line: 1,
        msg: "missing INSTANCE header".into(),
    })?;
    Ok(Solution { instance, tokens })
}
