//! Deterministic SVG rendering of maps, instances and solutions.
//!
//! The output is plain SVG 1.1 with no scripting: streets as dashed paths,
//! depots as squares, deliveries as dots, and (optionally) one polyline per
//! non-empty route. Rendering the same inputs twice yields byte-identical
//! markup, so images can be committed and diffed.

use std::fmt::Write as _;

use crate::instgen::Instance;
use crate::solution::{partition, Token};
use crate::streetmap::{MapModel, StreetKind};

const STREET_STROKE: &str = "#4a6fa5";
const DEPOT_FILL: &str = "#d94141";
const DELIVERY_FILL: &str = "#2a9d4e";
/// Route colors, cycled by non-empty route index.
const ROUTE_PALETTE: [&str; 8] = [
    "#e63946", "#457b9d", "#2a9d8f", "#f4a261", "#9b5de5", "#00b4d8", "#ef476f", "#ffb703",
];
const MARGIN: i64 = 60;

fn stroke_width(kind: StreetKind) -> f64 {
    match kind {
        StreetKind::Highway => 5.0,
        StreetKind::Avenue => 4.0,
        StreetKind::Street => 2.5,
        StreetKind::Alley => 1.5,
    }
}

fn bounds(model: &MapModel) -> (i64, i64, i64, i64) {
    let mut min_x = i64::MAX;
    let mut min_y = i64::MAX;
    let mut max_x = i64::MIN;
    let mut max_y = i64::MIN;
    for s in &model.streets {
        for &(x, y) in &s.points {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
    }
    if min_x > max_x {
        (0, 0, 100, 100)
    } else {
        (min_x, min_y, max_x, max_y)
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render the street map alone.
pub fn render_map(model: &MapModel) -> String {
    render(model, None, None)
}

/// Render the map with the instance's depot and delivery sites.
pub fn render_instance(model: &MapModel, instance: &Instance) -> String {
    render(model, Some(instance), None)
}

/// Render the map, the sites and one polyline per non-empty route.
pub fn render_solution(model: &MapModel, instance: &Instance, tokens: &[Token]) -> String {
    render(model, Some(instance), Some(tokens))
}

fn render(model: &MapModel, instance: Option<&Instance>, tokens: Option<&[Token]>) -> String {
    let (min_x, min_y, max_x, max_y) = bounds(model);
    let (vx, vy) = (min_x - MARGIN, min_y - MARGIN);
    let (vw, vh) = (max_x - min_x + 2 * MARGIN, max_y - min_y + 2 * MARGIN);

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx} {vy} {vw} {vh}\">\n"
    );
    let _ = write!(
        svg,
        "<rect x=\"{vx}\" y=\"{vy}\" width=\"{vw}\" height=\"{vh}\" fill=\"#ffffff\"/>\n"
    );

    for street in &model.streets {
        let mut d = String::new();
        for (i, &(x, y)) in street.points.iter().enumerate() {
            let _ = write!(d, "{}{x},{y}", if i == 0 { "M " } else { " L " });
        }
        let _ = write!(
            svg,
            "<path d=\"{d}\" fill=\"none\" stroke=\"{STREET_STROKE}\" stroke-width=\"{w}\" \
             stroke-dasharray=\"6 4\" stroke-linecap=\"round\"><title>{name}</title></path>\n",
            w = stroke_width(street.kind),
            name = xml_escape(&street.name),
        );
    }

    if let (Some(inst), Some(tokens)) = (instance, tokens) {
        for (i, route) in partition(tokens).iter().enumerate() {
            let mut pts = String::new();
            let depot = &inst.sites[route.depot];
            let _ = write!(pts, "{},{}", depot.x, depot.y);
            for &c in &route.clients {
                let site = &inst.sites[inst.depots + c];
                let _ = write!(pts, " {},{}", site.x, site.y);
            }
            let _ = write!(pts, " {},{}", depot.x, depot.y);
            let _ = write!(
                svg,
                "<polyline points=\"{pts}\" fill=\"none\" stroke=\"{color}\" \
                 stroke-width=\"2\" stroke-opacity=\"0.8\"/>\n",
                color = ROUTE_PALETTE[i % ROUTE_PALETTE.len()],
            );
        }
    }

    if let Some(inst) = instance {
        for (i, site) in inst.sites.iter().enumerate() {
            if i < inst.depots {
                let _ = write!(
                    svg,
                    "<rect x=\"{}\" y=\"{}\" width=\"16\" height=\"16\" fill=\"{DEPOT_FILL}\" \
                     stroke=\"#000000\"><title>depot {}</title></rect>\n",
                    site.x - 8.0,
                    site.y - 8.0,
                    i + 1,
                );
            } else {
                let _ = write!(
                    svg,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"{DELIVERY_FILL}\">\
                     <title>delivery {}</title></circle>\n",
                    site.x,
                    site.y,
                    i - inst.depots + 1,
                );
            }
        }
    }

    svg.push_str("</svg>\n");
    svg
}
