//! Plain SVG drawings. Floating point lives here only.

use std::fmt::Write;

use positroid_core::lediagram::{Cell, LeDiagram, Tile};
use positroid_core::plabic::{Color, PerfectOrientation, PlabicGraph};
use positroid_core::{DyckPath, Step};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn header(w: f64, h: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    )
}

/// The lattice path with the diagonal and its step labels.
pub fn path_svg(p: &DyckPath) -> String {
    let (m, d) = (p.m() as f64, p.d() as f64);
    let (w, h) = (m * UNIT + 2.0 * MARGIN, d * UNIT + 2.0 * MARGIN);
    let pt = |x: f64, y: f64| (MARGIN + x * UNIT, MARGIN + (d - y) * UNIT);
    let mut s = header(w, h);
    for x in 0..=p.m() {
        let (a, b) = (pt(x as f64, 0.0), pt(x as f64, d));
        writeln!(s, "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#ddd\"/>", a.0, a.1, b.0, b.1).unwrap();
    }
    for y in 0..=p.d() {
        let (a, b) = (pt(0.0, y as f64), pt(m, y as f64));
        writeln!(s, "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#ddd\"/>", a.0, a.1, b.0, b.1).unwrap();
    }
    let (a, b) = (pt(0.0, 0.0), pt(m, d));
    writeln!(s, "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>", a.0, a.1, b.0, b.1).unwrap();
    let labels = p.step_labels();
    let (mut x, mut y) = (0.0, 0.0);
    for (step, label) in p.steps().iter().zip(labels) {
        let (nx, ny) = match step {
            Step::East => (x + 1.0, y),
            Step::North => (x, y + 1.0),
        };
        let (a, b) = (pt(x, y), pt(nx, ny));
        writeln!(s, "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\" stroke-width=\"3\"/>", a.0, a.1, b.0, b.1).unwrap();
        let (lx, ly) = match step {
            Step::East => ((a.0 + b.0) / 2.0, a.1 + 15.0),
            Step::North => (a.0 + 8.0, (a.1 + b.1) / 2.0 + 4.0),
        };
        writeln!(s, "<text x=\"{lx:.1}\" y=\"{ly:.1}\">{label}</text>").unwrap();
        (x, y) = (nx, ny);
    }
    s.push_str("</svg>\n");
    s
}

/// The filling with its pipe dream drawn on top.
pub fn le_svg(l: &LeDiagram) -> String {
    let (w, h) = (l.m() as f64 * UNIT + 2.0 * MARGIN, l.d() as f64 * UNIT + 2.0 * MARGIN);
    let mut s = header(w, h);
    let tiles = l.pipe_dream();
    for (r, row) in l.rows().iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let (x, y) = (MARGIN + c as f64 * UNIT, MARGIN + r as f64 * UNIT);
            let fill = if *cell == Cell::Plus { "#eef" } else { "white" };
            writeln!(s, "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"{fill}\" stroke=\"black\"/>").unwrap();
            let half = UNIT / 2.0;
            let path = match tiles[r][c] {
                // top to right, left to bottom
                Tile::Elbow => format!(
                    "M {:.1} {y:.1} A {half} {half} 0 0 0 {:.1} {:.1} M {x:.1} {:.1} A {half} {half} 0 0 1 {:.1} {:.1}",
                    x + half, x + UNIT, y + half, y + half, x + half, y + UNIT
                ),
                Tile::Cross => format!(
                    "M {:.1} {y:.1} L {:.1} {:.1} M {x:.1} {:.1} L {:.1} {:.1}",
                    x + half, x + half, y + UNIT, y + half, x + UNIT, y + half
                ),
            };
            writeln!(s, "<path d=\"{path}\" fill=\"none\" stroke=\"#c33\" stroke-width=\"2\"/>").unwrap();
        }
    }
    let (row_label, col_label) = l.boundary_labels();
    for (r, label) in row_label.iter().enumerate() {
        let x = MARGIN + l.shape()[r] as f64 * UNIT + 4.0;
        let y = MARGIN + (r as f64 + 0.5) * UNIT + 4.0;
        writeln!(s, "<text x=\"{x:.1}\" y=\"{y:.1}\">{label}</text>").unwrap();
    }
    for (c, label) in col_label.iter().enumerate() {
        let depth = l.shape().iter().filter(|&&len| len > c).count();
        let x = MARGIN + (c as f64 + 0.5) * UNIT - 4.0;
        let y = MARGIN + depth as f64 * UNIT + 14.0;
        writeln!(s, "<text x=\"{x:.1}\" y=\"{y:.1}\">{label}</text>").unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Boundary vertices clockwise on a circle, internal vertices at the
/// barycentre of their neighbours.
fn layout(g: &PlabicGraph, radius: f64, centre: f64) -> Vec<(f64, f64)> {
    let total = g.vertex_count();
    let n = g.n();
    let mut pos = vec![(centre, centre); total + 1];
    for i in 1..=n {
        let a = -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (i - 1) as f64 / n as f64;
        pos[i] = (centre + radius * a.cos(), centre + radius * a.sin());
    }
    let internal: Vec<usize> = g.internal_vertices().collect();
    for _ in 0..2000 {
        for &v in &internal {
            let rot = g.rotation(v);
            let (sx, sy) = rot.iter().fold((0.0, 0.0), |acc, &e| {
                let u = g.other_end(e, v);
                (acc.0 + pos[u].0, acc.1 + pos[u].1)
            });
            let k = rot.len() as f64;
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

pub fn plabic_svg(g: &PlabicGraph, orientation: Option<&PerfectOrientation>) -> String {
    let radius = 160.0;
    let centre = radius + MARGIN;
    let size = 2.0 * centre;
    let pos = layout(g, radius, centre);
    let mut s = header(size, size);
    s.push_str(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n",
    );
    writeln!(s, "<circle cx=\"{centre:.1}\" cy=\"{centre:.1}\" r=\"{radius:.1}\" fill=\"none\" stroke=\"#999\"/>").unwrap();
    for e in 0..g.edge_count() {
        let [mut a, mut b] = g.endpoints(e);
        if let Some(o) = orientation {
            if o.tail(g, e) != a {
                std::mem::swap(&mut a, &mut b);
            }
        }
        let (p, q) = (pos[a], pos[b]);
        // stop short of the head so the arrowhead stays visible
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let trim = if orientation.is_some() { 8.0 / len } else { 0.0 };
        let end = (q.0 - dx * trim, q.1 - dy * trim);
        let marker = if orientation.is_some() { " marker-end=\"url(#arrow)\"" } else { "" };
        writeln!(
            s,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\" stroke-width=\"2\"{marker}/>",
            p.0, p.1, end.0, end.1
        )
        .unwrap();
    }
    for v in 1..=g.vertex_count() {
        let (x, y) = pos[v];
        match g.color(v) {
            None => {
                writeln!(s, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"3\" fill=\"black\"/>").unwrap();
                let (lx, ly) = (centre + (x - centre) * 1.08 - 4.0, centre + (y - centre) * 1.08 + 4.0);
                writeln!(s, "<text x=\"{lx:.1}\" y=\"{ly:.1}\">{v}</text>").unwrap();
            }
            Some(c) => {
                let fill = if c == Color::Black { "black" } else { "white" };
                writeln!(s, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"7\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"2\"/>").unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
