//! Hand-drawn plabic graphs. Rotations come from integer coordinates (y up),
//! sorted clockwise exactly; boundary vertices are listed clockwise.

#![allow(dead_code)]

use std::cmp::Ordering;

use positroid_core::plabic::{build_plabic, Color, PlabicGraph};
use positroid_core::DyckPath;

type Pt = (i64, i64);

pub struct Drawing {
    boundary: Vec<Pt>,
    internal: Vec<(Color, Pt)>,
    /// Endpoints (1-based, boundary first) and an optional bend point.
    edges: Vec<(usize, usize, Option<Pt>)>,
}

fn half(v: Pt) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn counterclockwise(a: Pt, b: Pt) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| (b.0 * a.1).cmp(&(a.0 * b.1)))
}

impl Drawing {
    pub fn new(boundary: &[Pt]) -> Self {
        Drawing { boundary: boundary.to_vec(), internal: Vec::new(), edges: Vec::new() }
    }

    pub fn vertex(&mut self, color: Color, at: Pt) -> usize {
        self.internal.push((color, at));
        self.boundary.len() + self.internal.len()
    }

    pub fn edge(&mut self, a: usize, b: usize) -> &mut Self {
        self.edges.push((a, b, None));
        self
    }

    pub fn bent_edge(&mut self, a: usize, b: usize, via: Pt) -> &mut Self {
        self.edges.push((a, b, Some(via)));
        self
    }

    fn position(&self, v: usize) -> Pt {
        let n = self.boundary.len();
        if v <= n {
            self.boundary[v - 1]
        } else {
            self.internal[v - n - 1].1
        }
    }

    pub fn build(&self) -> PlabicGraph {
        let n = self.boundary.len();
        let mut rotations = Vec::new();
        for k in 0..self.internal.len() {
            let v = n + 1 + k;
            let here = self.position(v);
            let mut out: Vec<(Pt, usize)> = self
                .edges
                .iter()
                .enumerate()
                .filter_map(|(e, &(a, b, via))| {
                    if a != v && b != v {
                        return None;
                    }
                    let other = if a == v { b } else { a };
                    let toward = via.unwrap_or_else(|| self.position(other));
                    Some(((toward.0 - here.0, toward.1 - here.1), e))
                })
                .collect();
            out.sort_by(|x, y| counterclockwise(x.0, y.0).reverse());
            rotations.push(out.into_iter().map(|(_, e)| e).collect());
        }
        PlabicGraph::new(
            n,
            self.internal.iter().map(|&(c, _)| c).collect(),
            self.edges.iter().map(|&(a, b, _)| [a, b]).collect(),
            rotations,
        )
        .expect("corpus graph is valid")
    }
}

const B: Color = Color::Black;
const W: Color = Color::White;

const SQUARE_CORNERS: [Pt; 4] = [(-10, 10), (10, 10), (10, -10), (-10, -10)];

fn star(color: Color, n: usize) -> PlabicGraph {
    let boundary: &[Pt] = match n {
        2 => &[(-10, 0), (10, 0)],
        3 => &[(0, 10), (9, -5), (-9, -5)],
        _ => &SQUARE_CORNERS,
    };
    let mut g = Drawing::new(boundary);
    let v = g.vertex(color, (0, 0));
    for i in 1..=n {
        g.edge(i, v);
    }
    g.build()
}

fn square(first: Color) -> PlabicGraph {
    let mut g = Drawing::new(&SQUARE_CORNERS);
    let corners = [(-3, 3), (3, 3), (3, -3), (-3, -3)];
    let vs: Vec<usize> = corners
        .iter()
        .enumerate()
        .map(|(i, &p)| g.vertex(if i % 2 == 0 { first } else { first.flip() }, p))
        .collect();
    for i in 0..4 {
        g.edge(i + 1, vs[i]);
        g.edge(vs[i], vs[(i + 1) % 4]);
    }
    g.build()
}

fn bigon() -> PlabicGraph {
    let mut g = Drawing::new(&[(-10, 0), (10, 0)]);
    let b = g.vertex(B, (-3, 0));
    let w = g.vertex(W, (3, 0));
    g.edge(1, b).edge(w, 2).bent_edge(b, w, (0, 3)).bent_edge(b, w, (0, -3));
    g.build()
}

/// Trivalent bigon between two internal vertices that carry the legs.
fn bigon_in_path() -> PlabicGraph {
    let mut g = Drawing::new(&SQUARE_CORNERS);
    let left = g.vertex(W, (-6, 0));
    let b = g.vertex(B, (-2, 0));
    let w = g.vertex(W, (2, 0));
    let right = g.vertex(B, (6, 0));
    g.edge(1, left).edge(4, left).edge(left, b);
    g.bent_edge(b, w, (0, 2)).bent_edge(b, w, (0, -2));
    g.edge(w, right).edge(2, right).edge(3, right);
    g.build()
}

fn two_colour_tree() -> PlabicGraph {
    let mut g = Drawing::new(&SQUARE_CORNERS);
    let b = g.vertex(B, (-3, 0));
    let w = g.vertex(W, (3, 0));
    g.edge(1, b).edge(4, b).edge(2, w).edge(3, w).edge(b, w);
    g.build()
}

fn two_blacks() -> PlabicGraph {
    let mut g = Drawing::new(&SQUARE_CORNERS);
    let a = g.vertex(B, (-3, 0));
    let b = g.vertex(B, (3, 0));
    g.edge(1, a).edge(4, a).edge(2, b).edge(3, b).edge(a, b);
    g.build()
}

fn hexagon() -> PlabicGraph {
    let outer: [Pt; 6] = [(0, 20), (17, 10), (17, -10), (0, -20), (-17, -10), (-17, 10)];
    let inner: [Pt; 6] = [(0, 6), (5, 3), (5, -3), (0, -6), (-5, -3), (-5, 3)];
    let mut g = Drawing::new(&outer);
    let vs: Vec<usize> = inner.iter().enumerate().map(|(i, &p)| g.vertex(if i % 2 == 0 { B } else { W }, p)).collect();
    for i in 0..6 {
        g.edge(i + 1, vs[i]);
        g.edge(vs[i], vs[(i + 1) % 6]);
    }
    g.build()
}

/// Alternating square whose top-left corner carries a white degree-2 vertex
/// on its leg.
fn square_with_middle_vertex() -> PlabicGraph {
    let mut g = Drawing::new(&SQUARE_CORNERS);
    let corners = [(-3, 3), (3, 3), (3, -3), (-3, -3)];
    let vs: Vec<usize> = corners
        .iter()
        .enumerate()
        .map(|(i, &p)| g.vertex(if i % 2 == 0 { B } else { W }, p))
        .collect();
    let mid = g.vertex(W, (-6, 6));
    g.edge(1, mid).edge(mid, vs[0]);
    for i in 0..4 {
        if i > 0 {
            g.edge(i + 1, vs[i]);
        }
        g.edge(vs[i], vs[(i + 1) % 4]);
    }
    g.build()
}

/// At least ten graphs, each named; includes an alternating square and a
/// pair of parallel edges.
pub fn corpus() -> Vec<(&'static str, PlabicGraph)> {
    let mut out = vec![
        ("white-degree-2", star(W, 2)),
        ("black-degree-3", star(B, 3)),
        ("white-degree-3", star(W, 3)),
        ("black-degree-4", star(B, 4)),
        ("square-black-first", square(B)),
        ("square-white-first", square(W)),
        ("bigon", bigon()),
        ("bigon-in-path", bigon_in_path()),
        ("two-colour-tree", two_colour_tree()),
        ("two-blacks", two_blacks()),
        ("hexagon", hexagon()),
        ("square-with-middle-vertex", square_with_middle_vertex()),
    ];
    for p in ["EEN", "EENEN", "EEENENEENEENN"] {
        let path: DyckPath = p.parse().unwrap();
        out.push((p, build_plabic(&path)));
    }
    out
}
