//! Local rewrites of plabic graphs.
//!
//! New vertices and edges are always appended, and a rewrite that deletes a
//! vertex or edge shifts later ids down, so that an uncontraction followed by
//! contraction of the new edge (or an insertion followed by removal of the new
//! vertex) reproduces the original graph exactly.

use serde::{Deserialize, Serialize};

use super::{Color, PlabicGraph};
use crate::error::{Error, Result};
use crate::registry::{Named, Registry};

/// Where a move applies. Vertex ids are 1-based, edge ids 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "site", rename_all = "kebab-case")]
pub enum Site {
    /// Four trivalent vertices around a face, in cyclic order.
    Square { vertices: [usize; 4] },
    Edge { edge: usize },
    /// Split off the `len` consecutive edges starting at position `start` of
    /// the vertex's rotation onto a new vertex.
    Split { vertex: usize, start: usize, len: usize },
    Subdivide { edge: usize, color: Color },
    Vertex { vertex: usize },
    /// Two trivalent vertices joined by a pair of parallel edges.
    Bigon { vertices: [usize; 2] },
}

pub trait LocalMove: Named + Send + Sync {
    /// Every site where the move applies, in a deterministic order.
    fn sites(&self, g: &PlabicGraph) -> Vec<Site>;

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph>;

    /// Whether the move is known to leave the trip permutation unchanged.
    fn preserves_trips(&self) -> bool {
        true
    }
}

pub fn local_moves() -> Registry<dyn LocalMove> {
    Registry::<dyn LocalMove>::new("move")
        .with(Box::new(SquareMove))
        .with(Box::new(UnicoloredContraction))
        .with(Box::new(UnicoloredUncontraction))
        .with(Box::new(VertexInsertion))
        .with(Box::new(VertexRemoval))
        .with(Box::new(BigonReduction))
}

fn not_applicable(msg: impl Into<String>) -> Error {
    Error::MoveNotApplicable(msg.into())
}

/// Mutable copy of a graph's parts, indices 0-based.
struct Draft {
    n: usize,
    colors: Vec<Color>,
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
}

impl Draft {
    fn of(g: &PlabicGraph) -> Self {
        Draft {
            n: g.n,
            colors: g.colors.clone(),
            edges: g.edges.clone(),
            rotation: g.rotation.clone(),
        }
    }

    fn finish(self) -> Result<PlabicGraph> {
        PlabicGraph::from_parts(self.n, self.colors, self.edges, self.rotation)
    }

    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    fn set_endpoint(&mut self, e: usize, from: usize, to: usize) {
        let ends = &mut self.edges[e];
        let k = if ends[0] == from { 0 } else { 1 };
        debug_assert_eq!(ends[k], from);
        ends[k] = to;
    }

    fn replace_in_rotation(&mut self, v: usize, old: usize, new: usize) {
        for e in self.rotation[v].iter_mut() {
            if *e == old {
                *e = new;
            }
        }
    }

    fn remove_edge(&mut self, e: usize) {
        self.edges.remove(e);
        for rot in self.rotation.iter_mut() {
            rot.retain(|&x| x != e);
            for x in rot.iter_mut() {
                if *x > e {
                    *x -= 1;
                }
            }
        }
    }

    fn remove_vertex(&mut self, v: usize) {
        debug_assert!(self.rotation[v].is_empty() && v >= self.n);
        self.rotation.remove(v);
        self.colors.remove(v - self.n);
        for ends in self.edges.iter_mut() {
            for x in ends.iter_mut() {
                if *x > v {
                    *x -= 1;
                }
            }
        }
    }
}

fn internal_index(g: &PlabicGraph, v: usize) -> Result<usize> {
    if g.color(v).is_none() {
        return Err(not_applicable(format!("{v} is not an internal vertex")));
    }
    Ok(v - 1)
}

fn edges_between(g: &PlabicGraph, a: usize, b: usize) -> Vec<usize> {
    g.rotation(a).iter().copied().filter(|&e| g.other_end(e, a) == b).collect()
}

fn rotated_to(rot: &[usize], first: usize) -> Vec<usize> {
    let pos = rot.iter().position(|&e| e == first).expect("edge in rotation");
    let mut r = rot.to_vec();
    r.rotate_left(pos);
    r
}

/// Swaps the colours of four trivalent vertices of alternating colour that
/// bound a square face.
pub struct SquareMove;

impl SquareMove {
    fn check(g: &PlabicGraph, vs: [usize; 4]) -> Result<()> {
        for (k, &v) in vs.iter().enumerate() {
            let color = g.color(v).ok_or_else(|| not_applicable(format!("{v} is not internal")))?;
            if g.degree(v) != 3 {
                return Err(not_applicable(format!("vertex {v} is not trivalent")));
            }
            if g.color(vs[(k + 1) % 4]) != Some(color.flip()) {
                return Err(not_applicable("square colours do not alternate"));
            }
            if vs[..k].contains(&v) {
                return Err(not_applicable("square vertices repeat"));
            }
        }
        let mut sides = [0usize; 4];
        for k in 0..4 {
            match edges_between(g, vs[k], vs[(k + 1) % 4]).as_slice() {
                [e] => sides[k] = *e,
                _ => return Err(not_applicable("square sides must be single edges")),
            }
        }
        let (mut cw, mut ccw) = (true, true);
        for k in 0..4 {
            let rot = g.rotation(vs[k]);
            let arrive = sides[(k + 3) % 4];
            let leave = sides[k];
            let pos = rot.iter().position(|&e| e == arrive).expect("incident");
            cw &= rot[(pos + 1) % 3] == leave;
            ccw &= rot[(pos + 2) % 3] == leave;
        }
        if cw || ccw {
            Ok(())
        } else {
            Err(not_applicable("the square does not bound a face"))
        }
    }
}

impl Named for SquareMove {
    fn name(&self) -> &'static str {
        "M1"
    }

    fn description(&self) -> &'static str {
        "square move"
    }
}

impl LocalMove for SquareMove {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        let mut out = Vec::new();
        let neighbours = |v: usize| -> Vec<usize> {
            let mut ns: Vec<usize> = g.rotation(v).iter().map(|&e| g.other_end(e, v)).collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        };
        for v1 in g.internal_vertices() {
            for v2 in neighbours(v1) {
                for v3 in neighbours(v2) {
                    for v4 in neighbours(v3) {
                        let vs = [v1, v2, v3, v4];
                        if v1 < v2.min(v3).min(v4)
                            && v2 < v4
                            && neighbours(v4).contains(&v1)
                            && Self::check(g, vs).is_ok()
                        {
                            out.push(Site::Square { vertices: vs });
                        }
                    }
                }
            }
        }
        out
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Square { vertices } = site else {
            return Err(not_applicable("M1 needs a square site"));
        };
        Self::check(g, *vertices)?;
        let mut draft = Draft::of(g);
        for &v in vertices {
            let k = v - 1 - draft.n;
            draft.colors[k] = draft.colors[k].flip();
        }
        draft.finish()
    }
}

/// Contracts a single edge between two internal vertices of the same colour;
/// the lower-numbered endpoint survives.
pub struct UnicoloredContraction;

impl UnicoloredContraction {
    fn check(g: &PlabicGraph, e: usize) -> Result<(usize, usize)> {
        if e >= g.edge_count() {
            return Err(not_applicable(format!("no edge {e}")));
        }
        let [a, b] = g.endpoints(e);
        let (ca, cb) = (g.color(a), g.color(b));
        if ca.is_none() || ca != cb {
            return Err(not_applicable(format!("edge {e} does not join two internal vertices of one colour")));
        }
        if edges_between(g, a, b).len() != 1 {
            return Err(not_applicable(format!("edge {e} has a parallel edge")));
        }
        Ok((a.min(b), a.max(b)))
    }
}

impl Named for UnicoloredContraction {
    fn name(&self) -> &'static str {
        "M2-contract"
    }

    fn description(&self) -> &'static str {
        "unicolored edge contraction"
    }
}

impl LocalMove for UnicoloredContraction {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        (0..g.edge_count())
            .filter(|&e| Self::check(g, e).is_ok())
            .map(|edge| Site::Edge { edge })
            .collect()
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Edge { edge } = *site else {
            return Err(not_applicable("M2-contract needs an edge site"));
        };
        let (u, w) = Self::check(g, edge)?;
        let (ui, wi) = (u - 1, w - 1);
        let mut draft = Draft::of(g);
        let mut merged: Vec<usize> = rotated_to(&draft.rotation[ui], edge)[1..].to_vec();
        let tail: Vec<usize> = rotated_to(&draft.rotation[wi], edge)[1..].to_vec();
        for &e in &tail {
            draft.set_endpoint(e, wi, ui);
        }
        merged.extend(tail);
        draft.rotation[ui] = merged;
        draft.rotation[wi].clear();
        draft.remove_edge(edge);
        draft.remove_vertex(wi);
        draft.finish()
    }
}

/// Splits an internal vertex into two of the same colour joined by a new edge.
pub struct UnicoloredUncontraction;

impl Named for UnicoloredUncontraction {
    fn name(&self) -> &'static str {
        "M2-uncontract"
    }

    fn description(&self) -> &'static str {
        "unicolored edge uncontraction"
    }
}

impl LocalMove for UnicoloredUncontraction {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        let mut out = Vec::new();
        for vertex in g.internal_vertices() {
            let deg = g.degree(vertex);
            for start in 0..deg {
                for len in 1..deg {
                    out.push(Site::Split { vertex, start, len });
                }
            }
        }
        out
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Split { vertex, start, len } = *site else {
            return Err(not_applicable("M2-uncontract needs a split site"));
        };
        let vi = internal_index(g, vertex)?;
        let deg = g.degree(vertex);
        if start >= deg || len == 0 || len >= deg {
            return Err(not_applicable(format!("cannot split {len} edges at {start} off a degree-{deg} vertex")));
        }
        let mut draft = Draft::of(g);
        let rot = draft.rotation[vi].clone();
        let arc: Vec<usize> = (0..len).map(|i| rot[(start + i) % deg]).collect();
        let rest: Vec<usize> = (0..deg - len).map(|i| rot[(start + len + i) % deg]).collect();
        let wi = draft.vertex_count();
        let f = draft.edges.len();
        let color = draft.colors[vi - draft.n];
        draft.colors.push(color);
        draft.edges.push([vi, wi]);
        for &e in &arc {
            draft.set_endpoint(e, vi, wi);
        }
        draft.rotation[vi] = std::iter::once(f).chain(rest).collect();
        draft.rotation.push(std::iter::once(f).chain(arc).collect());
        draft.finish()
    }
}

/// Subdivides an edge with a new degree-2 vertex of either colour.
pub struct VertexInsertion;

impl Named for VertexInsertion {
    fn name(&self) -> &'static str {
        "M3-insert"
    }

    fn description(&self) -> &'static str {
        "middle vertex insertion"
    }
}

impl LocalMove for VertexInsertion {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        (0..g.edge_count())
            .flat_map(|edge| [Color::Black, Color::White].map(|color| Site::Subdivide { edge, color }))
            .collect()
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Subdivide { edge, color } = *site else {
            return Err(not_applicable("M3-insert needs a subdivide site"));
        };
        if edge >= g.edge_count() {
            return Err(not_applicable(format!("no edge {edge}")));
        }
        let mut draft = Draft::of(g);
        let [_, b] = draft.edges[edge];
        let wi = draft.vertex_count();
        let new_edge = draft.edges.len();
        draft.edges[edge][1] = wi;
        draft.edges.push([wi, b]);
        draft.replace_in_rotation(b, edge, new_edge);
        draft.colors.push(color);
        draft.rotation.push(vec![edge, new_edge]);
        draft.finish()
    }
}

/// Removes a degree-2 internal vertex, merging its two edges into the
/// lower-numbered one.
pub struct VertexRemoval;

impl VertexRemoval {
    fn check(g: &PlabicGraph, v: usize) -> Result<(usize, usize, usize)> {
        internal_index(g, v)?;
        if g.degree(v) != 2 {
            return Err(not_applicable(format!("vertex {v} does not have degree 2")));
        }
        let rot = g.rotation(v);
        let (keep, drop) = (rot[0].min(rot[1]), rot[0].max(rot[1]));
        let (x, y) = (g.other_end(keep, v), g.other_end(drop, v));
        if x == y {
            return Err(not_applicable(format!("removing {v} would create a loop")));
        }
        if g.is_boundary(x) && g.is_boundary(y) {
            return Err(not_applicable(format!("removing {v} would join two boundary vertices")));
        }
        Ok((keep, drop, y))
    }
}

impl Named for VertexRemoval {
    fn name(&self) -> &'static str {
        "M3-remove"
    }

    fn description(&self) -> &'static str {
        "middle vertex removal"
    }
}

impl LocalMove for VertexRemoval {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        g.internal_vertices()
            .filter(|&v| Self::check(g, v).is_ok())
            .map(|vertex| Site::Vertex { vertex })
            .collect()
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Vertex { vertex } = *site else {
            return Err(not_applicable("M3-remove needs a vertex site"));
        };
        let (keep, drop, y) = Self::check(g, vertex)?;
        let (vi, yi) = (vertex - 1, y - 1);
        let mut draft = Draft::of(g);
        draft.set_endpoint(keep, vi, yi);
        draft.replace_in_rotation(yi, drop, keep);
        draft.rotation[vi].clear();
        draft.remove_edge(drop);
        draft.remove_vertex(vi);
        draft.finish()
    }
}

/// Replaces two trivalent vertices of opposite colours joined by a pair of
/// parallel edges with a single edge between their other neighbours.
pub struct BigonReduction;

impl BigonReduction {
    fn check(g: &PlabicGraph, [u, v]: [usize; 2]) -> Result<([usize; 2], usize, usize, usize)> {
        let (cu, cv) = (g.color(u), g.color(v));
        if cu.is_none() || cv.is_none() || cu == cv {
            return Err(not_applicable("bigon needs two internal vertices of opposite colours"));
        }
        if g.degree(u) != 3 || g.degree(v) != 3 {
            return Err(not_applicable("bigon vertices must be trivalent"));
        }
        let pair = edges_between(g, u, v);
        let [p1, p2] = pair[..] else {
            return Err(not_applicable("bigon needs exactly two parallel edges"));
        };
        let third = |w: usize| *g.rotation(w).iter().find(|&&e| e != p1 && e != p2).expect("trivalent");
        let (eu, ev) = (third(u), third(v));
        let (x, y) = (g.other_end(eu, u), g.other_end(ev, v));
        if x == y {
            return Err(not_applicable("bigon's outer neighbours coincide"));
        }
        if g.is_boundary(x) && g.is_boundary(y) {
            return Err(not_applicable("reduction would join two boundary vertices"));
        }
        Ok(([p1, p2], eu, ev, y))
    }
}

impl Named for BigonReduction {
    fn name(&self) -> &'static str {
        "R1"
    }

    fn description(&self) -> &'static str {
        "parallel edge reduction"
    }
}

impl LocalMove for BigonReduction {
    fn sites(&self, g: &PlabicGraph) -> Vec<Site> {
        let mut out = Vec::new();
        for u in g.internal_vertices() {
            for v in u + 1..=g.vertex_count() {
                if Self::check(g, [u, v]).is_ok() {
                    out.push(Site::Bigon { vertices: [u, v] });
                }
            }
        }
        out
    }

    fn apply(&self, g: &PlabicGraph, site: &Site) -> Result<PlabicGraph> {
        let Site::Bigon { vertices } = *site else {
            return Err(not_applicable("R1 needs a bigon site"));
        };
        let ([p1, p2], eu, ev, y) = Self::check(g, vertices)?;
        let [u, v] = vertices;
        let mut draft = Draft::of(g);
        draft.set_endpoint(eu, u - 1, y - 1);
        draft.replace_in_rotation(y - 1, ev, eu);
        draft.rotation[u - 1].clear();
        draft.rotation[v - 1].clear();
        let mut dead = [p1, p2, ev];
        dead.sort_unstable();
        for e in dead.into_iter().rev() {
            draft.remove_edge(e);
        }
        let (hi, lo) = (u.max(v) - 1, u.min(v) - 1);
        draft.remove_vertex(hi);
        draft.remove_vertex(lo);
        draft.finish()
    }

    fn preserves_trips(&self) -> bool {
        false
    }
}
