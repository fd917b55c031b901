use serde::Serialize;

use super::{graph_type, Color, PlabicGraph};
use crate::error::{Error, Result};
use crate::positroid::Positroid;
use crate::subset::Subset;

/// `forward[e]` directs edge `e` from its first endpoint to its second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PerfectOrientation {
    pub forward: Vec<bool>,
}

impl PerfectOrientation {
    /// Boundary vertices whose edge points into the graph.
    pub fn sources(&self, g: &PlabicGraph) -> Subset {
        Subset::from_elements((1..=g.n()).filter(|&i| {
            let e = g.rotation(i)[0];
            (g.endpoints(e)[0] == i) == self.forward[e]
        }))
    }

    pub fn tail(&self, g: &PlabicGraph, e: usize) -> usize {
        let [a, b] = g.endpoints(e);
        if self.forward[e] {
            a
        } else {
            b
        }
    }
}

/// Every orientation with black out-degree one and white in-degree one, in
/// increasing order of the bitmask `sum_e forward[e] 2^e`.
pub fn perfect_orientations(g: &PlabicGraph) -> Vec<PerfectOrientation> {
    let total = g.vertex_count();
    let mut state = Search {
        g,
        out: vec![0; total + 1],
        undecided: (0..=total).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect(),
        forward: vec![false; g.edge_count()],
        found: Vec::new(),
    };
    state.extend(0);
    let mut found = state.found;
    found.sort_by(|a, b| a.forward.iter().rev().cmp(b.forward.iter().rev()));
    found
}

struct Search<'a> {
    g: &'a PlabicGraph,
    out: Vec<usize>,
    undecided: Vec<usize>,
    forward: Vec<bool>,
    found: Vec<PerfectOrientation>,
}

impl Search<'_> {
    fn feasible(&self, v: usize) -> bool {
        let deg = self.g.degree(v);
        let out = self.out[v];
        let inn = deg - out - self.undecided[v];
        match self.g.color(v) {
            None => true,
            Some(Color::Black) => out <= 1 && out + self.undecided[v] >= 1,
            Some(Color::White) => inn <= 1 && inn + self.undecided[v] >= 1,
        }
    }

    fn extend(&mut self, e: usize) {
        if e == self.forward.len() {
            self.found.push(PerfectOrientation { forward: self.forward.clone() });
            return;
        }
        let [a, b] = self.g.endpoints(e);
        for dir in [false, true] {
            let tail = if dir { a } else { b };
            self.forward[e] = dir;
            self.out[tail] += 1;
            self.undecided[a] -= 1;
            self.undecided[b] -= 1;
            if self.feasible(a) && self.feasible(b) {
                self.extend(e + 1);
            }
            self.out[tail] -= 1;
            self.undecided[a] += 1;
            self.undecided[b] += 1;
        }
    }
}

/// Boundary source sets of all perfect orientations.
pub fn positroid_from_plabic(g: &PlabicGraph) -> Result<Positroid> {
    let orientations = perfect_orientations(g);
    if orientations.is_empty() {
        return Err(Error::NotOrientable);
    }
    let (d, n) = graph_type(g)?;
    let sources: Vec<Subset> = orientations.iter().map(|o| o.sources(g)).collect();
    if let Some(bad) = sources.iter().find(|s| s.len() != d) {
        return Err(Error::internal(format!(
            "source set {bad:?} does not have the graph's rank {d}"
        )));
    }
    Positroid::new(n, d, sources)
}
