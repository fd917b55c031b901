//! Plabic graphs stored as rotation systems.
//!
//! Vertex ids are 1-based: `1..=n` are the boundary vertices in clockwise
//! order, internal vertices follow. Edge ids are 0-based indices into the edge
//! list. Each vertex keeps the clockwise cyclic order of its incident edges,
//! normalised to start at the smallest edge id.

mod moves;
mod orientation;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::permutation::{Decoration, DecoratedPermutation};

pub use moves::{
    local_moves, BigonReduction, LocalMove, Site, SquareMove, UnicoloredContraction,
    UnicoloredUncontraction, VertexInsertion, VertexRemoval,
};
pub use orientation::{perfect_orientations, positroid_from_plabic, PerfectOrientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct PlabicGraph {
    n: usize,
    /// Colour of internal vertex `n + 1 + k` at index `k`.
    colors: Vec<Color>,
    /// Endpoints as 0-based vertex indices.
    edges: Vec<[usize; 2]>,
    /// Clockwise incident edges of every vertex (0-based vertex index).
    rotation: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct InternalJson {
    id: usize,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    internal: Vec<InternalJson>,
    edges: Vec<[usize; 2]>,
    rotations: BTreeMap<usize, Vec<usize>>,
}

fn canonical_rotation(mut r: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = r.iter().enumerate().min_by_key(|(_, &e)| e).map(|(i, _)| i) {
        r.rotate_left(pos);
    }
    r
}

impl PlabicGraph {
    /// `edges` use 1-based vertex ids; `rotations[k]` is the clockwise edge
    /// order at internal vertex `n + 1 + k`.
    pub fn new(
        n: usize,
        colors: Vec<Color>,
        edges: Vec<[usize; 2]>,
        rotations: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let total = n + colors.len();
        if rotations.len() != colors.len() {
            return Err(Error::MalformedGraph("one rotation per internal vertex is required".into()));
        }
        let mut zero_based = Vec::with_capacity(edges.len());
        for (e, &[a, b]) in edges.iter().enumerate() {
            if !(1..=total).contains(&a) || !(1..=total).contains(&b) {
                return Err(Error::MalformedGraph(format!("edge {e} has an unknown endpoint")));
            }
            zero_based.push([a - 1, b - 1]);
        }
        let mut rotation = vec![Vec::new(); n];
        for (e, &[a, b]) in zero_based.iter().enumerate() {
            for v in [a, b] {
                if v < n {
                    rotation[v].push(e);
                }
            }
        }
        rotation.extend(rotations);
        Self::from_parts(n, colors, zero_based, rotation)
    }

    fn from_parts(
        n: usize,
        colors: Vec<Color>,
        edges: Vec<[usize; 2]>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let g = PlabicGraph {
            n,
            colors,
            edges,
            rotation: rotation.into_iter().map(canonical_rotation).collect(),
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedGraph(msg));
        let total = self.vertex_count();
        if self.n == 0 {
            return bad("at least one boundary vertex is required".into());
        }
        if self.colors.is_empty() {
            return bad("at least one internal vertex is required".into());
        }
        let mut incident = vec![Vec::new(); total];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if a == b {
                return bad(format!("edge {e} is a loop"));
            }
            if a < self.n && b < self.n {
                return bad(format!("edge {e} joins two boundary vertices"));
            }
            incident[a].push(e);
            incident[b].push(e);
        }
        for v in 0..total {
            let mut got = self.rotation[v].clone();
            got.sort_unstable();
            if got != incident[v] {
                return bad(format!(
                    "rotation at vertex {} does not list its incident edges exactly once",
                    v + 1
                ));
            }
            let deg = incident[v].len();
            if v < self.n && deg != 1 {
                return bad(format!("boundary vertex {} has degree {deg}", v + 1));
            }
            if v >= self.n && deg < 2 {
                return bad(format!("internal vertex {} has degree {deg}", v + 1));
            }
        }
        if !self.is_connected() {
            return bad("graph is not connected".into());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// 1-based internal vertex ids.
    pub fn internal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.n + 1..=self.vertex_count()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Colour of an internal vertex id.
    pub fn color(&self, v: usize) -> Option<Color> {
        v.checked_sub(self.n + 1).and_then(|k| self.colors.get(k)).copied()
    }

    /// Endpoints of edge `e` as 1-based ids.
    pub fn endpoints(&self, e: usize) -> [usize; 2] {
        let [a, b] = self.edges[e];
        [a + 1, b + 1]
    }

    /// Clockwise incident edges of vertex id `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v - 1].len()
    }

    /// The endpoint of `e` other than `v` (ids).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_connected(&self) -> bool {
        let total = self.vertex_count();
        let mut seen = vec![false; total];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &self.rotation[v] {
                let [a, b] = self.edges[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Boundary vertex reached by the trip entering at boundary vertex `i`.
    /// Trips turn to the clockwise successor of the arrival edge at black
    /// vertices and to the counterclockwise successor at white ones.
    pub fn trip(&self, i: usize) -> usize {
        self.trip_walk(i).last().copied().unwrap_or(i)
    }

    /// Vertex ids visited by the trip from boundary vertex `i`, inclusive.
    pub fn trip_walk(&self, i: usize) -> Vec<usize> {
        let mut walk = vec![i];
        let mut edge = self.rotation[i - 1][0];
        let mut at = i;
        for _ in 0..=2 * self.edges.len() {
            let next = self.other_end(edge, at);
            walk.push(next);
            if self.is_boundary(next) {
                return walk;
            }
            let rot = self.rotation(next);
            let pos = rot.iter().position(|&x| x == edge).expect("edge is incident");
            let deg = rot.len();
            edge = match self.color(next).expect("internal") {
                Color::Black => rot[(pos + 1) % deg],
                Color::White => rot[(pos + deg - 1) % deg],
            };
            at = next;
        }
        unreachable!("trips follow a bijection on directed edges and must end on the boundary")
    }

    pub fn edge_list(&self) -> Vec<[usize; 2]> {
        (0..self.edges.len()).map(|e| self.endpoints(e)).collect()
    }
}

impl TryFrom<GraphJson> for PlabicGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let mut internal = j.internal;
        internal.sort_by_key(|v| v.id);
        let k = internal.len();
        if internal.iter().enumerate().any(|(idx, v)| v.id != j.n + 1 + idx) {
            return Err(Error::MalformedGraph(format!(
                "internal ids must be {}..={}",
                j.n + 1,
                j.n + k
            )));
        }
        let mut rotations = Vec::with_capacity(k);
        for v in &internal {
            let r = j.rotations.get(&v.id).cloned().ok_or_else(|| {
                Error::MalformedGraph(format!("missing rotation for vertex {}", v.id))
            })?;
            if r.iter().any(|&e| e >= j.edges.len()) {
                return Err(Error::MalformedGraph(format!("rotation of {} names an unknown edge", v.id)));
            }
            rotations.push(r);
        }
        if let Some(extra) = j.rotations.keys().find(|&&id| id <= j.n || id > j.n + k) {
            return Err(Error::MalformedGraph(format!("rotation given for non-internal vertex {extra}")));
        }
        PlabicGraph::new(j.n, internal.into_iter().map(|v| v.color).collect(), j.edges, rotations)
    }
}

impl From<PlabicGraph> for GraphJson {
    fn from(g: PlabicGraph) -> Self {
        GraphJson {
            n: g.n,
            internal: g
                .internal_vertices()
                .map(|id| InternalJson { id, color: g.color(id).expect("internal") })
                .collect(),
            edges: g.edge_list(),
            rotations: g.internal_vertices().map(|id| (id, g.rotation(id).to_vec())).collect(),
        }
    }
}

/// The tree `G_d`: one internal vertex per step (black for `N`, white for
/// `E`) joined along the path, each also joined to the boundary vertex that
/// carries its step's southwest label.
pub fn build_plabic(p: &DyckPath) -> PlabicGraph {
    let n = p.n();
    let labels = p.step_labels();
    let mut edges = Vec::with_capacity(2 * n - 1);
    let mut leg = Vec::with_capacity(n);
    let mut forward = Vec::with_capacity(n);
    for k in 0..n {
        leg.push(edges.len());
        edges.push([labels[k] - 1, n + k]);
        if k + 1 < n {
            forward.push(edges.len());
            edges.push([n + k, n + k + 1]);
        }
    }
    let colors: Vec<Color> = p
        .steps()
        .iter()
        .map(|s| match s {
            Step::North => Color::Black,
            Step::East => Color::White,
        })
        .collect();
    let mut rotation: Vec<Vec<usize>> = (0..n).map(|i| vec![leg[labels.iter().position(|&l| l == i + 1).expect("label")]]).collect();
    for k in 0..n {
        let next = forward.get(k).copied();
        let prev = k.checked_sub(1).map(|j| forward[j]);
        let order: [Option<usize>; 3] = match colors[k] {
            Color::Black => [next, Some(leg[k]), prev],
            Color::White => [Some(leg[k]), next, prev],
        };
        rotation.push(order.into_iter().flatten().collect());
    }
    PlabicGraph::from_parts(n, colors, edges, rotation).expect("G_d is a valid plabic graph")
}

/// `(d, n)` with `d = (n + sum_black(deg-2) + sum_white(2-deg)) / 2`.
pub fn graph_type(g: &PlabicGraph) -> Result<(usize, usize)> {
    let mut twice: i64 = g.n as i64;
    for v in g.internal_vertices() {
        let deg = g.degree(v) as i64;
        twice += match g.color(v).expect("internal") {
            Color::Black => deg - 2,
            Color::White => 2 - deg,
        };
    }
    if twice < 0 || twice % 2 != 0 || twice / 2 > g.n as i64 {
        return Err(Error::MalformedGraph(format!("type formula gives d = {twice}/2")));
    }
    Ok(((twice / 2) as usize, g.n))
}

/// Fixed points are clockwise next to a black vertex, counterclockwise next
/// to a white one.
pub fn trip_permutation(g: &PlabicGraph) -> DecoratedPermutation {
    let images: Vec<usize> = (1..=g.n).map(|i| g.trip(i)).collect();
    let decorations = (1..=g.n)
        .filter(|&i| images[i - 1] == i)
        .map(|i| {
            let nb = g.other_end(g.rotation(i)[0], i);
            let dec = match g.color(nb) {
                Some(Color::Black) => Decoration::Clockwise,
                _ => Decoration::Counterclockwise,
            };
            (i, dec)
        })
        .collect();
    DecoratedPermutation::new(images, decorations).expect("trips define a permutation")
}

pub fn is_tree(g: &PlabicGraph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::desk_paths;
    use crate::permutation::southwest_perm;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn small_g_d() {
        let g = build_plabic(&path("EEN"));
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 5));
        let colors: Vec<Color> = g.internal_vertices().map(|v| g.color(v).unwrap()).collect();
        assert_eq!(colors, vec![Color::White, Color::White, Color::Black]);
        assert!(is_tree(&g));
        assert_eq!(trip_permutation(&g).cycle_string(), "(1 3 2)");
        assert_eq!(graph_type(&g).unwrap(), (1, 3));
    }

    #[test]
    fn three_two_g_d() {
        let g = build_plabic(&path("EENEN"));
        let census: Vec<(Color, usize)> =
            g.internal_vertices().map(|v| (g.color(v).unwrap(), g.degree(v))).collect();
        use Color::{Black as B, White as W};
        assert_eq!(census, vec![(W, 2), (W, 3), (B, 3), (W, 3), (B, 2)]);
        assert_eq!(graph_type(&g).unwrap(), (2, 5));
        assert_eq!(trip_permutation(&g).cycle_string(), "(1 5 2 4 3)");
    }

    #[test]
    fn trips_match_southwest_on_desk() {
        for p in desk_paths(10) {
            let g = build_plabic(&p);
            assert!(is_tree(&g));
            assert_eq!(graph_type(&g).unwrap(), (p.d(), p.n()));
            assert_eq!(trip_permutation(&g), southwest_perm(&p), "{p}");
        }
    }

    #[test]
    fn single_vertex_graphs() {
        let g = PlabicGraph::new(2, vec![Color::White], vec![[1, 3], [2, 3]], vec![vec![0, 1]]).unwrap();
        assert_eq!(trip_permutation(&g).cycle_string(), "(1 2)");
        assert_eq!(graph_type(&g).unwrap(), (1, 2));
        let g = PlabicGraph::new(
            3,
            vec![Color::Black],
            vec![[1, 4], [2, 4], [3, 4]],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        assert_eq!(graph_type(&g).unwrap(), (2, 3));
        assert_eq!(trip_permutation(&g).cycle_string(), "(1 2 3)");
    }

    #[test]
    fn construction_rejects_bad_graphs() {
        // two disjoint edges
        let r = PlabicGraph::new(
            2,
            vec![Color::White, Color::White],
            vec![[1, 3], [2, 4]],
            vec![vec![0], vec![1]],
        );
        assert!(matches!(r, Err(Error::MalformedGraph(_))));
        // rotation missing an edge
        let r = PlabicGraph::new(2, vec![Color::White], vec![[1, 3], [2, 3]], vec![vec![0]]);
        assert!(r.is_err());
        // leaf internal vertex
        let r = PlabicGraph::new(
            1,
            vec![Color::White, Color::Black],
            vec![[1, 2], [2, 3]],
            vec![vec![0, 1], vec![1]],
        );
        assert!(r.is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = build_plabic(&path("EENEN"));
        let s = serde_json::to_string(&g).unwrap();
        let back: PlabicGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["internal"].as_array().unwrap().len(), 5);
        assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    }
}
