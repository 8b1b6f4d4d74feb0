//! Plane bipolar orientations.
//!
//! Conventions used throughout the crate: the source `S` is the root vertex,
//! edges point "upward", and the root half-edge is the leftmost outgoing edge
//! of `S`. Around a non-pole vertex the counterclockwise rotation lists the
//! outgoing edges from right to left followed by the ingoing edges from left
//! to right.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::planar::{HalfEdgeRecord, MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipolarError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("orientation has {got} entries, map has {expected} edges")]
    OrientationLength { expected: usize, got: usize },
    #[error("source {0} is not the root vertex or has an ingoing edge")]
    SourceNotAtRoot(usize),
    #[error("sink {0} has an outgoing edge")]
    SinkHasOutgoing(usize),
    #[error("vertex {0} is a second source")]
    MultipleSources(usize),
    #[error("vertex {0} is a second sink")]
    MultipleSinks(usize),
    #[error("orientation has a directed cycle")]
    Cyclic,
    #[error("vertex {0} does not have exactly two lateral corners")]
    LateralCornerViolation(usize),
    #[error("face {0} does not have exactly two extremal corners")]
    ExtremalCornerViolation(usize),
    #[error("sink {0} is not incident to the outer face")]
    SinkNotOnOuterFace(usize),
}

/// Type `(i, j)` of a face: its left lateral path has `i + 1` edges and its
/// right lateral path `j + 1` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceType {
    pub i: usize,
    pub j: usize,
}

impl FaceType {
    pub fn new(i: usize, j: usize) -> Self {
        FaceType { i, j }
    }

    pub fn degree(&self) -> usize {
        self.i + self.j + 2
    }

    pub fn has_zero_entry(&self) -> bool {
        self.i == 0 || self.j == 0
    }
}

impl fmt::Display for FaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Boundary description of one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInfo {
    pub outer: bool,
    pub bottom: usize,
    pub top: usize,
    /// Edges of the left lateral path, bottom to top.
    pub left: Vec<usize>,
    /// Edges of the right lateral path, bottom to top.
    pub right: Vec<usize>,
}

impl FaceInfo {
    pub fn face_type(&self) -> FaceType {
        FaceType::new(self.left.len() - 1, self.right.len() - 1)
    }
}

/// Left-to-right lists of outgoing and ingoing edges at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Upward {
    /// `edges[e] = (tail, head)`.
    pub edges: Vec<(usize, usize)>,
    pub outs: Vec<Vec<usize>>,
    pub ins: Vec<Vec<usize>>,
}

impl Upward {
    pub fn with_vertices(n: usize) -> Self {
        Upward { edges: Vec::new(), outs: vec![Vec::new(); n], ins: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.outs.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.outs.push(Vec::new());
        self.ins.push(Vec::new());
        self.outs.len() - 1
    }

    /// Adds an edge without registering it in the rotation lists.
    pub fn add_edge(&mut self, tail: usize, head: usize) -> usize {
        self.edges.push((tail, head));
        self.edges.len() - 1
    }

    /// Assemble the map; the root is the leftmost outgoing edge of `source`.
    pub fn build(&self, source: usize, sink: usize) -> Result<BipolarMap, BipolarError> {
        let rotations: Vec<Vec<usize>> = (0..self.vertex_count())
            .map(|v| {
                let mut rot: Vec<usize> = self.outs[v].iter().rev().map(|&e| 2 * e).collect();
                rot.extend(self.ins[v].iter().map(|&e| 2 * e + 1));
                rot
            })
            .collect();
        let root = 2 * *self.outs[source].first().ok_or(MapError::Empty)?;
        let map = PlanarMap::from_rotations(self.vertex_count(), &self.edges, &rotations, root)?;
        let orientation = vec![true; self.edges.len()];
        validate_bipolar(map, orientation, source, sink)
    }

    /// Drop unused vertex slots and renumber edges densely.
    pub fn compact(&self, keep_vertex: &[bool], keep_edge: &[bool]) -> (Upward, Vec<Option<usize>>) {
        let mut vmap = vec![None; self.vertex_count()];
        let mut out = Upward::default();
        for v in 0..self.vertex_count() {
            if keep_vertex[v] {
                vmap[v] = Some(out.add_vertex());
            }
        }
        let mut emap = vec![None; self.edges.len()];
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            if keep_edge[e] {
                emap[e] = Some(out.add_edge(vmap[t].unwrap(), vmap[h].unwrap()));
            }
        }
        for v in 0..self.vertex_count() {
            if let Some(nv) = vmap[v] {
                out.outs[nv] = self.outs[v].iter().filter_map(|&e| emap[e]).collect();
                out.ins[nv] = self.ins[v].iter().filter_map(|&e| emap[e]).collect();
            }
        }
        (out, vmap)
    }
}

/// Verdicts of the two independent characterisations of bipolarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipolarChecks {
    /// Acyclic with `S` the only source and `N` the only sink on the outer face.
    pub global: bool,
    /// Local conditions at vertices and faces, poles and outer face.
    pub local: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipolarMap {
    map: PlanarMap,
    orientation: Vec<bool>,
    source: usize,
    sink: usize,
}

fn is_out_in(orientation: &[bool], h: usize) -> bool {
    orientation[h / 2] == (h % 2 == 0)
}

/// Order in which vertices are inspected: first appearance in canonical
/// half-edge order.
fn vertex_scan_order(map: &PlanarMap) -> Vec<usize> {
    let m = map.half_edge_count();
    let mut seen_h = vec![false; m];
    let mut seen_v = vec![false; map.vertex_count()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([map.root()]);
    seen_h[map.root()] = true;
    while let Some(h) = queue.pop_front() {
        let v = map.origin(h);
        if !seen_v[v] {
            seen_v[v] = true;
            order.push(v);
        }
        for g in [h ^ 1, map.next(h)] {
            if !seen_h[g] {
                seen_h[g] = true;
                queue.push_back(g);
            }
        }
    }
    order
}

fn local_violation(map: &PlanarMap, orientation: &[bool], source: usize, sink: usize) -> Option<BipolarError> {
    let out = |h: usize| is_out_in(orientation, h);
    let rotations = map.rotations();
    for v in vertex_scan_order(map) {
        let rot = &rotations[v];
        let outs = rot.iter().filter(|&&h| out(h)).count();
        if v == source {
            if outs != rot.len() {
                return Some(BipolarError::SourceNotAtRoot(v));
            }
            continue;
        }
        if v == sink {
            if outs != 0 {
                return Some(BipolarError::SinkHasOutgoing(v));
            }
            continue;
        }
        if outs == rot.len() {
            return Some(BipolarError::MultipleSources(v));
        }
        if outs == 0 {
            return Some(BipolarError::MultipleSinks(v));
        }
        let lateral = rot.iter().filter(|&&h| out(h) != out(map.next(h))).count();
        if lateral != 2 {
            return Some(BipolarError::LateralCornerViolation(v));
        }
    }
    let faces = map.faces();
    let mut order: Vec<usize> = Vec::new();
    let mut seen = vec![false; faces.orbits.len()];
    for h in canonical_half_edge_order(map) {
        let f = faces.face_of[h];
        if !seen[f] {
            seen[f] = true;
            order.push(f);
        }
    }
    for f in order {
        // corner at the head of g lies between twin(g) and face_next(g)
        let extremal = faces.orbits[f].iter().filter(|&&g| out(g ^ 1) == out(map.face_next(g))).count();
        if extremal != 2 {
            return Some(BipolarError::ExtremalCornerViolation(f));
        }
    }
    None
}

fn canonical_half_edge_order(map: &PlanarMap) -> Vec<usize> {
    let m = map.half_edge_count();
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut queue = VecDeque::from([map.root()]);
    seen[map.root()] = true;
    while let Some(h) = queue.pop_front() {
        order.push(h);
        for g in [h ^ 1, map.next(h)] {
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
    }
    order
}

fn is_acyclic(map: &PlanarMap, orientation: &[bool]) -> bool {
    let n = map.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..map.edge_count() {
        let (t, h) = if orientation[e] { (map.origin(2 * e), map.origin(2 * e + 1)) } else { (map.origin(2 * e + 1), map.origin(2 * e)) };
        succ[t].push(h);
        indeg[h] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut done = 0;
    while let Some(v) = stack.pop() {
        done += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    done == n
}

fn sink_on_outer_face(map: &PlanarMap, sink: usize) -> bool {
    let faces = map.faces();
    faces.orbits[faces.outer].iter().any(|&g| map.origin(g) == sink)
}

fn global_ok(map: &PlanarMap, orientation: &[bool], source: usize, sink: usize) -> bool {
    if map.root_vertex() != source || !is_acyclic(map, orientation) {
        return false;
    }
    let n = map.vertex_count();
    let mut has_in = vec![false; n];
    let mut has_out = vec![false; n];
    for h in 0..map.half_edge_count() {
        if is_out_in(orientation, h) {
            has_out[map.origin(h)] = true;
        } else {
            has_in[map.origin(h)] = true;
        }
    }
    let sources: Vec<usize> = (0..n).filter(|&v| !has_in[v]).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| !has_out[v]).collect();
    sources == [source] && sinks == [sink] && sink_on_outer_face(map, sink)
}

/// Run both characterisations of plane bipolar orientations on a map.
pub fn bipolar_checks(map: &PlanarMap, orientation: &[bool], source: usize, sink: usize) -> BipolarChecks {
    let local = map.root_vertex() == source
        && local_violation(map, orientation, source, sink).is_none()
        && sink_on_outer_face(map, sink);
    BipolarChecks { global: global_ok(map, orientation, source, sink), local }
}

/// Check that `orientation` makes `map` a plane bipolar orientation with
/// source `source` and sink `sink`. Local conditions are reported first,
/// vertex by vertex and then face by face, in canonical order.
pub fn validate_bipolar(map: PlanarMap, orientation: Vec<bool>, source: usize, sink: usize) -> Result<BipolarMap, BipolarError> {
    if orientation.len() != map.edge_count() {
        return Err(BipolarError::OrientationLength { expected: map.edge_count(), got: orientation.len() });
    }
    if map.root_vertex() != source {
        return Err(BipolarError::SourceNotAtRoot(source));
    }
    if let Some(err) = local_violation(&map, &orientation, source, sink) {
        return Err(err);
    }
    if !is_acyclic(&map, &orientation) {
        return Err(BipolarError::Cyclic);
    }
    if !sink_on_outer_face(&map, sink) {
        return Err(BipolarError::SinkNotOnOuterFace(sink));
    }
    let checks = bipolar_checks(&map, &orientation, source, sink);
    assert!(checks.global && checks.local, "bipolar characterisations disagree: {checks:?}");
    Ok(BipolarMap { map, orientation, source, sink })
}

impl BipolarMap {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn orientation(&self) -> &[bool] {
        &self.orientation
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    /// Whether half-edge `h` leaves its origin.
    #[inline]
    pub fn is_out(&self, h: usize) -> bool {
        is_out_in(&self.orientation, h)
    }

    /// `(tail, head)` of edge `e`.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        let up = self.up_half(e);
        (self.map.origin(up), self.map.target(up))
    }

    /// The half-edge of `e` pointing along its orientation.
    #[inline]
    pub fn up_half(&self, e: usize) -> usize {
        if self.orientation[e] {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Left-to-right incidence lists.
    pub fn upward(&self) -> Upward {
        let map = &self.map;
        let n = map.vertex_count();
        let mut up = Upward::with_vertices(n);
        up.edges = (0..map.edge_count()).map(|e| self.ends(e)).collect();
        let rotations = map.rotations();
        let faces = map.faces();
        for v in 0..n {
            let rot = &rotations[v];
            let start = if v == self.source {
                map.next(map.root())
            } else if v == self.sink {
                let g = *faces.orbits[faces.outer]
                    .iter()
                    .find(|&&g| map.target(g) == v)
                    .expect("sink lies on the outer face");
                map.face_next(g)
            } else {
                *rot.iter().find(|&&h| self.is_out(h) && !self.is_out(map.prev(h))).expect("lateral corner")
            };
            for h in map.rotation_from(start) {
                if self.is_out(h) {
                    up.outs[v].insert(0, h / 2);
                } else {
                    up.ins[v].push(h / 2);
                }
            }
        }
        up
    }

    /// Boundaries of every face, indexed like `PlanarMap::faces`.
    pub fn face_infos(&self) -> Vec<FaceInfo> {
        let map = &self.map;
        let faces = map.faces();
        faces
            .orbits
            .iter()
            .enumerate()
            .map(|(f, orbit)| {
                let k = orbit.len();
                let start = (0..k)
                    .find(|&idx| {
                        let g = orbit[idx];
                        !self.is_out(g) && self.is_out(map.face_next(g))
                    })
                    .map(|idx| (idx + 1) % k)
                    .expect("face has a bottom corner");
                let seq: Vec<usize> = (0..k).map(|t| orbit[(start + t) % k]).collect();
                let ups: Vec<usize> = seq.iter().filter(|&&g| self.is_out(g)).map(|&g| g / 2).collect();
                let mut downs: Vec<usize> = seq.iter().filter(|&&g| !self.is_out(g)).map(|&g| g / 2).collect();
                downs.reverse();
                let outer = f == faces.outer;
                let bottom = map.origin(seq[0]);
                let top = map.target(*seq.iter().rfind(|&&g| self.is_out(g)).unwrap());
                let (left, right) = if outer { (downs, ups) } else { (ups, downs) };
                FaceInfo { outer, bottom, top, left, right }
            })
            .collect()
    }

    pub fn outer_face(&self) -> usize {
        self.map.faces().outer
    }

    pub fn face_type(&self, face: usize) -> FaceType {
        self.face_infos()[face].face_type()
    }

    pub fn outer_type(&self) -> FaceType {
        let infos = self.face_infos();
        infos.iter().find(|f| f.outer).unwrap().face_type()
    }

    /// Types of the inner faces, in face-index order.
    pub fn inner_face_types(&self) -> Vec<FaceType> {
        self.face_infos().iter().filter(|f| !f.outer).map(|f| f.face_type()).collect()
    }

    /// `(p, q)` with `p + 1 = deg(S)` and `q + 1 = deg(N)`.
    pub fn pole_type(&self) -> (usize, usize) {
        (self.map.degree(self.source) - 1, self.map.degree(self.sink) - 1)
    }

    /// Inner face indices (into `face_infos`) in order.
    pub fn inner_faces(&self) -> Vec<usize> {
        let outer = self.outer_face();
        (0..self.map.faces().orbits.len()).filter(|&f| f != outer).collect()
    }

    pub fn canonical(&self) -> BipolarMap {
        let (map, relabel) = self.map.canonical();
        let mut orientation = vec![true; self.orientation.len()];
        for (old, &(new, flipped)) in relabel.edge_map.iter().enumerate() {
            orientation[new] = self.orientation[old] != flipped;
        }
        BipolarMap {
            map,
            orientation,
            source: relabel.vertex_map[self.source],
            sink: relabel.vertex_map[self.sink],
        }
    }

    pub fn canonical_with_relabelling(&self) -> (BipolarMap, super::planar::Relabelling) {
        let (map, relabel) = self.map.canonical();
        let mut orientation = vec![true; self.orientation.len()];
        for (old, &(new, flipped)) in relabel.edge_map.iter().enumerate() {
            orientation[new] = self.orientation[old] != flipped;
        }
        let b = BipolarMap { map, orientation, source: relabel.vertex_map[self.source], sink: relabel.vertex_map[self.sink] };
        (b, relabel)
    }

    /// True iff the orientation has no transitive edge. Both the face-type
    /// criterion and a reachability search are evaluated and must agree.
    pub fn is_poset(&self) -> bool {
        let by_faces = self.poset_by_face_types();
        let by_paths = self.poset_by_reachability();
        assert_eq!(by_faces, by_paths, "poset criteria disagree");
        by_faces
    }

    pub fn poset_by_face_types(&self) -> bool {
        !self.inner_face_types().iter().any(|t| t.has_zero_entry())
    }

    pub fn poset_by_reachability(&self) -> bool {
        let up = self.upward();
        let n = up.vertex_count();
        for (e, &(t, h)) in up.edges.iter().enumerate() {
            let mut seen = vec![false; n];
            let mut stack = vec![t];
            seen[t] = true;
            while let Some(v) = stack.pop() {
                for &f in &up.outs[v] {
                    if f == e {
                        continue;
                    }
                    let w = up.edges[f].1;
                    if w == h {
                        return false;
                    }
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        true
    }

    pub fn non_pole_vertices(&self) -> usize {
        self.vertex_count() - 2
    }

    pub fn to_json(&self) -> MapJson {
        MapJson::from_parts(&self.map, Some(&self.orientation), None)
    }

    pub fn from_json(json: &MapJson) -> Result<BipolarMap, BipolarError> {
        let map = json.planar()?;
        let orientation = json.orientation.clone();
        if orientation.len() != map.edge_count() {
            return Err(BipolarError::OrientationLength { expected: map.edge_count(), got: orientation.len() });
        }
        let source = map.root_vertex();
        let mut has_out = vec![false; map.vertex_count()];
        for h in 0..map.half_edge_count() {
            if is_out_in(&orientation, h) {
                has_out[map.origin(h)] = true;
            }
        }
        let sinks: Vec<usize> = (0..map.vertex_count()).filter(|&v| !has_out[v]).collect();
        let sink = match sinks.as_slice() {
            [s] => *s,
            [] => return Err(BipolarError::Cyclic),
            [_, second, ..] => return Err(BipolarError::MultipleSinks(*second)),
        };
        validate_bipolar(map, orientation, source, sink)
    }
}

/// Edge colours of transversal structures; `Outer` marks the four edges of
/// the outer quadrangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
    Outer,
}

/// JSON exchange format for maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub vertices: usize,
    pub half_edges: Vec<HalfEdgeRecord>,
    pub root: usize,
    pub orientation: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<EdgeColor>>,
}

impl MapJson {
    pub fn from_parts(map: &PlanarMap, orientation: Option<&[bool]>, colors: Option<&[EdgeColor]>) -> Self {
        let (vertices, half_edges, root) = map.to_records();
        MapJson {
            vertices,
            half_edges,
            root,
            orientation: orientation.map(|o| o.to_vec()).unwrap_or_else(|| vec![true; map.edge_count()]),
            colors: colors.map(|c| c.to_vec()),
        }
    }

    pub fn planar(&self) -> Result<PlanarMap, MapError> {
        PlanarMap::new(self.vertices, self.half_edges.clone(), self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(len: usize) -> BipolarMap {
        let mut up = Upward::with_vertices(len + 1);
        for k in 0..len {
            let e = up.add_edge(k, k + 1);
            up.outs[k].push(e);
            up.ins[k + 1].push(e);
        }
        up.build(0, len).unwrap()
    }

    fn parallel(k: usize) -> BipolarMap {
        let mut up = Upward::with_vertices(2);
        for _ in 0..k {
            let e = up.add_edge(0, 1);
            up.outs[0].push(e);
            up.ins[1].push(e);
        }
        up.build(0, 1).unwrap()
    }

    #[test]
    fn single_edge_outer_type() {
        let b = path(1);
        assert_eq!(b.outer_type(), FaceType::new(0, 0));
        assert!(b.inner_face_types().is_empty());
        assert!(b.is_poset());
    }

    #[test]
    fn path_of_two() {
        let b = path(2);
        assert_eq!(b.outer_type(), FaceType::new(1, 1));
        let up = b.upward();
        assert_eq!(up.outs[1].len(), 1);
        assert_eq!(up.ins[1].len(), 1);
    }

    #[test]
    fn parallel_edges_inner_face() {
        let b = parallel(2);
        assert_eq!(b.inner_face_types(), vec![FaceType::new(0, 0)]);
        assert!(!b.is_poset());
    }

    #[test]
    fn triangle_is_not_a_poset() {
        // S -> v -> N with the transitive edge S -> N on the right
        let mut up = Upward::with_vertices(3);
        let a = up.add_edge(0, 1);
        let b = up.add_edge(1, 2);
        let c = up.add_edge(0, 2);
        up.outs[0] = vec![a, c];
        up.outs[1] = vec![b];
        up.ins[1] = vec![a];
        up.ins[2] = vec![b, c];
        let m = up.build(0, 2).unwrap();
        assert_eq!(m.inner_face_types(), vec![FaceType::new(1, 0)]);
        assert_eq!(m.outer_type(), FaceType::new(1, 0));
        assert!(!m.is_poset());
    }

    #[test]
    fn alternating_vertex_is_rejected() {
        // v has rotation in, out, in, out
        let edges = [(0, 1), (1, 2), (0, 1), (1, 3)];
        let rot = vec![vec![0, 4], vec![1, 2, 5, 6], vec![3], vec![7]];
        let map = PlanarMap::from_rotations(4, &edges, &rot, 0).unwrap();
        let err = validate_bipolar(map, vec![true; 4], 0, 2).unwrap_err();
        assert_eq!(err, BipolarError::LateralCornerViolation(1));
    }

    #[test]
    fn reversed_edge_is_cyclic_or_local_error() {
        let b = path(2);
        let mut o = b.orientation().to_vec();
        o[1] = !o[1];
        assert!(validate_bipolar(b.map().clone(), o, b.source(), b.sink()).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let b = parallel(3).canonical();
        let text = serde_json::to_string(&b.to_json()).unwrap();
        let back: MapJson = serde_json::from_str(&text).unwrap();
        assert_eq!(BipolarMap::from_json(&back).unwrap(), b);
    }
}
