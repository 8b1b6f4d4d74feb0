//! Rooted planar maps stored as rotation systems on half-edges.
//!
//! Edge `e` owns the half-edges `2e` and `2e + 1`, so `twin(h) == h ^ 1`.
//! `next(h)` is the half-edge following `h` counterclockwise around
//! `origin(h)`. Faces are never stored: a face is an orbit of
//! `h -> next(twin(h))`, and every half-edge of an orbit has the face on its
//! right-hand side. The corner `(h, next(h))` at `origin(h)` belongs to the
//! face of `twin(h)`.
//!
//! The root is a half-edge `r`; the marked corner is `(r, next(r))` and the
//! face containing it is the outer face.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has no edges")]
    Empty,
    #[error("half-edge {0}: twin must be {1}")]
    TwinNotPaired(usize, usize),
    #[error("half-edge {0}: index out of range")]
    OutOfRange(usize),
    #[error("rotation is not a permutation of the half-edges")]
    RotationNotPermutation,
    #[error("half-edge {0}: next half-edge has a different origin")]
    OriginMismatch(usize),
    #[error("vertex {0} has no incident half-edge")]
    IsolatedVertex(usize),
    #[error("vertex {0}: incident half-edges form more than one rotation cycle")]
    SplitRotation(usize),
    #[error("map is not connected")]
    Disconnected,
    #[error("Euler relation fails: V={vertices} E={edges} F={faces}")]
    NotPlanar { vertices: usize, edges: usize, faces: usize },
    #[error("root half-edge {0} does not exist")]
    BadRoot(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfEdgeRecord {
    pub twin: usize,
    pub next: usize,
    pub origin: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarMap {
    vertex_count: usize,
    half_edges: Vec<HalfEdgeRecord>,
    root: usize,
}

/// Face orbits of a map, computed on demand.
#[derive(Debug, Clone)]
pub struct Faces {
    /// Face index of each half-edge (the face on its right).
    pub face_of: Vec<usize>,
    /// Half-edges of each face, in traversal order starting at the smallest id.
    pub orbits: Vec<Vec<usize>>,
    pub outer: usize,
}

/// Result of relabelling a map: where old edges and vertices went.
#[derive(Debug, Clone)]
pub struct Relabelling {
    /// `edge_map[old] = (new, flipped)`; `flipped` means old half-edge `2*old`
    /// became new half-edge `2*new + 1`.
    pub edge_map: Vec<(usize, bool)>,
    pub vertex_map: Vec<usize>,
}

impl PlanarMap {
    pub fn new(vertex_count: usize, half_edges: Vec<HalfEdgeRecord>, root: usize) -> Result<Self, MapError> {
        let map = PlanarMap { vertex_count, half_edges, root };
        map.check()?;
        Ok(map)
    }

    /// Build a map from per-vertex counterclockwise lists of half-edges.
    /// `edges[e] = (u, v)` puts half-edge `2e` at `u` and `2e + 1` at `v`.
    pub fn from_rotations(
        vertex_count: usize,
        edges: &[(usize, usize)],
        rotations: &[Vec<usize>],
        root: usize,
    ) -> Result<Self, MapError> {
        let mut records = vec![HalfEdgeRecord { twin: 0, next: usize::MAX, origin: 0 }; 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            records[2 * e] = HalfEdgeRecord { twin: 2 * e + 1, next: usize::MAX, origin: u };
            records[2 * e + 1] = HalfEdgeRecord { twin: 2 * e, next: usize::MAX, origin: v };
        }
        for rot in rotations {
            for (k, &h) in rot.iter().enumerate() {
                if h >= records.len() {
                    return Err(MapError::OutOfRange(h));
                }
                if records[h].next != usize::MAX {
                    return Err(MapError::RotationNotPermutation);
                }
                records[h].next = rot[(k + 1) % rot.len()];
            }
        }
        if records.iter().any(|r| r.next == usize::MAX) {
            return Err(MapError::RotationNotPermutation);
        }
        PlanarMap::new(vertex_count, records, root)
    }

    fn check(&self) -> Result<(), MapError> {
        let m = self.half_edges.len();
        if m == 0 {
            return Err(MapError::Empty);
        }
        if self.root >= m {
            return Err(MapError::BadRoot(self.root));
        }
        let mut seen = vec![false; m];
        for (h, rec) in self.half_edges.iter().enumerate() {
            if rec.twin >= m || rec.next >= m || rec.origin >= self.vertex_count {
                return Err(MapError::OutOfRange(h));
            }
            if rec.twin != h ^ 1 {
                return Err(MapError::TwinNotPaired(h, h ^ 1));
            }
            if seen[rec.next] {
                return Err(MapError::RotationNotPermutation);
            }
            seen[rec.next] = true;
            if self.half_edges[rec.next].origin != rec.origin {
                return Err(MapError::OriginMismatch(h));
            }
        }
        // each vertex carries exactly one rotation cycle
        let mut cycle_of_vertex = vec![usize::MAX; self.vertex_count];
        let mut visited = vec![false; m];
        for h in 0..m {
            if visited[h] {
                continue;
            }
            let v = self.half_edges[h].origin;
            if cycle_of_vertex[v] != usize::MAX {
                return Err(MapError::SplitRotation(v));
            }
            cycle_of_vertex[v] = h;
            let mut g = h;
            while !visited[g] {
                visited[g] = true;
                g = self.half_edges[g].next;
            }
        }
        if let Some(v) = cycle_of_vertex.iter().position(|&c| c == usize::MAX) {
            return Err(MapError::IsolatedVertex(v));
        }
        // connectivity over twin/next
        let mut reached = vec![false; m];
        let mut queue = VecDeque::from([self.root]);
        reached[self.root] = true;
        let mut count = 1;
        while let Some(h) = queue.pop_front() {
            for g in [h ^ 1, self.half_edges[h].next] {
                if !reached[g] {
                    reached[g] = true;
                    count += 1;
                    queue.push_back(g);
                }
            }
        }
        if count != m {
            return Err(MapError::Disconnected);
        }
        let faces = self.face_count();
        let (v, e) = (self.vertex_count as i64, (m / 2) as i64);
        if v - e + faces as i64 != 2 {
            return Err(MapError::NotPlanar { vertices: self.vertex_count, edges: m / 2, faces });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_vertex(&self) -> usize {
        self.origin(self.root)
    }

    pub fn records(&self) -> &[HalfEdgeRecord] {
        &self.half_edges
    }

    #[inline]
    pub fn twin(&self, h: usize) -> usize {
        h ^ 1
    }

    #[inline]
    pub fn next(&self, h: usize) -> usize {
        self.half_edges[h].next
    }

    #[inline]
    pub fn origin(&self, h: usize) -> usize {
        self.half_edges[h].origin
    }

    /// Vertex at the other end of `h`.
    #[inline]
    pub fn target(&self, h: usize) -> usize {
        self.half_edges[h ^ 1].origin
    }

    /// Successor of `h` along its face.
    #[inline]
    pub fn face_next(&self, h: usize) -> usize {
        self.next(h ^ 1)
    }

    pub fn prev(&self, h: usize) -> usize {
        let mut g = h;
        loop {
            let n = self.next(g);
            if n == h {
                return g;
            }
            g = n;
        }
    }

    /// Counterclockwise rotation at each vertex, starting from its
    /// smallest half-edge.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        let mut visited = vec![false; self.half_edges.len()];
        for h in 0..self.half_edges.len() {
            if visited[h] {
                continue;
            }
            let v = self.origin(h);
            let mut g = h;
            while !visited[g] {
                visited[g] = true;
                rot[v].push(g);
                g = self.next(g);
            }
        }
        rot
    }

    /// The rotation at `origin(h)` starting at `h`.
    pub fn rotation_from(&self, h: usize) -> Vec<usize> {
        let mut out = vec![h];
        let mut g = self.next(h);
        while g != h {
            out.push(g);
            g = self.next(g);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.half_edges.iter().filter(|r| r.origin == v).count()
    }

    fn face_count(&self) -> usize {
        let mut visited = vec![false; self.half_edges.len()];
        let mut faces = 0;
        for h in 0..self.half_edges.len() {
            if visited[h] {
                continue;
            }
            faces += 1;
            let mut g = h;
            while !visited[g] {
                visited[g] = true;
                g = self.face_next(g);
            }
        }
        faces
    }

    pub fn faces(&self) -> Faces {
        let m = self.half_edges.len();
        let mut face_of = vec![usize::MAX; m];
        let mut orbits = Vec::new();
        for h in 0..m {
            if face_of[h] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut g = h;
            while face_of[g] == usize::MAX {
                face_of[g] = id;
                orbit.push(g);
                g = self.face_next(g);
            }
            orbits.push(orbit);
        }
        let outer = face_of[self.root ^ 1];
        Faces { face_of, orbits, outer }
    }

    /// Renumber half-edges and vertices by breadth-first discovery from the
    /// root. Two maps are equal as rooted maps iff their canonical forms are
    /// equal.
    pub fn canonical(&self) -> (PlanarMap, Relabelling) {
        let m = self.half_edges.len();
        let mut order = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(h) = queue.pop_front() {
            order.push(h);
            for g in [h ^ 1, self.next(h)] {
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        let mut new_half = vec![usize::MAX; m];
        let mut edge_map = vec![(usize::MAX, false); m / 2];
        let mut next_edge = 0;
        for &h in &order {
            if new_half[h] != usize::MAX {
                continue;
            }
            let e = next_edge;
            next_edge += 1;
            new_half[h] = 2 * e;
            new_half[h ^ 1] = 2 * e + 1;
            edge_map[h / 2] = (e, h % 2 == 1);
        }
        let mut vertex_map = vec![usize::MAX; self.vertex_count];
        let mut next_vertex = 0;
        let mut by_new = vec![0usize; m];
        for h in 0..m {
            by_new[new_half[h]] = h;
        }
        for &old in &by_new {
            let v = self.origin(old);
            if vertex_map[v] == usize::MAX {
                vertex_map[v] = next_vertex;
                next_vertex += 1;
            }
        }
        let records = by_new
            .iter()
            .enumerate()
            .map(|(nh, &old)| HalfEdgeRecord {
                twin: nh ^ 1,
                next: new_half[self.next(old)],
                origin: vertex_map[self.origin(old)],
            })
            .collect();
        let map = PlanarMap { vertex_count: self.vertex_count, half_edges: records, root: new_half[self.root] };
        (map, Relabelling { edge_map, vertex_map })
    }

    /// Keep only the edges with `keep[e]`; vertices left without edges are
    /// dropped. The new root is the first kept half-edge met when turning
    /// clockwise from the old root at the root vertex, so the marked corner
    /// keeps lying in the same region.
    pub fn restrict(&self, keep: &[bool]) -> Result<(PlanarMap, Vec<Option<usize>>, Vec<Option<usize>>), MapError> {
        let mut edge_map = vec![None; self.edge_count()];
        let mut edges = 0;
        for (e, &k) in keep.iter().enumerate() {
            if k {
                edge_map[e] = Some(edges);
                edges += 1;
            }
        }
        let mut vertex_map = vec![None; self.vertex_count];
        let mut vertices = 0;
        for h in 0..self.half_edges.len() {
            if keep[h / 2] {
                let v = self.origin(h);
                if vertex_map[v].is_none() {
                    vertex_map[v] = Some(vertices);
                    vertices += 1;
                }
            }
        }
        let mut root = self.root;
        let start = root;
        while !keep[root / 2] {
            root = self.prev(root);
            if root == start {
                return Err(MapError::Disconnected);
            }
        }
        let mut records = vec![HalfEdgeRecord { twin: 0, next: 0, origin: 0 }; 2 * edges];
        for h in 0..self.half_edges.len() {
            let Some(ne) = edge_map[h / 2] else { continue };
            let nh = 2 * ne + (h % 2);
            let mut g = self.next(h);
            while !keep[g / 2] {
                g = self.next(g);
            }
            let ng = 2 * edge_map[g / 2].unwrap() + (g % 2);
            records[nh] = HalfEdgeRecord { twin: nh ^ 1, next: ng, origin: vertex_map[self.origin(h)].unwrap() };
        }
        let new_root = 2 * edge_map[root / 2].unwrap() + (root % 2);
        let map = PlanarMap::new(vertices, records, new_root)?;
        Ok((map, vertex_map, edge_map))
    }

    pub fn to_records(&self) -> (usize, Vec<HalfEdgeRecord>, usize) {
        (self.vertex_count, self.half_edges.clone(), self.root)
    }
}

/// Counterclockwise angular comparison of integer direction vectors.
pub(crate) fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Rotation system of a straight-line drawing with integer coordinates.
/// `edges[e] = (u, v)`; the drawing must be crossing-free.
pub(crate) fn straight_line_rotations(points: &[(i64, i64)], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut rot: Vec<Vec<(usize, (i64, i64))>> = vec![Vec::new(); points.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        let d = (points[v].0 - points[u].0, points[v].1 - points[u].1);
        rot[u].push((2 * e, d));
        rot[v].push((2 * e + 1, (-d.0, -d.1)));
    }
    rot.into_iter()
        .map(|mut r| {
            r.sort_by(|a, b| angle_cmp(a.1, b.1));
            r.into_iter().map(|(h, _)| h).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> PlanarMap {
        PlanarMap::from_rotations(2, &[(0, 1)], &[vec![0], vec![1]], 0).unwrap()
    }

    #[test]
    fn single_edge_has_one_face() {
        let m = single_edge();
        let f = m.faces();
        assert_eq!(f.orbits.len(), 1);
        assert_eq!(f.orbits[0].len(), 2);
    }

    #[test]
    fn euler_violation_detected() {
        // two loops at one vertex with interleaved rotation form a torus
        let r = PlanarMap::from_rotations(1, &[(0, 0), (0, 0)], &[vec![0, 2, 1, 3]], 0);
        assert!(matches!(r, Err(MapError::NotPlanar { .. })));
    }

    #[test]
    fn canonical_is_idempotent_and_label_free() {
        // triangle, built twice with different edge numbering
        let a = PlanarMap::from_rotations(3, &[(0, 1), (1, 2), (0, 2)], &[vec![0, 4], vec![2, 1], vec![3, 5]], 0).unwrap();
        let b = PlanarMap::from_rotations(3, &[(0, 2), (0, 1), (1, 2)], &[vec![2, 0], vec![4, 3], vec![5, 1]], 2).unwrap();
        assert_eq!(a.canonical().0, b.canonical().0);
        let c = a.canonical().0;
        assert_eq!(c.canonical().0, c);
    }

    #[test]
    fn angle_order_is_counterclockwise() {
        let mut dirs = vec![(0, -1), (-1, 0), (1, 1), (1, 0), (0, 1), (-1, -1)];
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(dirs, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
    }

    #[test]
    fn restrict_moves_root_clockwise() {
        // star with three edges out of vertex 0, drop the root edge
        let m = PlanarMap::from_rotations(4, &[(0, 1), (0, 2), (0, 3)], &[vec![0, 2, 4], vec![1], vec![3], vec![5]], 2).unwrap();
        let (r, vmap, _) = m.restrict(&[true, false, true]).unwrap();
        assert_eq!(r.edge_count(), 2);
        assert_eq!(vmap[2], None);
        assert_eq!(r.root(), 0);
    }
}
