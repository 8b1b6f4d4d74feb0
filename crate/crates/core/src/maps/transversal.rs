//! Transversal structures on 4-outer maps.

use std::collections::HashSet;

use thiserror::Error;

use super::bipolar::{validate_bipolar, BipolarMap, EdgeColor, MapJson};
use super::planar::{MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("expected {expected} edge labels, got {got}")]
    LabelLength { expected: usize, got: usize },
    #[error("map has a loop or a multiple edge")]
    NotSimple,
    #[error("outer face is not a 4-cycle S, W, N, E with outer edges S->W->N, S->E->N")]
    OuterNotQuad,
    #[error("condition T1 fails at outer vertex {0}")]
    T1Violation(usize),
    #[error("condition T2 fails at inner vertex {0}")]
    T2Violation(usize),
    #[error("internal consistency: {0}")]
    InternalConsistency(String),
}

/// A 4-outer map with red/blue oriented inner edges.
///
/// The root half-edge is the outer edge `S -> W` at `S`. Outer edges carry
/// [`EdgeColor::Outer`] and are oriented `S -> W -> N` and `S -> E -> N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransversalStructure {
    map: PlanarMap,
    orientation: Vec<bool>,
    colors: Vec<EdgeColor>,
    w: usize,
    n: usize,
    e: usize,
    s: usize,
}

/// Class of a half-edge at an inner vertex, in counterclockwise order.
fn class(color: EdgeColor, out: bool) -> Option<u8> {
    match (color, out) {
        (EdgeColor::Red, true) => Some(0),
        (EdgeColor::Blue, false) => Some(1),
        (EdgeColor::Red, false) => Some(2),
        (EdgeColor::Blue, true) => Some(3),
        (EdgeColor::Outer, _) => None,
    }
}

pub fn validate_transversal(map: PlanarMap, orientation: Vec<bool>, colors: Vec<EdgeColor>) -> Result<TransversalStructure, TransversalError> {
    let m = map.edge_count();
    if orientation.len() != m {
        return Err(TransversalError::LabelLength { expected: m, got: orientation.len() });
    }
    if colors.len() != m {
        return Err(TransversalError::LabelLength { expected: m, got: colors.len() });
    }
    let mut pairs = HashSet::new();
    for e in 0..m {
        let (u, v) = (map.origin(2 * e), map.origin(2 * e + 1));
        if u == v || !pairs.insert((u.min(v), u.max(v))) {
            return Err(TransversalError::NotSimple);
        }
    }
    let out = |h: usize| orientation[h / 2] == (h % 2 == 0);
    let faces = map.faces();
    let outer = &faces.orbits[faces.outer];
    let r = map.root();
    let s = map.origin(r);
    let w = map.target(r);
    if outer.len() != 4 {
        return Err(TransversalError::OuterNotQuad);
    }
    // outer orbit from twin(root): W->S, S->E, E->N, N->W
    let g1 = map.face_next(r ^ 1);
    let g2 = map.face_next(g1);
    let g3 = map.face_next(g2);
    let e = map.origin(g2);
    let n = map.origin(g3);
    let corners = [w, s, e, n];
    let distinct: HashSet<usize> = corners.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(TransversalError::OuterNotQuad);
    }
    // required directions: S->W, S->E, E->N, W->N
    let outer_ok = out(r) && out(g1) && out(g2) && !out(g3);
    let colors_ok = [r, g1, g2, g3].iter().all(|&h| colors[h / 2] == EdgeColor::Outer)
        && (0..m).filter(|&k| colors[k] == EdgeColor::Outer).count() == 4;
    if !outer_ok || !colors_ok {
        return Err(TransversalError::OuterNotQuad);
    }
    let rotations = map.rotations();
    for v in 0..map.vertex_count() {
        let rot = &rotations[v];
        if v == w || v == n || v == e || v == s {
            let want = if v == w {
                (EdgeColor::Blue, true)
            } else if v == n {
                (EdgeColor::Red, false)
            } else if v == e {
                (EdgeColor::Blue, false)
            } else {
                (EdgeColor::Red, true)
            };
            for &h in rot {
                if colors[h / 2] != EdgeColor::Outer && (colors[h / 2], out(h)) != want {
                    return Err(TransversalError::T1Violation(v));
                }
            }
            continue;
        }
        let classes: Option<Vec<u8>> = rot.iter().map(|&h| class(colors[h / 2], out(h))).collect();
        let Some(classes) = classes else {
            return Err(TransversalError::T2Violation(v));
        };
        let k = classes.len();
        let changes: Vec<(u8, u8)> = (0..k).filter(|&t| classes[t] != classes[(t + 1) % k]).map(|t| (classes[t], classes[(t + 1) % k])).collect();
        if changes.len() != 4 || changes.iter().any(|&(a, b)| b != (a + 1) % 4) {
            return Err(TransversalError::T2Violation(v));
        }
    }
    Ok(TransversalStructure { map, orientation, colors, w, n, e, s })
}

impl TransversalStructure {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn orientation(&self) -> &[bool] {
        &self.orientation
    }

    pub fn colors(&self) -> &[EdgeColor] {
        &self.colors
    }

    pub fn west(&self) -> usize {
        self.w
    }

    pub fn north(&self) -> usize {
        self.n
    }

    pub fn east(&self) -> usize {
        self.e
    }

    pub fn south(&self) -> usize {
        self.s
    }

    pub fn is_out(&self, h: usize) -> bool {
        self.orientation[h / 2] == (h % 2 == 0)
    }

    pub fn inner_vertex_count(&self) -> usize {
        self.map.vertex_count() - 4
    }

    /// Inner red edges.
    pub fn red_edge_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == EdgeColor::Red).count()
    }

    /// `(deg(W) - 2, deg(E) - 2)`.
    pub fn we_type(&self) -> (usize, usize) {
        (self.map.degree(self.w) - 2, self.map.degree(self.e) - 2)
    }

    /// Inner faces of degree 4.
    pub fn quadrangular_faces(&self) -> usize {
        let faces = self.map.faces();
        faces.orbits.iter().enumerate().filter(|&(f, o)| f != faces.outer && o.len() == 4).count()
    }

    pub fn canonical(&self) -> TransversalStructure {
        let (map, relabel) = self.map.canonical();
        let mut orientation = vec![true; self.orientation.len()];
        let mut colors = vec![EdgeColor::Red; self.colors.len()];
        for (old, &(new, flipped)) in relabel.edge_map.iter().enumerate() {
            orientation[new] = self.orientation[old] != flipped;
            colors[new] = self.colors[old];
        }
        let vm = &relabel.vertex_map;
        TransversalStructure { map, orientation, colors, w: vm[self.w], n: vm[self.n], e: vm[self.e], s: vm[self.s] }
    }

    /// The red bipolar poset: inner red edges plus the outer quadrangle.
    /// Also checks that every inner face of the structure has degree 3 or 4,
    /// and degree 3 when it touches an outer vertex.
    pub fn red_poset(&self) -> Result<BipolarMap, TransversalError> {
        let keep: Vec<bool> = self.colors.iter().map(|&c| c != EdgeColor::Blue).collect();
        let (map, vmap, emap) = self.map.restrict(&keep)?;
        let mut orientation = vec![true; map.edge_count()];
        for (old, ne) in emap.iter().enumerate() {
            if let Some(ne) = ne {
                orientation[*ne] = self.orientation[old];
            }
        }
        let source = vmap[self.s].expect("S is kept");
        let sink = vmap[self.n].expect("N is kept");
        let b = validate_bipolar(map, orientation, source, sink)
            .map_err(|err| TransversalError::InternalConsistency(format!("red edges do not form a bipolar orientation: {err}")))?;
        if !b.is_poset() {
            return Err(TransversalError::InternalConsistency("red orientation has a transitive edge".into()));
        }
        let faces = self.map.faces();
        let poles = [self.w, self.n, self.e, self.s];
        for (f, orbit) in faces.orbits.iter().enumerate() {
            if f == faces.outer {
                continue;
            }
            let deg = orbit.len();
            if deg != 3 && deg != 4 {
                return Err(TransversalError::InternalConsistency(format!("inner face of degree {deg}")));
            }
            if deg == 4 && orbit.iter().any(|&g| poles.contains(&self.map.origin(g))) {
                return Err(TransversalError::InternalConsistency("quadrangular face touches an outer vertex".into()));
            }
        }
        Ok(b)
    }

    pub fn to_json(&self) -> MapJson {
        MapJson::from_parts(&self.map, Some(&self.orientation), Some(&self.colors))
    }

    pub fn from_json(json: &MapJson) -> Result<TransversalStructure, TransversalError> {
        let map = json.planar()?;
        let colors = json.colors.clone().ok_or(TransversalError::LabelLength { expected: map.edge_count(), got: 0 })?;
        validate_transversal(map, json.orientation.clone(), colors)
    }
}

/// Incremental construction: vertices, coloured oriented edges and
/// counterclockwise rotations given as lists of half-edges.
#[derive(Debug, Clone, Default)]
pub(crate) struct TransversalBuilder {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<EdgeColor>,
    pub rotations: Vec<Vec<usize>>,
}

impl TransversalBuilder {
    pub fn add_vertex(&mut self) -> usize {
        self.rotations.push(Vec::new());
        self.rotations.len() - 1
    }

    pub fn add_edge(&mut self, tail: usize, head: usize, color: EdgeColor) -> usize {
        self.edges.push((tail, head));
        self.colors.push(color);
        self.edges.len() - 1
    }

    pub fn build(self, root: usize) -> Result<TransversalStructure, TransversalError> {
        let map = PlanarMap::from_rotations(self.rotations.len(), &self.edges, &self.rotations, root)?;
        let m = self.edges.len();
        validate_transversal(map, vec![true; m], self.colors)
    }
}

/// The smallest transversal structure: one inner vertex joined to all four
/// outer vertices.
pub fn single_vertex_transversal() -> TransversalStructure {
    let mut b = TransversalBuilder::default();
    let [s, w, n, e, v] = [0, 1, 2, 3, 4].map(|_| b.add_vertex());
    let sw = b.add_edge(s, w, EdgeColor::Outer);
    let wn = b.add_edge(w, n, EdgeColor::Outer);
    let se = b.add_edge(s, e, EdgeColor::Outer);
    let en = b.add_edge(e, n, EdgeColor::Outer);
    let sv = b.add_edge(s, v, EdgeColor::Red);
    let vn = b.add_edge(v, n, EdgeColor::Red);
    let wv = b.add_edge(w, v, EdgeColor::Blue);
    let ve = b.add_edge(v, e, EdgeColor::Blue);
    let out = |e: usize| 2 * e;
    let inn = |e: usize| 2 * e + 1;
    b.rotations[s] = vec![out(se), out(sv), out(sw)];
    b.rotations[w] = vec![inn(sw), out(wv), out(wn)];
    b.rotations[n] = vec![inn(wn), inn(vn), inn(en)];
    b.rotations[e] = vec![out(en), inn(ve), inn(se)];
    b.rotations[v] = vec![out(vn), inn(wv), inn(sv), out(ve)];
    b.build(out(sw)).expect("valid by construction")
}
