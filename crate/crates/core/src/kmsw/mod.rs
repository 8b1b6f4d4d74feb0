//! The bijection between plane bipolar orientations and quadrant tandem
//! walks, and its specialisations to posets and transversal structures.

mod face_walk;
mod transverse_t;
mod transverse_v;

use thiserror::Error;

use crate::maps::{BipolarError, BipolarMap, DecorationError, TransversalError, Upward};
use crate::walks::{Step, TandemWalk, WalkClass, WalkError};

pub use face_walk::{decorated_to_walk, face_walk_decode, face_walk_encode, walk_to_decorated};
pub use transverse_t::{phi_t, psi_t, transversal_to_walk, walk_to_transversal};
pub use transverse_v::{phi_v, poset_to_v_walk, psi_v, v_walk_to_poset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KmswError {
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Bipolar(#[from] BipolarError),
    #[error(transparent)]
    Decoration(#[from] DecorationError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
    #[error("orientation has a transitive edge")]
    NotAPoset,
}

/// What a step of the walk was produced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceItem {
    /// An `SE` step, for the head of the current edge.
    Vertex(usize),
    /// A face-step, for this face (index into `map().faces()`).
    Face(usize),
}

/// Walk of a bipolar orientation together with the vertex or face behind
/// each step.
pub fn kmsw_forward_traced(b: &BipolarMap) -> (TandemWalk, Vec<TraceItem>) {
    let up = b.upward();
    let infos = b.face_infos();
    let face_of = b.map().faces().face_of;
    let outer = b.outer_type();
    let mut steps = Vec::with_capacity(b.edge_count().saturating_sub(1));
    let mut trace = Vec::with_capacity(steps.capacity());
    let mut e = up.outs[b.source()][0];
    loop {
        let v = up.edges[e].1;
        if up.ins[v].last() == Some(&e) {
            if v == b.sink() {
                break;
            }
            steps.push(Step::SE);
            trace.push(TraceItem::Vertex(v));
            e = up.outs[v][0];
        } else {
            let f = face_of[b.up_half(e)];
            debug_assert_eq!(infos[f].left.last(), Some(&e));
            steps.push(Step::Face(infos[f].face_type()));
            trace.push(TraceItem::Face(f));
            e = infos[f].right[0];
        }
    }
    (TandemWalk::plain((0, outer.i), steps), trace)
}

/// Walk of length `n` from `(0, a)` to `(b, 0)` for an orientation with
/// `n + 1` edges and outer type `(a, b)`.
pub fn kmsw_forward(b: &BipolarMap) -> TandemWalk {
    kmsw_forward_traced(b).0
}

/// Inverse of [`kmsw_forward`]: the walk must start at `(0, a)` and end at
/// `(b, 0)`. Attached walks, if any, are ignored. The result is in canonical
/// form.
pub fn kmsw_backward(w: &TandemWalk, b: usize) -> Result<BipolarMap, KmswError> {
    let plain = TandemWalk { class: WalkClass::Plain, ..w.underlying() };
    plain.validate()?;
    if w.start.0 != 0 {
        return Err(KmswError::InvalidWalk(format!("walk starts at {:?}, not on the y-axis", w.start)));
    }
    if plain.end() != (b as i64, 0) {
        return Err(KmswError::InvalidWalk(format!("walk ends at {:?}, not at ({b}, 0)", plain.end())));
    }
    let a = w.start.1;
    let mut up = Upward::with_vertices(1);
    let source = 0;
    // rightmost ingoing path from S to the tail of the current edge
    let mut path = vec![source];
    // pending in-edge groups of vertices not built yet; the top group holds
    // the current edge
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); a + 1];
    let mut e = up.add_edge(source, usize::MAX);
    up.outs[source].push(e);
    groups.last_mut().unwrap().push(e);
    for s in &plain.steps {
        match s.step {
            Step::SE => {
                let ins = groups.pop().expect("quadrant walk keeps a group");
                let v = up.add_vertex();
                for &f in &ins {
                    up.edges[f].1 = v;
                }
                up.ins[v] = ins;
                path.push(v);
                e = up.add_edge(v, usize::MAX);
                up.outs[v].push(e);
                groups.last_mut().expect("quadrant walk keeps a group").push(e);
            }
            Step::Face(t) => {
                path.truncate(path.len() - t.i);
                let s = *path.last().expect("quadrant walk keeps the source");
                e = up.add_edge(s, usize::MAX);
                up.outs[s].push(e);
                for _ in 0..t.j {
                    groups.push(Vec::new());
                }
                groups.last_mut().unwrap().push(e);
            }
        }
    }
    debug_assert_eq!(groups.len(), 1);
    let sink = up.add_vertex();
    let ins = groups.pop().unwrap();
    for &f in &ins {
        up.edges[f].1 = sink;
    }
    up.ins[sink] = ins;
    Ok(up.build(source, sink)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::FaceType;

    #[test]
    fn smallest_cases() {
        let single = kmsw_backward(&TandemWalk::plain((0, 0), vec![]), 0).unwrap();
        assert_eq!(single.edge_count(), 1);
        assert_eq!(kmsw_forward(&single), TandemWalk::plain((0, 0), vec![]));

        let path = kmsw_backward(&TandemWalk::plain((0, 1), vec![Step::SE]), 1).unwrap();
        assert_eq!(path.vertex_count(), 3);
        assert_eq!(path.outer_type(), FaceType::new(1, 1));
        assert_eq!(kmsw_forward(&path), TandemWalk::plain((0, 1), vec![Step::SE]));

        let par = TandemWalk::plain((0, 0), vec![Step::face(0, 0)]);
        let b = kmsw_backward(&par, 0).unwrap();
        assert_eq!(b.vertex_count(), 2);
        assert_eq!(b.inner_face_types(), vec![FaceType::new(0, 0)]);
        assert_eq!(kmsw_forward(&b), par);
    }

    #[test]
    fn rejects_bad_endpoints() {
        let w = TandemWalk::plain((0, 1), vec![Step::SE]);
        assert!(matches!(kmsw_backward(&w, 0), Err(KmswError::InvalidWalk(_))));
        let off = TandemWalk::plain((1, 0), vec![]);
        assert!(kmsw_backward(&off, 1).is_err());
    }
}
