//! Attached walks as decorations of a single face, and the composite
//! correspondence between decorated orientations and admissible walks.

use crate::maps::{decoration_fits, DecoratedBipolar, DecorationKind, FaceType};
use crate::walks::{Alphabet, AttachedWalk, Letter, Step, TandemWalk, WalkClass, WalkError, WalkStep};

use super::{kmsw_backward, kmsw_forward_traced, KmswError, TraceItem};

fn alphabet(kind: DecorationKind) -> Alphabet {
    match kind {
        DecorationKind::V => Alphabet::V,
        DecorationKind::T => Alphabet::T,
    }
}

/// Moves two markers up the lateral paths of a face of type `face`, adding
/// an edge after each letter (for `V`, an edge is also present before the
/// first letter).
pub fn face_walk_decode(kind: DecorationKind, face: FaceType, walk: &AttachedWalk) -> Result<Vec<(usize, usize)>, WalkError> {
    if walk.alphabet != alphabet(kind) || !walk.fits(face) {
        return Err(WalkError::AttachedMismatch(0));
    }
    let mut pairs = Vec::with_capacity(walk.letters.len() + 1);
    let mut at = (0, 0);
    if kind == DecorationKind::V {
        pairs.push(at);
    }
    for l in &walk.letters {
        let (dl, dr) = l.displacement();
        at = (at.0 + dl, at.1 + dr);
        pairs.push(at);
    }
    Ok(pairs)
}

/// Reads a face decoration from bottom to top.
pub fn face_walk_encode(kind: DecorationKind, face: FaceType, pairs: &[(usize, usize)]) -> Result<AttachedWalk, WalkError> {
    if !decoration_fits(kind, face, pairs) {
        return Err(WalkError::AttachedMismatch(0));
    }
    let mut letters = Vec::with_capacity(pairs.len());
    if kind == DecorationKind::T {
        letters.push(Letter::NW);
    }
    for w in pairs.windows(2) {
        letters.push(match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
            (1, 0) => Letter::W,
            (0, 1) => Letter::N,
            _ => Letter::NW,
        });
    }
    Ok(AttachedWalk::new(alphabet(kind), letters))
}

/// Walk with attached walks of a decorated orientation; its class is `V` or
/// `T` according to the decoration kind.
pub fn decorated_to_walk(d: &DecoratedBipolar) -> TandemWalk {
    let (walk, trace) = kmsw_forward_traced(d.base());
    let class = match d.kind() {
        DecorationKind::V => WalkClass::V,
        DecorationKind::T => WalkClass::T,
    };
    let steps = walk
        .steps
        .iter()
        .zip(&trace)
        .map(|(s, item)| match (s.step, item) {
            (Step::Face(t), TraceItem::Face(f)) => {
                let att = face_walk_encode(d.kind(), t, d.decoration_of_face(*f)).expect("decorations are admissible");
                WalkStep { step: s.step, attached: Some(att) }
            }
            _ => s.clone(),
        })
        .collect();
    TandemWalk::new(walk.start, steps, class)
}

/// Inverse of [`decorated_to_walk`] for a `V` or `T` walk ending on the
/// x-axis.
pub fn walk_to_decorated(w: &TandemWalk) -> Result<DecoratedBipolar, KmswError> {
    let kind = match w.class {
        WalkClass::V => DecorationKind::V,
        WalkClass::T => DecorationKind::T,
        other => return Err(KmswError::InvalidWalk(format!("class {other} carries no attached walks"))),
    };
    w.validate()?;
    let b = w.end().0.max(0) as usize;
    let base = kmsw_backward(w, b)?;
    let (_, trace) = kmsw_forward_traced(&base);
    let inner = base.inner_faces();
    let types = base.face_infos();
    let mut decorations = vec![Vec::new(); inner.len()];
    for (s, item) in w.steps.iter().zip(&trace) {
        if let (Some(att), TraceItem::Face(f)) = (&s.attached, item) {
            let idx = inner.iter().position(|g| g == f).unwrap();
            decorations[idx] = face_walk_decode(kind, types[*f].face_type(), att)?;
        }
    }
    Ok(DecoratedBipolar::new(base, kind, decorations)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::attached_walks;

    #[test]
    fn no_n_pattern() {
        let t = FaceType::new(2, 3);
        let letters = [vec![Letter::W; 2], vec![Letter::N; 3]].concat();
        let pairs = face_walk_decode(DecorationKind::V, t, &AttachedWalk::new(Alphabet::V, letters)).unwrap();
        assert_eq!(pairs, vec![(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (2, 3)]);
    }

    #[test]
    fn single_marked_letter() {
        let t = FaceType::new(1, 1);
        let pairs = face_walk_decode(DecorationKind::T, t, &AttachedWalk::new(Alphabet::T, vec![Letter::NW])).unwrap();
        assert_eq!(pairs, vec![(1, 1)]);
    }

    #[test]
    fn roundtrip_all_small_faces() {
        for (kind, a) in [(DecorationKind::V, Alphabet::V), (DecorationKind::T, Alphabet::T)] {
            for i in 0..=5 {
                for j in 0..=5 {
                    let t = FaceType::new(i, j);
                    let walks = attached_walks(a, t);
                    let mut seen = std::collections::HashSet::new();
                    for w in walks {
                        let pairs = face_walk_decode(kind, t, &w).unwrap();
                        assert!(seen.insert(pairs.clone()));
                        assert_eq!(face_walk_encode(kind, t, &pairs).unwrap(), w);
                    }
                }
            }
        }
    }
}
