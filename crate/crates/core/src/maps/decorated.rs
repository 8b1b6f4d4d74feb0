//! Bipolar orientations carrying extra edges inside their inner faces.

use thiserror::Error;

use super::bipolar::{BipolarMap, FaceType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecorationKind {
    /// Transversal completion: every edge is subdivided once and the
    /// subdivision vertices of the left and right paths are joined.
    V,
    /// Transversal addition on a poset: inner vertices of the left and right
    /// paths are joined.
    T,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecorationError {
    #[error("base orientation has a transitive edge")]
    NotAPoset,
    #[error("expected decorations for {expected} inner faces, got {got}")]
    WrongFaceCount { expected: usize, got: usize },
    #[error("decoration of inner face {0} is not admissible")]
    InvalidDecoration(usize),
}

/// A bipolar orientation with, for each inner face (in the order of
/// [`BipolarMap::inner_faces`]), the list of added edges as pairs `(l, r)`
/// ordered bottom to top.
///
/// For [`DecorationKind::V`], `l` and `r` index the edges of the left and
/// right paths (their subdivision vertices), from `0`. For
/// [`DecorationKind::T`], they index vertices of the paths, the bottom vertex
/// being `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedBipolar {
    base: BipolarMap,
    kind: DecorationKind,
    decorations: Vec<Vec<(usize, usize)>>,
}

/// Whether `pairs` is an admissible decoration of a face of type `t`.
pub fn decoration_fits(kind: DecorationKind, t: FaceType, pairs: &[(usize, usize)]) -> bool {
    let (first, steps): ((usize, usize), &[(usize, usize)]) = match kind {
        DecorationKind::V => ((0, 0), &[(1, 0), (0, 1)]),
        DecorationKind::T => ((1, 1), &[(1, 0), (0, 1), (1, 1)]),
    };
    if kind == DecorationKind::T && (t.i == 0 || t.j == 0) {
        return false;
    }
    pairs.first() == Some(&first)
        && pairs.last() == Some(&(t.i, t.j))
        && pairs.windows(2).all(|w| steps.contains(&(w[1].0.wrapping_sub(w[0].0), w[1].1.wrapping_sub(w[0].1))))
}

impl DecoratedBipolar {
    pub fn new(base: BipolarMap, kind: DecorationKind, decorations: Vec<Vec<(usize, usize)>>) -> Result<Self, DecorationError> {
        if kind == DecorationKind::T && !base.is_poset() {
            return Err(DecorationError::NotAPoset);
        }
        let types = base.inner_face_types();
        if types.len() != decorations.len() {
            return Err(DecorationError::WrongFaceCount { expected: types.len(), got: decorations.len() });
        }
        for (k, (t, pairs)) in types.iter().zip(&decorations).enumerate() {
            if !decoration_fits(kind, *t, pairs) {
                return Err(DecorationError::InvalidDecoration(k));
            }
        }
        Ok(DecoratedBipolar { base, kind, decorations })
    }

    pub fn base(&self) -> &BipolarMap {
        &self.base
    }

    pub fn kind(&self) -> DecorationKind {
        self.kind
    }

    pub fn decorations(&self) -> &[Vec<(usize, usize)>] {
        &self.decorations
    }

    /// Decoration of a face given by its index in `base().map().faces()`.
    pub fn decoration_of_face(&self, face: usize) -> &[(usize, usize)] {
        let idx = self.base.inner_faces().iter().position(|&f| f == face).expect("inner face");
        &self.decorations[idx]
    }

    /// Same object on the canonical form of the base.
    pub fn canonical(&self) -> DecoratedBipolar {
        let (base, relabel) = self.base.canonical_with_relabelling();
        let old_faces = self.base.map().faces();
        let new_faces = base.map().faces();
        let new_inner = base.inner_faces();
        let mut decorations = vec![Vec::new(); self.decorations.len()];
        for (k, &f) in self.base.inner_faces().iter().enumerate() {
            let h = old_faces.orbits[f][0];
            let (ne, flipped) = relabel.edge_map[h / 2];
            let nh = 2 * ne + ((h % 2) ^ usize::from(flipped));
            let nf = new_faces.face_of[nh];
            let idx = new_inner.iter().position(|&g| g == nf).unwrap();
            decorations[idx] = self.decorations[k].clone();
        }
        DecoratedBipolar { base, kind: self.kind, decorations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_examples() {
        let t = FaceType::new(1, 1);
        assert!(decoration_fits(DecorationKind::V, t, &[(0, 0), (1, 0), (1, 1)]));
        assert!(decoration_fits(DecorationKind::V, t, &[(0, 0), (0, 1), (1, 1)]));
        assert!(!decoration_fits(DecorationKind::V, t, &[(0, 0), (1, 1)]));
        assert!(decoration_fits(DecorationKind::T, t, &[(1, 1)]));
        assert!(!decoration_fits(DecorationKind::T, FaceType::new(0, 1), &[(1, 1)]));
        assert!(decoration_fits(DecorationKind::T, FaceType::new(2, 2), &[(1, 1), (2, 2)]));
    }
}
