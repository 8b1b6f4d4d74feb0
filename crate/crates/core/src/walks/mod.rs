//! Quadrant tandem walks and the small walks attached to their face-steps.

mod enumerate;
mod format;

use thiserror::Error;

use crate::counting::{BigNat, VPoly};
use crate::maps::FaceType;

pub use enumerate::{attached_walks, enumerate_walks, WalkEnumerator};
pub use format::{ParseWalkError, WalkJson};

/// A tandem step: `SE = (+1, -1)` or a face-step `(-i, +j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Face(FaceType),
    SE,
}

impl Step {
    pub fn face(i: usize, j: usize) -> Self {
        Step::Face(FaceType::new(i, j))
    }

    pub fn displacement(&self) -> (i64, i64) {
        match self {
            Step::SE => (1, -1),
            Step::Face(t) => (-(t.i as i64), t.j as i64),
        }
    }
}

/// Letters of attached walks. `W = (-1, 0)`, `N = (0, 1)`, `NW = (-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    N,
    NW,
    W,
}

impl Letter {
    pub fn displacement(&self) -> (usize, usize) {
        match self {
            Letter::W => (1, 0),
            Letter::N => (0, 1),
            Letter::NW => (1, 1),
        }
    }
}

/// Which completion an attached walk encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Letters `{W, N}`.
    V,
    /// Letters `{W, N, NW}`, the first letter being a marked `NW`.
    T,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttachedWalk {
    pub alphabet: Alphabet,
    pub letters: Vec<Letter>,
}

impl AttachedWalk {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        AttachedWalk { alphabet, letters }
    }

    /// `(i, j)` with total displacement `(-i, j)`.
    pub fn span(&self) -> (usize, usize) {
        self.letters.iter().fold((0, 0), |(a, b), l| {
            let (x, y) = l.displacement();
            (a + x, b + y)
        })
    }

    /// Checks the alphabet and that the walk ends at `(-i, j)`.
    pub fn fits(&self, t: FaceType) -> bool {
        let alphabet_ok = match self.alphabet {
            Alphabet::V => self.letters.iter().all(|&l| l != Letter::NW),
            Alphabet::T => self.letters.first() == Some(&Letter::NW),
        };
        alphabet_ok && self.span() == (t.i, t.j)
    }

    /// Unmarked `NW` letters.
    pub fn unmarked_nw(&self) -> usize {
        let skip = usize::from(self.alphabet == Alphabet::T);
        self.letters.iter().skip(skip).filter(|&&l| l == Letter::NW).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkStep {
    pub step: Step,
    pub attached: Option<AttachedWalk>,
}

impl From<Step> for WalkStep {
    fn from(step: Step) -> Self {
        WalkStep { step, attached: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkClass {
    Plain,
    /// Face-steps have `i, j >= 1`.
    E,
    /// Face-steps carry a `{W, N}` walk.
    V,
    /// Face-steps have `i, j >= 1` and carry a `{W, N, NW}` walk.
    T,
}

impl WalkClass {
    pub fn alphabet(&self) -> Option<Alphabet> {
        match self {
            WalkClass::V => Some(Alphabet::V),
            WalkClass::T => Some(Alphabet::T),
            _ => None,
        }
    }

    /// Smallest allowed `i` and `j` in face-steps.
    pub fn min_face_entry(&self) -> usize {
        match self {
            WalkClass::E | WalkClass::T => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk leaves the quadrant at step {0}")]
    LeftQuadrant(usize),
    #[error("step {0} is not allowed in this walk class")]
    ClassViolation(usize),
    #[error("attached walk of step {0} does not match")]
    AttachedMismatch(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TandemWalk {
    pub start: (usize, usize),
    pub steps: Vec<WalkStep>,
    pub class: WalkClass,
}

impl TandemWalk {
    pub fn new(start: (usize, usize), steps: Vec<WalkStep>, class: WalkClass) -> Self {
        TandemWalk { start, steps, class }
    }

    pub fn plain(start: (usize, usize), steps: Vec<Step>) -> Self {
        TandemWalk { start, steps: steps.into_iter().map(WalkStep::from).collect(), class: WalkClass::Plain }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Points visited, starting point included.
    pub fn positions(&self) -> Vec<(i64, i64)> {
        let mut p = (self.start.0 as i64, self.start.1 as i64);
        let mut out = vec![p];
        for s in &self.steps {
            let (dx, dy) = s.step.displacement();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.positions().last().unwrap()
    }

    pub fn se_count(&self) -> usize {
        self.steps.iter().filter(|s| s.step == Step::SE).count()
    }

    pub fn face_types(&self) -> Vec<FaceType> {
        self.steps
            .iter()
            .filter_map(|s| match s.step {
                Step::Face(t) => Some(t),
                Step::SE => None,
            })
            .collect()
    }

    /// Same steps without attached walks, as a plain walk.
    pub fn underlying(&self) -> TandemWalk {
        TandemWalk::plain(self.start, self.steps.iter().map(|s| s.step).collect())
    }

    pub fn unmarked_nw(&self) -> usize {
        self.steps.iter().filter_map(|s| s.attached.as_ref()).map(|a| a.unmarked_nw()).sum()
    }

    pub fn validate(&self) -> Result<(), WalkError> {
        validate_walk(self)
    }
}

/// Checks the quadrant property and the class constraints step by step.
pub fn validate_walk(w: &TandemWalk) -> Result<(), WalkError> {
    let (mut x, mut y) = (w.start.0 as i64, w.start.1 as i64);
    let min = w.class.min_face_entry();
    for (k, s) in w.steps.iter().enumerate() {
        if let Step::Face(t) = s.step {
            if t.i < min || t.j < min {
                return Err(WalkError::ClassViolation(k));
            }
            match (w.class.alphabet(), &s.attached) {
                (None, None) => {}
                (Some(a), Some(att)) if att.alphabet == a && att.fits(t) => {}
                _ => return Err(WalkError::AttachedMismatch(k)),
            }
        } else if s.attached.is_some() {
            return Err(WalkError::AttachedMismatch(k));
        }
        let (dx, dy) = s.step.displacement();
        x += dx;
        y += dy;
        if x < 0 || y < 0 {
            return Err(WalkError::LeftQuadrant(k));
        }
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigNat {
    let mut acc = BigNat::from(1u32);
    for t in 0..k {
        acc = acc * BigNat::from(n - t) / BigNat::from(t + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("attached walks of kind T need i >= 1 and j >= 1")]
pub struct DomainError;

/// Number of attached walks for a face of type `(i, j)`; for `T` the
/// variable `v` counts unmarked `NW` letters.
pub fn attached_count(kind: Alphabet, i: usize, j: usize) -> Result<VPoly, DomainError> {
    match kind {
        Alphabet::V => Ok(VPoly::constant(binomial(i + j, i))),
        Alphabet::T => {
            if i == 0 || j == 0 {
                return Err(DomainError);
            }
            let coeffs = (0..i.min(j))
                .map(|r| {
                    // (i+j-2-r)! / ((i-1-r)! (j-1-r)! r!)
                    binomial(i + j - 2 - r, r) * binomial(i + j - 2 - 2 * r, i - 1 - r)
                })
                .collect();
            Ok(VPoly::from_coeffs(coeffs))
        }
    }
}
