//! Exact counting of weighted quadrant tandem walks, and the sequences of
//! plane bipolar posets and transversal structures.

mod sequences;
mod tandem;
mod vpoly;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use sequences::{
    b_sequence, e_sequence, e_sequence_by_weights, series_relation_check, t_sequence, t_sequence_by_walks, RelationReport,
    SequenceExport, TMode, TTerms,
};
pub use tandem::{eval_in, weighted_count, weighted_counts, weighted_counts_marked, weighted_counts_naive};
pub use vpoly::{BigNat, VPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("weight v = {0} is negative")]
    NegativeWeight(BigRational),
    #[error("series identity fails at n = {0}")]
    MismatchAt(usize),
}

/// Commutative semiring in which walk weights are accumulated.
pub trait Semiring: Clone + Zero + One {
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_nat(n: &BigNat) -> Self;
}

impl Semiring for BigUint {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_nat(n: &BigNat) -> Self {
        n.clone()
    }
}

impl Semiring for BigRational {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_nat(n: &BigNat) -> Self {
        BigRational::from_integer(n.clone().into())
    }
}

impl Semiring for VPoly {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_nat(n: &BigNat) -> Self {
        VPoly::constant(n.clone())
    }
}

/// Face-step weight `w(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    /// `1` if `i > 0` and `j > 0`: posets counted by edges.
    Indicator,
    /// `C(i + j, i)`: posets counted by vertices.
    Binomial,
    /// Attached `{W, N, NW}` walks, `v` per unmarked `NW`: transversal
    /// structures.
    Transversal,
}

/// Walks from `(0, start)` to `(end, 0)`; `end = None` sums over every
/// endpoint on the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelSpec {
    pub weight: WeightKind,
    pub start: usize,
    pub end: Option<usize>,
}

impl ModelSpec {
    pub fn new(weight: WeightKind, start: usize, end: Option<usize>) -> Self {
        ModelSpec { weight, start, end }
    }
}
