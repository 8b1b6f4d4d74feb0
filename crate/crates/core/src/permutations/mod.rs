//! Plane permutations (avoiding the vincular pattern 2-14-3), their
//! bijection with plane bipolar posets, and the common generating tree.

mod bijection;
mod gentree;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::maps::BipolarError;

pub use bijection::{phi_map, phi_map_labelled, psi_map, tree_leaves};
pub use gentree::{
    active_points, active_vertices, omega_counts, perm_child, perm_child_by_index, perm_parent, plane_permutations,
    plane_posets, poset_child, poset_child_by_index, poset_label, poset_parent, ActivePoints, ActiveVertices, GTLabel,
    OmegaLevels,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("values do not form a permutation of 1..{0}")]
    NotAPermutation(usize),
    #[error("permutation contains the pattern 2-14-3")]
    NotPlane,
    #[error("orientation is not a plane bipolar poset")]
    NotAPoset,
    #[error("value {0} is not active")]
    InactiveValue(usize),
    #[error("vertex {0} is not active")]
    InactiveVertex(usize),
    #[error("child index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("object is too small for this operation")]
    TooSmall,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error(transparent)]
    Bipolar(#[from] BipolarError),
}

/// Permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Points `(i, π(i))`.
    pub fn points(&self) -> Vec<(usize, usize)> {
        self.values.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect()
    }

    /// Values of the completion on `0..=n+1`, fixing `0` and `n + 1`.
    pub fn completion(&self) -> Vec<usize> {
        let n = self.len();
        let mut c = Vec::with_capacity(n + 2);
        c.push(0);
        c.extend_from_slice(&self.values);
        c.push(n + 1);
        c
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn descents(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Appends the value `a` and shifts every value `≥ a` up by one.
    pub fn append_value(&self, a: usize) -> Permutation {
        let mut values: Vec<usize> = self.values.iter().map(|&v| if v >= a { v + 1 } else { v }).collect();
        values.push(a);
        Permutation { values }
    }

    /// Removes the last value and renormalises.
    pub fn remove_last(&self) -> Permutation {
        let last = *self.values.last().expect("nonempty permutation");
        let values = self.values[..self.len() - 1].iter().map(|&v| if v > last { v - 1 } else { v }).collect();
        Permutation { values }
    }

    /// Every permutation of size `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { values: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { values: cur.clone() });
        }
        out
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Space-separated values; a single token of digits is read digit by
    /// digit (`2143`).
    fn from_str(s: &str) -> Result<Self, PermError> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let values: Result<Vec<usize>, _> = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0].chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or(c)).collect::<Result<_, _>>().map_err(|c| c.to_string())
        } else {
            tokens.iter().map(|t| t.parse::<usize>().map_err(|_| t.to_string())).collect()
        };
        Permutation::new(values.map_err(|t| PermError::Parse(format!("bad token {t:?}")))?)
    }
}

/// No indices `a < b < b + 1 < c` with `π(b) < π(a) < π(c) < π(b + 1)`.
pub fn avoids_2_14_3(p: &Permutation) -> bool {
    let v = p.values();
    let n = v.len();
    for b in 1..n.saturating_sub(2) {
        let (lo, hi) = (v[b], v[b + 1]);
        if lo > hi {
            continue;
        }
        for a in 0..b {
            if v[a] <= lo || v[a] >= hi {
                continue;
            }
            if v[b + 2..].iter().any(|&c| c > v[a] && c < hi) {
                return false;
            }
        }
    }
    true
}

/// Cover pairs `(i, j)` of the dominance order on the points `(i, values[i])`.
pub(crate) fn dominance_covers(values: &[usize]) -> Vec<(usize, usize)> {
    let n = values.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if values[i] < values[j] && !(i + 1..j).any(|k| values[i] < values[k] && values[k] < values[j]) {
                covers.push((i, j));
            }
        }
    }
    covers
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

/// The Hasse diagram of the dominance order, drawn with straight segments,
/// has no crossing.
pub fn dominance_crossing_free(p: &Permutation) -> bool {
    let pts: Vec<(i64, i64)> = p.values().iter().enumerate().map(|(i, &v)| (i as i64, v as i64)).collect();
    let covers = dominance_covers(p.values());
    for (k, &(a, b)) in covers.iter().enumerate() {
        for &(c, d) in &covers[k + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (pts[a], pts[b], pts[c], pts[d]);
            if orient(pa, pb, pc) * orient(pa, pb, pd) < 0 && orient(pc, pd, pa) * orient(pc, pd, pb) < 0 {
                return false;
            }
        }
    }
    true
}

/// Pattern test and crossing test, asserted to agree.
pub fn is_plane(p: &Permutation) -> bool {
    let by_pattern = avoids_2_14_3(p);
    let by_drawing = dominance_crossing_free(p);
    assert_eq!(by_pattern, by_drawing, "plane characterisations disagree on {p}");
    by_pattern
}
