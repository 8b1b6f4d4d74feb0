//! Weighted quadrant tandem walks, by dynamic programming over positions.

use crate::walks::{attached_count, Alphabet};

use super::{ModelSpec, Semiring, VPoly, WeightKind};

impl WeightKind {
    /// `w(i, j)` as a polynomial in `v`.
    pub fn weight(&self, i: usize, j: usize) -> VPoly {
        match self {
            WeightKind::Indicator => VPoly::constant(u32::from(i > 0 && j > 0)),
            WeightKind::Binomial => attached_count(Alphabet::V, i, j).expect("defined everywhere"),
            WeightKind::Transversal => attached_count(Alphabet::T, i, j).unwrap_or_default(),
        }
    }
}

/// `Σ c_k v^k` in `R`.
pub fn eval_in<R: Semiring>(p: &VPoly, v: &R) -> R {
    let mut acc = R::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul_ref(v);
        acc.add_ref(&R::from_nat(c));
    }
    acc
}

/// Values indexed `[x][y]` with `x <= xmax`, `y <= ymax`.
#[derive(Clone)]
struct Grid<R> {
    cells: Vec<Vec<R>>,
}

impl<R: Semiring> Grid<R> {
    fn new(xmax: usize, ymax: usize) -> Self {
        Grid { cells: vec![vec![R::zero(); ymax + 1]; xmax + 1] }
    }

    fn xmax(&self) -> usize {
        self.cells.len() - 1
    }

    fn ymax(&self) -> usize {
        self.cells[0].len() - 1
    }

    fn get(&self, x: usize, y: usize) -> Option<&R> {
        self.cells.get(x).and_then(|c| c.get(y))
    }
}

/// Face-step contributions `Σ_{i,j} w(i,j) old[x+i][y-j]`, for every
/// position of `old`'s domain.
fn face_sums<R: Semiring>(kind: WeightKind, old: &Grid<R>, v: &R) -> Grid<R> {
    let (xm, ym) = (old.xmax(), old.ymax());
    let mut acc: Grid<R> = Grid::new(xm, ym);
    for x in (0..=xm).rev() {
        for y in 0..=ym {
            let mut a = old.cells[x][y].clone();
            match kind {
                WeightKind::Indicator => {
                    // prefix over y, then suffix over x
                    if y > 0 {
                        let below = acc.cells[x][y - 1].clone();
                        a.add_ref(&below);
                    }
                }
                WeightKind::Binomial | WeightKind::Transversal => {
                    if x < xm {
                        a.add_ref(&acc.cells[x + 1][y]);
                    }
                    if y > 0 {
                        let below = acc.cells[x][y - 1].clone();
                        a.add_ref(&below);
                        if kind == WeightKind::Transversal && x < xm {
                            a.add_ref(&acc.cells[x + 1][y - 1].mul_ref(v));
                        }
                    }
                }
            }
            acc.cells[x][y] = a;
        }
    }
    if kind == WeightKind::Indicator {
        for x in (0..xm).rev() {
            for y in 0..=ym {
                let right = acc.cells[x + 1][y].clone();
                acc.cells[x][y].add_ref(&right);
            }
        }
    }
    match kind {
        WeightKind::Binomial => acc,
        // both weights vanish on the axes: shift by (1, 1)
        WeightKind::Indicator | WeightKind::Transversal => {
            let mut out = Grid::new(xm, ym);
            for x in 0..xm {
                for y in 1..=ym {
                    out.cells[x][y] = acc.cells[x + 1][y - 1].clone();
                }
            }
            out
        }
    }
}

fn face_sums_naive<R: Semiring>(kind: WeightKind, old: &Grid<R>, v: &R) -> Grid<R> {
    let (xm, ym) = (old.xmax(), old.ymax());
    let mut out = Grid::new(xm, ym);
    for x2 in 0..=xm {
        for y2 in 0..=ym {
            let mut a = R::zero();
            for x in x2..=xm {
                for y in 0..=y2 {
                    let w = eval_in(&kind.weight(x - x2, y2 - y), v);
                    a.add_ref(&w.mul_ref(&old.cells[x][y]));
                }
            }
            out.cells[x2][y2] = a;
        }
    }
    out
}

/// One step: face-steps from `old`, and `SE` from `old` (optionally into a
/// separate grid).
fn advance<R: Semiring>(kind: WeightKind, old: &Grid<R>, v: &R, naive: bool, ymax: usize) -> (Grid<R>, Grid<R>) {
    let faces = if naive { face_sums_naive(kind, old, v) } else { face_sums(kind, old, v) };
    let mut face = Grid::new(old.xmax() + 1, ymax);
    let mut se = Grid::new(old.xmax() + 1, ymax);
    for x in 0..=old.xmax() {
        for y in 0..=ymax.min(old.ymax()) {
            face.cells[x][y] = faces.cells[x][y].clone();
        }
        for y in 1..=(ymax + 1).min(old.ymax()) {
            se.cells[x + 1][y - 1] = old.cells[x][y].clone();
        }
    }
    (face, se)
}

fn add_grid<R: Semiring>(a: &mut Grid<R>, b: &Grid<R>) {
    for (ra, rb) in a.cells.iter_mut().zip(&b.cells) {
        for (ca, cb) in ra.iter_mut().zip(rb) {
            ca.add_ref(cb);
        }
    }
}

fn end_value<R: Semiring>(g: &Grid<R>, end: Option<usize>) -> R {
    match end {
        Some(b) => g.get(b, 0).cloned().unwrap_or_else(R::zero),
        None => {
            let mut s = R::zero();
            for x in 0..=g.xmax() {
                s.add_ref(&g.cells[x][0]);
            }
            s
        }
    }
}

fn run<R: Semiring>(spec: &ModelSpec, max_len: usize, v: &R, naive: bool) -> Vec<R> {
    let mut out = Vec::with_capacity(max_len + 1);
    if spec.start > max_len {
        return vec![R::zero(); max_len + 1];
    }
    // y must come back to 0, and only SE lowers it
    let mut g = Grid::new(0, max_len);
    g.cells[0][spec.start] = R::one();
    out.push(end_value(&g, spec.end));
    for k in 0..max_len {
        let (mut face, se) = advance(spec.weight, &g, v, naive, max_len - k - 1);
        add_grid(&mut face, &se);
        g = face;
        out.push(end_value(&g, spec.end));
    }
    out
}

/// Weighted counts of walks of every length `0..=max_len` for `spec`, with
/// `v` substituted for the weight variable.
pub fn weighted_counts<R: Semiring>(spec: &ModelSpec, max_len: usize, v: &R) -> Vec<R> {
    run(spec, max_len, v, false)
}

/// Same as [`weighted_counts`] with face-step sums computed term by term.
pub fn weighted_counts_naive<R: Semiring>(spec: &ModelSpec, max_len: usize, v: &R) -> Vec<R> {
    run(spec, max_len, v, true)
}

/// Weighted count of walks of `length` steps, as a polynomial in `v`.
pub fn weighted_count(spec: &ModelSpec, length: usize) -> VPoly {
    weighted_counts(spec, length, &VPoly::v()).pop().expect("nonempty")
}

/// `[length][s]`: weighted counts split by the number `s` of `SE` steps.
pub fn weighted_counts_marked<R: Semiring>(spec: &ModelSpec, max_len: usize, v: &R) -> Vec<Vec<R>> {
    let mut out = Vec::with_capacity(max_len + 1);
    if spec.start > max_len {
        return vec![vec![R::zero(); max_len + 1]; max_len + 1];
    }
    let mut gs = vec![Grid::new(0, max_len)];
    gs[0].cells[0][spec.start] = R::one();
    out.push(vec![end_value(&gs[0], spec.end)]);
    for k in 0..max_len {
        let mut next: Vec<Grid<R>> = Vec::with_capacity(gs.len() + 1);
        for (s, g) in gs.iter().enumerate() {
            let (face, se) = advance(spec.weight, g, v, false, max_len - k - 1);
            if s < next.len() {
                add_grid(&mut next[s], &face);
            } else {
                next.push(face);
            }
            next.push(se);
        }
        gs = next;
        out.push(gs.iter().map(|g| end_value(g, spec.end)).collect());
    }
    out
}
