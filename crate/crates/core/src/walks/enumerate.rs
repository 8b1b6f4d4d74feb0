use crate::maps::FaceType;

use super::{Alphabet, AttachedWalk, Letter, Step, TandemWalk, WalkClass, WalkStep};

/// All attached walks of the given alphabet for a face of type `t`, in
/// lexicographic order of their letters.
pub fn attached_walks(alphabet: Alphabet, t: FaceType) -> Vec<AttachedWalk> {
    fn rec(i: usize, j: usize, letters: &mut Vec<Letter>, allowed: &[Letter], out: &mut Vec<Vec<Letter>>) {
        if i == 0 && j == 0 {
            out.push(letters.clone());
            return;
        }
        for &l in allowed {
            let (a, b) = l.displacement();
            if a <= i && b <= j {
                letters.push(l);
                rec(i - a, j - b, letters, allowed, out);
                letters.pop();
            }
        }
    }
    let mut out = Vec::new();
    match alphabet {
        Alphabet::V => rec(t.i, t.j, &mut Vec::new(), &[Letter::N, Letter::W], &mut out),
        Alphabet::T => {
            if t.i >= 1 && t.j >= 1 {
                rec(t.i - 1, t.j - 1, &mut vec![Letter::NW], &[Letter::N, Letter::NW, Letter::W], &mut out);
            }
        }
    }
    out.into_iter().map(|letters| AttachedWalk::new(alphabet, letters)).collect()
}

/// Lazy depth-first enumeration of quadrant tandem walks with fixed length
/// and endpoints. Steps are tried face-steps first, by increasing `(i, j)`
/// and attached walk, then `SE`.
#[derive(Debug, Clone)]
pub struct WalkEnumerator {
    class: WalkClass,
    length: usize,
    start: (i64, i64),
    end: (i64, i64),
    bound: usize,
    stack: Vec<(Vec<WalkStep>, usize)>,
    path: Vec<WalkStep>,
    pos: Vec<(i64, i64)>,
    started: bool,
}

/// Every walk of `class` with `length` steps from `start` to `end` whose
/// face-steps satisfy `i, j <= type_bound` (default: large enough to be
/// exhaustive).
pub fn enumerate_walks(
    class: WalkClass,
    length: usize,
    start: (usize, usize),
    end: (usize, usize),
    type_bound: Option<usize>,
) -> WalkEnumerator {
    let bound = type_bound.unwrap_or(length + start.1.max(end.0) + 1);
    WalkEnumerator {
        class,
        length,
        start: (start.0 as i64, start.1 as i64),
        end: (end.0 as i64, end.1 as i64),
        bound,
        stack: Vec::new(),
        path: Vec::new(),
        pos: Vec::new(),
        started: false,
    }
}

impl WalkEnumerator {
    /// Whether `end` can still be reached from `p` in `r` steps.
    fn feasible(&self, p: (i64, i64), r: usize) -> bool {
        if p.0 < 0 || p.1 < 0 {
            return false;
        }
        let min = self.class.min_face_entry() as i64;
        let r = r as i64;
        (0..=r).any(|s| {
            let f = r - s;
            let di = p.0 + s - self.end.0;
            let dj = self.end.1 - p.1 + s;
            if f == 0 {
                di == 0 && dj == 0
            } else {
                di >= f * min && dj >= f * min
            }
        })
    }

    fn choices(&self, p: (i64, i64), r: usize) -> Vec<WalkStep> {
        let mut out = Vec::new();
        let min = self.class.min_face_entry();
        let i_max = (p.0.max(0) as usize).min(self.bound);
        let j_cap = (self.end.1 + r as i64 - p.1).max(-1);
        for i in min..=i_max {
            if j_cap < min as i64 {
                break;
            }
            let j_max = (j_cap as usize).min(self.bound);
            for j in min..=j_max {
                let q = (p.0 - i as i64, p.1 + j as i64);
                if !self.feasible(q, r) {
                    continue;
                }
                let t = FaceType::new(i, j);
                match self.class.alphabet() {
                    None => out.push(WalkStep::from(Step::Face(t))),
                    Some(a) => {
                        for att in attached_walks(a, t) {
                            out.push(WalkStep { step: Step::Face(t), attached: Some(att) });
                        }
                    }
                }
            }
        }
        if self.feasible((p.0 + 1, p.1 - 1), r) {
            out.push(WalkStep::from(Step::SE));
        }
        out
    }

    fn walk(&self, path: Vec<WalkStep>) -> TandemWalk {
        TandemWalk::new((self.start.0 as usize, self.start.1 as usize), path, self.class)
    }
}

impl Iterator for WalkEnumerator {
    type Item = TandemWalk;

    fn next(&mut self) -> Option<TandemWalk> {
        if !self.started {
            self.started = true;
            if self.length == 0 {
                return (self.start == self.end).then(|| self.walk(Vec::new()));
            }
            self.pos.push(self.start);
            let ch = self.choices(self.start, self.length - 1);
            self.stack.push((ch, 0));
        }
        loop {
            let depth = self.stack.len();
            let (choices, idx) = self.stack.last_mut()?;
            if *idx == choices.len() {
                self.stack.pop();
                if self.path.pop().is_some() {
                    self.pos.pop();
                }
                continue;
            }
            let step = choices[*idx].clone();
            *idx += 1;
            let here = *self.pos.last().unwrap();
            let (dx, dy) = step.step.displacement();
            let p = (here.0 + dx, here.1 + dy);
            if depth == self.length {
                if p == self.end {
                    let mut path = self.path.clone();
                    path.push(step);
                    return Some(self.walk(path));
                }
                continue;
            }
            self.path.push(step);
            self.pos.push(p);
            let ch = self.choices(p, self.length - depth - 1);
            self.stack.push((ch, 0));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_counts() {
        assert_eq!(enumerate_walks(WalkClass::Plain, 0, (0, 0), (0, 0), None).count(), 1);
        let one: Vec<_> = enumerate_walks(WalkClass::Plain, 1, (0, 0), (0, 0), None).collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].steps[0].step, Step::face(0, 0));
    }

    #[test]
    fn e_class_length_three() {
        let mut total = 0;
        for a in 0..=3 {
            for b in 0..=3 {
                total += enumerate_walks(WalkClass::E, 3, (0, a), (b, 0), None).count();
            }
        }
        assert_eq!(total, 2);
    }

    #[test]
    fn walks_are_distinct_valid_and_sorted() {
        for class in [WalkClass::Plain, WalkClass::E, WalkClass::V, WalkClass::T] {
            for len in 0..=4 {
                let ws: Vec<_> = enumerate_walks(class, len, (0, 1), (1, 0), None).collect();
                for w in &ws {
                    assert_eq!(w.validate(), Ok(()));
                    assert_eq!(w.end(), (1, 0));
                    assert_eq!(w.len(), len);
                }
                let mut sorted = ws.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, ws);
            }
        }
    }

    #[test]
    fn t_walk_with_nw() {
        let ws = attached_walks(Alphabet::T, FaceType::new(2, 2));
        let letters: Vec<_> = ws.iter().map(|a| a.letters.clone()).collect();
        assert_eq!(
            letters,
            vec![vec![Letter::NW, Letter::N, Letter::W], vec![Letter::NW, Letter::NW], vec![Letter::NW, Letter::W, Letter::N]]
        );
    }
}
