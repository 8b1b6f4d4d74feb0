//! The generating tree shared by plane permutations and plane bipolar
//! posets: active points and vertices, child and parent moves, and the
//! succession rule on labels.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::maps::{BipolarMap, Upward};

use super::{avoids_2_14_3, is_plane, PermError, Permutation};

/// Numbers of upper-active and lower-active points (or vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GTLabel {
    pub h: usize,
    pub k: usize,
}

impl GTLabel {
    pub fn new(h: usize, k: usize) -> Self {
        GTLabel { h, k }
    }

    /// Labels of the children, in child order.
    pub fn children(&self) -> Vec<GTLabel> {
        let (h, k) = (self.h, self.k);
        (1..=h).map(|j| GTLabel::new(j, k + 1)).chain((h + 1..=h + k).map(|j| GTLabel::new(j, h + k + 1 - j))).collect()
    }
}

impl fmt::Display for GTLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.k)
    }
}

/// Active points of the completion, as abscissae (`0` is the origin),
/// each list by decreasing ordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivePoints {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl ActivePoints {
    pub fn label(&self) -> GTLabel {
        GTLabel::new(self.upper.len(), self.lower.len())
    }

    pub fn downward(&self) -> Vec<usize> {
        self.upper.iter().chain(&self.lower).copied().collect()
    }
}

/// Ordinates `a - 1` such that appending `a` keeps the permutation plane.
fn active_ordinates_by_insertion(p: &Permutation) -> Vec<usize> {
    (1..=p.len() + 1).filter(|&a| avoids_2_14_3(&p.append_value(a))).map(|a| a - 1).collect()
}

/// The origin, plus the points that are not the left element of a 213.
fn active_ordinates_by_pattern(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    let n = v.len();
    let mut out = vec![0];
    for i in 0..n {
        let blocked = (i + 1..n).any(|j| v[j] < v[i] && v[j + 1..].iter().any(|&c| c > v[i]));
        if !blocked {
            out.push(v[i]);
        }
    }
    out.sort_unstable();
    out
}

/// Active points, computed by the insertion test and the 213 test, which
/// are asserted to agree.
pub fn active_points(p: &Permutation) -> Result<ActivePoints, PermError> {
    if p.is_empty() {
        return Err(PermError::TooSmall);
    }
    if !avoids_2_14_3(p) {
        return Err(PermError::NotPlane);
    }
    let by_insertion = active_ordinates_by_insertion(p);
    let by_pattern = active_ordinates_by_pattern(p);
    assert_eq!(by_insertion, by_pattern, "active point characterisations disagree on {p}");
    let inv = p.inverse();
    let last = p.value(p.len());
    let abscissa = |y: usize| if y == 0 { 0 } else { inv.value(y) };
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for &y in by_insertion.iter().rev() {
        if y >= last {
            upper.push(abscissa(y));
        } else {
            lower.push(abscissa(y));
        }
    }
    Ok(ActivePoints { upper, lower })
}

/// Appends `a`; `a` must be active.
pub fn perm_child(p: &Permutation, a: usize) -> Result<Permutation, PermError> {
    if a == 0 || a > p.len() + 1 {
        return Err(PermError::InactiveValue(a));
    }
    let child = p.append_value(a);
    if !avoids_2_14_3(&child) {
        return Err(PermError::InactiveValue(a));
    }
    Ok(child)
}

/// The `j`-th child (from 1), following the downward order of active points.
pub fn perm_child_by_index(p: &Permutation, j: usize) -> Result<Permutation, PermError> {
    let active = if p.is_empty() { vec![0] } else { active_points(p)?.downward() };
    let &x = active.get(j.wrapping_sub(1)).ok_or(PermError::IndexOutOfRange(j))?;
    let y = if x == 0 { 0 } else { p.value(x) };
    perm_child(p, y + 1)
}

pub fn perm_parent(p: &Permutation) -> Result<Permutation, PermError> {
    if p.len() < 2 {
        return Err(PermError::TooSmall);
    }
    Ok(p.remove_last())
}

/// Plane permutations of size `n`, generated through the tree.
pub fn plane_permutations(n: usize) -> Vec<Permutation> {
    let mut level = vec![Permutation::identity(0)];
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|p| {
                let count = if p.is_empty() { 1 } else { active_points(p).expect("plane").downward().len() };
                (1..=count).map(move |j| perm_child_by_index(p, j).expect("active index"))
            })
            .collect();
    }
    debug_assert!(n > 8 || level.iter().all(is_plane));
    level
}

/// Active vertices of a poset, each list in downward order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveVertices {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl ActiveVertices {
    pub fn label(&self) -> GTLabel {
        GTLabel::new(self.upper.len(), self.lower.len())
    }

    pub fn downward(&self) -> Vec<usize> {
        self.upper.iter().chain(&self.lower).copied().collect()
    }
}

/// Where a vertex sits among the active ones.
enum Slot {
    /// `i`-th in-neighbour of the sink (from 0).
    QuasiMax(usize),
    /// On the left boundary of the `i`-th upper face (from 0).
    Upper(usize),
    Lower,
}

fn classify(b: &BipolarMap) -> (Upward, Vec<(usize, Slot)>) {
    let up = b.upward();
    let infos = b.face_infos();
    let face_of = b.map().faces().face_of;
    let sink = b.sink();
    let tail = |e: usize| up.edges[e].0;
    let head = |e: usize| up.edges[e].1;
    let top_edges = &up.ins[sink];
    let s = top_edges.len() - 1;
    let mut slots = Vec::new();
    for (i, &e) in top_edges[..s].iter().enumerate() {
        let info = &infos[face_of[b.up_half(e)]];
        debug_assert!(!info.outer && info.left.last() == Some(&e));
        let interior = &info.left[..info.left.len() - 1];
        for &g in interior.iter().rev() {
            let v = head(g);
            slots.push((v, if v == tail(e) { Slot::QuasiMax(i) } else { Slot::Upper(i) }));
        }
    }
    let u = tail(top_edges[s]);
    slots.push((u, Slot::QuasiMax(s)));
    let outer = &infos[b.outer_face()];
    for &g in outer.right.iter().rev() {
        let v = tail(g);
        if v != u {
            slots.push((v, Slot::Lower));
        }
    }
    (up, slots)
}

/// Active vertices: the left boundaries of the faces below the sink (without
/// their extremities) and the top-right vertex, then the right boundary below
/// the top-right vertex.
pub fn active_vertices(b: &BipolarMap) -> Result<ActiveVertices, PermError> {
    if !b.is_poset() {
        return Err(PermError::NotAPoset);
    }
    let (_, slots) = classify(b);
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (v, slot) in slots {
        match slot {
            Slot::Lower => lower.push(v),
            _ => upper.push(v),
        }
    }
    Ok(ActiveVertices { upper, lower })
}

pub fn poset_label(b: &BipolarMap) -> Result<GTLabel, PermError> {
    Ok(active_vertices(b)?.label())
}

/// The child obtained at the active vertex `v`; it has one more vertex.
pub fn poset_child(b: &BipolarMap, v: usize) -> Result<BipolarMap, PermError> {
    if !b.is_poset() {
        return Err(PermError::NotAPoset);
    }
    let (mut up, slots) = classify(b);
    let (_, slot) = slots.into_iter().find(|(w, _)| *w == v).ok_or(PermError::InactiveVertex(v))?;
    let sink = b.sink();
    let top_edges = up.ins[sink].clone();
    let u2 = up.add_vertex();
    let top = up.add_edge(u2, sink);
    up.outs[u2] = vec![top];
    let redirect = |up: &mut Upward, from: usize, extra: Option<usize>| {
        let mut ins: Vec<usize> = extra.into_iter().collect();
        for &e in &top_edges[from..] {
            up.edges[e].1 = u2;
            ins.push(e);
        }
        up.ins[u2] = ins;
        up.ins[sink] = top_edges[..from].to_vec();
        up.ins[sink].push(top);
    };
    match slot {
        Slot::QuasiMax(i) => redirect(&mut up, i, None),
        Slot::Upper(i) => {
            let e = up.add_edge(v, u2);
            up.outs[v].push(e);
            redirect(&mut up, i + 1, Some(e));
        }
        Slot::Lower => {
            let e = up.add_edge(v, u2);
            up.outs[v].push(e);
            up.ins[u2] = vec![e];
            up.ins[sink].push(top);
        }
    }
    Ok(up.build(b.source(), sink)?.canonical())
}

/// The `j`-th child (from 1) in the downward order of active vertices.
pub fn poset_child_by_index(b: &BipolarMap, j: usize) -> Result<BipolarMap, PermError> {
    let active = active_vertices(b)?.downward();
    let &v = active.get(j.wrapping_sub(1)).ok_or(PermError::IndexOutOfRange(j))?;
    poset_child(b, v)
}

/// Contracts the top-right edge, deleting the edge that becomes transitive
/// if there is one.
pub fn poset_parent(b: &BipolarMap) -> Result<BipolarMap, PermError> {
    if !b.is_poset() {
        return Err(PermError::NotAPoset);
    }
    if b.vertex_count() < 4 {
        return Err(PermError::TooSmall);
    }
    let mut up = b.upward();
    let infos = b.face_infos();
    let sink = b.sink();
    let e = *up.ins[sink].last().unwrap();
    let u = up.edges[e].0;
    debug_assert_eq!(up.outs[u], vec![e]);
    let mut keep_edge = vec![true; up.edges.len()];
    let mut keep_vertex = vec![true; up.vertex_count()];
    keep_edge[e] = false;
    keep_vertex[u] = false;
    if let Some(f) = infos.iter().find(|f| !f.outer && f.right.last() == Some(&e)) {
        if f.right.len() == 2 {
            let eps = f.right[0];
            keep_edge[eps] = false;
            let t = up.edges[eps].0;
            up.outs[t].retain(|&g| g != eps);
            up.ins[u].retain(|&g| g != eps);
        }
    }
    up.ins[sink].pop();
    let moved = std::mem::take(&mut up.ins[u]);
    for &g in &moved {
        up.edges[g].1 = sink;
    }
    up.ins[sink].extend(moved);
    let (compact, vmap) = up.compact(&keep_vertex, &keep_edge);
    Ok(compact.build(vmap[b.source()].unwrap(), vmap[sink].unwrap())?.canonical())
}

/// Plane bipolar posets with `n` non-pole vertices, generated through the
/// tree.
pub fn plane_posets(n: usize) -> Vec<BipolarMap> {
    let mut up = Upward::with_vertices(2);
    let e = up.add_edge(0, 1);
    up.outs[0] = vec![e];
    up.ins[1] = vec![e];
    let mut level = vec![up.build(0, 1).expect("single edge").canonical()];
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|b| {
                let count = if b.vertex_count() == 2 { 1 } else { active_vertices(b).expect("poset").downward().len() };
                (1..=count).map(move |j| poset_child_by_index(b, j).expect("active index"))
            })
            .collect();
    }
    level
}

/// Label multisets and totals of the succession rule, level by level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaLevels {
    /// `levels[n - 1]` maps each label at size `n` to its multiplicity.
    pub levels: Vec<BTreeMap<GTLabel, BigUint>>,
}

impl OmegaLevels {
    pub fn totals(&self) -> Vec<BigUint> {
        self.levels.iter().map(|l| l.values().sum()).collect()
    }

    /// `level,h,k,count` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("level,h,k,count\n");
        for (n, level) in self.levels.iter().enumerate() {
            for (label, count) in level {
                out.push_str(&format!("{},{},{},{}\n", n + 1, label.h, label.k, count));
            }
        }
        out
    }
}

pub fn omega_counts(n_max: usize) -> OmegaLevels {
    let mut levels = Vec::with_capacity(n_max);
    if n_max == 0 {
        return OmegaLevels { levels };
    }
    let mut cur = BTreeMap::new();
    cur.insert(GTLabel::new(1, 1), BigUint::one());
    for _ in 1..n_max {
        let mut next: BTreeMap<GTLabel, BigUint> = BTreeMap::new();
        for (label, count) in &cur {
            for child in label.children() {
                *next.entry(child).or_insert_with(BigUint::zero) += count;
            }
        }
        levels.push(std::mem::replace(&mut cur, next));
    }
    levels.push(cur);
    OmegaLevels { levels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::phi_map_labelled;

    fn path() -> BipolarMap {
        phi_map_labelled(&Permutation::identity(1)).unwrap().0
    }

    #[test]
    fn labels_of_small_permutations() {
        let label = |s: &str| active_points(&s.parse().unwrap()).unwrap().label();
        assert_eq!(label("1"), GTLabel::new(1, 1));
        assert_eq!(label("1 2"), GTLabel::new(1, 2));
        assert_eq!(label("2 1"), GTLabel::new(2, 1));
    }

    #[test]
    fn child_and_parent() {
        let one = Permutation::identity(1);
        assert_eq!(perm_child(&one, 2).unwrap().values(), &[1, 2]);
        assert_eq!(perm_child(&one, 1).unwrap().values(), &[2, 1]);
        let c = perm_child(&Permutation::identity(2), 1).unwrap();
        assert_eq!(c.values(), &[2, 3, 1]);
        assert_eq!(perm_parent(&c).unwrap(), Permutation::identity(2));
        let p: Permutation = "2 1 3".parse().unwrap();
        assert_eq!(perm_child(&p, 3), Err(PermError::InactiveValue(3)));
    }

    #[test]
    fn omega_levels() {
        let o = omega_counts(6);
        let totals: Vec<u64> = o.totals().iter().map(|t| t.try_into().unwrap()).collect();
        assert_eq!(totals, vec![1, 2, 6, 23, 104, 530]);
        let level2: Vec<GTLabel> = o.levels[1].keys().copied().collect();
        assert_eq!(level2, vec![GTLabel::new(1, 2), GTLabel::new(2, 1)]);
        assert!(o.to_csv().starts_with("level,h,k,count\n1,1,1,1\n"));
    }

    #[test]
    fn path_children() {
        let p = path();
        let av = active_vertices(&p).unwrap();
        assert_eq!(av.label(), GTLabel::new(1, 1));
        let longer = poset_child(&p, av.upper[0]).unwrap();
        assert_eq!((longer.vertex_count(), longer.edge_count()), (4, 3));
        let diamond = poset_child(&p, p.source()).unwrap();
        assert_eq!(diamond, phi_map_labelled(&"2 1".parse().unwrap()).unwrap().0);
        assert_eq!(poset_label(&diamond).unwrap(), GTLabel::new(2, 1));
        assert_eq!(poset_parent(&diamond).unwrap(), p);
        assert_eq!(poset_parent(&longer).unwrap(), p);
        assert_eq!(poset_child(&p, p.sink()), Err(PermError::InactiveVertex(p.sink())));
    }

    #[test]
    fn trees_agree_on_small_sizes() {
        for n in 1..=5 {
            let perms = plane_permutations(n);
            let posets = plane_posets(n);
            assert_eq!(perms.len(), posets.len());
            for b in &posets {
                let parent = if n == 1 { None } else { Some(poset_parent(b).unwrap()) };
                for j in 1..=active_vertices(b).unwrap().downward().len() {
                    let c = poset_child_by_index(b, j).unwrap();
                    assert_eq!(poset_parent(&c).unwrap(), *b);
                }
                if let Some(parent) = parent {
                    assert!(parent.is_poset());
                }
            }
        }
    }
}
