//! Posets counted by vertices as bipolar orientations with a transversal
//! completion in every inner face.

use crate::maps::{BipolarMap, DecoratedBipolar, DecorationError, DecorationKind, Upward};
use crate::walks::TandemWalk;

use super::{decorated_to_walk, walk_to_decorated, KmswError};

/// Poset whose vertices are the edges of the base plus two poles; the
/// decoration edges become its inner edges.
pub fn phi_v(d: &DecoratedBipolar) -> Result<BipolarMap, KmswError> {
    if d.kind() != DecorationKind::V {
        return Err(DecorationError::InvalidDecoration(0).into());
    }
    let b = d.base();
    let infos = b.face_infos();
    let m = b.edge_count();
    let (s, n) = (m, m + 1);
    let mut up = Upward::with_vertices(m + 2);
    let mut outs_tmp: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut ins_tmp: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (k, &f) in b.inner_faces().iter().enumerate() {
        let info = &infos[f];
        for &(l, r) in &d.decorations()[k] {
            let (t, h) = (info.left[l], info.right[r]);
            let id = up.add_edge(t, h);
            outs_tmp[t].push(id);
            ins_tmp[h].push(id);
        }
    }
    let outer = &infos[b.outer_face()];
    let mut on_left = vec![false; m];
    let mut on_right = vec![false; m];
    for &e in &outer.left {
        let id = up.add_edge(s, e);
        up.outs[s].insert(0, id);
        up.ins[e] = vec![id];
        on_left[e] = true;
    }
    for &e in &outer.right {
        let id = up.add_edge(e, n);
        up.ins[n].insert(0, id);
        up.outs[e] = vec![id];
        on_right[e] = true;
    }
    for e in 0..m {
        if !on_left[e] {
            up.ins[e] = ins_tmp[e].iter().rev().copied().collect();
        }
        if !on_right[e] {
            up.outs[e] = outs_tmp[e].iter().rev().copied().collect();
        }
    }
    Ok(up.build(s, n)?.canonical())
}

/// Inverse of [`phi_v`]: one black vertex per inner face of the poset, plus
/// two poles, and one edge per non-pole vertex.
pub fn psi_v(p: &BipolarMap) -> Result<DecoratedBipolar, KmswError> {
    if !p.is_poset() {
        return Err(KmswError::NotAPoset);
    }
    let pu = p.upward();
    let infos = p.face_infos();
    let nv = p.vertex_count();
    let inner = p.inner_faces();
    let (s2, n2) = (0usize, 1usize);
    let black = |f: usize| 2 + inner.iter().position(|&g| g == f).unwrap();
    let head = |e: usize| pu.edges[e].1;
    // black vertex at the right (tail side) and left (head side) lateral corners
    let mut tail_of = vec![usize::MAX; nv];
    let mut head_of = vec![usize::MAX; nv];
    for (f, info) in infos.iter().enumerate() {
        let interior = |path: &[usize]| path[..path.len() - 1].iter().map(|&e| head(e)).collect::<Vec<_>>();
        for w in interior(&info.left) {
            if info.outer {
                head_of[w] = n2;
            } else {
                tail_of[w] = black(f);
            }
        }
        for w in interior(&info.right) {
            if info.outer {
                tail_of[w] = s2;
            } else {
                head_of[w] = black(f);
            }
        }
    }
    let mut up = Upward::with_vertices(2 + inner.len());
    let mut edge_of = vec![usize::MAX; nv];
    for w in 0..nv {
        if w != p.source() && w != p.sink() {
            edge_of[w] = up.add_edge(tail_of[w], head_of[w]);
        }
    }
    let mut white = vec![usize::MAX; up.edges.len()];
    for w in 0..nv {
        if edge_of[w] != usize::MAX {
            white[edge_of[w]] = w;
        }
    }
    for (f, info) in infos.iter().enumerate() {
        let interior: Vec<usize> = info.left[..info.left.len() - 1].iter().map(|&e| edge_of[head(e)]).collect();
        let interior_r: Vec<usize> = info.right[..info.right.len() - 1].iter().map(|&e| edge_of[head(e)]).collect();
        if info.outer {
            up.ins[n2] = interior;
            up.outs[s2] = interior_r;
        } else {
            up.outs[black(f)] = interior;
            up.ins[black(f)] = interior_r;
        }
    }
    let base = up.build(s2, n2)?;
    let binfos = base.face_infos();
    let mut decorations = Vec::new();
    for &f in &base.inner_faces() {
        let info = &binfos[f];
        let mut pairs = Vec::new();
        for (l, &el) in info.left.iter().enumerate() {
            for &pe in &pu.outs[white[el]] {
                let target = pu.edges[pe].1;
                let r = info.right.iter().position(|&er| white[er] == target).ok_or(DecorationError::InvalidDecoration(f))?;
                pairs.push((l, r));
            }
        }
        pairs.sort_unstable();
        decorations.push(pairs);
    }
    Ok(DecoratedBipolar::new(base, DecorationKind::V, decorations)?.canonical())
}

/// Walk with `{W, N}` attached walks of a poset counted by vertices.
pub fn poset_to_v_walk(p: &BipolarMap) -> Result<TandemWalk, KmswError> {
    Ok(decorated_to_walk(&psi_v(p)?))
}

pub fn v_walk_to_poset(w: &TandemWalk) -> Result<BipolarMap, KmswError> {
    phi_v(&walk_to_decorated(w)?)
}
