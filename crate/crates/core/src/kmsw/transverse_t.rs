//! Transversal structures as bipolar posets with a transversal addition in
//! every inner face.

use crate::maps::transversal::TransversalBuilder;
use crate::maps::{validate_bipolar, DecoratedBipolar, DecorationError, DecorationKind, EdgeColor, TransversalError, TransversalStructure};
use crate::walks::TandemWalk;

use super::{decorated_to_walk, walk_to_decorated, KmswError};

/// Adds the outer vertices `W` and `E` with their blue fans, the blue
/// decoration edges, and the outer quadrangle.
pub fn phi_t(d: &DecoratedBipolar) -> Result<TransversalStructure, KmswError> {
    if d.kind() != DecorationKind::T {
        return Err(DecorationError::InvalidDecoration(0).into());
    }
    let b = d.base();
    let up = b.upward();
    let infos = b.face_infos();
    let n = b.vertex_count();
    let (s, nn) = (b.source(), b.sink());
    let mut x = TransversalBuilder::default();
    for _ in 0..n + 2 {
        x.add_vertex();
    }
    let (w, e) = (n, n + 1);
    for &(t, h) in &up.edges {
        x.add_edge(t, h, EdgeColor::Red);
    }
    let sw = x.add_edge(s, w, EdgeColor::Outer);
    let wn = x.add_edge(w, nn, EdgeColor::Outer);
    let se = x.add_edge(s, e, EdgeColor::Outer);
    let en = x.add_edge(e, nn, EdgeColor::Outer);
    let tail = |edge: usize| up.edges[edge].0;
    let mut out_blue: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_blue: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, &f) in b.inner_faces().iter().enumerate() {
        let info = &infos[f];
        for &(l, r) in &d.decorations()[k] {
            let (u, v) = (tail(info.left[l]), tail(info.right[r]));
            let id = x.add_edge(u, v, EdgeColor::Blue);
            out_blue[u].push(2 * id);
            in_blue[v].push(2 * id + 1);
        }
    }
    let outer = &infos[b.outer_face()];
    let mut w_fan = Vec::new();
    for &edge in &outer.left[1..] {
        let u = tail(edge);
        let id = x.add_edge(w, u, EdgeColor::Blue);
        in_blue[u] = vec![2 * id + 1];
        w_fan.push(2 * id);
    }
    let mut e_fan = Vec::new();
    for &edge in &outer.right[1..] {
        let u = tail(edge);
        let id = x.add_edge(u, e, EdgeColor::Blue);
        out_blue[u] = vec![2 * id];
        e_fan.push(2 * id + 1);
    }
    for u in 0..n {
        if u == s || u == nn {
            continue;
        }
        let mut rot: Vec<usize> = up.outs[u].iter().rev().map(|&f| 2 * f).collect();
        rot.extend(in_blue[u].iter().rev());
        rot.extend(up.ins[u].iter().map(|&f| 2 * f + 1));
        rot.extend(out_blue[u].iter());
        x.rotations[u] = rot;
    }
    let mut rot_s = vec![2 * se];
    rot_s.extend(up.outs[s].iter().rev().map(|&f| 2 * f));
    rot_s.push(2 * sw);
    x.rotations[s] = rot_s;
    let mut rot_n = vec![2 * wn + 1];
    rot_n.extend(up.ins[nn].iter().map(|&f| 2 * f + 1));
    rot_n.push(2 * en + 1);
    x.rotations[nn] = rot_n;
    let mut rot_w = vec![2 * sw + 1];
    rot_w.extend(w_fan);
    rot_w.push(2 * wn);
    x.rotations[w] = rot_w;
    let mut rot_e = vec![2 * en];
    rot_e.extend(e_fan.iter().rev());
    rot_e.push(2 * se + 1);
    x.rotations[e] = rot_e;
    Ok(x.build(2 * sw)?.canonical())
}

/// Inverse of [`phi_t`]: keeps the inner red edges and reads the blue edges
/// inside every red face.
pub fn psi_t(x: &TransversalStructure) -> Result<DecoratedBipolar, KmswError> {
    let keep: Vec<bool> = x.colors().iter().map(|&c| c == EdgeColor::Red).collect();
    let (map, vmap, emap) = x.map().restrict(&keep).map_err(TransversalError::from)?;
    let mut orientation = vec![true; map.edge_count()];
    for (old, ne) in emap.iter().enumerate() {
        if let Some(ne) = ne {
            orientation[*ne] = x.orientation()[old];
        }
    }
    let mut old_of = vec![0; map.vertex_count()];
    for (old, nv) in vmap.iter().enumerate() {
        if let Some(nv) = nv {
            old_of[*nv] = old;
        }
    }
    let source = vmap[x.south()].expect("S has red edges");
    let sink = vmap[x.north()].expect("N has red edges");
    let base = validate_bipolar(map, orientation, source, sink)
        .map_err(|err| TransversalError::InternalConsistency(format!("red skeleton is not bipolar: {err}")))?;
    if !base.is_poset() {
        return Err(KmswError::NotAPoset);
    }
    let up = base.upward();
    let infos = base.face_infos();
    let rotations = x.map().rotations();
    let mut decorations = Vec::new();
    for &f in &base.inner_faces() {
        let info = &infos[f];
        let right: Vec<usize> = info.right.iter().map(|&e| old_of[up.edges[e].0]).collect();
        let mut pairs = Vec::new();
        for (l, &edge) in info.left.iter().enumerate().skip(1) {
            let u = old_of[up.edges[edge].0];
            for &h in &rotations[u] {
                if x.colors()[h / 2] == EdgeColor::Blue && x.is_out(h) {
                    let t = x.map().target(h);
                    let r = right.iter().position(|&v| v == t).ok_or(DecorationError::InvalidDecoration(f))?;
                    pairs.push((l, r));
                }
            }
        }
        pairs.sort_unstable();
        decorations.push(pairs);
    }
    Ok(DecoratedBipolar::new(base, DecorationKind::T, decorations)?.canonical())
}

pub fn walk_to_transversal(w: &TandemWalk) -> Result<TransversalStructure, KmswError> {
    phi_t(&walk_to_decorated(w)?)
}

pub fn transversal_to_walk(x: &TransversalStructure) -> Result<TandemWalk, KmswError> {
    Ok(decorated_to_walk(&psi_t(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kmsw::kmsw_backward;
    use crate::maps::{grid_transversal, single_vertex_transversal};
    use crate::walks::Step;

    #[test]
    fn path_gives_single_vertex_structure() {
        let path = kmsw_backward(&TandemWalk::plain((0, 1), vec![Step::SE]), 1).unwrap();
        let d = DecoratedBipolar::new(path, DecorationKind::T, vec![]).unwrap();
        let x = phi_t(&d).unwrap();
        assert_eq!(x, single_vertex_transversal().canonical());
        assert_eq!(psi_t(&x).unwrap(), d.canonical());
    }

    #[test]
    fn grid_of_four_has_one_unmarked_nw() {
        let (x, quads) = grid_transversal(4);
        assert_eq!(quads, 1);
        let w = transversal_to_walk(&x).unwrap();
        assert_eq!(w.unmarked_nw(), 1);
        assert_eq!(walk_to_transversal(&w).unwrap(), x.canonical());
    }
}
