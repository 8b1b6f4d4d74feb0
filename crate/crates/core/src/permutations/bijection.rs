//! Dominance drawings: permutation to poset, and back through the left and
//! right trees.

use crate::maps::planar::straight_line_rotations;
use crate::maps::{validate_bipolar, BipolarError, BipolarMap, PlanarMap, Upward};

use super::{avoids_2_14_3, dominance_covers, PermError, Permutation};

/// The dominance diagram of the completion, as a canonical plane bipolar
/// poset on `n + 2` vertices.
pub fn phi_map(p: &Permutation) -> Result<BipolarMap, PermError> {
    Ok(phi_map_labelled(p)?.0)
}

/// Like [`phi_map`], also returning the vertex of every point of the
/// completion, indexed by abscissa (`0` is the source, `n + 1` the sink).
pub fn phi_map_labelled(p: &Permutation) -> Result<(BipolarMap, Vec<usize>), PermError> {
    if !avoids_2_14_3(p) {
        return Err(PermError::NotPlane);
    }
    let c = p.completion();
    let points: Vec<(i64, i64)> = c.iter().enumerate().map(|(i, &v)| (i as i64, v as i64)).collect();
    let edges = dominance_covers(&c);
    let rotations = straight_line_rotations(&points, &edges);
    // steepest edge out of the source
    let root = *rotations[0].last().expect("source has an outgoing edge");
    let map = PlanarMap::from_rotations(c.len(), &edges, &rotations, root).map_err(BipolarError::from)?;
    let b = validate_bipolar(map, vec![true; edges.len()], 0, c.len() - 1)?;
    let (canon, relabel) = b.canonical_with_relabelling();
    Ok((canon, relabel.vertex_map))
}

fn preorder(up: &Upward, root: usize, children: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut order = Vec::with_capacity(up.vertex_count());
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        order.push(u);
        stack.extend(children(u).into_iter().rev());
    }
    order
}

/// Children in the right tree (parent edge = rightmost ingoing edge), left
/// to right; the sink is excluded.
fn right_children(up: &Upward, sink: usize, u: usize) -> Vec<usize> {
    up.outs[u]
        .iter()
        .filter(|&&e| {
            let h = up.edges[e].1;
            h != sink && up.ins[h].last() == Some(&e)
        })
        .map(|&e| up.edges[e].1)
        .collect()
}

/// Children in the left tree (parent edge = leftmost ingoing edge), right
/// to left.
fn left_children(up: &Upward, sink: usize, u: usize) -> Vec<usize> {
    up.outs[u]
        .iter()
        .rev()
        .filter(|&&e| {
            let h = up.edges[e].1;
            h != sink && up.ins[h].first() == Some(&e)
        })
        .map(|&e| up.edges[e].1)
        .collect()
}

/// Inverse of [`phi_map`]: `x` is the rank of first visit in a clockwise
/// tour of the right tree, `y` the rank in a counterclockwise tour of the
/// left tree.
pub fn psi_map(b: &BipolarMap) -> Result<Permutation, PermError> {
    if !b.is_poset() {
        return Err(PermError::NotAPoset);
    }
    let up = b.upward();
    let (s, sink) = (b.source(), b.sink());
    let xs = preorder(&up, s, |u| right_children(&up, sink, u));
    let ys = preorder(&up, s, |u| left_children(&up, sink, u));
    let n = b.vertex_count() - 2;
    debug_assert_eq!(xs.len(), n + 1);
    let mut y_of = vec![0; b.vertex_count()];
    for (rank, &v) in ys.iter().enumerate().skip(1) {
        y_of[v] = rank;
    }
    let values = xs[1..].iter().map(|&v| y_of[v]).collect();
    Permutation::new(values)
}

/// Number of leaves of the left and right trees.
pub fn tree_leaves(b: &BipolarMap) -> (usize, usize) {
    let up = b.upward();
    let sink = b.sink();
    let count = |children: &dyn Fn(usize) -> Vec<usize>| {
        (0..b.vertex_count()).filter(|&v| v != sink && children(v).is_empty()).count()
    };
    (count(&|u| left_children(&up, sink, u)), count(&|u| right_children(&up, sink, u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kmsw::kmsw_backward;
    use crate::walks::{Step, TandemWalk};

    fn diamond() -> BipolarMap {
        let mut up = Upward::with_vertices(4);
        let sa = up.add_edge(0, 1);
        let an = up.add_edge(1, 3);
        let sb = up.add_edge(0, 2);
        let bn = up.add_edge(2, 3);
        up.outs[0] = vec![sa, sb];
        up.ins[1] = vec![sa];
        up.outs[1] = vec![an];
        up.ins[2] = vec![sb];
        up.outs[2] = vec![bn];
        up.ins[3] = vec![an, bn];
        up.build(0, 3).unwrap().canonical()
    }

    #[test]
    fn identity_is_a_path() {
        let b = phi_map(&Permutation::identity(3)).unwrap();
        assert_eq!(b.vertex_count(), 5);
        assert_eq!(b.edge_count(), 4);
        assert_eq!(psi_map(&b).unwrap(), Permutation::identity(3));
        let path = kmsw_backward(&TandemWalk::plain((0, 1), vec![Step::SE]), 1).unwrap();
        assert_eq!(psi_map(&path).unwrap(), Permutation::identity(1));
    }

    #[test]
    fn descent_is_a_diamond() {
        let p = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(phi_map(&p).unwrap(), diamond());
        assert_eq!(psi_map(&diamond()).unwrap(), p);
    }

    #[test]
    fn rejects_non_plane() {
        assert_eq!(phi_map(&"2143".parse().unwrap()), Err(PermError::NotPlane));
    }

    #[test]
    fn roundtrip_and_descents() {
        for n in 1..=6 {
            for p in Permutation::all(n).into_iter().filter(avoids_2_14_3) {
                let b = phi_map(&p).unwrap();
                assert!(b.is_poset());
                assert_eq!(psi_map(&b).unwrap(), p);
                let (left, right) = tree_leaves(&b);
                assert_eq!(p.descents(), right - 1, "{p}");
                assert_eq!(p.inverse().descents(), left - 1, "{p}");
            }
        }
    }
}
