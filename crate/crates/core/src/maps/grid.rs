//! Grid-shaped transversal structures with many quadrangular faces.

use std::collections::HashMap;

use super::bipolar::EdgeColor;
use super::planar::{PlanarMap, straight_line_rotations};
use super::transversal::{validate_transversal, TransversalStructure};

/// Predicted number of quadrangular faces of [`grid_transversal`]`(n)`.
pub fn grid_quad_formula(n: usize) -> i64 {
    let h = n.isqrt();
    let m = n - h * h;
    let delta = if m == 0 {
        1
    } else if m <= h {
        0
    } else {
        -1
    };
    n as i64 - 2 * h as i64 + delta
}

/// Transversal structure on the `h x h` grid (`h = isqrt(n)`) completed by
/// the first `n - h^2` points of the next hook, top row first.
///
/// Red edges point up, blue edges point right. Returns the structure and its
/// number of quadrangular inner faces.
pub fn grid_transversal(n: usize) -> (TransversalStructure, usize) {
    assert!(n >= 1, "grid needs at least one inner vertex");
    let h = n.isqrt();
    let m = n - h * h;
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    for y in 0..h {
        for x in 0..h {
            pts.push((x as i64, y as i64));
        }
    }
    let r = m.saturating_sub(h);
    for x in 0..m.min(h) {
        pts.push((x as i64, h as i64));
    }
    if r > 0 {
        for y in (h - r + 1..=h).rev() {
            pts.push((h as i64, y as i64));
        }
    }
    let index: HashMap<(i64, i64), usize> = pts.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let inner = pts.len();
    let (s, w, nn, e) = (inner, inner + 1, inner + 2, inner + 3);
    let hi = h as i64;
    let far = 1000 * (hi + 2);
    let mut coords: Vec<(i64, i64)> = pts.iter().map(|&(x, y)| (2 * x, 2 * y)).collect();
    coords.push((hi, -far));
    coords.push((-far, hi));
    coords.push((hi, far));
    coords.push((far, hi));

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut colors = Vec::new();
    let mut push = |t: usize, h: usize, c: EdgeColor, edges: &mut Vec<(usize, usize)>| {
        edges.push((t, h));
        colors.push(c);
    };
    push(s, w, EdgeColor::Outer, &mut edges);
    push(w, nn, EdgeColor::Outer, &mut edges);
    push(s, e, EdgeColor::Outer, &mut edges);
    push(e, nn, EdgeColor::Outer, &mut edges);

    let at = |x: i64, y: i64| index.get(&(x, y)).copied();
    for (k, &(x, y)) in pts.iter().enumerate() {
        // red
        if let Some(up) = at(x, y + 1) {
            push(k, up, EdgeColor::Red, &mut edges);
        } else {
            push(k, nn, EdgeColor::Red, &mut edges);
        }
        if at(x, y - 1).is_none() {
            if r > 0 && x == hi && y == hi - r as i64 + 1 {
                push(at(hi - 1, hi - r as i64).unwrap(), k, EdgeColor::Red, &mut edges);
            } else {
                push(s, k, EdgeColor::Red, &mut edges);
            }
        }
        // blue
        if let Some(right) = at(x + 1, y) {
            push(k, right, EdgeColor::Blue, &mut edges);
        } else if r == 0 && m < h && y == hi && x == m as i64 - 1 {
            push(k, at(x + 1, y - 1).unwrap(), EdgeColor::Blue, &mut edges);
        } else {
            push(k, e, EdgeColor::Blue, &mut edges);
        }
        if x == 0 {
            push(w, k, EdgeColor::Blue, &mut edges);
        }
    }
    let rotations = straight_line_rotations(&coords, &edges);
    let map = PlanarMap::from_rotations(coords.len(), &edges, &rotations, 0).expect("grid drawing is planar");
    let m_edges = edges.len();
    let x = validate_transversal(map, vec![true; m_edges], colors).expect("grid structure is transversal");
    let quads = x.quadrangular_faces();
    (x, quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_match_formula() {
        for n in 1..=40 {
            let (x, q) = grid_transversal(n);
            assert_eq!(x.inner_vertex_count(), n);
            assert_eq!(q as i64, grid_quad_formula(n), "n={n}");
            x.red_poset().unwrap();
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(grid_transversal(1).1, 0);
        assert_eq!(grid_transversal(4).1, 1);
        assert_eq!(grid_transversal(5).1, 1);
    }
}
