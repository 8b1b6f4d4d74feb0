//! Plane bipolar posets, their transversal duals and V-walks.

use planewalks::kmsw::{phi_v, poset_to_v_walk, psi_v, v_walk_to_poset};
use planewalks::verify::posets_with_edges;

fn main() {
    for p in posets_with_edges(5) {
        let d = psi_v(&p).unwrap();
        let w = poset_to_v_walk(&p).unwrap();
        println!(
            "{} vertices, {} inner faces -> dual with {} edges -> V-walk ({},{}) {w}",
            p.vertex_count(),
            p.inner_faces().len(),
            d.base().edge_count(),
            w.start.0,
            w.start.1,
        );
        assert_eq!(phi_v(&d).unwrap(), p);
        assert_eq!(v_walk_to_poset(&w).unwrap(), p);
    }
}
