//! Transversal structures from T-walks, and the grid construction.

use planewalks::kmsw::{transversal_to_walk, walk_to_transversal};
use planewalks::maps::{grid_quad_formula, grid_transversal};
use planewalks::verify::t_walks_with_se;

fn main() {
    for w in t_walks_with_se(3) {
        let x = walk_to_transversal(&w).unwrap();
        println!(
            "({},{}) {w}: W/E degrees {:?}, {} quadrangular faces",
            w.start.0,
            w.start.1,
            x.we_type(),
            x.quadrangular_faces()
        );
        assert_eq!(transversal_to_walk(&x).unwrap(), w);
    }

    for n in [1, 4, 7, 9, 16] {
        let (x, quads) = grid_transversal(n);
        println!("grid with {n} inner vertices: {quads} quadrangular faces (formula {})", grid_quad_formula(n));
        assert_eq!(x.inner_vertex_count(), n);
    }
}
