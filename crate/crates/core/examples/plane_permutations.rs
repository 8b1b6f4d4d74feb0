//! Plane permutations, plane posets and the generating tree they share.

use planewalks::permutations::{active_points, omega_counts, phi_map, plane_permutations, psi_map, tree_leaves, Permutation};

fn main() {
    let p: Permutation = "2 4 1 3 5".parse().unwrap();
    let b = phi_map(&p).unwrap();
    println!("{p}: {} vertices, {} edges, label {}", b.vertex_count(), b.edge_count(), active_points(&p).unwrap().label());
    println!("  descents {}, tree leaves {:?}", p.descents(), tree_leaves(&b));
    assert_eq!(psi_map(&b).unwrap(), p);

    match phi_map(&"2 1 4 3".parse().unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("2 1 4 3: {e}"),
    }

    let omega = omega_counts(8);
    for (n, total) in omega.totals().iter().enumerate() {
        println!("size {}: {} plane permutations, tree level total {total}", n + 1, plane_permutations(n + 1).len());
    }
    print!("{}", omega_counts(3).to_csv());
}
