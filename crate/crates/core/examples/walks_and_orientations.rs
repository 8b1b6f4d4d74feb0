//! Tandem walks in the quadrant and plane bipolar orientations.
//!
//! Run with `cargo run --example walks_and_orientations`.

use planewalks::kmsw::{kmsw_backward, kmsw_forward};
use planewalks::walks::{enumerate_walks, TandemWalk, WalkClass};

fn main() {
    let w = TandemWalk::parse((0, 1), WalkClass::Plain, "SE,(-1,+1),SE").expect("valid walk");
    let m = kmsw_backward(&w, 1).expect("quadrant walk");
    println!("walk {w}");
    println!("  edges: {}, vertices: {}, outer type: {:?}", m.edge_count(), m.vertex_count(), m.outer_type());
    println!("  inner face types: {:?}", m.inner_face_types());
    println!("  poset: {}", m.is_poset());
    assert_eq!(kmsw_forward(&m), w);

    println!("{}", serde_json::to_string(&m.to_json()).unwrap());

    // Baxter numbers: orientations with n edges
    for edges in 1..=6 {
        let n = edges - 1;
        let mut count = 0;
        for a in 0..=n {
            for b in 0..=n {
                count += enumerate_walks(WalkClass::Plain, n, (0, a), (b, 0), None).count();
            }
        }
        println!("orientations with {edges} edges: {count}");
    }
}
