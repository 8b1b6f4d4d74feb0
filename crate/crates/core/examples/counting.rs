//! Exact counting sequences from weighted tandem-walk DPs.

use num_rational::BigRational;
use planewalks::counting::{b_sequence, e_sequence, t_sequence, weighted_count, ModelSpec, TMode, WeightKind};

fn main() {
    let show = |v: Vec<String>| v.join(" ");
    println!("posets by edges:    {}", show(e_sequence(15).iter().map(|x| x.to_string()).collect()));
    println!("posets by vertices: {}", show(b_sequence(12).iter().map(|x| x.to_string()).collect()));

    let t = t_sequence(8, &TMode::Symbolic).unwrap();
    for (n, p) in t.to_strings().iter().enumerate() {
        println!("t_{}(v) = {p}", n + 1);
    }
    let third = BigRational::new(1.into(), 3.into());
    println!("t_n(1/3): {}", show(t_sequence(8, &TMode::Evaluated(third)).unwrap().to_strings()));

    // a single weighted count, as a polynomial in v
    let spec = ModelSpec::new(WeightKind::Transversal, 1, Some(1));
    println!("transversal-weighted walks (0,1) -> (1,0) of length 9: {}", weighted_count(&spec, 9));
}
