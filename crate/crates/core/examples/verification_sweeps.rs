//! The exhaustive cross-checks behind `planewalks verify`.

use planewalks::verify::{run_suite, Suite};

fn main() {
    for (suite, max) in [(Suite::Kmsw, 5), (Suite::PosetV, 6), (Suite::Transversal, 4), (Suite::PlanePerm, 6), (Suite::Gt, 7)] {
        match run_suite(suite, max) {
            Ok(r) => println!("{suite} up to {max}: {} cases", r.cases),
            Err(c) => println!("{c}"),
        }
    }
}
