//! Growth constants, exponents and the cyclotomic test.

use num_bigint::BigUint;
use num_rational::BigRational;
use planewalks::asymptotics::{growth_fit, report, solve_constants, Model};
use planewalks::counting::{t_sequence, TMode, TTerms};

fn main() {
    for model in [Model::PosetsEdges, Model::PosetsVertices] {
        println!("{}", report(model, None).unwrap().to_json());
    }
    for v in [0i64, 1, 2] {
        let r = report(Model::Transversal, Some(&BigRational::from_integer(v.into()))).unwrap();
        println!("v = {v}: gamma {:.6}, alpha {:.6}, X(s) = {}, obstruction {}", r.gamma, r.alpha, r.xi_polynomial, r.dfinite_obstruction);
    }

    println!("v, gamma, xi, alpha");
    for k in 0..=10 {
        let v = k as f64 / 2.0;
        let c = solve_constants(Model::Transversal, v).unwrap();
        println!("{v}, {:.8}, {:.8}, {:.8}", c.gamma, c.xi, c.alpha);
    }

    let TTerms::Evaluated(t) = t_sequence(200, &TMode::Evaluated(BigRational::from_integer(0.into()))).unwrap() else {
        unreachable!()
    };
    let t: Vec<BigUint> = t.iter().map(|q| q.to_integer().to_biguint().unwrap()).collect();
    let fit = growth_fit(&t, None).unwrap();
    println!("fit on t_1(0)..t_200(0): gamma ~ {:.5}, alpha ~ {:.3}", fit.gamma_hat, fit.alpha_hat);
}
