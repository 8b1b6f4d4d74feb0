use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use planewalks::asymptotics::{alpha_from_central_charge, central_charge, PolyQ};
use planewalks::counting::{t_sequence, TMode, TTerms};
use planewalks::kmsw::{kmsw_backward, kmsw_forward};
use planewalks::permutations::{
    active_points, active_vertices, is_plane, perm_child_by_index, perm_parent, phi_map, poset_child_by_index, poset_parent, psi_map,
    Permutation,
};

/// A plane permutation reached by following `choices` down the generating tree.
fn grow(choices: &[usize]) -> (Permutation, Vec<usize>) {
    let mut p = Permutation::identity(0);
    let mut picked = Vec::new();
    for &c in choices {
        let count = if p.is_empty() { 1 } else { active_points(&p).unwrap().downward().len() };
        let j = c % count + 1;
        p = perm_child_by_index(&p, j).unwrap();
        picked.push(j);
    }
    (p, picked)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_permutations_are_plane(choices in prop::collection::vec(0usize..64, 1..14)) {
        let (p, _) = grow(&choices);
        prop_assert!(is_plane(&p));
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn phi_and_psi_are_inverse(choices in prop::collection::vec(0usize..64, 1..14)) {
        let (p, _) = grow(&choices);
        let b = phi_map(&p).unwrap();
        prop_assert_eq!(b.vertex_count(), p.len() + 2);
        prop_assert!(b.is_poset());
        prop_assert_eq!(psi_map(&b).unwrap(), p);
    }

    #[test]
    fn kmsw_roundtrip_on_large_posets(choices in prop::collection::vec(0usize..64, 1..14)) {
        let (p, _) = grow(&choices);
        let b = phi_map(&p).unwrap();
        let w = kmsw_forward(&b);
        prop_assert_eq!(w.se_count(), b.non_pole_vertices());
        let (_, end_y) = w.end();
        prop_assert_eq!(end_y, 0);
        let back = kmsw_backward(&w, w.end().0 as usize).unwrap();
        prop_assert_eq!(back, b);
    }

    #[test]
    fn parent_undoes_child(choices in prop::collection::vec(0usize..64, 2..14)) {
        let (p, picked) = grow(&choices);
        let (q, _) = grow(&choices[..choices.len() - 1]);
        prop_assert_eq!(perm_parent(&p).unwrap(), q.clone());
        if q.len() >= 2 {
            let bq = phi_map(&q).unwrap();
            let child = poset_child_by_index(&bq, *picked.last().unwrap()).unwrap();
            prop_assert_eq!(&child, &phi_map(&p).unwrap());
            prop_assert_eq!(poset_parent(&child).unwrap(), bq);
            prop_assert_eq!(active_vertices(&child).unwrap().label(), active_points(&p).unwrap().label());
        }
    }

    #[test]
    fn evaluation_commutes_with_the_recurrence(num in 0i64..40, den in 1i64..12) {
        let v = BigRational::new(BigInt::from(num), BigInt::from(den));
        let TTerms::Symbolic(sym) = t_sequence(9, &TMode::Symbolic).unwrap() else { unreachable!() };
        let TTerms::Evaluated(ev) = t_sequence(9, &TMode::Evaluated(v.clone())).unwrap() else { unreachable!() };
        for (p, q) in sym.iter().zip(&ev) {
            prop_assert_eq!(&p.eval(&v), q);
        }
    }

    #[test]
    fn central_charge_roundtrip(alpha in 2.0f64..40.0) {
        let c = central_charge(alpha).unwrap();
        prop_assert!(c <= 1.0);
        prop_assert!((alpha_from_central_charge(c).unwrap() - alpha).abs() < 1e-8);
    }

    #[test]
    fn gcd_divides(a in prop::collection::vec(-6i64..6, 1..6), b in prop::collection::vec(-6i64..6, 1..6), c in prop::collection::vec(-6i64..6, 1..4)) {
        let (a, b, c) = (PolyQ::from_ints(&a), PolyQ::from_ints(&b), PolyQ::from_ints(&c));
        prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(ac.div_rem(&g).1.is_zero());
        prop_assert!(bc.div_rem(&g).1.is_zero());
        prop_assert!(g.div_rem(&c.monic()).1.is_zero());
    }
}
