//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use planewalks::asymptotics::{growth_fit, non_dfinite_check, solve_constants, Model, PolyQ};
use planewalks::counting::{b_sequence, e_sequence, series_relation_check, t_sequence, t_sequence_by_walks, RelationReport, TMode, TTerms};
use planewalks::kmsw::{kmsw_backward, kmsw_forward, phi_t, phi_v, poset_to_v_walk, psi_t, psi_v, v_walk_to_poset, walk_to_decorated};
use planewalks::maps::{BipolarMap, FaceType};
use planewalks::permutations::{avoids_2_14_3, omega_counts, phi_map, plane_permutations, plane_posets, psi_map, Permutation};
use planewalks::walks::{enumerate_walks, WalkClass};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strings(t: &TTerms) -> Vec<String> {
    t.to_strings()
}

fn criterion_1() -> Outcome {
    let e: Vec<String> = e_sequence(11).iter().map(|x| x.to_string()).collect();
    ensure(e == ["1", "1", "1", "2", "5", "12", "32", "93", "279", "872", "2830"], || format!("e_n = {e:?}"))?;
    let eval = |v: i64| t_sequence(9, &TMode::Evaluated(BigRational::from_integer(v.into()))).map(|t| strings(&t));
    let t0 = eval(0).map_err(|e| e.to_string())?;
    ensure(t0 == ["1", "2", "6", "24", "116", "642", "3938", "26194", "186042"], || format!("t_n(0) = {t0:?}"))?;
    let t1 = eval(1).map_err(|e| e.to_string())?;
    ensure(t1 == ["1", "2", "6", "25", "128", "758", "5014", "36194", "280433"], || format!("t_n(1) = {t1:?}"))?;
    let sym = strings(&t_sequence(7, &TMode::Symbolic).map_err(|e| e.to_string())?);
    ensure(sym[3..] == ["24 + 1*v", "116 + 12*v", "642 + 114*v + 2*v^2", "3938 + 1028*v + 48*v^2"], || format!("t_n(v) = {sym:?}"))?;
    Ok("e_1..e_11, t_n(0), t_n(1), t_4..t_7(v) match".into())
}

fn criterion_2() -> Outcome {
    let b = b_sequence(12);
    for n in 1..=8 {
        let brute = Permutation::all(n).iter().filter(|p| avoids_2_14_3(p)).count();
        ensure(BigUint::from(brute) == b[n - 1], || format!("n = {n}: brute force {brute}, b_n = {}", b[n - 1]))?;
    }
    let totals = omega_counts(12).totals();
    ensure(totals == b, || format!("generating tree totals {totals:?} vs b_n {b:?}"))?;
    Ok("b_n = 2-14-3 avoiders (n <= 8) = generating tree totals (n <= 12)".into())
}

fn sorted(mut v: Vec<FaceType>) -> Vec<FaceType> {
    v.sort();
    v
}

fn posets_with_edges(edges: usize) -> Vec<BipolarMap> {
    let n = edges - 1;
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            for w in enumerate_walks(WalkClass::E, n, (0, a), (b, 0), None) {
                out.push(kmsw_backward(&w, b).expect("E-walk decodes"));
            }
        }
    }
    out
}

/// Criteria 3 and 4 share the sweeps; returns (round-trip cases, transport cases).
fn bijection_sweeps() -> Result<(usize, usize), String> {
    let mut cases = 0;
    let mut transport = 0;
    for n in 0..=6 {
        for a in 0..=2 {
            for b in 0..=2 {
                for w in enumerate_walks(WalkClass::Plain, n, (0, a), (b, 0), None) {
                    let m = kmsw_backward(&w, b).map_err(|e| format!("walk {w}: {e}"))?;
                    ensure(kmsw_forward(&m) == w, || format!("forward(backward({w})) differs"))?;
                    ensure(kmsw_backward(&kmsw_forward(&m), b).as_ref() == Ok(&m), || format!("backward(forward(.)) differs for {w}"))?;
                    ensure(w.se_count() == m.non_pole_vertices(), || format!("#SE differs from #non-pole vertices for {w}"))?;
                    ensure(sorted(w.face_types()) == sorted(m.inner_face_types()), || format!("face types differ for {w}"))?;
                    cases += 1;
                    transport += 1;
                }
            }
        }
    }
    for n in 1..=7 {
        for p in plane_permutations(n) {
            let b = phi_map(&p).map_err(|e| format!("{p}: {e}"))?;
            ensure(psi_map(&b).as_ref() == Ok(&p), || format!("Psi(Phi({p})) differs"))?;
            ensure(phi_map(&psi_map(&b).unwrap()).as_ref() == Ok(&b), || format!("Phi(Psi(.)) differs at {p}"))?;
            cases += 1;
        }
        for b in plane_posets(n) {
            let p = psi_map(&b).map_err(|e| e.to_string())?;
            ensure(phi_map(&p).as_ref() == Ok(&b), || format!("Phi(Psi(b)) differs for Psi(b) = {p}"))?;
            cases += 1;
        }
    }
    for edges in 1..=6 {
        for p in posets_with_edges(edges) {
            if p.vertex_count() > 2 {
                let d = psi_v(&p).map_err(|e| e.to_string())?;
                ensure(phi_v(&d).as_ref() == Ok(&p), || "phi_V(psi_V(p)) differs".into())?;
                ensure(psi_v(&phi_v(&d).unwrap()).as_ref() == Ok(&d), || "psi_V(phi_V(d)) differs".into())?;
                let w = poset_to_v_walk(&p).map_err(|e| e.to_string())?;
                ensure(v_walk_to_poset(&w).as_ref() == Ok(&p), || format!("V-walk {w} does not decode back"))?;
                cases += 1;
            }
        }
    }
    for len in 0..=4 {
        for a in 1..=len + 1 {
            for b in 1..=len + 1 {
                for w in enumerate_walks(WalkClass::T, len, (0, a), (b, 0), None) {
                    let d = walk_to_decorated(&w).map_err(|e| format!("{w}: {e}"))?;
                    let x = phi_t(&d).map_err(|e| format!("{w}: {e}"))?;
                    ensure(psi_t(&x).as_ref() == Ok(&d), || format!("psi_T(phi_T(.)) differs for {w}"))?;
                    ensure(x.quadrangular_faces() == w.unmarked_nw(), || format!("quadrangular faces differ from unmarked NW for {w}"))?;
                    cases += 1;
                    transport += 1;
                }
            }
        }
    }
    Ok((cases, transport))
}

fn criterion_6() -> Outcome {
    for (x, want_factor) in [(PolyQ::from_ints(&[-7, 8]), false), (PolyQ::from_ints(&[23, -58, 36]), false), (PolyQ::from_ints(&[-1, 2]), true)] {
        let r = non_dfinite_check(&x).map_err(|e| e.to_string())?;
        ensure(r.rational_alpha == want_factor, || format!("X = {x}: cyclotomic factor found = {}", r.rational_alpha))?;
        ensure(!(r.coefficient_bound_excludes && r.rational_alpha), || format!("X = {x}: pre-filter disagrees with gcd"))?;
    }
    Ok("8s - 7 and 36s^2 - 58s + 23: no cyclotomic factor; 2s - 1: factor found".into())
}

fn criterion_5() -> Outcome {
    let s5 = 5f64.sqrt();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-10 * b.abs().max(1.0);
    let pv = solve_constants(Model::PosetsVertices, 0.0).map_err(|e| e.to_string())?;
    ensure(close(pv.gamma, (11.0 + 5.0 * s5) / 2.0) && close(pv.alpha, 6.0), || format!("posets-vertices: {pv:?}"))?;
    let t0 = solve_constants(Model::Transversal, 0.0).map_err(|e| e.to_string())?;
    ensure(close(t0.gamma, 13.5) && close(t0.xi, 0.875), || format!("transversal v = 0: {t0:?}"))?;
    let pe = solve_constants(Model::PosetsEdges, 0.0).map_err(|e| e.to_string())?;
    let z = pe.z0;
    ensure((z.powi(4) + z.powi(3) - 3.0 * z * z + 3.0 * z - 1.0).abs() <= 1e-10, || format!("P(z0) != 0 at {z}"))?;
    ensure(close(pe.gamma, 5.0 * z.powi(3) + 7.0 * z * z - 13.0 * z + 9.0) && close(pe.xi, 1.0 - z / 2.0), || format!("posets-edges: {pe:?}"))?;
    Ok(format!("gamma_V = {:.12}, alpha_V = {:.12}, gamma_T(0) = {:.12}, z0_E = {:.12}", pv.gamma, pv.alpha, t0.gamma, pe.z0))
}

fn criterion_7() -> Outcome {
    let TTerms::Evaluated(t) = t_sequence(300, &TMode::Evaluated(BigRational::from_integer(0.into()))).map_err(|e| e.to_string())? else {
        unreachable!()
    };
    let t: Vec<BigUint> = t.iter().map(|q| q.to_integer().to_biguint().expect("nonnegative")).collect();
    let ft = growth_fit(&t, None).map_err(|e| e.to_string())?;
    ensure((ft.gamma_hat / 13.5 - 1.0).abs() < 0.02, || format!("t_n(0): gamma_hat = {}", ft.gamma_hat))?;
    let fe = growth_fit(&e_sequence(300), None).map_err(|e| e.to_string())?;
    let gamma_e = solve_constants(Model::PosetsEdges, 0.0).map_err(|e| e.to_string())?.gamma;
    ensure((fe.gamma_hat / gamma_e - 1.0).abs() < 0.02, || format!("e_n: gamma_hat = {}", fe.gamma_hat))?;
    let fb = growth_fit(&b_sequence(200), None).map_err(|e| e.to_string())?;
    ensure((fb.alpha_hat - 6.0).abs() < 0.3, || format!("b_n: alpha_hat = {}", fb.alpha_hat))?;
    Ok(format!("gamma_T(0) ~ {:.4}, gamma_E ~ {:.4}, alpha_V ~ {:.4}", ft.gamma_hat, fe.gamma_hat, fb.alpha_hat))
}

fn criterion_8() -> Outcome {
    let r = series_relation_check(12).map_err(|e| e.to_string())?;
    ensure(r == RelationReport { q_identity: 10, shift_identity: 12 }, || format!("{r:?}"))?;
    let TTerms::Symbolic(sym) = t_sequence(8, &TMode::Symbolic).map_err(|e| e.to_string())? else { unreachable!() };
    let walks = t_sequence_by_walks(8);
    ensure(sym == walks, || "t_n recurrence differs from the weighted walk DP".into())?;
    let mut seen = HashSet::new();
    let mut maps = 0;
    for n in 0..=6 {
        for a in 0..=n {
            for b in 0..=n {
                for w in enumerate_walks(WalkClass::Plain, n, (0, a), (b, 0), None) {
                    let m = kmsw_backward(&w, b).map_err(|e| e.to_string())?;
                    ensure(m.poset_by_face_types() == m.poset_by_reachability(), || format!("poset tests disagree on the map of {w}"))?;
                    if seen.insert(m) {
                        maps += 1;
                    }
                }
            }
        }
    }
    Ok(format!("relation identities {}+{}; t_1..t_8 agree; poset tests agree on {maps} orientations", r.q_identity, r.shift_identity))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |k: usize, name: &str, elapsed: Duration, out: Outcome| {
        let secs = elapsed.as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {k} ({name}): PASS in {secs:.2}s: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k} ({name}): FAIL in {secs:.2}s: {msg}");
            }
        }
    };
    let timed = |f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let out = f();
        (start.elapsed(), out)
    };

    let (d, o) = timed(&criterion_1);
    report(1, "sequence regression", d, o);
    let (d, o) = timed(&criterion_2);
    report(2, "equinumerosity", d, o);
    let start = Instant::now();
    let sweeps = bijection_sweeps();
    let d = start.elapsed();
    match &sweeps {
        Ok((cases, transport)) => {
            report(3, "bijection round-trips", d, Ok(format!("{cases} cases, zero mismatches")));
            report(4, "parameter transport", d, Ok(format!("{transport} cases, zero mismatches")));
        }
        Err(e) => {
            report(3, "bijection round-trips", d, Err(e.clone()));
            report(4, "parameter transport", d, Err(e.clone()));
        }
    }
    let (d, o) = timed(&criterion_5);
    let o = o.and_then(|m| if d < Duration::from_secs(1) { Ok(m) } else { Err(format!("took {d:?}")) });
    report(5, "asymptotic constants", d, o);
    let (d, o) = timed(&criterion_6);
    let o = o.and_then(|m| if d < Duration::from_secs(1) { Ok(m) } else { Err(format!("took {d:?}")) });
    report(6, "cyclotomic obstruction", d, o);
    let (d, o) = timed(&criterion_7);
    report(7, "growth-rate consistency", d, o);
    let (d, o) = timed(&criterion_8);
    report(8, "equivalent formulations", d, o);

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
