//! Exhaustive cross-checks between the bijections, the generating tree and
//! the counting code, stopping at the first counterexample.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::kmsw::{kmsw_backward, kmsw_forward, phi_t, phi_v, poset_to_v_walk, psi_t, psi_v, transversal_to_walk, v_walk_to_poset, walk_to_decorated, walk_to_transversal};
use crate::maps::{BipolarMap, FaceType};
use crate::permutations::{active_points, omega_counts, phi_map, plane_permutations, plane_posets, poset_label, psi_map};
use crate::walks::{enumerate_walks, TandemWalk, WalkClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Walk/orientation round-trips and parameter transport, endpoints `a, b <= 2`.
    Kmsw,
    /// Posets by vertices: `psi_V`, `phi_V` and the V-walk encoding.
    PosetV,
    /// Transversal structures: `phi_T`, `psi_T` and the T-walk encoding.
    Transversal,
    /// `Phi` and `Psi` between plane permutations and plane posets.
    PlanePerm,
    /// Level counts and labels of the generating tree.
    Gt,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Kmsw, Suite::PosetV, Suite::Transversal, Suite::PlanePerm, Suite::Gt];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kmsw => "kmsw",
            Suite::PosetV => "poset-v",
            Suite::Transversal => "transversal",
            Suite::PlanePerm => "plane-perm",
            Suite::Gt => "gt",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub suite: Suite,
    /// The failing input, in its text form.
    pub case: String,
    pub reason: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.suite, self.case, self.reason)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max: usize,
    pub cases: usize,
}

struct Checker {
    suite: Suite,
    cases: usize,
}

impl Checker {
    fn check(&self, ok: bool, case: &dyn fmt::Display, reason: &str) -> Result<(), Counterexample> {
        if ok {
            Ok(())
        } else {
            Err(Counterexample { suite: self.suite, case: case.to_string(), reason: reason.to_string() })
        }
    }

    fn lift<T, E: fmt::Display>(&self, r: Result<T, E>, case: &dyn fmt::Display) -> Result<T, Counterexample> {
        r.map_err(|e| Counterexample { suite: self.suite, case: case.to_string(), reason: e.to_string() })
    }
}

fn sorted(mut v: Vec<FaceType>) -> Vec<FaceType> {
    v.sort();
    v
}

struct MapText<'a>(&'a BipolarMap);

impl fmt::Display for MapText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(&self.0.to_json()).map_err(|_| fmt::Error)?)
    }
}

/// Plane bipolar posets with `edges` edges, from E-walks.
pub fn posets_with_edges(edges: usize) -> Vec<BipolarMap> {
    orientations(WalkClass::E, edges)
}

/// Plane bipolar orientations with `edges` edges, from tandem walks.
pub fn bipolar_with_edges(edges: usize) -> Vec<BipolarMap> {
    orientations(WalkClass::Plain, edges)
}

fn orientations(class: WalkClass, edges: usize) -> Vec<BipolarMap> {
    let Some(n) = edges.checked_sub(1) else { return Vec::new() };
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            for w in enumerate_walks(class, n, (0, a), (b, 0), None) {
                out.push(kmsw_backward(&w, b).expect("quadrant walks decode"));
            }
        }
    }
    out
}

/// T-walks with `n` SE steps, i.e. transversal structures with `n` inner
/// vertices.
pub fn t_walks_with_se(n: usize) -> Vec<TandemWalk> {
    let mut out = Vec::new();
    for len in n..=2 * n {
        for a in 1..=n {
            for b in 1..=n {
                out.extend(enumerate_walks(WalkClass::T, len, (0, a), (b, 0), None).filter(|w| w.se_count() == n));
            }
        }
    }
    out
}

fn kmsw_suite(c: &mut Checker, max: usize) -> Result<(), Counterexample> {
    for n in 0..=max {
        for a in 0..=2 {
            for b in 0..=2 {
                for w in enumerate_walks(WalkClass::Plain, n, (0, a), (b, 0), None) {
                    let m = c.lift(kmsw_backward(&w, b), &w)?;
                    c.check(kmsw_forward(&m) == w, &w, "forward(backward(w)) != w")?;
                    c.check(kmsw_backward(&kmsw_forward(&m), b).as_ref() == Ok(&m), &w, "backward(forward(m)) != m")?;
                    c.check(w.se_count() == m.non_pole_vertices(), &w, "#SE != #non-pole vertices")?;
                    c.check(sorted(w.face_types()) == sorted(m.inner_face_types()), &w, "face-step types != inner face types")?;
                    c.check(m.outer_type() == FaceType::new(a, b), &w, "outer type != endpoints")?;
                    c.cases += 1;
                }
            }
        }
    }
    Ok(())
}

fn poset_v_suite(c: &mut Checker, max: usize) -> Result<(), Counterexample> {
    for edges in 2..=max {
        for p in posets_with_edges(edges) {
            let case = MapText(&p);
            let d = c.lift(psi_v(&p), &case)?;
            let back = c.lift(phi_v(&d), &case)?;
            c.check(back == p, &case, "phi_V(psi_V(p)) != p")?;
            c.check(psi_v(&back).as_ref() == Ok(&d), &case, "psi_V(phi_V(d)) != d")?;
            c.check(d.base().edge_count() == p.non_pole_vertices(), &case, "#edges of the dual != #non-pole vertices")?;
            let w = c.lift(poset_to_v_walk(&p), &case)?;
            c.check(v_walk_to_poset(&w).as_ref() == Ok(&p), &w, "V-walk does not decode to its poset")?;
            c.cases += 1;
        }
    }
    Ok(())
}

fn transversal_suite(c: &mut Checker, max: usize) -> Result<(), Counterexample> {
    for len in 0..=max {
        for a in 1..=len + 1 {
            for b in 1..=len + 1 {
                for w in enumerate_walks(WalkClass::T, len, (0, a), (b, 0), None) {
                    let d = c.lift(walk_to_decorated(&w), &w)?;
                    let x = c.lift(phi_t(&d), &w)?;
                    c.check(psi_t(&x).as_ref() == Ok(&d), &w, "psi_T(phi_T(d)) != d")?;
                    c.check(x.quadrangular_faces() == w.unmarked_nw(), &w, "#quadrangular faces != #unmarked NW")?;
                    c.check(x.we_type() == (a, b), &w, "W/E degrees != endpoints")?;
                    c.check(walk_to_transversal(&w).as_ref() == Ok(&x), &w, "walk_to_transversal differs")?;
                    c.check(transversal_to_walk(&x).as_ref() == Ok(&w), &w, "transversal_to_walk(x) != w")?;
                    c.cases += 1;
                }
            }
        }
    }
    Ok(())
}

fn plane_perm_suite(c: &mut Checker, max: usize) -> Result<(), Counterexample> {
    for n in 1..=max {
        for p in plane_permutations(n) {
            let b = c.lift(phi_map(&p), &p)?;
            let q = c.lift(psi_map(&b), &p)?;
            c.check(q == p, &p, "Psi(Phi(p)) != p")?;
            c.cases += 1;
        }
        for b in plane_posets(n) {
            let case = MapText(&b);
            let p = c.lift(psi_map(&b), &case)?;
            c.check(phi_map(&p).as_ref() == Ok(&b), &case, "Phi(Psi(b)) != b")?;
            c.cases += 1;
        }
    }
    Ok(())
}

fn gt_suite(c: &mut Checker, max: usize) -> Result<(), Counterexample> {
    let totals = omega_counts(max).totals();
    for n in 1..=max {
        let perms = plane_permutations(n);
        let posets = plane_posets(n);
        let level = format!("level {n}");
        c.check(perms.len() == posets.len(), &level, "#plane permutations != #plane posets")?;
        c.check(totals[n - 1] == perms.len().into(), &level, "generating tree total != #plane permutations")?;
        if n >= 2 {
            for p in &perms {
                let b = c.lift(phi_map(p), p)?;
                let lp = c.lift(active_points(p), p)?.label();
                let lb = c.lift(poset_label(&b), p)?;
                c.check(lp == lb, p, "label of p != label of Phi(p)")?;
                c.cases += 1;
            }
        }
        c.cases += 1;
    }
    Ok(())
}

/// Runs `suite` on every object up to size `max`: walk length for `kmsw`
/// and `transversal`, edge count for `poset-v`, permutation size for
/// `plane-perm` and `gt`.
pub fn run_suite(suite: Suite, max: usize) -> Result<VerifyReport, Counterexample> {
    let mut c = Checker { suite, cases: 0 };
    match suite {
        Suite::Kmsw => kmsw_suite(&mut c, max)?,
        Suite::PosetV => poset_v_suite(&mut c, max)?,
        Suite::Transversal => transversal_suite(&mut c, max)?,
        Suite::PlanePerm => plane_perm_suite(&mut c, max)?,
        Suite::Gt => gt_suite(&mut c, max)?,
    }
    Ok(VerifyReport { suite, max, cases: c.cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for s in Suite::ALL {
            let r = run_suite(s, 4).unwrap();
            assert!(r.cases > 0, "{s}");
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
    }

    #[test]
    fn object_classes() {
        assert_eq!(posets_with_edges(5).len(), 5);
        let counts: Vec<usize> = (1..=4).map(|n| bipolar_with_edges(n).len()).collect();
        assert_eq!(counts, [1, 2, 6, 22]);
        let t: Vec<usize> = (1..=4).map(|n| t_walks_with_se(n).len()).collect();
        assert_eq!(t, [1, 2, 6, 25]);
    }
}
