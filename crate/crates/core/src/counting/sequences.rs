//! The counting sequences: posets by edges (`e_n`), posets by vertices
//! (`b_n`) and transversal structures (`t_n(v)`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{weighted_counts, weighted_counts_marked, BigNat, CountError, ModelSpec, Semiring, VPoly, WeightKind};

/// Quadrant excursions from the origin with steps `0, E, S, NW, SE`, for
/// every length `0..=max_len`.
fn small_step_excursions(max_len: usize) -> Vec<BigNat> {
    let size = max_len / 2 + 2;
    let mut g = vec![vec![BigNat::zero(); size]; size];
    g[0][0] = BigNat::one();
    let mut out = vec![BigNat::one()];
    for k in 1..=max_len {
        // position after k steps must return to the origin in max_len - k
        let bound = k.min(max_len - k).min(size - 1);
        let mut next = vec![vec![BigNat::zero(); size]; size];
        for x in 0..=bound {
            for y in 0..=bound {
                let mut a = g[x][y].clone();
                if x > 0 {
                    a += &g[x - 1][y];
                    a += &g[x - 1][y + 1];
                }
                a += &g[x][y + 1];
                if y > 0 {
                    a += &g[x + 1][y - 1];
                }
                next[x][y] = a;
            }
        }
        g = next;
        out.push(g[0][0].clone());
    }
    out
}

/// `e_1..e_N`: plane bipolar posets with `n` edges, as excursions of length
/// `n - 1` with small steps.
pub fn e_sequence(n_max: usize) -> Vec<BigNat> {
    if n_max == 0 {
        return Vec::new();
    }
    small_step_excursions(n_max - 1)
}

/// `e_1..e_N` from the indicator-weighted tandem walks from `(0, 1)` to
/// `(1, 0)` of length `n + 3`.
pub fn e_sequence_by_weights(n_max: usize) -> Vec<BigNat> {
    let spec = ModelSpec::new(WeightKind::Indicator, 1, Some(1));
    let counts = weighted_counts(&spec, n_max + 3, &BigNat::one());
    (1..=n_max).map(|n| if n == 1 { BigNat::one() } else { counts[n + 3].clone() }).collect()
}

/// `b_1..b_N`: plane bipolar posets with `n + 2` vertices, from binomially
/// weighted walks of length `n + 1` from and to the origin.
pub fn b_sequence(n_max: usize) -> Vec<BigNat> {
    let spec = ModelSpec::new(WeightKind::Binomial, 0, Some(0));
    let counts = weighted_counts(&spec, n_max + 1, &BigNat::one());
    counts[2..].to_vec()
}

/// The two-array recurrence for walks with small steps `SE, W, N, NW` and
/// a marked `NW` opening every face: `t_n = t↘_{n+2}(1, 0)`.
fn t_recurrence<R: Semiring>(n_max: usize, v: &R) -> Vec<R> {
    let top = n_max + 2;
    let one_plus_v = {
        let mut a = R::one();
        a.add_ref(v);
        a
    };
    // level n: i <= n, j <= top - n
    let mut se = vec![vec![R::zero(); top + 1]];
    let mut nw = vec![vec![R::zero(); top + 1]];
    se[0][1] = R::one();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=top {
        let jmax = top - n;
        let mut se_n = vec![vec![R::zero(); jmax + 1]; n + 1];
        let mut nw_n = vec![vec![R::zero(); jmax + 1]; n + 1];
        for i in 1..=n {
            for j in 0..=jmax {
                if i - 1 < se.len() {
                    let mut a = se[i - 1][j + 1].clone();
                    a.add_ref(&nw[i - 1][j + 1]);
                    se_n[i][j] = a;
                }
            }
        }
        for j in 0..=jmax {
            for i in (0..=n).rev() {
                let mut a = R::zero();
                if i < n && j > 0 {
                    a.add_ref(&se_n[i + 1][j - 1]);
                    a.add_ref(&nw_n[i + 1][j - 1].mul_ref(&one_plus_v));
                }
                if i < n {
                    a.add_ref(&nw_n[i + 1][j]);
                }
                if j > 0 {
                    a.add_ref(&nw_n[i][j - 1]);
                }
                nw_n[i][j] = a;
            }
        }
        if n >= 3 {
            out.push(se_n[1][0].clone());
        }
        se = se_n;
        nw = nw_n;
    }
    out
}

/// How `v` is treated in `t_sequence`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TMode {
    Symbolic,
    Evaluated(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TTerms {
    Symbolic(Vec<VPoly>),
    Evaluated(Vec<BigRational>),
}

impl TTerms {
    pub fn to_strings(&self) -> Vec<String> {
        match self {
            TTerms::Symbolic(t) => t.iter().map(|p| p.to_string()).collect(),
            TTerms::Evaluated(t) => t.iter().map(|q| q.to_string()).collect(),
        }
    }
}

/// `t_1(v)..t_N(v)`: transversal structures on `n + 4` vertices, weighted
/// by `v` per quadrangular inner face.
pub fn t_sequence(n_max: usize, mode: &TMode) -> Result<TTerms, CountError> {
    match mode {
        TMode::Symbolic => Ok(TTerms::Symbolic(t_recurrence(n_max, &VPoly::v()))),
        TMode::Evaluated(v0) => {
            if v0.is_negative() {
                return Err(CountError::NegativeWeight(v0.clone()));
            }
            let terms = if v0.is_integer() {
                let v = v0.to_integer().to_biguint().expect("nonnegative");
                t_recurrence(n_max, &v).into_iter().map(|t| BigRational::from_integer(BigInt::from(t))).collect()
            } else {
                t_recurrence(n_max, v0)
            };
            Ok(TTerms::Evaluated(terms))
        }
    }
}

/// `t_1(v)..t_N(v)` from transversally weighted tandem walks from `(0, 1)`
/// to `(1, 0)` with `n + 2` SE steps.
pub fn t_sequence_by_walks(n_max: usize) -> Vec<VPoly> {
    let spec = ModelSpec::new(WeightKind::Transversal, 1, Some(1));
    let max_len = 2 * n_max + 3;
    let marked = weighted_counts_marked(&spec, max_len, &VPoly::v());
    (1..=n_max)
        .map(|n| {
            let mut total = VPoly::zero();
            for by_s in &marked {
                if let Some(c) = by_s.get(n + 2) {
                    total += c;
                }
            }
            total
        })
        .collect()
}

/// Numbers of identities checked by [`series_relation_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// `[t^n] Q(0,0) = [t^(n-2)] Q̂(0,0)` for `3 <= n <= N`.
    pub q_identity: usize,
    /// `e_n = e_{n+4}(1,1)` for `1 <= n <= N`.
    pub shift_identity: usize,
}

/// Compares the indicator-weighted tandem walks with the small-step
/// excursions, coefficient by coefficient.
pub fn series_relation_check(n_max: usize) -> Result<RelationReport, CountError> {
    let tandem_any = weighted_counts(&ModelSpec::new(WeightKind::Indicator, 1, None), n_max, &BigNat::one());
    let excursions = small_step_excursions(n_max.max(2));
    let mut report = RelationReport { q_identity: 0, shift_identity: 0 };
    for n in 3..=n_max {
        if tandem_any[n] != excursions[n - 2] {
            return Err(CountError::MismatchAt(n));
        }
        report.q_identity += 1;
    }
    let by_weights = e_sequence_by_weights(n_max);
    let small = e_sequence(n_max);
    if small.first() != Some(&excursions[0]) {
        return Err(CountError::MismatchAt(1));
    }
    for n in 1..=n_max {
        if by_weights[n - 1] != small[n - 1] {
            return Err(CountError::MismatchAt(n));
        }
        report.shift_identity += 1;
    }
    Ok(report)
}

/// A computed sequence, for JSON or CSV output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceExport {
    pub model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    pub terms: Vec<String>,
}

impl SequenceExport {
    pub fn new(model: &str, v: Option<String>, terms: Vec<String>) -> Self {
        SequenceExport { model: model.to_string(), v, terms }
    }

    /// `n,term` rows, `n` from 1.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,term\n");
        for (k, t) in self.terms.iter().enumerate() {
            if t.contains(',') || t.contains(' ') {
                out.push_str(&format!("{},\"{}\"\n", k + 1, t));
            } else {
                out.push_str(&format!("{},{}\n", k + 1, t));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: &[BigNat]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn posets_by_edges() {
        assert_eq!(small(&e_sequence(11)), vec![1, 1, 1, 2, 5, 12, 32, 93, 279, 872, 2830]);
        assert_eq!(e_sequence_by_weights(14), e_sequence(14));
    }

    #[test]
    fn posets_by_vertices() {
        assert_eq!(small(&b_sequence(6)), vec![1, 2, 6, 23, 104, 530]);
    }

    #[test]
    fn transversal_structures() {
        let TTerms::Symbolic(sym) = t_sequence(7, &TMode::Symbolic).unwrap() else { panic!() };
        let shown: Vec<String> = sym[3..].iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["24 + 1*v", "116 + 12*v", "642 + 114*v + 2*v^2", "3938 + 1028*v + 48*v^2"]);
        let eval = |v: i64| t_sequence(9, &TMode::Evaluated(BigRational::from_integer(v.into()))).unwrap().to_strings();
        assert_eq!(eval(0), ["1", "2", "6", "24", "116", "642", "3938", "26194", "186042"]);
        assert_eq!(eval(1), ["1", "2", "6", "25", "128", "758", "5014", "36194", "280433"]);
        let half = BigRational::new(1.into(), 2.into());
        let TTerms::Evaluated(h) = t_sequence(7, &TMode::Evaluated(half.clone())).unwrap() else { panic!() };
        for (p, q) in sym.iter().zip(&h) {
            assert_eq!(p.eval(&half), *q);
        }
        assert!(matches!(
            t_sequence(3, &TMode::Evaluated(BigRational::from_integer((-1).into()))),
            Err(CountError::NegativeWeight(_))
        ));
    }

    #[test]
    fn recurrence_matches_weighted_walks() {
        let TTerms::Symbolic(sym) = t_sequence(6, &TMode::Symbolic).unwrap() else { panic!() };
        assert_eq!(t_sequence_by_walks(6), sym);
    }

    #[test]
    fn degree_bound() {
        let TTerms::Symbolic(sym) = t_sequence(12, &TMode::Symbolic).unwrap() else { panic!() };
        for (k, p) in sym.iter().enumerate().skip(3) {
            assert!(p.degree().unwrap() <= k + 1 - 3);
        }
    }

    #[test]
    fn relation() {
        let r = series_relation_check(12).unwrap();
        assert_eq!(r, RelationReport { q_identity: 10, shift_identity: 12 });
    }

    #[test]
    fn csv_export() {
        let e = SequenceExport::new("transversal", None, vec!["1".into(), "24 + 1*v".into()]);
        assert_eq!(e.to_csv(), "n,term\n1,1\n2,\"24 + 1*v\"\n");
    }
}
