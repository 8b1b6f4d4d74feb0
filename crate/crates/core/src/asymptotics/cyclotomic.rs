//! Rationality of `alpha = 1 + π / arccos(ξ)` for algebraic `ξ`: it is
//! rational iff the numerator of `X((ζ + 1/ζ) / 2)` has a cyclotomic factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::polyq::PolyQ;
use super::{AsymptoticsError, Model};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Numerator `ζ^d X((ζ + 1/ζ) / 2)` of degree `2d`, made primitive.
pub fn chebyshev_numerator(x: &PolyQ) -> PolyQ {
    let d = x.degree().unwrap_or(0);
    let zeta_sq_plus_one = PolyQ::from_ints(&[1, 0, 1]);
    let mut acc = PolyQ::default();
    let mut power = PolyQ::from_ints(&[1]);
    let mut two_k = q(1);
    for (k, c) in x.coeffs().iter().enumerate() {
        let term = (&power * &PolyQ::monomial(d - k)).scale(&(c / &two_k));
        acc = &acc + &term;
        power = &power * &zeta_sq_plus_one;
        two_k *= q(2);
    }
    acc.primitive()
}

/// Euler's totient.
pub fn euler_phi(mut m: usize) -> usize {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicReport {
    /// The primitive numerator `N(ζ)`.
    pub numerator: PolyQ,
    /// Some `gcd(N, ζ^m - 1)` is nontrivial: `alpha` is rational.
    pub rational_alpha: bool,
    /// Smallest such `m`, with the common factor.
    pub witness: Option<(usize, PolyQ)>,
    /// `N` has degree at most 30 and a coefficient outside `[-2, 2]`.
    pub coefficient_bound_excludes: bool,
}

/// Exact cyclotomic-factor test on the numerator of `X((ζ + 1/ζ) / 2)`.
pub fn non_dfinite_check(x: &PolyQ) -> Result<CyclotomicReport, AsymptoticsError> {
    if x.degree().unwrap_or(0) == 0 {
        return Err(AsymptoticsError::DegenerateInput);
    }
    let n = chebyshev_numerator(x);
    let deg = n.degree().unwrap();
    let coefficient_bound_excludes = deg <= 30 && n.integer_coeffs().iter().any(|c| c.abs() > BigInt::from(2));
    let mut witness = None;
    for m in 1..=3 * deg * deg {
        if euler_phi(m) > deg {
            continue;
        }
        let zm = &PolyQ::monomial(m) - &PolyQ::from_ints(&[1]);
        let g = n.gcd(&zm);
        if g.degree().unwrap_or(0) > 0 {
            witness = Some((m, g));
            break;
        }
    }
    Ok(CyclotomicReport { numerator: n, rational_alpha: witness.is_some(), witness, coefficient_bound_excludes })
}

/// Square root of a nonnegative rational, when it is rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().clone(), r.denom().clone());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == n && &sd * &sd == d).then(|| BigRational::new(sn, sd))
}

/// Minimal polynomial of `ξ` over the rationals (primitive form); for the
/// transversal model `v` must be given.
pub fn xi_minimal_polynomial(model: Model, v: Option<&BigRational>) -> Result<PolyQ, AsymptoticsError> {
    match model {
        // z0 = 2 - 2ξ is a root of z^4 + z^3 - 3z^2 + 3z - 1
        Model::PosetsEdges => Ok(PolyQ::from_ints(&[-1, 3, -3, 1, 1]).compose(&PolyQ::from_ints(&[2, -2])).primitive()),
        Model::PosetsVertices => Ok(PolyQ::from_ints(&[-1, -2, 4])),
        Model::Transversal => {
            let v = v.ok_or(AsymptoticsError::MissingWeight)?;
            if v.is_negative() {
                return Err(AsymptoticsError::NegativeWeight(v.to_f64().unwrap_or(-1.0)));
            }
            // ξ = (P + sqrt(9 + 4v)) / D
            let two_plus_v = v + q(2);
            let d = &two_plus_v * &two_plus_v * q(4);
            let p = v * v * q(4) + v * q(14) + q(11);
            let disc = v * q(4) + q(9);
            let lin = PolyQ::new(vec![-p, d]);
            Ok(match rational_sqrt(&disc) {
                Some(r) => (&lin - &PolyQ::constant(r)).primitive(),
                None => (&(&lin * &lin) - &PolyQ::constant(disc)).primitive(),
            })
        }
    }
}

/// True when the test finds no cyclotomic factor, which rules out a
/// D-finite generating function.
pub fn dfinite_obstruction(model: Model, v: Option<&BigRational>) -> Result<bool, AsymptoticsError> {
    let x = xi_minimal_polynomial(model, v)?;
    Ok(!non_dfinite_check(&x)?.rational_alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transversal_polynomials() {
        let v0 = xi_minimal_polynomial(Model::Transversal, Some(&q(0))).unwrap();
        assert_eq!(v0, PolyQ::from_ints(&[-7, 8]));
        let v1 = xi_minimal_polynomial(Model::Transversal, Some(&q(1))).unwrap();
        assert_eq!(v1, PolyQ::from_ints(&[23, -58, 36]));
        for x in [&v0, &v1] {
            let r = non_dfinite_check(x).unwrap();
            assert!(!r.rational_alpha);
            assert!(r.coefficient_bound_excludes);
        }
        assert_eq!(non_dfinite_check(&v0).unwrap().numerator, PolyQ::from_ints(&[4, -7, 4]));
        assert_eq!(non_dfinite_check(&v1).unwrap().numerator, PolyQ::from_ints(&[9, -29, 41, -29, 9]));
    }

    #[test]
    fn control_with_rational_exponent() {
        let r = non_dfinite_check(&PolyQ::from_ints(&[-1, 2])).unwrap();
        assert!(r.rational_alpha);
        assert!(!r.coefficient_bound_excludes);
        let (m, g) = r.witness.unwrap();
        assert_eq!(m, 6);
        assert_eq!(g, PolyQ::from_ints(&[1, -1, 1]));
        let five = non_dfinite_check(&xi_minimal_polynomial(Model::PosetsVertices, None).unwrap()).unwrap();
        assert_eq!(five.witness.unwrap().0, 10);
    }

    #[test]
    fn posets_by_edges_numerator_is_palindromic() {
        let x = xi_minimal_polynomial(Model::PosetsEdges, None).unwrap();
        let r = non_dfinite_check(&x).unwrap();
        let c = r.numerator.integer_coeffs();
        let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
        assert_eq!(c, rev);
        assert_eq!(c, [1, -9, 31, -62, 77, -62, 31, -9, 1].map(BigInt::from));
        assert!(!r.rational_alpha);
    }

    #[test]
    fn rejects_constants() {
        assert_eq!(non_dfinite_check(&PolyQ::from_ints(&[3])), Err(AsymptoticsError::DegenerateInput));
    }
}
