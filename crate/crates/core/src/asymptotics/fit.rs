//! Estimating `gamma` and `alpha` in `a_n ~ c gamma^n n^-alpha` from terms,
//! and the central charge attached to `alpha`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::AsymptoticsError;

pub const MIN_TERMS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthFit {
    pub gamma_hat: f64,
    pub alpha_hat: f64,
}

fn ln_big(a: &BigUint) -> f64 {
    let bits = a.bits();
    if bits <= 64 {
        return a.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top = (a >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `a / b` in floating point, without overflow.
fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let scaled = (a << 64u32) / b;
    let bits = scaled.bits();
    let shift = bits.saturating_sub(64);
    (&scaled >> shift).to_f64().unwrap() * 2f64.powi(shift as i32 - 64)
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Order-`k` Richardson extrapolation of `s_n, ..., s_{n+k}` (indices `n`).
fn richardson(s: &[f64], n: usize, k: usize) -> f64 {
    (0..=k)
        .map(|j| {
            let sign = if (k + j) % 2 == 0 { 1.0 } else { -1.0 };
            sign * s[j] * ((n + j) as f64).powi(k as i32) / (factorial(j) * factorial(k - j))
        })
        .sum()
}

/// Least squares of `y` on `(1, ln n, 1/n)`; returns the `ln n` coefficient.
fn log_slope(ns: &[f64], ys: &[f64]) -> f64 {
    let mut m = [[0.0; 3]; 3];
    let mut b = [0.0; 3];
    for (&n, &y) in ns.iter().zip(ys) {
        let row = [1.0, n.ln(), 1.0 / n];
        for i in 0..3 {
            b[i] += row[i] * y;
            for j in 0..3 {
                m[i][j] += row[i] * row[j];
            }
        }
    }
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mut m1 = m;
    for i in 0..3 {
        m1[i][1] = b[i];
    }
    det(&m1) / det(&m)
}

/// `seq[i]` is the term of index `n = i + 1`. Gamma comes from Richardson
/// extrapolation of the ratios `a_{n+1} / a_n` at the end of the sequence
/// (after dividing out `(n / (n+1))^alpha` when a hint is given); alpha from
/// regressing `ln a_n - n ln gamma_hat` on the second half.
pub fn growth_fit(seq: &[BigUint], alpha_hint: Option<f64>) -> Result<GrowthFit, AsymptoticsError> {
    if seq.len() < MIN_TERMS {
        return Err(AsymptoticsError::TooShort { got: seq.len(), need: MIN_TERMS });
    }
    if seq.iter().any(Zero::is_zero) {
        return Err(AsymptoticsError::DegenerateInput);
    }
    let len = seq.len();
    let k = 3;
    let first = len - 1 - k - 1;
    let ratios: Vec<f64> = (first..len - 1)
        .map(|i| {
            let n = (i + 1) as f64;
            let r = ratio(&seq[i + 1], &seq[i]);
            match alpha_hint {
                Some(a) => r * ((n + 1.0) / n).powf(a),
                None => r,
            }
        })
        .collect();
    let gamma_hat = richardson(&ratios, first + 1, k);
    let ln_gamma = gamma_hat.ln();
    let (ns, ys): (Vec<f64>, Vec<f64>) = (len / 2..len)
        .map(|i| {
            let n = (i + 1) as f64;
            (n, ln_big(&seq[i]) - n * ln_gamma)
        })
        .unzip();
    Ok(GrowthFit { gamma_hat, alpha_hat: -log_slope(&ns, &ys) })
}

fn charge_relation(c: f64) -> f64 {
    c - 1.0 - ((1.0 - c) * (25.0 - c)).sqrt()
}

/// The `c <= 1` with `12 (2 - alpha) = c - 1 - sqrt((1 - c)(25 - c))`.
pub fn central_charge(alpha: f64) -> Result<f64, AsymptoticsError> {
    if !(alpha >= 2.0) || !alpha.is_finite() {
        return Err(AsymptoticsError::OutOfRange(alpha));
    }
    let target = 12.0 * (2.0 - alpha);
    let mut lo = -1.0;
    while charge_relation(lo) > target {
        lo *= 2.0;
    }
    let mut hi = 1.0;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if charge_relation(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Inverse of [`central_charge`] on `c <= 1`.
pub fn alpha_from_central_charge(c: f64) -> Result<f64, AsymptoticsError> {
    if !(c <= 1.0) {
        return Err(AsymptoticsError::OutOfRange(c));
    }
    Ok(2.0 - charge_relation(c) / 12.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(gamma: f64, alpha: f64, len: usize) -> Vec<BigUint> {
        // round(2^200 gamma^n n^-alpha (1 + 1/n)), built through logarithms
        (1..=len)
            .map(|n| {
                let n = n as f64;
                let ln = n * gamma.ln() - alpha * n.ln() + (1.0 + 1.0 / n).ln();
                let mant = (ln / std::f64::consts::LN_2).fract();
                let exp = (ln / std::f64::consts::LN_2).floor() as i64 + 200;
                let m = BigUint::from((2f64.powf(mant) * 2f64.powi(52)) as u64);
                if exp >= 52 {
                    m << (exp - 52) as u32
                } else {
                    m >> (52 - exp) as u32
                }
            })
            .collect()
    }

    #[test]
    fn recovers_synthetic_constants() {
        let seq = synthetic(4.5, 3.5, 200);
        let fit = growth_fit(&seq, None).unwrap();
        assert!((fit.gamma_hat - 4.5).abs() < 1e-6, "{fit:?}");
        assert!((fit.alpha_hat - 3.5).abs() < 0.05, "{fit:?}");
        let hinted = growth_fit(&seq, Some(3.5)).unwrap();
        assert!((hinted.gamma_hat - 4.5).abs() < 1e-6);
    }

    #[test]
    fn too_short() {
        let seq = vec![BigUint::from(1u8); 10];
        assert_eq!(growth_fit(&seq, None), Err(AsymptoticsError::TooShort { got: 10, need: MIN_TERMS }));
    }

    #[test]
    fn ln_of_large_integers() {
        let a = BigUint::from(3u8).pow(500);
        assert!((ln_big(&a) - 500.0 * 3f64.ln()).abs() < 1e-9);
        assert!((ratio(&BigUint::from(7u8).pow(300), &BigUint::from(7u8).pow(299)) - 7.0).abs() < 1e-12);
    }

    #[test]
    fn central_charge_examples() {
        assert!((central_charge(2.0).unwrap() - 1.0).abs() < 1e-10);
        let a0 = 1.0 + std::f64::consts::PI / 0.875f64.acos();
        let c = central_charge(a0).unwrap();
        assert!(c < 0.0);
        assert!((alpha_from_central_charge(c).unwrap() - a0).abs() < 1e-8);
        assert_eq!(central_charge(1.5), Err(AsymptoticsError::OutOfRange(1.5)));
        let mut last = f64::INFINITY;
        for k in 0..50 {
            let c = central_charge(2.0 + 0.25 * k as f64).unwrap();
            assert!(c < last);
            last = c;
        }
    }
}
