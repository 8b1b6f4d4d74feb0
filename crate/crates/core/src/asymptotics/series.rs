//! Step generating functions of the three weighted models, and the
//! constants of the zero-drift point.

use std::f64::consts::PI;

use super::jet::Jet;
use super::{AsymptoticsError, Model};

/// Inventory `S(z; x, y)` of one (possibly aggregated) step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSeries {
    pub model: Model,
    /// Weight per quadrangular face; only read by the transversal model.
    pub v: f64,
}

impl StepSeries {
    pub fn new(model: Model, v: f64) -> Self {
        StepSeries { model, v }
    }

    /// Radius of convergence of `S(z) - z^-2`.
    pub fn rho(&self) -> f64 {
        match self.model {
            Model::PosetsEdges => 1.0,
            Model::PosetsVertices => 0.5,
            Model::Transversal => ((self.v + 2.0).sqrt() - 1.0) / (self.v + 1.0),
        }
    }

    /// `S` with its first and second partial derivatives in `(z, x, y)`.
    pub fn jet(&self, z: f64, x: f64, y: f64) -> Jet {
        let (z, x, y) = (Jet::var(0, z), Jet::var(1, x), Jet::var(2, y));
        let se = x / y * z.powi(-2);
        match self.model {
            Model::PosetsEdges => {
                let a = z / x;
                let b = z * y;
                se + a / (1.0 - a) * b / (1.0 - b)
            }
            Model::PosetsVertices => se + (1.0 - z / x - z * y).recip(),
            Model::Transversal => {
                // SE followed by any number of face-steps (-i, j), i, j >= 1
                let inner = z / x + z * y + z * z * y / x * self.v;
                let faces = z * z * y / x / (1.0 - inner);
                se / (1.0 - faces)
            }
        }
    }

    pub fn s(&self, z: f64) -> f64 {
        self.jet(z, 1.0, 1.0).value
    }

    pub fn ds(&self, z: f64) -> f64 {
        self.jet(z, 1.0, 1.0).grad[0]
    }

    pub fn d2s(&self, z: f64) -> f64 {
        self.jet(z, 1.0, 1.0).hess[0][0]
    }

    /// `(∂x∂y S, ∂x∂x S)` at `(z; 1, 1)`.
    pub fn mixed(&self, z: f64) -> (f64, f64) {
        let j = self.jet(z, 1.0, 1.0);
        (j.hess[1][2], j.hess[1][1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct AsymptoticConstants {
    pub z0: f64,
    pub gamma: f64,
    pub xi: f64,
    pub alpha: f64,
    pub rho: f64,
}

pub fn alpha_of_xi(xi: f64) -> f64 {
    1.0 + PI / xi.acos()
}

/// Root of `S'` on `(ε, ρ - ε)` by bisection; `S'` is increasing there.
pub fn zero_drift_point(series: &StepSeries) -> Result<f64, AsymptoticsError> {
    let eps = 1e-9;
    let (mut lo, mut hi) = (eps, series.rho() - eps);
    if !(series.ds(lo) < 0.0 && series.ds(hi) > 0.0) {
        return Err(AsymptoticsError::NoRootInInterval);
    }
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if series.ds(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Closed forms of `(z0, gamma, xi)`; `None` where only a defining
/// relation is known.
pub fn closed_forms(series: &StepSeries) -> (Option<f64>, Option<f64>, Option<f64>) {
    let s5 = 5f64.sqrt();
    match series.model {
        Model::PosetsEdges => (None, None, None),
        Model::PosetsVertices => (Some((3.0 - s5) / 2.0), Some((11.0 + 5.0 * s5) / 2.0), Some((1.0 + s5) / 4.0)),
        Model::Transversal => {
            let v = series.v;
            let r = (9.0 + 4.0 * v).sqrt();
            // (-3 + r) / (2v), written without cancellation
            let z0 = 2.0 / (3.0 + r);
            let gamma = (2.0 * v * v + 18.0 * v + 27.0 + r.powi(3)) / (2.0 * (2.0 + v));
            let xi = (4.0 * v * v + 14.0 * v + 11.0 + r) / (4.0 * (2.0 + v).powi(2));
            (Some(z0), Some(gamma), Some(xi))
        }
    }
}

fn check(name: &'static str, got: f64, expected: f64, tol: f64) -> Result<(), AsymptoticsError> {
    if (got - expected).abs() <= tol * expected.abs().max(1.0) {
        Ok(())
    } else {
        Err(AsymptoticsError::ClosedFormMismatch { quantity: name, got, expected })
    }
}

/// Zero-drift point, growth rate, correlation and exponent, checked against
/// the closed forms to `1e-10`.
pub fn solve_constants(model: Model, v: f64) -> Result<AsymptoticConstants, AsymptoticsError> {
    if v < 0.0 || !v.is_finite() {
        return Err(AsymptoticsError::NegativeWeight(v));
    }
    let series = StepSeries::new(model, v);
    let z0 = zero_drift_point(&series)?;
    let gamma = series.s(z0);
    let (dxy, dxx) = series.mixed(z0);
    let xi = -dxy / dxx;
    let alpha = alpha_of_xi(xi);
    let tol = 1e-10;
    match model {
        Model::PosetsEdges => {
            let p = z0.powi(4) + z0.powi(3) - 3.0 * z0 * z0 + 3.0 * z0 - 1.0;
            check("P(z0)", p, 0.0, tol)?;
            check("gamma", gamma, 5.0 * z0.powi(3) + 7.0 * z0 * z0 - 13.0 * z0 + 9.0, tol)?;
            check("xi", xi, 1.0 - z0 / 2.0, tol)?;
        }
        Model::PosetsVertices | Model::Transversal => {
            let (cz, cg, cx) = closed_forms(&series);
            check("z0", z0, cz.unwrap(), tol)?;
            check("gamma", gamma, cg.unwrap(), tol)?;
            check("xi", xi, cx.unwrap(), tol)?;
            if model == Model::PosetsVertices {
                check("alpha", alpha, 6.0, tol)?;
            }
        }
    }
    Ok(AsymptoticConstants { z0, gamma, xi, alpha, rho: series.rho() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_at_unit_point() {
        let z = 0.3;
        let e = StepSeries::new(Model::PosetsEdges, 0.0);
        assert!((e.s(z) - z.powi(-2) - z * z / (1.0 - z).powi(2)).abs() < 1e-12);
        let b = StepSeries::new(Model::PosetsVertices, 0.0);
        assert!((b.s(z) - z.powi(-2) - 1.0 / (1.0 - 2.0 * z)).abs() < 1e-12);
        for v in [0.0, 1.0, 2.5] {
            let t = StepSeries::new(Model::Transversal, v);
            let z: f64 = 0.2;
            let expected = z.powi(-2) + 1.0 / (1.0 - 2.0 * z - (v + 1.0) * z * z);
            assert!((t.s(z) - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn posets_by_edges() {
        let c = solve_constants(Model::PosetsEdges, 0.0).unwrap();
        assert!((c.z0 - 0.5498).abs() < 1e-4);
        assert!((c.gamma - 4.80).abs() < 0.01);
        assert!((c.alpha - 5.14).abs() < 0.01);
    }

    #[test]
    fn posets_by_vertices() {
        let c = solve_constants(Model::PosetsVertices, 0.0).unwrap();
        assert!((c.alpha - 6.0).abs() < 1e-10);
        assert!((c.gamma - 11.09).abs() < 0.01);
    }

    #[test]
    fn transversal() {
        let c0 = solve_constants(Model::Transversal, 0.0).unwrap();
        assert!((c0.gamma - 13.5).abs() < 1e-10);
        assert!((c0.xi - 0.875).abs() < 1e-10);
        assert!((c0.alpha - 7.22).abs() < 0.01);
        let c1 = solve_constants(Model::Transversal, 1.0).unwrap();
        let r13 = 13f64.sqrt();
        assert!((c1.gamma - (47.0 + 13.0 * r13) / 6.0).abs() < 1e-10);
        assert!((c1.xi - (29.0 + r13) / 36.0).abs() < 1e-10);
        assert!((c1.alpha - 8.18).abs() < 0.01);
    }

    #[test]
    fn invariants_on_a_grid() {
        let mut last: Option<AsymptoticConstants> = None;
        for v in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
            let c = solve_constants(Model::Transversal, v).unwrap();
            let s = StepSeries::new(Model::Transversal, v);
            assert!(s.ds(c.z0).abs() < 1e-10);
            assert!(s.d2s(c.z0) > 0.0);
            assert!(c.xi > 0.0 && c.xi < 1.0);
            if let Some(prev) = last {
                assert!(c.xi > prev.xi && c.alpha > prev.alpha);
            }
            last = Some(c);
        }
        // gamma(v) / v = 1 + 4 / sqrt(v) + O(1 / v)
        let mut last_ratio = f64::INFINITY;
        for v in [1e2, 1e3, 1e4, 1e6] {
            let r = solve_constants(Model::Transversal, v).unwrap().gamma / v;
            assert!(r > 1.0 && r < last_ratio);
            assert!((r - 1.0 - 4.0 / v.sqrt()).abs() < 20.0 / v);
            last_ratio = r;
        }
        assert!(last_ratio - 1.0 < 0.01);
    }
}
