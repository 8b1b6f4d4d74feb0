//! Asymptotic constants of the three weighted models: zero-drift point,
//! growth rate, correlation and exponent, the cyclotomic test on the
//! exponent, and growth fits on computed sequences.

pub mod cyclotomic;
pub mod fit;
pub mod jet;
pub mod polyq;
pub mod series;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

pub use cyclotomic::{chebyshev_numerator, dfinite_obstruction, euler_phi, non_dfinite_check, xi_minimal_polynomial, CyclotomicReport};
pub use fit::{alpha_from_central_charge, central_charge, growth_fit, GrowthFit};
pub use polyq::PolyQ;
pub use series::{alpha_of_xi, closed_forms, solve_constants, zero_drift_point, AsymptoticConstants, StepSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    PosetsEdges,
    PosetsVertices,
    Transversal,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::PosetsEdges, Model::PosetsVertices, Model::Transversal];

    pub fn name(self) -> &'static str {
        match self {
            Model::PosetsEdges => "posets-edges",
            Model::PosetsVertices => "posets-vertices",
            Model::Transversal => "transversal",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Model::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown model `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticsError {
    #[error("S' has no sign change on (0, rho)")]
    NoRootInInterval,
    #[error("{quantity} = {got} does not match the closed form {expected}")]
    ClosedFormMismatch { quantity: &'static str, got: f64, expected: f64 },
    #[error("negative weight v = {0}")]
    NegativeWeight(f64),
    #[error("the transversal model needs a weight v")]
    MissingWeight,
    #[error("degenerate input")]
    DegenerateInput,
    #[error("sequence too short: {got} terms, need {need}")]
    TooShort { got: usize, need: usize },
    #[error("{0} is out of range")]
    OutOfRange(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub model: Model,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    pub z0: f64,
    pub gamma: f64,
    pub xi: f64,
    pub alpha: f64,
    pub central_charge: f64,
    pub xi_polynomial: PolyQ,
    pub dfinite_obstruction: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Constants, central charge and cyclotomic verdict; `v` is read by the
/// transversal model only.
pub fn report(model: Model, v: Option<&BigRational>) -> Result<Report, AsymptoticsError> {
    let (v, vf) = match model {
        Model::Transversal => {
            let v = v.ok_or(AsymptoticsError::MissingWeight)?;
            (Some(v), v.to_f64().ok_or(AsymptoticsError::DegenerateInput)?)
        }
        _ => (None, 0.0),
    };
    let c = solve_constants(model, vf)?;
    let xi_polynomial = xi_minimal_polynomial(model, v)?;
    let verdict = non_dfinite_check(&xi_polynomial)?;
    Ok(Report {
        model,
        v: v.map(|v| v.to_string()),
        z0: c.z0,
        gamma: c.gamma,
        xi: c.xi,
        alpha: c.alpha,
        central_charge: central_charge(c.alpha)?,
        xi_polynomial,
        dfinite_obstruction: !verdict.rational_alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports() {
        let t0 = report(Model::Transversal, Some(&BigRational::from_integer(0.into()))).unwrap();
        assert!((t0.gamma - 13.5).abs() < 1e-10 && (t0.xi - 0.875).abs() < 1e-10);
        assert!(t0.dfinite_obstruction);
        assert_eq!(t0.xi_polynomial.to_string(), "8*s - 7");
        let pv = report(Model::PosetsVertices, None).unwrap();
        assert!(!pv.dfinite_obstruction);
        assert!(report(Model::PosetsEdges, None).unwrap().dfinite_obstruction);
        assert_eq!(report(Model::Transversal, None), Err(AsymptoticsError::MissingWeight));
        let json = t0.to_json();
        assert!(json.contains("\"model\": \"transversal\"") && json.contains("\"v\": \"0\""));
    }

    #[test]
    fn model_names() {
        for m in Model::ALL {
            assert_eq!(m.to_string().parse::<Model>(), Ok(m));
        }
        assert!("posets".parse::<Model>().is_err());
    }

    #[test]
    fn xi_polynomial_has_xi_as_root() {
        for v in [0i64, 1, 2, 3, 5] {
            let q = BigRational::from_integer(v.into());
            let r = report(Model::Transversal, Some(&q)).unwrap();
            assert!(r.xi_polynomial.eval_f64(r.xi).abs() < 1e-8, "v = {v}");
        }
        let e = report(Model::PosetsEdges, None).unwrap();
        assert!(e.xi_polynomial.eval_f64(e.xi).abs() < 1e-8);
    }
}
