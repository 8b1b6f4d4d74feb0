//! Second-order Taylor jets in three variables `(z, x, y)`.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub grad: [f64; 3],
    pub hess: [[f64; 3]; 3],
}

impl Jet {
    pub fn constant(value: f64) -> Self {
        Jet { value, grad: [0.0; 3], hess: [[0.0; 3]; 3] }
    }

    /// The `k`-th coordinate, at `value`.
    pub fn var(k: usize, value: f64) -> Self {
        let mut j = Jet::constant(value);
        j.grad[k] = 1.0;
        j
    }

    /// `f(self)` given `f`, `f'` and `f''` at `self.value`.
    fn chain(&self, f: f64, df: f64, d2f: f64) -> Self {
        let mut out = Jet::constant(f);
        for a in 0..3 {
            out.grad[a] = df * self.grad[a];
            for b in 0..3 {
                out.hess[a][b] = df * self.hess[a][b] + d2f * self.grad[a] * self.grad[b];
            }
        }
        out
    }

    pub fn recip(&self) -> Self {
        let v = self.value;
        self.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))
    }

    pub fn powi(&self, n: i32) -> Self {
        let v = self.value;
        let nf = f64::from(n);
        self.chain(v.powi(n), nf * v.powi(n - 1), nf * (nf - 1.0) * v.powi(n - 2))
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut out = self;
        out.value += o.value;
        for a in 0..3 {
            out.grad[a] += o.grad[a];
            for b in 0..3 {
                out.hess[a][b] += o.hess[a][b];
            }
        }
        out
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self * Jet::constant(-1.0)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut out = Jet::constant(self.value * o.value);
        for a in 0..3 {
            out.grad[a] = self.grad[a] * o.value + self.value * o.grad[a];
            for b in 0..3 {
                out.hess[a][b] = self.hess[a][b] * o.value
                    + self.grad[a] * o.grad[b]
                    + self.grad[b] * o.grad[a]
                    + self.value * o.hess[a][b];
            }
        }
        out
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, c: f64) -> Jet {
        self + Jet::constant(c)
    }
}

impl Sub<Jet> for f64 {
    type Output = Jet;
    fn sub(self, j: Jet) -> Jet {
        Jet::constant(self) - j
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, c: f64) -> Jet {
        self * Jet::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_of_a_rational_function() {
        // f = x^2 y / (1 - z)
        let (z, x, y) = (Jet::var(0, 0.5), Jet::var(1, 2.0), Jet::var(2, 3.0));
        let f = x.powi(2) * y / (1.0 - z);
        assert!((f.value - 24.0).abs() < 1e-12);
        assert!((f.grad[0] - 48.0).abs() < 1e-12);
        assert!((f.hess[1][2] - 8.0).abs() < 1e-12);
        assert!((f.hess[1][1] - 12.0).abs() < 1e-12);
        assert!((f.hess[0][0] - 192.0).abs() < 1e-9);
    }
}
