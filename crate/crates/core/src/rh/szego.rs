//! Szego function D = D1 D2 and the global parametrix N built from it.

use num_traits::Float;
use crate::branch::{c, log, pow, sqrt_z2m1, I, ONE};
use crate::chebyshev::ChebyshevSeries;
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::{Error, Result};
use crate::quad::tanh_sinh;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::Matrix2C;

/// Chebyshev series with complex coefficients, evaluated anywhere in the
/// plane by Clenshaw's recurrence.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexSeries {
    pub coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        ComplexSeries { coeffs }
    }

    pub fn zero() -> Self {
        ComplexSeries { coeffs: Vec::new() }
    }

    /// scale * f for a real series f; f~ = i h f uses scale = i h.
    pub fn from_real(f: &ChebyshevSeries, scale: Complex64) -> Self {
        ComplexSeries { coeffs: f.coeffs().iter().map(|&a| scale * a).collect() }
    }

    /// c * T_k.
    pub fn monomial(k: usize, coef: Complex64) -> Self {
        let mut coeffs = alloc::vec![c(0.0, 0.0); k + 1];
        coeffs[k] = coef;
        ComplexSeries { coeffs }
    }

    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or(c(0.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let m = self.coeffs.len();
        if m == 0 {
            return c(0.0, 0.0);
        }
        let mut b1 = c(0.0, 0.0);
        let mut b2 = c(0.0, 0.0);
        for j in (1..m).rev() {
            let b0 = self.coeffs[j] + z * b1 * 2.0 - b2;
            b2 = b1;
            b1 = b0;
        }
        self.coeffs[0] + z * b1 - b2
    }

    /// sum_j c_j u^j by Horner.
    fn power_sum(&self, u: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &a| acc * u + a)
    }

    /// sum_j j c_j u^j.
    fn weighted_power_sum(&self, u: Complex64) -> Complex64 {
        self.coeffs.iter().enumerate().rev().fold(c(0.0, 0.0), |acc, (j, &a)| acc * u + a * j as f64)
    }
}

/// D(z) for a given ensemble and f~, with D1 in closed form and D2 from the
/// Chebyshev coefficients of f~.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SzegoFunction {
    pub kind: Kind,
    pub alpha: f64,
    pub beta: f64,
    pub f_tilde: ComplexSeries,
    /// Adds eps Log(z+1) to log D1 while keeping the displayed D1(inf).
    /// Only for exercising the failure paths of the verifiers.
    pub d1_perturbation: f64,
}

pub fn szego(spec: &EnsembleSpec, f_tilde: ComplexSeries) -> SzegoFunction {
    let (alpha, beta) = match spec.kind {
        Kind::Gue => (0.0, 0.0),
        Kind::Lue => (spec.alpha, 0.0),
        Kind::Jue => (spec.alpha, spec.beta),
    };
    SzegoFunction { kind: spec.kind, alpha, beta, f_tilde, d1_perturbation: 0.0 }
}

impl SzegoFunction {
    pub fn with_perturbation(mut self, eps: f64) -> Self {
        self.d1_perturbation = eps;
        self
    }

    pub fn log_d1(&self, z: Complex64) -> Complex64 {
        let inv_w = ONE / (z + sqrt_z2m1(z));
        let (a, b) = (self.alpha, self.beta);
        let base = match self.kind {
            Kind::Gue => c(0.0, 0.0),
            Kind::Lue => (log(z + ONE) + log(inv_w)) * (0.5 * a),
            Kind::Jue => log(z + ONE) * (0.5 * a) + log(z - ONE) * (0.5 * b) + log(inv_w) * (0.5 * (a + b)),
        };
        if self.d1_perturbation != 0.0 {
            base + log(z + ONE) * self.d1_perturbation
        } else {
            base
        }
    }

    pub fn log_d2(&self, z: Complex64) -> Complex64 {
        let inv_w = ONE / (z + sqrt_z2m1(z));
        self.f_tilde.power_sum(inv_w) * 0.5
    }

    pub fn log_d(&self, z: Complex64) -> Complex64 {
        self.log_d1(z) + self.log_d2(z)
    }

    pub fn d1(&self, z: Complex64) -> Complex64 {
        self.log_d1(z).exp()
    }

    pub fn d2(&self, z: Complex64) -> Complex64 {
        self.log_d2(z).exp()
    }

    pub fn d(&self, z: Complex64) -> Complex64 {
        self.log_d(z).exp()
    }

    pub fn d1_inf(&self) -> f64 {
        match self.kind {
            Kind::Gue => 1.0,
            Kind::Lue => 2f64.powf(-0.5 * self.alpha),
            Kind::Jue => 2f64.powf(-0.5 * (self.alpha + self.beta)),
        }
    }

    pub fn d2_inf(&self) -> Complex64 {
        (self.f_tilde.coeff(0) * 0.5).exp()
    }

    pub fn d_inf(&self) -> Complex64 {
        self.d2_inf() * self.d1_inf()
    }

    /// D'/D.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        let s = sqrt_z2m1(z);
        let inv_w = ONE / (z + s);
        let d2 = -self.f_tilde.weighted_power_sum(inv_w) / (s * 2.0);
        let (a, b) = (self.alpha, self.beta);
        let d1 = match self.kind {
            Kind::Gue => c(0.0, 0.0),
            Kind::Lue => (ONE / (z + ONE) - ONE / s) * (0.5 * a),
            Kind::Jue => ONE / (z + ONE) * (0.5 * a) + ONE / (z - ONE) * (0.5 * b) - ONE / s * (0.5 * (a + b)),
        };
        d1 + d2 + ONE / (z + ONE) * self.d1_perturbation
    }

    /// log chi(z) = f~(z) + alpha Log(1+z) + beta Log(1-z).
    pub fn log_chi(&self, z: Complex64) -> Complex64 {
        let mut v = self.f_tilde.eval(z);
        if self.alpha != 0.0 {
            v += log(ONE + z) * self.alpha;
        }
        if self.beta != 0.0 {
            v += log(ONE - z) * self.beta;
        }
        v
    }

    pub fn chi(&self, z: Complex64) -> Complex64 {
        self.log_chi(z).exp()
    }

    /// D^{+}(x) and D^{-}(x) on (-1, 1), read off the closed forms on either
    /// signed zero.
    pub fn boundary_values(&self, x: f64) -> (Complex64, Complex64) {
        (self.d(c(x, 0.0)), self.d(c(x, -0.0)))
    }

    /// |D+ D- / chi - 1| at x.
    pub fn jump_residual(&self, x: f64) -> f64 {
        let (p, m) = self.boundary_values(x);
        (p * m / self.chi(c(x, 0.0)) - ONE).norm()
    }

    /// |dD/dy - i dD/dx| by central differences with step h.
    pub fn cauchy_riemann_residual(&self, z: Complex64, h: f64) -> f64 {
        let fx = (self.d(z + h) - self.d(z - h)) / (2.0 * h);
        let fy = (self.d(z + I * h) - self.d(z - I * h)) / (2.0 * h);
        (fy - I * fx).norm()
    }
}

/// Oracle for log D2: trapezoid rule in theta on
/// (s / 2 pi) int_0^pi f~(cos t) / (z - cos t) dt, doubled to convergence.
pub fn log_d2_oracle(sz: &SzegoFunction, z: Complex64) -> Result<Complex64> {
    let s = sqrt_z2m1(z);
    let f = |t: f64| {
        let x = c(t.cos(), 0.0);
        sz.f_tilde.eval(x) / (z - x)
    };
    let mut m = 32usize;
    let mut sum = (f(0.0) + f(PI)) * 0.5;
    let h = PI / m as f64;
    for k in 1..m {
        sum += f(k as f64 * h);
    }
    let mut prev = sum * h;
    while m < 1 << 18 {
        let h = PI / (2 * m) as f64;
        for k in 0..m {
            sum += f((2 * k + 1) as f64 * h);
        }
        m *= 2;
        let cur = sum * h;
        if (cur - prev).norm() <= 1e-14 * cur.norm().max(1.0) {
            return Ok(cur * s / (2.0 * PI));
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet { estimate: prev.norm(), error: f64::NAN })
}

/// Oracle for log D1 from its defining integral by tanh-sinh.
pub fn log_d1_oracle(sz: &SzegoFunction, z: Complex64) -> Result<Complex64> {
    let s = sqrt_z2m1(z);
    let (a, b) = (sz.alpha, sz.beta);
    if a == 0.0 && b == 0.0 {
        return Ok(c(0.0, 0.0));
    }
    let v = tanh_sinh(
        |x, dm, dp| {
            let w = a * dm.ln() + if b != 0.0 { b * dp.ln() } else { 0.0 };
            c(w / (dm * dp).sqrt(), 0.0) / (z - c(x, 0.0))
        },
        -1.0,
        1.0,
        1e-14,
    )?;
    Ok(v * s / (2.0 * PI))
}

/// q(z) = ((z-1)/(z+1))^{1/4}, principal. The quotient of principal fourth
/// roots agrees with it off (-inf, 1] and honours signed zeros.
fn q_of(z: Complex64) -> Complex64 {
    pow(z - ONE, 0.25) / pow(z + ONE, 0.25)
}

fn n_matrix(sz: &SzegoFunction, z: Complex64) -> Matrix2C {
    let q = q_of(z);
    let qp = q + ONE / q;
    let qm = q - ONE / q;
    let d = sz.d(z);
    let di = sz.d_inf();
    let two_i = c(0.0, 2.0);
    Matrix2C::new(di * qp / (d * 2.0), d * di * qm / two_i, -qm / (two_i * d * di), d * qp / (di * 2.0))
}

/// N(z) off [-1, 1].
pub fn global_parametrix(sz: &SzegoFunction, z: Complex64) -> Result<Matrix2C> {
    if z.im == 0.0 && z.re.abs() <= 1.0 {
        return Err(Error::BranchViolation);
    }
    Ok(n_matrix(sz, z))
}

/// Boundary values of N on (-1, 1) from the signed zeros.
pub fn global_parametrix_boundary(sz: &SzegoFunction, x: f64) -> (Matrix2C, Matrix2C) {
    (n_matrix(sz, c(x, 0.0)), n_matrix(sz, c(x, -0.0)))
}

/// N^{-1} N' in closed form.
pub fn n_log_derivative(sz: &SzegoFunction, z: Complex64) -> Result<Matrix2C> {
    if z.im == 0.0 && z.re.abs() <= 1.0 {
        return Err(Error::BranchViolation);
    }
    let dd = sz.log_derivative(z);
    let d2 = (sz.log_d(z) * 2.0).exp();
    let den = c(0.0, 2.0) * (z * z - ONE);
    Ok(Matrix2C::new(-dd, d2 / den, -(ONE / d2) / den, dd))
}

/// N^{-1} (N(z+h) - N(z-h)) / 2h.
pub fn n_log_derivative_fd(sz: &SzegoFunction, z: Complex64, h: f64) -> Result<Matrix2C> {
    let n = global_parametrix(sz, z)?;
    let d = (global_parametrix(sz, z + h)? - global_parametrix(sz, z - h)?) * (0.5 / h);
    Ok(n.inv() * d)
}

/// J_T^o(x) = [[0, chi], [-1/chi, 0]].
pub fn jt_o(sz: &SzegoFunction, x: f64) -> Matrix2C {
    let ch = sz.chi(c(x, 0.0));
    Matrix2C::new(c(0.0, 0.0), ch, -ONE / ch, c(0.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs() -> [EnsembleSpec; 3] {
        [EnsembleSpec::gue(10), EnsembleSpec::lue(10, 1.5), EnsembleSpec::jue(10, 0.5, -0.3)]
    }

    fn ft() -> ComplexSeries {
        ComplexSeries::monomial(2, c(0.0, 0.3))
    }

    #[test]
    fn clenshaw_matches_direct_sum() {
        let s = ComplexSeries::new(alloc::vec![c(0.3, 0.1), c(-1.0, 0.5), c(0.25, 0.0), c(0.0, -0.7)]);
        let z = c(0.4, -0.9);
        let t2 = z * z * 2.0 - ONE;
        let t3 = z * t2 * 2.0 - z;
        let want = s.coeffs[0] + s.coeffs[1] * z + s.coeffs[2] * t2 + s.coeffs[3] * t3;
        assert!((s.eval(z) - want).norm() < 1e-14);
    }

    #[test]
    fn limits_at_infinity() {
        let gue = szego(&EnsembleSpec::gue(1), ComplexSeries::zero());
        assert_eq!(gue.d1(c(3.0, 1.0)), ONE);
        assert_eq!(gue.d2(c(3.0, 1.0)), ONE);
        assert_eq!(gue.d_inf(), ONE);
        let lue = szego(&EnsembleSpec::lue(1, 1.5), ComplexSeries::zero());
        assert!((lue.d1_inf() - 2f64.powf(-0.75)).abs() < 1e-15);
        for s in specs() {
            let sz = szego(&s, ft());
            let big = c(1e7, 3e6);
            assert!((sz.d(big) - sz.d_inf()).norm() < 1e-6, "{:?}", s.kind);
        }
    }

    #[test]
    fn multiplicative_jump() {
        for s in specs() {
            for f in [ComplexSeries::zero(), ft()] {
                let sz = szego(&s, f);
                for k in 0..50 {
                    let x = ((k as f64 + 0.5) * PI / 50.0).cos();
                    assert!(sz.jump_residual(x) <= 1e-10, "{:?} x={x}: {}", s.kind, sz.jump_residual(x));
                }
            }
        }
    }

    #[test]
    fn analytic_off_the_cut() {
        for s in specs() {
            let sz = szego(&s, ft());
            for z in [c(0.3, 0.4), c(-1.2, 0.1), c(1.5, -0.7), c(0.0, -2.0)] {
                assert!(sz.cauchy_riemann_residual(z, 1e-5) <= 1e-8);
            }
        }
    }

    #[test]
    fn closed_forms_match_oracles() {
        for s in specs() {
            let sz = szego(&s, ComplexSeries::new(alloc::vec![c(0.1, 0.2), c(0.0, -0.4), c(0.0, 0.3)]));
            for z in [c(0.3, 0.4), c(-1.2, 0.1), c(2.5, -0.7)] {
                let a = sz.log_d2(z);
                let b = log_d2_oracle(&sz, z).unwrap();
                assert!((a - b).norm() < 1e-11, "D2 {:?} {z}: {a} {b}", s.kind);
                let a = sz.log_d1(z);
                let b = log_d1_oracle(&sz, z).unwrap();
                assert!((a - b).norm() < 1e-10, "D1 {:?} {z}: {a} {b}", s.kind);
            }
        }
    }

    #[test]
    fn global_parametrix_properties() {
        for s in specs() {
            let sz = szego(&s, ft());
            let n = global_parametrix(&sz, c(2.0, 3.0)).unwrap();
            assert!((n.det() - ONE).norm() <= 1e-12);
            let far = global_parametrix(&sz, c(1e5, 0.0)).unwrap();
            assert!((far - Matrix2C::IDENTITY).norm() <= 1e-4);
            let (np, nm) = global_parametrix_boundary(&sz, 0.2);
            assert!((np - nm * jt_o(&sz, 0.2)).norm() <= 1e-9);
            let rich = super::super::boundary_value(|z| n_matrix(&sz, z), c(0.2, 0.0), ONE, super::super::Side::Plus);
            assert!((rich - np).norm() <= 1e-9);
        }
        let sz = szego(&EnsembleSpec::gue(1), ft());
        assert_eq!(global_parametrix(&sz, c(0.5, 0.0)), Err(Error::BranchViolation));
    }

    #[test]
    fn log_derivative_closed_form() {
        for s in specs() {
            let sz = szego(&s, ft());
            let z = c(2.0, 0.0);
            let m = n_log_derivative(&sz, z).unwrap();
            let d = sz.d(z);
            assert!((m.m[0][1] - d * d / c(0.0, 6.0)).norm() < 1e-14);
            assert!((m.m[0][0] + m.m[1][1]).norm() == 0.0);
            let z = c(1.5, 0.5);
            let fd = n_log_derivative_fd(&sz, z, 1e-5).unwrap();
            assert!((fd - n_log_derivative(&sz, z).unwrap()).norm() <= 1e-7);
        }
    }
}
