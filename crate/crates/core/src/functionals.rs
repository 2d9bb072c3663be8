//! Limit functionals kappa, mu, K, the equilibrium measures, and the joint
//! eigenvalue density.

use num_traits::Float;
use crate::chebyshev::{hilbert_pv_oracle, ChebyshevSeries};
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::{Error, Result};
use crate::quad;
use core::f64::consts::{LN_2, PI};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LimitFunctionals {
    pub kappa: f64,
    pub mu: f64,
    pub k_var: f64,
}

/// GUE: c0 - c2/2; LUE: c0 - c1/2; JUE: c0.
pub fn kappa(spec: &EnsembleSpec, f: &ChebyshevSeries) -> f64 {
    match spec.kind {
        Kind::Gue => f.coeff(0) - 0.5 * f.coeff(2),
        Kind::Lue => f.coeff(0) - 0.5 * f.coeff(1),
        Kind::Jue => f.coeff(0),
    }
}

/// LUE: (alpha/2)(c0 - f(-1)); JUE adds (beta/2)(c0 - f(1)); GUE: 0.
pub fn mu(spec: &EnsembleSpec, f: &ChebyshevSeries) -> f64 {
    let c0 = f.coeff(0);
    match spec.kind {
        Kind::Gue => 0.0,
        Kind::Lue => 0.5 * spec.alpha * (c0 - f.evaluate(-1.0)),
        Kind::Jue => 0.5 * spec.alpha * (c0 - f.evaluate(-1.0)) + 0.5 * spec.beta * (c0 - f.evaluate(1.0)),
    }
}

/// K[f] = (1/4) sum_{j>=1} j c_j^2.
pub fn k_variance(f: &ChebyshevSeries) -> f64 {
    0.25 * f.coeffs().iter().enumerate().skip(1).map(|(j, c)| j as f64 * c * c).fold(0.0, |a, b| a + b)
}

pub fn limit_functionals(spec: &EnsembleSpec, f: &ChebyshevSeries) -> LimitFunctionals {
    LimitFunctionals { kappa: kappa(spec, f), mu: mu(spec, f), k_var: k_variance(f) }
}

/// kappa by adaptive quadrature of the defining integral (x = cos theta).
pub fn kappa_quadrature(spec: &EnsembleSpec, f: impl Fn(f64) -> f64, tol: f64) -> Result<f64> {
    match spec.kind {
        Kind::Gue => quad::adaptive(|t: f64| f(t.cos()) * t.sin() * t.sin(), 0.0, PI, tol).map(|v| 2.0 * v / PI),
        Kind::Lue => quad::adaptive(|t: f64| f(t.cos()) * (1.0 - t.cos()), 0.0, PI, tol).map(|v| v / PI),
        Kind::Jue => quad::adaptive(|t: f64| f(t.cos()), 0.0, PI, tol).map(|v| v / PI),
    }
}

/// mu by adaptive quadrature of the defining integrals.
pub fn mu_quadrature(spec: &EnsembleSpec, f: impl Fn(f64) -> f64, tol: f64) -> Result<f64> {
    let fm = f(-1.0);
    let fp = f(1.0);
    let a = quad::adaptive(|t: f64| f(t.cos()) - fm, 0.0, PI, tol)? / (2.0 * PI);
    let b = quad::adaptive(|t: f64| f(t.cos()) - fp, 0.0, PI, tol)? / (2.0 * PI);
    Ok(match spec.kind {
        Kind::Gue => 0.0,
        Kind::Lue => spec.alpha * a,
        Kind::Jue => spec.alpha * a + spec.beta * b,
    })
}

/// K[f] from the double integral
/// (1/(2 pi^2)) int f(x)/sqrt(1-x^2) v.p. int f'(y) sqrt(1-y^2)/(x-y) dy dx.
/// The outer integral is taken in x = cos theta with the midpoint rule
/// (smooth periodic integrand), `nodes` points; the inner one by
/// `hilbert_pv_oracle`.
pub fn k_variance_oracle(f: &ChebyshevSeries, nodes: usize, tol: f64) -> Result<f64> {
    let mut sum = 0.0;
    let h = PI / nodes as f64;
    for k in 0..nodes {
        let th = (k as f64 + 0.5) * h;
        let x = th.cos();
        sum += f.evaluate(x) * hilbert_pv_oracle(f, x, tol)?;
    }
    Ok(sum * h / (2.0 * PI * PI))
}

/// log E exp(i h Tr f(M)) ~ i h (n kappa + mu) - h^2 K / 2.
pub fn log_trace_charfn_asymptotic(lf: &LimitFunctionals, n: usize, h: f64) -> Complex64 {
    Complex64::new(-0.5 * h * h * lf.k_var, h * (n as f64 * lf.kappa + lf.mu))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EquilibriumMeasure {
    pub kind: Kind,
    pub robin: f64,
}

impl EquilibriumMeasure {
    /// psi(x) on (-1, 1); zero outside.
    pub fn density(&self, x: f64) -> f64 {
        if !(x > -1.0 && x < 1.0) {
            return 0.0;
        }
        self.density_at(1.0 + x, 1.0 - x)
    }

    /// psi in terms of the distances 1 + x and 1 - x to the endpoints,
    /// accurate close to the edges.
    pub fn density_at(&self, dm: f64, dp: f64) -> f64 {
        match self.kind {
            Kind::Gue => 2.0 / PI * (dm * dp).sqrt(),
            Kind::Lue => (dp / dm).sqrt() / PI,
            Kind::Jue => 1.0 / (PI * (dm * dp).sqrt()),
        }
    }
}

pub fn equilibrium(spec: &EnsembleSpec) -> EquilibriumMeasure {
    let robin = match spec.kind {
        Kind::Gue => 1.0 + 2.0 * LN_2,
        Kind::Lue => 2.0 + 2.0 * LN_2,
        Kind::Jue => 2.0 * LN_2,
    };
    EquilibriumMeasure { kind: spec.kind, robin }
}

/// Unnormalized log joint density: -sum Q_n(x_j) + 2 sum_{j<k} log|x_k - x_j|.
pub fn joint_density_log(spec: &EnsembleSpec, x: &[f64]) -> Result<f64> {
    if let Some(&v) = x.iter().find(|&&v| !spec.contains(v)) {
        return Err(Error::OutOfSupport { value: v });
    }
    let mut s = 0.0;
    for (j, &a) in x.iter().enumerate() {
        s -= spec.q(a);
        for &b in &x[j + 1..] {
            s += 2.0 * (b - a).abs().ln();
        }
    }
    Ok(s)
}
