//! Chebyshev representation of test functions on [-1, 1].
//!
//! Coefficients use the mean-normalized convention f = c0 + sum_{j>=1} c_j T_j,
//! so c0 is half of (2/pi) int_0^pi f(cos s) ds.

use num_traits::Float;
use crate::error::{Error, Result};
use crate::quad;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Default relative trimming tolerance.
pub const TRIM_TOL: f64 = 1e-14;

/// Evaluator for the part of the support outside [-1, 1], with the declared
/// growth exponent A in |f(x)| <= C exp(A V(x)).
#[derive(Clone)]
pub struct Tail {
    pub eval: RealFn,
    pub growth: f64,
}

#[derive(Clone)]
pub struct TestFunction {
    pub name: String,
    eval: RealFn,
    tail: Option<Tail>,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("has_tail", &self.tail.is_some())
            .finish()
    }
}

impl TestFunction {
    pub fn new(name: &str, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        TestFunction { name: name.to_string(), eval: Arc::new(f), tail: None }
    }

    /// A function that is given by the same formula on the whole real line.
    pub fn entire(name: &str, f: impl Fn(f64) -> f64 + Send + Sync + 'static, growth: f64) -> Self {
        let f: RealFn = Arc::new(f);
        TestFunction { name: name.to_string(), eval: f.clone(), tail: Some(Tail { eval: f, growth }) }
    }

    pub fn with_tail(mut self, f: impl Fn(f64) -> f64 + Send + Sync + 'static, growth: f64) -> Self {
        self.tail = Some(Tail { eval: Arc::new(f), growth });
        self
    }

    /// T_k, polynomial on all of R.
    pub fn chebyshev(k: usize) -> Self {
        let mut c = alloc::vec![0.0; k + 1];
        c[k] = 1.0;
        let s = ChebyshevSeries::new(c);
        TestFunction::entire(&alloc::format!("chebyshev:{k}"), move |x| s.evaluate(x), 1.0)
    }

    pub fn exp() -> Self {
        TestFunction::entire("exp", libm::exp, 1.0)
    }

    /// Runge's function 1/(1 + 25 x^2).
    pub fn runge() -> Self {
        TestFunction::entire("runge", |x| 1.0 / (1.0 + 25.0 * x * x), 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn tail(&self) -> Option<&Tail> {
        self.tail.as_ref()
    }

    /// Checks |tail(x)| <= (1 + max_{[-1,1]} |f|) exp(A V(x)) at the probes.
    pub fn tail_respects_growth(&self, potential: impl Fn(f64) -> f64, probes: &[f64]) -> bool {
        let Some(t) = &self.tail else { return true };
        let m = (0..=64)
            .map(|k| self.eval(-1.0 + k as f64 / 32.0).abs())
            .fold(0.0, f64::max);
        probes.iter().all(|&x| {
            let v = (t.eval)(x).abs();
            v.is_finite() && v <= (1.0 + m) * libm::exp(t.growth * potential(x))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct ChebyshevSeries {
    coeffs: Vec<f64>,
}

impl ChebyshevSeries {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let coeffs = if coeffs.is_empty() { alloc::vec![0.0] } else { coeffs };
        ChebyshevSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// c_j, zero beyond the stored degree.
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    /// Clenshaw recurrence.
    pub fn evaluate(&self, x: f64) -> f64 {
        let c = &self.coeffs;
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &cj in c[1..].iter().rev() {
            let b0 = 2.0 * x * b1 - b2 + cj;
            b2 = b1;
            b1 = b0;
        }
        c[0] + x * b1 - b2
    }

    /// Drops trailing coefficients below `tol * max |c_j|`.
    pub fn trim(&self, tol: f64) -> Self {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let mut n = self.coeffs.len();
        while n > 1 && self.coeffs[n - 1].abs() <= tol * scale {
            n -= 1;
        }
        ChebyshevSeries::new(self.coeffs[..n].to_vec())
    }

    /// Coefficients of f'.
    pub fn derivative(&self) -> Self {
        let m = self.degree();
        if m == 0 {
            return ChebyshevSeries::new(alloc::vec![0.0]);
        }
        let mut d = alloc::vec![0.0; m + 1];
        for k in (1..=m).rev() {
            d[k - 1] = d.get(k + 1).copied().unwrap_or(0.0) + 2.0 * k as f64 * self.coeffs[k];
        }
        d[0] *= 0.5;
        d.truncate(m);
        ChebyshevSeries::new(d)
    }

    pub fn scaled(&self, s: f64) -> Self {
        ChebyshevSeries::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        ChebyshevSeries::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }
}

/// Interpolates f at the m+1 Chebyshev-Gauss nodes cos((2k+1) pi/(2m+2)).
pub fn transform(f: &TestFunction, m: usize) -> Result<ChebyshevSeries> {
    transform_fn(|x| f.eval(x), m)
}

pub fn transform_fn(f: impl Fn(f64) -> f64, m: usize) -> Result<ChebyshevSeries> {
    let np = m + 1;
    let mut vals = Vec::with_capacity(np);
    for k in 0..np {
        let x = (PI * (2 * k + 1) as f64 / (2 * np) as f64).cos();
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { x });
        }
        vals.push(v);
    }
    let mut c = Vec::with_capacity(np);
    for j in 0..np {
        let mut s = 0.0;
        for (k, v) in vals.iter().enumerate() {
            // reduce j(2k+1) mod 4np to keep the cosine argument small
            let idx = (j * (2 * k + 1)) % (4 * np);
            s += v * (PI * idx as f64 / (2 * np) as f64).cos();
        }
        c.push(2.0 * s / np as f64);
    }
    c[0] *= 0.5;
    Ok(ChebyshevSeries::new(c))
}

/// Brute-force v.p. int_{-1}^{1} f'(y) sqrt(1-y^2) / (x-y) dy.
///
/// A symmetric window of half-width eps around x is folded into the regular
/// integrand (F(x-t) - F(x+t))/t; the two outer pieces are integrated in the
/// variable y = cos(theta), which removes the square-root endpoint behavior.
pub fn hilbert_pv_oracle(s: &ChebyshevSeries, x: f64, tol: f64) -> Result<f64> {
    if !(x.abs() < 1.0) || !(tol > 0.0) {
        return Err(Error::InvalidSpec("hilbert_pv_oracle needs |x| < 1 and tol > 0".into()));
    }
    let d = s.derivative();
    let big_f = |y: f64| d.evaluate(y) * (1.0 - y * y).max(0.0).sqrt();
    let eps = 0.5 * (1.0 - x.abs());
    let inner = quad::adaptive(|t: f64| if t == 0.0 { 0.0 } else { (big_f(x - t) - big_f(x + t)) / t }, 0.0, eps, tol / 3.0)?;
    let kernel = |th: f64| {
        let y = th.cos();
        let st = th.sin();
        d.evaluate(y) * st * st / (x - y)
    };
    let left = quad::adaptive(kernel, (x - eps).acos(), PI, tol / 3.0)?;
    let right = quad::adaptive(kernel, 0.0, (x + eps).acos(), tol / 3.0)?;
    Ok(inner + left + right)
}
