//! Ensemble descriptions and exact eigenvalue samplers (beta = 2).
//!
//! Scaling: all three ensembles have equilibrium support [-1, 1]. The joint
//! eigenvalue density is proportional to prod (x_k - x_j)^2 exp(-sum Q_n(x_j))
//! with Q_n = n V - omega.

use num_traits::Float;
use crate::error::{Error, Result};
use crate::functionals::joint_density_log;
use crate::linalg;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Gamma, StandardNormal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Kind {
    Gue,
    Lue,
    Jue,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Gue => "gue",
            Kind::Lue => "lue",
            Kind::Jue => "jue",
        }
    }

    /// Exponent d in the Kolmogorov-Smirnov bound n^{-1/d}.
    pub fn rate_exponent(self) -> u32 {
        match self {
            Kind::Gue | Kind::Lue => 5,
            Kind::Jue => 3,
        }
    }
}

impl core::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s.to_ascii_lowercase().as_str() {
            "gue" => Ok(Kind::Gue),
            "lue" => Ok(Kind::Lue),
            "jue" => Ok(Kind::Jue),
            _ => Err(Error::InvalidSpec(format!("unknown ensemble '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnsembleSpec {
    pub kind: Kind,
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl EnsembleSpec {
    pub fn new(kind: Kind, n: usize, alpha: f64, beta: f64) -> Result<Self> {
        let s = EnsembleSpec { kind, n, alpha, beta };
        s.validate()?;
        Ok(s)
    }

    pub fn gue(n: usize) -> Self {
        EnsembleSpec { kind: Kind::Gue, n, alpha: 0.0, beta: 0.0 }
    }

    pub fn lue(n: usize, alpha: f64) -> Self {
        EnsembleSpec { kind: Kind::Lue, n, alpha, beta: 0.0 }
    }

    pub fn jue(n: usize, alpha: f64, beta: f64) -> Self {
        EnsembleSpec { kind: Kind::Jue, n, alpha, beta }
    }

    pub fn with_n(self, n: usize) -> Self {
        EnsembleSpec { n, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        let bad = |name: &str, v: f64| Err(Error::InvalidSpec(format!("{name} = {v} must be finite and > -1")));
        match self.kind {
            Kind::Gue => {
                if self.alpha != 0.0 || self.beta != 0.0 {
                    return Err(Error::InvalidSpec("GUE takes no alpha/beta".into()));
                }
            }
            Kind::Lue => {
                if !(self.alpha > -1.0) || !self.alpha.is_finite() {
                    return bad("alpha", self.alpha);
                }
                if self.beta != 0.0 {
                    return Err(Error::InvalidSpec("LUE takes no beta".into()));
                }
            }
            Kind::Jue => {
                if !(self.alpha > -1.0) || !self.alpha.is_finite() {
                    return bad("alpha", self.alpha);
                }
                if !(self.beta > -1.0) || !self.beta.is_finite() {
                    return bad("beta", self.beta);
                }
            }
        }
        Ok(())
    }

    /// The support interval (lower, upper), possibly infinite.
    pub fn support(&self) -> (f64, f64) {
        match self.kind {
            Kind::Gue => (f64::NEG_INFINITY, f64::INFINITY),
            Kind::Lue => (-1.0, f64::INFINITY),
            Kind::Jue => (-1.0, 1.0),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.support();
        x >= lo && x <= hi
    }

    pub fn potential(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Gue => 2.0 * x * x,
            Kind::Lue => 2.0 * (x + 1.0),
            Kind::Jue => 0.0,
        }
    }

    pub fn omega(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Gue => 0.0,
            Kind::Lue => xlogy(self.alpha, 1.0 + x),
            Kind::Jue => xlogy(self.alpha, 1.0 + x) + xlogy(self.beta, 1.0 - x),
        }
    }

    /// Q_n(x) = n V(x) - omega(x).
    pub fn q(&self, x: f64) -> f64 {
        self.n as f64 * self.potential(x) - self.omega(x)
    }
}

fn xlogy(a: f64, y: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        a * y.ln()
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EigenSample {
    pub eigenvalues: Vec<f64>,
    pub seed: u64,
    pub index: u64,
}

impl EigenSample {
    /// (1/n) sum lambda_j^k.
    pub fn counting_measure_moment(&self, k: u32) -> f64 {
        let n = self.eigenvalues.len() as f64;
        crate::stats::pairwise_sum(&self.eigenvalues.iter().map(|x| x.powi(k as i32)).collect::<Vec<_>>()) / n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Method {
    /// Tridiagonal / bidiagonal matrix models, O(n^2).
    #[default]
    Tridiagonal,
    /// Dense Hermitian / Wishart / two-Wishart models, O(n^3); integer
    /// parameters only for LUE and JUE.
    Dense,
}

/// The generator for draw `index` under `seed`: stream `index` of ChaCha8.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn chi<R: Rng>(rng: &mut R, dof: f64) -> f64 {
    // chi_k = sqrt(2 Gamma(k/2, 1))
    let g: f64 = Gamma::new(0.5 * dof, 1.0).expect("positive shape").sample(rng);
    (2.0 * g).sqrt()
}

fn beta_pm1<R: Rng>(rng: &mut R, s: f64, t: f64) -> f64 {
    // density on [-1, 1] proportional to (1-x)^{s-1} (1+x)^{t-1}
    let u: f64 = Beta::new(t, s).expect("positive parameters").sample(rng);
    2.0 * u - 1.0
}

/// One exact draw from the joint eigenvalue law; deterministic in
/// (spec, seed, index).
pub fn sample(spec: &EnsembleSpec, seed: u64, index: u64) -> Result<EigenSample> {
    sample_with(spec, seed, index, Method::Tridiagonal)
}

pub fn sample_with(spec: &EnsembleSpec, seed: u64, index: u64, method: Method) -> Result<EigenSample> {
    spec.validate()?;
    let mut rng = rng_for(seed, index);
    let eigenvalues = match method {
        Method::Tridiagonal => tridiagonal_draw(spec, &mut rng)?,
        Method::Dense => dense_draw(spec, &mut rng)?,
    };
    Ok(EigenSample { eigenvalues, seed, index })
}

fn tridiagonal_draw<R: Rng>(spec: &EnsembleSpec, rng: &mut R) -> Result<Vec<f64>> {
    let n = spec.n;
    let nf = n as f64;
    match spec.kind {
        Kind::Gue => {
            let d: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
            let e: Vec<f64> = (1..n).map(|k| chi(rng, 2.0 * (n - k) as f64) / core::f64::consts::SQRT_2).collect();
            let ev = linalg::tridiag_eigenvalues(&d, &e)?;
            let s = 2.0 * nf.sqrt();
            Ok(ev.into_iter().map(|x| x / s).collect())
        }
        Kind::Lue => {
            let a = spec.alpha;
            // Lower bidiagonal: diagonal chi_{2(n+a-i+1)}, subdiagonal chi_{2(n-i)}.
            let d: Vec<f64> = (1..=n).map(|i| chi(rng, 2.0 * (nf + a - i as f64 + 1.0))).collect();
            let e: Vec<f64> = (1..n).map(|i| chi(rng, 2.0 * (nf - i as f64))).collect();
            // B B^T is tridiagonal: diagonal d_i^2 + e_{i-1}^2, off-diagonal d_i e_i.
            let diag: Vec<f64> = (0..n).map(|i| d[i] * d[i] + if i > 0 { e[i - 1] * e[i - 1] } else { 0.0 }).collect();
            let off: Vec<f64> = (0..n - 1).map(|i| d[i] * e[i]).collect();
            let ev = linalg::tridiag_eigenvalues(&diag, &off)?;
            // Rounding can push the smallest eigenvalue of the Gram matrix
            // just below zero; the true value is nonnegative.
            Ok(ev.into_iter().map(|l| l.max(0.0) / (4.0 * nf) - 1.0).collect())
        }
        Kind::Jue => {
            // Canonical coordinates on [-2, 2] with weight (2-x)^a (2+x)^b.
            let a = spec.beta;
            let b = spec.alpha;
            let m = 2 * n - 1;
            let mut al = vec![0.0; m + 1];
            for k in 0..m {
                let kf = k as f64;
                al[k] = if k % 2 == 0 {
                    let s = (2.0 * nf - kf - 2.0) / 2.0;
                    beta_pm1(rng, s + a + 1.0, s + b + 1.0)
                } else {
                    beta_pm1(rng, (2.0 * nf - kf - 3.0) / 2.0 + a + b + 2.0, (2.0 * nf - kf - 1.0) / 2.0)
                };
            }
            al[m] = -1.0;
            // alpha_{-1} = alpha_{-2} = -1
            let get = |j: isize| if j < 0 { -1.0 } else { al[j as usize] };
            let mut diag = Vec::with_capacity(n);
            let mut off = Vec::with_capacity(n.saturating_sub(1));
            for k in 0..n as isize {
                let a_odd = get(2 * k - 1);
                diag.push((1.0 - a_odd) * get(2 * k) - (1.0 + a_odd) * get(2 * k - 2));
                if (k as usize) + 1 < n {
                    let a_even = get(2 * k);
                    let v = (1.0 - a_odd) * (1.0 - a_even * a_even) * (1.0 + get(2 * k + 1));
                    off.push(v.max(0.0).sqrt());
                }
            }
            let ev = linalg::tridiag_eigenvalues(&diag, &off)?;
            Ok(ev.into_iter().map(|x| (0.5 * x).clamp(-1.0, 1.0)).collect())
        }
    }
}

fn complex_gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// X X^* for an n x m matrix of complex Gaussians with unit-variance real and
/// imaginary parts.
fn wishart<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<Complex64> {
    let x: Vec<Complex64> = (0..n * m).map(|_| complex_gaussian(rng)).collect();
    let mut w = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..m {
                s += x[i * m + k] * x[j * m + k].conj();
            }
            w[i * n + j] = s;
        }
    }
    w
}

fn integer_param(v: f64, name: &str) -> Result<usize> {
    if v >= 0.0 && v.fract() == 0.0 {
        Ok(v as usize)
    } else {
        Err(Error::InvalidSpec(format!("dense sampler needs a nonnegative integer {name}, got {v}")))
    }
}

fn dense_draw<R: Rng>(spec: &EnsembleSpec, rng: &mut R) -> Result<Vec<f64>> {
    let n = spec.n;
    let nf = n as f64;
    match spec.kind {
        Kind::Gue => {
            let mut h = vec![Complex64::new(0.0, 0.0); n * n];
            for i in 0..n {
                h[i * n + i] = Complex64::new(rng.sample(StandardNormal), 0.0);
                for j in i + 1..n {
                    let z = complex_gaussian(rng) * core::f64::consts::FRAC_1_SQRT_2;
                    h[i * n + j] = z;
                    h[j * n + i] = z.conj();
                }
            }
            let ev = linalg::hermitian_eigenvalues(&h, n)?;
            Ok(ev.into_iter().map(|x| x / (2.0 * nf.sqrt())).collect())
        }
        Kind::Lue => {
            let a = integer_param(spec.alpha, "alpha")?;
            let w = wishart(rng, n, n + a);
            let ev = linalg::hermitian_eigenvalues(&w, n)?;
            Ok(ev.into_iter().map(|l| (l.max(0.0)) / (4.0 * nf) - 1.0).collect())
        }
        Kind::Jue => {
            let a = integer_param(spec.alpha, "alpha")?;
            let b = integer_param(spec.beta, "beta")?;
            let wa = wishart(rng, n, n + a);
            let wb = wishart(rng, n, n + b);
            let sum: Vec<Complex64> = wa.iter().zip(&wb).map(|(x, y)| x + y).collect();
            let l = linalg::complex_cholesky(&sum, n)?;
            // G = L^{-1} A, then M = (L^{-1} G^*)^*
            let mut g = wa.clone();
            linalg::forward_substitute(&l, n, &mut g, n);
            let mut gs: Vec<Complex64> = (0..n * n).map(|k| g[(k % n) * n + k / n].conj()).collect();
            linalg::forward_substitute(&l, n, &mut gs, n);
            let mut m = vec![Complex64::new(0.0, 0.0); n * n];
            for i in 0..n {
                for j in 0..n {
                    m[i * n + j] = (gs[j * n + i].conj() + gs[i * n + j]) * 0.5;
                }
            }
            let ev = linalg::hermitian_eigenvalues(&m, n)?;
            Ok(ev.into_iter().map(|u| (2.0 * u - 1.0).clamp(-1.0, 1.0)).collect())
        }
    }
}

/// Direct rejection sampling from the explicit joint density, n <= 3.
/// Returns the sorted eigenvalues.
pub fn rejection_sample(spec: &EnsembleSpec, seed: u64, index: u64) -> Result<EigenSample> {
    spec.validate()?;
    let n = spec.n;
    if n > 3 {
        return Err(Error::TooLarge { n, max: 3 });
    }
    let nf = n as f64;
    let m = (n * (n - 1) / 2) as f64;
    let mut rng = rng_for(seed, index);
    let e = core::f64::consts::E;
    loop {
        let (x, log_ratio): (Vec<f64>, f64) = match spec.kind {
            Kind::Gue => {
                // proposal iid N(0, 1/(2c)), c = n; ratio = Delta^2 exp(-(2n - c) R^2)
                let c = nf;
                let sd = (1.0 / (2.0 * c)).sqrt();
                let x: Vec<f64> = (0..n).map(|_| sd * rng.sample::<f64, _>(StandardNormal)).collect();
                let a = 2.0 * nf - c;
                let log_bound = if m == 0.0 { 0.0 } else { m * (2.0 * m / (e * a)).ln() };
                let lr = joint_density_log(spec, &x)? + c * x.iter().map(|v| v * v).sum::<f64>();
                (x, lr - log_bound)
            }
            Kind::Lue => {
                // y = 1 + x iid Gamma(alpha + 1, rate c)
                let c = nf;
                let g = Gamma::new(spec.alpha + 1.0, 1.0 / c).expect("positive shape");
                let y: Vec<f64> = (0..n).map(|_| g.sample(&mut rng)).collect();
                let x: Vec<f64> = y.iter().map(|v| v - 1.0).collect();
                let a = 2.0 * nf - c;
                // max of Delta^2 over y >= 0 with sum S: S^2 (n = 2), S^6/108 (n = 3)
                let shape = if n == 3 { -(108f64.ln()) } else { 0.0 };
                let log_bound = if m == 0.0 { 0.0 } else { shape + 2.0 * m * (2.0 * m / (e * a)).ln() };
                let lr = joint_density_log(spec, &x)? - spec.alpha * y.iter().map(|v| v.ln()).sum::<f64>()
                    + c * y.iter().sum::<f64>();
                (x, lr - log_bound)
            }
            Kind::Jue => {
                let x: Vec<f64> = (0..n).map(|_| beta_pm1(&mut rng, spec.beta + 1.0, spec.alpha + 1.0)).collect();
                // max of Delta^2 on [-1, 1]^n is 4 for n = 2 and n = 3
                let log_bound = if n > 1 { 4f64.ln() } else { 0.0 };
                let w: f64 = x.iter().map(|&v| spec.omega(v)).sum();
                let lr = joint_density_log(spec, &x)? - w;
                (x, lr - log_bound)
            }
        };
        let u: f64 = rng.random();
        if u.ln() <= log_ratio {
            let mut x = x;
            x.sort_by(f64::total_cmp);
            return Ok(EigenSample { eigenvalues: x, seed, index });
        }
    }
}
