//! Estimators over Monte-Carlo batches of the normalized statistic
//! S = (Tr f(M) - n kappa - mu) / sqrt(K).

use num_traits::Float;
use crate::chebyshev::{ChebyshevSeries, Tail};
use crate::ensemble::{sample, EigenSample, EnsembleSpec};
use crate::error::{Error, Result};
use crate::functionals::{limit_functionals, LimitFunctionals};
use crate::special::{kolmogorov_q, norm_cdf};
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
use rand::Rng;

/// Pairwise (cascade) summation; deterministic for a fixed input order.
pub fn pairwise_sum(x: &[f64]) -> f64 {
    if x.len() <= 16 {
        return x.iter().sum();
    }
    let m = x.len() / 2;
    pairwise_sum(&x[..m]) + pairwise_sum(&x[m..])
}

pub fn mean(x: &[f64]) -> f64 {
    pairwise_sum(x) / x.len() as f64
}

/// Unbiased sample variance.
pub fn variance(x: &[f64]) -> f64 {
    if x.len() < 2 {
        return 0.0;
    }
    let m = mean(x);
    let d: Vec<f64> = x.iter().map(|v| (v - m) * (v - m)).collect();
    pairwise_sum(&d) / (x.len() - 1) as f64
}

/// Standard error of the mean.
pub fn std_error(x: &[f64]) -> f64 {
    (variance(x) / x.len() as f64).sqrt()
}

/// Smallest K[f] accepted as nondegenerate.
pub const K_MIN: f64 = 1e-14;

/// The test function as used by the statistic: the Chebyshev series on
/// [-1, 1] and an optional evaluator for the rest of the support.
#[derive(Clone)]
pub struct StatFunction {
    pub series: ChebyshevSeries,
    pub tail: Option<Tail>,
}

impl core::fmt::Debug for StatFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("StatFunction").field("series", &self.series).field("has_tail", &self.tail.is_some()).finish()
    }
}

impl StatFunction {
    pub fn new(series: ChebyshevSeries, tail: Option<Tail>) -> Self {
        StatFunction { series, tail }
    }

    /// A polynomial series is its own tail.
    pub fn polynomial(series: ChebyshevSeries) -> Self {
        let s = series.clone();
        let tail = Tail { eval: alloc::sync::Arc::new(move |x| s.evaluate(x)), growth: 1.0 };
        StatFunction { series, tail: Some(tail) }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if (-1.0..=1.0).contains(&x) {
            Ok(self.series.evaluate(x))
        } else {
            match &self.tail {
                Some(t) => Ok((t.eval)(x)),
                None => Err(Error::MissingTail { value: x }),
            }
        }
    }

    pub fn trace(&self, eigs: &[f64]) -> Result<f64> {
        let v: Result<Vec<f64>> = eigs.iter().map(|&x| self.eval(x)).collect();
        Ok(pairwise_sum(&v?))
    }
}

/// S_{f,n} for one draw.
pub fn statistic(eigs: &EigenSample, f: &StatFunction, lf: &LimitFunctionals) -> Result<f64> {
    if !(lf.k_var > K_MIN) {
        return Err(Error::DegenerateVariance { k: lf.k_var });
    }
    let n = eigs.eigenvalues.len() as f64;
    Ok((f.trace(&eigs.eigenvalues)? - n * lf.kappa - lf.mu) / lf.k_var.sqrt())
}

/// Maps draw indices to results. Implementations may run in parallel but
/// must return results in index order.
pub trait BatchRunner {
    fn map<T: Send, F: Fn(u64) -> Result<T> + Sync>(&self, first: u64, count: u64, f: F) -> Result<Vec<T>>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl BatchRunner for Sequential {
    fn map<T: Send, F: Fn(u64) -> Result<T> + Sync>(&self, first: u64, count: u64, f: F) -> Result<Vec<T>> {
        (first..first + count).map(f).collect()
    }
}

#[derive(Debug, Clone)]
pub struct StatBatch {
    pub spec: EnsembleSpec,
    pub functionals: LimitFunctionals,
    pub values: Vec<f64>,
    pub seed: u64,
    pub first_index: u64,
}

/// Draws `count` samples (indices first..first+count) and evaluates S.
pub fn generate_batch<R: BatchRunner>(
    runner: &R,
    spec: &EnsembleSpec,
    f: &StatFunction,
    seed: u64,
    first: u64,
    count: u64,
) -> Result<StatBatch> {
    spec.validate()?;
    let lf = limit_functionals(spec, &f.series);
    if !(lf.k_var > K_MIN) {
        return Err(Error::DegenerateVariance { k: lf.k_var });
    }
    let values = runner.map(first, count, |i| {
        let s = sample(spec, seed, i)?;
        let v = statistic(&s, f, &lf)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteSample { x: v })
        }
    })?;
    Ok(StatBatch { spec: *spec, functionals: lf, values, seed, first_index: first })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    /// NaN values are rejected.
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::NonFiniteSample { x: f64::NAN });
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(EmpiricalCdf { sorted })
    }

    pub fn count(&self) -> usize {
        self.sorted.len()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    /// Right-continuous F_N(x) = #{x_i <= x} / N.
    pub fn eval(&self, x: f64) -> f64 {
        let k = self.sorted.partition_point(|&v| v <= x);
        k as f64 / self.sorted.len() as f64
    }

    /// sup_x |F_N(x) - F(x)| for a continuous F.
    pub fn ks_distance_to(&self, cdf: impl Fn(f64) -> f64) -> f64 {
        let n = self.sorted.len() as f64;
        let mut d = 0.0f64;
        for (i, &x) in self.sorted.iter().enumerate() {
            let fx = cdf(x);
            d = d.max(((i + 1) as f64 / n - fx).abs()).max((i as f64 / n - fx).abs());
        }
        d
    }
}

/// Kolmogorov-Smirnov distance to the standard normal law.
pub fn ks_distance(cdf: &EmpiricalCdf) -> f64 {
    cdf.ks_distance_to(norm_cdf)
}

/// Asymptotic p-value for a one-sample KS distance d on n points.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    let en = (n as f64).sqrt();
    kolmogorov_q((en + 0.12 + 0.11 / en) * d)
}

/// Two-sample KS distance and asymptotic p-value.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> (f64, f64) {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n1, n2) = (x.len() as f64, y.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d = 0.0f64;
    while i < x.len() && j < y.len() {
        let v = x[i].min(y[j]);
        while i < x.len() && x[i] <= v {
            i += 1;
        }
        while j < y.len() && y[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n1 - j as f64 / n2).abs());
    }
    let en = (n1 * n2 / (n1 + n2)).sqrt();
    (d, kolmogorov_q((en + 0.12 + 0.11 / en) * d))
}

/// Bootstrap standard error of the KS distance (resampling with
/// replacement, `resamples` replicates).
///
/// Resamples are drawn as multiplicities over the sorted sample, so each
/// replicate costs O(N) and the normal CDF is evaluated once per point.
pub fn bootstrap_ks_stderr(values: &[f64], resamples: usize, seed: u64) -> Result<f64> {
    let cdf = EmpiricalCdf::new(values)?;
    let n = cdf.count();
    let phi: Vec<f64> = cdf.sorted().iter().map(|&x| norm_cdf(x)).collect();
    let mut rng = crate::ensemble::rng_for(seed, u64::MAX);
    let mut ks = Vec::with_capacity(resamples);
    let mut counts = vec![0u32; n];
    let nf = n as f64;
    for _ in 0..resamples {
        counts.iter_mut().for_each(|c| *c = 0);
        for _ in 0..n {
            counts[rng.random_range(0..n)] += 1;
        }
        let mut below = 0u32;
        let mut d = 0.0f64;
        for (c, &fx) in counts.iter().zip(&phi) {
            if *c > 0 {
                let lo = below as f64 / nf;
                below += c;
                let hi = below as f64 / nf;
                d = d.max((hi - fx).abs()).max((lo - fx).abs());
            }
        }
        ks.push(d);
    }
    Ok(variance(&ks).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CharfnEstimate {
    pub value: Complex64,
    pub se_re: f64,
    pub se_im: f64,
}

impl CharfnEstimate {
    /// sqrt(se_re^2 + se_im^2).
    pub fn stderr(&self) -> f64 {
        libm::hypot(self.se_re, self.se_im)
    }
}

fn jackknife_mean_se(x: &[f64]) -> f64 {
    let n = x.len();
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    let total = pairwise_sum(x);
    let loo: Vec<f64> = x.iter().map(|v| (total - v) / (nf - 1.0)).collect();
    let m = mean(&loo);
    let d: Vec<f64> = loo.iter().map(|v| (v - m) * (v - m)).collect();
    ((nf - 1.0) / nf * pairwise_sum(&d)).sqrt()
}

/// Sample mean of exp(i h S) with jackknife standard errors.
pub fn charfn_estimate(values: &[f64], h: f64) -> CharfnEstimate {
    let re: Vec<f64> = values.iter().map(|s| (h * s).cos()).collect();
    let im: Vec<f64> = values.iter().map(|s| (h * s).sin()).collect();
    CharfnEstimate {
        value: Complex64::new(mean(&re), mean(&im)),
        se_re: jackknife_mean_se(&re),
        se_im: jackknife_mean_se(&im),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GapRow {
    pub h: f64,
    pub gap: f64,
    pub stderr: f64,
}

/// |phi_hat(h) - exp(-h^2/2)| with its standard error, per h.
pub fn lemma2_gap(values: &[f64], h_grid: &[f64]) -> Vec<GapRow> {
    h_grid
        .iter()
        .map(|&h| {
            let e = charfn_estimate(values, h);
            let gap = (e.value - Complex64::new((-0.5 * h * h).exp(), 0.0)).norm();
            GapRow { h, gap, stderr: e.stderr() }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RateRow {
    pub n: usize,
    pub ks: f64,
    pub stderr: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_se: f64,
    /// 95% interval for the slope.
    pub slope_ci: (f64, f64),
}

/// Two-sided 97.5% Student t quantiles for 1..=30 degrees of freedom.
const T975: [f64; 30] = [
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228, 2.201, 2.179, 2.160, 2.145, 2.131,
    2.120, 2.110, 2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
];

/// Weighted least squares y = a + b x with weights w (use 1 for ordinary).
pub fn linear_fit(x: &[f64], y: &[f64], w: &[f64]) -> LinearFit {
    let sw: f64 = w.iter().sum();
    let mx = x.iter().zip(w).map(|(a, w)| a * w).sum::<f64>() / sw;
    let my = y.iter().zip(w).map(|(a, w)| a * w).sum::<f64>() / sw;
    let sxx: f64 = x.iter().zip(w).map(|(a, w)| w * (a - mx) * (a - mx)).sum();
    let sxy: f64 = x.iter().zip(y).zip(w).map(|((a, b), w)| w * (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let k = x.len();
    let (slope_se, t) = if k > 2 {
        let rss: f64 = x.iter().zip(y).zip(w).map(|((a, b), w)| w * (b - intercept - slope * a).powi(2)).sum();
        let s2 = rss / (k - 2) as f64;
        ((s2 / sxx).sqrt(), if k - 2 <= 30 { T975[k - 3] } else { 1.96 })
    } else {
        (0.0, 0.0)
    };
    LinearFit { slope, intercept, slope_se, slope_ci: (slope - t * slope_se, slope + t * slope_se) }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RateReport {
    pub rows: Vec<RateRow>,
    pub fit: LinearFit,
    /// Exponent d of the n^{-1/d} bound used for the constant.
    pub d: u32,
    /// max over n of n^{1/d} KS.
    pub bound_constant: f64,
}

impl RateReport {
    pub fn from_rows(rows: Vec<RateRow>, d: u32) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].n >= w[1].n) {
            return Err(Error::InvalidSpec("n values must be strictly increasing".into()));
        }
        let x: Vec<f64> = rows.iter().map(|r| (r.n as f64).ln()).collect();
        let y: Vec<f64> = rows.iter().map(|r| r.ks.ln()).collect();
        let fit = linear_fit(&x, &y, &vec![1.0; rows.len()]);
        let bound_constant = rows.iter().map(|r| (r.n as f64).powf(1.0 / d as f64) * r.ks).fold(0.0, f64::max);
        Ok(RateReport { rows, fit, d, bound_constant })
    }

    /// True if each KS value is at most the previous one plus three combined
    /// standard errors.
    pub fn nonincreasing_within_error(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].ks <= w[0].ks + 3.0 * libm::hypot(w[0].stderr, w[1].stderr))
    }
}

/// Default number of bootstrap replicates for KS standard errors.
pub const BOOTSTRAP_RESAMPLES: usize = 200;

/// Per-n KS distances with bootstrap errors, the log-log slope, and
/// bound_constant with d from the ensemble.
pub fn rate_sweep<R: BatchRunner>(
    runner: &R,
    template: &EnsembleSpec,
    f: &StatFunction,
    n_list: &[usize],
    draws: u64,
    seed: u64,
) -> Result<RateReport> {
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let spec = template.with_n(n);
        let batch = generate_batch(runner, &spec, f, seed, 0, draws)?;
        let cdf = EmpiricalCdf::new(&batch.values)?;
        let ks = ks_distance(&cdf);
        let stderr = bootstrap_ks_stderr(&batch.values, BOOTSTRAP_RESAMPLES, seed ^ n as u64)?;
        rows.push(RateRow { n, ks, stderr });
    }
    RateReport::from_rows(rows, template.kind.rate_exponent())
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Covariance {
    pub l: usize,
    /// Row-major l x l sample covariance.
    pub matrix: Vec<f64>,
    /// Row-major standard errors of the entries.
    pub stderr: Vec<f64>,
}

/// Sample covariance of Y_k = Tr T_k(M) - n kappa_k - mu_k, k = 1..l.
pub fn joint_covariance<R: BatchRunner>(runner: &R, spec: &EnsembleSpec, l: usize, draws: u64, seed: u64) -> Result<Covariance> {
    spec.validate()?;
    if l == 0 {
        return Err(Error::InvalidSpec("l must be at least 1".into()));
    }
    let funcs: Vec<(StatFunction, LimitFunctionals)> = (1..=l)
        .map(|k| {
            let mut c = vec![0.0; k + 1];
            c[k] = 1.0;
            let s = ChebyshevSeries::new(c);
            let lf = limit_functionals(spec, &s);
            (StatFunction::polynomial(s), lf)
        })
        .collect();
    let n = spec.n as f64;
    let rows: Vec<Vec<f64>> = runner.map(0, draws, |i| {
        let s = sample(spec, seed, i)?;
        funcs.iter().map(|(f, lf)| Ok(f.trace(&s.eigenvalues)? - n * lf.kappa - lf.mu)).collect()
    })?;
    let cols: Vec<Vec<f64>> = (0..l).map(|k| rows.iter().map(|r| r[k]).collect()).collect();
    let means: Vec<f64> = cols.iter().map(|c| mean(c)).collect();
    let mut matrix = vec![0.0; l * l];
    let mut stderr = vec![0.0; l * l];
    let nd = draws as f64;
    for a in 0..l {
        for b in 0..l {
            if draws < 2 {
                continue;
            }
            let prod: Vec<f64> = (0..draws as usize).map(|i| (cols[a][i] - means[a]) * (cols[b][i] - means[b])).collect();
            matrix[a * l + b] = pairwise_sum(&prod) / (nd - 1.0);
            stderr[a * l + b] = std_error(&prod);
        }
    }
    Ok(Covariance { l, matrix, stderr })
}
