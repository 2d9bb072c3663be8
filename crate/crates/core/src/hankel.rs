//! Exact finite-n characteristic functions of linear statistics.
//!
//! By Andreief's identity, E exp(sum g(lambda_j)) is a ratio of Hankel
//! determinants of the weight w_n = exp(-Q_n) with and without exp(g).
//! Written in the orthonormal basis p_0..p_{n-1} of w_n the denominator is
//! the identity, so the ratio is det G with
//!
//!   G_jk = int p_j p_k e^{g} w_n / int w_n,
//!
//! which is well conditioned for every n, unlike the monomial moment matrix.
//! The integrals use the Gauss rule of w_n itself (Hermite, Laguerre or
//! Jacobi type after the affine map onto the equilibrium scaling), doubled
//! until successive determinants agree.

use num_traits::Float;
use crate::chebyshev::ChebyshevSeries;
use crate::dd::{CDd, Dd};
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::{Error, Result};
use crate::functionals::limit_functionals;
use crate::linalg::{complex_det, complex_det_dd, golub_welsch};
use crate::stats::K_MIN;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

pub const N_MAX: usize = 8;
pub const DEFAULT_NODES: usize = 200;

/// Accumulation precision for the Gram entries and the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Precision {
    Double,
    #[default]
    DoubleDouble,
}

#[derive(Debug, Clone)]
struct Rule {
    x: Vec<f64>,
    w: Vec<f64>,
}

/// A rule moved onto a contour: nodes, weights and p[i * n + j] = p_j(x_i).
struct Contour {
    x: Vec<Complex64>,
    w: Vec<Complex64>,
    p: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct HankelOracle {
    spec: EnsembleSpec,
    nodes: usize,
    max_nodes: usize,
    tol: f64,
    precision: Precision,
    cond_max: f64,
    // a_0..a_{n-1} and sqrt(b_1..b_n), enough for p_0..p_{n-1}
    a: Vec<f64>,
    sb: Vec<f64>,
    rules: Vec<Rule>,
}

impl HankelOracle {
    pub fn new(spec: &EnsembleSpec) -> Result<Self> {
        Self::with_options(spec, DEFAULT_NODES, Precision::default())
    }

    pub fn with_options(spec: &EnsembleSpec, nodes: usize, precision: Precision) -> Result<Self> {
        spec.validate()?;
        if spec.n > N_MAX {
            return Err(Error::TooLarge { n: spec.n, max: N_MAX });
        }
        if nodes < spec.n {
            return Err(Error::InvalidSpec("fewer quadrature nodes than n".into()));
        }
        let (a, b) = recurrence(spec, spec.n);
        let mut o = HankelOracle {
            spec: *spec,
            nodes,
            max_nodes: nodes << 4,
            tol: 1e-10,
            precision,
            cond_max: 1e12,
            a,
            sb: b.iter().map(|v| v.sqrt()).collect(),
            rules: Vec::new(),
        };
        // The first two levels are always needed; keep them.
        o.rules = vec![o.rule(nodes)?, o.rule(2 * nodes)?];
        Ok(o)
    }

    pub fn spec(&self) -> &EnsembleSpec {
        &self.spec
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1} of w_n in the
    /// equilibrium scaling: a_0..a_{m-1} and b_1..b_{m-1}.
    pub fn recurrence(&self, m: usize) -> (Vec<f64>, Vec<f64>) {
        recurrence(&self.spec, m)
    }

    /// Gauss rule with `m` nodes for w_n normalized to a probability measure.
    pub fn gauss_rule(&self, m: usize) -> Result<(Vec<f64>, Vec<f64>)> {
        let (a, b) = self.recurrence(m);
        golub_welsch(&a, &b[..m - 1])
    }

    fn rule(&self, m: usize) -> Result<Rule> {
        let (x, w) = self.gauss_rule(m)?;
        Ok(Rule { x, w })
    }

    /// Moves a rule onto the contour. For LUE with tau != 0 the half line
    /// t = 2n(1+x) > 0 becomes the ray t(1 + i tau); by Cauchy
    ///
    ///   int F(t) t^a e^{-t} dt = (1+i tau)^{a+1} int F(t(1+i tau)) t^a e^{-t} e^{-i tau t} dt
    ///
    /// whenever F does not grow on the sector in between.
    fn contour(&self, rule: &Rule, tau: f64) -> Contour {
        let n = self.spec.n;
        let nf = n as f64;
        let shear = Complex64::new(1.0, tau);
        let lead = if tau == 0.0 { Complex64::new(1.0, 0.0) } else { shear.powf(self.spec.alpha + 1.0) };
        let mut x = Vec::with_capacity(rule.x.len());
        let mut w = Vec::with_capacity(rule.x.len());
        let mut p = vec![Complex64::new(0.0, 0.0); rule.x.len() * n];
        for (i, (&xi, &wi)) in rule.x.iter().zip(&rule.w).enumerate() {
            let (z, wz) = if tau == 0.0 {
                (Complex64::new(xi, 0.0), Complex64::new(wi, 0.0))
            } else {
                let t = 2.0 * nf * (1.0 + xi);
                (shear * (1.0 + xi) - 1.0, lead * wi * Complex64::new(0.0, -tau * t).exp())
            };
            let row = &mut p[i * n..(i + 1) * n];
            let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
            for j in 0..n {
                row[j] = cur;
                let sb_prev = if j == 0 { 0.0 } else { self.sb[j - 1] };
                let next = ((z - self.a[j]) * cur - prev * sb_prev) / self.sb[j];
                prev = cur;
                cur = next;
            }
            x.push(z);
            w.push(wz);
        }
        Contour { x, w, p }
    }

    fn det_with(&self, rule: &Rule, tau: f64, g: &dyn Fn(Complex64) -> Complex64) -> Result<Complex64> {
        let n = self.spec.n;
        let c = self.contour(rule, tau);
        // weight times e^g, folded per node
        let e: Vec<Complex64> = c.x.iter().zip(&c.w).map(|(&x, &w)| w * g(x).exp()).collect();
        let cond = |gram: Vec<Complex64>| -> Result<Complex64> {
            let (det, ratio) = complex_det(gram, n);
            if !(ratio <= self.cond_max) {
                return Err(Error::IllConditioned { estimate: ratio });
            }
            Ok(det)
        };
        match self.precision {
            Precision::Double => {
                let mut gram = vec![Complex64::new(0.0, 0.0); n * n];
                for (i, ei) in e.iter().enumerate() {
                    let row = &c.p[i * n..(i + 1) * n];
                    for j in 0..n {
                        let cj = ei * row[j];
                        for k in j..n {
                            gram[j * n + k] += cj * row[k];
                        }
                    }
                }
                for j in 0..n {
                    for k in 0..j {
                        gram[j * n + k] = gram[k * n + j];
                    }
                }
                cond(gram)
            }
            Precision::DoubleDouble => {
                let mut gram = vec![CDd::ZERO; n * n];
                let real = tau == 0.0;
                for (i, ei) in e.iter().enumerate() {
                    let row = &c.p[i * n..(i + 1) * n];
                    let ed = CDd::from_c64(*ei);
                    for j in 0..n {
                        for k in j..n {
                            let term = if real {
                                ed.scale(Dd::from_f64(row[j].re).mul_f64(row[k].re))
                            } else {
                                ed * CDd::from_c64(row[j]) * CDd::from_c64(row[k])
                            };
                            gram[j * n + k] = gram[j * n + k] + term;
                        }
                    }
                }
                for j in 0..n {
                    for k in 0..j {
                        gram[j * n + k] = gram[k * n + j];
                    }
                }
                cond(gram.iter().map(|z| z.to_c64()).collect())?;
                Ok(complex_det_dd(gram, n).to_c64())
            }
        }
    }

    /// E_n exp(sum_j g(lambda_j)) for a complex exponent g, evaluated with
    /// node doubling until two successive rules agree to the tolerance.
    /// `g` must be analytic when `tau` is nonzero (LUE only, see `contour`).
    pub fn exp_moment(&self, tau: f64, g: &dyn Fn(Complex64) -> Complex64) -> Result<Complex64> {
        if tau != 0.0 && self.spec.kind != Kind::Lue {
            return Err(Error::InvalidSpec("contour shear applies to LUE only".into()));
        }
        let mut prev = self.det_with(&self.rules[0], tau, g)?;
        let mut m = 2 * self.nodes;
        loop {
            let cur = if m == 2 * self.nodes {
                self.det_with(&self.rules[1], tau, g)?
            } else {
                self.det_with(&self.rule(m)?, tau, g)?
            };
            let err = (cur - prev).norm();
            if err <= self.tol {
                return Ok(cur);
            }
            if m >= self.max_nodes {
                return Err(Error::ToleranceNotMet { estimate: cur.norm(), error: err });
            }
            prev = cur;
            m *= 2;
        }
    }
}

/// Recurrence coefficients, padded so that b has m entries b_1..b_m.
fn recurrence(spec: &EnsembleSpec, m: usize) -> (Vec<f64>, Vec<f64>) {
    let nf = spec.n as f64;
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    match spec.kind {
        // e^{-2n x^2}: Hermite with t = sqrt(2n) x.
        Kind::Gue => {
            for k in 0..m {
                a.push(0.0);
                b.push((k + 1) as f64 / (4.0 * nf));
            }
        }
        // (1+x)^alpha e^{-2n(1+x)}: Laguerre with t = 2n(1+x).
        Kind::Lue => {
            let al = spec.alpha;
            for k in 0..m {
                let kf = k as f64;
                a.push((2.0 * kf + al + 1.0) / (2.0 * nf) - 1.0);
                let k1 = kf + 1.0;
                b.push(k1 * (k1 + al) / (4.0 * nf * nf));
            }
        }
        // (1-x)^beta (1+x)^alpha.
        Kind::Jue => {
            let (pa, pb) = (spec.beta, spec.alpha);
            let s = pa + pb;
            for k in 0..m {
                let kf = k as f64;
                if k == 0 {
                    a.push((pb - pa) / (s + 2.0));
                } else {
                    a.push((pb * pb - pa * pa) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0)));
                }
                let k1 = kf + 1.0;
                if k == 0 {
                    b.push(4.0 * (1.0 + pa) * (1.0 + pb) / ((2.0 + s) * (2.0 + s) * (3.0 + s)));
                } else {
                    let t = 2.0 * k1 + s;
                    b.push(4.0 * k1 * (k1 + pa) * (k1 + pb) * (k1 + s) / (t * t * (t + 1.0) * (t - 1.0)));
                }
            }
        }
    }
    (a, b)
}

/// Exact characteristic function phi_{f,n}(h) = E exp(ih S_{f,n}).
pub fn hankel_charfn(oracle: &HankelOracle, f: &ChebyshevSeries, h: f64) -> Result<Complex64> {
    let lf = limit_functionals(oracle.spec(), f);
    if !(lf.k_var > K_MIN) {
        return Err(Error::DegenerateVariance { k: lf.k_var });
    }
    if h == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let s = h / lf.k_var.sqrt();
    let centre = oracle.spec().n as f64 * lf.kappa + lf.mu;
    let tau = lue_shear(oracle.spec(), f, s);
    let det = if tau == 0.0 {
        oracle.exp_moment(0.0, &|x| Complex64::new(0.0, s * f.evaluate(x.re)))?
    } else {
        oracle.exp_moment(tau, &|x| Complex64::i() * s * evaluate_complex(f, x))?
    };
    Ok(det * Complex64::new(0.0, -s * centre).exp())
}

/// On the half line e^{i s f} only oscillates and the Laguerre rule needs
/// thousands of nodes. For a low-degree polynomial with leading term c x^d,
/// tilting the ray by theta with sign(theta) = sign(s c) and
/// |theta| = min(pi/4, pi/(2d)) makes it decay like exp(-|s c| r^d). Higher
/// degrees are left on the real line: their continuation grows too fast
/// off it for the sums to stay accurate.
const SHEAR_MAX_DEGREE: usize = 4;

fn lue_shear(spec: &EnsembleSpec, f: &ChebyshevSeries, s: f64) -> f64 {
    if spec.kind != Kind::Lue {
        return 0.0;
    }
    let c = f.coeffs();
    let Some(d) = c.iter().rposition(|&v| v != 0.0) else { return 0.0 };
    if d == 0 || d > SHEAR_MAX_DEGREE {
        return 0.0;
    }
    let theta = (core::f64::consts::FRAC_PI_4).min(core::f64::consts::PI / (2.0 * d as f64));
    (s * c[d]).signum() * theta.tan()
}

fn evaluate_complex(f: &ChebyshevSeries, z: Complex64) -> Complex64 {
    let c = f.coeffs();
    let zero = Complex64::new(0.0, 0.0);
    let (mut b1, mut b2) = (zero, zero);
    for &cj in c[1..].iter().rev() {
        let b0 = z * b1 * 2.0 - b2 + cj;
        b2 = b1;
        b1 = b0;
    }
    z * b1 - b2 + c[0]
}

/// Independent route: ratio of monomial Hankel determinants
/// det[mu_{j+k}(g)] / det[mu_{j+k}(0)] in complex double-double, with the
/// symmetric diagonal scaling 1/sqrt(mu_{2j}(0)) applied to both. Much worse
/// conditioned than the orthonormal route; kept as a cross-check.
pub fn hankel_charfn_monomial(spec: &EnsembleSpec, f: &ChebyshevSeries, h: f64, nodes: usize) -> Result<Complex64> {
    spec.validate()?;
    let n = spec.n;
    if n > N_MAX {
        return Err(Error::TooLarge { n, max: N_MAX });
    }
    let lf = limit_functionals(spec, f);
    if !(lf.k_var > K_MIN) {
        return Err(Error::DegenerateVariance { k: lf.k_var });
    }
    let s = h / lf.k_var.sqrt();
    let (a, b) = recurrence(spec, nodes);
    let (x, w) = golub_welsch(&a, &b[..nodes - 1])?;
    let mut mom = vec![CDd::ZERO; 2 * n - 1];
    let mut mom0 = vec![Dd::ZERO; 2 * n - 1];
    for (&xi, &wi) in x.iter().zip(&w) {
        let e = CDd::from_c64(Complex64::new(0.0, s * f.evaluate(xi)).exp());
        let mut pw = Dd::from_f64(wi);
        for j in 0..2 * n - 1 {
            mom[j] = mom[j] + e.scale(pw);
            mom0[j] = mom0[j] + pw;
            pw = pw.mul_f64(xi);
        }
    }
    let scale: Vec<f64> = (0..n).map(|j| 1.0 / mom0[2 * j].to_f64().sqrt()).collect();
    let mut hg = vec![CDd::ZERO; n * n];
    let mut h0 = vec![CDd::ZERO; n * n];
    for j in 0..n {
        for k in 0..n {
            let sc = Dd::from_f64(scale[j]).mul_f64(scale[k]);
            hg[j * n + k] = mom[j + k].scale(sc);
            h0[j * n + k] = CDd::new(mom0[j + k] * sc, Dd::ZERO);
        }
    }
    let ratio = complex_det_dd(hg, n) / complex_det_dd(h0, n);
    let centre = n as f64 * lf.kappa + lf.mu;
    Ok(ratio.to_c64() * Complex64::new(0.0, -s * centre).exp())
}

/// Closed form for GUE and f = T_2: Tr M^2 is Gamma(n^2/2, 1/(2n)).
pub fn gue_t2_charfn_exact(n: usize, h: f64) -> Complex64 {
    let nf = n as f64;
    let c = Complex64::new(1.0, -core::f64::consts::SQRT_2 * h / nf);
    Complex64::new(0.0, -h * nf / core::f64::consts::SQRT_2).exp() * (c.ln() * (-nf * nf / 2.0)).exp()
}

/// Closed form for LUE and f = T_1: with t = 2n(1 + x), sum t_j is
/// Gamma(n(n + alpha), 1).
pub fn lue_t1_charfn_exact(n: usize, alpha: f64, h: f64) -> Complex64 {
    let nf = n as f64;
    // S = (sum x_j + n/2 - alpha/2) / (1/2) = sum t_j / n - n - alpha.
    let c = Complex64::new(1.0, -h / nf);
    Complex64::new(0.0, -h * (nf + alpha)).exp() * (c.ln() * (-nf * (nf + alpha))).exp()
}
