//! Residual suites over every identity of the toolkit, collected into one
//! report with per-identity thresholds.

use num_traits::Float;
use crate::branch::{c, ONE};
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::Result;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::local::{
    airy_asymptotic_residual, airy_parametrix, bessel_asymptotic_residual, bessel_parametrix, edge_type,
    log_log_slope, matching_error, prefactor_e, Edge, EdgeType, MATCHING_RADIUS,
};
use super::potential::{
    g_potential, g_potential_oracle, identity_difference, identity_exterior, identity_ray, identity_sum,
    phi_aux, phi_boundary, phi_oracle,
};
use super::szego::{
    global_parametrix, global_parametrix_boundary, jt_o, log_d1_oracle, log_d2_oracle, n_log_derivative,
    n_log_derivative_fd, szego, ComplexSeries, SzegoFunction,
};
use super::{boundary_value, Matrix2C, Side};

/// Every identity the verifier knows, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Identity {
    SzegoJump,
    SzegoAnalytic,
    SzegoOracle,
    GPhi,
    PhiOracle,
    Det,
    NJump,
    NLogDer,
    AiryJump,
    BesselJump,
    EJump,
    JuJump,
    Factorization,
    AiryDecay,
    BesselDecay,
    Matching,
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::SzegoJump,
        Identity::SzegoAnalytic,
        Identity::SzegoOracle,
        Identity::GPhi,
        Identity::PhiOracle,
        Identity::Det,
        Identity::NJump,
        Identity::NLogDer,
        Identity::AiryJump,
        Identity::BesselJump,
        Identity::EJump,
        Identity::JuJump,
        Identity::Factorization,
        Identity::AiryDecay,
        Identity::BesselDecay,
        Identity::Matching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::SzegoJump => "szego-jump",
            Identity::SzegoAnalytic => "szego-analytic",
            Identity::SzegoOracle => "szego-oracle",
            Identity::GPhi => "g-phi",
            Identity::PhiOracle => "phi-oracle",
            Identity::Det => "det",
            Identity::NJump => "n-jump",
            Identity::NLogDer => "n-logder",
            Identity::AiryJump => "airy-jump",
            Identity::BesselJump => "bessel-jump",
            Identity::EJump => "e-jump",
            Identity::JuJump => "ju-jump",
            Identity::Factorization => "factorization",
            Identity::AiryDecay => "airy-decay",
            Identity::BesselDecay => "bessel-decay",
            Identity::Matching => "matching",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.iter().copied().find(|i| i.name() == s)
    }

    /// Pointwise threshold; for the decay identities this is the allowed
    /// deviation of the fitted exponent.
    pub fn threshold(self) -> f64 {
        match self {
            Identity::SzegoJump => 1e-10,
            Identity::SzegoAnalytic => 1e-8,
            Identity::SzegoOracle => 1e-9,
            Identity::GPhi | Identity::PhiOracle => 1e-9,
            Identity::Det => 1e-10,
            Identity::NJump
            | Identity::AiryJump
            | Identity::BesselJump
            | Identity::EJump
            | Identity::JuJump
            | Identity::Factorization => 1e-8,
            Identity::NLogDer => 1e-7,
            Identity::AiryDecay | Identity::BesselDecay => 0.1,
            Identity::Matching => 0.15,
        }
    }

    fn expected_exponent(self) -> Option<f64> {
        match self {
            Identity::AiryDecay => Some(-1.5),
            Identity::BesselDecay => Some(-0.5),
            Identity::Matching => Some(-1.0),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerifyConfig {
    /// Probe points per pointwise identity.
    pub points: usize,
    pub n_list: Vec<usize>,
    pub f_tilde: ComplexSeries,
    pub d1_perturbation: f64,
    pub radius: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            points: 50,
            n_list: alloc::vec![20, 40, 80, 160, 320],
            f_tilde: ComplexSeries::monomial(2, c(0.0, 0.3)),
            d1_perturbation: 0.0,
            radius: MATCHING_RADIUS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResidualRow {
    pub identity: String,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentitySummary {
    pub identity: String,
    pub count: usize,
    pub max_residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecayFit {
    pub identity: String,
    pub label: String,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub exponent: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RhReport {
    pub ensemble: String,
    pub alpha: f64,
    pub beta: f64,
    pub rows: Vec<ResidualRow>,
    pub summaries: Vec<IdentitySummary>,
    pub fits: Vec<DecayFit>,
    pub all_pass: bool,
}

impl RhReport {
    /// The summary with the largest residual relative to its threshold.
    pub fn worst(&self) -> Option<&IdentitySummary> {
        self.summaries.iter().max_by(|a, b| {
            let ra = a.max_residual / a.threshold;
            let rb = b.max_residual / b.threshold;
            ra.partial_cmp(&rb).unwrap_or(core::cmp::Ordering::Equal)
        })
    }
}

/// Chebyshev points of the first kind on (-1, 1).
fn chebyshev_points(p: usize) -> Vec<f64> {
    (0..p).map(|k| ((k as f64 + 0.5) * PI / p as f64).cos()).collect()
}

/// Points on the ellipse with foci +/-1 through `a` on the real axis.
fn ellipse_points(p: usize, a: f64) -> Vec<Complex64> {
    let b = (a * a - 1.0).sqrt();
    (0..p)
        .map(|k| {
            let t = (k as f64 + 0.5) * 2.0 * PI / p as f64;
            c(a * t.cos(), b * t.sin())
        })
        .collect()
}

fn polar(r: f64, t: f64) -> Complex64 {
    c(r * t.cos(), r * t.sin())
}

/// Arguments spread over (-pi, pi), kept away from the rays at 0, pi and
/// +/- 2 pi / 3.
fn sector_args(p: usize) -> Vec<f64> {
    (0..p).map(|k| -PI + (k as f64 + 0.5) * 2.0 * PI / p as f64).filter(|t| away_from_rays(*t)).collect()
}

fn away_from_rays(t: f64) -> bool {
    let d = |r: f64| (t - r).abs();
    d(0.0) > 0.05 && d(PI) > 0.05 && d(-PI) > 0.05 && d(2.0 * PI / 3.0) > 0.05 && d(-2.0 * PI / 3.0) > 0.05
}

fn rel(a: Matrix2C, b: Matrix2C) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// J_U on (-1, 1) from the boundary values of phi.
fn ju_interval(sz: &SzegoFunction, kind: Kind, n: usize, x: f64) -> Matrix2C {
    let nn = n as f64;
    let pp = phi_boundary(kind, x, Side::Plus);
    let pm = phi_boundary(kind, x, Side::Minus);
    Matrix2C::new((pp * nn).exp(), sz.chi(c(x, 0.0)), c(0.0, 0.0), (pm * nn).exp())
}

/// J_T^- J_T^o J_T^+ with J_T^{+/-} = [[1, 0], [e^{n phi^{-/+}} / chi, 1]].
fn factorized(sz: &SzegoFunction, kind: Kind, n: usize, x: f64) -> Matrix2C {
    let nn = n as f64;
    let ch = sz.chi(c(x, 0.0));
    let pp = phi_boundary(kind, x, Side::Plus);
    let pm = phi_boundary(kind, x, Side::Minus);
    let lower = |e: Complex64| Matrix2C::new(ONE, c(0.0, 0.0), e / ch, ONE);
    lower((pm * nn).exp()) * jt_o(sz, x) * lower((pp * nn).exp())
}

/// n used for the jump identities that carry e^{n ...} factors.
const JUMP_N: usize = 10;

struct Collector {
    rows: Vec<ResidualRow>,
}

impl Collector {
    fn push(&mut self, id: Identity, z: Complex64, r: f64) {
        self.rows.push(ResidualRow { identity: id.name().to_string(), re: z.re, im: z.im, residual: r });
    }
}

/// Run the requested identities (all of them when `which` is empty).
pub fn verify(spec: &EnsembleSpec, cfg: &VerifyConfig, which: &[Identity]) -> Result<RhReport> {
    let ids: Vec<Identity> = if which.is_empty() { Identity::ALL.to_vec() } else { which.to_vec() };
    let sz = szego(spec, cfg.f_tilde.clone()).with_perturbation(cfg.d1_perturbation);
    let kind = spec.kind;
    let p = cfg.points.max(4);
    let mut col = Collector { rows: Vec::new() };
    let mut fits = Vec::new();
    let n0 = cfg.n_list.first().copied().unwrap_or(20);

    for &id in &ids {
        match id {
            Identity::SzegoJump => {
                for x in chebyshev_points(p) {
                    col.push(id, c(x, 0.0), sz.jump_residual(x));
                }
            }
            Identity::SzegoAnalytic => {
                for z in ellipse_points(p, 1.25) {
                    col.push(id, z, sz.cauchy_riemann_residual(z, 1e-5));
                }
            }
            Identity::SzegoOracle => {
                for z in ellipse_points(p.min(16), 1.3) {
                    let a = sz.log_d(z);
                    let b = log_d1_oracle(&sz, z)? + log_d2_oracle(&sz, z)?;
                    col.push(id, z, (a - b).norm());
                }
            }
            Identity::GPhi => {
                for z in ellipse_points(p, 1.3) {
                    col.push(id, z, identity_exterior(spec, z)?);
                }
                for x in chebyshev_points(p) {
                    col.push(id, c(x, 0.0), identity_sum(spec, x)?.max(identity_difference(spec, x)?));
                }
                for k in 0..p.min(10) {
                    let t = 1.05 + 0.4 * k as f64;
                    col.push(id, c(t, 0.0), identity_ray(spec, t)?);
                    col.push(id, c(-t, 0.0), identity_ray(spec, -t)?);
                }
            }
            Identity::PhiOracle => {
                let mut pts = ellipse_points(p.min(16), 1.3);
                pts.extend([c(3.0, 0.0), c(1.01, 0.0), c(0.5, 0.06), c(-2.0, 1e-3)]);
                for z in pts {
                    let a = phi_aux(spec, z)?;
                    let b = phi_oracle(spec, z, 1e-13)?;
                    col.push(id, z, (a - b).norm() / a.norm().max(1.0));
                }
                for z in ellipse_points(p.min(16), 1.3) {
                    let a = g_potential(spec, z)?;
                    let b = g_potential_oracle(spec, z, 1e-14)?;
                    col.push(id, z, (a - b).norm());
                }
            }
            Identity::Det => {
                for z in ellipse_points(p, 1.5) {
                    col.push(id, z, (global_parametrix(&sz, z)?.det() - ONE).norm());
                }
                for t in sector_args(p) {
                    let z = polar(3.0, t);
                    col.push(id, z, (airy_parametrix(z)?.det() - ONE).norm());
                    col.push(id, z, (bessel_parametrix(sz.beta.max(sz.alpha), z)?.det() - ONE).norm());
                }
                for edge in [Edge::Plus, Edge::Minus] {
                    for t in sector_args(p.min(12)) {
                        let z = c(edge.point(), 0.0) + polar(0.2, t);
                        col.push(id, z, (prefactor_e(spec, &sz, n0, z, edge)?.det() - ONE).norm());
                    }
                }
            }
            Identity::NJump => {
                for x in chebyshev_points(p) {
                    let x = 0.9 * x;
                    let f = |z| global_parametrix(&sz, z).unwrap_or(Matrix2C::IDENTITY);
                    let np = boundary_value(f, c(x, 0.0), ONE, Side::Plus);
                    let nm = boundary_value(f, c(x, 0.0), ONE, Side::Minus);
                    col.push(id, c(x, 0.0), rel(np, nm * jt_o(&sz, x)));
                }
                for x in chebyshev_points(p) {
                    let (np, nm) = global_parametrix_boundary(&sz, x);
                    col.push(id, c(x, 0.0), rel(np, nm * jt_o(&sz, x)));
                }
            }
            Identity::NLogDer => {
                for z in ellipse_points(p, 1.4) {
                    let a = n_log_derivative(&sz, z)?;
                    let b = n_log_derivative_fd(&sz, z, 1e-5)?;
                    col.push(id, z, rel(b, a));
                }
            }
            Identity::AiryJump => {
                let up = Matrix2C::real(1.0, 1.0, 0.0, 1.0);
                let low = Matrix2C::real(1.0, 0.0, 1.0, 1.0);
                let rot = Matrix2C::real(0.0, 1.0, -1.0, 0.0);
                let f = |z| airy_parametrix(z).unwrap_or(Matrix2C::IDENTITY);
                for k in 0..p {
                    let r = 0.2 + 9.0 * k as f64 / p as f64;
                    for (t, out, j) in [(0.0, true, up), (PI, false, rot), (2.0 * PI / 3.0, false, low), (-2.0 * PI / 3.0, false, low)] {
                        col.push(id, polar(r, t), ray_jump(&f, r, t, out, j));
                    }
                }
            }
            Identity::BesselJump => {
                let rot = Matrix2C::real(0.0, 1.0, -1.0, 0.0);
                for beta in bessel_orders(&sz, kind) {
                    let f = |z| bessel_parametrix(beta, z).unwrap_or(Matrix2C::IDENTITY);
                    let e = |s: f64| Matrix2C::new(ONE, c(0.0, 0.0), c(0.0, s * PI * beta).exp(), ONE);
                    for k in 0..p {
                        let r = 0.2 + 12.0 * k as f64 / p as f64;
                        col.push(id, polar(r, PI), ray_jump(&f, r, PI, false, rot));
                        col.push(id, polar(r, 2.0 * PI / 3.0), ray_jump(&f, r, 2.0 * PI / 3.0, false, e(1.0)));
                        col.push(id, polar(r, -2.0 * PI / 3.0), ray_jump(&f, r, -2.0 * PI / 3.0, false, e(-1.0)));
                    }
                }
            }
            Identity::EJump => {
                for edge in [Edge::Plus, Edge::Minus] {
                    let f = |z| prefactor_e(spec, &sz, n0, z, edge).unwrap_or(Matrix2C::IDENTITY);
                    for k in 0..p.min(20) {
                        let x = edge.point() * (0.99 - 0.3 * k as f64 / p.min(20) as f64);
                        let ep = boundary_value(f, c(x, 0.0), ONE, Side::Plus);
                        let em = boundary_value(f, c(x, 0.0), ONE, Side::Minus);
                        col.push(id, c(x, 0.0), rel(ep, em));
                    }
                }
            }
            Identity::JuJump => {
                let lr = crate::functionals::equilibrium(spec).robin;
                let nn = JUMP_N as f64;
                for x in chebyshev_points(p) {
                    let x = 0.95 * x;
                    let gp = super::potential::g_boundary(spec, x, Side::Plus)?;
                    let gm = super::potential::g_boundary(spec, x, Side::Minus)?;
                    let via_g = Matrix2C::new(
                        (-(gp - gm) * nn).exp(),
                        sz.chi(c(x, 0.0)) * ((gp + gm - c(spec.potential(x) - lr, 0.0)) * nn).exp(),
                        c(0.0, 0.0),
                        ((gp - gm) * nn).exp(),
                    );
                    col.push(id, c(x, 0.0), rel(via_g, ju_interval(&sz, kind, JUMP_N, x)));
                }
            }
            Identity::Factorization => {
                for x in chebyshev_points(p) {
                    for n in cfg.n_list.iter().copied().chain([JUMP_N]) {
                        let r = rel(factorized(&sz, kind, n, x), ju_interval(&sz, kind, n, x));
                        col.push(id, c(x, 0.0), r);
                    }
                }
            }
            Identity::AiryDecay => {
                for t in sector_args(p.min(12)) {
                    let a = airy_asymptotic_residual(polar(10.0, t))?;
                    let b = airy_asymptotic_residual(polar(40.0, t))?;
                    fits.push(fit(id, alloc::format!("arg {t:.3}"), alloc::vec![10.0, 40.0], alloc::vec![a, b]));
                }
            }
            Identity::BesselDecay => {
                for beta in bessel_orders(&sz, kind) {
                    for t in sector_args(p.min(12)) {
                        let a = bessel_asymptotic_residual(beta, polar(25.0, t))?;
                        let b = bessel_asymptotic_residual(beta, polar(100.0, t))?;
                        let label = alloc::format!("beta {beta} arg {t:.3}");
                        fits.push(fit(id, label, alloc::vec![25.0, 100.0], alloc::vec![a, b]));
                    }
                }
            }
            Identity::Matching => {
                for edge in [Edge::Plus, Edge::Minus] {
                    let xs: Vec<f64> = cfg.n_list.iter().map(|&n| n as f64).collect();
                    let mut ys = Vec::with_capacity(xs.len());
                    for &n in &cfg.n_list {
                        ys.push(matching_error(spec, &sz, n, edge, cfg.radius, 32)?);
                    }
                    let ty = match edge_type(kind, edge) {
                        EdgeType::Soft => "soft",
                        EdgeType::Hard => "hard",
                    };
                    fits.push(fit(id, alloc::format!("edge {} ({ty})", edge.label()), xs, ys));
                }
            }
        }
    }

    let mut summaries = Vec::new();
    for &id in &ids {
        if let Some(expected) = id.expected_exponent() {
            let mine: Vec<&DecayFit> = fits.iter().filter(|f| f.identity == id.name()).collect();
            let worst = mine.iter().map(|f| (f.exponent - expected).abs()).fold(0.0, f64::max);
            summaries.push(IdentitySummary {
                identity: id.name().to_string(),
                count: mine.len(),
                max_residual: worst,
                threshold: id.threshold(),
                pass: mine.iter().all(|f| f.pass),
            });
        } else {
            let mine: Vec<&ResidualRow> = col.rows.iter().filter(|r| r.identity == id.name()).collect();
            let worst = mine.iter().map(|r| r.residual).fold(0.0, |a: f64, b| if b.is_nan() { f64::NAN } else { a.max(b) });
            summaries.push(IdentitySummary {
                identity: id.name().to_string(),
                count: mine.len(),
                max_residual: worst,
                threshold: id.threshold(),
                pass: worst <= id.threshold(),
            });
        }
    }
    let all_pass = summaries.iter().all(|s| s.pass);
    Ok(RhReport {
        ensemble: kind.name().to_string(),
        alpha: sz.alpha,
        beta: sz.beta,
        rows: col.rows,
        summaries,
        fits,
        all_pass,
    })
}

fn fit(id: Identity, label: String, xs: Vec<f64>, ys: Vec<f64>) -> DecayFit {
    let expected = id.expected_exponent().unwrap_or(0.0);
    let exponent = log_log_slope(&xs, &ys);
    let tolerance = id.threshold();
    DecayFit {
        identity: id.name().to_string(),
        label,
        pass: (exponent - expected).abs() <= tolerance,
        xs,
        ys,
        exponent,
        expected,
        tolerance,
    }
}

/// Bessel orders worth checking for this ensemble: the ones at its hard
/// edges, or a generic one when it has none.
fn bessel_orders(sz: &SzegoFunction, kind: Kind) -> Vec<f64> {
    match kind {
        Kind::Gue => alloc::vec![0.5],
        Kind::Lue => alloc::vec![sz.alpha],
        Kind::Jue => alloc::vec![sz.alpha, sz.beta],
    }
}

fn ray_jump(f: &dyn Fn(Complex64) -> Matrix2C, r: f64, t: f64, outward: bool, j: Matrix2C) -> f64 {
    let z0 = polar(r, t);
    let d = if outward { polar(1.0, t) } else { -polar(1.0, t) };
    let p = boundary_value(f, z0, d, Side::Plus);
    let m = boundary_value(f, z0, d, Side::Minus);
    rel(p, m * j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_passes_for_each_ensemble() {
        let cfg = VerifyConfig { points: 20, ..VerifyConfig::default() };
        for s in [EnsembleSpec::gue(10), EnsembleSpec::lue(10, 1.5), EnsembleSpec::jue(10, 0.5, -0.3)] {
            let rep = verify(&s, &cfg, &[]).unwrap();
            for sm in &rep.summaries {
                assert!(sm.pass, "{:?} {}: {} > {}", s.kind, sm.identity, sm.max_residual, sm.threshold);
            }
            assert!(rep.all_pass);
        }
    }

    #[test]
    fn zero_f_tilde_also_passes_szego_jump() {
        let cfg = VerifyConfig { f_tilde: ComplexSeries::zero(), ..VerifyConfig::default() };
        for s in [EnsembleSpec::gue(10), EnsembleSpec::lue(10, 1.5), EnsembleSpec::jue(10, 0.5, -0.3)] {
            let rep = verify(&s, &cfg, &[Identity::SzegoJump]).unwrap();
            assert_eq!(rep.summaries[0].count, 50);
            assert!(rep.all_pass);
        }
    }

    #[test]
    fn perturbed_d1_is_caught() {
        let cfg = VerifyConfig { d1_perturbation: 0.1, ..VerifyConfig::default() };
        let rep = verify(&EnsembleSpec::lue(10, 1.5), &cfg, &[Identity::SzegoJump]).unwrap();
        assert!(!rep.all_pass);
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(Identity::from_name(id.name()), Some(id));
        }
        assert_eq!(Identity::from_name("nope"), None);
    }
}
