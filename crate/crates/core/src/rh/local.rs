//! Local parametrices at the edges: Airy (soft) and Bessel (hard) model
//! problems, the conformal maps into their variables, the analytic
//! prefactors E_n and the matching with N.

use num_traits::Float;
use crate::branch::{arg, c, log, pow, sqrt_accurate, ONE};
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::{Error, Result};
use crate::special::{airy_ai, bessel_ik};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::potential::{phi_raw, phi_tilde_raw};
use super::szego::{global_parametrix, SzegoFunction};
use super::Matrix2C;

/// Edge neighborhoods are discs of this radius.
pub const NEIGHBORHOOD: f64 = 0.5;
/// Default radius of the circle on which P N^{-1} is compared with I.
pub const MATCHING_RADIUS: f64 = 0.1;

const RAY: f64 = 2.0 * PI / 3.0;
const RAY_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Edge {
    Plus,
    Minus,
}

impl Edge {
    pub fn point(self) -> f64 {
        match self {
            Edge::Plus => 1.0,
            Edge::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Edge::Plus => "+1",
            Edge::Minus => "-1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EdgeType {
    Soft,
    Hard,
}

pub fn edge_type(kind: Kind, edge: Edge) -> EdgeType {
    match (kind, edge) {
        (Kind::Gue, _) | (Kind::Lue, Edge::Plus) => EdgeType::Soft,
        _ => EdgeType::Hard,
    }
}

/// Order of the Bessel model: beta at +1, alpha at -1.
pub fn bessel_order(sz: &SzegoFunction, edge: Edge) -> f64 {
    match edge {
        Edge::Plus => sz.beta,
        Edge::Minus => sz.alpha,
    }
}

fn near_ray(t: f64) -> bool {
    (t.abs() - RAY).abs() < RAY_TOL
}

/// A(zeta) on the four sectors cut by the real axis and the rays
/// arg = +/- 2 pi / 3. Each sector uses the pair of solutions that is
/// recessive there, so no sector is formed by cancellation.
pub fn airy_parametrix(zeta: Complex64) -> Result<Matrix2C> {
    let t = arg(zeta);
    if zeta.im == 0.0 || near_ray(t) {
        return Err(Error::OnContour);
    }
    let w = c(-0.5, 0.75f64.sqrt());
    let w2 = w * w;
    let col_a = || {
        let (ai, aip) = airy_ai(zeta);
        (ai, c(0.0, -1.0) * aip)
    };
    let col_b = || {
        let (ai, aip) = airy_ai(w2 * zeta);
        (-w2 * ai, c(0.0, 1.0) * w * aip)
    };
    let col_c = || {
        let (ai, aip) = airy_ai(w * zeta);
        (w * ai, c(0.0, -1.0) * w2 * aip)
    };
    let (p, q) = if t > 0.0 && t < RAY {
        (col_a(), col_b())
    } else if t > RAY {
        let (c0, c1) = col_c();
        ((-c0, -c1), col_b())
    } else if t < -RAY {
        (col_b(), col_c())
    } else {
        (col_a(), col_c())
    };
    let s = (2.0 * PI).sqrt();
    Ok(Matrix2C::new(p.0, q.0, p.1, q.1) * s)
}

/// Psi_beta(zeta) on the three sectors cut by (-inf, 0) and the rays
/// arg = +/- 2 pi / 3.
pub fn bessel_parametrix(beta: f64, zeta: Complex64) -> Result<Matrix2C> {
    let t = arg(zeta);
    if zeta == c(0.0, 0.0) || (zeta.im == 0.0 && zeta.re < 0.0) || near_ray(t) {
        return Err(Error::OnContour);
    }
    let r = sqrt_accurate(zeta);
    let b = bessel_ik(beta, r * 2.0)?;
    let i = c(0.0, 1.0);
    let col1 = (b.i, i * r * b.ip * (2.0 * PI));
    let col2 = (i * b.k / PI, -r * b.kp * 2.0);
    let (p, q) = if t > RAY {
        let e = (i * (PI * beta)).exp();
        ((col1.0 - e * col2.0, col1.1 - e * col2.1), col2)
    } else if t < -RAY {
        let e = (i * (-PI * beta)).exp();
        ((col1.0 + e * col2.0, col1.1 + e * col2.1), col2)
    } else {
        (col1, col2)
    };
    Ok(Matrix2C::new(p.0, q.0, p.1, q.1))
}

/// ||M^{-1} zeta^{sigma3/4} A(zeta) e^{(2/3) zeta^{3/2} sigma3} - I||, which
/// decays like |zeta|^{-3/2}.
pub fn airy_asymptotic_residual(zeta: Complex64) -> Result<f64> {
    let a = airy_parametrix(zeta)?;
    let lz = log(zeta);
    let left = Matrix2C::m_minus() * Matrix2C::sigma3_exp(lz * 0.25);
    let right = Matrix2C::sigma3_exp((lz * 1.5).exp() * (2.0 / 3.0));
    Ok((left * a * right - Matrix2C::IDENTITY).norm())
}

/// ||M^{-1} zeta^{sigma3/4} (2 pi)^{sigma3/2} Psi e^{-2 zeta^{1/2} sigma3} - I||,
/// which decays like |zeta|^{-1/2}.
pub fn bessel_asymptotic_residual(beta: f64, zeta: Complex64) -> Result<f64> {
    let p = bessel_parametrix(beta, zeta)?;
    let lz = log(zeta);
    let left = Matrix2C::m_minus() * Matrix2C::sigma3_exp(lz * 0.25 + (2.0 * PI).ln() * 0.5);
    let right = Matrix2C::sigma3_exp(-sqrt_accurate(zeta) * 2.0);
    Ok((left * p * right - Matrix2C::IDENTITY).norm())
}

/// Values of the conformal map at an edge. `g` is the analytic factor in
/// xi = n^{2/3} (z -/+ 1) G (soft) or eta = (n^2/16)(z -/+ 1) G (hard).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeMaps {
    pub edge: Edge,
    pub edge_type: EdgeType,
    pub xi: Option<Complex64>,
    pub eta: Option<Complex64>,
    pub g: Complex64,
}

impl EdgeMaps {
    pub fn zeta(&self) -> Complex64 {
        self.xi.or(self.eta).unwrap_or(c(0.0, 0.0))
    }
}

fn nearest_edge(z: Complex64) -> Result<Edge> {
    if (z - ONE).norm() <= NEIGHBORHOOD {
        Ok(Edge::Plus)
    } else if (z + ONE).norm() <= NEIGHBORHOOD {
        Ok(Edge::Minus)
    } else {
        Err(Error::WrongNeighborhood)
    }
}

/// phi or its -1 continuation, whichever vanishes at the edge.
fn edge_phi(kind: Kind, edge: Edge, z: Complex64) -> Complex64 {
    match edge {
        Edge::Plus => phi_raw(kind, z),
        Edge::Minus => phi_tilde_raw(kind, z),
    }
}

/// Soft-edge map from a value of phi (or phi~) at z. Writing
/// phi = u^{3/2} H with u = z - 1 (or -(z + 1)) and H analytic and positive
/// at the edge, xi = (3n/4)^{2/3} u H^{2/3} continues (3n phi / 4)^{2/3}
/// across the cut.
pub fn xi_from_phi(n: usize, edge: Edge, z: Complex64, phi: Complex64) -> (Complex64, Complex64) {
    let u = match edge {
        Edge::Plus => z - ONE,
        Edge::Minus => -(z + ONE),
    };
    let k = (0.75f64).powf(2.0 / 3.0);
    let h23 = if u == c(0.0, 0.0) {
        // at the edge itself the caller passes H in place of phi
        pow(phi, 2.0 / 3.0)
    } else {
        pow(phi / (log(u) * 1.5).exp(), 2.0 / 3.0)
    };
    let xi = u * h23 * (k * (n as f64).powf(2.0 / 3.0));
    let sign = if edge == Edge::Plus { 1.0 } else { -1.0 };
    (xi, h23 * (k * sign))
}

/// phi / u^{3/2} at a soft edge.
fn soft_edge_constant(kind: Kind) -> f64 {
    match kind {
        Kind::Gue => 8.0 * 2f64.sqrt() / 3.0,
        _ => 2.0 * 2f64.sqrt() / 3.0,
    }
}

/// phi^2 / (z -/+ 1) at a hard edge.
fn hard_edge_constant(kind: Kind, edge: Edge) -> f64 {
    match (kind, edge) {
        (Kind::Lue, Edge::Minus) => -32.0,
        (_, Edge::Plus) => 8.0,
        (_, Edge::Minus) => -8.0,
    }
}

/// xi_n (soft edges) or eta_n (hard edges) at z near an edge.
pub fn conformal_maps(spec: &EnsembleSpec, n: usize, z: Complex64) -> Result<EdgeMaps> {
    let edge = nearest_edge(z)?;
    conformal_maps_at(spec.kind, n, z, edge)
}

pub(crate) fn conformal_maps_at(kind: Kind, n: usize, z: Complex64, edge: Edge) -> Result<EdgeMaps> {
    if (z - c(edge.point(), 0.0)).norm() > NEIGHBORHOOD {
        return Err(Error::WrongNeighborhood);
    }
    let ty = edge_type(kind, edge);
    let at_edge = z == c(edge.point(), 0.0);
    match ty {
        EdgeType::Soft => {
            let phi = if at_edge { c(soft_edge_constant(kind), 0.0) } else { edge_phi(kind, edge, z) };
            let (xi, g) = xi_from_phi(n, edge, z, phi);
            Ok(EdgeMaps { edge, edge_type: ty, xi: Some(xi), eta: None, g })
        }
        EdgeType::Hard => {
            let nn = n as f64;
            let (eta, g) = if at_edge {
                (c(0.0, 0.0), c(hard_edge_constant(kind, edge), 0.0))
            } else {
                let p = edge_phi(kind, edge, z);
                (p * p * (nn * nn / 16.0), p * p / (z - c(edge.point(), 0.0)))
            };
            Ok(EdgeMaps { edge, edge_type: ty, xi: None, eta: Some(eta), g })
        }
    }
}

/// log chi at a soft edge, log chi~ at a hard one. chi~ swaps the
/// logarithm whose cut would cross the edge neighborhood outside (-1, 1).
fn edge_log_chi(sz: &SzegoFunction, edge: Edge, ty: EdgeType, z: Complex64) -> Complex64 {
    if ty == EdgeType::Soft {
        return sz.log_chi(z);
    }
    let mut v = sz.f_tilde.eval(z);
    let (lp, lm) = match edge {
        Edge::Plus => (log(z + ONE), log(z - ONE)),
        Edge::Minus => (log(-z - ONE), log(ONE - z)),
    };
    if sz.alpha != 0.0 {
        v += lp * sz.alpha;
    }
    if sz.beta != 0.0 {
        v += lm * sz.beta;
    }
    v
}

fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_off_interval(z: Complex64) -> Result<()> {
    if z.im == 0.0 && z.re.abs() < 1.0 {
        return Err(Error::BranchViolation);
    }
    Ok(())
}

/// The analytic prefactor E_n at `edge`:
/// soft +1: N chi^{s/2} M^{-1} xi^{s/4};
/// soft -1: (-1)^n N chi^{s/2} M xi^{s/4};
/// hard +1: N chi~^{s/2} M^{-1} (2 pi)^{s/2} eta^{s/4};
/// hard -1: (-1)^n N chi~^{s/2} M (2 pi)^{s/2} eta^{s/4}
/// with s = sigma3 and M = (1/sqrt 2)[[1, i], [i, 1]].
pub fn prefactor_e(spec: &EnsembleSpec, sz: &SzegoFunction, n: usize, z: Complex64, edge: Edge) -> Result<Matrix2C> {
    check_off_interval(z)?;
    let maps = conformal_maps_at(spec.kind, n, z, edge)?;
    let nz = global_parametrix(sz, z)?;
    let ty = maps.edge_type;
    let lchi = edge_log_chi(sz, edge, ty, z);
    let rot = if edge == Edge::Plus { Matrix2C::m_minus() } else { Matrix2C::m_plus() };
    let mut l = log(maps.zeta()) * 0.25;
    if ty == EdgeType::Hard {
        l += (2.0 * PI).ln() * 0.5;
    }
    let e = nz * Matrix2C::sigma3_exp(lchi * 0.5) * rot * Matrix2C::sigma3_exp(l);
    Ok(if edge == Edge::Minus { e * parity(n) } else { e })
}

/// The hard-edge +1 prefactor exactly as displayed in the source derivation,
/// with (pi n phi / 2)^{sigma3/2} in place of (2 pi)^{sigma3/2} eta^{sigma3/4}.
/// Since eta^{1/2} = -n phi / 4 the two differ by the constant phase
/// (-1)^{sigma3/2}, which spoils the matching; kept to document that.
pub fn prefactor_e_displayed_hard(sz: &SzegoFunction, n: usize, z: Complex64) -> Result<Matrix2C> {
    check_off_interval(z)?;
    let nz = global_parametrix(sz, z)?;
    let lchi = edge_log_chi(sz, Edge::Plus, EdgeType::Hard, z);
    let phi = phi_raw(sz.kind, z);
    let l = log(phi * (PI * n as f64 / 2.0)) * 0.5;
    Ok(nz * Matrix2C::sigma3_exp(lchi * 0.5) * Matrix2C::m_minus() * Matrix2C::sigma3_exp(l))
}

fn model(sz: &SzegoFunction, maps: &EdgeMaps) -> Result<Matrix2C> {
    let m = match maps.edge_type {
        EdgeType::Soft => airy_parametrix(maps.zeta())?,
        EdgeType::Hard => bessel_parametrix(bessel_order(sz, maps.edge), maps.zeta())?,
    };
    Ok(if maps.edge == Edge::Minus { m.conj_sigma3() } else { m })
}

fn assemble(sz: &SzegoFunction, n: usize, z: Complex64, e: Matrix2C, maps: &EdgeMaps) -> Result<Matrix2C> {
    let lchi = edge_log_chi(sz, maps.edge, maps.edge_type, z);
    let phi = phi_raw(sz.kind, z);
    let right = Matrix2C::sigma3_exp(lchi * -0.5 + phi * (0.5 * n as f64));
    Ok(e * model(sz, maps)? * right)
}

/// P = E_n Model(zeta) chi^{-sigma3/2} e^{n phi sigma3 / 2}, where Model is
/// A at +1, sigma3 A sigma3 at -1 (soft), and Psi_beta, sigma3 Psi_alpha
/// sigma3 (hard).
pub fn local_parametrix(spec: &EnsembleSpec, sz: &SzegoFunction, n: usize, z: Complex64, edge: Edge) -> Result<Matrix2C> {
    let e = prefactor_e(spec, sz, n, z, edge)?;
    let maps = conformal_maps_at(spec.kind, n, z, edge)?;
    assemble(sz, n, z, e, &maps)
}

/// Points (k + 1/2) 2 pi / count around the edge at the given radius.
pub fn matching_circle(edge: Edge, radius: f64, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|k| {
            let t = (k as f64 + 0.5) * 2.0 * PI / count as f64;
            c(edge.point() + radius * t.cos(), radius * t.sin())
        })
        .collect()
}

/// max ||P N^{-1} - I||_F over the matching circle.
pub fn matching_error(
    spec: &EnsembleSpec,
    sz: &SzegoFunction,
    n: usize,
    edge: Edge,
    radius: f64,
    count: usize,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in matching_circle(edge, radius, count) {
        let p = local_parametrix(spec, sz, n, z, edge)?;
        let nz = global_parametrix(sz, z)?;
        worst = worst.max((p * nz.inv() - Matrix2C::IDENTITY).norm());
    }
    Ok(worst)
}

/// Same measurement with the displayed hard-edge +1 prefactor.
pub fn matching_error_displayed_hard(spec: &EnsembleSpec, sz: &SzegoFunction, n: usize, radius: f64, count: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in matching_circle(Edge::Plus, radius, count) {
        let e = prefactor_e_displayed_hard(sz, n, z)?;
        let maps = conformal_maps_at(spec.kind, n, z, Edge::Plus)?;
        let p = assemble(sz, n, z, e, &maps)?;
        let nz = global_parametrix(sz, z)?;
        worst = worst.max((p * nz.inv() - Matrix2C::IDENTITY).norm());
    }
    Ok(worst)
}

/// Least-squares slope of log y against log x.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let m = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / m;
    let my = ly.iter().sum::<f64>() / m;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}
