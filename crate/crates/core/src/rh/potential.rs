//! The logarithmic potential g, the auxiliary function phi and the
//! identities linking them.

use num_traits::Float;
use crate::branch::{c, log, sqrt_accurate, sqrt_z2m1, ONE};
use crate::ensemble::{EnsembleSpec, Kind};
use crate::error::{Error, Result};
use crate::functionals::equilibrium;
use crate::quad::tanh_sinh;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::Side;

/// g is only evaluated by quadrature this far from [-1, 1].
pub const MIN_CUT_DISTANCE: f64 = 0.05;
const G_START: usize = 64;
const G_MAX: usize = 1 << 17;
const G_RTOL: f64 = 1e-13;

/// V continued to the complex plane.
pub fn potential_c(kind: Kind, z: Complex64) -> Complex64 {
    match kind {
        Kind::Gue => z * z * 2.0,
        Kind::Lue => (z + ONE) * 2.0,
        Kind::Jue => c(0.0, 0.0),
    }
}

/// Closed form of phi with every branch taken from the sign of `z.im`,
/// including signed zeros. No cut checks.
pub(crate) fn phi_raw(kind: Kind, z: Complex64) -> Complex64 {
    let s = sqrt_z2m1(z);
    let lw = log(z + s);
    match kind {
        Kind::Gue => (z * s - lw) * 2.0,
        Kind::Lue => (s - lw) * 2.0,
        Kind::Jue => lw * -2.0,
    }
}

fn on_cut(z: Complex64, right: f64) -> bool {
    z.im == 0.0 && z.re < right
}

/// phi(z) = 4 int_1^z sqrt(s^2-1) ds (GUE), 2 int_1^z sqrt((s-1)/(s+1)) ds
/// (LUE), -2 int_1^z ds / sqrt(s^2-1) (JUE), by antidifferentiation.
pub fn phi_aux(spec: &EnsembleSpec, z: Complex64) -> Result<Complex64> {
    if on_cut(z, 1.0) {
        return Err(Error::BranchViolation);
    }
    if z == ONE {
        return Ok(c(0.0, 0.0));
    }
    Ok(phi_raw(spec.kind, z))
}

/// phi^{+} or phi^{-} at a real point x < 1.
pub fn phi_boundary(kind: Kind, x: f64, side: Side) -> Complex64 {
    let im = if side == Side::Plus { 0.0 } else { -0.0 };
    phi_raw(kind, c(x, im))
}

fn sign_of_im(z: Complex64) -> f64 {
    if z.im > 0.0 || (z.im == 0.0 && z.im.is_sign_positive()) {
        1.0
    } else {
        -1.0
    }
}

/// The edge -1 counterpart of phi: vanishes at -1, analytic off
/// (-1, +inf). GUE: phi +/- 2 pi i; LUE and JUE: -phi -/+ 2 pi i, the
/// upper sign in the upper half-plane.
pub(crate) fn phi_tilde_raw(kind: Kind, z: Complex64) -> Complex64 {
    let p = phi_raw(kind, z);
    let t = c(0.0, 2.0 * PI * sign_of_im(z));
    match kind {
        Kind::Gue => p + t,
        Kind::Lue | Kind::Jue => -p - t,
    }
}

pub fn phi_tilde(spec: &EnsembleSpec, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > -1.0 {
        return Err(Error::BranchViolation);
    }
    if z == -ONE {
        return Ok(c(0.0, 0.0));
    }
    Ok(phi_tilde_raw(spec.kind, z))
}

/// phi' from z - 1 and z + 1, passed separately so each stays exact near
/// its endpoint.
fn phi_prime(kind: Kind, zm1: Complex64, zp1: Complex64) -> Complex64 {
    match kind {
        Kind::Gue => sqrt_accurate(zm1) * sqrt_accurate(zp1) * 4.0,
        Kind::Lue => sqrt_accurate(zm1) / sqrt_accurate(zp1) * 2.0,
        Kind::Jue => c(-2.0, 0.0) / (sqrt_accurate(zm1) * sqrt_accurate(zp1)),
    }
}

/// Oracle for phi: tanh-sinh quadrature of the defining integral. Off the
/// real axis the path runs 1 -> 1 +/- i -> z so that it keeps away from the
/// cut even when z hugs it.
pub fn phi_oracle(spec: &EnsembleSpec, z: Complex64, tol: f64) -> Result<Complex64> {
    if on_cut(z, 1.0) {
        return Err(Error::BranchViolation);
    }
    let kind = spec.kind;
    let mid = if z.im == 0.0 { z } else { c(1.0, z.im.signum()) };
    let d = mid - ONE;
    let first = tanh_sinh(|t, dt, _| phi_prime(kind, d * dt, c(2.0, 0.0) + d * t) * d, 0.0, 1.0, tol)?;
    if mid == z {
        return Ok(first);
    }
    let e = z - mid;
    let second = tanh_sinh(
        |t, _, _| {
            let s = mid + e * t;
            phi_prime(kind, c(s.re - 1.0, s.im), c(s.re + 1.0, s.im)) * e
        },
        0.0,
        1.0,
        tol,
    )?;
    Ok(first + second)
}

/// Oracle for the -1 continuation: quadrature from -1 to z.
pub fn phi_tilde_oracle(spec: &EnsembleSpec, z: Complex64, tol: f64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > -1.0 {
        return Err(Error::BranchViolation);
    }
    let d = z + ONE;
    let sgn = if spec.kind == Kind::Gue { 1.0 } else { -1.0 };
    let v = tanh_sinh(
        |t, dt, _| phi_prime(spec.kind, d * t - c(2.0, 0.0), d * dt) * d,
        0.0,
        1.0,
        tol,
    )?;
    Ok(v * sgn)
}

/// Weight of the equilibrium measure in the variable s = cos(theta).
fn theta_weight(kind: Kind, t: f64) -> f64 {
    match kind {
        Kind::Gue => 2.0 / PI * t.sin() * t.sin(),
        Kind::Lue => (1.0 - t.cos()) / PI,
        Kind::Jue => 1.0 / PI,
    }
}

/// Distance from z to [-1, 1].
pub fn cut_distance(z: Complex64) -> f64 {
    let x = z.re.clamp(-1.0, 1.0);
    (z - c(x, 0.0)).norm()
}

/// g(z) = int log(z - s) psi(s) ds. In theta = arccos s the integrand is
/// smooth and even-periodic, so the trapezoid rule converges geometrically;
/// nodes are doubled until the relative change drops below 1e-13.
pub fn g_potential(spec: &EnsembleSpec, z: Complex64) -> Result<Complex64> {
    if on_cut(z, 1.0) {
        return Err(Error::BranchViolation);
    }
    let dist = cut_distance(z);
    if dist < MIN_CUT_DISTANCE {
        return Err(Error::TooCloseToCut { distance: dist, minimum: MIN_CUT_DISTANCE });
    }
    let kind = spec.kind;
    let f = |t: f64| log(z - c(t.cos(), 0.0)) * theta_weight(kind, t);
    let mut m = G_START;
    let h = PI / m as f64;
    let mut sum = (f(0.0) + f(PI)) * 0.5;
    for k in 1..m {
        sum += f(k as f64 * h);
    }
    let mut prev = sum * h;
    while m < G_MAX {
        let h = PI / (2 * m) as f64;
        for k in 0..m {
            sum += f((2 * k + 1) as f64 * h);
        }
        m *= 2;
        let cur = sum * h;
        if (cur - prev).norm() <= G_RTOL * cur.norm().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet { estimate: prev.norm(), error: f64::NAN })
}

/// Oracle for g: tanh-sinh in s with the density written in endpoint
/// distances.
pub fn g_potential_oracle(spec: &EnsembleSpec, z: Complex64, tol: f64) -> Result<Complex64> {
    let eq = equilibrium(spec);
    tanh_sinh(|s, dm, dp| log(z - c(s, 0.0)) * eq.density_at(dm, dp), -1.0, 1.0, tol)
}

/// Mass of the equilibrium measure on (x, 1).
pub fn mass_above(kind: Kind, x: f64) -> f64 {
    if x >= 1.0 {
        return 0.0;
    }
    if x <= -1.0 {
        return 1.0;
    }
    let t = x.acos();
    match kind {
        Kind::Gue => (t - t.sin() * t.cos()) / PI,
        Kind::Lue => (t - t.sin()) / PI,
        Kind::Jue => t / PI,
    }
}

/// |x - cos(theta)| without cancellation; for |x| < 1, `t0` = arccos x and
/// `gap` = |theta - t0| taken from the quadrature's endpoint distances.
fn abs_gap(x: f64, t0: f64, t: f64, gap: f64) -> f64 {
    if x >= 1.0 {
        (x - 1.0) + 2.0 * (0.5 * t).sin().powi(2)
    } else if x <= -1.0 {
        (-1.0 - x) + 2.0 * (0.5 * t).cos().powi(2)
    } else {
        (2.0 * (0.5 * (t + t0)).sin() * (0.5 * gap).sin()).abs()
    }
}

/// Boundary value g^{+} or g^{-} at a real point. Re g is the log-singular
/// integral split at arccos x; Im g = +/- pi times the mass to the right.
pub fn g_boundary(spec: &EnsembleSpec, x: f64, side: Side) -> Result<Complex64> {
    let kind = spec.kind;
    let tol = 1e-13;
    let re = if x.abs() < 1.0 {
        let t0 = x.acos();
        let a: f64 = tanh_sinh(|t, _, db| abs_gap(x, t0, t, db).ln() * theta_weight(kind, t), 0.0, t0, tol)?;
        let b: f64 = tanh_sinh(|t, da, _| abs_gap(x, t0, t, da).ln() * theta_weight(kind, t), t0, PI, tol)?;
        a + b
    } else {
        tanh_sinh(|t, _, _| abs_gap(x, 0.0, t, 0.0).ln() * theta_weight(kind, t), 0.0, PI, tol)?
    };
    let s = if side == Side::Plus { 1.0 } else { -1.0 };
    Ok(c(re, s * PI * mass_above(kind, x)))
}

/// Largest residual of each identity tying g to phi.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GPhiResiduals {
    /// |2g - V + l_R + phi| off the real axis.
    pub exterior: f64,
    /// |g+ + g- - V + l_R| on (-1, 1).
    pub sum: f64,
    /// max(|g+ - g- + phi+|, |g+ - g- - phi-|) on (-1, 1).
    pub difference: f64,
    /// |g+ - g- - 2 pi i| on (-inf, -1) and |g+ - g-| on (1, inf).
    pub ray: f64,
}

pub fn identity_exterior(spec: &EnsembleSpec, z: Complex64) -> Result<f64> {
    let lr = equilibrium(spec).robin;
    let g = g_potential(spec, z)?;
    let phi = phi_aux(spec, z)?;
    Ok((g * 2.0 - potential_c(spec.kind, z) + c(lr, 0.0) + phi).norm())
}

pub fn identity_sum(spec: &EnsembleSpec, x: f64) -> Result<f64> {
    let lr = equilibrium(spec).robin;
    let gp = g_boundary(spec, x, Side::Plus)?;
    let gm = g_boundary(spec, x, Side::Minus)?;
    Ok((gp + gm - c(spec.potential(x) - lr, 0.0)).norm())
}

pub fn identity_difference(spec: &EnsembleSpec, x: f64) -> Result<f64> {
    let gp = g_boundary(spec, x, Side::Plus)?;
    let gm = g_boundary(spec, x, Side::Minus)?;
    let pp = phi_boundary(spec.kind, x, Side::Plus);
    let pm = phi_boundary(spec.kind, x, Side::Minus);
    Ok((gp - gm + pp).norm().max((gp - gm - pm).norm()))
}

pub fn identity_ray(spec: &EnsembleSpec, x: f64) -> Result<f64> {
    let gp = g_boundary(spec, x, Side::Plus)?;
    let gm = g_boundary(spec, x, Side::Minus)?;
    let jump = if x < -1.0 { c(0.0, 2.0 * PI) } else { c(0.0, 0.0) };
    Ok((gp - gm - jump).norm())
}

/// Maximum residuals over the given probes: complex points off the axis,
/// points of (-1, 1), and points of the real line outside [-1, 1].
pub fn g_phi_identities(
    spec: &EnsembleSpec,
    exterior: &[Complex64],
    interval: &[f64],
    rays: &[f64],
) -> Result<GPhiResiduals> {
    let mut r = GPhiResiduals { exterior: 0.0, sum: 0.0, difference: 0.0, ray: 0.0 };
    for &z in exterior {
        r.exterior = r.exterior.max(identity_exterior(spec, z)?);
    }
    for &x in interval {
        r.sum = r.sum.max(identity_sum(spec, x)?);
        r.difference = r.difference.max(identity_difference(spec, x)?);
    }
    for &x in rays {
        r.ray = r.ray.max(identity_ray(spec, x)?);
    }
    Ok(r)
}
