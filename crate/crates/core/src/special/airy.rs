//! Ai and Ai' for complex argument.
//!
//! Three regimes: Maclaurin series summed in complex double-double for
//! |z| <= radius; the exponential asymptotic expansion for |z| > radius and
//! |arg z| <= 2 pi / 3; the connection formula
//! Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z), w = exp(2 pi i / 3), for the rest.

use num_traits::Float;
use crate::branch;
use crate::dd::{CDd, Dd};
use num_complex::Complex64;

const AI0: Dd = Dd::new(0.3550280538878172, 2.05233632436212e-17);
const MINUS_DAI0: Dd = Dd::new(0.2588194037928068, -2.522243111610832e-17);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryConfig {
    /// Switch radius between the series and the asymptotic expansion.
    pub radius: f64,
}

impl Default for AiryConfig {
    fn default() -> Self {
        AiryConfig { radius: 8.0 }
    }
}

/// Returns (Ai(z), Ai'(z)).
pub fn airy_ai(z: Complex64) -> (Complex64, Complex64) {
    airy_ai_with(z, AiryConfig::default())
}

pub fn airy_ai_with(z: Complex64, cfg: AiryConfig) -> (Complex64, Complex64) {
    if z.norm() <= cfg.radius {
        return series(z);
    }
    let third = 2.0 * core::f64::consts::FRAC_PI_3;
    if branch::arg(z).abs() <= third {
        return asymptotic(z);
    }
    let w = Complex64::from_polar(1.0, third);
    let w2 = w * w;
    let (a1, d1) = asymptotic(w * z);
    let (a2, d2) = asymptotic(w2 * z);
    (-w * a1 - w2 * a2, -w2 * d1 - w * d2)
}

fn series(z: Complex64) -> (Complex64, Complex64) {
    let zd = CDd::from_c64(z);
    let zsq = zd * zd;
    let z3 = zsq * zd;
    // f = sum a_k z^{3k}, g = sum b_k z^{3k+1}; a, b below carry the powers.
    let mut f = CDd::ONE;
    let mut g = zd;
    let mut fp = CDd::ZERO;
    let mut gp = CDd::ONE;
    let mut a = CDd::ONE;
    let mut b = CDd::ONE;
    for k in 1..400 {
        let kf = k as f64;
        // d/dz a_k z^{3k} = a_{k-1} z^{3k-1} / (3k-1)
        let tfp = (a * zsq).div_f64(3.0 * kf - 1.0);
        a = (a * z3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        b = (b * z3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        let tg = b * zd;
        let tgp = b.scale(Dd::from_f64(3.0 * kf + 1.0));
        f = f + a;
        g = g + tg;
        fp = fp + tfp;
        gp = gp + tgp;
        let scale = f.abs_f64() + g.abs_f64() + fp.abs_f64() + gp.abs_f64();
        let last = a.abs_f64() + tg.abs_f64() + tfp.abs_f64() + tgp.abs_f64();
        if last <= 1e-34 * scale {
            break;
        }
    }
    let ai = f.scale(AI0) - g.scale(MINUS_DAI0);
    let aip = fp.scale(AI0) - gp.scale(MINUS_DAI0);
    (ai.to_c64(), aip.to_c64())
}

/// Exponential asymptotics, valid for |arg z| < pi; used on |arg z| <= 2 pi/3.
fn asymptotic(z: Complex64) -> (Complex64, Complex64) {
    let sqrtz = branch::sqrt(z);
    let zeta = z * sqrtz * (2.0 / 3.0);
    let inv = Complex64::new(1.0, 0.0) / zeta;
    let mut su = Complex64::new(1.0, 0.0);
    let mut sv = Complex64::new(1.0, 0.0);
    let mut u = 1.0f64;
    let mut pw = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        pw = -pw * inv;
        let tu = pw * u;
        let tv = pw * v;
        let mag = tu.norm().max(tv.norm());
        if mag > prev {
            break;
        }
        su += tu;
        sv += tv;
        prev = mag;
        if mag < 1e-17 {
            break;
        }
    }
    let e = (-zeta).exp();
    let rpi = core::f64::consts::PI.sqrt();
    let q = branch::sqrt(sqrtz); // z^{1/4}
    let ai = e * su / (q * (2.0 * rpi));
    let aip = -(e * q * sv) / (2.0 * rpi);
    (ai, aip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_origin() {
        let (a, d) = airy_ai(Complex64::new(0.0, 0.0));
        assert!((a.re - 0.355_028_053_887_817_2).abs() < 1e-16);
        assert!((d.re + 0.258_819_403_792_806_8).abs() < 1e-16);
    }

    #[test]
    fn series_and_asymptotic_agree_on_overlap() {
        for &(r, t) in &[(8.5, 0.3), (8.5, -1.9), (10.0, 2.0), (9.0, 0.0)] {
            let z = Complex64::from_polar(r, t);
            let (a, d) = series(z);
            let (b, e) = asymptotic(z);
            assert!((a - b).norm() <= 1e-12 * a.norm(), "{z}");
            assert!((d - e).norm() <= 1e-12 * d.norm(), "{z}");
        }
    }

    #[test]
    fn wronskian_type_identity() {
        // Ai(z)Ai'(wz)w - Ai'(z)Ai(wz) = e^{-i pi/6}/(2 pi) ... for w = e^{2pi i/3}
        let w = Complex64::from_polar(1.0, 2.0 * core::f64::consts::FRAC_PI_3);
        let expect = Complex64::from_polar(1.0 / (2.0 * core::f64::consts::PI), -core::f64::consts::FRAC_PI_6);
        for &z in &[Complex64::new(0.7, 0.2), Complex64::new(-12.0, 3.0), Complex64::new(15.0, -4.0)] {
            let (a, d) = airy_ai(z);
            let (aw, dw) = airy_ai(w * z);
            let wr = a * dw * w - d * aw;
            assert!((wr - expect).norm() < 1e-12 * (1.0 + (a * dw).norm()), "{z}: {wr}");
        }
    }
}
