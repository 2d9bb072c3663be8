//! Modified Bessel functions I and K of real order and complex argument with
//! Re w >= 0.
//!
//! K comes from Temme's series (|w| < 2) or Steed's continued fraction CF2
//! (|w| >= 2) at the reduced order |mu| <= 1/2 and is recurred upward; I comes
//! from the ratio continued fraction CF1 and the Wronskian.

use num_traits::Float;
use crate::error::{Error, Result};
use num_complex::Complex64;

type C = Complex64;

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 20_000;

/// Taylor coefficients of 1/Gamma(1+x) about 0.
const RGAMMA: [f64; 27] = [
    1.0,
    0.5772156649015329,
    -0.6558780715202539,
    -0.04200263503409524,
    0.16653861138229148,
    -0.04219773455554433,
    -0.009621971527876973,
    0.0072189432466631,
    -0.0011651675918590652,
    -0.00021524167411495098,
    0.0001280502823881162,
    -2.013485478078824e-05,
    -1.2504934821426706e-06,
    1.133027231981696e-06,
    -2.056338416977607e-07,
    6.116095104481416e-09,
    5.002007644469223e-09,
    -1.18127457048702e-09,
    1.0434267116911005e-10,
    7.782263439905071e-12,
    -3.696805618642206e-12,
    5.100370287454476e-13,
    -2.0583260535665066e-14,
    -5.348122539423018e-15,
    1.2267786282382608e-15,
    -1.1812593016974588e-16,
    1.1866922547516004e-18,
];

/// I_nu, K_nu and their derivatives at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselIk {
    pub i: C,
    pub ip: C,
    pub k: C,
    pub kp: C,
}

/// Returns (gam1, gam2, 1/Gamma(1+mu), 1/Gamma(1-mu)) for |mu| <= 1/2.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mut gampl = 0.0;
    let mut gammi = 0.0;
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    let mut p = 1.0;
    for (k, &c) in RGAMMA.iter().enumerate() {
        gampl += c * p;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        gammi += sign * c * p;
        if k % 2 == 0 {
            gam2 += c * p;
        } else if k >= 1 {
            // (1/G(1-mu) - 1/G(1+mu)) / (2 mu) = -sum_{odd k} c_k mu^{k-1}
            gam1 -= c * p / if mu == 0.0 { 1.0 } else { mu };
        }
        p *= mu;
    }
    if mu == 0.0 {
        gam1 = -RGAMMA[1];
    }
    (gam1, gam2, gampl, gammi)
}

/// K_mu and K_{mu+1} for |mu| <= 1/2.
fn k_pair(mu: f64, w: C) -> Result<(C, C)> {
    let pi = core::f64::consts::PI;
    if w.norm() < 2.0 {
        let x2 = w * 0.5;
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let pimu = pi * mu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = d * mu;
        let fact2 = if e.norm() < EPS { C::new(1.0, 0.0) } else { e.sinh() / e };
        let mut ff = (e.cosh() * gam1 + fact2 * d * gam2) * fact;
        let mut sum = ff;
        let ee = e.exp();
        let mut p = ee * (0.5 / gampl);
        let mut q = C::new(0.5 / gammi, 0.0) / ee;
        let mut c = C::new(1.0, 0.0);
        let dd = x2 * x2;
        let mut sum1 = p;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (ff * fi + p + q) / (fi * fi - mu * mu);
            c = c * dd / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - ff * fi);
            sum1 += del1;
            if del.norm() < sum.norm() * EPS {
                return Ok((sum, sum1 * 2.0 / w));
            }
        }
        Err(Error::ToleranceNotMet { estimate: sum.norm(), error: f64::NAN })
    } else {
        let mut b = (w + 1.0) * 2.0;
        let mut d = C::new(1.0, 0.0) / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = C::new(0.0, 0.0);
        let mut q2 = C::new(1.0, 0.0);
        let a1 = 0.25 - mu * mu;
        let mut q = C::new(a1, 0.0);
        let mut c = C::new(a1, 0.0);
        let mut a = -a1;
        let mut s = q * delh + 1.0;
        for i in 2..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -c * a / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = C::new(1.0, 0.0) / (b + d * a);
            delh = (b * d - 1.0) * delh;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).norm() < EPS {
                h = h * a1;
                let kmu = (C::new(pi, 0.0) / (w * 2.0)).sqrt() * (-w).exp() / s;
                let k1 = kmu * (w + mu + 0.5 - h) / w;
                return Ok((kmu, k1));
            }
        }
        Err(Error::ToleranceNotMet { estimate: s.norm(), error: f64::NAN })
    }
}

/// I_nu(w) (with the derivative) for nu >= 0 together with K_nu via CF1,
/// downward recurrence to the reduced order and the Wronskian.
fn ik_nonneg(nu: f64, w: C) -> Result<BesselIk> {
    let nl = (nu + 0.5).floor() as usize;
    let mu = nu - nl as f64;
    let xi = C::new(1.0, 0.0) / w;
    let xi2 = xi * 2.0;
    // CF1 (modified Lentz) for f = I'_nu / I_nu.
    let tiny = 1e-100;
    let mut h = xi * nu;
    if h.norm() < tiny {
        h = C::new(tiny, 0.0);
    }
    let mut b = xi2 * nu;
    let mut d = C::new(0.0, 0.0);
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = C::new(1.0, 0.0) / (b + d);
        c = b + C::new(1.0, 0.0) / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ToleranceNotMet { estimate: h.norm(), error: f64::NAN });
    }
    let mut ril = C::new(1.0, 0.0);
    let mut ripl = h * ril;
    let ril1 = ril;
    let rip1 = ripl;
    let mut fact = xi * nu;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    let f = ripl / ril;
    let (kmu, kmu1) = k_pair(mu, w)?;
    let kmup = xi * mu * kmu - kmu1;
    let imu = xi / (f * kmu - kmup);
    let i_nu = imu * ril1 / ril;
    let ip_nu = imu * rip1 / ril;
    let mut k = kmu;
    let mut k1 = kmu1;
    for i in 1..=nl {
        let kt = (xi2 * (mu + i as f64)) * k1 + k;
        k = k1;
        k1 = kt;
    }
    let kp = xi * nu * k - k1;
    Ok(BesselIk { i: i_nu, ip: ip_nu, k, kp })
}

/// I_nu, K_nu and derivatives for real nu > -1 and Re w >= 0, w != 0.
pub fn bessel_ik(nu: f64, w: C) -> Result<BesselIk> {
    if !(nu > -1.0) || w.re < 0.0 || w.norm() == 0.0 {
        return Err(Error::InvalidSpec(alloc::format!("bessel_ik needs nu > -1, Re w >= 0, w != 0 (nu = {nu}, w = {w})")));
    }
    if nu >= 0.0 {
        return ik_nonneg(nu, w);
    }
    // nu = -m with 0 < m < 1: K_{-m} = K_m, I_{-m} = I_m + (2/pi) sin(m pi) K_m.
    let m = -nu;
    let pos = ik_nonneg(m, w)?;
    let s = 2.0 / core::f64::consts::PI * (m * core::f64::consts::PI).sin();
    Ok(BesselIk {
        i: pos.i + pos.k * s,
        ip: pos.ip + pos.kp * s,
        k: pos.k,
        kp: pos.kp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_closed_forms() {
        // I_{1/2}(w) = sqrt(2/(pi w)) sinh w, K_{1/2}(w) = sqrt(pi/(2w)) e^{-w}
        let pi = core::f64::consts::PI;
        for &w in &[C::new(0.3, 0.1), C::new(1.9, -1.0), C::new(5.0, 3.0), C::new(0.0, 4.0)] {
            let r = bessel_ik(0.5, w).unwrap();
            let i = (C::new(2.0 / pi, 0.0) / w).sqrt() * w.sinh();
            let k = (C::new(pi / 2.0, 0.0) / w).sqrt() * (-w).exp();
            assert!((r.i - i).norm() < 1e-14 * i.norm(), "{w}");
            assert!((r.k - k).norm() < 1e-14 * k.norm(), "{w}");
        }
    }

    #[test]
    fn wronskian() {
        for &nu in &[-0.7, -0.25, 0.0, 0.5, 1.3, 4.0] {
            for &w in &[C::new(0.05, 0.02), C::new(1.0, 1.0), C::new(3.0, -2.0), C::new(0.0, -4.0), C::new(12.0, 6.0)] {
                let r = bessel_ik(nu, w).unwrap_or_else(|e| panic!("nu={nu} w={w}: {e}"));
                let wr = (r.i * r.kp - r.ip * r.k) * w;
                assert!((wr + 1.0).norm() < 1e-12, "nu={nu} w={w}: {wr}");
            }
        }
    }
}
