//! Principal-branch helpers. Every multi-valued function in the crate goes
//! through here: arguments live in (-pi, pi], cuts run along the negative
//! real axis of the respective argument.

use num_traits::Float;
use num_complex::Complex64;

pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
pub const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn arg(z: Complex64) -> f64 {
    z.im.atan2(z.re)
}

pub fn log(z: Complex64) -> Complex64 {
    Complex64::new(z.norm().ln(), arg(z))
}

/// z^a = exp(a Log z); 0^a = 0 for Re a > 0.
pub fn pow(z: Complex64, a: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let r = z.norm().powf(a);
    let t = arg(z) * a;
    Complex64::new(r * t.cos(), r * t.sin())
}

pub fn sqrt(z: Complex64) -> Complex64 {
    pow(z, 0.5)
}

/// Principal square root with the half-angle trick, for accuracy near the
/// positive axis.
pub fn sqrt_accurate(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return z;
    }
    let r = z.norm();
    if z.re >= 0.0 {
        let t = ((r + z.re) * 0.5).sqrt();
        Complex64::new(t, z.im / (2.0 * t))
    } else {
        let t = ((r - z.re) * 0.5).sqrt();
        let s = if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) { -1.0 } else { 1.0 };
        Complex64::new(z.im.abs() / (2.0 * t), s * t)
    }
}

/// sqrt(z^2 - 1) := sqrt(z - 1) sqrt(z + 1): cut on [-1, 1], behaves like z at
/// infinity.
pub fn sqrt_z2m1(z: Complex64) -> Complex64 {
    // shift the real part only: z + 1 would turn a -0 imaginary part into +0
    sqrt_accurate(Complex64::new(z.re - 1.0, z.im)) * sqrt_accurate(Complex64::new(z.re + 1.0, z.im))
}

/// The exterior Joukowski inverse w = z + sqrt(z^2 - 1), |w| >= 1.
pub fn joukowski_inv(z: Complex64) -> Complex64 {
    z + sqrt_z2m1(z)
}

/// Real cube root continued to the principal complex branch.
pub fn cbrt(z: Complex64) -> Complex64 {
    pow(z, 1.0 / 3.0)
}
