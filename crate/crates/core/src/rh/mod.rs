//! Numerical companions of the Riemann-Hilbert analysis: potentials, the
//! Szego function, global and local parametrices, and residual checks of
//! every jump and matching relation.

pub mod local;
pub mod potential;
pub mod szego;
pub mod verify;

use num_traits::Float;
use crate::branch::{c, I};
use crate::ensemble::Kind;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

pub use local::{
    airy_parametrix, bessel_parametrix, conformal_maps, local_parametrix, matching_error, prefactor_e, Edge, EdgeMaps,
    EdgeType,
};
pub use potential::{g_potential, phi_aux};
pub use szego::{global_parametrix, n_log_derivative, szego, ComplexSeries, SzegoFunction};

/// 2x2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Matrix2C {
    pub m: [[Complex64; 2]; 2],
}

impl Matrix2C {
    pub const IDENTITY: Matrix2C = Matrix2C {
        m: [[Complex64 { re: 1.0, im: 0.0 }, Complex64 { re: 0.0, im: 0.0 }], [
            Complex64 { re: 0.0, im: 0.0 },
            Complex64 { re: 1.0, im: 0.0 },
        ]],
    };
    pub const SIGMA3: Matrix2C = Matrix2C {
        m: [[Complex64 { re: 1.0, im: 0.0 }, Complex64 { re: 0.0, im: 0.0 }], [
            Complex64 { re: 0.0, im: 0.0 },
            Complex64 { re: -1.0, im: 0.0 },
        ]],
    };

    pub fn new(a: Complex64, b: Complex64, cc: Complex64, d: Complex64) -> Self {
        Matrix2C { m: [[a, b], [cc, d]] }
    }

    pub fn real(a: f64, b: f64, cc: f64, d: f64) -> Self {
        Self::new(c(a, 0.0), c(b, 0.0), c(cc, 0.0), c(d, 0.0))
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self::new(a, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), d)
    }

    /// e^{l sigma3} = diag(e^l, e^{-l}); powers x^{sigma3 p} are written this
    /// way with l = p Log x so the branch is explicit at the call site.
    pub fn sigma3_exp(l: Complex64) -> Self {
        Self::diag(l.exp(), (-l).exp())
    }

    /// (1/sqrt 2) [[1, i], [i, 1]].
    pub fn m_plus() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        Self::new(c(s, 0.0), c(0.0, s), c(0.0, s), c(s, 0.0))
    }

    /// (1/sqrt 2) [[1, -i], [-i, 1]], the inverse of `m_plus`.
    pub fn m_minus() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        Self::new(c(s, 0.0), c(0.0, -s), c(0.0, -s), c(s, 0.0))
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn inv(&self) -> Self {
        let d = self.det();
        Self::new(self.m[1][1] / d, -self.m[0][1] / d, -self.m[1][0] / d, self.m[0][0] / d)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.m[0][0] * s, self.m[0][1] * s, self.m[1][0] * s, self.m[1][1] * s)
    }

    /// sigma3 A sigma3: flips the off-diagonal signs.
    pub fn conj_sigma3(&self) -> Self {
        Self::new(self.m[0][0], -self.m[0][1], -self.m[1][0], self.m[1][1])
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for Matrix2C {
    type Output = Matrix2C;
    fn mul(self, o: Matrix2C) -> Matrix2C {
        let a = &self.m;
        let b = &o.m;
        Matrix2C::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Add for Matrix2C {
    type Output = Matrix2C;
    fn add(self, o: Matrix2C) -> Matrix2C {
        let mut r = self;
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] += o.m[i][j];
            }
        }
        r
    }
}

impl Sub for Matrix2C {
    type Output = Matrix2C;
    fn sub(self, o: Matrix2C) -> Matrix2C {
        self + (-o)
    }
}

impl Neg for Matrix2C {
    type Output = Matrix2C;
    fn neg(self) -> Matrix2C {
        self.scale(c(-1.0, 0.0))
    }
}

impl Mul<f64> for Matrix2C {
    type Output = Matrix2C;
    fn mul(self, s: f64) -> Matrix2C {
        self.scale(c(s, 0.0))
    }
}

/// Offsets used for two-sided boundary values.
pub const DELTAS: [f64; 3] = [1e-4, 5e-5, 2.5e-5];

/// Which side of an oriented contour: `Plus` is on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// Limit of F(z0 +/- i d delta) as delta -> 0 along the normal of a contour
/// with unit direction `d`, by quadratic Richardson extrapolation over
/// `DELTAS` (weights 1/3, -2, 8/3 at delta, delta/2, delta/4).
pub fn boundary_value<T, F>(f: F, z0: Complex64, d: Complex64, side: Side) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
    F: Fn(Complex64) -> T,
{
    let s = if side == Side::Plus { 1.0 } else { -1.0 };
    let n = I * d * s;
    let v: [T; 3] = [f(z0 + n * DELTAS[0]), f(z0 + n * DELTAS[1]), f(z0 + n * DELTAS[2])];
    v[0] * (1.0 / 3.0) + v[1] * (-2.0) + v[2] * (8.0 / 3.0)
}

/// Arc of the lens-shaped contour L.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Arc {
    UpperLip,
    LowerLip,
    Interval,
    ExteriorRay,
}

/// Lips are the curves x +/- i LENS_HEIGHT (1 - x^2), x in (-1, 1).
pub const LENS_HEIGHT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPoint {
    pub z: Complex64,
    pub arc: Arc,
    /// All arcs run left to right; +1 marks that orientation.
    pub orientation: f64,
}

impl ContourPoint {
    /// Point on the lip above (`upper`) or below x.
    pub fn lip(x: f64, upper: bool) -> Option<Self> {
        if !(x.abs() < 1.0) {
            return None;
        }
        let h = LENS_HEIGHT * (1.0 - x * x);
        let (z, arc) = if upper { (c(x, h), Arc::UpperLip) } else { (c(x, -h), Arc::LowerLip) };
        Some(ContourPoint { z, arc, orientation: 1.0 })
    }

    /// Classify a point of the contour for the given ensemble, None if z is
    /// not on L.
    pub fn classify(kind: Kind, z: Complex64) -> Option<Self> {
        let tol = 1e-12;
        if z.im == 0.0 {
            let x = z.re;
            let arc = if x.abs() < 1.0 {
                Arc::Interval
            } else {
                let on = match kind {
                    Kind::Gue => x.abs() > 1.0,
                    Kind::Lue => x > 1.0,
                    Kind::Jue => false,
                };
                if !on {
                    return None;
                }
                Arc::ExteriorRay
            };
            return Some(ContourPoint { z, arc, orientation: 1.0 });
        }
        if z.re.abs() < 1.0 {
            let h = LENS_HEIGHT * (1.0 - z.re * z.re);
            if (z.im - h).abs() <= tol {
                return Some(ContourPoint { z, arc: Arc::UpperLip, orientation: 1.0 });
            }
            if (z.im + h).abs() <= tol {
                return Some(ContourPoint { z, arc: Arc::LowerLip, orientation: 1.0 });
            }
        }
        None
    }
}
