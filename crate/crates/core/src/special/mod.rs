//! Special functions with complex arguments, implemented in-house.

pub mod airy;
pub mod bessel;
pub mod normal;

pub use airy::{airy_ai, AiryConfig};
pub use bessel::{bessel_ik, BesselIk};
pub use normal::{kolmogorov_q, norm_cdf};
