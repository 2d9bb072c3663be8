#![no_std]
// When std ends up linked (test harness, dev-dependency feature unification)
// the inherent float methods win and the num_traits::Float imports go unused.
#![allow(unused_imports)]
extern crate alloc;

pub mod branch;
pub mod chebyshev;
pub mod dd;
pub mod ensemble;
pub mod error;
pub mod functionals;
pub mod hankel;
pub mod linalg;
pub mod quad;
pub mod rh;
pub mod special;
pub mod stats;

/// Crate version, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use chebyshev::{ChebyshevSeries, TestFunction};
pub use ensemble::{EigenSample, EnsembleSpec, Kind};
pub use error::{Error, Result};
pub use functionals::{EquilibriumMeasure, LimitFunctionals};
