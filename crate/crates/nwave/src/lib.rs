//! Exact multisoliton solutions of the rank-2 n-wave systems (A2, B2, G2),
//! their discrete transformations, and exact verification of the identities
//! relating them.
//!
//! All values live in the ring of exponential polynomials with rational
//! coefficients and rational exponents, so every identity is checked by
//! exact cancellation.

pub mod cli;
pub mod error;
pub mod exprat;
pub mod spectral;
pub mod tau;
pub mod toda;
pub mod transforms;
pub mod verify;
pub mod wavesys;

pub use error::Error;
pub use exprat::{ExpPoly, ExpRational, LinForm, WaveConstants, Q};
pub use spectral::{initial_config, SpectralData, Spike};
pub use transforms::TransformId;
pub use wavesys::{model, Algebra, AlgebraModel, FieldConfig, RootLabel};
