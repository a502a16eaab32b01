//! Exact symbolic verification of order-two higher algebroids.
//!
//! Structure functions are polynomials with rational coefficients in the base
//! coordinates of a single chart. Every check returns a [`VerificationReport`]
//! listing each residual, so a failure names the equation and the indices.

#![allow(clippy::needless_range_loop)]

pub mod algebroid1;
pub mod error;
pub mod fixtures;
pub mod graded_geometry;
pub mod ha2;
pub mod point_ha;
pub mod prolong;
pub mod random;
pub mod report;
pub mod ruth2;
pub mod symbolic;

pub use algebroid1::{Algebroid1Data, Section};
pub use error::{Error, Result};
pub use graded_geometry::{Chart, VectorField};
pub use ha2::{HA2Data, Order2Blocks};
pub use point_ha::PointHAData;
pub use prolong::prolong2;
pub use report::{Check, VerificationReport};
pub use ruth2::{Connection, Ruth2Data, RuthMorphism};
pub use symbolic::{Poly, Rational};
