//! Exact computational algebra for cohomology rings of Peterson variety
//! intersections with Schubert, opposite-Schubert and Richardson varieties.
//!
//! Everything here is computed over exact rationals: no floating point, no
//! tolerances. The crate is split along the objects involved:
//!
//! - [`root_system`]: Cartan data, fundamental weights and positive roots for
//!   the simple types A–G at desk-scale ranks.
//! - [`weyl`]: Weyl group elements as exact matrices with reduced words,
//!   longest parabolic elements and Bruhat order via the subword property.
//! - [`poly`], [`groebner`], [`hilbert`]: sparse multivariate polynomials over
//!   ℚ, Buchberger bases, and Hilbert series of graded quotients.
//! - [`presentation`]: the presentation ideals of the cohomology rings
//!   (ordinary and equivariant) together with their closed-form Hilbert series
//!   and regular-sequence certificates.
//! - [`gkm`]: localization at torus fixed points, restriction of degree-two
//!   Schubert classes two independent ways, and a degreewise injectivity
//!   check of the localization map.
//! - [`cells`]: type-A block-Hankel cell charts, leading-principal-minor
//!   equations, affine eliminations and paving Poincaré polynomials.
//!
//! The library is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `peterson-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cells;
pub mod gkm;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod num;
pub mod poly;
pub mod presentation;
pub mod root_system;
pub mod weyl;

pub use num::Rat;
pub use root_system::{Family, RootSystemData, RootSystemSpec, SimpleSubset, WeightVector};
pub use weyl::WeylElement;

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the library. Mathematical identity failures are
/// reported through report structures, not through this type; `Error` covers
/// invalid inputs and exhausted resource guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Family/rank combination outside the legal range, or above the rank cap.
    InvalidRootSystem(String),
    /// A subset refers to indices outside `1..=rank`, or violates `J ⊆ I`.
    InvalidSubset(String),
    /// Bruhat comparison refused: the right-hand word is longer than the
    /// subword-enumeration guard allows.
    BruhatLengthGuard { length: usize, cap: usize },
    /// Buchberger refused to process more S-pairs than the configured budget.
    SPairBudget { budget: usize },
    /// A cell-chart operation was called with inconsistent `n`, `K`, `a`, `b`.
    InvalidChart(String),
    /// An identity that is a theorem failed componentwise. This indicates a
    /// bug, not a user error, and is never produced on a correct build.
    IdentityMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRootSystem(msg) => write!(f, "invalid root system: {msg}"),
            Error::InvalidSubset(msg) => write!(f, "invalid subset: {msg}"),
            Error::BruhatLengthGuard { length, cap } => write!(
                f,
                "bruhat comparison refused: word length {length} exceeds guard {cap}"
            ),
            Error::SPairBudget { budget } => {
                write!(f, "groebner run exceeded the S-pair budget of {budget}")
            }
            Error::InvalidChart(msg) => write!(f, "invalid cell chart: {msg}"),
            Error::IdentityMismatch(msg) => write!(f, "identity check failed: {msg}"),
        }
    }
}

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
