//! Exact invariants of the harmonic sequence of a full holomorphic curve
//! `S² → CP^n`, and lower bounds on the index of the complex isotropic harmonic
//! maps it generates.
//!
//! Everything here is exact: coefficients are Gaussian rationals with
//! arbitrary-precision parts, and bound arithmetic uses big integers.
//!
//! ```
//! use isoindex_core::{bounds, harmonic, ProjectiveCurve, Poly, RationalSelfMap};
//!
//! let veronese = ProjectiveCurve::new(2, vec![
//!     Poly::from_ints(&[1]),
//!     Poly::from_ints(&[0, 1]),
//!     Poly::from_ints(&[0, 0, 1]),
//! ]).unwrap();
//! let curve = veronese.precompose(&RationalSelfMap::power(3).unwrap());
//! let seq = harmonic::invariants(&curve).unwrap();
//! assert_eq!(seq.r, vec![4, 4]);
//!
//! let dir = bounds::DirectrixInvariants::from_sequence(&seq, 1).unwrap();
//! assert_eq!(bounds::theorem_bound(&dir).unwrap(), 7.into());
//! ```
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod curve;
pub mod error;
pub mod harmonic;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use bounds::{BoundReport, DirectrixInvariants};
pub use curve::{ProjectiveCurve, RationalSelfMap};
pub use error::{Error, Result};
pub use harmonic::{SequenceInvariants, VerificationReport};
pub use poly::{Degree, Poly};
pub use scalar::{GaussianRational, Rational};
