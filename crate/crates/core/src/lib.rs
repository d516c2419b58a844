//! Circle extrema of complex polynomials, zero-free disk certification,
//! Rivlin-type lower bounds for `M(p, r) = max_{|z|=r} |p(z)|`, and a seeded
//! property-testing harness that checks every bound empirically.

pub mod bounds;
pub mod error;
pub mod extrema;
pub mod harness;
pub mod poly;
pub mod roots;

pub use bounds::{BoundId, BoundResult, BoundSummary, Variant};
pub use error::Error;
pub use extrema::{CircleExtremum, ExtremumKind};
pub use harness::{FuzzReport, GenConfig, PropertyId};
pub use poly::{LacunaryProfile, Polynomial};
pub use roots::ZeroFreeCertificate;

pub type Result<T> = std::result::Result<T, Error>;
