//! Hilbert series of the identity component of a free associative algebra
//! whose generating space is graded by a finite group.
//!
//! [`hilbert::hilbert_identity`] produces the series as an exact rational
//! function, [`oracle::tensor_dimensions`] computes the same coefficients by
//! direct recursion, and [`fg`] decides finite generation of the identity
//! component.

pub mod exact;
pub mod fg;
pub mod grading;
pub mod group;
pub mod hilbert;
pub mod oracle;

pub use exact::{IntPoly, RatFun, SeriesPrefix};
pub use grading::DimVector;
pub use group::{Group, GroupError};
pub use hilbert::{hilbert_identity, HilbertResult};
