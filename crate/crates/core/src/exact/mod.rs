//! Exact integer polynomials, rational functions, and polynomial-matrix
//! determinants. No floating point anywhere.

mod det;
mod gcd;
mod poly;
mod ratfun;

pub use det::{det_int, det_poly, interpolate_consecutive, DetError};
pub use gcd::gcd_primitive;
pub use poly::IntPoly;
pub use ratfun::{reduce, RatFun, SeriesError, SeriesPrefix};
