//! Exact geometric and arithmetic algorithms: de Casteljau evaluation, blossoms,
//! algebraic smoothing matrices, machining tolerances, polar intersection, Vincent
//! root isolation, golden matrices, matrix quaternions and cube identities.

pub mod blossom;
pub mod decasteljau;
pub mod error;
pub mod exactnum;
pub mod intersect;
pub mod mat;
pub mod numtheory;
pub mod polygon_golden;
pub mod quaternions;
pub mod smoothing;
pub mod tolerance;
pub mod vincent;

pub use error::{Error, Result};
pub use exactnum::{int, parse_rational, rat, Rational, Scalar};
pub use mat::Matrix;
