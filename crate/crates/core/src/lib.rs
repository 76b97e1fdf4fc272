//! Fixed point data of circle actions on compact almost complex manifolds
//! with isolated fixed points.
//!
//! * [`poly`]: exact Laurent polynomials and rational functions in `t`.
//! * [`fpdata`]: fixed point data, generators for `S^2`, `S^6`, `CP^n`,
//!   products and disjoint unions.
//! * [`verify`]: the chi_y localization identity and the checks derived
//!   from it.
//! * [`enumerate`]: pruned parallel enumeration of admissible data.
//! * [`cli`]: the `circlefix` command line.

pub mod cli;
pub mod enumerate;
pub mod fpdata;
pub mod poly;
pub mod verify;

pub use enumerate::{enumerate_admissible, EnumerationQuery, EnumerationReport};
pub use fpdata::{FixedPoint, FixedPointDatum, NVector};
pub use verify::{chi_vector, run_all_checks, ChiVector, CheckReport};
