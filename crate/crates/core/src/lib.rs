//! Lemniscates of Bernoulli and polynomial lemniscates: linkage and
//! secant constructions, inversion to the equilateral hyperbola, implicit
//! tracing and figure output.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(a <= b)` also rejects NaN

pub mod constructions;
pub mod curves;
pub mod error;
pub mod frontend;
pub mod geometry;
pub mod tracer;
pub mod verify;

pub use curves::{BernoulliConfig, CoefficientTable, EquilateralHyperbola, PolynomialLemniscate};
pub use error::{Error, Result};
pub use geometry::{Circle, InversionMap, Line, Point, Vector};
pub use tracer::{Contour, TraceWindow};
