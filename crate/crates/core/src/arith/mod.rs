//! Exact arithmetic: ℚ, ℚ(i), one quadratic extension of ℚ(i), binary forms and 2×2 matrices.

pub mod field;
pub mod gaussian;
pub mod mat2;
pub mod poly;
pub mod rational;

pub use field::{FieldElem, FieldError};
pub use gaussian::Gaussian;
pub use mat2::{Mat2, Vec2};
pub use poly::HomPoly;
pub use rational::Rational;
