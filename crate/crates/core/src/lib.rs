//! Exact counting over binary fields: elements with prescribed traces,
//! irreducible polynomials with prescribed leading coefficients, and rational
//! points on a family of supersingular Artin-Schreier curves.

pub mod arith;
pub mod closed_forms;
pub mod curves;
pub mod cyclotomic;
pub mod eigensum;
pub mod error;
pub mod field;
pub mod fourier;
pub mod fqpoly;
pub mod gf2mat;
pub mod gf2poly;
pub mod quadform;
pub mod symbolic;
pub mod traces;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
