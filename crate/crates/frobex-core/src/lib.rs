//! frobex: exact construction, verification and classification of extended
//! Frobenius algebras, integral Hopf algebras, and Frobenius monoidal
//! functors over cyclotomic number fields.
//!
//! All arithmetic is exact (`Q(zeta_N)` with arbitrary-precision rational
//! coefficients); every axiom check is a decidable equality of structure
//! constants.

pub mod acceptance;
pub mod catalog;
pub mod error;
pub mod extended;
pub mod frobenius;
pub mod functors;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rng;
pub mod scalars;

pub use error::{FrobexError, Result};
