//! Exact structure-constant computations for Hopf group-coalgebras.
//!
//! The crate represents finite-dimensional Hopf group-coalgebras, comodule
//! algebras, module coalgebras and Doi-Hopf modules by explicit structure
//! constants over the rationals or a prime field, builds the algebras graded
//! by discrete Doi-Hopf data (smash and Koppinen products), constructs the
//! Drinfeld double together with its comultiplication, antipodes and
//! R-matrices, and checks every structural identity exhaustively on bases.

pub mod discrete;
pub mod double;
mod error;
pub mod graded;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::{Field, LinMap, Scalar, Space, Tensor};
pub use report::{CheckRecord, ValidationReport, Witness};
