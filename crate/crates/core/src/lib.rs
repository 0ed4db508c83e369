//! Exact Groebner bases over the rationals with externally checkable
//! certificates.
//!
//! Polynomials live in `Q[x0, x1, ...]` with an unbounded supply of
//! variables. The crate provides monomial orders, multivariate division
//! with a witness checker, Buchberger's algorithm and criterion, reduced
//! bases, certificate bundles, and variable embeddings between rings.

pub mod cli;
pub mod division;
pub mod embedding;
pub mod error;
pub mod groebner;
pub mod order;
pub mod poly;

pub use error::{Error, Result};
pub use order::{ExponentVector, MonomialOrder, OrderKind, Var};
pub use poly::{Coeff, MvPoly};
