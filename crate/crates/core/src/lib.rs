#![forbid(unsafe_code)]
//! Exact computations in the partition category `Par(t)`, the Heisenberg category,
//! the monoidal functor between them, symmetric group representation oracles and
//! the symmetric function layer of their Grothendieck rings.

pub mod error;
pub mod heis;
pub mod par;
pub mod poly;
pub mod psi;
pub mod rep;
pub mod suite;
pub mod symfunc;

pub use error::{Error, Result};
pub use poly::TPolynomial;
