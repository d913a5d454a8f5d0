//! Exact-arithmetic toolkit for finite-dimensional algebras given by
//! structure constants: variety identities, orbit-closure invariants,
//! parametrized degeneration witnesses and Pierce decompositions, together
//! with a catalog of the low-dimensional algebras of levels one and two.

pub mod algebra;
pub mod catalog;
pub mod degeneration;
pub mod error;
pub mod exactnum;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod pierce;
pub mod suite;

pub use error::{Error, Result};
