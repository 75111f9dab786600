//! Exact computations with complex simple Lie algebras over ℚ: Chevalley
//! bases, sl2-triples through nilpotent elements, centralizers, normalizers,
//! indices of Lie algebras and modules, and the surjectivity checks used to
//! certify the index formula for distinguished nilpotent orbits.

pub mod chevalley;
pub mod classical;
mod error;
pub mod exactla;
pub mod index;
pub mod liecore;
pub mod propp;
pub mod report;
pub mod slice;

pub use error::{Error, Result};
