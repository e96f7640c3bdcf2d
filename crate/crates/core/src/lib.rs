//! Lower bounds on lattice ropelength from Seifert circles and the HOMFLY-PT
//! polynomial.

pub mod bounds;
pub mod cli;
pub mod cord;
pub mod diagram;
pub mod error;
pub mod family;
pub mod geometry;
pub mod homfly;
pub mod lattice;
pub mod projection;
pub mod random;
pub mod render;
pub mod seifert;

pub use error::{Error, Result};
