pub mod belts;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod multiplicity;
pub mod io;
pub mod render;
pub mod report;
pub mod symmetry;

pub use error::{Result, TilingError};
pub use geometry::{Point, Polytope, Rational, Vector};
