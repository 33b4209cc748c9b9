pub mod error;
pub mod exponent;
pub mod graph;
pub mod chromatic;
pub mod cli;
pub mod closed_forms;
pub mod guard;
pub mod horn;
pub mod linalg;
pub mod rational;
pub mod qpoly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
