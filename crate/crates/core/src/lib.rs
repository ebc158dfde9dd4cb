pub mod bounds;
pub mod cli;
pub mod error;
pub mod graphs;
pub mod solver;
pub mod strategies;
pub mod verify;

pub use error::{Error, Result};
