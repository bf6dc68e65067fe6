pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod isomorphism;
pub mod matrix;
pub mod products;
pub mod scenarios;
pub mod spectrum;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{Graph, Permutation};
