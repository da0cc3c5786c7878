pub mod group;
pub mod graph;
pub mod ncgraph;
pub mod coloring;
pub mod rainbow;
pub mod scalar;
pub mod bounds;
pub mod formats;
pub mod suite;

pub use scalar::{ExactRational, Scalar, SmallRational};
pub mod reproduce;
