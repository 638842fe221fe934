//! Multichain subdivisions of simplicial complexes and the colored
//! Eulerian machinery that computes their face numbers.

pub mod classical;
pub mod colored;
pub mod complex;
pub mod eulerian;
pub mod graph;
pub mod json;
pub mod multichain;
pub mod poly;
pub mod poset;
pub mod sturm;
pub mod transforms;
pub mod verify;

pub use complex::{f_to_h, h_to_f, ComplexError, FVector, HVector, SimplicialComplex};
pub use graph::VertexGraph;
