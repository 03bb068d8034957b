//! Exact construction of the Cayley, Gayley, t-Cayley, t-Gayley and Tutte
//! polytopes, their triangulations indexed by labeled forests and their
//! coarser subdivisions indexed by plane forests, together with brute-force
//! checks of every volume and counting identity at small size.

pub mod error;
pub mod exact;
pub mod face;
pub mod forest;
pub mod graph;
pub mod jobs;
pub mod polytope;
pub mod verify;
pub mod volume;

pub use error::Error;
