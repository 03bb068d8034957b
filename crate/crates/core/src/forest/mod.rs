//! Labeled and plane forests, the neighbors-first search that maps graphs to
//! forests, cane paths, and exhaustive enumeration.

mod enumerate;
mod labeled;
mod plane;

pub use enumerate::{
    catalan, enumerate_labeled_forests, enumerate_plane_forests, enumerate_plane_trees,
    MAX_FOREST_NODES, MAX_PLANE_NODES,
};
pub use labeled::{nfs, LabeledForest, NodeCoordinate, NodeKind};
pub use plane::PlaneForest;
