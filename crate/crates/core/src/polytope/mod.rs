//! Polytopes at fixed rational parameters: the five families by their
//! inequalities, the simplices `S_F(q, t)`, the pieces `D_F(q, t)`, and the
//! product and cone constructions they are assembled from.

mod affine;
mod family;
mod hrep;
mod piece;
mod simplex;

pub use affine::AffineForm;
pub use family::{build_hrep, Family};
pub use hrep::{normalized_volume_of, points_to_json, vrep_from_text, vrep_to_text, HRep, Point};
pub use piece::{piece_d, piece_d_combinator, piece_d_tree};
pub use simplex::{chain_hrep, simplex_s, tree_chain_hrep, Simplex};
