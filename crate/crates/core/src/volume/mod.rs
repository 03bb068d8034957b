//! Exact volumes: determinants of the simplices, the closed forms for
//! simplices and pieces, and the graph sums they are compared against.

mod closed;
mod counting;
mod graphs;
mod report;

pub use closed::{closed_form_piece_volume, closed_form_simplex_volume, simplex_volume};
pub use counting::{lattice_and_partition_counts, MAX_LATTICE_N};
pub use graphs::{
    connected_gf, inversion_enumerator, recursion_r, z_bruteforce, ConnectedMode,
    MAX_RECURSION_NODES, MAX_SWEEP_NODES,
};
pub use report::{
    determinant_total, graph_total, piece_closed_total, piece_index, simplex_closed_total,
    simplex_index, specialize, VolumeReport,
};
