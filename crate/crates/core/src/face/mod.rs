//! Closed-form vertex sets, face lattices from vertex-facet incidence, and
//! f-vectors.

mod lattice;
mod vertices;

pub use lattice::{
    conjecture_check, euler_holds, extremality_certificates, f_vector_json, face_lattice,
    predicted_edges, predicted_two_faces, tutte_f_vector, ConjectureRow, FaceLattice,
    MAX_LATTICE_VERTICES,
};
pub use vertices::{cayley_vertices, tutte_vertices, VertexProvenance, VertexSet, VertexSource};
