//! End-to-end checks that the simplices and pieces really partition the
//! polytopes, with seeded exact sampling and witness-carrying reports.

mod checks;
mod report;
mod sampler;

pub use checks::{
    labeled_forest_count, sample_cells, verify_all, verify_fiber_lemma, verify_refinement,
    verify_specializations, verify_subdivision, verify_triangulation, SampleOutcome,
    SampleSettings, DEFAULT_SAMPLES,
};
pub use report::{Check, Report};
pub use sampler::{bounding_box, sample_in_box, Lcg, ScaledPoint, SignForm, SAMPLE_DENOMINATOR};
