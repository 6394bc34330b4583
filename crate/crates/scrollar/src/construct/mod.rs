//! Construction pipelines producing verified covers, and the
//! classification helpers for small genus and trigonal curves.

mod classify;
mod compositum;
mod pipelines;
mod report;

pub use classify::{
    balanced_profile, coverage_intervals, coverage_lower, coverage_upper, coverage_witness,
    default_gap_scale, generization_gap_witness, generization_gap_witness_with, generizes,
    trigonal_class, CoverageReport, GenerizationWitness, TrigonalClass,
};
pub use compositum::{build_cyclic_compositum, cyclic_tensor_table};
pub use pipelines::{build_concave, build_general, build_multipoint, linear_form};
pub use report::{
    build, BuildOptions, ConstructionSpec, CoverReport, CyclicFactor, EtaleMethod, FactorSpan,
    PointCheck, Verdict, Verdicts,
};
