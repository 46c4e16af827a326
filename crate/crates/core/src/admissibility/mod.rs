//! Admissibility checks, singularity typing, and the end-to-end pipeline
//! with its report.

mod check;
mod milnor;
mod pipeline;
mod report;
mod sextic;

pub use check::{
    check_admissibility, cone_point_model, cone_point_singularity, hyperelliptic_samples, AdmissibilityReport,
    ConditionI, ConditionII, SexticCheck, SingularityCheck, Verdict,
};
pub use milnor::{
    classify, cubic_discriminant, milnor_number, mpoly_from_base, mpoly_from_wpoly, singularity_type,
    truncated_colength, MPoly, MilnorError, SingularityType, DEFAULT_TRUNCATION,
};
pub use pipeline::{
    expected_hilbert, fibre_locations, run_on_text, run_pipeline, ErrorKind, FibreChecks, OutputFormat, ParityRow,
    PipelineConfig, PipelineError, PipelineResults, MAX_CHECK_DEGREE, SIGMA_DEGREE, TORSION_DEGREES,
};
pub use report::{emit_report, report_json, report_text, SCHEMA_VERSION};
pub use sextic::{check_reduced, pencil_restriction, ReducedCheck};
