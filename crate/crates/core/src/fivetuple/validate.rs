use super::model::{tau_from_factors, FiveTuple, TauError, ValidationReport};
use crate::exact_ring::{smith_normal_form, Var};

/// Collects every reason the tuple cannot be turned into an algebra.
/// An empty report means `compute_tau`, `derive_presentation` and `build_r`
/// all succeed.
pub fn validate(tuple: &FiveTuple) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (r, c) = (tuple.sigma2.rows(), tuple.sigma2.cols());
    if (r, c) != (6, 6) {
        report.push("sigma2_shape", format!("sigma2 must be 6×6, got {r}×{c}"));
        return report;
    }
    let smith = smith_normal_form(&tuple.sigma2);
    match tau_from_factors(&smith.invariant_factors, 6) {
        Err(TauError::Singular) => {
            report.push("sigma2_not_injective", "sigma2 not injective: its determinant vanishes identically")
        }
        Err(e @ TauError::NonCyclicCokernel { .. }) => report.push("cokernel_not_cyclic", format!("cokernel not cyclic: {e}")),
        // irrational support only degrades point-wise reporting
        Err(TauError::IrrationalLocus { .. }) | Ok(_) => {}
    }
    let beta = &tuple.beta;
    if beta.is_zero() {
        report.push("beta_zero", "beta is identically zero");
    } else {
        if beta.involves(Var::Z) {
            report.push("beta_involves_z", "beta must not involve z");
        }
        if beta.homogeneous_degree() != Some(6) {
            report.push("beta_not_homogeneous", "beta must be weighted-homogeneous of degree 6");
        }
    }
    if report.is_empty() {
        crate::algebra_r::construction_violations(tuple, &mut report);
    }
    report
}
