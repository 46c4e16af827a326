//! Admissibility: condition (i) exactly, condition (ii) through two
//! computable proxies (singularity type at the cone points, reducedness of
//! sampled branch sextics).

use num_traits::Zero;

use super::milnor::{mpoly_from_wpoly, singularity_type, MPoly, SingularityType};
use super::sextic::check_reduced;
use crate::algebra_r::{branch_data, fibre_at, BranchData, RAlgebra};
use crate::exact_ring::{int, BasePoly, Rational, Var, WPoly};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionI {
    Pass,
    Fail { locations: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionII {
    PassPartial,
    Fail { reason: String, locations: Vec<String> },
    Undetermined { reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Admissible,
    NotAdmissible,
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Admissible => "admissible",
            Verdict::NotAdmissible => "not_admissible",
            Verdict::Undetermined => "undetermined",
        }
    }
}

/// Singularity of the general section of `O(1)` at a cone point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityCheck {
    pub location: Rational,
    pub r: u32,
    /// Type claimed for the model, `A_r`.
    pub claimed_type: String,
    /// Type of the local equation `q(x, c + s) - d6(c + s)` cut by a
    /// general plane through the cone point: `A_(r-1)`.
    pub predicted: SingularityType,
    pub computed: SingularityType,
    pub milnor_number: Option<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticCheck {
    pub location: Rational,
    pub reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub condition_i: ConditionI,
    pub condition_ii: ConditionII,
    pub singularity_types: Vec<SingularityCheck>,
    pub sextic_checks: Vec<SexticCheck>,
    /// Factor of `d6` without rational roots; its points are not typed.
    pub unresolved_tau: Option<BasePoly>,
    pub verdict: Verdict,
    pub branch: BranchData,
}

/// Planes `x_k = a x_p + b x_q` through the cone point, `p < q` the other
/// two indices. The least Milnor number over these is taken as the general
/// one.
const PLANES: [(usize, i64, i64); 5] = [(2, 1, 2), (1, 2, -1), (0, 1, 3), (2, 3, -2), (0, -2, 5)];

/// `f2(x, y = 1, t = c + s)` in `(x1, x2, x3, s)`.
pub fn cone_point_model(r: &RAlgebra, c: &Rational) -> MPoly {
    let f2 = r.base.f2().expect("built from a 5-tuple");
    let local = f2.shift_base(c).substitute_var(Var::Y, &WPoly::one());
    mpoly_from_wpoly(&local, &Var::XS, true)
}

fn plane_section(f: &MPoly, (k, a, b): (usize, i64, i64)) -> MPoly {
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let u = MPoly::var(3, 0);
    let v = MPoly::var(3, 1);
    let mut images = vec![MPoly::zero(3); 4];
    images[others[0]] = u.clone();
    images[others[1]] = v.clone();
    images[k] = u.scale(&int(a)).add(&v.scale(&int(b)));
    images[3] = MPoly::var(3, 2);
    f.substitute(&images)
}

pub fn cone_point_singularity(r: &RAlgebra, c: &Rational, mult: u32, truncation: u32) -> SingularityCheck {
    let model = cone_point_model(r, c);
    let sections: Vec<MPoly> = PLANES.iter().map(|&p| plane_section(&model, p)).collect();
    let typed: Vec<(Option<usize>, SingularityType)> =
        sections.iter().map(|s| singularity_type(s, truncation)).collect();
    let (mu, computed) = typed
        .iter()
        .filter(|(mu, _)| mu.is_some())
        .min_by_key(|(mu, _)| *mu)
        .cloned()
        .unwrap_or((None, SingularityType::NotIsolated));
    let predicted = SingularityType::a(mult.saturating_sub(1));
    SingularityCheck {
        location: c.clone(),
        r: mult,
        claimed_type: format!("A_{mult}"),
        predicted,
        computed,
        milnor_number: mu,
        agrees: computed == predicted,
    }
}

/// Sample points off `tau`, sorted and deduplicated.
pub fn hyperelliptic_samples(r: &RAlgebra, samples: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = samples.iter().filter(|c| !r.d6().eval(c).is_zero()).cloned().collect();
    out.sort();
    out.dedup();
    out
}

pub fn check_admissibility(r: &RAlgebra, samples: &[Rational], truncation: u32) -> AdmissibilityReport {
    let branch = branch_data(r);
    let condition_i = if branch.disjoint {
        ConditionI::Pass
    } else {
        let mut locations: Vec<String> = branch.failing_locations().iter().map(|c| c.to_string()).collect();
        let common = BasePoly::gcd(r.d6(), &branch.cone_coefficient);
        let (_, rest) = common.rational_roots();
        if !rest.is_unit() {
            locations.push(format!("roots of {rest}"));
        }
        ConditionI::Fail { locations }
    };

    let (_, rest) = r.d6().rational_roots();
    let unresolved_tau = (!r.d6().is_unit() && !rest.is_unit()).then_some(rest);
    let singularity_types: Vec<SingularityCheck> =
        par::map(&branch.p_points, |(c, m)| cone_point_singularity(r, c, *m, truncation));

    let hyper = hyperelliptic_samples(r, samples);
    let sextic_checks: Vec<SexticCheck> = par::map(&hyper, |c| {
        let fibre = fibre_at(r, c);
        let sextic = fibre.sextic.expect("off tau the fibre is hyperelliptic");
        SexticCheck { location: c.clone(), reduced: check_reduced(&sextic).reduced() }
    });

    let non_reduced: Vec<String> =
        sextic_checks.iter().filter(|s| !s.reduced).map(|s| s.location.to_string()).collect();
    let untyped: Vec<String> = singularity_types
        .iter()
        .filter(|s| !s.computed.is_rational_double_point())
        .map(|s| format!("{} ({})", s.location, s.computed))
        .collect();
    let condition_ii = if !non_reduced.is_empty() {
        ConditionII::Fail { reason: "branch sextic is not reduced".into(), locations: non_reduced }
    } else if !untyped.is_empty() {
        ConditionII::Undetermined {
            reason: format!("cone point section is not a rational double point at {}", untyped.join(", ")),
        }
    } else if let Some(rest) = &unresolved_tau {
        ConditionII::Undetermined { reason: format!("cone points over the roots of {rest} are not typed") }
    } else {
        ConditionII::PassPartial
    };

    let verdict = match (&condition_i, &condition_ii) {
        (ConditionI::Fail { .. }, _) | (_, ConditionII::Fail { .. }) => Verdict::NotAdmissible,
        (ConditionI::Pass, ConditionII::PassPartial) => Verdict::Admissible,
        _ => Verdict::Undetermined,
    };
    AdmissibilityReport { condition_i, condition_ii, singularity_types, sextic_checks, unresolved_tau, verdict, branch }
}
