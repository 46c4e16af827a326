use super::fibre::cone_coefficient;
use super::ralgebra::RAlgebra;
use crate::exact_ring::{BasePoly, Rational, WPoly};

/// Cone points over `supp tau` and the branch divisor `g6 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    /// `(location, r)` for every rational point of `tau`.
    pub p_points: Vec<(Rational, u32)>,
    /// `g6(0, 0, 0, 1)` at each rational point of `tau`.
    pub g6_at_cone: Vec<(Rational, Rational)>,
    /// No point of `tau`, rational or not, has a vanishing cone value:
    /// `gcd(d6, coefficient of y^3 in g6) = 1`.
    pub disjoint: bool,
    pub branch_class: WPoly,
    pub cone_coefficient: BasePoly,
}

impl BranchData {
    pub fn failing_locations(&self) -> Vec<Rational> {
        self.g6_at_cone.iter().filter(|(_, v)| num_traits::Zero::is_zero(v)).map(|(c, _)| c.clone()).collect()
    }
}

pub fn branch_data(r: &RAlgebra) -> BranchData {
    let cone = cone_coefficient(&r.g6);
    let p_points: Vec<(Rational, u32)> = r
        .tau()
        .map(|t| t.points.iter().map(|p| (p.location.clone(), p.multiplicity)).collect())
        .unwrap_or_default();
    let g6_at_cone = p_points.iter().map(|(c, _)| (c.clone(), cone.eval(c))).collect();
    let disjoint = r.d6().is_unit() || BasePoly::gcd(r.d6(), &cone).is_unit();
    BranchData { p_points, g6_at_cone, disjoint, branch_class: r.g6.clone(), cone_coefficient: cone }
}
