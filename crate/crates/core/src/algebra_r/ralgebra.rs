use thiserror::Error;

use crate::algebra_a::{derive_presentation, GradedPiece, GradedPresentation};
use crate::exact_ring::{BasePoly, RatFunc, Var, WPoly};
use crate::fivetuple::{FiveTuple, TauDivisor, TauError, ValidationReport};

use super::fibre::quadric_rank;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Tau(#[from] TauError),
    #[error("beta lies in the ideal of the degree 2 relation, so z^2 = 0 on every fibre")]
    BetaDegenerate,
}

/// `A (+) z A` with `z` of weight 3 and `z^2 = g6`.
#[derive(Clone, Debug)]
pub struct RAlgebra {
    pub base: GradedPresentation,
    pub z_weight: u32,
    pub g6: WPoly,
    pub e3_twist: i64,
}

impl RAlgebra {
    pub fn presentation(&self) -> GradedPresentation {
        let z = WPoly::var(Var::Z);
        self.base.extend(Var::Z, &(&z * &z) - &self.g6)
    }

    pub fn relations(&self) -> Vec<WPoly> {
        self.presentation().relations
    }

    pub fn d6(&self) -> &BasePoly {
        &self.base.frame.as_ref().expect("built from a 5-tuple").d6
    }

    /// Rational part of `tau`; `None` when some of it is irrational.
    pub fn tau(&self) -> Option<&TauDivisor> {
        self.base.tau.as_ref()
    }

    pub fn tau_degree(&self) -> usize {
        self.d6().degree().unwrap_or(0)
    }
}

/// Normal form of `beta` in the presentation: `y` is substituted away when
/// it was eliminated, otherwise terms divisible by the leading monomial of
/// `f2` are reduced while its leading coefficient is a unit.
pub fn reduce_beta(beta: &WPoly, base: &GradedPresentation) -> WPoly {
    let frame = base.frame.as_ref().expect("built from a 5-tuple");
    if base.eliminates_y() {
        return beta.substitute_var(Var::Y, &frame.quadric);
    }
    let f2 = base.f2().expect("frame present");
    let (lm, lc) = f2.leading().expect("f2 is nonzero");
    if !lc.is_unit() {
        return beta.clone();
    }
    let inv = lc.leading_coeff().recip();
    let mut p = beta.clone();
    loop {
        let hit = p
            .sorted_terms()
            .into_iter()
            .find(|(e, _)| (0..5).all(|i| e[i] >= lm[i]));
        let Some((e, c)) = hit else { return p };
        let mut m = e;
        for i in 0..5 {
            m[i] -= lm[i];
        }
        let q = WPoly::term(c.scale(&inv), m);
        p = &p - &(&q * &f2);
    }
}

pub fn build_r(tuple: &FiveTuple) -> Result<RAlgebra, BuildError> {
    let base = derive_presentation(tuple)?;
    let g6 = reduce_beta(&tuple.beta, &base);
    let degenerate = if base.eliminates_y() {
        g6.is_zero()
    } else {
        GradedPiece::<RatFunc>::new(&base, 6, None).is_zero(&g6)
    };
    if degenerate {
        return Err(BuildError::BetaDegenerate);
    }
    Ok(RAlgebra { base, z_weight: 3, g6, e3_twist: tuple.e3_twist })
}

/// Checks that need the constructed algebra; called by `validate` once the
/// shape checks pass.
pub fn construction_violations(tuple: &FiveTuple, report: &mut ValidationReport) {
    let r = match build_r(tuple) {
        Ok(r) => r,
        Err(BuildError::BetaDegenerate) => {
            report.push("beta_degenerate", "beta is a multiple of the degree 2 relation");
            return;
        }
        Err(BuildError::Tau(e)) => {
            report.push("cokernel_not_cyclic", e.to_string());
            return;
        }
    };
    let quadric = &r.base.frame.as_ref().expect("frame").quadric;
    if let Some(tau) = r.tau() {
        for p in &tau.points {
            let rank = quadric_rank(&quadric.evaluate_base(&p.location));
            if rank < 2 {
                report.push(
                    "quadric_degenerate",
                    format!("the fibre quadric at t = {} has rank {rank} < 2", p.location),
                );
            }
        }
    }
}
