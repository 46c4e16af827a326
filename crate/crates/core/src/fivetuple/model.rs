use std::fmt;

use thiserror::Error;

use crate::exact_ring::{smith_normal_form, BasePoly, PolyMatrix, Rational, SmithDecomposition, WPoly};

/// Basis of `Sym^2 E_1`, in the order used by every `sigma2` matrix.
pub const SYM2_BASIS: [&str; 6] = ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"];

/// Local form of a 5-tuple on an affine chart of the base curve.
///
/// Column `k` of `sigma2` is the image of the `k`-th element of
/// [`SYM2_BASIS`] in the chosen basis `e_1..e_6` of `E_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveTuple {
    pub sigma2: PolyMatrix,
    pub e3_twist: i64,
    pub beta: WPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauPoint {
    pub location: Rational,
    pub multiplicity: u32,
}

/// Effective divisor on the chart, `sum multiplicity * [location]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TauDivisor {
    pub points: Vec<TauPoint>,
    pub degree: usize,
}

impl TauDivisor {
    pub fn is_empty(&self) -> bool {
        self.degree == 0
    }

    pub fn multiplicity_at(&self, c: &Rational) -> u32 {
        self.points.iter().find(|p| &p.location == c).map_or(0, |p| p.multiplicity)
    }

    pub fn contains(&self, c: &Rational) -> bool {
        self.multiplicity_at(c) > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TauError {
    #[error("sigma2 is not injective (determinant vanishes identically)")]
    Singular,
    #[error("cokernel of sigma2 is not cyclic: invariant factors {}", fmt_factors(.factors))]
    NonCyclicCokernel { factors: Vec<BasePoly> },
    #[error("tau has degree {degree} but {irrational} has no rational roots")]
    IrrationalLocus { degree: usize, rational: TauDivisor, irrational: BasePoly },
}

fn fmt_factors(f: &[BasePoly]) -> String {
    let v: Vec<String> = f.iter().map(|p| p.to_string()).collect();
    format!("[{}]", v.join(", "))
}

/// Reads `tau` off the Smith form of `sigma2`.
pub fn compute_tau(sigma2: &PolyMatrix) -> Result<TauDivisor, TauError> {
    compute_tau_from(&smith_normal_form(sigma2))
}

pub fn compute_tau_from(smith: &SmithDecomposition) -> Result<TauDivisor, TauError> {
    tau_from_factors(&smith.invariant_factors, smith.d.rows())
}

pub(crate) fn tau_from_factors(factors: &[BasePoly], n: usize) -> Result<TauDivisor, TauError> {
    if factors.len() < n {
        return Err(TauError::Singular);
    }
    let (last, head) = factors.split_last().expect("nonempty");
    if head.iter().any(|d| !d.is_unit()) {
        return Err(TauError::NonCyclicCokernel { factors: factors.to_vec() });
    }
    let degree = last.degree().unwrap_or(0);
    let (roots, rest) = last.rational_roots();
    let points: Vec<TauPoint> =
        roots.into_iter().map(|(location, multiplicity)| TauPoint { location, multiplicity }).collect();
    let rational = TauDivisor { degree: points.iter().map(|p| p.multiplicity as usize).sum(), points };
    if rest.is_constant() {
        Ok(rational)
    } else {
        Err(TauError::IrrationalLocus { degree, rational, irrational: rest.monic() })
    }
}

/// One finding of [`super::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub(crate) fn push(&mut self, code: &'static str, message: impl Into<String>) {
        self.violations.push(Violation { code, message: message.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", v.code, v.message)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::int;

    fn p(c: &[i64]) -> BasePoly {
        BasePoly::from_ints(c)
    }

    fn diag(last: BasePoly) -> PolyMatrix {
        let mut d = vec![BasePoly::one(); 5];
        d.push(last);
        PolyMatrix::diagonal(&d)
    }

    #[test]
    fn tau_examples() {
        assert_eq!(compute_tau(&PolyMatrix::identity(6)).unwrap(), TauDivisor::default());
        let tau = compute_tau(&diag(p(&[0, 1]))).unwrap();
        assert_eq!(tau.points, vec![TauPoint { location: int(0), multiplicity: 1 }]);
        assert_eq!(tau.degree, 1);
        // t^2 (t - 1)
        let tau = compute_tau(&diag(p(&[0, 0, -1, 1]))).unwrap();
        assert_eq!(
            tau.points,
            vec![TauPoint { location: int(0), multiplicity: 2 }, TauPoint { location: int(1), multiplicity: 1 }]
        );
        assert_eq!(tau.degree, 3);
    }

    #[test]
    fn tau_errors() {
        let mut d = vec![BasePoly::one(); 4];
        d.extend([p(&[0, 1]), p(&[0, 1])]);
        assert!(matches!(compute_tau(&PolyMatrix::diagonal(&d)), Err(TauError::NonCyclicCokernel { .. })));
        match compute_tau(&diag(p(&[0, 1, 0, 2]))) {
            Err(TauError::IrrationalLocus { degree, rational, irrational }) => {
                assert_eq!(degree, 3);
                assert_eq!(rational.degree, 1);
                assert_eq!(irrational, p(&[1, 0, 2]).monic());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(compute_tau(&PolyMatrix::zeros(6, 6)), Err(TauError::Singular));
    }
}
