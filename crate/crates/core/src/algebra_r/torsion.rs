//! Cokernels of `sigma_n: Sym^n E_1 -> A_n`.
//!
//! `A_n` is free on the monomials of degree `n` in `x, y` modulo the
//! multiples `m * f2`. Killing the pure `x` monomials (the image of
//! `sigma_n`) leaves a square presentation: rows are monomials containing
//! `y`, columns are `m * f2` for `m` of degree `n - 2`.

use std::collections::HashMap;

use super::ralgebra::RAlgebra;
use crate::exact_ring::smith::local_exponents;
use crate::exact_ring::wpoly::{exp_add, monomials_of_degree};
use crate::exact_ring::{smith_normal_form, BasePoly, PolyMatrix, Rational, Var};

pub fn torsion_presentation(r: &RAlgebra, n: u32) -> PolyMatrix {
    let f2 = r.base.f2().expect("built from a 5-tuple");
    let gens = [Var::X1, Var::X2, Var::X3, Var::Y];
    let rows: Vec<_> = monomials_of_degree(n, &gens).into_iter().filter(|e| e[3] > 0).collect();
    let index: HashMap<_, _> = rows.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let cols = if n >= 2 { monomials_of_degree(n - 2, &gens) } else { vec![] };
    let mut m = PolyMatrix::zeros(rows.len(), cols.len());
    for (j, mono) in cols.iter().enumerate() {
        for (e, c) in f2.terms() {
            if let Some(&i) = index.get(&exp_add(e, mono)) {
                m[(i, j)] = &m[(i, j)] + c;
            }
        }
    }
    m
}

/// Exponents `i * r` with multiplicity `4(m - i) + 1` in degree `2m` and
/// `4(m - i) + 3` in degree `2m + 1`, ascending.
pub fn predicted_exponents(n: u32, r: u32) -> Vec<u32> {
    let (m, extra) = (n / 2, if n.is_multiple_of(2) { 1 } else { 3 });
    let mut out = Vec::new();
    for i in 1..=m {
        for _ in 0..4 * (m - i) + extra {
            out.push(i * r);
        }
    }
    out.sort_unstable();
    out
}

/// `(t - c)^e` written in the local coordinate at `c`.
pub fn local_factor_string(c: &Rational, e: u32) -> String {
    let base = if num_traits::Zero::is_zero(c) { "t".to_string() } else { format!("({})", BasePoly::linear_root(c)) };
    match e {
        0 => "1".to_string(),
        1 => base,
        _ => format!("{base}^{e}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTorsion {
    pub location: Rational,
    pub multiplicity: u32,
    pub computed: Vec<u32>,
    pub expected: Vec<u32>,
}

impl PointTorsion {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }

    pub fn computed_strings(&self) -> Vec<String> {
        self.computed.iter().map(|&e| local_factor_string(&self.location, e)).collect()
    }

    pub fn expected_strings(&self) -> Vec<String> {
        self.expected.iter().map(|&e| local_factor_string(&self.location, e)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub degree_n: u32,
    pub per_point: Vec<PointTorsion>,
    /// Nonunit invariant factors over `Q[t]`.
    pub invariant_factors: Vec<BasePoly>,
    /// Powers `d6^i` with the predicted multiplicities.
    pub expected_factors: Vec<BasePoly>,
}

impl TorsionReport {
    /// Global agreement; covers irrational points of `tau` too.
    pub fn matches(&self) -> bool {
        self.invariant_factors == self.expected_factors && self.per_point.iter().all(|p| p.matches())
    }

    pub fn length(&self) -> usize {
        self.invariant_factors.iter().map(|f| f.degree().unwrap_or(0)).sum()
    }
}

pub fn torsion_decomposition(r: &RAlgebra, n: u32) -> TorsionReport {
    let m = torsion_presentation(r, n);
    let factors: Vec<BasePoly> = if m.rows() == 0 {
        vec![]
    } else {
        smith_normal_form(&m).invariant_factors.into_iter().filter(|f| !f.is_unit()).collect()
    };
    let d6 = r.d6();
    let expected_factors: Vec<BasePoly> = if d6.is_unit() {
        vec![]
    } else {
        predicted_exponents(n, 1).into_iter().map(|i| d6.pow(i)).collect()
    };
    let per_point = r
        .tau()
        .map(|tau| {
            tau.points
                .iter()
                .map(|p| PointTorsion {
                    location: p.location.clone(),
                    multiplicity: p.multiplicity,
                    computed: local_exponents(&factors, &p.location),
                    expected: predicted_exponents(n, p.multiplicity),
                })
                .collect()
        })
        .unwrap_or_default();
    TorsionReport { degree_n: n, per_point, invariant_factors: factors, expected_factors }
}
