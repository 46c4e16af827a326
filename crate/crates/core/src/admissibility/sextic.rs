//! Reducedness of a plane curve `f(x1, x2, x3) = 0` with rational
//! coefficients.
//!
//! For each coordinate point `e_j`, the pencil of lines through it is
//! `x_k = l * x_m`, parametrized by `x_j = s, x_m = 1`. Over `Q(l)` the
//! restriction `p(s)` is the restriction to a generic line of the pencil.
//! A repeated component `g^2` makes `p` non-squarefree in at least one
//! pencil, since no line passes through all three coordinate points; a
//! reduced curve meets the generic line of each pencil transversally away
//! from `e_j`. So the curve is reduced iff all three `p` are squarefree.

use crate::exact_ring::{BasePoly, Field, RatFunc, WPoly};

type UPoly<F> = Vec<F>;

fn trim<F: Field>(mut p: UPoly<F>) -> UPoly<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem<F: Field>(a: &UPoly<F>, b: &UPoly<F>) -> UPoly<F> {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let f = r.last().unwrap().div(&lead);
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&f.mul(c));
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Degree of `gcd(a, b)`, `None` when both vanish.
fn gcd_degree<F: Field>(a: UPoly<F>, b: UPoly<F>) -> Option<usize> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

fn derivative<F: Field>(p: &UPoly<F>) -> UPoly<F> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| {
            let mut acc = F::zero();
            for _ in 0..k {
                acc = acc.add(c);
            }
            acc
        })
        .collect()
}

/// Restriction of `f` to the generic line of the pencil through `e_j`, as
/// a polynomial in `s` over `Q(l)`.
pub fn pencil_restriction(f: &WPoly, j: usize) -> Vec<RatFunc> {
    let k = (j + 1) % 3;
    let mut coeffs: Vec<BasePoly> = Vec::new();
    for (e, c) in f.terms() {
        assert!(c.is_constant() && e[3] == 0 && e[4] == 0, "plane curve with rational coefficients expected");
        let deg = e[j] as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BasePoly::zero());
        }
        let term = BasePoly::monomial(c.constant_term(), e[k] as usize);
        coeffs[deg] = &coeffs[deg] + &term;
    }
    trim(coeffs.into_iter().map(RatFunc::from_poly).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCheck {
    /// `true` per pencil when the restriction is squarefree.
    pub pencils: [bool; 3],
}

impl ReducedCheck {
    pub fn reduced(&self) -> bool {
        self.pencils.iter().all(|&b| b)
    }
}

pub fn check_reduced(f: &WPoly) -> ReducedCheck {
    let pencils = std::array::from_fn(|j| {
        if f.is_zero() {
            return false;
        }
        let p = pencil_restriction(f, j);
        let dp = derivative(&p);
        gcd_degree(p, dp).is_some_and(|d| d == 0)
    });
    ReducedCheck { pencils }
}
