use super::ralgebra::RAlgebra;
use crate::algebra_a::{GradedPiece, GradedPresentation};
use crate::exact_ring::linalg;
use crate::exact_ring::wpoly::monomials_of_degree;
use crate::exact_ring::{BasePoly, Exp, RatFunc, Rational, Var, WPoly};

/// Degree `n` basis of `R` split into `(+1, -1)` eigenspaces of the
/// involution, which acts by `(-1)^(x-degree)`. `at = None` works over
/// `Q(t)`.
pub fn parity_split(r: &RAlgebra, n: u32, at: Option<&Rational>) -> (Vec<Exp>, Vec<Exp>) {
    split(&r.presentation(), n, at)
}

pub fn split(pres: &GradedPresentation, n: u32, at: Option<&Rational>) -> (Vec<Exp>, Vec<Exp>) {
    match at {
        Some(c) => GradedPiece::<Rational>::new(pres, n, Some(c)).parity_split(),
        None => GradedPiece::<RatFunc>::new(pres, n, None).parity_split(),
    }
}

/// Ranks of `E_n^+` and `E_n^-`.
pub fn expected_parity_ranks(n: u32) -> (usize, usize) {
    let n = n as usize;
    let big = (n + 1) * (n + 2) / 2;
    let small = if n == 0 { 0 } else { (n - 1) * (n.saturating_sub(2)) / 2 };
    if n.is_multiple_of(2) {
        (big, small)
    } else {
        (small, big)
    }
}

/// `(rank, number of x-monomials)` of `sigma_n` at `t = c`.
pub fn sigma_n_rank(r: &RAlgebra, n: u32, c: &Rational) -> (usize, usize) {
    let piece = GradedPiece::<Rational>::new(&r.base, n, Some(c));
    let rows: Vec<Vec<Rational>> = monomials_of_degree(n, &Var::XS)
        .into_iter()
        .map(|e| piece.coords(&WPoly::term(BasePoly::one(), e)))
        .collect();
    (linalg::rank(&rows), rows.len())
}
