//! Smith normal form over `Q[t]`.

use num_traits::{One, Zero};

use super::base_poly::BasePoly;
use super::matrix::PolyMatrix;

/// `u * m * v == d`, `d` diagonal with monic entries each dividing the next.
/// The inverses of `u` and `v` are tracked alongside so callers never need to
/// invert a polynomial matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: PolyMatrix,
    pub d: PolyMatrix,
    pub v: PolyMatrix,
    pub u_inv: PolyMatrix,
    pub v_inv: PolyMatrix,
    pub invariant_factors: Vec<BasePoly>,
}

struct State {
    a: PolyMatrix,
    u: PolyMatrix,
    u_inv: PolyMatrix,
    v: PolyMatrix,
    v_inv: PolyMatrix,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] -= f * row[src]
    fn row_axpy(&mut self, dst: usize, f: &BasePoly, src: usize) {
        self.a.row_axpy(dst, f, src);
        self.u.row_axpy(dst, f, src);
        self.u_inv.col_axpy(src, &-f, dst);
    }

    /// col[dst] -= f * col[src]
    fn col_axpy(&mut self, dst: usize, f: &BasePoly, src: usize) {
        self.a.col_axpy(dst, f, src);
        self.v.col_axpy(dst, f, src);
        self.v_inv.row_axpy(src, &-f, dst);
    }
}

/// Pivot of least degree, then least height, then first in row-major order.
fn choose_pivot(a: &PolyMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let p = &a[(i, j)];
            if p.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => p.pivot_cmp(&a[b]).is_lt(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &PolyMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut s = State {
        a: m.clone(),
        u: PolyMatrix::identity(r),
        u_inv: PolyMatrix::identity(r),
        v: PolyMatrix::identity(c),
        v_inv: PolyMatrix::identity(c),
    };
    let mut factors = Vec::new();
    for k in 0..r.min(c) {
        let Some((pi, pj)) = choose_pivot(&s.a, k) else { break };
        s.swap_rows(k, pi);
        s.swap_cols(k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..r {
                if s.a[(i, k)].is_zero() {
                    continue;
                }
                let (q, rem) = s.a[(i, k)].div_rem(&s.a[(k, k)]);
                s.row_axpy(i, &q, k);
                if !rem.is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..c {
                if s.a[(k, j)].is_zero() {
                    continue;
                }
                let (q, rem) = s.a[(k, j)].div_rem(&s.a[(k, k)]);
                s.col_axpy(j, &q, k);
                if !rem.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder of smaller degree survived; move it to the pivot
                let (pi, pj) = choose_pivot(&s.a, k).expect("nonzero remainder");
                s.swap_rows(k, pi);
                s.swap_cols(k, pj);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let bad = (k + 1..r)
                .flat_map(|i| (k + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !s.a[(k, k)].divides(&s.a[(i, j)]));
            match bad {
                Some((i, _)) => {
                    s.row_axpy(k, &-BasePoly::one(), i);
                }
                None => break,
            }
        }
        let lc = s.a[(k, k)].leading_coeff();
        if !lc.is_zero() && !lc.is_one() {
            let inv = lc.recip();
            s.a.scale_row(k, &inv);
            s.u.scale_row(k, &inv);
            // u_inv column k scales by lc
            for i in 0..r {
                s.u_inv[(i, k)] = s.u_inv[(i, k)].scale(&lc);
            }
        }
        factors.push(s.a[(k, k)].clone());
    }
    SmithDecomposition { u: s.u, d: s.a, v: s.v, u_inv: s.u_inv, v_inv: s.v_inv, invariant_factors: factors }
}

/// Multiplicities of `(t - c)` in each invariant factor, zeros dropped.
pub fn local_exponents(factors: &[BasePoly], c: &super::rational::Rational) -> Vec<u32> {
    let mut out: Vec<u32> = factors.iter().map(|d| d.valuation_at(c)).filter(|&e| e > 0).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> BasePoly {
        BasePoly::from_ints(c)
    }

    fn check(m: &PolyMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.det().is_unit() && s.v.det().is_unit());
        assert_eq!(s.u.mul(&s.u_inv), PolyMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), PolyMatrix::identity(m.cols()));
        for w in s.invariant_factors.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        s
    }

    #[test]
    fn already_diagonal() {
        let s = check(&PolyMatrix::diagonal(&[p(&[1]), p(&[0, 1])]));
        assert_eq!(s.invariant_factors, vec![p(&[1]), p(&[0, 1])]);
        let s = check(&PolyMatrix::diagonal(&[p(&[0, 1]), p(&[0, 1])]));
        assert_eq!(s.invariant_factors, vec![p(&[0, 1]), p(&[0, 1])]);
    }

    #[test]
    fn two_by_two() {
        // det = t^3 + t - t^2, minors gcd 1
        let m = PolyMatrix::from_rows(vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[0, 1, 0, 1])]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors, vec![p(&[1]), p(&[0, 1, -1, 1])]);
    }

    #[test]
    fn non_coprime_diagonal() {
        // diag(t, t - 1) has factors 1, t(t - 1)
        let s = check(&PolyMatrix::diagonal(&[p(&[0, 1]), p(&[-1, 1])]));
        assert_eq!(s.invariant_factors, vec![p(&[1]), p(&[0, -1, 1])]);
        // diag(t^2, t) reorders
        let s = check(&PolyMatrix::diagonal(&[p(&[0, 0, 1]), p(&[0, 1])]));
        assert_eq!(s.invariant_factors, vec![p(&[0, 1]), p(&[0, 0, 1])]);
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[0, 2]), p(&[1])],
            vec![p(&[0, 2]), p(&[0, 4]), p(&[2])],
        ]);
        let s = check(&m);
        assert_eq!(s.invariant_factors, vec![p(&[1])]);
        assert!(s.d[(1, 1)].is_zero());
    }
}
