//! The maps of the two presentations of the even and odd parts:
//!
//! `(*)  Sym^2(L2 E1) (x) Sym^(n-2) E2 --i_n--> Sym^n E2 --> A_2n --> 0`
//! `(**) E1 (x) L2 E1 (x) A_(2n-2) --j_n--> E1 (x) A_2n --> A_(2n+1) --> 0`
//!
//! where `L2` is the second exterior power.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::graded::GradedPiece;
use super::presentation::{sym2_index, GradedPresentation};
use crate::exact_ring::linalg;
use crate::exact_ring::wpoly::{exp_add, var_exp};
use crate::exact_ring::{BasePoly, PolyMatrix, Rational, Var, WPoly};

/// Dense matrix over `Q`, row major.
pub type QMatrix = Vec<Vec<Rational>>;

/// `x_i ^ x_j` basis of the second exterior power of `E_1`.
pub const WEDGES: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub type E2Exp = [u32; 6];

/// Monomials of degree `d` in the six frame elements, largest first.
pub fn e2_monomials(d: u32) -> Vec<E2Exp> {
    fn rec(i: usize, left: u32, cur: &mut E2Exp, out: &mut Vec<E2Exp>) {
        if i == 5 {
            cur[5] = left;
            out.push(*cur);
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut [0; 6], &mut out);
    out
}

type EPoly = BTreeMap<E2Exp, BasePoly>;

fn sigma2_in_frame(pres: &GradedPresentation, i: usize, k: usize) -> EPoly {
    let f = pres.frame.as_ref().expect("presentation derived from a 5-tuple");
    let col = sym2_index(i, k);
    let mut out = EPoly::new();
    for j in 0..6 {
        let c = &f.matrix[(j, col)];
        if !c.is_zero() {
            let mut e = [0; 6];
            e[j] = 1;
            out.insert(e, c.clone());
        }
    }
    out
}

fn emul(a: &EPoly, b: &EPoly) -> EPoly {
    let mut out = EPoly::new();
    for (x, p) in a {
        for (y, q) in b {
            let mut e = *x;
            for i in 0..6 {
                e[i] += y[i];
            }
            let v = out.remove(&e).unwrap_or_else(BasePoly::zero) + p * q;
            if !v.is_zero() {
                out.insert(e, v);
            }
        }
    }
    out
}

fn esub(a: &EPoly, b: &EPoly) -> EPoly {
    let mut out = a.clone();
    for (e, q) in b {
        let v = out.remove(e).unwrap_or_else(BasePoly::zero) - q.clone();
        if !v.is_zero() {
            out.insert(*e, v);
        }
    }
    out
}

/// Source basis of `i_n`: pairs of wedges `a <= b` times a monomial `r`.
pub fn i_n_source(n: u32) -> Vec<(usize, usize, E2Exp)> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in a..3 {
            for r in e2_monomials(n - 2) {
                out.push((a, b, r));
            }
        }
    }
    out
}

/// Matrix of `i_n` over `Q[t]`; rows follow [`e2_monomials`]`(n)`, columns
/// follow [`i_n_source`]`(n)`.
pub fn map_i_n(pres: &GradedPresentation, n: u32) -> PolyMatrix {
    assert!(n >= 2, "i_n needs n >= 2");
    let target = e2_monomials(n);
    let index: BTreeMap<E2Exp, usize> = target.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let source = i_n_source(n);
    let mut m = PolyMatrix::zeros(target.len(), source.len());
    for (col, (a, b, r)) in source.iter().enumerate() {
        let (i, j) = WEDGES[*a];
        let (k, l) = WEDGES[*b];
        let first = emul(&sigma2_in_frame(pres, i, k), &sigma2_in_frame(pres, j, l));
        let second = emul(&sigma2_in_frame(pres, i, l), &sigma2_in_frame(pres, j, k));
        let mut rr = EPoly::new();
        rr.insert(*r, BasePoly::one());
        for (e, c) in emul(&esub(&first, &second), &rr) {
            m[(index[&e], col)] = c;
        }
    }
    m
}

fn frame_image_product(pres: &GradedPresentation, e: &E2Exp) -> WPoly {
    let f = pres.frame.as_ref().expect("presentation derived from a 5-tuple");
    let mut p = WPoly::one();
    for (j, &k) in e.iter().enumerate() {
        if k > 0 {
            p = &p * &f.images[j].pow(k);
        }
    }
    p
}

/// `Sym^n E_2 -> A_2n` at `t = c`; rows are the basis of `A_2n`.
pub fn projection_sym(pres: &GradedPresentation, n: u32, c: &Rational) -> QMatrix {
    let piece = GradedPiece::<Rational>::new(pres, 2 * n, Some(c));
    let cols: Vec<Vec<Rational>> =
        e2_monomials(n).iter().map(|e| piece.coords(&frame_image_product(pres, e))).collect();
    transpose(&cols, piece.dim())
}

/// Source basis of `j_n`: `(l, wedge, r)` with `r` a basis monomial of `A_(2n-2)`.
fn j_n_source(pres: &GradedPresentation, n: u32, c: &Rational) -> Vec<(usize, usize, WPoly)> {
    let piece = GradedPiece::<Rational>::new(pres, 2 * n - 2, Some(c));
    let mut out = Vec::new();
    for l in 0..3 {
        for w in 0..3 {
            for r in piece.basis() {
                out.push((l, w, WPoly::term(BasePoly::one(), r)));
            }
        }
    }
    out
}

fn x(i: usize) -> WPoly {
    WPoly::var(Var::XS[i])
}

/// Matrix of `j_n` at `t = c`. Rows are `E_1 (x) A_2n` ordered as
/// `(x_k, basis monomial)`.
pub fn map_j_n(pres: &GradedPresentation, n: u32, c: &Rational) -> QMatrix {
    assert!(n >= 1, "j_n needs n >= 1");
    let target = GradedPiece::<Rational>::new(pres, 2 * n, Some(c));
    let d = target.dim();
    let mut cols = Vec::new();
    for (l, w, r) in j_n_source(pres, n, c) {
        let (i, j) = WEDGES[w];
        let mut col = vec![Rational::zero(); 3 * d];
        // x_i (x) sigma2(x_j l) r - x_j (x) sigma2(x_i l) r
        for (slot, other, sign) in [(i, j, 1i64), (j, i, -1)] {
            let v = target.coords(&(&(&x(other) * &x(l)) * &r));
            for (k, val) in v.into_iter().enumerate() {
                col[slot * d + k] += val * Rational::from_integer(sign.into());
            }
        }
        cols.push(col);
    }
    transpose(&cols, 3 * d)
}

/// `E_1 (x) A_2n -> A_(2n+1)` at `t = c`.
pub fn projection_e1(pres: &GradedPresentation, n: u32, c: &Rational) -> QMatrix {
    let middle = GradedPiece::<Rational>::new(pres, 2 * n, Some(c));
    let target = GradedPiece::<Rational>::new(pres, 2 * n + 1, Some(c));
    let mut cols = Vec::new();
    for k in 0..3 {
        for m in middle.basis() {
            cols.push(target.coords(&WPoly::term(BasePoly::one(), exp_add(&m, &var_exp(Var::XS[k])))));
        }
    }
    transpose(&cols, target.dim())
}

fn transpose(cols: &[Vec<Rational>], nrows: usize) -> QMatrix {
    (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

pub fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let ncols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..ncols)
                .map(|j| {
                    let mut s = Rational::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn is_zero_matrix(m: &QMatrix) -> bool {
    m.iter().all(|r| r.iter().all(|v| v.is_zero()))
}

/// Ranks around the middle term of one of the two sequences at a fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessCheck {
    pub sequence: &'static str,
    pub n: u32,
    pub location: Rational,
    pub source_dim: usize,
    pub middle_dim: usize,
    pub target_dim: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    pub is_complex: bool,
    pub surjective: bool,
}

impl ExactnessCheck {
    pub fn exact_in_middle(&self) -> bool {
        self.is_complex && self.surjective && self.image_rank == self.kernel_dim
    }

    pub fn injective(&self) -> bool {
        self.image_rank == self.source_dim
    }
}

fn assemble(sequence: &'static str, n: u32, c: &Rational, map: &QMatrix, proj: &QMatrix, source_dim: usize) -> ExactnessCheck {
    let middle_dim = map.len();
    let target_dim = proj.len();
    let proj_rank = linalg::rank(proj);
    ExactnessCheck {
        sequence,
        n,
        location: c.clone(),
        source_dim,
        middle_dim,
        target_dim,
        image_rank: linalg::rank(map),
        kernel_dim: middle_dim - proj_rank,
        is_complex: is_zero_matrix(&q_mul(proj, map)),
        surjective: proj_rank == target_dim,
    }
}

/// Sequence `(*)` at `t = c`.
pub fn check_star(pres: &GradedPresentation, n: u32, c: &Rational) -> ExactnessCheck {
    let i = map_i_n(pres, n).eval(c);
    let p = projection_sym(pres, n, c);
    assemble("*", n, c, &i, &p, i_n_source(n).len())
}

/// Sequence `(**)` at `t = c`.
pub fn check_star_star(pres: &GradedPresentation, n: u32, c: &Rational) -> ExactnessCheck {
    let j = map_j_n(pres, n, c);
    let p = projection_e1(pres, n, c);
    let source_dim = j.first().map_or(0, |r| r.len());
    assemble("**", n, c, &j, &p, source_dim)
}
