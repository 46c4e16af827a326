use num_traits::{One, Zero};

use super::ralgebra::RAlgebra;
use crate::algebra_a::{FibreType, GradedPresentation, UnigonalParams};
use crate::exact_ring::linalg;
use crate::exact_ring::rational::rational_sqrt;
use crate::exact_ring::{BasePoly, Rational, Var, WPoly};

pub type Mat3 = [[Rational; 3]; 3];

fn identity3() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() }))
}

fn mul3(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Rational::zero(), |s, k| s + &a[i][k] * &b[k][j]))
    })
}

fn transpose3(a: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

/// Symmetric Gram matrix of a quadric in `x1, x2, x3` with rational
/// coefficients: `q(x) = x^T A x`.
pub fn quadric_matrix(q: &WPoly) -> Mat3 {
    let mut a: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    let half = Rational::new(1.into(), 2.into());
    for (e, c) in q.terms() {
        assert!(c.is_constant(), "quadric must have rational coefficients");
        let c = c.constant_term();
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
        assert!(idx.len() == 2 && e[3] == 0 && e[4] == 0, "not a quadric in x1, x2, x3");
        if idx[0] == idx[1] {
            a[idx[0]][idx[0]] += c;
        } else {
            let h = &c * &half;
            a[idx[0]][idx[1]] += h.clone();
            a[idx[1]][idx[0]] += h;
        }
    }
    a
}

pub fn quadric_rank(q: &WPoly) -> usize {
    let a = quadric_matrix(q);
    linalg::rank(&a.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Linear substitution `x_old = S x_new` applied to a polynomial.
pub fn substitute_linear(p: &WPoly, s: &Mat3) -> WPoly {
    let mut images: [WPoly; 5] = std::array::from_fn(|i| WPoly::var(Var::ALL[i]));
    for (i, img) in images.iter_mut().take(3).enumerate() {
        let mut acc = WPoly::zero();
        for (j, c) in s[i].iter().enumerate() {
            acc = &acc + &WPoly::var(Var::XS[j]).scale_rational(c);
        }
        *img = acc;
    }
    p.substitute(&images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadricNormalization {
    /// `q(S x) = lambda * (x1^2 - x2 (a x2 + b x3))`.
    Normalized { lambda: Rational, a: Rational, b: Rational, s: Box<Mat3> },
    NeedsExtension,
    /// Rank at most one.
    Degenerate,
}

/// Brings a rational ternary quadric to `lambda (x1^2 - x2(a x2 + b x3))`
/// over `Q`.
pub fn normalize_quadric(q: &WPoly) -> QuadricNormalization {
    let mut a = quadric_matrix(q);
    let mut s = identity3();
    let apply = |a: &mut Mat3, s: &mut Mat3, t: Mat3| {
        *a = mul3(&mul3(&transpose3(&t), a), &t);
        *s = mul3(s, &t);
    };
    if a.iter().all(|r| r.iter().all(|v| v.is_zero())) {
        return QuadricNormalization::Degenerate;
    }
    if (0..3).all(|i| a[i][i].is_zero()) {
        let (i, j) = [(0, 1), (0, 2), (1, 2)].into_iter().find(|&(i, j)| !a[i][j].is_zero()).expect("nonzero");
        // x_i = x_i' + x_j'
        let mut t = identity3();
        t[i][j] = Rational::one();
        apply(&mut a, &mut s, t);
    }
    let i = (0..3).find(|&i| !a[i][i].is_zero()).expect("nonzero diagonal");
    if i != 0 {
        let mut t = identity3();
        t.swap(0, i);
        apply(&mut a, &mut s, t);
    }
    let lambda = a[0][0].clone();
    let mut t = identity3();
    t[0][1] = -&a[0][1] / &lambda;
    t[0][2] = -&a[0][2] / &lambda;
    apply(&mut a, &mut s, t);
    // remaining binary form alpha x2^2 + beta x2 x3 + gamma x3^2
    let (alpha, gamma) = (a[1][1].clone(), a[2][2].clone());
    let beta = &a[1][2] * Rational::from_integer(2.into());
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return QuadricNormalization::Degenerate;
    }
    if !gamma.is_zero() {
        if alpha.is_zero() {
            let mut t = identity3();
            t.swap(1, 2);
            apply(&mut a, &mut s, t);
        } else {
            let disc = &beta * &beta - Rational::from_integer(4.into()) * &alpha * &gamma;
            let Some(root) = rational_sqrt(&disc) else { return isotropic_normalization(&quadric_matrix(q)) };
            // alpha u^2 + beta u + gamma = 0 at u = rho; x2 = x2' + rho x3'
            let rho = (-&beta + root) / (Rational::from_integer(2.into()) * &alpha);
            let mut t = identity3();
            t[1][2] = rho;
            apply(&mut a, &mut s, t);
        }
    }
    debug_assert!(a[2][2].is_zero());
    let na = -&a[1][1] / &lambda;
    let nb = -(&a[1][2] * Rational::from_integer(2.into())) / &lambda;
    QuadricNormalization::Normalized { lambda, a: na, b: nb, s: Box::new(s) }
}

fn bilinear(a: &Mat3, u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
    (0..3).fold(Rational::zero(), |acc, i| (0..3).fold(acc, |acc, j| acc + &a[i][j] * &u[i] * &v[j]))
}

fn cross(u: &[Rational; 3], v: &[Rational; 3]) -> [Rational; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn is_zero3(u: &[Rational; 3]) -> bool {
    u.iter().all(|c| c.is_zero())
}

/// A nonzero vector of `w^perp` (Euclidean) not parallel to `v`.
fn perp_avoiding(w: &[Rational; 3], v: &[Rational; 3]) -> Option<[Rational; 3]> {
    (0..3).find_map(|k| {
        let mut e: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
        e[k] = Rational::one();
        let c = cross(w, &e);
        (!is_zero3(&c) && !is_zero3(&cross(&c, v))).then_some(c)
    })
}

/// Integer vectors of height at most this are tried as isotropic directions
/// when the residual binary form is anisotropic.
const ISOTROPIC_SEARCH_HEIGHT: i64 = 8;

/// Rank three forms: look for a rational isotropic `v`, then take `s3 = v`,
/// `s1` in `v^perp` and `s2` in `s1^perp`.
fn isotropic_normalization(a: &Mat3) -> QuadricNormalization {
    let h = ISOTROPIC_SEARCH_HEIGHT;
    let v = (-h..=h)
        .flat_map(|i| (-h..=h).flat_map(move |j| (-h..=h).map(move |k| [i, j, k])))
        .filter(|c| c.iter().any(|&x| x != 0))
        .map(|c| c.map(|x| Rational::from_integer(x.into())))
        .find(|c| bilinear(a, c, c).is_zero());
    let Some(v) = v else { return QuadricNormalization::NeedsExtension };
    let av: [Rational; 3] = std::array::from_fn(|i| (0..3).fold(Rational::zero(), |s, j| s + &a[i][j] * &v[j]));
    let Some(s1) = perp_avoiding(&av, &v) else { return QuadricNormalization::NeedsExtension };
    let lambda = bilinear(a, &s1, &s1);
    let as1: [Rational; 3] = std::array::from_fn(|i| (0..3).fold(Rational::zero(), |s, j| s + &a[i][j] * &s1[j]));
    let Some(s2) = perp_avoiding(&as1, &v) else { return QuadricNormalization::NeedsExtension };
    if lambda.is_zero() {
        return QuadricNormalization::NeedsExtension;
    }
    let two = Rational::from_integer(2.into());
    let na = -bilinear(a, &s2, &s2) / &lambda;
    let nb = -(two * bilinear(a, &s2, &v)) / &lambda;
    let s: Mat3 = std::array::from_fn(|i| [s1[i].clone(), s2[i].clone(), v[i].clone()]);
    QuadricNormalization::Normalized { lambda, a: na, b: nb, s: Box::new(s) }
}

/// The algebra of one fibre, with constant coefficients.
#[derive(Clone, Debug)]
pub struct FibreAlgebra {
    pub location: Rational,
    pub fibre_type: FibreType,
    pub presentation: GradedPresentation,
    /// `g6(0,0,0,1)` on unigonal fibres.
    pub cone_value: Option<Rational>,
    /// The branch sextic `f6(x)` on hyperelliptic fibres.
    pub sextic: Option<WPoly>,
    /// `x_old = S x_new` used to normalize a unigonal quadric.
    pub coordinate_change: Option<Mat3>,
}

impl FibreAlgebra {
    pub fn needs_extension(&self) -> bool {
        matches!(self.fibre_type, FibreType::UnigonalUnnormalized { .. })
    }
}

/// Coefficient of `y^3` in `g6`, as a polynomial in `t`.
pub fn cone_coefficient(g6: &WPoly) -> BasePoly {
    g6.coeff(&[0, 0, 0, 3, 0])
}

pub fn fibre_at(r: &RAlgebra, c: &Rational) -> FibreAlgebra {
    let frame = r.base.frame.as_ref().expect("built from a 5-tuple");
    let d = frame.d6.eval(c);
    let q = frame.quadric.evaluate_base(c);
    let g6 = r.g6.evaluate_base(c);
    let z = WPoly::var(Var::Z);
    let z2 = &z * &z;
    if !d.is_zero() {
        let y = q.scale_rational(&d.recip());
        let f6 = g6.substitute_var(Var::Y, &y);
        let pres = GradedPresentation::new(vec![Var::X1, Var::X2, Var::X3, Var::Z], vec![&z2 - &f6]);
        return FibreAlgebra {
            location: c.clone(),
            fibre_type: FibreType::Hyperelliptic,
            presentation: pres,
            cone_value: None,
            sextic: Some(f6),
            coordinate_change: None,
        };
    }
    let mult = frame.d6.valuation_at(c);
    let cone_value = Some(cone_coefficient(&r.g6).eval(c));
    let vars = vec![Var::X1, Var::X2, Var::X3, Var::Y, Var::Z];
    match normalize_quadric(&q) {
        QuadricNormalization::Normalized { a, b, s, .. } => {
            let g2 = crate::algebra_a::fibre_quadric(&FibreType::Unigonal(UnigonalParams {
                a: a.clone(),
                b: b.clone(),
                r: mult,
            }))
            .expect("unigonal");
            let g6n = substitute_linear(&g6, &s);
            FibreAlgebra {
                location: c.clone(),
                fibre_type: FibreType::Unigonal(UnigonalParams { a, b, r: mult }),
                presentation: GradedPresentation::new(vars, vec![g2, &z2 - &g6n]),
                cone_value,
                sextic: None,
                coordinate_change: Some(*s),
            }
        }
        QuadricNormalization::NeedsExtension | QuadricNormalization::Degenerate => FibreAlgebra {
            location: c.clone(),
            fibre_type: FibreType::UnigonalUnnormalized { r: mult },
            presentation: GradedPresentation::new(vars, vec![q, &z2 - &g6]),
            cone_value,
            sextic: None,
            coordinate_change: None,
        },
    }
}
