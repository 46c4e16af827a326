use crate::exact_ring::{
    smith_normal_form, BasePoly, Exp, PolyMatrix, Rational, SmithDecomposition, Var, WPoly,
};
use crate::fivetuple::{FiveTuple, TauDivisor, TauError};

/// Exponents of the `Sym^2 E_1` basis `x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2`.
pub const SYM2_EXPS: [Exp; 6] = [
    [2, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0],
    [0, 2, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 2, 0, 0],
];

/// Index of `x_i * x_j` in [`SYM2_EXPS`].
pub fn sym2_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    match (i, j) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        (2, 2) => 5,
        _ => panic!("x-index out of range"),
    }
}

/// The affine chart of the base curve the presentation lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub coordinate: String,
}

impl Default for Chart {
    fn default() -> Self {
        Chart { coordinate: "t".to_string() }
    }
}

/// Basis of `E_2` adapted to the Smith form of `sigma2`.
///
/// Five frame elements are images of quadrics; the sixth is the new
/// generator `y`. `matrix` expresses `sigma2` in this frame: column `k` is
/// the image of the `k`-th `Sym^2` monomial.
#[derive(Clone, Debug)]
pub struct E2Frame {
    pub smith: SmithDecomposition,
    pub d6: BasePoly,
    pub lambda: Rational,
    /// `lambda * q6`, the quadric part of the relation.
    pub quadric: WPoly,
    pub matrix: PolyMatrix,
    /// Image of each frame element in the degree 2 part of the algebra.
    pub images: Vec<WPoly>,
}

#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub vars: Vec<Var>,
    pub relations: Vec<WPoly>,
    pub chart: Chart,
    pub frame: Option<E2Frame>,
    pub tau: Option<TauDivisor>,
}

impl GradedPresentation {
    pub fn new(vars: Vec<Var>, relations: Vec<WPoly>) -> Self {
        GradedPresentation { vars, relations, chart: Chart::default(), frame: None, tau: None }
    }

    pub fn generators(&self) -> Vec<(String, u32)> {
        self.vars.iter().map(|v| (v.name().to_string(), v.weight())).collect()
    }

    pub fn eliminates_y(&self) -> bool {
        !self.vars.contains(&Var::Y)
    }

    /// `quadric - d6 * y`, kept even when `y` has been eliminated.
    pub fn f2(&self) -> Option<WPoly> {
        let f = self.frame.as_ref()?;
        Some(&f.quadric - &WPoly::var(Var::Y).scale(&f.d6))
    }

    /// Adds a generator and a relation, e.g. `z` and `z^2 - g6`.
    pub fn extend(&self, v: Var, relation: WPoly) -> Self {
        let mut out = self.clone();
        out.vars.push(v);
        out.relations.push(relation);
        out
    }
}

fn column_quadric(v: &PolyMatrix, j: usize) -> WPoly {
    WPoly::from_terms((0..6).map(|k| (SYM2_EXPS[k], v[(k, j)].clone())))
}

/// Presentation of the subalgebra generated in degrees 1 and 2.
///
/// With `U * sigma2 * V = D`, column `j` of `V` is a quadric `q_j` with
/// `sigma2(q_j) = d_j * eps_j`. For `j < 6` the factor is a unit so `eps_j`
/// is the image of a quadric; `eps_6` is the new generator and
/// `q_6 = d_6 * eps_6` is the only relation.
pub fn derive_presentation(tuple: &FiveTuple) -> Result<GradedPresentation, TauError> {
    let smith = smith_normal_form(&tuple.sigma2);
    let tau = match crate::fivetuple::compute_tau_from(&smith) {
        Ok(t) => Some(t),
        Err(TauError::IrrationalLocus { .. }) => None,
        Err(e) => return Err(e),
    };
    let d6 = smith.invariant_factors[5].clone();
    let q6 = column_quadric(&smith.v, 5);
    let (_, lc) = q6.leading().expect("unimodular column is nonzero");
    let lambda = lc.leading_coeff().recip();
    let quadric = q6.scale_rational(&lambda);

    let mut matrix = smith.d.mul(&smith.v_inv);
    matrix.scale_row(5, &lambda.recip());

    let eliminate = d6.is_unit();
    let mut images: Vec<WPoly> = (0..5).map(|j| column_quadric(&smith.v, j)).collect();
    images.push(if eliminate { quadric.clone() } else { WPoly::var(Var::Y) });

    let f2 = &quadric - &WPoly::var(Var::Y).scale(&d6);
    let (vars, relations) = if eliminate {
        (Var::XS.to_vec(), vec![])
    } else {
        (vec![Var::X1, Var::X2, Var::X3, Var::Y], vec![f2])
    };
    let frame = E2Frame { smith, d6, lambda, quadric, matrix, images };
    Ok(GradedPresentation { vars, relations, chart: Chart::default(), frame: Some(frame), tau })
}

/// Rebuilds `sigma2` from the frame: `U^-1 * diag(1,..,1,lambda) * matrix`.
pub fn reconstruct_sigma2(pres: &GradedPresentation) -> Option<PolyMatrix> {
    let f = pres.frame.as_ref()?;
    let mut m = f.matrix.clone();
    m.scale_row(5, &f.lambda);
    Some(f.smith.u_inv.mul(&m))
}
