//! Graded pieces of `Q[t][vars] / (relations)` by degree-wise linear algebra.
//!
//! The degree `n` part of the ideal is spanned by `m * rel` for monomials `m`
//! of complementary degree. Row reducing these over a field, with columns in
//! decreasing monomial order, leaves the non-pivot columns as a monomial
//! basis of the quotient.

use std::collections::{BTreeMap, HashMap};

use super::presentation::GradedPresentation;
use crate::exact_ring::linalg::{Echelon, SparseRow};
use crate::exact_ring::wpoly::{exp_add, monomials_of_degree, x_degree};
use crate::exact_ring::{Exp, Field, RatFunc, Rational, WPoly};

#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    pub degree: u32,
    /// All monomials of this degree, largest first.
    pub monomials: Vec<Exp>,
    index: HashMap<Exp, usize>,
    echelon: Echelon<F>,
    basis_cols: Vec<usize>,
    /// Position of each column in the basis, if it is a basis column.
    basis_pos: Vec<Option<usize>>,
    at: Option<Rational>,
}

impl<F: Field> GradedPiece<F> {
    /// `at = Some(c)` evaluates the base at `t = c` first; `None` keeps `t`
    /// symbolic (only meaningful for `F = RatFunc`).
    pub fn new(pres: &GradedPresentation, n: u32, at: Option<&Rational>) -> Self {
        let monomials = monomials_of_degree(n, &pres.vars);
        let index: HashMap<Exp, usize> = monomials.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut echelon = Echelon::new(monomials.len());
        for rel in &pres.relations {
            let Some(d) = rel.homogeneous_degree() else { panic!("relation {rel} is not homogeneous") };
            if d > n {
                continue;
            }
            let coeffs: BTreeMap<Exp, F> = rel.to_field(at);
            for m in monomials_of_degree(n - d, &pres.vars) {
                let mut row: SparseRow<F> =
                    coeffs.iter().map(|(e, c)| (index[&exp_add(e, &m)], c.clone())).collect();
                row.sort_by_key(|(c, _)| *c);
                echelon.insert(row);
            }
        }
        let basis_cols = echelon.free_columns();
        let mut basis_pos = vec![None; monomials.len()];
        for (k, &c) in basis_cols.iter().enumerate() {
            basis_pos[c] = Some(k);
        }
        GradedPiece { degree: n, monomials, index, echelon, basis_cols, basis_pos, at: at.cloned() }
    }

    pub fn dim(&self) -> usize {
        self.basis_cols.len()
    }

    pub fn basis(&self) -> Vec<Exp> {
        self.basis_cols.iter().map(|&c| self.monomials[c]).collect()
    }

    /// Coordinates of a homogeneous polynomial of this degree in the basis.
    pub fn coords(&self, p: &WPoly) -> Vec<F> {
        self.coords_of_map(&p.to_field(self.at.as_ref()))
    }

    pub fn coords_of_map(&self, p: &BTreeMap<Exp, F>) -> Vec<F> {
        let mut row: SparseRow<F> = p
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let i = *self.index.get(e).unwrap_or_else(|| panic!("monomial of wrong degree"));
                (i, c.clone())
            })
            .collect();
        row.sort_by_key(|(c, _)| *c);
        let rem = self.echelon.reduce(row);
        let mut out = vec![F::zero(); self.dim()];
        for (c, v) in rem {
            out[self.basis_pos[c].expect("remainder lies on basis columns")] = v;
        }
        out
    }

    pub fn is_zero(&self, p: &WPoly) -> bool {
        self.coords(p).iter().all(|c| c.is_zero())
    }

    /// Basis monomials split by the sign `(-1)^(x-degree)`: `(plus, minus)`.
    pub fn parity_split(&self) -> (Vec<Exp>, Vec<Exp>) {
        self.basis().into_iter().partition(|e| x_degree(e).is_multiple_of(2))
    }
}

/// Monomial basis of a graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    pub monomials: Vec<Exp>,
}

pub fn graded_basis(pres: &GradedPresentation, n: u32, at: Option<&Rational>) -> GradedBasis {
    let monomials = match at {
        Some(c) => GradedPiece::<Rational>::new(pres, n, Some(c)).basis(),
        None => GradedPiece::<RatFunc>::new(pres, n, None).basis(),
    };
    GradedBasis { degree: n, monomials }
}

/// Dimensions of the graded pieces in degrees `0..=max`, over `Q(t)`.
pub fn hilbert_function(pres: &GradedPresentation, max: u32) -> Vec<usize> {
    crate::par::map(&(0..=max).collect::<Vec<_>>(), |&n| GradedPiece::<RatFunc>::new(pres, n, None).dim())
}

/// Same at a single fibre.
pub fn hilbert_function_at(pres: &GradedPresentation, max: u32, c: &Rational) -> Vec<usize> {
    crate::par::map(&(0..=max).collect::<Vec<_>>(), |&n| GradedPiece::<Rational>::new(pres, n, Some(c)).dim())
}
