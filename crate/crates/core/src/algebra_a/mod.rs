//! The subalgebra generated in degrees 1 and 2: its presentation from the
//! Smith form of `sigma2`, graded pieces, the rewriting normal form and the
//! two exact sequences.

mod graded;
mod presentation;
mod rewriting;
mod sequences;

pub use graded::{graded_basis, hilbert_function, hilbert_function_at, GradedBasis, GradedPiece};
pub use presentation::{
    derive_presentation, reconstruct_sigma2, sym2_index, Chart, E2Frame, GradedPresentation, SYM2_EXPS,
};
pub use rewriting::{fibre_quadric, normal_form, FibreType, Symbol, SymExp, SymbolPoly, UnigonalParams};
pub use sequences::{
    check_star, check_star_star, e2_monomials, i_n_source, map_i_n, map_j_n, projection_e1, projection_sym,
    q_mul, ExactnessCheck, QMatrix, WEDGES,
};
