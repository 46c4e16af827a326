//! The full algebra `R = A (+) z A` with `z^2 = g6`: fibres, torsion of the
//! cokernels of `sigma_n`, parity split and branch data.

mod branch;
mod fibre;
mod parity;
mod ralgebra;
mod torsion;

pub use branch::{branch_data, BranchData};
pub use fibre::{
    cone_coefficient, fibre_at, normalize_quadric, quadric_matrix, quadric_rank, substitute_linear, FibreAlgebra, Mat3,
    QuadricNormalization,
};
pub use parity::{expected_parity_ranks, parity_split, sigma_n_rank, split};
pub use ralgebra::{build_r, construction_violations, reduce_beta, BuildError, RAlgebra};
pub use torsion::{
    local_factor_string, predicted_exponents, torsion_decomposition, torsion_presentation, PointTorsion, TorsionReport,
};
