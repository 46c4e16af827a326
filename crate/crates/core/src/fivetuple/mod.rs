//! The local 5-tuple: `sigma2`, the twist of `E_3^+`, and `beta`.

mod io;
mod model;
mod validate;

pub use io::{parse_five_tuple, serialize_five_tuple, FiveTupleError};
pub use model::{compute_tau, compute_tau_from, FiveTuple, TauDivisor, TauError, TauPoint, ValidationReport, Violation, SYM2_BASIS};
pub use validate::validate;
