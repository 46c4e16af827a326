//! Exact arithmetic: rationals, `Q[t]`, `Q(t)`, weighted polynomials over
//! `Q[t]`, dense polynomial matrices and their Smith form.

pub mod base_poly;
pub mod field;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod rational;
pub mod smith;
pub mod wpoly;

pub use base_poly::{poly_gcd, BasePoly};
pub use field::{Field, RatFunc};
pub use matrix::PolyMatrix;
pub use parse::{parse_base_poly, parse_wpoly, PolyParseError};
pub use rational::{int, parse_rational, rat, Rational};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use wpoly::{evaluate_base, wpoly_arith, ArithOp, Exp, Var, WPoly};
