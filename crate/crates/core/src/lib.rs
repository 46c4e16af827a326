//! Relative canonical algebras of degree two K3 fibrations, built from their
//! local 5-tuple data, with exact verifiers for the structural identities.

pub mod admissibility;
pub mod algebra_a;
pub mod algebra_r;
pub mod exact_ring;
pub mod fivetuple;
pub mod par;
