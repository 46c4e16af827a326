//! Random symbol products and the relation-ideal membership test.

use k3fib_core::algebra_a::{fibre_quadric, FibreType, GradedPiece, GradedPresentation, Symbol, SymbolPoly};
use k3fib_core::exact_ring::{Rational, Var};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_product(rng: &mut ChaCha8Rng, with_y: bool) -> Vec<Symbol> {
    let len = rng.gen_range(1..=6);
    let pool: &[Symbol] = if with_y { &Symbol::ALL } else { &Symbol::QUADRICS };
    (0..len).map(|_| pool[rng.gen_range(0..pool.len())]).collect()
}

pub fn in_ideal(p: &SymbolPoly, q: &SymbolPoly, fibre: &FibreType) -> bool {
    let diff = &p.expand() - &q.expand();
    match fibre_quadric(fibre) {
        None => diff.is_zero(),
        Some(g2) => {
            let pres = GradedPresentation::new(vec![Var::X1, Var::X2, Var::X3, Var::Y], vec![g2]);
            let Some(d) = diff.homogeneous_degree() else { return diff.is_zero() };
            GradedPiece::<Rational>::new(&pres, d, None).is_zero(&diff)
        }
    }
}
