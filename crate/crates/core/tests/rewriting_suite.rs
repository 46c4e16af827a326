//! Random symbol products: the normal form is idempotent and differs from
//! its input by an element of the fibre's relation ideal.

mod common;

use common::rewriting::{in_ideal, random_product};
use k3fib_core::algebra_a::{normal_form, FibreType, SymbolPoly, UnigonalParams};
use k3fib_core::exact_ring::{int, rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn five_hundred_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let fibres = [
        FibreType::Hyperelliptic,
        FibreType::Unigonal(UnigonalParams { a: int(1), b: int(0), r: 1 }),
        FibreType::Unigonal(UnigonalParams { a: int(0), b: int(1), r: 2 }),
        FibreType::Unigonal(UnigonalParams { a: rat(-2, 3), b: int(5), r: 1 }),
    ];
    let mut passed = 0;
    for case in 0..500 {
        let fibre = &fibres[case % fibres.len()];
        let syms = random_product(&mut rng, !matches!(fibre, FibreType::Hyperelliptic));
        let p = SymbolPoly::product(&syms).scale(&int(rng.gen_range(1..=4)));
        let n = normal_form(&p, fibre);
        assert_eq!(normal_form(&n, fibre), n, "case {case}: not idempotent on {p}");
        assert!(in_ideal(&p, &n, fibre), "case {case}: {p} -> {n} leaves the ideal");
        assert!(n.degree() <= p.degree());
        passed += 1;
    }
    assert_eq!(passed, 500);
}
