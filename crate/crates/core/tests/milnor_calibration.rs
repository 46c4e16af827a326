use k3fib_core::admissibility::{classify, milnor_number, singularity_type, MPoly, MilnorError, SingularityType, DEFAULT_TRUNCATION};
use k3fib_core::exact_ring::int;

fn poly(terms: &[[u32; 3]]) -> MPoly {
    MPoly::from_terms(3, terms.iter().map(|e| (e.to_vec(), int(1))))
}

/// Quasi-homogeneous formula `prod (1/w_i - 1)` for weights `1/a_i`:
/// `u^a1 + v^a2 + w^a3` has `mu = (a1 - 1)(a2 - 1)(a3 - 1)`.
fn brieskorn_mu(a: [u32; 3]) -> usize {
    a.iter().map(|&k| (k - 1) as usize).product()
}

#[test]
fn a_series_calibration() {
    for r in 1..=5u32 {
        let f = poly(&[[2, 0, 0], [0, 2, 0], [0, 0, r + 1]]);
        assert_eq!(milnor_number(&f, DEFAULT_TRUNCATION), Ok(brieskorn_mu([2, 2, r + 1])));
        assert_eq!(brieskorn_mu([2, 2, r + 1]), r as usize);
        assert_eq!(classify(&f, Some(r as usize)), SingularityType::A(r));
    }
}

#[test]
fn e8_calibration() {
    let f = poly(&[[2, 0, 0], [0, 3, 0], [0, 0, 5]]);
    assert_eq!(singularity_type(&f, DEFAULT_TRUNCATION), (Some(brieskorn_mu([2, 3, 5])), SingularityType::E(8)));
}

#[test]
fn brieskorn_family() {
    for a in [[2, 2, 2], [2, 3, 3], [2, 3, 4], [3, 3, 3], [2, 4, 4], [2, 3, 7]] {
        assert_eq!(milnor_number(&poly(&[[a[0], 0, 0], [0, a[1], 0], [0, 0, a[2]]]), 16), Ok(brieskorn_mu(a)), "{a:?}");
    }
}

#[test]
fn non_isolated_hits_the_cap() {
    // colength of (u, v) + m^9 is 9 and keeps growing
    let f = poly(&[[2, 0, 0], [0, 2, 0]]);
    assert_eq!(milnor_number(&f, 8), Err(MilnorError::NotIsolated { cap: 8, last: 9 }));
}
