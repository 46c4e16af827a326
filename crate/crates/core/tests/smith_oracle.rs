//! Smith normal form against the determinantal-divisor characterization:
//! `d_1 * ... * d_k` is the monic gcd of all `k x k` minors.

mod common;

use common::smith::{determinantal_divisors, random_matrix};
use k3fib_core::exact_ring::{smith_normal_form, BasePoly, PolyMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_matrices_match_minor_gcds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for case in 0..200 {
        let m = random_matrix(&mut rng);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d, "case {case}: U M V != D");
        assert!(s.d.is_diagonal(), "case {case}");
        assert!(s.u.det().is_unit() && s.v.det().is_unit(), "case {case}: not unimodular");
        assert_eq!(s.u.mul(&s.u_inv), PolyMatrix::identity(m.rows()), "case {case}");
        assert_eq!(s.v.mul(&s.v_inv), PolyMatrix::identity(m.cols()), "case {case}");
        let divisors = determinantal_divisors(&m);
        assert_eq!(s.invariant_factors.len(), divisors.len(), "case {case}: rank");
        let mut prod = BasePoly::one();
        for (k, f) in s.invariant_factors.iter().enumerate() {
            assert_eq!(f, &f.monic(), "case {case}: factor {k} not monic");
            if k > 0 {
                assert!(s.invariant_factors[k - 1].divides(f), "case {case}: divisibility chain");
            }
            prod = &prod * f;
            assert_eq!(prod, divisors[k], "case {case}: product of first {} factors", k + 1);
        }
    }
}
