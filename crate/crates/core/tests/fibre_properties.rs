use k3fib_core::algebra_a::{check_star, check_star_star, hilbert_function_at, FibreType};
use k3fib_core::algebra_r::{
    branch_data, build_r, expected_parity_ranks, fibre_at, parity_split, sigma_n_rank, split, torsion_decomposition,
    RAlgebra,
};
use k3fib_core::exact_ring::{int, parse_wpoly, rat, Rational};
use k3fib_core::fivetuple::parse_five_tuple;

fn load(text: &str) -> RAlgebra {
    build_r(&parse_five_tuple(text).unwrap()).unwrap()
}

fn fermat() -> RAlgebra {
    load(include_str!("../../../data/fermat.json"))
}

fn unigonal(r: u32) -> RAlgebra {
    load(match r {
        1 => include_str!("../../../data/unigonal_r1.json"),
        2 => include_str!("../../../data/unigonal_r2.json"),
        _ => include_str!("../../../data/unigonal_r3.json"),
    })
}

fn hilbert_row(max: u32) -> Vec<usize> {
    (0..=max).map(|n| if n == 0 { 1 } else { (n * n + 2) as usize }).collect()
}

#[test]
fn fermat_fibre_is_the_fermat_sextic() {
    let f = fibre_at(&fermat(), &int(5));
    assert_eq!(f.fibre_type, FibreType::Hyperelliptic);
    assert_eq!(f.sextic.unwrap(), parse_wpoly("x1^6 + x2^6 + x3^6").unwrap());
}

#[test]
fn unigonal_fibre_normal_form() {
    let r = unigonal(1);
    let f = fibre_at(&r, &int(0));
    match &f.fibre_type {
        FibreType::Unigonal(p) => assert_eq!((p.a.clone(), p.b.clone(), p.r), (int(1), int(0), 1)),
        other => panic!("{other:?}"),
    }
    assert_eq!(f.cone_value, Some(int(1)));
    // off tau, y = x1^2 - x2^2 (divided by t = 1)
    let g = fibre_at(&r, &int(1));
    assert_eq!(g.sextic.unwrap(), parse_wpoly("(x1^2 - x2^2)^3 + x3^6").unwrap());
}

#[test]
fn hilbert_identity_on_both_fibre_types() {
    for (r, c) in [(fermat(), int(3)), (unigonal(1), int(0)), (unigonal(2), int(0)), (unigonal(1), rat(1, 2))] {
        let f = fibre_at(&r, &c);
        assert_eq!(hilbert_function_at(&f.presentation, 8, &c), hilbert_row(8), "{:?} at {c}", f.fibre_type.tag());
    }
}

#[test]
fn parity_ranks_follow_the_table() {
    for (r, c) in [(fermat(), int(-1)), (unigonal(1), int(0)), (unigonal(3), int(0))] {
        let f = fibre_at(&r, &c);
        for n in 0..=8 {
            let (p, m) = split(&f.presentation, n, Some(&c));
            assert_eq!((p.len(), m.len()), expected_parity_ranks(n), "n = {n} at {c}");
        }
    }
    let r = fermat();
    let (p, m) = parity_split(&r, 1, None);
    assert!(p.is_empty() && m.len() == 3);
    let (p, m) = parity_split(&r, 3, None);
    assert_eq!((p.len(), m.len()), (1, 10));
    assert_eq!(p[0], [0, 0, 0, 0, 1]);
    assert_eq!(parity_split(&r, 0, None).0, vec![[0; 5]]);
}

#[test]
fn cover_degree_splitting() {
    for (r, c) in [(fermat(), int(2)), (unigonal(2), int(0))] {
        let full = hilbert_function_at(&r.presentation(), 8, &c);
        let base = hilbert_function_at(&r.base, 8, &c);
        for n in 3..=8 {
            assert_eq!(full[n], base[n] + base[n - 3], "n = {n}");
        }
    }
}

#[test]
fn torsion_matches_prediction() {
    for r in 1..=3 {
        let alg = unigonal(r);
        for n in 2..=7 {
            let t = torsion_decomposition(&alg, n);
            assert!(t.matches(), "r = {r}, n = {n}: {:?}", t.per_point);
        }
    }
    let t = torsion_decomposition(&unigonal(1), 3);
    assert_eq!(t.per_point[0].computed_strings(), vec!["t", "t", "t"]);
    let t = torsion_decomposition(&unigonal(1), 4);
    assert_eq!(t.per_point[0].computed, vec![1, 1, 1, 1, 1, 2]);
    assert_eq!(t.length(), 7);
    let t = torsion_decomposition(&unigonal(2), 2);
    assert_eq!(t.per_point[0].computed_strings(), vec!["t^2"]);
    assert!(torsion_decomposition(&fermat(), 4).invariant_factors.is_empty());
}

#[test]
fn sigma_n_injective_off_tau() {
    for alg in [fermat(), unigonal(1), unigonal(3)] {
        for c in [int(-1), rat(1, 2), int(2)] {
            for n in 1..=5 {
                let (rank, cols) = sigma_n_rank(&alg, n, &c);
                assert_eq!(rank, cols, "n = {n} at {c}");
            }
        }
    }
}

#[test]
fn sequences_are_exact() {
    for (alg, c) in [(fermat(), int(2)), (unigonal(1), int(0)), (unigonal(2), int(0)), (unigonal(1), int(-1))] {
        let i2 = check_star(&alg.base, 2, &c);
        assert_eq!(i2.image_rank, 6);
        assert!(i2.injective());
        for n in [2, 3] {
            assert!(check_star(&alg.base, n, &c).exact_in_middle(), "(*) n = {n} at {c}");
        }
        for n in [1, 2] {
            assert!(check_star_star(&alg.base, n, &c).exact_in_middle(), "(**) n = {n} at {c}");
        }
    }
}

#[test]
fn branch_data_examples() {
    let b = branch_data(&unigonal(1));
    assert_eq!(b.g6_at_cone, vec![(int(0), int(1))]);
    assert!(b.disjoint);
    let b = branch_data(&load(include_str!("../../../data/cone_vanishing.json")));
    assert_eq!(b.g6_at_cone, vec![(int(0), int(0))]);
    assert!(!b.disjoint);
    let b = branch_data(&fermat());
    assert!(b.p_points.is_empty() && b.disjoint);
}

#[test]
fn branch_consistency_with_fibres() {
    for alg in [unigonal(1), load(include_str!("../../../data/cone_vanishing.json"))] {
        let b = branch_data(&alg);
        for (c, _) in &b.p_points {
            let f = fibre_at(&alg, c);
            let nonzero = f.cone_value.as_ref().is_some_and(|v| *v != Rational::from_integer(0.into()));
            assert_eq!(nonzero, !b.failing_locations().contains(c));
        }
    }
}
