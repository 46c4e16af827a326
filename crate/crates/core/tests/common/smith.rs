//! Random matrices and the minor-gcd oracle for Smith normal forms.

use std::collections::HashMap;

use k3fib_core::exact_ring::{BasePoly, PolyMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> BasePoly {
    if rng.gen_bool(0.25) {
        return BasePoly::zero();
    }
    let deg = rng.gen_range(0..=max_deg);
    BasePoly::from_ints(&(0..=deg).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())
}

/// Square matrices built as a product of random factors so that nontrivial
/// invariant factors show up, plus rank-deficient and rectangular ones.
pub fn random_matrix(rng: &mut ChaCha8Rng) -> PolyMatrix {
    let rows = rng.gen_range(1..=4);
    let cols = if rng.gen_bool(0.2) { rng.gen_range(1..=4) } else { rows };
    let fill = |rng: &mut ChaCha8Rng, r: usize, c: usize, d: usize| {
        PolyMatrix::from_rows((0..r).map(|_| (0..c).map(|_| random_poly(rng, d)).collect()).collect())
    };
    match rng.gen_range(0..3) {
        0 => fill(rng, rows, cols, 2),
        1 => {
            let diag: Vec<BasePoly> = (0..rows.min(cols))
                .map(|_| {
                    let root = rng.gen_range(-2..=2);
                    BasePoly::from_ints(&[-root, 1]).pow(rng.gen_range(0..=2))
                })
                .collect();
            let mut d = PolyMatrix::zeros(rows, cols);
            for (i, p) in diag.into_iter().enumerate() {
                d[(i, i)] = p;
            }
            fill(rng, rows, rows, 1).mul(&d).mul(&fill(rng, cols, cols, 1))
        }
        _ => {
            let k = rng.gen_range(1..=rows.min(cols));
            fill(rng, rows, k, 1).mul(&fill(rng, k, cols, 1))
        }
    }
}

/// Determinant by cofactor expansion along the first row, memoized on the
/// set of remaining columns.
fn minor(m: &PolyMatrix, rows: &[usize], cols: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), BasePoly>) -> BasePoly {
    if rows.is_empty() {
        return BasePoly::one();
    }
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BasePoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let a = &m[(rows[0], c)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a * &minor(m, &rows[1..], &rest, memo);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    memo.insert(key, acc.clone());
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

pub fn determinantal_divisors(m: &PolyMatrix) -> Vec<BasePoly> {
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BasePoly::zero();
        for r in subsets(m.rows(), k) {
            for c in subsets(m.cols(), k) {
                g = BasePoly::gcd(&g, &minor(m, &r, &c, &mut memo));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g.monic());
    }
    out
}
