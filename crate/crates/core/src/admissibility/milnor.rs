//! Milnor numbers by truncated linear algebra, and ADE typing of isolated
//! surface singularities.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_ring::linalg::{self, sparse_from_dense, Echelon};
use crate::exact_ring::{BasePoly, Rational, Var, WPoly};

pub const DEFAULT_TRUNCATION: u32 = 12;

/// Polynomial in `nvars` variables with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Least total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        MPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn truncate(&self, d: u32) -> MPoly {
        MPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() <= d).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        MPoly::from_terms(self.nvars, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        MPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * Rational::from_integer(e[i].into()))
            }),
        )
    }

    /// `x_i -> images[i]`, images living in a ring with `images[0].nvars()`
    /// variables.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map_or(0, |p| p.nvars);
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut acc = MPoly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let pw = cache.entry((i, k)).or_insert_with(|| images[i].pow(k)).clone();
                    acc = acc.mul(&pw);
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn eval_origin(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    /// Symmetric matrix of second partials at the origin.
    pub fn hessian(&self) -> Vec<Vec<Rational>> {
        let n = self.nvars;
        let q = self.homogeneous_part(2);
        let mut h = vec![vec![Rational::zero(); n]; n];
        for (e, c) in q.terms() {
            let idx: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
            if idx[0] == idx[1] {
                h[idx[0]][idx[0]] = c * Rational::from_integer(2.into());
            } else {
                h[idx[0]][idx[1]] = c.clone();
                h[idx[1]][idx[0]] = c.clone();
            }
        }
        h
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}*{e:?}")).collect();
        write!(f, "MPoly[{}]", parts.join(" + "))
    }
}

/// `p(x1, x2, x3, y, z; t)` as a polynomial in the chosen generators and
/// `t`, in that order; `t` goes last when `with_t` is set.
pub fn mpoly_from_wpoly(p: &WPoly, vars: &[Var], with_t: bool) -> MPoly {
    let n = vars.len() + usize::from(with_t);
    let mut out = MPoly::zero(n);
    for (e, c) in p.terms() {
        for (k, a) in c.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if k > 0 && !with_t {
                panic!("non-constant coefficient");
            }
            let mut ex: Vec<u32> = vars.iter().map(|v| e[v.index()]).collect();
            if with_t {
                ex.push(k as u32);
            }
            assert_eq!(
                ex.iter().take(vars.len()).map(|&x| x as usize).sum::<usize>(),
                e.iter().map(|&x| x as usize).sum::<usize>(),
                "term involves a generator outside the chosen set"
            );
            out.add_term(ex, a.clone());
        }
    }
    out
}

/// Single polynomial in `t`, embedded as a constant in `nvars` variables
/// with `t` at `t_index`.
pub fn mpoly_from_base(p: &BasePoly, nvars: usize, t_index: usize) -> MPoly {
    MPoly::from_terms(
        nvars,
        p.coeffs().iter().enumerate().map(|(k, a)| {
            let mut e = vec![0; nvars];
            e[t_index] = k as u32;
            (e, a.clone())
        }),
    )
}

fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// `dim Q[x] / (J(f) + m^(d+1))`.
pub fn truncated_colength(f: &MPoly, d: u32) -> usize {
    let n = f.nvars();
    let monos = monomials_up_to(n, d);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut ech: Echelon<Rational> = Echelon::new(monos.len());
    for i in 0..n {
        let g = f.derivative(i).truncate(d);
        let Some(ord) = g.order() else { continue };
        for m in monos.iter().filter(|m| m.iter().sum::<u32>() + ord <= d) {
            let mut row = vec![Rational::zero(); monos.len()];
            for (e, c) in g.terms() {
                let prod: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                if let Some(&j) = index.get(&prod) {
                    row[j] += c;
                }
            }
            ech.insert(sparse_from_dense(&row));
            if ech.rank() == monos.len() {
                return 0;
            }
        }
    }
    monos.len() - ech.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("critical point not isolated up to truncation degree {cap} (colength {last} and growing)")]
    NotIsolated { cap: u32, last: usize },
}

/// Local Milnor number at the origin. The truncated colength is computed
/// for `D = 0, 1, ...`; two equal successive values are final.
pub fn milnor_number(f: &MPoly, truncation: u32) -> Result<usize, MilnorError> {
    let mut prev = truncated_colength(f, 0);
    for d in 1..=truncation.max(1) {
        let cur = truncated_colength(f, d);
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(MilnorError::NotIsolated { cap: truncation, last: prev })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SingularityType {
    Smooth,
    A(u32),
    D(u32),
    E(u32),
    NonSimple,
    NotIsolated,
}

impl SingularityType {
    pub fn is_rational_double_point(self) -> bool {
        !matches!(self, SingularityType::NonSimple | SingularityType::NotIsolated)
    }

    /// `A_k`, with `A_0` meaning smooth.
    pub fn a(k: u32) -> Self {
        if k == 0 {
            SingularityType::Smooth
        } else {
            SingularityType::A(k)
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::Smooth => write!(f, "smooth"),
            SingularityType::A(k) => write!(f, "A_{k}"),
            SingularityType::D(k) => write!(f, "D_{k}"),
            SingularityType::E(k) => write!(f, "E_{k}"),
            SingularityType::NonSimple => write!(f, "non-simple"),
            SingularityType::NotIsolated => write!(f, "not isolated"),
        }
    }
}

fn nullspace(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// Binary cubic `(A, B, C, D)`: `A u^3 + B u^2 v + C u v^2 + D v^3`.
fn binary_cubic(f3: &MPoly, k1: &[Rational], k2: &[Rational]) -> [Rational; 4] {
    let images: Vec<MPoly> = (0..f3.nvars())
        .map(|i| MPoly::var(2, 0).scale(&k1[i]).add(&MPoly::var(2, 1).scale(&k2[i])))
        .collect();
    let c = f3.substitute(&images);
    [c.coeff(&[3, 0]), c.coeff(&[2, 1]), c.coeff(&[1, 2]), c.coeff(&[0, 3])]
}

pub fn cubic_discriminant([a, b, c, d]: &[Rational; 4]) -> Rational {
    let k = |n: i64| Rational::from_integer(n.into());
    b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d + k(18) * a * b * c * d
}

fn is_cube([a, b, c, d]: &[Rational; 4]) -> bool {
    let k = |n: i64| Rational::from_integer(n.into());
    b * b == k(3) * a * c && c * c == k(3) * b * d && b * c == k(9) * a * d
}

/// ADE type of an isolated critical point at the origin in three variables,
/// from the Hessian corank, the cubic term on the Hessian kernel, and `mu`.
pub fn classify(f: &MPoly, mu: Option<usize>) -> SingularityType {
    if !f.eval_origin().is_zero() || !f.homogeneous_part(1).is_zero() {
        return SingularityType::Smooth;
    }
    let Some(mu) = mu else { return SingularityType::NotIsolated };
    let mu = mu as u32;
    let h = f.hessian();
    let corank = f.nvars() - linalg::rank(&h);
    match corank {
        0 => SingularityType::A(1),
        1 => SingularityType::A(mu),
        2 => {
            let ker = nullspace(&h);
            let cubic = binary_cubic(&f.homogeneous_part(3), &ker[0], &ker[1]);
            if cubic.iter().all(|c| c.is_zero()) {
                SingularityType::NonSimple
            } else if !cubic_discriminant(&cubic).is_zero() {
                SingularityType::D(4)
            } else if !is_cube(&cubic) {
                SingularityType::D(mu)
            } else if (6..=8).contains(&mu) {
                SingularityType::E(mu)
            } else {
                SingularityType::NonSimple
            }
        }
        _ => SingularityType::NonSimple,
    }
}

/// Milnor number and type together; `NotIsolated` when the truncation cap
/// is reached.
pub fn singularity_type(f: &MPoly, truncation: u32) -> (Option<usize>, SingularityType) {
    let mu = milnor_number(f, truncation).ok();
    (mu, classify(f, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::int;

    fn poly(terms: &[(i64, [u32; 3])]) -> MPoly {
        MPoly::from_terms(3, terms.iter().map(|(c, e)| (e.to_vec(), int(*c))))
    }

    #[test]
    fn a_series() {
        for r in 1..=5 {
            let f = poly(&[(1, [2, 0, 0]), (1, [0, 2, 0]), (1, [0, 0, r + 1])]);
            assert_eq!(milnor_number(&f, DEFAULT_TRUNCATION), Ok(r as usize));
            assert_eq!(classify(&f, Some(r as usize)), SingularityType::A(r));
        }
    }

    #[test]
    fn d_and_e() {
        let d4 = poly(&[(1, [2, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
        assert_eq!(singularity_type(&d4, 12), (Some(4), SingularityType::D(4)));
        let d5 = poly(&[(1, [2, 0, 0]), (1, [0, 2, 1]), (1, [0, 0, 4])]);
        assert_eq!(singularity_type(&d5, 12), (Some(5), SingularityType::D(5)));
        let e6 = poly(&[(1, [2, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 4])]);
        assert_eq!(singularity_type(&e6, 12), (Some(6), SingularityType::E(6)));
        let e7 = poly(&[(1, [2, 0, 0]), (1, [0, 3, 0]), (1, [0, 1, 3])]);
        assert_eq!(singularity_type(&e7, 12), (Some(7), SingularityType::E(7)));
        let e8 = poly(&[(1, [2, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 5])]);
        assert_eq!(singularity_type(&e8, 12), (Some(8), SingularityType::E(8)));
    }

    #[test]
    fn smooth_and_degenerate() {
        let f = poly(&[(1, [1, 0, 0]), (1, [0, 2, 0])]);
        assert_eq!(singularity_type(&f, 12), (Some(0), SingularityType::Smooth));
        let line = poly(&[(1, [2, 0, 0]), (1, [0, 2, 0])]);
        assert_eq!(singularity_type(&line, 6), (None, SingularityType::NotIsolated));
        let x = poly(&[(1, [2, 0, 0]), (1, [0, 4, 0]), (1, [0, 0, 4])]);
        assert_eq!(classify(&x, Some(9)), SingularityType::NonSimple);
    }

    #[test]
    fn substitution_into_plane() {
        // x3 = x1 + x2 in x1^2 + x2^2 - x3^2 gives -2 x1 x2
        let f = poly(&[(1, [2, 0, 0]), (1, [0, 2, 0]), (-1, [0, 0, 2])]);
        let images = vec![MPoly::var(2, 0), MPoly::var(2, 1), MPoly::var(2, 0).add(&MPoly::var(2, 1))];
        let g = f.substitute(&images);
        assert_eq!(g, MPoly::from_terms(2, [(vec![1, 1], int(-2))]));
    }
}
