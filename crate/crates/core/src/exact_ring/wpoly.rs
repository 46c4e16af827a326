use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::base_poly::BasePoly;
use super::field::Field;
use super::rational::Rational;

/// Generators of the weighted polynomial ring, in monomial-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X1 = 0,
    X2 = 1,
    X3 = 2,
    Y = 3,
    Z = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X1, Var::X2, Var::X3, Var::Y, Var::Z];
    pub const XS: [Var; 3] = [Var::X1, Var::X2, Var::X3];

    pub fn weight(self) -> u32 {
        WEIGHTS[self as usize]
    }

    pub fn name(self) -> &'static str {
        ["x1", "x2", "x3", "y", "z"][self as usize]
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

pub const WEIGHTS: [u32; 5] = [1, 1, 1, 2, 3];

/// Exponent vector `(x1, x2, x3, y, z)`.
pub type Exp = [u32; 5];

pub fn weighted_degree(e: &Exp) -> u32 {
    e.iter().zip(WEIGHTS).map(|(a, w)| a * w).sum()
}

pub fn x_degree(e: &Exp) -> u32 {
    e[0] + e[1] + e[2]
}

/// Graded lex: weighted degree, then lexicographic with x1 > x2 > x3 > y > z.
pub fn monomial_cmp(a: &Exp, b: &Exp) -> Ordering {
    weighted_degree(a).cmp(&weighted_degree(b)).then_with(|| a.cmp(b))
}

pub fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut out = *a;
    for i in 0..5 {
        out[i] += b[i];
    }
    out
}

pub fn var_exp(v: Var) -> Exp {
    let mut e = [0; 5];
    e[v.index()] = 1;
    e
}

pub fn fmt_monomial(e: &Exp) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.name().to_string()),
            k => parts.push(format!("{}^{}", v.name(), k)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// All exponent vectors of weighted degree `n` using only `gens`, sorted
/// from largest to smallest in the monomial order.
pub fn monomials_of_degree(n: u32, gens: &[Var]) -> Vec<Exp> {
    fn rec(n: u32, gens: &[Var], cur: &mut Exp, out: &mut Vec<Exp>) {
        match gens.split_first() {
            None => {
                if n == 0 {
                    out.push(*cur);
                }
            }
            Some((&v, rest)) => {
                let w = v.weight();
                for k in 0..=n / w {
                    cur[v.index()] = k;
                    rec(n - k * w, rest, cur, out);
                }
                cur[v.index()] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, gens, &mut [0; 5], &mut out);
    out.sort_by(|a, b| monomial_cmp(b, a));
    out
}

/// Weighted polynomial in `x1, x2, x3, y, z` with coefficients in `Q[t]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WPoly {
    terms: BTreeMap<Exp, BasePoly>,
}

impl WPoly {
    pub fn zero() -> Self {
        WPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BasePoly::one())
    }

    pub fn constant(c: BasePoly) -> Self {
        Self::term(c, [0; 5])
    }

    pub fn rational(c: Rational) -> Self {
        Self::constant(BasePoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BasePoly::one(), var_exp(v))
    }

    pub fn term(c: BasePoly, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        WPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp, BasePoly)>) -> Self {
        let mut out = WPoly::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    pub fn add_term(&mut self, e: Exp, c: &BasePoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BasePoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BasePoly)> {
        self.terms.iter()
    }

    /// Terms from the largest monomial down.
    pub fn sorted_terms(&self) -> Vec<(Exp, BasePoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| monomial_cmp(&b.0, &a.0));
        v
    }

    pub fn coeff(&self, e: &Exp) -> BasePoly {
        self.terms.get(e).cloned().unwrap_or_else(BasePoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in the monomial order.
    pub fn leading(&self) -> Option<(Exp, BasePoly)> {
        self.terms
            .iter()
            .max_by(|a, b| monomial_cmp(a.0, b.0))
            .map(|(e, c)| (*e, c.clone()))
    }

    /// `Some(d)` when every term has weighted degree `d`; the zero
    /// polynomial is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(weighted_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    /// True when every coefficient is a constant polynomial.
    pub fn has_constant_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_constant())
    }

    pub fn scale(&self, c: &BasePoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&BasePoly::constant(c.clone()))
    }

    pub fn mul_monomial(&self, m: &Exp) -> Self {
        WPoly { terms: self.terms.iter().map(|(e, c)| (exp_add(e, m), c.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `t = c` in every coefficient.
    pub fn evaluate_base(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, p)| (*e, BasePoly::constant(p.eval(c)))))
    }

    /// Replaces `t` by `t + c` in every coefficient.
    pub fn shift_base(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, p)| (*e, p.shift(c))))
    }

    /// Simultaneous substitution `v -> images[v]` for every generator.
    pub fn substitute(&self, images: &[WPoly; 5]) -> Self {
        let mut cache: BTreeMap<(usize, u32), WPoly> = BTreeMap::new();
        let mut out = WPoly::zero();
        for (e, c) in &self.terms {
            let mut acc = WPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache.entry((i, k)).or_insert_with(|| images[i].pow(k)).clone();
                acc = &acc * &pw;
            }
            out = &out + &acc;
        }
        out
    }

    /// Substitutes a single generator.
    pub fn substitute_var(&self, v: Var, image: &WPoly) -> Self {
        let mut images = Var::ALL.map(WPoly::var);
        images[v.index()] = image.clone();
        self.substitute(&images)
    }

    /// Value at a point, for polynomials with constant coefficients (or
    /// after fixing `t`).
    pub fn eval_point(&self, point: &[Rational; 5], t: &Rational) -> Rational {
        let mut acc = <Rational as Zero>::zero();
        for (e, c) in &self.terms {
            let mut v = c.eval(t);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = *e;
            e2[i] -= 1;
            (e2, c.scale(&Rational::from_integer(e[i].into())))
        }))
    }

    /// Coefficients mapped into a field (evaluating at `at` when given).
    pub fn to_field<F: Field>(&self, at: Option<&Rational>) -> BTreeMap<Exp, F> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, F::from_base(c, at)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Canonical text: terms in decreasing lex order of exponent vectors,
    /// so `x1^2 - y^2` prints the way it is usually written.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev().map(|(e, c)| (*e, c.clone())) {
            let mono = fmt_monomial(&e);
            let (neg, body) = if c.term_count() == 1 {
                let neg = c.leading_coeff().is_negative();
                let mag = if neg { -&c } else { c.clone() };
                let cs = mag.to_string();
                let body = if e == [0; 5] {
                    cs
                } else if mag.is_one() {
                    mono
                } else {
                    format!("{cs}*{mono}")
                };
                (neg, body)
            } else {
                let body = if e == [0; 5] { format!("({c})") } else { format!("({c})*{mono}") };
                (false, body)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WPoly({self})")
    }
}

impl Add for &WPoly {
    type Output = WPoly;
    fn add(self, rhs: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &WPoly {
    type Output = WPoly;
    fn sub(self, rhs: &WPoly) -> WPoly {
        self + &(-rhs)
    }
}

impl Neg for &WPoly {
    type Output = WPoly;
    fn neg(self) -> WPoly {
        WPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &WPoly {
    type Output = WPoly;
    fn mul(self, rhs: &WPoly) -> WPoly {
        let mut out = WPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(exp_add(ea, eb), &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for WPoly {
            type Output = WPoly;
            fn $m(self, rhs: WPoly) -> WPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for WPoly {
    type Output = WPoly;
    fn neg(self) -> WPoly {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

pub fn wpoly_arith(a: &WPoly, b: &WPoly, op: ArithOp) -> WPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Mul => a * b,
    }
}

pub fn evaluate_base(p: &WPoly, c: &Rational) -> WPoly {
    p.evaluate_base(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::rational::int;

    fn x1() -> WPoly {
        WPoly::var(Var::X1)
    }
    fn y() -> WPoly {
        WPoly::var(Var::Y)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(wpoly_arith(&x1(), &x1(), ArithOp::Mul).to_string(), "x1^2");
        let a = &x1() + &y();
        let b = &x1() - &y();
        assert_eq!(wpoly_arith(&a, &b, ArithOp::Mul).to_string(), "x1^2 - y^2");
        let z = WPoly::var(Var::Z);
        let z2 = &z * &z;
        assert_eq!(z2.to_string(), "z^2");
        assert_eq!(z2.homogeneous_degree(), Some(6));
    }

    #[test]
    fn evaluate_base_examples() {
        let ty = y().scale(&BasePoly::t());
        let p = &ty + &(&x1() * &x1());
        assert_eq!(evaluate_base(&p, &int(0)).to_string(), "x1^2");
        assert_eq!(evaluate_base(&p, &int(1)).to_string(), "x1^2 + y");
        let q = WPoly::var(Var::X2).scale(&BasePoly::from_ints(&[-1, 0, 1]));
        assert!(evaluate_base(&q, &int(1)).is_zero());
    }

    #[test]
    fn monomial_enumeration_is_sorted() {
        let gens = [Var::X1, Var::X2, Var::X3, Var::Y];
        let m = monomials_of_degree(2, &gens);
        let names: Vec<String> = m.iter().map(fmt_monomial).collect();
        assert_eq!(names, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2", "y"]);
        assert_eq!(monomials_of_degree(4, &gens).len(), 22);
        assert_eq!(monomials_of_degree(3, &gens).len(), 13);
    }

    #[test]
    fn display_with_polynomial_coefficients() {
        let p = &WPoly::var(Var::X2).scale(&BasePoly::from_ints(&[-1, 0, 1]))
            + &y().scale(&BasePoly::from_ints(&[0, -1]));
        assert_eq!(p.to_string(), "(t^2 - 1)*x2 - t*y");
    }
}
