//! Normal form for polynomials in the degree 2 symbols `s_ij = sigma2(x_i x_j)`
//! (and `y` on a unigonal fibre), by the rewriting steps of the exactness
//! argument for `(*)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact_ring::{Exp, Rational, Var, WPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    S11,
    S12,
    S13,
    S22,
    S23,
    S33,
    Y,
}

impl Symbol {
    pub const ALL: [Symbol; 7] = [Symbol::S11, Symbol::S12, Symbol::S13, Symbol::S22, Symbol::S23, Symbol::S33, Symbol::Y];
    pub const QUADRICS: [Symbol; 6] = [Symbol::S11, Symbol::S12, Symbol::S13, Symbol::S22, Symbol::S23, Symbol::S33];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["s11", "s12", "s13", "s22", "s23", "s33", "y"][self.index()]
    }

    /// The monomial this symbol maps to in the algebra.
    pub fn expansion(self) -> Exp {
        match self {
            Symbol::S11 => [2, 0, 0, 0, 0],
            Symbol::S12 => [1, 1, 0, 0, 0],
            Symbol::S13 => [1, 0, 1, 0, 0],
            Symbol::S22 => [0, 2, 0, 0, 0],
            Symbol::S23 => [0, 1, 1, 0, 0],
            Symbol::S33 => [0, 0, 2, 0, 0],
            Symbol::Y => [0, 0, 0, 1, 0],
        }
    }
}

pub type SymExp = [u32; 7];

/// Polynomial over `Q` in the seven symbols.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SymbolPoly {
    terms: BTreeMap<SymExp, Rational>,
}

impl SymbolPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: SymExp) -> Self {
        Self::term(Rational::one(), e)
    }

    pub fn term(c: Rational, e: SymExp) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = [0; 7];
        e[s.index()] = 1;
        Self::monomial(e)
    }

    /// Product of the listed symbols.
    pub fn product(syms: &[Symbol]) -> Self {
        let mut e = [0; 7];
        for s in syms {
            e[s.index()] += 1;
        }
        Self::monomial(e)
    }

    fn add_term(&mut self, e: SymExp, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymExp, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut e = *a;
                for i in 0..7 {
                    e[i] += b[i];
                }
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Largest symbol degree of a term (each symbol has weight 2).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Image in `Q[x1, x2, x3, y]` with `s_ij -> x_i x_j`.
    pub fn expand(&self) -> WPoly {
        let mut out = WPoly::zero();
        for (e, c) in &self.terms {
            let mut m = [0u32; 5];
            for s in Symbol::ALL {
                let x = s.expansion();
                for i in 0..5 {
                    m[i] += x[i] * e[s.index()];
                }
            }
            out = &out + &WPoly::term(crate::exact_ring::BasePoly::constant(c.clone()), m);
        }
        out
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = Symbol::ALL
                .iter()
                .filter(|s| e[s.index()] > 0)
                .map(|s| match e[s.index()] {
                    1 => s.name().to_string(),
                    k => format!("{}^{k}", s.name()),
                })
                .collect();
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Unigonal normalization data: the fibre quadric is `x1^2 - x2(a x2 + b x3)`
/// and the cokernel of `sigma2` has length `r` at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnigonalParams {
    pub a: Rational,
    pub b: Rational,
    pub r: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibreType {
    Hyperelliptic,
    Unigonal(UnigonalParams),
    /// Unigonal, but the quadric only reaches normal form over an extension
    /// of `Q`.
    UnigonalUnnormalized { r: u32 },
}

impl FibreType {
    pub fn tag(&self) -> &'static str {
        match self {
            FibreType::Hyperelliptic => "hyperelliptic",
            _ => "unigonal",
        }
    }
}

struct Rule {
    pattern: SymExp,
    replacement: SymbolPoly,
}

fn rule(pattern: &[Symbol], replacement: SymbolPoly) -> Rule {
    let mut e = [0; 7];
    for s in pattern {
        e[s.index()] += 1;
    }
    Rule { pattern: e, replacement }
}

fn divides(p: &SymExp, e: &SymExp) -> bool {
    (0..7).all(|i| p[i] <= e[i])
}

/// Applies the first matching rule to every term until none matches.
fn run_step(mut p: SymbolPoly, rules: &[Rule]) -> (SymbolPoly, bool) {
    let mut changed = false;
    loop {
        let mut out = SymbolPoly::zero();
        let mut hit = false;
        for (e, c) in &p.terms {
            match rules.iter().find(|r| divides(&r.pattern, e)) {
                Some(r) => {
                    let mut rest = *e;
                    for (x, k) in rest.iter_mut().zip(&r.pattern) {
                        *x -= k;
                    }
                    out = out.add(&r.replacement.mul(&SymbolPoly::term(c.clone(), rest)));
                    hit = true;
                }
                None => out.add_term(*e, c.clone()),
            }
        }
        p = out;
        if !hit {
            return (p, changed);
        }
        changed = true;
    }
}

fn steps(fibre: &FibreType) -> Vec<Vec<Rule>> {
    use Symbol::*;
    let sym = SymbolPoly::symbol;
    let prod = SymbolPoly::product;
    let step2 = vec![rule(&[S13, S22], prod(&[S12, S23])), rule(&[S13, S23], prod(&[S12, S33]))];
    let step3 = vec![rule(&[S23, S23], prod(&[S22, S33]))];
    match fibre {
        FibreType::Unigonal(UnigonalParams { a, b, .. }) => {
            let s11 = sym(S22).scale(a).add(&sym(S23).scale(b));
            let step0 = vec![rule(&[S11], s11.clone())];
            let step1 = vec![
                rule(&[S12, S12], s11.mul(&sym(S22))),
                rule(&[S12, S13], s11.mul(&sym(S23))),
                rule(&[S13, S13], s11.mul(&sym(S33))),
            ];
            vec![step0, step1, step2, step3]
        }
        _ => {
            let step1 = vec![
                rule(&[S12, S12], prod(&[S11, S22])),
                rule(&[S12, S13], prod(&[S11, S23])),
                rule(&[S13, S13], prod(&[S11, S33])),
            ];
            vec![step1, step2, step3]
        }
    }
}

/// Rewrites to the normal form. Each step runs to exhaustion in order and
/// the whole list repeats until a pass changes nothing.
///
/// Panics on [`FibreType::UnigonalUnnormalized`], which has no rules.
pub fn normal_form(p: &SymbolPoly, fibre: &FibreType) -> SymbolPoly {
    assert!(
        !matches!(fibre, FibreType::UnigonalUnnormalized { .. }),
        "rewriting needs a normalized fibre quadric"
    );
    let steps = steps(fibre);
    let mut p = p.clone();
    loop {
        let mut any = false;
        for s in &steps {
            let (q, changed) = run_step(p, s);
            p = q;
            any |= changed;
        }
        if !any {
            return p;
        }
    }
}

/// The quadric relation of the fibre as a polynomial in `x1, x2, x3`.
pub fn fibre_quadric(fibre: &FibreType) -> Option<WPoly> {
    match fibre {
        FibreType::Unigonal(UnigonalParams { a, b, .. }) => {
            let x = |v| WPoly::var(v);
            let lin = &x(Var::X2).scale_rational(a) + &x(Var::X3).scale_rational(b);
            Some(&(&x(Var::X1) * &x(Var::X1)) - &(&x(Var::X2) * &lin))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::int;
    use Symbol::*;

    #[test]
    fn hyperelliptic_steps() {
        let h = FibreType::Hyperelliptic;
        let p = SymbolPoly::product(&[S12, S13]);
        assert_eq!(normal_form(&p, &h), SymbolPoly::product(&[S11, S23]));
        let p = SymbolPoly::product(&[S23, S23]);
        assert_eq!(normal_form(&p, &h), SymbolPoly::product(&[S22, S33]));
    }

    #[test]
    fn unigonal_step() {
        let u = FibreType::Unigonal(UnigonalParams { a: int(1), b: int(0), r: 1 });
        let p = SymbolPoly::product(&[S12, S13]);
        assert_eq!(normal_form(&p, &u), SymbolPoly::product(&[S22, S23]));
    }

    #[test]
    fn idempotent_on_a_mixed_product() {
        let h = FibreType::Hyperelliptic;
        let p = SymbolPoly::product(&[S13, S13, S23, S22, S12]);
        let n = normal_form(&p, &h);
        assert_eq!(normal_form(&n, &h), n);
        assert!((&p.expand() - &n.expand()).is_zero());
    }
}
