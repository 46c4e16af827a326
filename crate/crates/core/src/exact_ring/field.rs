//! Coefficient fields for degree-wise linear algebra: the rationals (fibre
//! computations) and the rational function field `Q(t)` (generic point).

use std::fmt;

use num_traits::{One, Zero};

use super::base_poly::BasePoly;
use super::rational::Rational;

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Panics when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of a base polynomial. For `Rational` this needs a base point.
    fn from_base(p: &BasePoly, at: Option<&Rational>) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(!Zero::is_zero(rhs), "division by zero");
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_base(p: &BasePoly, at: Option<&Rational>) -> Self {
        match at {
            Some(c) => p.eval(c),
            None => {
                assert!(p.is_constant(), "non-constant base coefficient needs a base point");
                p.constant_term()
            }
        }
    }
}

/// Element of `Q(t)`: reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: BasePoly,
    den: BasePoly,
}

impl RatFunc {
    pub fn new(num: BasePoly, den: BasePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: BasePoly::one() };
        }
        let g = BasePoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: BasePoly) -> Self {
        RatFunc { num: p, den: BasePoly::one() }
    }

    pub fn numer(&self) -> &BasePoly {
        &self.num
    }

    pub fn denom(&self) -> &BasePoly {
        &self.den
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(BasePoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(BasePoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
    fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn from_base(p: &BasePoly, at: Option<&Rational>) -> Self {
        match at {
            Some(c) => RatFunc::from_poly(BasePoly::constant(p.eval(c))),
            None => RatFunc::from_poly(p.clone()),
        }
    }
}
