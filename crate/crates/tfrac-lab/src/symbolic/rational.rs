//! Polynomials with rational coefficients, as an integer `Poly` over a
//! common positive denominator.
//!
//! Normal form: `den > 0`, and gcd(content(num), den) = 1; the zero
//! polynomial has den = 1. Division is supported only by nonzero rational
//! constants, which is all the matrix algebra here requires (lower-triangular
//! solves divide by diagonal entries).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    num: Poly,
    den: BigInt,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            num: Poly::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        QPoly {
            num: Poly::one(),
            den: BigInt::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        QPoly {
            num: p,
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        QPoly::new(Poly::constant(r.numer().clone()), r.denom().clone())
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        QPoly::new(Poly::constant(num.into()), den.into())
    }

    /// Build `num / den`, normalizing sign and content.
    pub fn new(num: Poly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QPoly::zero();
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -&num;
            den = -den;
        }
        let mut g = den.clone();
        for (_, c) in num.terms() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            num = Poly::from_scaled_div(&num, &g);
            den /= &g;
        }
        QPoly { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// The value as an integer polynomial, if the denominator is 1.
    pub fn as_integral(&self) -> Option<Poly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// The value as a rational constant, if symbol-free.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num
            .as_constant()
            .map(|c| BigRational::new(c, self.den.clone()))
    }

    pub fn scale_rational(&self, r: &BigRational) -> QPoly {
        QPoly::new(self.num.scale(r.numer()), &self.den * r.denom())
    }

    /// Divide by a nonzero rational constant; `None` if `rhs` is symbolic
    /// or zero.
    pub fn div_by_constant(&self, rhs: &QPoly) -> Option<QPoly> {
        let c = rhs.as_rational()?;
        if c.is_zero() {
            return None;
        }
        Some(self.scale_rational(&c.recip()))
    }
}

impl Poly {
    /// Exact division of every coefficient by `g` (which must divide all).
    fn from_scaled_div(p: &Poly, g: &BigInt) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            out.add_term(m.clone(), c / g);
        }
        out
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        QPoly::new(
            &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        QPoly::new(
            &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        QPoly::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let q = QPoly::new(Poly::constant(4), BigInt::from(-6));
        assert_eq!(q, QPoly::from_ratio(-2, 3));
        assert_eq!(q.to_string(), "-2/3");
    }

    #[test]
    fn arithmetic() {
        let half = QPoly::from_ratio(1, 2);
        let third = QPoly::from_ratio(1, 3);
        assert_eq!(&half + &third, QPoly::from_ratio(5, 6));
        assert_eq!(&half * &third, QPoly::from_ratio(1, 6));
        assert_eq!(&half - &half, QPoly::zero());
    }

    #[test]
    fn symbolic_entries_mix_with_rationals() {
        let x = QPoly::from_poly(Poly::v("x1"));
        let q = QPoly::new(Poly::v("x1"), BigInt::from(2));
        let sum = &x + &q;
        assert_eq!(
            sum,
            QPoly::new(Poly::parse("3*x1").unwrap(), BigInt::from(2))
        );
        assert_eq!(sum.div_by_constant(&QPoly::from_ratio(3, 2)).unwrap(), x);
    }

    #[test]
    fn division_by_symbolic_is_rejected() {
        let x = QPoly::from_poly(Poly::v("x1"));
        assert!(x.div_by_constant(&x).is_none());
        assert!(x.div_by_constant(&QPoly::zero()).is_none());
    }
}
