//! Truncated formal power series in a distinguished variable t.
//!
//! A `Series` of order N stores coefficients of t^0 .. t^N, each a `Poly`;
//! arithmetic is exact modulo t^{N+1} and never reads beyond N.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series inverse requires constant term 1, found {0}")]
    NonUnitConstantTerm(String),
}

impl Series {
    /// The zero series of order `order`.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    /// The constant series 1 of order `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// c * t^k as a series of order `order`.
    pub fn monomial(c: Poly, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the t^0 coefficient"
        );
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Truncate (or zero-extend) to a new order.
    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Poly::zero());
        coeffs.truncate(order + 1);
        Series { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, p: &Poly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiply by t^k, shifting coefficients up and truncating.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut coeffs = vec![Poly::zero(); order + 1];
        for i in 0..=order {
            if i + k <= order {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse modulo t^{N+1}; requires constant term 1.
    ///
    /// With unit constant term the recurrence c_n = -sum_{k=1..n} a_k c_{n-k}
    /// stays in the integer polynomial ring.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm(
                self.coeffs[0].to_canonical_string(),
            ));
        }
        let order = self.order();
        let mut inv = vec![Poly::zero(); order + 1];
        inv[0] = Poly::one();
        for n in 1..=order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &inv[n - k]);
                }
            }
            inv[n] = -&acc;
        }
        Ok(Series { coeffs: inv })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Series { coeffs }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| c.to_canonical_string())
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int_series(vals: &[i64]) -> Series {
        Series::from_coeffs(vals.iter().map(|&v| Poly::constant(v)).collect())
    }

    #[test]
    fn inverse_of_one_is_one() {
        let one = Series::one(5);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn geometric_series() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let s = int_series(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(s.inverse().unwrap(), int_series(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn geometric_series_in_symbol() {
        // 1/(1 - z t) to order 2 = 1 + z t + z^2 t^2
        let z = Poly::v("z");
        let s = Series::from_coeffs(vec![Poly::one(), -&z, Poly::zero()]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff(0), &Poly::one());
        assert_eq!(inv.coeff(1), &z);
        assert_eq!(inv.coeff(2), &z.pow(2));
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let s = int_series(&[2, 1]);
        assert!(matches!(
            s.inverse(),
            Err(SeriesError::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn mul_matches_inverse() {
        let s = Series::from_coeffs(vec![
            Poly::one(),
            Poly::parse("x1 - 2").unwrap(),
            Poly::constant(3),
            Poly::v("w"),
            Poly::constant(-5),
        ]);
        let prod = &s * &s.inverse().unwrap();
        assert_eq!(prod, Series::one(4));
    }

    #[test]
    fn constants_are_bigint_exact() {
        // (1 - 100000000000t)^{-1} has huge coefficients; check exactness.
        let big: BigInt = "100000000000".parse().unwrap();
        let s = Series::from_coeffs(vec![
            Poly::one(),
            Poly::constant(-big.clone()),
            Poly::zero(),
        ]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff(2).constant_term(), &big * &big);
    }
}
