//! Laurent polynomials in `A` with integer coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in `A`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * A^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn loop_value() -> Self {
        Self::monomial(-1, 2) + Self::monomial(-1, -2)
    }

    /// Adds `c * A^k` in place.
    pub fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    /// Coefficient of `A^k`.
    pub fn coefficient(&self, k: i32) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest-degree term `(exponent, coefficient)`.
    pub fn leading_term(&self) -> Option<(i32, i64)> {
        self.terms.iter().next_back().map(|(&k, &c)| (k, c))
    }

    /// Lowest-degree term.
    pub fn trailing_term(&self) -> Option<(i32, i64)> {
        self.terms.iter().next().map(|(&k, &c)| (k, c))
    }

    /// Non-negative power.
    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplies by an integer.
    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (&k, &v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Prints terms in descending order, e.g. `-A^2 - A^-2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&k, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => write!(f, "A^{k}")?,
                (_, m) => write!(f, "{m}*A^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn loop_value_prints() {
        assert_eq!(format!("{}", LaurentPolynomial::loop_value()), "-A^2 - A^-2");
        assert_eq!(format!("{}", LaurentPolynomial::zero()), "0");
        let p = LaurentPolynomial::monomial(3, 4) + LaurentPolynomial::monomial(-2, 0);
        assert_eq!(format!("{p}"), "3*A^4 - 2");
    }

    #[test]
    fn d_squared() {
        let d = LaurentPolynomial::loop_value();
        let d2 = d.pow(2);
        assert_eq!(d2.coefficient(4), 1);
        assert_eq!(d2.coefficient(0), 2);
        assert_eq!(d2.coefficient(-4), 1);
        assert!((d.clone() - d).is_zero());
    }
}
