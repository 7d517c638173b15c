//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Names the indeterminate of a [`Polynomial`].
pub trait Variable {
    const NAME: &'static str;
}

/// Polynomials in the strip size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InN;
/// Polynomials in `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InQ;

impl Variable for InN {
    const NAME: &'static str = "n";
}

impl Variable for InQ {
    const NAME: &'static str = "q";
}

/// Coefficients low degree first; never a trailing zero.
pub struct Polynomial<V> {
    coeffs: Vec<BigInt>,
    var: PhantomData<V>,
}

pub type IntPolynomial = Polynomial<InN>;
pub type QPolynomial = Polynomial<InQ>;

impl<V> Clone for Polynomial<V> {
    fn clone(&self) -> Self {
        Polynomial::from_coeffs(self.coeffs.clone())
    }
}

impl<V> PartialEq for Polynomial<V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<V> Eq for Polynomial<V> {}

impl<V> PartialOrd for Polynomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An arbitrary total order (degree, then coefficients), for use as map keys.
impl<V> Ord for Polynomial<V> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<V> core::hash::Hash for Polynomial<V> {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state)
    }
}

impl<V> Default for Polynomial<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V> Polynomial<V> {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x + shift`.
    pub fn linear(shift: i64) -> Self {
        Self::from_i64s(&[shift, 1])
    }

    /// `(x + shift)_m = (x + shift)(x + shift - 1)...(x + shift - m + 1)`.
    pub fn falling_factorial(shift: i64, m: usize) -> Self {
        (0..m as i64).fold(Self::one(), |acc, i| &acc * &Self::linear(shift - i))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Value at 1, the coefficient sum.
    pub fn sum_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Add `c * x^degree` in place.
    pub fn add_term(&mut self, degree: usize, c: &BigInt) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Exact division over the integers: `Some((quotient, remainder))` when
    /// every step of long division stays integral.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let (q, r) = rem[top].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let shift = top - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        self.div_rem(divisor).is_some_and(|(_, r)| r.is_zero())
    }
}

impl<V: Variable> Polynomial<V> {
    pub fn variable_name(&self) -> &'static str {
        V::NAME
    }
}

impl<V> Add for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn add(self, rhs: Self) -> Polynomial<V> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs(
            (0..len)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl<V> Sub for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn sub(self, rhs: Self) -> Polynomial<V> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs(
            (0..len)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl<V> Mul for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn mul(self, rhs: Self) -> Polynomial<V> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<V> Neg for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn neg(self) -> Polynomial<V> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V> core::iter::Sum for Polynomial<V> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl<'a, V> core::iter::Sum<&'a Polynomial<V>> for Polynomial<V> {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + p)
    }
}

impl<V> fmt::Debug for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_str_radix(10))).finish()
    }
}

/// Human form, highest degree first, e.g. `q^3 + 2q^2 + 2q + 1`.
impl<V: Variable> fmt::Display for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let mut term = String::new();
            if !abs.is_one() || deg == 0 {
                term.push_str(&abs.to_str_radix(10));
            }
            match deg {
                0 => {}
                1 => term.push_str(V::NAME),
                _ => {
                    term.push_str(V::NAME);
                    term.push('^');
                    term.push_str(&alloc::format!("{deg}"));
                }
            }
            f.write_str(&term)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::from_i64s(&[1, 1]);
        let b = IntPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(&a * &b, IntPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!((&a - &a).degree(), None);
        assert_eq!((&a * &a).eval_i64(3), BigInt::from(16));
    }

    #[test]
    fn falling_factorials() {
        // (n+1)_2 = (n+1)n
        assert_eq!(IntPolynomial::falling_factorial(1, 2), IntPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(IntPolynomial::falling_factorial(2, 4).eval_i64(4), BigInt::from(360));
        assert_eq!(IntPolynomial::falling_factorial(0, 0), IntPolynomial::one());
    }

    #[test]
    fn exact_division() {
        let f = &IntPolynomial::falling_factorial(2, 4) * &IntPolynomial::from_i64s(&[3, 1]);
        let d = IntPolynomial::falling_factorial(1, 3);
        assert!(f.is_divisible_by(&d));
        assert!(!IntPolynomial::from_i64s(&[1, 0, 1]).is_divisible_by(&IntPolynomial::linear(1)));
        let (q, r) = IntPolynomial::from_i64s(&[1, 0, 1]).div_rem(&IntPolynomial::linear(1)).unwrap();
        assert_eq!(q, IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(r, IntPolynomial::from_i64s(&[2]));
        assert!(IntPolynomial::from_i64s(&[1, 1]).div_rem(&IntPolynomial::from_i64s(&[0, 2])).is_none());
    }

    #[test]
    fn display() {
        let p = QPolynomial::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(alloc::format!("{p}"), "q^3 + 2q^2 + 2q + 1");
        assert_eq!(alloc::format!("{}", IntPolynomial::from_i64s(&[0, -3])), "-3n");
        assert_eq!(alloc::format!("{}", QPolynomial::zero()), "0");
    }
}
