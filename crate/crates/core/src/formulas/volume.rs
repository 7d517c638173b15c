//! Three independent routes to the genus-zero Weil–Petersson volume sequence
//! `v_n` (OEIS A115047), and the rectangle recurrence `a(n) = v_{n+3}`.
//!
//! All arithmetic is exact; intermediate rationals are reduced and results are
//! checked to be integers before they are returned.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{compositions, partitions};
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

pub fn to_integer(value: &BigRational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{value}")))
    }
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// `v_3, v_4, ..., v_{n_max}` from the quadratic recursion
/// `v_n = 1/2 Σ_{i=1}^{n-3} i(n-i-2)/(n-1) C(n-4,i-1) C(n,i+1) v_{i+2} v_{n-i}`.
pub fn zograf_sequence(n_max: usize) -> Result<Vec<BigInt>> {
    if n_max < 3 {
        return Err(Error::InvalidParameter(format!("n_max must be at least 3, got {n_max}")));
    }
    // v[j] holds v_{j+3}
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for n in 4..=n_max {
        let mut sum = BigRational::zero();
        for i in 1..=n - 3 {
            let weight = ratio(BigInt::from(i * (n - i - 2)), BigInt::from(n - 1));
            let term = weight
                * BigRational::from_integer(
                    binomial(n - 4, i - 1) * binomial(n, i + 1) * &v[i - 1] * &v[n - i - 3],
                );
            sum += term;
        }
        v.push(to_integer(&(sum / BigInt::from(2)))?);
    }
    Ok(v)
}

/// `a(0..=n_max)` from
/// `a(n) = 1/2 Σ_{i=1}^{n} i(n-i+1)/(n+2) C(n-1,i-1) C(n+3,i+1) a(i-1) a(n-i)`.
pub fn rect_recurrence(n_max: usize) -> Result<Vec<BigInt>> {
    let mut a: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut sum = BigRational::zero();
        for i in 1..=n {
            let weight = ratio(BigInt::from(i * (n - i + 1)), BigInt::from(n + 2));
            sum += weight
                * BigRational::from_integer(
                    binomial(n - 1, i - 1) * binomial(n + 3, i + 1) * &a[i - 1] * &a[n - i],
                );
        }
        a.push(to_integer(&(sum / BigInt::from(2)))?);
    }
    Ok(a)
}

/// `v_n` as a signed sum over compositions of `n - 3`.
pub fn kaufmann_sum(n: usize) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::UnsupportedRange(format!("kaufmann_sum needs n >= 4, got {n}")));
    }
    let total = n - 3;
    let mut sum = BigRational::zero();
    for k in 1..=total {
        let mut inner = BigInt::zero();
        for m in compositions(total, k) {
            let shifted: Vec<usize> = m.iter().map(|x| x + 1).collect();
            inner += multinomial(&m) * multinomial(&shifted);
        }
        let term = ratio(inner, factorial(k));
        if (total - k).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    to_integer(&sum)
}

/// `Σ_{p ⊢ n} (-1)^{|p-1|} / m! · multinomial(|p|; p) · multinomial(|p+1|; p+1)`,
/// the inclusion–exclusion count of ribbon tilings of the `2n x n` rectangle.
pub fn partition_ie_sum(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter("partition_ie_sum needs n >= 1".into()));
    }
    let mut sum = BigRational::zero();
    for p in partitions(n) {
        let parts = p.parts();
        let shifted: Vec<usize> = parts.iter().map(|x| x + 1).collect();
        let m_factorial = p
            .multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &m| acc * factorial(m));
        let term = ratio(multinomial(parts) * multinomial(&shifted), m_factorial);
        // |p - 1| = n - (number of parts)
        if (n - parts.len()).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    to_integer(&sum)
}

/// `Vol_WP(M_{0,n}) = coefficient · π^pi_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpVolume {
    pub n: usize,
    pub v: BigInt,
    pub coefficient: BigRational,
    pub pi_exponent: u32,
}

pub fn wp_volume(n: usize) -> Result<WpVolume> {
    if n < 4 {
        return Err(Error::UnsupportedRange(format!("volume needs n >= 4, got {n}")));
    }
    let v = zograf_sequence(n)?.pop().expect("sequence reaches n");
    let coefficient = BigRational::new(v.clone(), factorial(n) * factorial(n - 3));
    Ok(WpVolume {
        n,
        v,
        coefficient,
        pi_exponent: 2 * (n as u32 - 3),
    })
}
