//! Closed forms and counting polynomials for decompositions and tableaux of
//! simple diagrams, q-analogues, and the comparison of "straighter" words.

pub mod partition;
pub mod volume;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

pub use partition::{compositions, partitions, Partition};
pub use volume::{
    binomial, factorial, kaufmann_sum, multinomial, partition_ie_sum, rect_recurrence,
    to_integer, wp_volume, zograf_sequence, WpVolume,
};

use crate::enumerate::{BspSearch, EnumerationBudget};
use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, QPolynomial};
use crate::shape::{Letter, Word};

/// `[m]_q = 1 + q + ... + q^{m-1}`.
pub fn q_bracket(m: i64) -> Result<QPolynomial> {
    if m < 0 {
        return Err(Error::InvalidArgument(format!("[m]_q needs m >= 0, got {m}")));
    }
    Ok(QPolynomial::from_coeffs(vec![BigInt::from(1); m as usize]))
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: i64) -> Result<QPolynomial> {
    if m < 0 {
        return Err(Error::InvalidArgument(format!("[m]_q! needs m >= 0, got {m}")));
    }
    (1..=m).try_fold(QPolynomial::one(), |acc, i| Ok(&acc * &q_bracket(i)?))
}

/// `[n-1]_q! · Σ_{i=1}^{n} i q^{i-1}`, the q-count of `BSD(c, n)`.
pub fn c_word_qpoly(n: usize) -> Result<QPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let ramp = QPolynomial::from_coeffs((1..=n).map(BigInt::from).collect());
    Ok(&q_factorial(n as i64 - 1)? * &ramp)
}

/// `(n+k)! / 2^k`, valid for `k <= n`.
pub fn bst_closed(k: usize, n: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::UnsupportedRange(format!(
            "the BST count depends on the word when k > n (k = {k}, n = {n})"
        )));
    }
    Ok(factorial(n + k) >> k)
}

/// `counts[i]` = number of `τ ∈ BSP(w, k)` with exactly `i` `k`-descents.
pub fn descent_profile(word: &Word) -> Result<Vec<u64>> {
    let k = word.len();
    if k == 0 {
        return Ok(vec![1]);
    }
    EnumerationBudget::default().check_count(2 * k)?;
    let search = BspSearch::new(word, k, false)?;
    let mut counts = vec![0u64; k];
    for tau in search.iter() {
        counts[tau.des_k(k)] += 1;
    }
    Ok(counts)
}

/// `f_w(n) = Σ_{τ ∈ BSP(w,k)} (n + k - des_k(τ))_{2k}`, expanded in the
/// monomial basis.
pub fn f_polynomial(word: &Word) -> Result<IntPolynomial> {
    let k = word.len();
    Ok(f_from_profile(k, &descent_profile(word)?))
}

fn f_from_profile(k: usize, profile: &[u64]) -> IntPolynomial {
    profile
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            IntPolynomial::falling_factorial(k as i64 - i as i64, 2 * k).scale(&BigInt::from(c))
        })
        .sum()
}

/// `|BSD(w, n)| = f_w(n) (n-k)! / (2k)!`, for `n > 2k - 1`.
pub fn bsd_count_formula(word: &Word, n: usize) -> Result<BigInt> {
    let k = word.len();
    if n == 0 || n < 2 * k {
        return Err(Error::UnsupportedRange(format!(
            "the polynomial count needs n > 2k - 1 (k = {k}, n = {n})"
        )));
    }
    let f = f_polynomial(word)?.eval_i64(n as i64);
    to_integer(&BigRational::new(f * factorial(n - k), factorial(2 * k)))
}

/// `(n+1)! (3n+2) / 12`.
pub fn rc_closed(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::UnsupportedRange(format!("rc closed form needs n >= 2, got {n}")));
    }
    to_integer(&BigRational::new(factorial(n + 1) * (3 * n + 2), BigInt::from(12)))
}

/// `((n+1)^k n!, [n+1]_q^k [n]_q!)`: totals over all words of length `k`.
pub fn total_over_words(k: usize, n: usize) -> Result<(BigInt, QPolynomial)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let count = num_traits::pow(BigInt::from(n + 1), k) * factorial(n);
    let q = &q_bracket(n as i64 + 1)?.pow(k) * &q_factorial(n as i64)?;
    Ok((count, q))
}

/// `J_w = Σ_{σ ∈ BSP(w,k)} des_k(σ)`, by direct summation.
pub fn j_statistic(word: &Word) -> Result<BigInt> {
    let profile = descent_profile(word)?;
    Ok(profile
        .iter()
        .enumerate()
        .map(|(i, &c)| BigInt::from(i as u64 * c))
        .sum())
}

/// Result of checking `J_w = β_k (C(k,2) + C_w R_w)` over all words of length `k`.
#[derive(Debug, Clone)]
pub struct JLinearity {
    pub k: usize,
    /// `J(c^k) / C(k,2)`.
    pub beta: BigRational,
    /// `(word, J_w, C(k,2) + C_w R_w)`.
    pub rows: Vec<(Word, BigInt, BigInt)>,
    pub holds: bool,
}

pub fn j_linearity(k: usize) -> Result<JLinearity> {
    if k < 2 {
        return Err(Error::UnsupportedRange(format!("J linearity needs k >= 2, got {k}")));
    }
    let pairs = binomial(k, 2);
    let beta = BigRational::new(j_statistic(&Word::repeat(Letter::C, k))?, pairs.clone());
    let mut rows = Vec::new();
    let mut holds = true;
    for word in Word::all(k) {
        let j = j_statistic(&word)?;
        let bracket = &pairs + BigInt::from(word.count_c() * word.count_r());
        holds &= BigRational::from_integer(j.clone()) == &beta * BigRational::from_integer(bracket.clone());
        rows.push((word, j, bracket));
    }
    Ok(JLinearity { k, beta, rows, holds })
}

/// `k |BSP(w,k)| - 2k J_w`, predicted degree-`(2k-1)` coefficient of `f_w`.
pub fn predicted_subleading(word: &Word) -> Result<BigInt> {
    let k = word.len();
    let bsp = factorial(2 * k) >> k;
    Ok(BigInt::from(k) * bsp - BigInt::from(2 * k) * j_statistic(word)?)
}

/// Comparison of the counting polynomials of two words of equal length.
#[derive(Debug, Clone)]
pub struct StraightnessReport {
    pub v: Word,
    pub w: Word,
    pub hor_v: i64,
    pub hor_w: i64,
    pub f_v: IntPolynomial,
    pub f_w: IntPolynomial,
    /// `f_v - f_w`.
    pub difference: IntPolynomial,
    pub leading_agree: bool,
    /// Sign of the degree-`(2k-1)` coefficient of `f_v - f_w`.
    pub subleading_sign: Ordering,
    /// Sign of `|BSD(v,n)| - |BSD(w,n)|` for all large `n`.
    pub eventual: Ordering,
    /// `|hor|` strictly larger implies eventually strictly more decompositions.
    pub consistent_with_hor: bool,
}

impl StraightnessReport {
    pub fn difference_degree(&self) -> Option<usize> {
        self.difference.degree()
    }

    pub const NOTE: &'static str =
        "larger |hor| gives eventually more decompositions; the opposite inequality fails on exact counts";
}

fn sign(x: &BigInt) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

pub fn straightness_compare(v: &Word, w: &Word) -> Result<StraightnessReport> {
    if v.len() != w.len() {
        return Err(Error::InvalidArgument(format!(
            "words must have equal length, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    let k = v.len();
    let f_v = f_polynomial(v)?;
    let f_w = f_polynomial(w)?;
    let difference = &f_v - &f_w;
    let leading_agree = f_v.coeff(2 * k) == f_w.coeff(2 * k);
    let subleading_sign = if k == 0 {
        Ordering::Equal
    } else {
        sign(&difference.coeff(2 * k - 1))
    };
    let eventual = sign(&difference.leading_coeff());
    let (hv, hw) = (v.hor().abs(), w.hor().abs());
    let consistent_with_hor = match hv.cmp(&hw) {
        Ordering::Equal => true,
        o => o == eventual,
    };
    Ok(StraightnessReport {
        v: v.clone(),
        w: w.clone(),
        hor_v: v.hor(),
        hor_w: w.hor(),
        f_v,
        f_w,
        difference,
        leading_agree,
        subleading_sign,
        eventual,
        consistent_with_hor,
    })
}

/// Grouping of all words of length `k` by counting polynomial, compared with
/// their isometry orbits.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub k: usize,
    /// `(word, f_w, |BSD(w, k)|)` for every word.
    pub words: Vec<(Word, IntPolynomial, BigInt)>,
    pub orbits: Vec<Vec<Word>>,
    /// Words with identical `f_w`.
    pub polynomial_groups: Vec<Vec<Word>>,
    /// Words with identical `|BSD(w, k)|`.
    pub count_groups: Vec<Vec<Word>>,
}

impl ConjectureReport {
    /// Every polynomial group is a union of orbits (isometric words share `f_w`).
    pub fn groups_are_unions_of_orbits(&self) -> bool {
        let group_of: BTreeMap<&Word, usize> = self
            .polynomial_groups
            .iter()
            .enumerate()
            .flat_map(|(g, words)| words.iter().map(move |w| (w, g)))
            .collect();
        self.orbits
            .iter()
            .all(|orbit| orbit.iter().all(|w| group_of[w] == group_of[&orbit[0]]))
    }

    /// `f_w` separates orbits at this `k`.
    pub fn polynomial_separates_orbits(&self) -> bool {
        self.polynomial_groups.len() == self.orbits.len()
    }

    /// `|BSD(w, k)|` separates orbits at this `k`.
    pub fn count_separates_orbits(&self) -> bool {
        self.count_groups.len() == self.orbits.len()
    }

    /// Pairs of non-isometric words sharing a polynomial.
    pub fn polynomial_counterexamples(&self) -> Vec<(Word, Word)> {
        counterexamples(&self.polynomial_groups)
    }

    pub fn count_counterexamples(&self) -> Vec<(Word, Word)> {
        counterexamples(&self.count_groups)
    }
}

fn counterexamples(groups: &[Vec<Word>]) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for g in groups {
        for (i, a) in g.iter().enumerate() {
            let orbit = a.isometry_orbit();
            for b in &g[i + 1..] {
                if !orbit.contains(b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

fn group_by<K: Ord>(words: impl Iterator<Item = (K, Word)>) -> Vec<Vec<Word>> {
    let mut groups: BTreeMap<K, Vec<Word>> = BTreeMap::new();
    for (key, w) in words {
        groups.entry(key).or_default().push(w);
    }
    let mut out: Vec<Vec<Word>> = groups.into_values().collect();
    out.sort();
    out
}

pub fn conjecture_scan(k: usize) -> Result<ConjectureReport> {
    let mut words = Vec::new();
    for word in Word::all(k) {
        let profile = descent_profile(&word)?;
        let f = f_from_profile(k, &profile);
        // |BSD(w, k)| is the number of τ ∈ BSP(w, k) without a k-descent
        let count = BigInt::from(profile[0]);
        words.push((word, f, count));
    }
    let mut orbits: Vec<Vec<Word>> = words
        .iter()
        .map(|(w, _, _)| w.isometry_orbit().into_iter().collect::<Vec<_>>())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    orbits.sort();
    let polynomial_groups = group_by(words.iter().map(|(w, f, _)| (f.clone(), w.clone())));
    let count_groups = group_by(words.iter().map(|(w, _, c)| (c.clone(), w.clone())));
    let report = ConjectureReport {
        k,
        words,
        orbits,
        polynomial_groups,
        count_groups,
    };
    if !report.groups_are_unions_of_orbits() {
        return Err(Error::Internal(format!(
            "isometric words with different counting polynomials at k = {k}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ff(shift: i64, m: usize) -> IntPolynomial {
        IntPolynomial::falling_factorial(shift, m)
    }

    #[test]
    fn q_brackets() {
        assert_eq!(q_factorial(0).unwrap(), QPolynomial::one());
        assert_eq!(q_factorial(1).unwrap(), QPolynomial::one());
        assert_eq!(q_factorial(3).unwrap(), QPolynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(q_bracket(0).unwrap(), QPolynomial::zero());
        assert!(q_bracket(-1).is_err());
        assert!(q_factorial(-2).is_err());
    }

    #[test]
    fn closed_bst() {
        assert_eq!(bst_closed(0, 3).unwrap(), BigInt::from(6));
        assert_eq!(bst_closed(1, 2).unwrap(), BigInt::from(3));
        assert_eq!(bst_closed(2, 2).unwrap(), BigInt::from(6));
        assert!(matches!(bst_closed(3, 2), Err(Error::UnsupportedRange(_))));
    }

    #[test]
    fn f_polynomials() {
        assert_eq!(f_polynomial(&w("c")).unwrap(), ff(1, 2));
        assert_eq!(
            f_polynomial(&w("cc")).unwrap(),
            &ff(2, 4).scale(&5.into()) + &ff(1, 4)
        );
        assert_eq!(
            f_polynomial(&w("rc")).unwrap(),
            &ff(2, 4).scale(&4.into()) + &ff(1, 4).scale(&2.into())
        );
        assert_eq!(f_polynomial(&Word::empty()).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn polynomial_counts() {
        assert_eq!(bsd_count_formula(&w("rc"), 4).unwrap(), BigInt::from(140));
        assert_eq!(bsd_count_formula(&w("cc"), 4).unwrap(), BigInt::from(160));
        assert_eq!(bsd_count_formula(&w("c"), 5).unwrap(), BigInt::from(360));
        assert!(matches!(bsd_count_formula(&w("rc"), 3), Err(Error::UnsupportedRange(_))));
    }

    #[test]
    fn rc_values() {
        assert_eq!(rc_closed(2).unwrap(), BigInt::from(4));
        assert_eq!(rc_closed(3).unwrap(), BigInt::from(22));
        assert_eq!(rc_closed(4).unwrap(), BigInt::from(140));
        assert!(rc_closed(1).is_err());
    }

    #[test]
    fn totals() {
        let (c, q) = total_over_words(0, 3).unwrap();
        assert_eq!(c, BigInt::from(6));
        assert_eq!(q, q_factorial(3).unwrap());
        let (c, q) = total_over_words(1, 2).unwrap();
        assert_eq!(c, BigInt::from(6));
        assert_eq!(q, QPolynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(total_over_words(2, 2).unwrap().0, BigInt::from(18));
    }

    #[test]
    fn j_values() {
        assert_eq!(j_statistic(&w("cc")).unwrap(), BigInt::from(1));
        assert_eq!(j_statistic(&w("rc")).unwrap(), BigInt::from(2));
        assert_eq!(j_statistic(&w("c")).unwrap(), BigInt::from(0));
    }

    #[test]
    fn straightness_examples() {
        let r = straightness_compare(&w("rc"), &w("cc")).unwrap();
        assert!(r.leading_agree);
        assert_eq!(r.eventual, Ordering::Less);
        assert_eq!(r.subleading_sign, Ordering::Less);
        assert_eq!(r.difference, &ff(1, 4) - &ff(2, 4));
        assert!(r.consistent_with_hor);
        let same = straightness_compare(&w("rc"), &w("rc")).unwrap();
        assert!(same.difference.is_zero());
        assert!(straightness_compare(&w("cr"), &w("rc")).unwrap().difference.is_zero());
        assert!(straightness_compare(&w("c"), &w("rc")).is_err());
    }

    #[test]
    fn scan_small() {
        let one = conjecture_scan(1).unwrap();
        assert_eq!(one.polynomial_groups, vec![vec![w("c"), w("r")]]);
        assert!(one.polynomial_separates_orbits());
        let two = conjecture_scan(2).unwrap();
        assert_eq!(two.orbits, vec![vec![w("cc"), w("rr")], vec![w("cr"), w("rc")]]);
        assert_eq!(two.polynomial_groups.len(), 2);
        let three = conjecture_scan(3).unwrap();
        assert_eq!(three.orbits.len(), 3);
        assert!(three.groups_are_unions_of_orbits());
    }
}
