//! Named verification suites. Each suite runs a family of exact checks over a
//! bounded range of words and sizes and reports one line per check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::enumerate::{self, EnumerationBudget};
use crate::error::{Error, Result};
use crate::formulas::{self, factorial};
use crate::perm::{self, Permutation};
use crate::poly::{IntPolynomial, QPolynomial};
use crate::shape::{Letter, SimpleDiagram, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Bijection,
    Fibers,
    Oracle,
    QIdentities,
    Polynomiality,
    WpThreeway,
    Rectangle,
    Straightness,
    JLinearity,
    Scan,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Bijection,
        Suite::Fibers,
        Suite::Oracle,
        Suite::QIdentities,
        Suite::Polynomiality,
        Suite::WpThreeway,
        Suite::Rectangle,
        Suite::Straightness,
        Suite::JLinearity,
        Suite::Scan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Fibers => "fibers",
            Suite::Oracle => "oracle",
            Suite::QIdentities => "q-identities",
            Suite::Polynomiality => "polynomiality",
            Suite::WpThreeway => "wp-threeway",
            Suite::Rectangle => "rectangle",
            Suite::Straightness => "straightness",
            Suite::JLinearity => "j-linearity",
            Suite::Scan => "scan",
        }
    }

    /// `(max_k, max_n)` used when the caller gives no bound.
    pub fn default_bounds(self) -> (usize, usize) {
        match self {
            Suite::Bijection | Suite::Fibers | Suite::Oracle => (3, 3),
            Suite::QIdentities => (2, 4),
            Suite::Polynomiality => (2, 6),
            Suite::WpThreeway => (0, 12),
            Suite::Rectangle => (0, 4),
            Suite::Straightness => (3, 6),
            Suite::JLinearity | Suite::Scan => (3, 0),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides of a suite's default range. `max_symbols` caps `n + k`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_k: Option<usize>,
    pub max_n: Option<usize>,
    pub max_symbols: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Range {
    max_k: usize,
    max_n: usize,
    max_symbols: usize,
}

impl Range {
    fn of(suite: Suite, bounds: &Bounds) -> Self {
        let (k, n) = suite.default_bounds();
        Range {
            max_k: bounds.max_k.unwrap_or(k),
            max_n: bounds.max_n.unwrap_or(n),
            max_symbols: bounds.max_symbols.unwrap_or(usize::MAX),
        }
    }

    /// `(w, n)` with `|w| <= max_k`, `1 <= n <= max_n` and `n + |w| <= max_symbols`.
    fn pairs(&self) -> Vec<(Word, usize)> {
        let mut out = Vec::new();
        for k in 0..=self.max_k {
            for word in Word::all(k) {
                for n in 1..=self.max_n {
                    if n + k <= self.max_symbols {
                        out.push((word.clone(), n));
                    }
                }
            }
        }
        out
    }
}

fn label(word: &Word, n: usize) -> String {
    format!("({:?}, {n})", word.to_string())
}

pub fn run(suite: Suite, bounds: &Bounds, budget: &EnumerationBudget) -> Result<SuiteReport> {
    let range = Range::of(suite, bounds);
    let checks = match suite {
        Suite::Bijection => bijection(&range, budget)?,
        Suite::Fibers => fiber_checks(&range, budget)?,
        Suite::Oracle => oracle(&range, budget)?,
        Suite::QIdentities => q_identities(&range, budget)?,
        Suite::Polynomiality => polynomiality(&range, budget)?,
        Suite::WpThreeway => wp_threeway(&range)?,
        Suite::Rectangle => rectangle(&range, budget)?,
        Suite::Straightness => straightness(&range, budget)?,
        Suite::JLinearity => j_linearity(&range)?,
        Suite::Scan => scan(&range)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn bijection(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (word, n) in range.pairs() {
        let k = word.len();
        let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
        let bsp = enumerate::enum_bsp(&word, n, budget)?;
        let mut images = BTreeSet::new();
        let mut round_trip = true;
        let mut valid = true;
        for sigma in &bsp {
            let t = perm::psi_inverse_in(sigma, &d)?;
            valid &= t.is_valid();
            let back = perm::psi(&t)?;
            round_trip &= &back == sigma;
            images.insert(t);
        }
        let injective = images.len() == bsp.len();
        checks.push(Check::new(
            format!("{} psi(psi^-1(s)) = s", label(&word, n)),
            round_trip && valid,
            format!("{} permutations", bsp.len()),
        ));
        checks.push(Check::new(
            format!("{} psi injective on BST", label(&word, n)),
            injective,
            format!("{} distinct tableaux", images.len()),
        ));
        if k <= n {
            let expected = formulas::bst_closed(k, n)?;
            checks.push(Check::new(
                format!("{} |BST| = (n+k)!/2^k", label(&word, n)),
                BigInt::from(bsp.len()) == expected,
                format!("{} vs {expected}", bsp.len()),
            ));
        }
    }
    Ok(checks)
}

fn fiber_checks(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (word, n) in range.pairs() {
        let groups = enumerate::fibers(&word, n, budget)?;
        let mut unique = true;
        let mut canonical = true;
        for members in groups.values() {
            let perms: Vec<Permutation> = members.iter().map(perm::psi).collect::<Result<_>>()?;
            let free: Vec<&Permutation> = perms.iter().filter(|p| p.des_k(n) == 0).collect();
            if free.len() != 1 {
                unique = false;
                continue;
            }
            canonical &= perms.iter().all(|p| &p.canonicalize(n) == free[0]);
        }
        let count = enumerate::count_bsd(&word, n, budget)?;
        checks.push(Check::new(
            format!("{} one descent-free member per fiber", label(&word, n)),
            unique && groups.len() as u64 == count,
            format!("{} fibers, {count} decompositions", groups.len()),
        ));
        checks.push(Check::new(
            format!("{} canonicalize lands on it", label(&word, n)),
            canonical && unique,
            String::new(),
        ));
    }
    Ok(checks)
}

fn oracle(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut pairs = range.pairs();
    if range.max_k >= 3 && range.max_n >= 3 && range.max_symbols >= 4 {
        pairs.push((Word::empty(), 4));
    }
    pairs.sort();
    pairs.dedup();
    let mut checks = Vec::new();
    for (word, n) in pairs {
        let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
        let mut bsd = enumerate::enum_bsd(&word, n, budget)?;
        bsd.sort();
        let tilings = enumerate::oracle_tilings(&d, budget)?;
        checks.push(Check::new(
            format!("{} enum_bsd = oracle tilings", label(&word, n)),
            bsd == tilings,
            format!("{} vs {}", bsd.len(), tilings.len()),
        ));
        let mut bst = enumerate::enum_bst(&word, n, budget)?;
        bst.sort();
        let tableaux = enumerate::oracle_tableaux(&d, budget)?;
        checks.push(Check::new(
            format!("{} enum_bst = oracle tableaux", label(&word, n)),
            bst == tableaux,
            format!("{} vs {}", bst.len(), tableaux.len()),
        ));
    }
    Ok(checks)
}

fn q_identities(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut q: BTreeMap<(Word, usize), QPolynomial> = BTreeMap::new();
    let mut weighted: BTreeMap<(Word, usize), QPolynomial> = BTreeMap::new();
    for (word, n) in range.pairs() {
        let p = enumerate::qpoly_bsd(&word, n, budget)?;
        let wp = enumerate::qpoly_bsd_weighted(&word, n, budget)?;
        checks.push(Check::new(
            format!("{} weighted = q^R_w times unweighted", label(&word, n)),
            wp == &p * &QPolynomial::var().pow(word.count_r()),
            String::new(),
        ));
        weighted.insert((word.clone(), n), wp);
        let direct = enumerate::qpoly_bsd_direct(&word, n, budget)?;
        let count = enumerate::count_bsd(&word, n, budget)?;
        checks.push(Check::new(
            format!("{} inv_n agrees with inner inversions", label(&word, n)),
            p == direct,
            format!("{p}"),
        ));
        checks.push(Check::new(
            format!("{} q = 1 gives |BSD|", label(&word, n)),
            p.sum_coeffs() == BigInt::from(count),
            format!("{count}"),
        ));
        q.insert((word, n), p);
    }
    for n in 1..=range.max_n.min(range.max_symbols) {
        let expected = formulas::q_factorial(n as i64)?;
        let got = &q[&(Word::empty(), n)];
        checks.push(Check::new(
            format!("(\"\", {n}) = [n]_q!"),
            got == &expected,
            format!("{got}"),
        ));
    }
    if range.max_k >= 1 {
        for n in 1..=range.max_n.min(range.max_symbols.saturating_sub(1)) {
            let expected = formulas::c_word_qpoly(n)?;
            let got = &q[&(Word::repeat(Letter::C, 1), n)];
            checks.push(Check::new(
                format!("(\"c\", {n}) = [n-1]_q! sum i q^(i-1)"),
                got == &expected,
                format!("{got}"),
            ));
        }
    }
    // the recursion and the total identity hold for the weighted polynomial
    for ((word, n), p) in &weighted {
        if word.len() >= range.max_k || n + word.len() + 1 > range.max_symbols {
            continue;
        }
        let lhs = &weighted[&(word.prepend(Letter::C), *n)] + &weighted[&(word.prepend(Letter::R), *n)];
        let rhs = &formulas::q_bracket(*n as i64 + 1)? * p;
        checks.push(Check::new(
            format!("{} weighted q(cw) + q(rw) = [n+1]_q q(w)", label(word, *n)),
            lhs == rhs,
            String::new(),
        ));
    }
    for k in 0..=range.max_k {
        for n in 1..=range.max_n {
            if n + k > range.max_symbols {
                continue;
            }
            let (count, expected) = formulas::total_over_words(k, n)?;
            let total: QPolynomial = Word::all(k).iter().map(|w| &weighted[&(w.clone(), n)]).sum();
            checks.push(Check::new(
                format!("k = {k}, n = {n}: weighted sum over words = [n+1]_q^k [n]_q!"),
                total == expected && total.sum_coeffs() == count,
                format!("{count}"),
            ));
            let bst: u64 = Word::all(k)
                .iter()
                .map(|w| enumerate::count_bsp(w, n, budget))
                .sum::<Result<u64>>()?;
            let all = factorial(n + k);
            checks.push(Check::new(
                format!("k = {k}, n = {n}: sum over words of |BST| = (n+k)!"),
                BigInt::from(bst) == all,
                format!("{bst}"),
            ));
        }
    }
    Ok(checks)
}

fn polynomiality(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 0..=range.max_k {
        for word in Word::all(k) {
            let f = formulas::f_polynomial(&word)?;
            if k > 0 {
                let divisor = IntPolynomial::falling_factorial(1, k + 1);
                checks.push(Check::new(
                    format!("f_{:?} divisible by (n+1)_(k+1)", word.to_string()),
                    f.is_divisible_by(&divisor),
                    format!("{f}"),
                ));
            }
            let bsp = factorial(2 * k) >> k;
            let subleading = if k == 0 { BigInt::from(0) } else { f.coeff(2 * k - 1) };
            let predicted = formulas::predicted_subleading(&word)?;
            checks.push(Check::new(
                format!("f_{:?} leading and subleading coefficients", word.to_string()),
                f.degree() == Some(2 * k) && f.leading_coeff() == bsp && (k == 0 || subleading == predicted),
                format!("{} n^{}, {subleading} n^{}", f.leading_coeff(), 2 * k, (2 * k).saturating_sub(1)),
            ));
            for n in 2 * k..=range.max_n {
                if n == 0 || n + k > range.max_symbols {
                    continue;
                }
                let formula = formulas::bsd_count_formula(&word, n)?;
                let count = enumerate::count_bsd(&word, n, budget)?;
                checks.push(Check::new(
                    format!("{} formula = enumeration", label(&word, n)),
                    formula == BigInt::from(count),
                    format!("{formula} vs {count}"),
                ));
            }
        }
    }
    for k in 1..=range.max_k {
        for word in Word::all(k) {
            for n in 1..=range.max_n {
                if n + k > range.max_symbols {
                    continue;
                }
                let bsd = enumerate::count_bsd(&word, n, budget)?;
                let bst = enumerate::count_bsp(&word, n, budget)?;
                let mut agree = true;
                for other in word.isometry_orbit() {
                    agree &= enumerate::count_bsd(&other, n, budget)? == bsd;
                    agree &= enumerate::count_bsp(&other, n, budget)? == bst;
                }
                checks.push(Check::new(
                    format!("{} isometric words have equal counts", label(&word, n)),
                    agree,
                    format!("BSD {bsd}, BST {bst}"),
                ));
            }
        }
    }
    Ok(checks)
}

fn wp_threeway(range: &Range) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let max_n = range.max_n.max(7);
    let v = formulas::zograf_sequence(max_n)?;
    let prefix: Vec<BigInt> = [1, 1, 5, 61, 1379].into_iter().map(BigInt::from).collect();
    checks.push(Check::new(
        "v_3..v_7 = 1, 1, 5, 61, 1379",
        v[..5] == prefix[..],
        String::new(),
    ));
    for n in 4..=range.max_n {
        let z = &v[n - 3];
        let kf = formulas::kaufmann_sum(n)?;
        let ie = formulas::partition_ie_sum(n - 3)?;
        checks.push(Check::new(
            format!("v_{n}: recursion = composition sum = partition sum"),
            z == &kf && z == &ie,
            format!("{z}"),
        ));
    }
    Ok(checks)
}

fn rectangle(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let a = formulas::rect_recurrence(range.max_n)?;
    for n in 1..=range.max_n {
        if 2 * n > range.max_symbols {
            continue;
        }
        let ie = formulas::partition_ie_sum(n)?;
        let count = enumerate::count_bsd(&Word::repeat(Letter::R, n), n, budget)?;
        checks.push(Check::new(
            format!("2{n} x {n}: inclusion-exclusion = enumeration = a({n})"),
            ie == BigInt::from(count) && ie == a[n],
            format!("{ie}"),
        ));
    }
    Ok(checks)
}

fn straightness(range: &Range, budget: &EnumerationBudget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let cc: Word = "cc".parse()?;
    let rc: Word = "rc".parse()?;
    let report = formulas::straightness_compare(&cc, &rc)?;
    checks.push(Check::new(
        "f_cc - f_rc has positive n^3 coefficient",
        report.difference.coeff(3).is_positive() && report.difference_degree() == Some(3),
        format!("{}", report.difference),
    ));
    for n in 2..=range.max_n {
        if n + 2 > range.max_symbols {
            continue;
        }
        let a = enumerate::count_bsd(&cc, n, budget)?;
        let b = enumerate::count_bsd(&rc, n, budget)?;
        let closed = formulas::rc_closed(n)?;
        checks.push(Check::new(
            format!("n = {n}: |BSD(cc)| > |BSD(rc)| = (n+1)!(3n+2)/12"),
            a > b && BigInt::from(b) == closed,
            format!("{a} > {b}"),
        ));
    }
    for k in 1..=range.max_k {
        let words = Word::all(k);
        let mut degree_ok = true;
        let mut hor_ok = true;
        for (i, v) in words.iter().enumerate() {
            for w in &words[i + 1..] {
                let r = formulas::straightness_compare(v, w)?;
                degree_ok &= r.leading_agree && r.difference_degree().is_none_or(|d| d < 2 * k);
                hor_ok &= r.consistent_with_hor;
            }
        }
        checks.push(Check::new(
            format!("k = {k}: deg(f_v - f_w) <= 2k - 1"),
            degree_ok,
            String::new(),
        ));
        checks.push(Check::new(
            format!("k = {k}: larger |hor| gives eventually more decompositions"),
            hor_ok,
            String::new(),
        ));
    }
    Ok(checks)
}

fn j_linearity(range: &Range) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 2..=range.max_k {
        let report = formulas::j_linearity(k)?;
        checks.push(Check::new(
            format!("k = {k}: J_w = beta (C(k,2) + C_w R_w)"),
            report.holds,
            format!("beta = {}", report.beta),
        ));
    }
    Ok(checks)
}

fn scan(range: &Range) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=range.max_k {
        let report = formulas::conjecture_scan(k)?;
        let status = if report.polynomial_separates_orbits() {
            "polynomials separate orbits"
        } else {
            "polynomials do not separate orbits"
        };
        checks.push(Check::new(
            format!("k = {k}: isometric words share f_w"),
            report.groups_are_unions_of_orbits(),
            format!(
                "{} orbits, {} polynomial groups, {status}",
                report.orbits.len(),
                report.polynomial_groups.len()
            ),
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let budget = EnumerationBudget::default();
        let small = Bounds {
            max_k: Some(2),
            max_n: Some(3),
            max_symbols: None,
        };
        for s in Suite::ALL {
            let report = run(s, &small, &budget).unwrap();
            assert!(!report.checks.is_empty(), "{s}");
            for c in &report.checks {
                assert!(c.passed, "{s}: {} ({})", c.name, c.detail);
            }
        }
    }

    #[test]
    fn symbol_cap_limits_pairs() {
        let r = Range {
            max_k: 3,
            max_n: 5,
            max_symbols: 4,
        };
        assert!(r.pairs().iter().all(|(w, n)| w.len() + n <= 4));
    }
}
