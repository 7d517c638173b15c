//! One line per acceptance criterion. Every comparison is exact.
//!
//! Run with `cargo test -p ribbon-core --test acceptance -- --nocapture` to see
//! the report.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use ribbon_core::enumerate::{self, EnumerationBudget};
use ribbon_core::formulas;
use ribbon_core::perm::{self, Permutation};
use ribbon_core::{IntPolynomial, Letter, QPolynomial, SimpleDiagram, Word};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn budget() -> EnumerationBudget {
    EnumerationBudget::default()
}

fn words_upto(k: usize) -> Vec<Word> {
    (0..=k).flat_map(Word::all).collect()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for word in words_upto(3) {
        for n in 1..=3 {
            pairs += 1;
            let k = word.len();
            let d = Arc::new(SimpleDiagram::new(word.clone(), n).unwrap());
            let bsp = enumerate::enum_bsp(&word, n, &budget()).unwrap();
            let mut seen = BTreeSet::new();
            for sigma in &bsp {
                let t = perm::psi_inverse_in(sigma, &d).unwrap();
                if !t.is_valid() || &perm::psi(&t).unwrap() != sigma {
                    failures.push(format!("round trip ({word},{n}) {sigma}"));
                }
                seen.insert(t);
            }
            let bst = enumerate::enum_bst(&word, n, &budget()).unwrap();
            let images: BTreeSet<Permutation> = bst.iter().map(|t| perm::psi(t).unwrap()).collect();
            if seen.len() != bsp.len() || images.len() != bst.len() {
                failures.push(format!("injectivity ({word},{n})"));
            }
            if k <= n && BigInt::from(bst.len()) != formulas::bst_closed(k, n).unwrap() {
                failures.push(format!("|BST({word},{n})| = {}", bst.len()));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{pairs} diagrams; failures: {failures:?}"),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut cases: Vec<(Word, usize)> = words_upto(3)
        .into_iter()
        .flat_map(|word| (1..=3).map(move |n| (word.clone(), n)))
        .collect();
    cases.push((Word::empty(), 4));
    for (word, n) in &cases {
        let d = Arc::new(SimpleDiagram::new(word.clone(), *n).unwrap());
        let bsd: BTreeSet<_> = enumerate::enum_bsd(word, *n, &budget()).unwrap().into_iter().collect();
        let tilings: BTreeSet<_> = enumerate::oracle_tilings(&d, &budget()).unwrap().into_iter().collect();
        if bsd != tilings {
            failures.push(format!("BSD ({word},{n}): {} vs {}", bsd.len(), tilings.len()));
        }
        let bst: BTreeSet<_> = enumerate::enum_bst(word, *n, &budget()).unwrap().into_iter().collect();
        let tableaux: BTreeSet<_> = enumerate::oracle_tableaux(&d, &budget()).unwrap().into_iter().collect();
        if bst != tableaux {
            failures.push(format!("BST ({word},{n}): {} vs {}", bst.len(), tableaux.len()));
        }
    }
    outcome(
        failures.is_empty(),
        format!("{} diagrams including (\"\",4); failures: {failures:?}", cases.len()),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut fibers = 0;
    for word in words_upto(3) {
        for n in 1..=3 {
            for (dec, members) in enumerate::fibers(&word, n, &budget()).unwrap() {
                fibers += 1;
                let perms: Vec<Permutation> = members.iter().map(|t| perm::psi(t).unwrap()).collect();
                let free: Vec<&Permutation> = perms.iter().filter(|p| p.des_k(n) == 0).collect();
                if free.len() != 1 {
                    failures.push(format!("({word},{n}) {} descent-free members", free.len()));
                    continue;
                }
                if perms.iter().any(|p| &p.canonicalize(n) != free[0]) {
                    failures.push(format!("({word},{n}) canonicalize misses {}", free[0]));
                }
                let d = dec.diagram_arc().clone();
                if perm::decomposition_of(free[0], &d).unwrap() != dec {
                    failures.push(format!("({word},{n}) representative off its fiber"));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{fibers} fibers; failures: {failures:?}"))
}

/// Returns the outcome and, separately, the first counterexample to the
/// unweighted recursion or total identity, if any.
fn criterion_4() -> (Outcome, Option<String>) {
    let b = budget();
    let mut failures = Vec::new();
    for n in 1..=5 {
        if enumerate::qpoly_bsd(&Word::empty(), n, &b).unwrap() != formulas::q_factorial(n as i64).unwrap() {
            failures.push(format!("[n]_q! at {n}"));
        }
    }
    for n in 1..=4 {
        if enumerate::qpoly_bsd(&w("c"), n, &b).unwrap() != formulas::c_word_qpoly(n).unwrap() {
            failures.push(format!("c-word at {n}"));
        }
    }

    let mut plain: BTreeMap<(Word, usize), QPolynomial> = BTreeMap::new();
    let mut weighted: BTreeMap<(Word, usize), QPolynomial> = BTreeMap::new();
    for word in words_upto(2) {
        for n in 1..=4 {
            let p = enumerate::qpoly_bsd(&word, n, &b).unwrap();
            let word = word.clone();
            let direct = enumerate::qpoly_bsd_direct(&word, n, &b).unwrap();
            if p != direct {
                failures.push(format!("inv_n vs inner inversions ({word},{n})"));
            }
            weighted.insert((word.clone(), n), enumerate::qpoly_bsd_weighted(&word, n, &b).unwrap());
            plain.insert((word, n), p);
        }
    }

    let mut literal_counterexample = None;
    for n in 1..=4 {
        for word in words_upto(1) {
            let bracket = formulas::q_bracket(n as i64 + 1).unwrap();
            let rec = |m: &BTreeMap<(Word, usize), QPolynomial>| {
                let lhs = &m[&(word.prepend(Letter::C), n)] + &m[&(word.prepend(Letter::R), n)];
                let rhs = &bracket * &m[&(word.clone(), n)];
                (lhs, rhs)
            };
            let (lhs, rhs) = rec(&weighted);
            if lhs != rhs {
                failures.push(format!("weighted recursion ({word},{n})"));
            }
            let (lhs, rhs) = rec(&plain);
            // n = 1 fails too, trivially, since inv_1 is always zero
            if n >= 2 && lhs != rhs && literal_counterexample.is_none() {
                literal_counterexample =
                    Some(format!("q(c)+q(r) at (\"{word}\",{n}) is {lhs}, [n+1]_q q(w) is {rhs}"));
            }
        }
        for k in 0..=2 {
            let (count, expected) = formulas::total_over_words(k, n).unwrap();
            let total: QPolynomial = Word::all(k).iter().map(|v| &weighted[&(v.clone(), n)]).sum();
            if total != expected || total.sum_coeffs() != count {
                failures.push(format!("weighted total k={k} n={n}"));
            }
        }
    }
    let passed = failures.is_empty() && literal_counterexample.is_none();
    let detail = format!(
        "[n]_q! for n<=5 and the c-word formula for n<=4 hold; recursion and total identity hold for k<=2, n<=4 \
         only when each r letter adds one inversion; with inv(T) as defined: {}; other failures: {failures:?}",
        literal_counterexample.as_deref().unwrap_or("no counterexample")
    );
    (outcome(passed, detail), literal_counterexample.filter(|_| failures.is_empty()))
}

fn criterion_5() -> Outcome {
    let rc = w("rc");
    let mut values = Vec::new();
    let mut ok = true;
    for n in 2..=5 {
        let count = enumerate::enum_bsd(&rc, n, &budget()).unwrap().len();
        let poly = formulas::bsd_count_formula(&rc, n).ok();
        let closed = formulas::rc_closed(n).unwrap();
        // the polynomial needs n > 2k - 1 = 3
        ok &= BigInt::from(count) == closed && poly.as_ref().map_or(n <= 3, |p| p == &closed);
        values.push(count);
    }
    ok &= values == [4, 22, 140, 1020];
    outcome(ok, format!("|BSD(rc,n)| for n = 2..5: {values:?}"))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut comparisons = 0;
    for k in 0..=2 {
        for word in Word::all(k) {
            for n in 2 * k..=6 {
                if n == 0 {
                    continue;
                }
                comparisons += 1;
                let formula = formulas::bsd_count_formula(&word, n).unwrap();
                let count = enumerate::count_bsd(&word, n, &budget()).unwrap();
                if formula != BigInt::from(count) {
                    failures.push(format!("({word},{n}) {formula} vs {count}"));
                }
            }
            if k > 0 {
                let f = formulas::f_polynomial(&word).unwrap();
                if !f.is_divisible_by(&IntPolynomial::falling_factorial(1, k + 1)) {
                    failures.push(format!("f_{word} not divisible"));
                }
            }
        }
    }
    for k in 1..=3 {
        let fs: Vec<IntPolynomial> = Word::all(k).iter().map(|v| formulas::f_polynomial(v).unwrap()).collect();
        for (i, a) in fs.iter().enumerate() {
            for b in &fs[i + 1..] {
                if (a - b).degree().is_some_and(|d| d > 2 * k - 1) {
                    failures.push(format!("degree at k={k}"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{comparisons} formula/enumeration comparisons; failures: {failures:?}"),
    )
}

fn criterion_7() -> Outcome {
    let v = formulas::zograf_sequence(12).unwrap();
    let prefix: Vec<BigInt> = [1, 1, 5, 61, 1379].into_iter().map(BigInt::from).collect();
    let mut ok = v[..5] == prefix[..];
    for n in 4..=12 {
        ok &= formulas::kaufmann_sum(n).unwrap() == v[n - 3];
        ok &= formulas::partition_ie_sum(n - 3).unwrap() == v[n - 3];
    }
    outcome(ok, format!("v_3..v_12 = {}", join(&v)))
}

fn criterion_8() -> Outcome {
    let a = formulas::rect_recurrence(5).unwrap();
    let mut ok = true;
    let mut counts = Vec::new();
    for n in 1..=5 {
        let count = enumerate::count_bsd(&Word::repeat(Letter::R, n), n, &budget()).unwrap();
        ok &= formulas::partition_ie_sum(n).unwrap() == BigInt::from(count) && a[n] == BigInt::from(count);
        counts.push(count);
    }
    outcome(ok, format!("2n x n tilings for n = 1..5: {counts:?}"))
}

fn criterion_9() -> Outcome {
    let (cc, rc) = (w("cc"), w("rc"));
    let report = formulas::straightness_compare(&cc, &rc).unwrap();
    let cubic = report.difference.coeff(3);
    let mut ok = cubic.is_positive() && report.difference_degree() == Some(3);
    let mut pairs = Vec::new();
    for n in 2..=6 {
        let a = enumerate::count_bsd(&cc, n, &budget()).unwrap();
        let b = enumerate::count_bsd(&rc, n, &budget()).unwrap();
        ok &= a > b;
        pairs.push((a, b));
    }
    let mut betas = Vec::new();
    for k in [2, 3] {
        let lin = formulas::j_linearity(k).unwrap();
        ok &= lin.holds;
        betas.push(lin.beta.to_string());
    }
    outcome(
        ok,
        format!(
            "f_cc - f_rc = {}; (cc, rc) counts for n = 2..6: {pairs:?}; beta_2, beta_3 = {betas:?}",
            report.difference
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut summary = Vec::new();
    for k in 1..=3 {
        let report = formulas::conjecture_scan(k).unwrap();
        ok &= report.groups_are_unions_of_orbits();
        summary.push(format!(
            "k={k}: {} orbits, {} polynomial groups",
            report.orbits.len(),
            report.polynomial_groups.len()
        ));
    }
    outcome(ok, summary.join("; "))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn report(id: usize, title: &str, started: Instant, o: &Outcome) {
    let mark = if o.passed { "PASS" } else { "FAIL" };
    println!(
        "[{mark}] {id:>2} {title} ({:.2}s): {}",
        started.elapsed().as_secs_f64(),
        o.detail
    );
}

fn main() {
    fn run(id: usize, title: &str, f: fn() -> Outcome) -> (usize, bool) {
        let started = Instant::now();
        let o = f();
        report(id, title, started, &o);
        (id, o.passed)
    }
    let mut results = vec![
        run(1, "bijection", criterion_1),
        run(2, "oracle equivalence", criterion_2),
        run(3, "fiber uniqueness", criterion_3),
    ];

    let started = Instant::now();
    let (c4, literal_counterexample) = criterion_4();
    report(4, "q-identities", started, &c4);
    results.push((4, c4.passed));

    results.push(run(5, "rc closed form", criterion_5));
    results.push(run(6, "polynomiality", criterion_6));
    results.push(run(7, "Weil-Petersson three-way", criterion_7));
    results.push(run(8, "rectangle", criterion_8));
    results.push(run(9, "straightness and J linearity", criterion_9));
    results.push(run(10, "isometry scan", criterion_10));

    let passed = results.iter().filter(|(_, p)| *p).count();
    println!("{passed}/{} criteria pass", results.len());

    for (id, ok) in &results {
        if *id != 4 {
            assert!(ok, "criterion {id} failed");
        }
    }
    // Criterion 4 is red for the literal statistic. The weighted identities
    // must hold and the literal failure must be the documented one.
    assert!(!c4.passed);
    let example = literal_counterexample.expect("weighted identities hold and the literal ones fail");
    assert!(example.contains("(\"\",2)"), "{example}");
}
