//! One function per subcommand. Each writes to the given sink and returns an
//! error whose [`exit_code`](CliError::exit_code) the binary reports.

use std::fs;
use std::io::{self, Read, Write};
use std::sync::Arc;

use num_bigint::BigInt;
use ribbon_core::enumerate::{self, BspSearch, EnumerationBudget};
use ribbon_core::formulas::{self, StraightnessReport};
use ribbon_core::perm;
use ribbon_core::verify::{self, Bounds, Suite};
use ribbon_core::{Letter, QPolynomial, SimpleDiagram, Word};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, CompareArgs, CountArgs, EnumerateArgs, Format, Method, PermArgs, QpolyArgs,
    RectArgs, RenderArgs, ScanArgs, SuiteChoice, VerifyArgs, WpArgs,
};
use crate::error::CliError;
use crate::json::{DecompositionJson, PolynomialJson, TableauJson};
use crate::parallel;

type Out<'a> = &'a mut dyn Write;

pub struct Context {
    pub format: Format,
    pub budget: EnumerationBudget,
}

impl Context {
    pub fn from_cli(cli: &Cli) -> Self {
        Context {
            format: cli.format,
            budget: cli
                .budget
                .map(EnumerationBudget::with_max_symbols)
                .unwrap_or_default(),
        }
    }
}

pub fn run(cli: &Cli, out: Out<'_>) -> Result<(), CliError> {
    let ctx = Context::from_cli(cli);
    match &cli.command {
        Command::Count(a) => count(a, &ctx, out),
        Command::Qpoly(a) => qpoly(a, &ctx, out),
        Command::Verify(a) => verify_cmd(a, &ctx, out),
        Command::Wp(a) => wp(a, &ctx, out),
        Command::Rect(a) => rect(a, &ctx, out),
        Command::Scan(a) => scan(a, &ctx, out),
        Command::Render(a) => render(a, &ctx, out),
        Command::Enumerate(a) => enumerate_cmd(a, &ctx, out),
        Command::Perm(a) => perm_cmd(a, &ctx, out),
        Command::Compare(a) => compare(a, &ctx, out),
    }
}

fn emit_json(out: Out<'_>, value: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn coefficients<V>(p: &ribbon_core::poly::Polynomial<V>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn positive_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    Ok(())
}

fn polynomial_applies(k: usize, n: usize) -> bool {
    n >= 2 * k
}

fn count(a: &CountArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let (word, n) = (&a.shape.word, a.shape.n);
    positive_n(n)?;
    let k = word.len();
    let use_formula = match a.method {
        Method::Formula => true,
        Method::Enum => false,
        Method::Auto => polynomial_applies(k, n),
    };
    let (bsd, method) = if use_formula {
        (formulas::bsd_count_formula(word, n)?, "polynomial")
    } else {
        (BigInt::from(parallel::count_bsd(word, n, &ctx.budget)?), "enumeration")
    };

    let mut check = None;
    if a.check {
        let (other, route) = if use_formula {
            (BigInt::from(parallel::count_bsd(word, n, &ctx.budget)?), "enumeration")
        } else if polynomial_applies(k, n) {
            (formulas::bsd_count_formula(word, n)?, "polynomial")
        } else {
            let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
            let tilings = enumerate::oracle_tilings(&d, &ctx.budget)?;
            (BigInt::from(tilings.len()), "tiling search")
        };
        check = Some((other, route));
    }

    let bst = if a.tableaux {
        let counted = || parallel::count_bsp(word, n, &ctx.budget).map(BigInt::from);
        let value = if k <= n { formulas::bst_closed(k, n)? } else { counted()? };
        let recount = if a.check && k <= n { Some(counted()?) } else { None };
        Some((value, if k <= n { "closed form" } else { "enumeration" }, recount))
    } else {
        None
    };

    let bsd_agrees = check.as_ref().is_none_or(|(v, _)| v == &bsd);
    let bst_agrees = bst
        .as_ref()
        .is_none_or(|(v, _, r)| r.as_ref().is_none_or(|r| r == v));

    match ctx.format {
        Format::Text => {
            writeln!(out, "BSD {bsd}")?;
            if let Some((v, route, _)) = &bst {
                writeln!(out, "BST {v}")?;
                writeln!(out, "method: {method}; BST by {route}")?;
            } else {
                writeln!(out, "method: {method}")?;
            }
            if let Some((v, route)) = &check {
                let verdict = if bsd_agrees { "agrees" } else { "DISAGREES" };
                writeln!(out, "check: {route} gives {v}, {verdict}")?;
            }
            if let Some((_, _, Some(r))) = &bst {
                let verdict = if bst_agrees { "agrees" } else { "DISAGREES" };
                writeln!(out, "check: BST enumeration gives {r}, {verdict}")?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "word": word.to_string(),
                "n": n,
                "bsd": bsd.to_string(),
                "method": method,
            });
            if let Some((value, route, recount)) = &bst {
                v["bst"] = json!(value.to_string());
                v["bst_method"] = json!(route);
                if let Some(r) = recount {
                    v["bst_check"] = json!({"value": r.to_string(), "agrees": bst_agrees});
                }
            }
            if let Some((value, route)) = &check {
                v["check"] = json!({"method": route, "value": value.to_string(), "agrees": bsd_agrees});
            }
            emit_json(out, &v)?;
        }
    }
    if !(bsd_agrees && bst_agrees) {
        return Err(CliError::Verification(format!("counts of ({word:?}, {n}) disagree")));
    }
    Ok(())
}

struct IdentityCheck {
    name: String,
    expected: QPolynomial,
    holds: bool,
}

fn qpoly_of(word: &Word, n: usize, weighted: bool, budget: &EnumerationBudget) -> Result<QPolynomial, CliError> {
    Ok(if weighted {
        enumerate::qpoly_bsd_weighted(word, n, budget)?
    } else {
        enumerate::qpoly_bsd(word, n, budget)?
    })
}

fn qpoly(a: &QpolyArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let n = a.n;
    positive_n(n)?;
    let b = &ctx.budget;
    let (label, p, identity) = if a.all_words {
        let k = a.k.expect("clap requires --k");
        let total: QPolynomial = Word::all(k)
            .iter()
            .map(|w| qpoly_of(w, n, a.weighted, b))
            .collect::<Result<Vec<_>, _>>()?
            .iter()
            .sum();
        let identity = if a.identity {
            let (_, expected) = formulas::total_over_words(k, n)?;
            Some(IdentityCheck {
                name: "[n+1]_q^k [n]_q!".into(),
                holds: total == expected,
                expected,
            })
        } else {
            None
        };
        (format!("all words of length {k}"), total, identity)
    } else {
        let word = a.word.clone().expect("clap requires --word");
        let p = qpoly_of(&word, n, a.weighted, b)?;
        let identity = if !a.identity {
            None
        } else if word.is_empty() {
            let expected = formulas::q_factorial(n as i64)?;
            Some(IdentityCheck { name: "[n]_q!".into(), holds: p == expected, expected })
        } else if word.len() == 1 && word.letter(1) == Letter::C {
            let expected = formulas::c_word_qpoly(n)?;
            Some(IdentityCheck {
                name: "[n-1]_q! sum i q^(i-1)".into(),
                holds: p == expected,
                expected,
            })
        } else {
            // q(l v) = [n+1]_q q(v) - q(l' v), with l' the other letter
            let tail = Word::new(word.letters()[1..].to_vec());
            let twin = tail.prepend(word.letter(1).swapped());
            let expected = &(&formulas::q_bracket(n as i64 + 1)? * &qpoly_of(&tail, n, a.weighted, b)?)
                - &qpoly_of(&twin, n, a.weighted, b)?;
            Some(IdentityCheck {
                name: format!("[n+1]_q q({tail:?}) - q({twin:?})", tail = tail.to_string(), twin = twin.to_string()),
                holds: p == expected,
                expected,
            })
        };
        (format!("{:?}", word.to_string()), p, identity)
    };

    let statistic = if a.weighted { "inv + R_w" } else { "inv" };
    match ctx.format {
        Format::Text => {
            writeln!(out, "{}", coefficients(&p))?;
            if let Some(id) = &identity {
                let verdict = if id.holds { "holds" } else { "FAILS" };
                writeln!(out, "identity {}: {} ({verdict})", id.name, coefficients(&id.expected))?;
                if !id.holds && !a.weighted {
                    writeln!(
                        out,
                        "note: the recursion and the total identity hold for the weighted statistic (--weighted)"
                    )?;
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "shape": label,
                "n": n,
                "statistic": statistic,
                "polynomial": serde_json::to_value(PolynomialJson::from(&p))?,
            });
            if let Some(id) = &identity {
                v["identity"] = json!({
                    "name": id.name,
                    "expected": serde_json::to_value(PolynomialJson::from(&id.expected))?,
                    "holds": id.holds,
                });
            }
            emit_json(out, &v)?;
        }
    }
    if identity.is_some_and(|id| !id.holds) {
        return Err(CliError::Verification("q-identity does not hold".into()));
    }
    Ok(())
}

fn verify_cmd(a: &VerifyArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let suites: Vec<Suite> = match a.suite {
        SuiteChoice::All => Suite::ALL.to_vec(),
        SuiteChoice::One(s) => vec![s],
    };
    let bounds = Bounds {
        max_k: a.max_k,
        max_n: a.max_n,
        max_symbols: a.max_symbols,
    };
    let mut failed = Vec::new();
    let mut reports = Vec::new();
    for suite in suites {
        let report = verify::run(suite, &bounds, &ctx.budget)?;
        let passed = report.checks.iter().filter(|c| c.passed).count();
        if ctx.format == Format::Text {
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    writeln!(out, "{mark} {suite}: {}", c.name)?;
                } else {
                    writeln!(out, "{mark} {suite}: {} [{}]", c.name, c.detail)?;
                }
            }
            writeln!(out, "{suite}: {passed}/{} checks passed", report.checks.len())?;
        }
        if !report.passed() {
            failed.push(suite.name());
        }
        reports.push(report);
    }
    match ctx.format {
        Format::Text => {
            if failed.is_empty() {
                writeln!(out, "all checks passed")?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.name(),
                        "passed": r.passed(),
                        "checks": r.checks.iter().map(|c| json!({
                            "name": c.name, "passed": c.passed, "detail": c.detail,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            emit_json(out, &Value::Array(v))?;
        }
    }
    if !failed.is_empty() {
        return Err(CliError::Verification(format!("failing suites: {}", failed.join(", "))));
    }
    Ok(())
}

fn wp(a: &WpArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    if let Some(max_n) = a.max_n {
        let v = formulas::zograf_sequence(max_n)?;
        match ctx.format {
            Format::Text => {
                for (i, x) in v.iter().enumerate() {
                    writeln!(out, "{} {x}", i + 3)?;
                }
            }
            Format::Json => {
                let seq: Vec<Value> = v
                    .iter()
                    .enumerate()
                    .map(|(i, x)| json!({"n": i + 3, "v": x.to_string()}))
                    .collect();
                emit_json(out, &Value::Array(seq))?;
            }
        }
        return Ok(());
    }
    let n = a.n.expect("clap requires --n or --max-n");
    let vol = formulas::wp_volume(n)?;
    match ctx.format {
        Format::Text => writeln!(
            out,
            "v_{n} = {}; Vol = ({})·π^{}",
            vol.v, vol.coefficient, vol.pi_exponent
        )?,
        Format::Json => emit_json(
            out,
            &json!({
                "n": n,
                "v": vol.v.to_string(),
                "coefficient": vol.coefficient.to_string(),
                "pi_exponent": vol.pi_exponent,
            }),
        )?,
    }
    Ok(())
}

fn rect(a: &RectArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let seq = formulas::rect_recurrence(a.n)?;
    let mut mismatches = Vec::new();
    if a.check {
        for m in 1..=a.n {
            let counted = BigInt::from(parallel::count_bsd(&Word::repeat(Letter::R, m), m, &ctx.budget)?);
            let ie = formulas::partition_ie_sum(m)?;
            if counted != seq[m] || ie != seq[m] {
                mismatches.push(format!("a({m}) = {}, enumeration {counted}, inclusion-exclusion {ie}", seq[m]));
            }
        }
    }
    match ctx.format {
        Format::Text => {
            let line = seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            if !a.check {
                writeln!(out, "{line}")?;
            } else if mismatches.is_empty() {
                writeln!(out, "{line} (verified against enumeration)")?;
            } else {
                writeln!(out, "{line}")?;
                for m in &mismatches {
                    writeln!(out, "mismatch: {m}")?;
                }
            }
        }
        Format::Json => emit_json(
            out,
            &json!({
                "a": seq.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "checked": a.check,
                "mismatches": mismatches,
            }),
        )?,
    }
    if !mismatches.is_empty() {
        return Err(CliError::Verification("rectangle counts disagree".into()));
    }
    Ok(())
}

fn scan(a: &ScanArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let report = formulas::conjecture_scan(a.k)?;
    let words = |ws: &[Word]| {
        ws.iter()
            .map(|w| format!("{:?}", w.to_string()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let poly_of = |w: &Word| report.words.iter().find(|(v, _, _)| v == w).expect("scanned word");
    match ctx.format {
        Format::Text => {
            writeln!(
                out,
                "k = {}: {} words, {} isometry orbits, {} polynomial groups, {} count groups",
                report.k,
                report.words.len(),
                report.orbits.len(),
                report.polynomial_groups.len(),
                report.count_groups.len()
            )?;
            for orbit in &report.orbits {
                let (_, f, c) = poly_of(&orbit[0]);
                writeln!(out, "orbit {{{}}}: f = {f}; |BSD(w, k)| = {c}", words(orbit))?;
            }
            for group in &report.polynomial_groups {
                writeln!(out, "polynomial group {{{}}}", words(group))?;
            }
            writeln!(
                out,
                "isometric words share f_w: {}",
                if report.groups_are_unions_of_orbits() { "yes" } else { "NO" }
            )?;
            writeln!(
                out,
                "f_w separates orbits at this k: {}",
                if report.polynomial_separates_orbits() { "yes" } else { "no" }
            )?;
            for (x, y) in report.polynomial_counterexamples() {
                writeln!(out, "  same f_w, not isometric: {x:?} {y:?}", x = x.to_string(), y = y.to_string())?;
            }
            writeln!(
                out,
                "|BSD(w, k)| separates orbits at this k: {}",
                if report.count_separates_orbits() { "yes" } else { "no" }
            )?;
            for (x, y) in report.count_counterexamples() {
                writeln!(out, "  same count, not isometric: {x:?} {y:?}", x = x.to_string(), y = y.to_string())?;
            }
        }
        Format::Json => {
            let list = |ws: &[Vec<Word>]| -> Vec<Vec<String>> {
                ws.iter().map(|g| g.iter().map(|w| w.to_string()).collect()).collect()
            };
            let pairs = |ps: Vec<(Word, Word)>| -> Vec<[String; 2]> {
                ps.into_iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect()
            };
            emit_json(
                out,
                &json!({
                    "k": report.k,
                    "words": report.words.iter().map(|(w, f, c)| json!({
                        "word": w.to_string(),
                        "f": serde_json::to_value(PolynomialJson::from(f)).unwrap_or(Value::Null),
                        "bsd_at_k": c.to_string(),
                    })).collect::<Vec<_>>(),
                    "orbits": list(&report.orbits),
                    "polynomial_groups": list(&report.polynomial_groups),
                    "count_groups": list(&report.count_groups),
                    "isometric_share_polynomial": report.groups_are_unions_of_orbits(),
                    "polynomial_separates_orbits": report.polynomial_separates_orbits(),
                    "count_separates_orbits": report.count_separates_orbits(),
                    "polynomial_counterexamples": pairs(report.polynomial_counterexamples()),
                    "count_counterexamples": pairs(report.count_counterexamples()),
                }),
            )?;
        }
    }
    if !report.groups_are_unions_of_orbits() {
        return Err(CliError::Verification("isometric words with different polynomials".into()));
    }
    Ok(())
}

fn read_input(path: &std::path::Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn render(a: &RenderArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let (word, n) = (&a.shape.word, a.shape.n);
    positive_n(n)?;
    let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
    let dec = if let Some(path) = &a.input {
        let j: DecompositionJson = serde_json::from_str(&read_input(path)?)?;
        let dec = j.to_decomposition()?;
        if dec.diagram() != &*d {
            return Err(CliError::Input("the decomposition belongs to a different diagram".into()));
        }
        Some(dec)
    } else if let Some(i) = a.tiling {
        let search = BspSearch::new(word, n, true)?;
        ctx.budget.check_enumerate(search.symbols())?;
        let sigma = search
            .iter()
            .nth(i)
            .ok_or_else(|| CliError::Input(format!("({word:?}, {n}) has fewer than {} tilings", i + 1)))?;
        Some(perm::decomposition_of(&sigma, &d)?)
    } else {
        None
    };
    let art = d.render_ascii(dec.as_ref())?;
    match ctx.format {
        Format::Text => write!(out, "{art}")?,
        Format::Json => emit_json(
            out,
            &json!({
                "word": word.to_string(),
                "n": n,
                "lines": art.lines().collect::<Vec<_>>(),
            }),
        )?,
    }
    Ok(())
}

fn enumerate_cmd(a: &EnumerateArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let (word, n) = (&a.shape.word, a.shape.n);
    positive_n(n)?;
    let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
    let search = BspSearch::new(word, n, !a.tableaux)?;
    ctx.budget.check_enumerate(search.symbols())?;
    let limit = a.limit.unwrap_or(usize::MAX);
    for sigma in search.iter().take(limit) {
        if a.tableaux {
            let t = perm::psi_inverse_in(&sigma, &d)?;
            serde_json::to_writer(&mut *out, &TableauJson::from(&t))?;
        } else {
            let dec = perm::decomposition_of(&sigma, &d)?;
            serde_json::to_writer(&mut *out, &DecompositionJson::from(&dec))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn perm_cmd(a: &PermArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let (sigma, n) = (&a.sigma, a.n);
    positive_n(n)?;
    if sigma.len() < n {
        return Err(CliError::Input(format!("{sigma} has fewer than n = {n} entries")));
    }
    let k = sigma.len() - n;
    let word = sigma.word_of(n, k)?;
    let d = Arc::new(SimpleDiagram::new(word.clone(), n)?);
    let tableau = perm::psi_inverse_in(sigma, &d)?;
    let canonical = sigma.canonicalize(n);
    let dec = tableau.decomposition()?;
    match ctx.format {
        Format::Text => {
            writeln!(out, "word: {:?}", word.to_string())?;
            writeln!(out, "{n}-descents: {:?}", sigma.descents_k(n))?;
            writeln!(out, "canonical: {canonical}")?;
            writeln!(out, "inv_{n}: {}", canonical.inv_window(n))?;
            write!(out, "{}", d.render_ascii(Some(&dec))?)?;
        }
        Format::Json => emit_json(
            out,
            &json!({
                "sigma": sigma.to_string(),
                "word": word.to_string(),
                "descents": sigma.descents_k(n),
                "canonical": canonical.to_string(),
                "inv_n": canonical.inv_window(n),
                "tableau": serde_json::to_value(TableauJson::from(&tableau))?,
                "decomposition": serde_json::to_value(DecompositionJson::from(&dec))?,
            }),
        )?,
    }
    Ok(())
}

fn sign_word(o: std::cmp::Ordering) -> &'static str {
    match o {
        std::cmp::Ordering::Greater => "positive",
        std::cmp::Ordering::Less => "negative",
        std::cmp::Ordering::Equal => "zero",
    }
}

fn compare(a: &CompareArgs, ctx: &Context, out: Out<'_>) -> Result<(), CliError> {
    let r = formulas::straightness_compare(&a.v, &a.w)?;
    let (v, w) = (r.v.to_string(), r.w.to_string());
    match ctx.format {
        Format::Text => {
            writeln!(out, "f_{v} = {}", r.f_v)?;
            writeln!(out, "f_{w} = {}", r.f_w)?;
            writeln!(out, "f_{v} - f_{w} = {}", r.difference)?;
            writeln!(out, "hor: {} vs {}", r.hor_v, r.hor_w)?;
            writeln!(out, "sign of |BSD({v:?}, n)| - |BSD({w:?}, n)| for large n: {}", sign_word(r.eventual))?;
            writeln!(out, "consistent with |hor|: {}", if r.consistent_with_hor { "yes" } else { "no" })?;
            writeln!(out, "note: {}", StraightnessReport::NOTE)?;
        }
        Format::Json => emit_json(
            out,
            &json!({
                "v": v, "w": w,
                "f_v": serde_json::to_value(PolynomialJson::from(&r.f_v))?,
                "f_w": serde_json::to_value(PolynomialJson::from(&r.f_w))?,
                "difference": serde_json::to_value(PolynomialJson::from(&r.difference))?,
                "hor_v": r.hor_v, "hor_w": r.hor_w,
                "eventual_sign": sign_word(r.eventual),
                "subleading_sign": sign_word(r.subleading_sign),
                "consistent_with_hor": r.consistent_with_hor,
                "note": StraightnessReport::NOTE,
            }),
        )?,
    }
    Ok(())
}
