use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;

use wreathdet::classify::{check_verdict, table1_classify, Claim};
use wreathdet::counting::{
    csv_header, mp_wreath_brute, mp_wreath_formula, multipartition_count, n_table_aggregate,
    n_table_aggregate_by_compositions, n_table_for_composition, plot_header, table_enumeration_size, NTable,
};
use wreathdet::det::dim_wreath;
use wreathdet::eigen::det_via_eigenvalues;
use wreathdet::partition::partition_counts;
use wreathdet::reference::{compare_row, errata, reference_table};
use wreathdet::verify::{run_verification, Status, VerifyOptions};
use wreathdet::{det_irrep, Composition, Error, Multipartition, WreathParams};

use crate::{Failure, Outcome};

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn guard(estimated: BigUint, cap: u128) -> Result<(), Failure> {
    let estimated = estimated.to_u128().unwrap_or(u128::MAX);
    if estimated > cap {
        return Err(Error::CapExceeded { estimated, cap }.into());
    }
    Ok(())
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

/// Multipartitions on every distinct ordering of `a`.
fn composition_size(a: &Composition) -> BigUint {
    let per_ordering: BigUint = a.entries().iter().map(|&m| partition_counts(m)[m].clone()).product();
    a.ordering_count() * per_ordering
}

pub fn det(text: &str, r: Option<usize>, check: bool, json: bool) -> Result<Outcome, Failure> {
    let lambda: Multipartition = text.parse()?;
    if let Some(r) = r {
        lambda.check(WreathParams::new(lambda.size(), r)?)?;
    }
    let det = det_irrep(&lambda);
    let dim = dim_wreath(&lambda);
    let dual = check.then(|| det_via_eigenvalues(&lambda));
    let mismatch = dual.is_some_and(|d| d != det);
    let stdout = if json {
        let mut value = json!({
            "multipartition": lambda.to_string(),
            "n": lambda.size(),
            "r": lambda.r(),
            "det": det.label(),
            "x": det.zeta_exp,
            "y": det.sign_exp,
            "dim": dim.to_string(),
        });
        if let Some(d) = dual {
            value["eigenvalue_route"] = json!(d.label());
            value["agree"] = json!(d == det);
        }
        pretty(&value)
    } else {
        let mut s = format!("det: {}\nx: {}\ny: {}\ndim: {}\n", det.label(), det.zeta_exp, det.sign_exp, dim);
        if let Some(d) = dual {
            let _ = writeln!(s, "eigenvalue route: {} ({})", d.label(), if d == det { "agrees" } else { "DISAGREES" });
        }
        s
    };
    Ok(Outcome { stdout, mismatch, ..Outcome::default() })
}

fn render_table(tables: &[NTable], r: usize) -> String {
    let mut s = csv_header(r);
    s.push('\n');
    for t in tables {
        s.push_str(&t.csv_row());
        s.push('\n');
    }
    s
}

pub fn count(
    n: Option<usize>,
    r: Option<usize>,
    composition: Option<&str>,
    check: bool,
    strict: bool,
    json: bool,
    cap: u128,
) -> Result<Outcome, Failure> {
    let mut outcome = Outcome::default();
    match composition {
        Some(text) => {
            let a: Composition = text.parse()?;
            if let Some(r) = r {
                if r != a.len() {
                    return Err(Error::ComponentCount { expected: r, found: a.len() }.into());
                }
            }
            if let Some(n) = n {
                if n != a.size() {
                    return Err(Error::SizeMismatch { expected: n, found: a.size() }.into());
                }
            }
            if a.is_empty() {
                return Err(Error::ZeroRank.into());
            }
            let a = a.canonical();
            guard(composition_size(&a), cap)?;
            let table = n_table_for_composition(&a)?;
            if check {
                for c in &table.comparisons {
                    let fails = !c.agrees && (!c.formula.is_reference_claim() || strict);
                    if !c.agrees {
                        let _ = writeln!(
                            outcome.stderr,
                            "{} {}: formula {} vs enumerated {}{}",
                            c.formula.name(),
                            c.quantity,
                            c.predicted,
                            c.enumerated,
                            if fails { "" } else { " (published statement; reported)" }
                        );
                    }
                    outcome.mismatch |= fails;
                }
            }
            outcome.stdout = if json { pretty(&table) } else { render_table(&[table.table], a.len()) };
        }
        None => {
            let (n, r) = match (n, r) {
                (Some(n), Some(r)) => (n, r),
                _ => return Err(usage("count needs --n and --r, or --composition")),
            };
            let params = WreathParams::new(n, r)?;
            guard(multipartition_count(params), cap)?;
            let table = n_table_aggregate(params);
            if check {
                let other = n_table_aggregate_by_compositions(params)?;
                if other != table {
                    outcome.mismatch = true;
                    let _ =
                        writeln!(outcome.stderr, "counting paths disagree: {} vs {}", table.csv_row(), other.csv_row());
                }
                if table.total() != multipartition_count(params) {
                    outcome.mismatch = true;
                    let _ = writeln!(outcome.stderr, "total {} differs from |P(n, r)|", table.total());
                }
            }
            outcome.stdout = if json { pretty(&table) } else { render_table(&[table], r) };
        }
    }
    Ok(outcome)
}

pub fn table(
    r: usize,
    n_max: usize,
    plot: Option<PathBuf>,
    check: bool,
    strict: bool,
    json: bool,
    cap: u128,
) -> Result<Outcome, Failure> {
    if r == 0 {
        return Err(Error::ZeroRank.into());
    }
    if n_max == 0 {
        return Err(usage("--n must be at least 1"));
    }
    guard(table_enumeration_size(n_max, r), cap)?;
    let tables: Vec<NTable> = (1..=n_max).map(|n| n_table_aggregate(WreathParams { n, r })).collect();
    let mut outcome = Outcome::default();
    let mut reference_report = Vec::new();
    if check {
        let known = errata();
        let published = reference_table(r);
        for t in &tables {
            let params = t.params;
            let other = n_table_aggregate_by_compositions(params)?;
            if &other != t {
                outcome.mismatch = true;
                let _ = writeln!(
                    outcome.stderr,
                    "n={}: counting paths disagree: {} vs {}",
                    params.n,
                    t.csv_row(),
                    other.csv_row()
                );
            }
            if t.total() != multipartition_count(params) {
                outcome.mismatch = true;
                let _ = writeln!(outcome.stderr, "n={}: total differs from |P(n, r)|", params.n);
            }
            if let Some(row) = published.as_ref().and_then(|p| p.row(params.n)) {
                for m in compare_row(row, t, &known) {
                    let _ = writeln!(
                        outcome.stderr,
                        "published r={} n={} {}: {} vs computed {} ({})",
                        m.r,
                        m.n,
                        m.column,
                        m.published,
                        m.computed,
                        if m.documented { "listed in errata" } else { "undocumented" }
                    );
                    outcome.mismatch |= strict && !m.documented;
                    reference_report.push(m);
                }
            }
        }
    }
    outcome.stdout = if json {
        if check {
            pretty(&json!({ "tables": tables, "published_mismatches": reference_report }))
        } else {
            pretty(&tables)
        }
    } else {
        render_table(&tables, r)
    };
    if let Some(path) = plot {
        let mut s = plot_header(r);
        s.push('\n');
        for t in &tables {
            s.push_str(&t.plot_row());
            s.push('\n');
        }
        outcome.extra_files.push((path, s));
    }
    Ok(outcome)
}

pub fn classify(text: &str, r: Option<usize>, check: bool, json: bool, cap: u128) -> Result<Outcome, Failure> {
    let a: Composition = text.parse()?;
    let r = r.unwrap_or(a.len());
    if r < a.len() {
        return Err(Error::ComponentCount { expected: r, found: a.len() }.into());
    }
    let mut entries = a.entries().to_vec();
    entries.resize(r, 0);
    let a = Composition::new(entries);
    let verdict = table1_classify(&a, r)?;
    let checked = if check {
        guard(composition_size(&a.canonical()), cap)?;
        Some(check_verdict(&verdict))
    } else {
        None
    };
    let mismatch = checked.as_ref().is_some_and(|c| !c.passed());
    let join = |items: Vec<String>| if items.is_empty() { "none".to_string() } else { items.join(",") };
    let stdout = if json {
        let mut value = serde_json::to_value(&verdict).expect("serializable");
        if let Some(c) = &checked {
            value["check"] = serde_json::to_value(c).expect("serializable");
            value["check"]["passed"] = json!(c.passed());
        }
        pretty(&value)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "composition: {}", verdict.a);
        let _ = writeln!(s, "n: {}", verdict.n);
        let _ = writeln!(s, "r: {}", verdict.r);
        let _ = writeln!(s, "residue-class test: {}", verdict.residue_class_holds);
        let _ = writeln!(
            s,
            "parity conditions: {}",
            join(verdict.parity_conditions.iter().map(|c| c.to_string()).collect())
        );
        let _ = writeln!(s, "families: {}", join(verdict.rows.iter().map(|r| r.to_string()).collect()));
        for c in &verdict.claims {
            let what = match c.claim {
                Claim::ZetaTrivial => "det is +-1",
                Claim::SignTrivial => "det is a power of zeta",
            };
            let _ =
                writeln!(s, "  family {}: {} ({})", c.row, what, if c.supported { "supported" } else { "unsupported" });
        }
        let _ = writeln!(s, "possible: {}", verdict.possible_values.join(", "));
        for note in &verdict.notes {
            let _ = writeln!(s, "note: {note}");
        }
        if let Some(c) = &checked {
            let _ = writeln!(s, "realized: {}", c.realized.join(", "));
            let _ = writeln!(s, "check: {}", if c.passed() { "pass" } else { "FAIL" });
        }
        s
    };
    Ok(Outcome { stdout, mismatch, ..Outcome::default() })
}

pub fn verify(
    ranks: Vec<usize>,
    n_max: usize,
    strict: bool,
    inject_fault: bool,
    json: bool,
    cap: u128,
) -> Result<Outcome, Failure> {
    if ranks.contains(&0) {
        return Err(Error::ZeroRank.into());
    }
    let estimate: BigUint = ranks.iter().map(|&r| table_enumeration_size(n_max, r)).sum();
    guard(estimate, cap)?;
    let options = VerifyOptions { ranks, n_max, strict_paper: strict, inject_fault };
    let report = run_verification(&options);
    let stdout = if json {
        pretty(&report)
    } else {
        let mut s = String::new();
        for rec in report.records.iter().filter(|r| r.status != Status::Pass) {
            let tag = if rec.status == Status::Fail { "FAIL" } else { "REPORTED" };
            let _ =
                writeln!(s, "{tag} {} [{}]: {}/{} cases disagree", rec.family, rec.scope, rec.mismatches, rec.cases);
            for m in &rec.examples {
                let doc = if m.documented { " (listed in errata)" } else { "" };
                let _ = writeln!(s, "    {}: formula {} vs oracle {}{doc}", m.inputs, m.formula, m.oracle);
            }
        }
        let cases: u64 = report.records.iter().map(|r| r.cases).sum();
        let _ = writeln!(
            s,
            "{} checks, {} cases; {} failed, {} reported",
            report.records.len(),
            cases,
            report.failures().count(),
            report.reported().count()
        );
        let _ = writeln!(s, "{}", if report.passed { "PASS" } else { "FAIL" });
        s
    };
    Ok(Outcome { stdout, mismatch: !report.passed, ..Outcome::default() })
}

pub fn mp(n: usize, r: usize, p: u64, json: bool, cap: u128) -> Result<Outcome, Failure> {
    let params = WreathParams::new(n, r)?;
    let formula = mp_wreath_formula(n, r, p)?;
    guard(multipartition_count(params), cap)?;
    let brute = mp_wreath_brute(params, p)?;
    let mismatch = formula != brute;
    let stdout = if json {
        pretty(&json!({
            "n": n, "r": r, "p": p,
            "generating_function": formula.to_string(),
            "enumeration": brute.to_string(),
            "agree": !mismatch,
        }))
    } else {
        format!("generating function: {formula}\nenumeration: {brute}\n")
    };
    let stderr = if mismatch { "the two values disagree\n".to_string() } else { String::new() };
    Ok(Outcome { stdout, stderr, mismatch, ..Outcome::default() })
}
