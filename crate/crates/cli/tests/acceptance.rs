//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any of them fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use cyclic_census::checks::{self, Grid, Selector};
use cyclic_census::corpus::{load_corpus, Corpus, Subject};
use cyclic_census::report::{CheckResult, Report, Status};
use cyclic_census_core::arith::pow;
use cyclic_census_core::catalog::{build, closed_form_count, proper_omega_census_bound, Family, FamilySpec};
use cyclic_census_core::census::{census_by_enumeration, census_by_sum};
use cyclic_census_core::coset::DEFAULT_MAX_COSETS;
use cyclic_census_core::{Group, Perm};
use serde_json::Value;

type Outcome = Result<String, String>;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn subject<'a>(corpus: &'a Corpus, name: &str) -> Result<&'a Subject, String> {
    corpus.subjects.iter().find(|s| s.name == name).ok_or_else(|| format!("corpus has no group `{name}`"))
}

fn total(s: &Subject) -> Result<u64, String> {
    let a = s.census().map_err(|e| e.to_string())?.total;
    let b = s.census_by_enumeration().map_err(|e| e.to_string())?.total;
    if a != b {
        return Err(format!("{}: census routes disagree, {a} vs {b}", s.name));
    }
    Ok(a)
}

fn results_for<'a>(results: &'a [CheckResult], id: &str) -> Vec<&'a CheckResult> {
    results.iter().filter(|r| r.id == id).collect()
}

fn no_failures(results: &[CheckResult]) -> Result<(), String> {
    match results.iter().find(|r| r.status.is_fail()) {
        Some(r) => Err(format!("{} {} failed: expected [{}] actual [{}]", r.id, r.subject, r.expected, r.actual)),
        None => Ok(()),
    }
}

fn find<'a>(results: &'a [CheckResult], id: &str, subject: &str) -> Result<&'a CheckResult, String> {
    results
        .iter()
        .find(|r| r.id == id && r.subject == subject)
        .ok_or_else(|| format!("no result for {id} {subject}"))
}

fn criterion_1() -> Outcome {
    let mut required = Vec::new();
    for n in 3..=7 {
        required.push(FamilySpec::new(Family::Dihedral, 2, n));
        required.push(FamilySpec::new(Family::Quaternion, 2, n));
        if n >= 4 {
            required.push(FamilySpec::new(Family::Quasidihedral, 2, n));
        }
    }
    for p in [2, 3, 5] {
        for n in 3..=5 {
            required.push(FamilySpec::new(Family::CpXCpn1, p, n));
            if p != 2 || n >= 4 {
                required.push(FamilySpec::new(Family::Modular, p, n));
            }
        }
    }
    let required: Vec<FamilySpec> = required.into_iter().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for spec in &required {
        let g = build(spec, DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
        let closed = closed_form_count(spec).map_err(|e| e.to_string())?;
        let by_sum = census_by_sum(&g).map_err(|e| e.to_string())?.total;
        let by_enum = census_by_enumeration(&g).map_err(|e| e.to_string())?.total;
        if !(closed == by_sum && by_sum == by_enum) {
            return Err(format!("{spec}: closed form {closed}, sum {by_sum}, enumeration {by_enum}"));
        }
    }
    let grid = checks::build_grid(Grid::default(), DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
    let results = checks::run(Selector::Eq1, &Corpus::empty(), &grid);
    no_failures(&results)?;
    for spec in &required {
        let r = find(&results, "eq1", &spec.to_string())?;
        if r.status != Status::Pass {
            return Err(format!("eq1 {spec} is {}", r.status));
        }
    }
    Ok(format!("{} family members agree on all three counts", required.len()))
}

fn criterion_2(corpus: &Corpus) -> Outcome {
    let want = [("C3wrC3", 29), ("E27sC3", 35), ("M27xC3", 23)];
    for (name, value) in want {
        let s = subject(corpus, name)?;
        if s.group.order() != 81 || total(s)? != value {
            return Err(format!("{name}: order {}, census {}", s.group.order(), total(s)?));
        }
    }
    Ok("C3wrC3 = 29, E27sC3 = 35, M27xC3 = 23".into())
}

fn aggregate(results: &[CheckResult], order: u64, expected: &str) -> Result<(), String> {
    let r = find(results, "thm23", &format!("order-{order}"))?;
    if r.status != Status::Pass || r.actual != expected || r.expected != expected {
        return Err(format!("order-{order}: {} expected [{}] actual [{}]", r.status, r.expected, r.actual));
    }
    Ok(())
}

fn criterion_3(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    aggregate(results, 8, "min 5/8 at {Q8}")?;
    aggregate(results, 16, "min 1/2 at {C2xC8,M16,Q16}")?;
    for name in ["C2xC8", "M16", "Q16"] {
        let t = total(subject(corpus, name)?)?;
        if t != 8 {
            return Err(format!("{name}: census {t}"));
        }
    }
    for order in [8, 16] {
        let members = corpus.subjects.iter().filter(|s| s.group.order() == order).count();
        let expected = if order == 8 { 5 } else { 14 };
        if members != expected {
            return Err(format!("{members} groups of order {order}"));
        }
    }
    Ok("{Q8} at 5/8; {C2xC8, M16, Q16} at 1/2 with census 8".into())
}

fn criterion_4(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    aggregate(results, 27, "min 8/27 at {C3xC9,M27}")?;
    for name in ["C3xC9", "M27"] {
        let t = total(subject(corpus, name)?)?;
        if t != 8 {
            return Err(format!("{name}: census {t}"));
        }
    }
    Ok("{C3xC9, M27} at 8/27 with census 8".into())
}

/// Exponent `p^2` and `Ω₁` a subgroup of index `p`.
fn meets_equality_characterization(g: &Group, p: u64, n: u32) -> bool {
    let set = g.omega1_set(p).expect("p-group");
    let sub = g.omega1_subgroup(p).expect("p-group");
    g.exponent() == p * p && set.len() as u64 == sub.order() && sub.order() == pow(p, n - 1)
}

fn criterion_5(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    no_failures(&results_for(results, "thm31").into_iter().cloned().collect::<Vec<_>>())?;
    let mut equal = BTreeMap::new();
    let mut characterized = BTreeSet::new();
    for s in &corpus.subjects {
        let Some((p, n)) = s.p_n() else { continue };
        if p == 2 || n < 3 {
            continue;
        }
        if meets_equality_characterization(&s.group, p, n) {
            characterized.insert(s.name.clone());
        }
        let r = find(results, "thm31", &s.name)?;
        if r.status == Status::Pass && r.actual.starts_with("= ") {
            let t = total(s)?;
            if t != proper_omega_census_bound(p, n) {
                return Err(format!("{}: equality reported at {t}", s.name));
            }
            equal.insert(s.name.clone(), t);
        }
    }
    let names: BTreeSet<String> = equal.keys().cloned().collect();
    if names != characterized {
        return Err(format!("equality at {names:?}, characterization gives {characterized:?}"));
    }
    let want: BTreeMap<String, u64> =
        [("C3xC9", 8), ("C9xC3^2", 23), ("M125xC5", 57), ("M27", 8), ("M27xC3", 23)].into_iter().map(|(n, v)| (n.to_owned(), v)).collect();
    if equal != want {
        return Err(format!("equality cases {equal:?}"));
    }
    Ok("equality exactly at M27xC3 = 23, C9xC3^2 = 23, M125xC5 = 57 and, at order 27, C3xC9 = M27 = 8".into())
}

fn criterion_6(results: &[CheckResult]) -> Outcome {
    let rs = results_for(results, "lemma22");
    let applied: Vec<_> = rs.iter().filter(|r| r.status == Status::Pass || r.status.is_fail()).collect();
    if let Some(r) = applied.iter().find(|r| r.status.is_fail()) {
        return Err(format!("{}: expected [{}] actual [{}]", r.subject, r.expected, r.actual));
    }
    if applied.is_empty() {
        return Err("no corpus group meets the hypothesis".into());
    }
    Ok(format!("strict on all {} groups meeting the hypothesis", applied.len()))
}

fn criterion_7(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    let ids = [
        "global.oracle",
        "global.partition",
        "global.miller",
        "global.richards",
        "global.alpha_max",
        "global.alpha_min",
        "global.decomposition",
    ];
    for id in ids {
        let rs = results_for(results, id);
        if rs.len() != corpus.subjects.len() {
            return Err(format!("{id}: {} results for {} groups", rs.len(), corpus.subjects.len()));
        }
        if let Some(r) = rs.iter().find(|r| r.status.is_fail()) {
            return Err(format!("{id} {}: expected [{}] actual [{}]", r.subject, r.expected, r.actual));
        }
    }
    let global: Vec<CheckResult> = results.iter().filter(|r| r.id.starts_with("global.")).cloned().collect();
    no_failures(&global)?;
    let odd_applied = results_for(results, "global.miller").iter().filter(|r| r.status == Status::Pass).count();
    if odd_applied == 0 {
        return Err("Miller congruence never applied".into());
    }
    let passed = global.iter().filter(|r| r.status == Status::Pass).count();
    Ok(format!("{passed} global checks pass, none fail"))
}

fn criterion_8(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    let p3: Vec<CheckResult> = results.iter().filter(|r| r.id.starts_with("p3.")).cloned().collect();
    no_failures(&p3)?;
    for s in corpus.subjects.iter().filter(|s| s.p_n().is_some_and(|(p, _)| p == 3) && s.group.exponent() != 3) {
        for id in ["p3.c1", "p3.census"] {
            if find(results, id, &s.name)?.status != Status::Pass {
                return Err(format!("{id} {} did not pass", s.name));
            }
        }
    }
    let order_243: Vec<&Subject> = corpus.subjects.iter().filter(|s| s.group.order() == 243).collect();
    if order_243.len() != 2 {
        return Err(format!("{} groups of order 243", order_243.len()));
    }
    let centers: BTreeSet<u64> = order_243.iter().map(|s| s.group.center().order()).collect();
    if centers != BTreeSet::from([3, 9]) {
        return Err(format!("order-243 centers {centers:?}"));
    }
    for s in order_243 {
        let c = s.census().map_err(|e| e.to_string())?;
        if s.group.exponent() != 9 || c.c1() != 94 || 2 * c.c1() != 7 * 27 - 1 {
            return Err(format!("{}: exponent {}, c1 {}", s.name, s.group.exponent(), c.c1()));
        }
    }
    Ok("bounds hold on every p = 3 group of exponent above 3; both order-243 groups have c1 = 94".into())
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    for s in &corpus.subjects {
        let Some(expected) = s.expected_order else {
            return Err(format!("{} declares no order", s.name));
        };
        if s.cosets != Some(expected as usize) || s.group.order() != expected {
            return Err(format!("{}: {:?} cosets, order {}, declared {expected}", s.name, s.cosets, s.group.order()));
        }
    }
    let q8 = subject(corpus, "Q8")?;
    let a = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).map_err(|e| e.to_string())?;
    let b = Perm::from_cycles(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]]).map_err(|e| e.to_string())?;
    let explicit = Group::closure(8, &[a, b]).map_err(|e| e.to_string())?;
    let orders = |g: &Group| {
        let mut v = g.element_orders();
        v.sort_unstable();
        v
    };
    if explicit.order() != 8 || q8.cosets != Some(8) || orders(&explicit) != orders(&q8.group) {
        return Err(format!("Q8: closure order {}, cosets {:?}", explicit.order(), q8.cosets));
    }
    Ok(format!("{} presentations certified; Q8 matches the explicit closure", corpus.subjects.len()))
}

fn run_binary(args: &[&str]) -> Result<(Option<i32>, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-census"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn strip_timings(text: &str) -> Result<Value, String> {
    let mut v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    for c in v["checks"].as_array_mut().ok_or("no checks array")? {
        c.as_object_mut().ok_or("check is not an object")?.remove("elapsed_ms");
    }
    Ok(v)
}

fn criterion_10() -> Outcome {
    let dir = corpus_dir();
    let dir = dir.to_str().ok_or("corpus path is not UTF-8")?;
    let args = ["verify", "all", "--corpus", dir, "--json"];
    let (code1, first) = run_binary(&args)?;
    let (code2, second) = run_binary(&args)?;
    if code1 != Some(0) || code2 != Some(0) {
        return Err(format!("exit codes {code1:?} and {code2:?}"));
    }
    let (a, b) = (strip_timings(&first)?, strip_timings(&second)?);
    if a != b {
        return Err("reports differ".into());
    }
    let n = a["checks"].as_array().map_or(0, Vec::len);
    Ok(format!("two runs agree on all {n} results"))
}

fn invariant_reports(corpus: &Corpus, results: &[CheckResult]) -> Outcome {
    let report = Report::new(corpus.sha256.clone(), results.to_vec());
    let s = &report.summary;
    if s.pass + s.fail + s.skipped != report.checks.len() || s.fail != 0 {
        return Err(format!("summary {s:?} for {} results", report.checks.len()));
    }
    let mut subjects_by_id: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for r in &report.checks {
        subjects_by_id.entry(r.id.as_str()).or_default().insert(r.subject.as_str());
    }
    let names: BTreeSet<&str> = corpus.subjects.iter().map(|s| s.name.as_str()).collect();
    let families: BTreeMap<&str, &[&str]> = [("thm23", &["thm23", "thm23/restricted-corpus"][..])].into_iter().collect();
    for (id, subjects) in &subjects_by_id {
        if id.starts_with("eq1") || id.starts_with("thm23") {
            continue;
        }
        if let Some(missing) = names.iter().find(|n| !subjects.contains(*n)) {
            return Err(format!("{id} has no result for {missing}"));
        }
    }
    let thm23: BTreeSet<&str> =
        families["thm23"].iter().flat_map(|id| subjects_by_id.get(id).into_iter().flatten().copied()).collect();
    if let Some(missing) = names.iter().find(|n| !thm23.contains(*n)) {
        return Err(format!("thm23 has no result for {missing}"));
    }
    Ok(format!("{} ids cover all {} groups; summary {}/{}/{}", subjects_by_id.len(), names.len(), s.pass, s.fail, s.skipped))
}

fn report(label: &str, outcome: Outcome) -> bool {
    match outcome {
        Ok(detail) => {
            println!("PASS {label}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL {label}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let corpus = match load_corpus(&corpus_dir(), DEFAULT_MAX_COSETS) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL corpus: {e:#}");
            return ExitCode::FAILURE;
        }
    };
    let results = checks::run(Selector::All, &corpus, &[]);
    let outcomes = [
        report("criterion 1 (closed forms on the family grid)", criterion_1()),
        report("criterion 2 (order-81 census values)", criterion_2(&corpus)),
        report("criterion 3 (second minimum at orders 8 and 16)", criterion_3(&corpus, &results)),
        report("criterion 4 (second minimum at order 27)", criterion_4(&corpus, &results)),
        report("criterion 5 (proper Omega bound and its equality cases)", criterion_5(&corpus, &results)),
        report("criterion 6 (small exponent lower bound)", criterion_6(&results)),
        report("criterion 7 (global properties)", criterion_7(&corpus, &results)),
        report("criterion 8 (p = 3 bounds)", criterion_8(&corpus, &results)),
        report("criterion 9 (order certification)", criterion_9(&corpus)),
        report("criterion 10 (deterministic reports)", criterion_10()),
        report("invariant (no silent skips, consistent summary)", invariant_reports(&corpus, &results)),
    ];
    let failed = outcomes.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} pass, {failed} fail", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
