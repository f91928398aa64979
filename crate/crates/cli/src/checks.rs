//! The verification checks. Each check reports one result per subject, so
//! a group that falls outside a hypothesis shows up as skipped rather than
//! disappearing from the report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use anyhow::Result;
use cyclic_census_core::arith::{divisor_count, is_prime, pow, Rational};
use cyclic_census_core::catalog::{
    c1_bound_proper_omega, census_bound_from_c1, closed_form_count, p3_c1_bound, p3_census_bound,
    proper_omega_census_bound, Family, FamilySpec,
};
use cyclic_census_core::census::{census_by_sum, totient_sum_outside};
use cyclic_census_core::{CyclicCensus, Group, Subgroup};
use rayon::prelude::*;

use crate::corpus::{Corpus, Subject};
use crate::report::{timed, CheckResult};

/// Family tag marking the 3-groups that attain the `p = 3` bounds.
pub const P3_EXTREMAL_TAG: &str = "p3_extremal";

/// Number of isomorphism classes for the orders whose classification the
/// corpus ships in full.
const KNOWN_GROUP_COUNTS: &[(u64, usize)] = &[(8, 5), (16, 14), (27, 5)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Eq1,
    Thm23,
    Lemma22,
    Thm31,
    P3,
    Global,
}

impl Selector {
    fn includes(self, other: Selector) -> bool {
        self == Selector::All || self == other
    }
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Selector::All,
            "eq1" => Selector::Eq1,
            "thm23" => Selector::Thm23,
            "lemma22" => Selector::Lemma22,
            "thm31" => Selector::Thm31,
            "p3" => Selector::P3,
            "global" => Selector::Global,
            other => return Err(format!("unknown check selector `{other}`")),
        })
    }
}

/// Bounds of the family-spec grid: primes up to `pmax`, exponents up to
/// `nmax` (two more for the 2-group families).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub pmax: u64,
    pub nmax: u32,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { pmax: 5, nmax: 5 }
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, n) = s.split_once(',').ok_or_else(|| format!("expected `pmax,nmax`, found `{s}`"))?;
        let pmax = p.trim().parse().map_err(|_| format!("bad pmax `{p}`"))?;
        let nmax = n.trim().parse().map_err(|_| format!("bad nmax `{n}`"))?;
        Ok(Grid { pmax, nmax })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.pmax, self.nmax)
    }
}

pub fn grid_specs(grid: Grid) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    let mut push = |family: Family, p: u64, n: u32| {
        if let Ok(spec) = FamilySpec::new(family, p, n) {
            specs.push(spec);
        }
    };
    for p in (2..=grid.pmax).filter(|&p| is_prime(p)) {
        for n in 3..=grid.nmax {
            push(Family::Cyclic, p, n);
            push(Family::ElemAbelian, p, n);
            push(Family::CpXCpn1, p, n);
            push(Family::Modular, p, n);
        }
        if p > 2 && grid.nmax >= 3 {
            push(Family::ExtraspecialExpP2, p, 3);
        }
    }
    if grid.pmax >= 2 {
        for n in 3..=grid.nmax + 2 {
            push(Family::Dihedral, 2, n);
            push(Family::Quaternion, 2, n);
            push(Family::Quasidihedral, 2, n);
        }
    }
    specs
}

pub fn build_grid(grid: Grid, max_cosets: usize) -> Result<Vec<Subject>> {
    grid_specs(grid).par_iter().map(|spec| Subject::from_spec(spec, max_cosets)).collect()
}

/// Runs the selected checks over the corpus (and, for `eq1`, the grid).
pub fn run(selector: Selector, corpus: &Corpus, grid: &[Subject]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if selector.includes(Selector::Eq1) {
        out.extend(grid.par_iter().flat_map_iter(eq1_grid).collect::<Vec<_>>());
        out.extend(corpus.subjects.par_iter().map(eq1_tagged).collect::<Vec<_>>());
        out.extend(modular_matches_abelian(grid));
    }
    if selector.includes(Selector::Thm23) {
        out.extend(second_minimum_checks(&corpus.subjects));
    }
    let per_subject: &[(Selector, fn(&Subject) -> Vec<CheckResult>)] = &[
        (Selector::Lemma22, |s| vec![lemma22(s)]),
        (Selector::Thm31, thm31),
        (Selector::P3, p3_bounds),
        (Selector::Global, global),
    ];
    for (sel, check) in per_subject {
        if selector.includes(*sel) {
            out.extend(corpus.subjects.par_iter().flat_map_iter(check).collect::<Vec<_>>());
        }
    }
    out
}

/// The census of a p-group of order `p^n` with `n >= min_n`, or the reason
/// the subject is out of scope.
fn census_in_class(s: &Subject, min_n: u32) -> Result<(u64, u32, &CyclicCensus), String> {
    let Some((p, n)) = s.p_n() else {
        return Err("not a p-group".into());
    };
    if n < min_n {
        return Err(format!("|G| = p^{n}, needs n >= {min_n}"));
    }
    let c = s.census().map_err(|e| e.to_string())?;
    Ok((p, n, c))
}

fn paths_agree(s: &Subject) -> Result<u64, String> {
    let by_sum = s.census().map_err(|e| e.to_string())?;
    let by_enum = s.census_by_enumeration().map_err(|e| e.to_string())?;
    if by_sum.total == by_enum.total {
        Ok(by_sum.total)
    } else {
        Err(format!("sum={},enumeration={}", by_sum.total, by_enum.total))
    }
}

fn eq1_grid(s: &Subject) -> Vec<CheckResult> {
    let crate::corpus::Source::Spec(spec) = &s.source else {
        return Vec::new();
    };
    vec![timed(|| match closed_form_count(spec) {
        Ok(expected) => match paths_agree(s) {
            Ok(total) => CheckResult::compare("eq1", &s.name, expected, total),
            Err(both) => CheckResult::verdict("eq1", &s.name, false, expected, both),
        },
        Err(e) => CheckResult::skipped("eq1", &s.name, e.to_string()),
    })]
}

/// Corpus files whose family tag names a closed-form family.
fn eq1_tagged(s: &Subject) -> CheckResult {
    timed(|| {
        let Some(tag) = s.family.as_deref() else {
            return CheckResult::skipped("eq1", &s.name, "no family tag");
        };
        let Some((p, n)) = s.p_n() else {
            return CheckResult::skipped("eq1", &s.name, "not a p-group");
        };
        let spec = match format!("{tag}:p={p},n={n}").parse::<FamilySpec>() {
            Ok(spec) => spec,
            Err(_) => return CheckResult::skipped("eq1", &s.name, format!("family `{tag}` has no closed form")),
        };
        match closed_form_count(&spec) {
            Ok(expected) => match paths_agree(s) {
                Ok(total) => CheckResult::compare("eq1", &s.name, expected, total),
                Err(both) => CheckResult::verdict("eq1", &s.name, false, expected, both),
            },
            Err(_) => CheckResult::skipped("eq1", &s.name, format!("family `{tag}` has no closed form")),
        }
    })
}

/// `|C(M(p^n))| = |C(C_p × C_{p^{n-1}})|` at every grid point holding both.
fn modular_matches_abelian(grid: &[Subject]) -> Vec<CheckResult> {
    let mut by_point: BTreeMap<(u64, u32), (Option<&Subject>, Option<&Subject>)> = BTreeMap::new();
    for s in grid {
        if let crate::corpus::Source::Spec(spec) = &s.source {
            let slot = by_point.entry((spec.p(), spec.n())).or_default();
            match spec.family() {
                Family::Modular => slot.0 = Some(s),
                Family::CpXCpn1 => slot.1 = Some(s),
                _ => {}
            }
        }
    }
    by_point
        .into_iter()
        .filter_map(|((p, n), pair)| match pair {
            (Some(m), Some(a)) => Some(timed(|| {
                let subject = format!("p={p},n={n}");
                match (m.census(), a.census()) {
                    (Ok(cm), Ok(ca)) => CheckResult::compare("eq1.modular_vs_abelian", &subject, ca.total, cm.total),
                    _ => CheckResult::verdict("eq1.modular_vs_abelian", &subject, false, "census", "census failed"),
                }
            })),
            _ => None,
        })
        .collect()
}

/// The smallest `α` over non-cyclic groups of order `p^n`, and the family
/// tags of the groups attaining it.
pub fn second_minimum(p: u64, n: u32) -> (Rational, &'static [&'static str]) {
    let order = pow(p, n);
    match (p, n) {
        (2, 3) => (Rational::from_ratio(5, 8), &["quaternion"]),
        (2, 4) => (Rational::from_ratio(8, 16), &["cp_x_cpn1", "modular", "quaternion"]),
        _ => (Rational::from_ratio(u64::from(n - 1) * p + 2, order), &["cp_x_cpn1", "modular"]),
    }
}

/// Invariants that separate the groups of each fully shipped order.
fn fingerprint(s: &Subject, p: u64) -> Vec<u64> {
    let g = &s.group;
    let mut orders: BTreeMap<u64, u64> = BTreeMap::new();
    for o in g.element_orders() {
        *orders.entry(o).or_default() += 1;
    }
    let mut v: Vec<u64> = orders.into_iter().flat_map(|(o, c)| [o, c]).collect();
    v.push(u64::MAX);
    v.push(g.center().order());
    v.push(g.derived_subgroup().order());
    v.push(g.frattini_subgroup(p).map(|f| f.order()).unwrap_or(0));
    v.push(g.omega1_subgroup(p).map(|f| f.order()).unwrap_or(0));
    v.push(s.maximal_subgroups().len() as u64);
    v
}

/// Whether the corpus holds one group from every isomorphism class of the
/// given order, judged by count and pairwise distinct fingerprints.
fn is_complete(order: u64, p: u64, members: &[&Subject]) -> bool {
    let Some(&(_, count)) = KNOWN_GROUP_COUNTS.iter().find(|(m, _)| *m == order) else {
        return false;
    };
    let prints: BTreeSet<Vec<u64>> = members.iter().map(|s| fingerprint(s, p)).collect();
    members.len() == count && prints.len() == count
}

fn alpha_relation(alpha: Rational, v: Rational) -> &'static str {
    match alpha.cmp(&v) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    }
}

fn second_minimum_checks(subjects: &[Subject]) -> Vec<CheckResult> {
    let mut by_order: BTreeMap<u64, Vec<&Subject>> = BTreeMap::new();
    let mut out = Vec::new();
    for s in subjects {
        match census_in_class(s, 3) {
            Ok(_) => by_order.entry(s.group.order()).or_default().push(s),
            Err(reason) => out.push(CheckResult::skipped("thm23", &s.name, reason)),
        }
    }
    for (order, members) in by_order {
        let (p, n) = members[0].p_n().expect("grouped by p-group order");
        let complete = is_complete(order, p, &members);
        let id = if complete { "thm23" } else { "thm23/restricted-corpus" };
        let (v, tags) = second_minimum(p, n);
        let predicted = |s: &Subject| s.family.as_deref().is_some_and(|t| tags.contains(&t));

        let mut min: Option<Rational> = None;
        for s in &members {
            let alpha = s.census().expect("checked above").alpha;
            if s.is_cyclic() {
                out.push(CheckResult::skipped(id, &s.name, "cyclic group excluded"));
                continue;
            }
            min = Some(min.map_or(alpha, |m| m.min(alpha)));
            let expected_rel = if predicted(s) { "=" } else { ">" };
            out.push(timed(|| {
                let rel = alpha_relation(alpha, v);
                CheckResult::verdict(id, &s.name, rel == expected_rel, format!("alpha {expected_rel} {v}"), format!("alpha = {alpha}"))
            }));
        }

        let subject = format!("order-{order}");
        let Some(min) = min else {
            out.push(CheckResult::skipped(id, &subject, "no non-cyclic groups of this order"));
            continue;
        };
        let names = |f: &dyn Fn(&Subject) -> bool| -> String {
            let mut v: Vec<&str> =
                members.iter().filter(|s| !s.is_cyclic() && f(s)).map(|s| s.name.as_str()).collect();
            v.sort_unstable();
            format!("{{{}}}", v.join(","))
        };
        let attaining = names(&|s| s.census().expect("checked above").alpha == min);
        if complete {
            let expected = format!("min {v} at {}", names(&predicted));
            out.push(CheckResult::compare(id, &subject, expected, format!("min {min} at {attaining}")));
        } else {
            out.push(CheckResult::verdict(id, &subject, min >= v, format!("min >= {v}"), format!("min {min} at {attaining}")));
        }
    }
    out
}

fn lemma22(s: &Subject) -> CheckResult {
    const ID: &str = "lemma22";
    timed(|| {
        let (p, n, c) = match census_in_class(s, 4) {
            Ok(x) => x,
            Err(reason) => return CheckResult::skipped(ID, &s.name, reason),
        };
        if s.is_cyclic() {
            return CheckResult::skipped(ID, &s.name, "cyclic");
        }
        if s.group.exponent() > pow(p, n - 2) {
            return CheckResult::skipped(ID, &s.name, format!("exponent {} exceeds p^(n-2)", s.group.exponent()));
        }
        let modular = u64::from(n - 1) * p + 2;
        CheckResult::verdict(ID, &s.name, c.total > modular, format!("> {modular}"), c.total)
    })
}

fn omega_data(s: &Subject, p: u64) -> (u64, Subgroup) {
    let set = s.group.omega1_set(p).expect("p-group");
    let sub = s.group.omega1_subgroup(p).expect("p-group");
    (set.len() as u64, sub)
}

fn thm31(s: &Subject) -> Vec<CheckResult> {
    let ids = ["thm31", "thm31.c1", "thm31.eq2"];
    let (p, n, c) = match census_in_class(s, 3) {
        Ok(x) => x,
        Err(reason) => return ids.iter().map(|id| CheckResult::skipped(id, &s.name, reason.clone())).collect(),
    };
    let exp = s.group.exponent();
    let mut out = Vec::new();

    // Tightness of the bound in terms of c_1.
    out.push(timed(|| {
        if exp == p {
            return CheckResult::skipped("thm31.eq2", &s.name, "exponent p");
        }
        let bound = census_bound_from_c1(p, n, c.c1());
        let total = Rational::from(c.total);
        if exp == p * p {
            CheckResult::compare("thm31.eq2", &s.name, format!("= {bound}"), format!("= {total}"))
        } else {
            CheckResult::verdict("thm31.eq2", &s.name, total < bound, format!("< {bound}"), total)
        }
    }));

    let (set_len, omega) = omega_data(s, p);
    let omega_is_g = omega.order() == s.group.order();
    out.push(timed(|| {
        if omega_is_g {
            return CheckResult::skipped("thm31.c1", &s.name, "Omega_1(G) = G");
        }
        let bound = c1_bound_proper_omega(p, n);
        CheckResult::verdict("thm31.c1", &s.name, c.c1() <= bound, format!("<= {bound}"), c.c1())
    }));

    out.push(timed(|| {
        let skip = if p == 2 {
            Some("p = 2")
        } else if exp == p {
            Some("exponent p")
        } else if omega_is_g {
            Some("Omega_1(G) = G")
        } else {
            None
        };
        if let Some(reason) = skip {
            return CheckResult::skipped("thm31", &s.name, reason);
        }
        let bound = proper_omega_census_bound(p, n);
        let equality = exp == p * p && set_len == omega.order() && omega.order() * p == s.group.order();
        if equality {
            CheckResult::compare("thm31", &s.name, format!("= {bound}"), format!("= {}", c.total))
        } else {
            CheckResult::verdict("thm31", &s.name, c.total < bound, format!("< {bound}"), c.total)
        }
    }));
    out
}

fn p3_bounds(s: &Subject) -> Vec<CheckResult> {
    let ids = ["p3.c1", "p3.census"];
    let skip_all = |reason: String| ids.iter().map(|id| CheckResult::skipped(id, &s.name, reason.clone())).collect();
    let (p, n, c) = match census_in_class(s, 3) {
        Ok(x) => x,
        Err(reason) => return skip_all(reason),
    };
    if p != 3 {
        return skip_all(format!("p = {p}"));
    }
    if s.group.exponent() == 3 {
        return skip_all("exponent 3".into());
    }
    let extremal = s.family.as_deref() == Some(P3_EXTREMAL_TAG);
    let rel = if extremal { "=" } else { "<=" };
    let c1_bound = p3_c1_bound(n).expect("n >= 3");
    let census_bound = p3_census_bound(n).expect("n >= 3");
    let total = Rational::from(c.total);
    vec![
        timed(|| {
            let ok = if extremal { c.c1() == c1_bound } else { c.c1() <= c1_bound };
            CheckResult::verdict("p3.c1", &s.name, ok, format!("{rel} {c1_bound}"), c.c1())
        }),
        timed(|| {
            let ok = if extremal { total == census_bound } else { total <= census_bound };
            CheckResult::verdict("p3.census", &s.name, ok, format!("{rel} {census_bound}"), total)
        }),
    ]
}

/// Kernels of the nonzero homomorphisms `G -> C_p`, found by assigning
/// values to the generators and propagating along the Cayley graph.
/// Independent of the Frattini computation.
pub fn kernels_onto_cp(g: &Group, p: u64) -> Option<BTreeSet<Subgroup>> {
    let gens = g.generators();
    let d = u32::try_from(gens.len()).ok()?;
    let assignments = p.checked_pow(d).filter(|&a| a <= 1 << 16)?;
    let order = g.order() as usize;
    let mut kernels = BTreeSet::new();
    let mut value = vec![u64::MAX; order];
    let mut queue = Vec::with_capacity(order);
    for code in 1..assignments {
        let images: Vec<u64> = (0..d).map(|i| code / p.pow(i) % p).collect();
        value.fill(u64::MAX);
        value[g.identity()] = 0;
        queue.clear();
        queue.push(g.identity());
        let mut head = 0;
        let mut consistent = true;
        'bfs: while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (i, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let v = (value[x] + images[i]) % p;
                if value[y] == u64::MAX {
                    value[y] = v;
                    queue.push(y);
                } else if value[y] != v {
                    consistent = false;
                    break 'bfs;
                }
            }
        }
        if consistent {
            let kernel: Vec<usize> = (0..order).filter(|&x| value[x] == 0).collect();
            if kernel.len() < order {
                kernels.insert(Subgroup::from_sorted(kernel));
            }
        }
    }
    Some(kernels)
}

fn global(s: &Subject) -> Vec<CheckResult> {
    let mut out = vec![timed(|| order_certification(s)), timed(|| regularity(s))];
    let ids = [
        "global.oracle",
        "global.partition",
        "global.miller",
        "global.richards",
        "global.alpha_max",
        "global.alpha_min",
        "global.decomposition",
        "global.maximals",
        "global.frattini",
        "global.omega_derived",
        "global.class2_omega",
    ];
    let (p, n, c) = match census_in_class(s, 1) {
        Ok(x) => x,
        Err(reason) => {
            out.extend(ids.iter().map(|id| CheckResult::skipped(id, &s.name, reason.clone())));
            return out;
        }
    };
    let g = &s.group;
    let order = g.order();
    let alpha = c.alpha;
    let cyclic = s.is_cyclic();

    out.push(timed(|| match s.census_by_enumeration() {
        Ok(e) => CheckResult::compare("global.oracle", &s.name, describe(c), describe(e)),
        Err(err) => CheckResult::verdict("global.oracle", &s.name, false, describe(c), err),
    }));
    out.push(timed(|| CheckResult::compare("global.partition", &s.name, order, c.partition_sum())));
    out.push(timed(|| {
        if p == 2 {
            return CheckResult::skipped("global.miller", &s.name, "p = 2");
        }
        if cyclic {
            return CheckResult::skipped("global.miller", &s.name, "cyclic, the congruence needs a non-cyclic group");
        }
        let residues: Vec<u64> = (2..=n).map(|k| c.c(k) % p).collect();
        let zeros = vec![0u64; residues.len()];
        CheckResult::compare("global.miller", &s.name, format!("{zeros:?}"), format!("{residues:?}"))
    }));
    out.push(timed(|| {
        let tau = divisor_count(order);
        let ok = if cyclic { c.total == tau } else { c.total > tau };
        let rel = if cyclic { "=" } else { ">" };
        CheckResult::verdict("global.richards", &s.name, ok, format!("{rel} {tau}"), c.total)
    }));
    out.push(timed(|| {
        let max = Rational::from_ratio(1 + (order - 1) / (p - 1), order);
        let exp_p = g.exponent() == p;
        let ok = if exp_p { alpha == max } else { alpha < max };
        let rel = if exp_p { "=" } else { "<" };
        CheckResult::verdict("global.alpha_max", &s.name, ok, format!("{rel} {max}"), alpha)
    }));
    out.push(timed(|| {
        let min = Rational::from_ratio(u64::from(n) + 1, order);
        let ok = if cyclic { alpha == min } else { alpha > min };
        let rel = if cyclic { "=" } else { ">" };
        CheckResult::verdict("global.alpha_min", &s.name, ok, format!("{rel} {min}"), alpha)
    }));
    out.push(timed(|| decomposition(s, c)));

    let kernels = kernels_onto_cp(g, p);
    out.push(timed(|| match &kernels {
        None => CheckResult::skipped("global.maximals", &s.name, "too many generators for the kernel oracle"),
        Some(k) => {
            let computed: BTreeSet<Subgroup> = s.maximal_subgroups().iter().cloned().collect();
            let ok = *k == computed && computed.len() == s.maximal_subgroups().len();
            CheckResult::verdict(
                "global.maximals",
                &s.name,
                ok,
                format!("{} kernels", k.len()),
                format!("{} maximal subgroups", s.maximal_subgroups().len()),
            )
        }
    }));
    out.push(timed(|| match &kernels {
        None => CheckResult::skipped("global.frattini", &s.name, "too many generators for the kernel oracle"),
        Some(k) => {
            let inter = k.iter().fold(g.whole(), |acc, m| acc.intersection(m));
            let phi = g.frattini_subgroup(p).expect("p-group");
            if inter == phi {
                CheckResult::compare("global.frattini", &s.name, inter.order(), phi.order())
            } else {
                CheckResult::verdict("global.frattini", &s.name, false, inter.order(), format!("{} (different subgroup)", phi.order()))
            }
        }
    }));

    let omega = g.omega1_subgroup(p).expect("p-group");
    out.push(timed(|| {
        if omega.order() != order {
            return CheckResult::skipped("global.omega_derived", &s.name, "Omega_1(G) != G");
        }
        let derived = g.derived_subgroup();
        let phi = g.frattini_subgroup(p).expect("p-group");
        CheckResult::verdict("global.omega_derived", &s.name, derived == phi, format!("|G'| = |Phi| = {}", phi.order()), format!("|G'| = {}", derived.order()))
    }));
    out.push(timed(|| {
        if p == 2 {
            return CheckResult::skipped("global.class2_omega", &s.name, "p = 2");
        }
        if !g.has_class_two() {
            return CheckResult::skipped("global.class2_omega", &s.name, "class is not 2");
        }
        let exp = omega.elements().iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
        CheckResult::compare("global.class2_omega", &s.name, p, exp)
    }));
    out
}

fn describe(c: &CyclicCensus) -> String {
    format!("counts={:?} total={} alpha={} exponent={}", c.counts, c.total, c.alpha, c.exponent())
}

fn order_certification(s: &Subject) -> CheckResult {
    const ID: &str = "global.order";
    let Some(expected) = s.expected_order else {
        return CheckResult::skipped(ID, &s.name, "no expected order");
    };
    let order = s.group.order();
    match s.cosets {
        Some(k) if k as u64 != order => CheckResult::verdict(ID, &s.name, false, expected, format!("cosets={k},order={order}")),
        _ => CheckResult::compare(ID, &s.name, expected, order),
    }
}

/// Over the trivial subgroup every nonidentity element moves every coset.
fn regularity(s: &Subject) -> CheckResult {
    const ID: &str = "global.regular";
    let g = &s.group;
    if s.cosets.is_none() || g.degree() as u64 != g.order() {
        return CheckResult::skipped(ID, &s.name, "not a regular representation");
    }
    let with_fixed_points = g
        .ids()
        .filter(|&x| x != g.identity())
        .filter(|&x| (0..g.degree() as u32).any(|pt| g.element(x).apply(pt) == pt))
        .count();
    CheckResult::compare(ID, &s.name, "0 nonidentity elements with fixed points", format!("{with_fixed_points} nonidentity elements with fixed points"))
}

/// `|C(G)| = |C(N)| + Σ_{x ∉ N} 1/φ(o(x))` for every maximal subgroup `N`.
fn decomposition(s: &Subject, c: &CyclicCensus) -> CheckResult {
    const ID: &str = "global.decomposition";
    let g = &s.group;
    let maximals = s.maximal_subgroups();
    if maximals.is_empty() {
        return CheckResult::skipped(ID, &s.name, "trivial group");
    }
    let total = Rational::from(c.total);
    for (i, m) in maximals.iter().enumerate() {
        let inner = match census_by_sum(&g.subgroup_as_group(m)) {
            Ok(cn) => cn.total,
            Err(e) => return CheckResult::verdict(ID, &s.name, false, total, format!("maximal #{i}: {e}")),
        };
        let rhs = Rational::from(inner) + totient_sum_outside(g, m);
        if rhs != total {
            return CheckResult::verdict(ID, &s.name, false, total, format!("maximal #{i}: {rhs}"));
        }
    }
    CheckResult::verdict(ID, &s.name, true, total, format!("{total} over {} maximal subgroups", maximals.len()))
}
