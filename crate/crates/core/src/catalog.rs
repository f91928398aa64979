//! Named p-group families: presentations, constructions, closed-form
//! cyclic-subgroup counts, and the extremal bounds on those counts.
//!
//! Specs have a compact text form used on the command line:
//! `modular:p=3,n=4`, `dihedral:n=5`, `extraspecial_exp_p:p=3`,
//! `product:modular:p=3,n=3;elem_abelian:p=3,n=1`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::str::FromStr;

use crate::arith::{is_prime, pow, Rational};
use crate::coset::{coset_enumerate, to_permutation_group, EnumerationError};
use crate::group::{direct_product, Group, GroupError};
use crate::presentation::{parse_presentation, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C_{p^n}`
    Cyclic,
    /// `C_p^n`
    ElemAbelian,
    /// `C_p × C_{p^{n-1}}`
    CpXCpn1,
    /// `M(p^n) = ⟨x, y | x^{p^{n-1}}, y^p, x^y = x^{1+p^{n-2}}⟩`
    Modular,
    /// `D_{2^n}`
    Dihedral,
    /// Generalized quaternion `Q_{2^n}`
    Quaternion,
    /// `QD_{2^n}`
    Quasidihedral,
    /// `E(p^3)`: order `p^3`, exponent `p`, central commutator.
    ExtraspecialExpP,
    /// `M(p^3)`, the non-abelian order-`p^3` group of exponent `p^2`.
    ExtraspecialExpP2,
    /// `C_p ≀ C_p`, of order `p^{p+1}`.
    WreathCpCp,
    Product(Vec<FamilySpec>),
}

impl Family {
    pub fn key(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::ElemAbelian => "elem_abelian",
            Family::CpXCpn1 => "cp_x_cpn1",
            Family::Modular => "modular",
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::Quasidihedral => "quasidihedral",
            Family::ExtraspecialExpP => "extraspecial_exp_p",
            Family::ExtraspecialExpP2 => "extraspecial_exp_p2",
            Family::WreathCpCp => "wreath_cp_cp",
            Family::Product(_) => "product",
        }
    }

    fn from_key(key: &str) -> Option<Family> {
        Some(match key {
            "cyclic" => Family::Cyclic,
            "elem_abelian" => Family::ElemAbelian,
            "cp_x_cpn1" => Family::CpXCpn1,
            "modular" => Family::Modular,
            "dihedral" => Family::Dihedral,
            "quaternion" => Family::Quaternion,
            "quasidihedral" => Family::Quasidihedral,
            "extraspecial_exp_p" => Family::ExtraspecialExpP,
            "extraspecial_exp_p2" => Family::ExtraspecialExpP2,
            "wreath_cp_cp" | "wreath" => Family::WreathCpCp,
            _ => return None,
        })
    }
}

/// A family member of order `p^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    p: u64,
    n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    InvalidSpec(String),
    NoClosedForm(String),
    Enumeration(EnumerationError),
    Group(GroupError),
    OrderMismatch { expected: u64, found: u64 },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::InvalidSpec(msg) => write!(f, "invalid family spec: {msg}"),
            CatalogError::NoClosedForm(spec) => write!(f, "no closed-form count for {spec}"),
            CatalogError::Enumeration(e) => fmt::Display::fmt(e, f),
            CatalogError::Group(e) => fmt::Display::fmt(e, f),
            CatalogError::OrderMismatch { expected, found } => {
                write!(f, "construction produced order {found}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<EnumerationError> for CatalogError {
    fn from(e: EnumerationError) -> Self {
        CatalogError::Enumeration(e)
    }
}

impl From<GroupError> for CatalogError {
    fn from(e: GroupError) -> Self {
        CatalogError::Group(e)
    }
}

fn invalid(msg: impl Into<String>) -> CatalogError {
    CatalogError::InvalidSpec(msg.into())
}

impl FamilySpec {
    pub fn new(family: Family, p: u64, n: u32) -> Result<FamilySpec, CatalogError> {
        if let Family::Product(factors) = family {
            return FamilySpec::product(factors);
        }
        if !is_prime(p) {
            return Err(invalid(format!("p = {p} is not prime")));
        }
        let two_only = |min_n: u32| -> Result<(), CatalogError> {
            if p != 2 {
                return Err(invalid(format!("{} requires p = 2", family.key())));
            }
            if n < min_n {
                return Err(invalid(format!("{} requires n >= {min_n}", family.key())));
            }
            Ok(())
        };
        match family {
            Family::Cyclic | Family::ElemAbelian if n < 1 => return Err(invalid("n must be at least 1")),
            Family::CpXCpn1 if n < 2 => return Err(invalid("cp_x_cpn1 requires n >= 2")),
            Family::Modular if n < 3 || (p == 2 && n < 4) => {
                return Err(invalid("modular requires n >= 3 (n >= 4 when p = 2)"));
            }
            Family::Dihedral | Family::Quaternion => two_only(3)?,
            Family::Quasidihedral => two_only(4)?,
            Family::ExtraspecialExpP | Family::ExtraspecialExpP2 => {
                if p == 2 {
                    return Err(invalid(format!("{} requires an odd prime", family.key())));
                }
                if n != 3 {
                    return Err(invalid(format!("{} has n = 3", family.key())));
                }
            }
            Family::WreathCpCp if u64::from(n) != p + 1 => {
                return Err(invalid(format!("wreath_cp_cp with p = {p} has n = {}", p + 1)));
            }
            _ => {}
        }
        Ok(FamilySpec { family, p, n })
    }

    /// Direct product of factors sharing one prime.
    pub fn product(factors: Vec<FamilySpec>) -> Result<FamilySpec, CatalogError> {
        let first = factors.first().ok_or_else(|| invalid("product needs at least one factor"))?;
        let p = first.p;
        if factors.iter().any(|f| f.p != p) {
            return Err(invalid("product factors must share the same prime"));
        }
        let n = factors.iter().map(|f| f.n).sum();
        Ok(FamilySpec { family: Family::Product(factors), p, n })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        pow(self.p, self.n)
    }

    /// The family's presentation as `.grp` text.
    pub fn presentation_text(&self) -> String {
        let mut out = String::new();
        self.write_grp(&mut out).expect("writing to a String");
        out
    }

    fn write_grp(&self, out: &mut String) -> fmt::Result {
        writeln!(out, "group {self}")?;
        let (gens, rels) = self.generators_and_relations(0);
        writeln!(out, "gens {}", gens.join(" "))?;
        writeln!(out, "order {}", self.order())?;
        writeln!(out, "prime {}", self.p)?;
        writeln!(out, "family {}", self.family.key())?;
        for r in rels {
            writeln!(out, "rel {r}")?;
        }
        Ok(())
    }

    /// Generator names and relations, with names suffixed by `tag` when
    /// this family is one factor of a product.
    fn generators_and_relations(&self, tag: usize) -> (Vec<String>, Vec<String>) {
        let (p, n) = (self.p, self.n);
        let name = |base: &str| if tag == 0 { base.to_owned() } else { format!("{base}f{tag}") };
        let (x, y) = (name("x"), name("y"));
        let two = |x: &str, y: &str, rels: Vec<String>| (alloc::vec![x.to_owned(), y.to_owned()], rels);
        match &self.family {
            Family::Cyclic => (alloc::vec![x.clone()], alloc::vec![format!("{x}^{}", pow(p, n))]),
            Family::ElemAbelian => {
                let gens: Vec<String> = (1..=n).map(|i| name(&format!("x{i}"))).collect();
                let mut rels: Vec<String> = gens.iter().map(|g| format!("{g}^{p}")).collect();
                for i in 0..gens.len() {
                    for j in i + 1..gens.len() {
                        rels.push(format!("[{},{}]", gens[i], gens[j]));
                    }
                }
                (gens, rels)
            }
            Family::CpXCpn1 => {
                two(&x, &y, alloc::vec![format!("{x}^{}", pow(p, n - 1)), format!("{y}^{p}"), format!("[{x},{y}]")])
            }
            Family::Modular | Family::ExtraspecialExpP2 => two(
                &x,
                &y,
                alloc::vec![
                    format!("{x}^{}", pow(p, n - 1)),
                    format!("{y}^{p}"),
                    format!("{x}^{y} = {x}^{}", 1 + pow(p, n - 2)),
                ],
            ),
            Family::Dihedral => two(
                &x,
                &y,
                alloc::vec![format!("{x}^{}", pow(2, n - 1)), format!("{y}^2"), format!("{y}*{x}*{y} = {x}^-1")],
            ),
            Family::Quaternion => two(
                &x,
                &y,
                alloc::vec![
                    format!("{x}^{}", pow(2, n - 1)),
                    format!("{y}^4"),
                    format!("{y}*{x}*{y}^-1 = {x}^{}", pow(2, n - 1) - 1),
                    // Needed for order 2^n; without it the relators present C_{2^{n-1}} ⋊ C_4.
                    format!("{y}^2 = {x}^{}", pow(2, n - 2)),
                ],
            ),
            Family::Quasidihedral => two(
                &x,
                &y,
                alloc::vec![
                    format!("{x}^{}", pow(2, n - 1)),
                    format!("{y}^2"),
                    format!("{y}*{x}*{y} = {x}^{}", pow(2, n - 2) - 1),
                ],
            ),
            Family::ExtraspecialExpP => two(
                &x,
                &y,
                alloc::vec![
                    format!("{x}^{p}"),
                    format!("{y}^{p}"),
                    format!("[{x},{y}]^{p}"),
                    format!("[[{x},{y}],{x}]"),
                    format!("[[{x},{y}],{y}]"),
                ],
            ),
            Family::WreathCpCp => {
                let (a, b) = (name("a"), name("b"));
                let mut rels = alloc::vec![format!("{a}^{p}"), format!("{b}^{p}")];
                for i in 1..p {
                    rels.push(format!("[{b},{a}^-{i}*{b}*{a}^{i}]"));
                }
                two(&a, &b, rels)
            }
            Family::Product(factors) => {
                let mut gens = Vec::new();
                let mut rels = Vec::new();
                let mut blocks: Vec<Vec<String>> = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    let (g, r) = f.generators_and_relations(tag * 100 + i + 1);
                    gens.extend(g.iter().cloned());
                    rels.extend(r);
                    blocks.push(g);
                }
                for i in 0..blocks.len() {
                    for j in i + 1..blocks.len() {
                        for a in &blocks[i] {
                            for b in &blocks[j] {
                                rels.push(format!("[{a},{b}]"));
                            }
                        }
                    }
                }
                (gens, rels)
            }
        }
    }

    pub fn presentation(&self) -> Presentation {
        parse_presentation(&self.presentation_text()).expect("catalog presentations are well formed")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Product(factors) => {
                f.write_str("product:")?;
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            family => write!(f, "{}:p={},n={}", family.key(), self.p, self.n),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product:") {
            let factors = rest.split(';').map(parse_single).collect::<Result<Vec<_>, _>>()?;
            return FamilySpec::product(factors);
        }
        parse_single(s)
    }
}

fn parse_single(s: &str) -> Result<FamilySpec, CatalogError> {
    let (key, params) = s.split_once(':').unwrap_or((s, ""));
    let family = Family::from_key(key.trim()).ok_or_else(|| invalid(format!("unknown family `{key}`")))?;
    let mut p: Option<u64> = None;
    let mut n: Option<u32> = None;
    for kv in params.split(',').map(str::trim).filter(|kv| !kv.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| invalid(format!("expected key=value, found `{kv}`")))?;
        let bad = || invalid(format!("bad value in `{kv}`"));
        match k.trim() {
            "p" if p.is_none() => p = Some(v.trim().parse().map_err(|_| bad())?),
            "n" if n.is_none() => n = Some(v.trim().parse().map_err(|_| bad())?),
            other => return Err(invalid(format!("unexpected or repeated parameter `{other}`"))),
        }
    }
    let p = match (&family, p) {
        (_, Some(p)) => p,
        (Family::Dihedral | Family::Quaternion | Family::Quasidihedral, None) => 2,
        _ => return Err(invalid(format!("{} needs p", family.key()))),
    };
    let n = match (&family, n) {
        (_, Some(n)) => n,
        (Family::ExtraspecialExpP | Family::ExtraspecialExpP2, None) => 3,
        (Family::WreathCpCp, None) => u32::try_from(p + 1).map_err(|_| invalid("p too large"))?,
        _ => return Err(invalid(format!("{} needs n", family.key()))),
    };
    FamilySpec::new(family, p, n)
}

/// Realises a family spec as a permutation group. Single families go through
/// coset enumeration of their presentation (regular representation);
/// products take the direct product of their built factors.
pub fn build(spec: &FamilySpec, max_cosets: usize) -> Result<Group, CatalogError> {
    let group = match &spec.family {
        Family::Product(factors) => {
            let mut built = factors.iter().map(|f| build(f, max_cosets));
            let first = built.next().expect("products are non-empty")?;
            built.try_fold(first, |acc, next| direct_product(&acc, &next?).map_err(CatalogError::from))?
        }
        _ => {
            let table = coset_enumerate(&spec.presentation(), &[], max_cosets)?;
            to_permutation_group(&table)?
        }
    };
    if group.order() != spec.order() {
        return Err(CatalogError::OrderMismatch { expected: spec.order(), found: group.order() });
    }
    Ok(group)
}

/// Closed-form `|C(G)|` where one is known.
pub fn closed_form_count(spec: &FamilySpec) -> Result<u64, CatalogError> {
    let (p, n) = (spec.p, spec.n);
    let n64 = u64::from(n);
    Ok(match spec.family {
        Family::Cyclic => n64 + 1,
        Family::ElemAbelian => 1 + (pow(p, n) - 1) / (p - 1),
        Family::CpXCpn1 | Family::Modular => (n64 - 1) * p + 2,
        Family::ExtraspecialExpP2 => 2 * p + 2,
        Family::Dihedral => pow(2, n - 1) + n64,
        Family::Quaternion => pow(2, n - 2) + n64,
        Family::Quasidihedral => 3 * pow(2, n - 3) + n64,
        _ => return Err(CatalogError::NoClosedForm(spec.to_string())),
    })
}

/// Largest `|C(G)|` for `|G| = p^n`, `p` odd, `exp(G) != p` and
/// `Ω_1(G) != G`: `2p^{n-2} + p^{n-3} + ... + p + 2`.
pub fn proper_omega_census_bound(p: u64, n: u32) -> u64 {
    assert!(n >= 3, "bound is stated for n >= 3");
    2 * pow(p, n - 2) + (1..=n - 3).map(|i| pow(p, i)).sum::<u64>() + 2
}

/// Upper bound on `|C(G)|` in terms of `c_1(G)`, from splitting `|G|` by
/// element orders: `(p^n + p^2 - p - 1 + (p-1)^2 c_1) / (p^2 - p)`.
/// Tight exactly when `exp(G) = p^2`.
pub fn census_bound_from_c1(p: u64, n: u32, c1: u64) -> Rational {
    let pn = i128::from(pow(p, n));
    let p = i128::from(p);
    let c1 = i128::from(c1);
    Rational::new(pn + p * p - p - 1 + (p - 1) * (p - 1) * c1, p * p - p)
}

/// `(p^{n-1} - 1) / (p - 1)`: the most subgroups of order `p` when the
/// solutions of `x^p = 1` lie in a proper subgroup.
pub fn c1_bound_proper_omega(p: u64, n: u32) -> u64 {
    assert!(n >= 1);
    (pow(p, n - 1) - 1) / (p - 1)
}

fn require_n3(n: u32) -> Result<(), CatalogError> {
    if n < 3 {
        Err(invalid(format!("p = 3 bounds need n >= 3, got {n}")))
    } else {
        Ok(())
    }
}

/// For 3-groups: `c_1(G) <= (7·3^{n-2} - 1) / 2`.
pub fn p3_c1_bound(n: u32) -> Result<u64, CatalogError> {
    require_n3(n)?;
    Ok((7 * pow(3, n - 2) - 1) / 2)
}

/// For 3-groups of exponent other than 3: `|C(G)| <= (23·3^{n-3} + 1) / 2`.
pub fn p3_census_bound(n: u32) -> Result<Rational, CatalogError> {
    require_n3(n)?;
    Ok(Rational::new(i128::from(23 * pow(3, n - 3) + 1), 2))
}
