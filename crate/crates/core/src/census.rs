//! Cyclic-subgroup census of a finite p-group.
//!
//! Two independent routes produce a [`CyclicCensus`]:
//!
//! * [`census_by_sum`] counts elements by order, divides by `φ(p^k)` (each
//!   cyclic subgroup of order `p^k` has exactly `φ(p^k)` generators), and
//!   checks the total against `Σ_x 1/φ(o(x))` evaluated in exact rationals.
//! * [`census_by_enumeration`] materialises every `⟨x⟩` as a sorted index
//!   set and deduplicates.
//!
//! The two must agree field by field.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{euler_phi, euler_phi_prime_power, pow, Rational};
use crate::group::{ElementId, Group, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCensus {
    pub p: u64,
    /// `|G| = p^n`.
    pub n: u32,
    /// `counts[k]` is `c_k(G)`, the number of cyclic subgroups of order `p^k`.
    pub counts: Vec<u64>,
    /// `|C(G)|`.
    pub total: u64,
    /// `|C(G)| / |G|` in lowest terms.
    pub alpha: Rational,
    /// Largest `k` with `c_k > 0`; the exponent is `p^exponent_k`.
    pub exponent_k: u32,
}

impl CyclicCensus {
    pub fn order(&self) -> u64 {
        pow(self.p, self.n)
    }

    pub fn c(&self, k: u32) -> u64 {
        self.counts.get(k as usize).copied().unwrap_or(0)
    }

    /// Number of subgroups of order `p`.
    pub fn c1(&self) -> u64 {
        self.c(1)
    }

    pub fn exponent(&self) -> u64 {
        pow(self.p, self.exponent_k)
    }

    /// `Σ_k c_k φ(p^k)`, which must equal `|G|`.
    pub fn partition_sum(&self) -> u64 {
        self.counts.iter().enumerate().map(|(k, &c)| c * euler_phi_prime_power(self.p, k as u32)).sum()
    }

    fn from_counts(p: u64, n: u32, counts: Vec<u64>) -> CyclicCensus {
        let total = counts.iter().sum();
        let exponent_k = counts.iter().rposition(|&c| c > 0).unwrap_or(0) as u32;
        let alpha = Rational::from_ratio(total, pow(p, n));
        CyclicCensus { p, n, counts, total, alpha, exponent_k }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusError {
    /// The census is indexed by powers of a single prime.
    NotAPGroup { order: u64 },
    /// Elements of order `p^k` did not split into `φ(p^k)`-sized classes.
    Divisibility { element_order: u64, elements: u64, phi: u64 },
    /// The totient sum was not an integer.
    NonIntegralSum(Rational),
    /// The totient sum disagrees with the class count.
    Inconsistent { by_classes: u64, by_sum: Rational },
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::NotAPGroup { order } => write!(f, "group of order {order} is not a p-group"),
            CensusError::Divisibility { element_order, elements, phi } => write!(
                f,
                "{elements} elements of order {element_order} are not divisible by φ = {phi} (internal error)"
            ),
            CensusError::NonIntegralSum(r) => write!(f, "totient sum {r} is not an integer (internal error)"),
            CensusError::Inconsistent { by_classes, by_sum } => {
                write!(f, "class count {by_classes} disagrees with totient sum {by_sum} (internal error)")
            }
        }
    }
}

impl core::error::Error for CensusError {}

fn p_and_n(g: &Group) -> Result<(u64, u32), CensusError> {
    g.is_p_group().ok_or(CensusError::NotAPGroup { order: g.order() })
}

/// Exponent `k` with `p^k = m`, for `m` a power of `p`.
fn log_p(p: u64, mut m: u64) -> u32 {
    let mut k = 0;
    while m > 1 {
        debug_assert_eq!(m % p, 0);
        m /= p;
        k += 1;
    }
    k
}

/// `Σ_x 1/φ(o(x))` over the given elements.
pub fn totient_sum<I: IntoIterator<Item = ElementId>>(g: &Group, elements: I) -> Rational {
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for x in elements {
        *by_order.entry(g.element_order(x)).or_default() += 1;
    }
    by_order.into_iter().map(|(o, count)| Rational::from_ratio(count, euler_phi(o))).sum()
}

/// `Σ_{x ∈ G \ N} 1/φ(o(x))`.
pub fn totient_sum_outside(g: &Group, n: &Subgroup) -> Rational {
    totient_sum(g, g.ids().filter(|&x| !n.contains(x)))
}

pub fn census_by_sum(g: &Group) -> Result<CyclicCensus, CensusError> {
    let (p, n) = p_and_n(g)?;
    let mut elements_of = vec![0u64; n as usize + 1];
    for x in g.ids() {
        elements_of[log_p(p, g.element_order(x)) as usize] += 1;
    }
    let mut counts = Vec::with_capacity(elements_of.len());
    for (k, &e) in elements_of.iter().enumerate() {
        let phi = euler_phi_prime_power(p, k as u32);
        if e % phi != 0 {
            return Err(CensusError::Divisibility { element_order: pow(p, k as u32), elements: e, phi });
        }
        counts.push(e / phi);
    }
    let census = CyclicCensus::from_counts(p, n, counts);

    let by_sum = totient_sum(g, g.ids());
    match by_sum.to_integer() {
        None => Err(CensusError::NonIntegralSum(by_sum)),
        Some(t) if t != i128::from(census.total) => {
            Err(CensusError::Inconsistent { by_classes: census.total, by_sum })
        }
        Some(_) => Ok(census),
    }
}

/// All distinct cyclic subgroups, as sorted element-index sets.
pub fn cyclic_subgroups(g: &Group) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    let mut covered = vec![false; g.order() as usize];
    for x in g.ids() {
        if covered[x] {
            continue;
        }
        let h = g.cyclic_subgroup(x);
        // Generators of ⟨x⟩ all give the same subgroup; skip them up front.
        let order = h.order();
        for &y in h.elements() {
            if g.element_order(y) == order {
                covered[y] = true;
            }
        }
        seen.insert(h);
    }
    seen.into_iter().collect()
}

pub fn census_by_enumeration(g: &Group) -> Result<CyclicCensus, CensusError> {
    let (p, n) = p_and_n(g)?;
    let mut counts = vec![0u64; n as usize + 1];
    for h in cyclic_subgroups(g) {
        counts[log_p(p, h.order()) as usize] += 1;
    }
    Ok(CyclicCensus::from_counts(p, n, counts))
}

/// `|C(G)|` for any finite group, by the totient sum.
pub fn cyclic_subgroup_count(g: &Group) -> u64 {
    let sum = totient_sum(g, g.ids());
    sum.to_integer().expect("totient sum over a group is an integer") as u64
}

/// Number of cyclic subgroups of each order, for any finite group.
pub fn census_by_divisor(g: &Group) -> BTreeMap<u64, u64> {
    let mut elements_of: BTreeMap<u64, u64> = BTreeMap::new();
    for x in g.ids() {
        *elements_of.entry(g.element_order(x)).or_default() += 1;
    }
    elements_of.into_iter().map(|(o, e)| (o, e / euler_phi(o))).collect()
}

/// `α(G) = |C(G)| / |G|`.
pub fn alpha(g: &Group) -> Rational {
    Rational::from_ratio(cyclic_subgroup_count(g), g.order())
}
