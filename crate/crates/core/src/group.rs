//! Finite permutation groups with fully enumerated element lists.
//!
//! Permutations act on the right: `i^(ab) = (i^a)^b`, so the product `ab`
//! has images `b[a[i]]`. Elements are stored in lexicographic order of their
//! image arrays; index 0 is always the identity.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{is_prime, lcm, pow, prime_power};

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

/// Index of an element in its group's canonical element list.
pub type ElementId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    IncompleteTable,
    ClosureTooLarge { limit: usize },
    DegreeMismatch { expected: usize, found: usize },
    NotAPermutation,
    /// The group order is not a power of the requested prime.
    NotAPGroup { order: u64, prime: u64 },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::IncompleteTable => f.write_str("coset table is not complete"),
            GroupError::ClosureTooLarge { limit } => write!(f, "group closure exceeded {limit} elements"),
            GroupError::DegreeMismatch { expected, found } => {
                write!(f, "permutation of degree {found} where degree {expected} was expected")
            }
            GroupError::NotAPermutation => f.write_str("image list is not a permutation"),
            GroupError::NotAPGroup { order, prime } => write!(f, "group of order {order} is not a {prime}-group"),
        }
    }
}

impl core::error::Error for GroupError {}

/// A permutation of `{0, .., degree - 1}` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or(GroupError::NotAPermutation)?;
            if core::mem::replace(slot, true) {
                return Err(GroupError::NotAPermutation);
            }
        }
        Ok(Perm(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        Perm(images)
    }

    /// Builds a permutation from disjoint cycles on 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Perm, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(GroupError::NotAPermutation);
                }
                images[a as usize] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Order as a permutation: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut result = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.0[cur] as usize;
                len += 1;
            }
            result = lcm(result, len);
        }
        result
    }

    /// Places `self` on points `0..deg(self)` and `other` on the next `deg(other)` points.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.0.len() as u32;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&v| v + shift)).collect())
    }
}

/// Maps base-point images back to element indices.
#[derive(Clone, Debug)]
enum Lookup {
    /// One base point; `by_image[v]` is the element sending the point to `v`.
    Single { point: u32, by_image: Vec<u32> },
    Multi { base: Vec<u32>, by_images: BTreeMap<Vec<u32>, u32> },
}

/// A finite permutation group with its elements listed in canonical order.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    elements: Vec<Perm>,
    generators: Vec<ElementId>,
    lookup: Lookup,
}

/// A subgroup as a sorted set of element indices of its parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<ElementId>,
}

impl Subgroup {
    pub fn from_sorted(elements: Vec<ElementId>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

impl Group {
    /// Smallest permutation group containing `gens`, capped at
    /// [`DEFAULT_MAX_ELEMENTS`].
    pub fn closure(degree: usize, gens: &[Perm]) -> Result<Group, GroupError> {
        Group::closure_with_cap(degree, gens, DEFAULT_MAX_ELEMENTS)
    }

    pub fn closure_with_cap(degree: usize, gens: &[Perm], max_elements: usize) -> Result<Group, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= max_elements {
                        return Err(GroupError::ClosureTooLarge { limit: max_elements });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        let lookup = build_lookup(&elements);
        let mut group = Group { degree, elements, generators: Vec::new(), lookup };
        group.generators = gens.iter().map(|g| group.index_of(g).expect("generator lies in its closure")).collect();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, x: ElementId) -> &Perm {
        &self.elements[x]
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn ids(&self) -> core::ops::Range<ElementId> {
        0..self.elements.len()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: self.ids().collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    /// Index of `perm`, if it belongs to the group.
    pub fn index_of(&self, perm: &Perm) -> Option<ElementId> {
        if perm.degree() != self.degree {
            return None;
        }
        let id = match &self.lookup {
            Lookup::Single { point, by_image } => by_image[perm.apply(*point) as usize],
            Lookup::Multi { base, by_images } => {
                let key: Vec<u32> = base.iter().map(|&b| perm.apply(b)).collect();
                *by_images.get(&key)?
            }
        };
        (id != u32::MAX && self.elements[id as usize] == *perm).then_some(id as usize)
    }

    /// Product `xy` (apply `x`, then `y`).
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        let (a, b) = (&self.elements[x], &self.elements[y]);
        match &self.lookup {
            Lookup::Single { point, by_image } => by_image[b.apply(a.apply(*point)) as usize] as usize,
            Lookup::Multi { base, by_images } => {
                let key: Vec<u32> = base.iter().map(|&p| b.apply(a.apply(p))).collect();
                by_images[&key] as usize
            }
        }
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        self.index_of(&self.elements[x].inverse()).expect("groups are closed under inverses")
    }

    pub fn pow(&self, x: ElementId, k: u64) -> ElementId {
        let mut result = self.identity();
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(self.inverse(y), x), y)
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElementId) -> u64 {
        let mut k = 1;
        let mut cur = x;
        while cur != self.identity() {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<u64> {
        self.ids().map(|x| self.element_order(x)).collect()
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.ids().fold(1, |acc, x| lcm(acc, self.element_order(x)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `Some((p, n))` when `|G| = p^n` with `n >= 1`.
    pub fn is_p_group(&self) -> Option<(u64, u32)> {
        prime_power(self.order())
    }

    fn require_p_group(&self, p: u64) -> Result<u32, GroupError> {
        let err = GroupError::NotAPGroup { order: self.order(), prime: p };
        if !is_prime(p) {
            return Err(err);
        }
        match self.order() {
            1 => Ok(0),
            n => match prime_power(n) {
                Some((q, k)) if q == p => Ok(k),
                _ => Err(err),
            },
        }
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[ElementId]) -> Subgroup {
        let mut member = vec![false; self.elements.len()];
        member[0] = true;
        let mut found = vec![0usize];
        let mut i = 0;
        while i < found.len() {
            let x = found[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    found.push(y);
                }
            }
        }
        found.sort_unstable();
        Subgroup { elements: found }
    }

    pub fn cyclic_subgroup(&self, x: ElementId) -> Subgroup {
        let mut elements = vec![self.identity()];
        let mut cur = x;
        while cur != self.identity() {
            elements.push(cur);
            cur = self.mul(cur, x);
        }
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Grows `⟨seed⟩` by each candidate not yet contained, returning the
    /// subgroup and the generators actually used.
    fn generate_incrementally(
        &self,
        seed: Vec<ElementId>,
        candidates: impl IntoIterator<Item = ElementId>,
    ) -> (Subgroup, Vec<ElementId>) {
        let mut gens = seed;
        let mut current = self.generate(&gens);
        for c in candidates {
            if !current.contains(c) {
                gens.push(c);
                current = self.generate(&gens);
            }
        }
        (current, gens)
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[ElementId]) -> Subgroup {
        let mut gens: Vec<ElementId> = Vec::new();
        let mut current = self.trivial_subgroup();
        let mut queue: Vec<ElementId> = seed.to_vec();
        while let Some(x) = queue.pop() {
            if current.contains(x) {
                continue;
            }
            gens.push(x);
            current = self.generate(&gens);
            for &g in &self.generators {
                queue.push(self.conjugate(x, g));
            }
        }
        current
    }

    /// `G'`, the normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = &self.generators;
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&seeds)
    }

    pub fn center(&self) -> Subgroup {
        let elements = self
            .ids()
            .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { elements }
    }

    /// Solutions of `x^p = 1`, identity included.
    pub fn omega1_set(&self, p: u64) -> Result<Vec<ElementId>, GroupError> {
        self.require_p_group(p)?;
        Ok(self.ids().filter(|&x| self.pow(x, p) == self.identity()).collect())
    }

    /// The subgroup generated by the solutions of `x^p = 1`.
    pub fn omega1_subgroup(&self, p: u64) -> Result<Subgroup, GroupError> {
        let set = self.omega1_set(p)?;
        Ok(self.generate_incrementally(Vec::new(), set).0)
    }

    /// Φ(G) = G'G^p for a p-group.
    pub fn frattini_subgroup(&self, p: u64) -> Result<Subgroup, GroupError> {
        self.require_p_group(p)?;
        let derived = self.derived_subgroup();
        let powers: BTreeSet<ElementId> = self.ids().map(|x| self.pow(x, p)).collect();
        let candidates = derived.elements().iter().copied().chain(powers);
        Ok(self.generate_incrementally(Vec::new(), candidates).0)
    }

    /// All subgroups of index `p`, as kernels of the nonzero functionals on
    /// `G/Φ(G) ≅ F_p^d` (one per functional up to scalars).
    pub fn maximal_subgroups(&self, p: u64) -> Result<Vec<Subgroup>, GroupError> {
        let frattini = self.frattini_subgroup(p)?;
        if self.order() == 1 {
            return Ok(Vec::new());
        }
        let (_, basis) = self.generate_incrementally(frattini.elements().to_vec(), self.ids());
        let basis = &basis[frattini.elements().len()..];
        let d = basis.len() as u32;
        debug_assert_eq!(frattini.order() * pow(p, d), self.order());

        // coordinates[x] = the vector of x modulo Φ, packed base p
        let cosets = pow(p, d);
        let mut coordinates = vec![u64::MAX; self.elements.len()];
        for packed in 0..cosets {
            let mut rep = self.identity();
            let mut rest = packed;
            for &b in basis {
                rep = self.mul(rep, self.pow(b, rest % p));
                rest /= p;
            }
            for &f in frattini.elements() {
                coordinates[self.mul(rep, f)] = packed;
            }
        }
        debug_assert!(coordinates.iter().all(|&c| c != u64::MAX));

        let digits = |mut v: u64| -> Vec<u64> {
            (0..d)
                .map(|_| {
                    let r = v % p;
                    v /= p;
                    r
                })
                .collect()
        };
        let mut result = Vec::new();
        for functional in 1..cosets {
            let coeffs = digits(functional);
            let leading = coeffs.iter().rev().find(|&&c| c != 0).copied().unwrap_or(0);
            if leading != 1 {
                continue;
            }
            let elements = self
                .ids()
                .filter(|&x| {
                    let v = digits(coordinates[x]);
                    v.iter().zip(&coeffs).map(|(a, c)| a * c).sum::<u64>() % p == 0
                })
                .collect();
            result.push(Subgroup { elements });
        }
        Ok(result)
    }

    /// The subgroup as a standalone group on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Group {
        let gens: Vec<Perm> = {
            let (_, gens) = self.generate_incrementally(Vec::new(), h.elements().iter().copied());
            gens.iter().map(|&g| self.elements[g].clone()).collect()
        };
        Group::closure_with_cap(self.degree, &gens, usize::MAX).expect("subgroup of a finite group")
    }

    /// Nilpotency class-2 test: `G' ≤ Z(G)` with `G` non-abelian.
    pub fn has_class_two(&self) -> bool {
        !self.is_abelian() && self.derived_subgroup().is_subset_of(&self.center())
    }
}

fn build_lookup(elements: &[Perm]) -> Lookup {
    let degree = elements[0].degree();
    if degree == 0 {
        return Lookup::Multi { base: Vec::new(), by_images: [(Vec::new(), 0)].into_iter().collect() };
    }
    // One point suffices when its images are all distinct (e.g. regular actions).
    for point in 0..degree as u32 {
        let mut by_image = vec![u32::MAX; degree];
        let mut ok = true;
        for (i, e) in elements.iter().enumerate() {
            let slot = &mut by_image[e.apply(point) as usize];
            if *slot != u32::MAX {
                ok = false;
                break;
            }
            *slot = i as u32;
        }
        if ok {
            return Lookup::Single { point, by_image };
        }
        if point >= 8 {
            break;
        }
    }
    // Otherwise add points until the base images separate all elements.
    let mut base: Vec<u32> = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..elements.len()).collect();
        let key = |i: usize| -> Vec<u32> { base.iter().map(|&b| elements[i].apply(b)).collect() };
        order.sort_by_cached_key(|&i| key(i));
        let clash = order.windows(2).find(|w| key(w[0]) == key(w[1]));
        match clash {
            None => break,
            Some(w) => {
                let (a, b) = (&elements[w[0]], &elements[w[1]]);
                let point = (0..degree as u32).find(|&i| a.apply(i) != b.apply(i)).expect("distinct permutations");
                base.push(point);
            }
        }
    }
    let by_images = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (base.iter().map(|&b| e.apply(b)).collect(), i as u32))
        .collect();
    Lookup::Multi { base, by_images }
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    direct_product_with_cap(a, b, DEFAULT_MAX_ELEMENTS)
}

pub fn direct_product_with_cap(a: &Group, b: &Group, max_elements: usize) -> Result<Group, GroupError> {
    let id_a = Perm::identity(a.degree());
    let id_b = Perm::identity(b.degree());
    let mut gens: Vec<Perm> = a.generators().iter().map(|&g| a.element(g).direct_sum(&id_b)).collect();
    gens.extend(b.generators().iter().map(|&g| id_a.direct_sum(b.element(g))));
    if (a.order() as u128) * (b.order() as u128) > max_elements as u128 {
        return Err(GroupError::ClosureTooLarge { limit: max_elements });
    }
    Group::closure_with_cap(a.degree() + b.degree(), &gens, max_elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32) -> Group {
        let images: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
        Group::closure(n as usize, &[Perm::from_images(images).unwrap()]).unwrap()
    }

    fn q8_perms() -> Vec<Perm> {
        // (1 2 3 4)(5 6 7 8) and (1 5 3 7)(2 8 4 6), 0-based
        vec![
            Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).unwrap(),
            Perm::from_cycles(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]]).unwrap(),
        ]
    }

    fn wreath_c3_c3() -> Group {
        let base = Perm::from_cycles(9, &[&[0, 1, 2]]).unwrap();
        let top = Perm::from_cycles(9, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]]).unwrap();
        Group::closure(9, &[base, top]).unwrap()
    }

    #[test]
    fn perm_basics() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        assert_eq!(a.order(), 3);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.then(&a).images(), &[2, 0, 1, 3]);
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn closure_examples() {
        let c3 = Group::closure(3, &[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(wreath_c3_c3().order(), 81);
        assert_eq!(Group::closure(8, &q8_perms()).unwrap().order(), 8);
    }

    #[test]
    fn closure_cap_and_degree_checks() {
        let g = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(Group::closure_with_cap(5, core::slice::from_ref(&g), 3).unwrap_err(), GroupError::ClosureTooLarge { limit: 3 });
        assert!(matches!(Group::closure(6, &[g]), Err(GroupError::DegreeMismatch { .. })));
    }

    #[test]
    fn canonical_ordering() {
        let g = wreath_c3_c3();
        assert!(g.element(0).is_identity());
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orders_and_exponents() {
        let q8 = Group::closure(8, &q8_perms()).unwrap();
        let y = q8.generators()[1];
        assert_eq!(q8.element_order(q8.identity()), 1);
        assert_eq!(q8.element_order(y), 4);
        assert_eq!(q8.exponent(), 4);
        assert_eq!(cyclic(27).exponent(), 27);
        assert_eq!(wreath_c3_c3().exponent(), 9);
        for x in q8.ids() {
            assert_eq!(8 % q8.element_order(x), 0);
            assert_eq!(q8.element_order(x), q8.element(x).order());
        }
    }

    #[test]
    fn multiplication_matches_permutations() {
        let g = wreath_c3_c3();
        for x in g.ids().step_by(7) {
            for y in g.ids().step_by(5) {
                assert_eq!(g.element(g.mul(x, y)), &g.element(x).then(g.element(y)));
            }
            assert_eq!(g.mul(x, g.inverse(x)), g.identity());
        }
    }

    #[test]
    fn omega_of_cyclic_nine() {
        let c9 = cyclic(9);
        assert_eq!(c9.omega1_set(3).unwrap().len(), 3);
        assert_eq!(c9.omega1_subgroup(3).unwrap().order(), 3);
        assert!(matches!(c9.omega1_set(2), Err(GroupError::NotAPGroup { .. })));
        assert!(matches!(cyclic(6).omega1_set(2), Err(GroupError::NotAPGroup { .. })));
    }

    #[test]
    fn wreath_is_generated_by_order_three() {
        let w = wreath_c3_c3();
        assert_eq!(w.omega1_subgroup(3).unwrap().order(), 81);
    }

    #[test]
    fn structural_subgroups_of_q8() {
        let q8 = Group::closure(8, &q8_perms()).unwrap();
        assert_eq!(q8.center().order(), 2);
        assert_eq!(q8.derived_subgroup().order(), 2);
        assert_eq!(q8.frattini_subgroup(2).unwrap().order(), 2);
        assert_eq!(q8.maximal_subgroups(2).unwrap().len(), 3);
        assert!(q8.has_class_two());
    }

    #[test]
    fn cyclic_structure() {
        let c8 = cyclic(8);
        assert!(c8.derived_subgroup().is_trivial());
        assert_eq!(c8.frattini_subgroup(2).unwrap().order(), 4);
        assert_eq!(c8.center().order(), 8);
        let c9 = cyclic(9);
        let maxes = c9.maximal_subgroups(3).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].order(), 3);
    }

    #[test]
    fn wreath_frattini() {
        let w = wreath_c3_c3();
        let phi = w.frattini_subgroup(3).unwrap();
        assert_eq!(phi.order(), 9);
        let maxes = w.maximal_subgroups(3).unwrap();
        assert_eq!(maxes.len(), 4);
        let meet = maxes.iter().skip(1).fold(maxes[0].clone(), |acc, m| acc.intersection(m));
        assert_eq!(meet, phi);
    }

    #[test]
    fn elementary_abelian_maximal_count() {
        let c3 = cyclic(3);
        let c3sq = direct_product(&c3, &c3).unwrap();
        assert_eq!(c3sq.order(), 9);
        assert_eq!(c3sq.exponent(), 3);
        assert_eq!(c3sq.maximal_subgroups(3).unwrap().len(), 4);
        assert!(c3sq.frattini_subgroup(3).unwrap().is_trivial());
    }

    #[test]
    fn direct_product_orders_are_lcms() {
        let a = cyclic(4);
        let b = cyclic(6);
        let ab = direct_product(&a, &b).unwrap();
        assert_eq!(ab.order(), 24);
        assert_eq!(ab.degree(), 10);
        assert_eq!(ab.exponent(), 12);
        assert_eq!(ab.is_p_group(), None);
    }

    #[test]
    fn p_group_detection() {
        assert_eq!(wreath_c3_c3().is_p_group(), Some((3, 4)));
        assert_eq!(cyclic(6).is_p_group(), None);
        assert_eq!(cyclic(16).is_p_group(), Some((2, 4)));
    }

    #[test]
    fn subgroup_as_standalone_group() {
        let w = wreath_c3_c3();
        let phi = w.frattini_subgroup(3).unwrap();
        let h = w.subgroup_as_group(&phi);
        assert_eq!(h.order(), 9);
    }
}
