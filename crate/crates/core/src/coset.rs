//! Todd–Coxeter coset enumeration, HLT strategy.
//!
//! Cosets are rows of a flat table with two columns per generator (`g` at
//! `2g`, `g^-1` at `2g + 1`). Relators are scanned from every live coset in
//! increasing order, defining new cosets to close each scan. Coincidences are
//! merged through a union-find forest where the smaller index always
//! survives, so runs are reproducible and coset 0 stays the subgroup.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{Group, GroupError, Perm};
use crate::presentation::Presentation;
use crate::word::Word;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationError {
    /// Live cosets would exceed the cap.
    TooManyCosets { limit: usize },
    NoRelators,
    ZeroLimit,
    SubgroupGeneratorOutOfRange { index: usize, generator: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::TooManyCosets { limit } => {
                write!(f, "coset enumeration exceeded {limit} live cosets; raise the cap or check the presentation")
            }
            EnumerationError::NoRelators => f.write_str("presentation has no relators; enumeration would not terminate"),
            EnumerationError::ZeroLimit => f.write_str("max_cosets must be at least 1"),
            EnumerationError::SubgroupGeneratorOutOfRange { index, generator } => {
                write!(f, "subgroup generator {index} uses undeclared generator index {generator}")
            }
        }
    }
}

impl core::error::Error for EnumerationError {}

/// Right action of the generators on the cosets of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    num_cosets: usize,
    num_generators: usize,
    /// `num_cosets * 2 * num_generators` entries; `NONE` where undefined.
    action: Vec<u32>,
    complete: bool,
    /// Cosets defined over the whole run, including ones later merged away.
    total_defined: usize,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn total_defined(&self) -> usize {
        self.total_defined
    }

    /// Image of `coset` under generator `gen` (or its inverse).
    pub fn action(&self, coset: usize, gen: usize, inverse: bool) -> Option<usize> {
        let col = 2 * gen + usize::from(inverse);
        let v = self.action[coset * 2 * self.num_generators + col];
        (v != NONE).then_some(v as usize)
    }

    /// Follows `word` from `coset`; `None` if some step is undefined.
    pub fn trace(&self, coset: usize, word: &Word) -> Option<usize> {
        word.letters().try_fold(coset, |c, (g, forward)| self.action(c, g, !forward))
    }

    /// The permutation of cosets induced by generator `gen`.
    pub fn generator_permutation(&self, gen: usize) -> Option<Perm> {
        let images: Option<Vec<u32>> =
            (0..self.num_cosets).map(|c| self.action(c, gen, false).map(|v| v as u32)).collect();
        images.map(Perm::from_images_unchecked)
    }
}

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(num_generators: usize, max_cosets: usize) -> Self {
        let width = 2 * num_generators;
        Enumerator { width, table: vec![NONE; width], parent: vec![0], live: 1, max_cosets, queue: Vec::new() }
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.width + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.width + col] = v;
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, EnumerationError> {
        if self.live >= self.max_cosets {
            return Err(EnumerationError::TooManyCosets { limit: self.max_cosets });
        }
        let d = self.allocated();
        if d >= NONE as usize {
            return Err(EnumerationError::TooManyCosets { limit: self.max_cosets });
        }
        let d = d as u32;
        self.parent.push(d);
        self.table.extend(core::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(d)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.width {
                let f = self.get(dead, col);
                if f == NONE {
                    continue;
                }
                self.set(f, col ^ 1, NONE);
                let e1 = self.rep(dead);
                let f1 = self.rep(f);
                let existing = self.get(e1, col);
                if existing != NONE {
                    self.merge(f1, existing);
                    continue;
                }
                let back = self.get(f1, col ^ 1);
                if back != NONE {
                    self.merge(e1, back);
                    continue;
                }
                self.set(e1, col, f1);
                self.set(f1, col ^ 1, e1);
            }
        }
    }

    /// Scans `word` (as columns) from `c` in both directions and closes the
    /// gap by defining new cosets until it ends in a deduction or a coincidence.
    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), EnumerationError> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                let next = self.get(f, word[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i as isize > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i as isize {
                let next = self.get(b, word[j as usize] ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    fn finish(mut self, num_generators: usize) -> CosetTable {
        let total_defined = self.allocated();
        let mut renumber = vec![NONE; total_defined];
        let mut next = 0u32;
        for c in 0..total_defined as u32 {
            if self.is_live(c) {
                renumber[c as usize] = next;
                next += 1;
            }
        }
        let num_cosets = next as usize;
        let mut action = Vec::with_capacity(num_cosets * self.width);
        for c in 0..total_defined as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..self.width {
                let v = self.get(c, col);
                action.push(if v == NONE { NONE } else { renumber[self.rep(v) as usize] });
            }
        }
        let complete = action.iter().all(|&v| v != NONE);
        CosetTable { num_cosets, num_generators, action, complete, total_defined }
    }
}

fn columns(word: &Word) -> Vec<usize> {
    word.letters().map(|(g, forward)| 2 * g + usize::from(!forward)).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup_gens` in the
/// group presented by `presentation`. With no subgroup generators the result
/// is the regular representation and `num_cosets` is the group order.
pub fn coset_enumerate(
    presentation: &Presentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::ZeroLimit);
    }
    if presentation.relators.is_empty() {
        return Err(EnumerationError::NoRelators);
    }
    let ngens = presentation.num_generators();
    for (index, w) in subgroup_gens.iter().enumerate() {
        if let Some(g) = w.max_generator().filter(|&g| g >= ngens) {
            return Err(EnumerationError::SubgroupGeneratorOutOfRange { index, generator: g });
        }
    }
    let relators: Vec<Vec<usize>> = presentation.relators.iter().map(columns).collect();
    let subgroup: Vec<Vec<usize>> = subgroup_gens.iter().map(columns).collect();

    let mut e = Enumerator::new(ngens, max_cosets);
    for w in &subgroup {
        e.scan_and_fill(0, w)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.allocated() {
        for r in &relators {
            if !e.is_live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.is_live(c) {
            for col in 0..e.width {
                if e.get(c, col) == NONE {
                    e.define(c, col)?;
                }
            }
        }
        c += 1;
    }
    Ok(e.finish(ngens))
}

/// The permutation group generated by the generator actions of a complete
/// table. Over the trivial subgroup this is the regular representation.
pub fn to_permutation_group(table: &CosetTable) -> Result<Group, GroupError> {
    if !table.complete {
        return Err(GroupError::IncompleteTable);
    }
    let gens: Vec<Perm> = (0..table.num_generators)
        .map(|g| table.generator_permutation(g).expect("complete table"))
        .collect();
    Group::closure(table.num_cosets, &gens)
}
