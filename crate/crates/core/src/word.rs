//! Words in a free group on numbered generators.

use alloc::vec::Vec;
use core::fmt;

/// One `g^e` block of a word. The exponent is never zero in a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

impl Syllable {
    pub const fn new(gen: usize, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

/// A freely reduced word: adjacent syllables never share a generator and no
/// exponent is zero. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Exponent arithmetic left the `i64` range while building a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentOverflow;

impl fmt::Display for ExponentOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("exponent overflow")
    }
}

impl core::error::Error for ExponentOverflow {}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(gen: usize) -> Self {
        Word { syllables: alloc::vec![Syllable::new(gen, 1)] }
    }

    /// `g^exp`, or the identity when `exp == 0`.
    pub fn power_of(gen: usize, exp: i64) -> Self {
        if exp == 0 {
            Word::identity()
        } else {
            Word { syllables: alloc::vec![Syllable::new(gen, exp)] }
        }
    }

    /// Builds a word from arbitrary syllables, reducing them.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(syllables: I) -> Result<Self, ExponentOverflow> {
        free_reduce(syllables)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters when every syllable is written out in full.
    pub fn letter_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|s| s.gen).max()
    }

    pub fn inverse(&self) -> Word {
        word_inverse(self)
    }

    pub fn mul(&self, other: &Word) -> Result<Word, ExponentOverflow> {
        free_reduce(self.syllables.iter().chain(other.syllables.iter()).copied())
    }

    /// `w^k` for any integer `k`; negative powers invert first.
    pub fn pow(&self, k: i64) -> Result<Word, ExponentOverflow> {
        if k == 0 || self.is_identity() {
            return Ok(Word::identity());
        }
        if let [single] = self.syllables.as_slice() {
            let exp = single.exp.checked_mul(k).ok_or(ExponentOverflow)?;
            return Ok(Word::power_of(single.gen, exp));
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let times = k.unsigned_abs();
        // Square-and-multiply keeps the number of reductions logarithmic.
        let mut result = Word::identity();
        let mut square = base;
        let mut rest = times;
        while rest > 0 {
            if rest & 1 == 1 {
                result = result.mul(&square)?;
            }
            rest >>= 1;
            if rest > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(result)
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Word) -> Result<Word, ExponentOverflow> {
        other.inverse().mul(self)?.mul(other)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word, ExponentOverflow> {
        a.inverse().mul(&b.inverse())?.mul(a)?.mul(b)
    }

    /// The word spelled out letter by letter: `(gen, true)` for `g`,
    /// `(gen, false)` for `g^-1`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let forward = s.exp > 0;
            core::iter::repeat_n((s.gen, forward), s.exp.unsigned_abs() as usize)
        })
    }

    /// Renders the word with the given generator names, e.g. `x^2*y^-1`.
    pub fn display_with<'a>(&'a self, names: &'a [impl AsRef<str>]) -> WordDisplay<'a, impl AsRef<str>> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a, S: AsRef<str>> {
    word: &'a Word,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for WordDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (i, s) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match self.names.get(s.gen) {
                Some(name) => f.write_str(name.as_ref())?,
                None => write!(f, "g{}", s.gen)?,
            }
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 0] = [];
        fmt::Display::fmt(&self.display_with(&names), f)
    }
}

/// Merges adjacent syllables on the same generator and drops zero exponents.
/// Works as a stack so that cancellations cascade (`x y y^-1 x -> x^2`).
pub fn free_reduce<I: IntoIterator<Item = Syllable>>(syllables: I) -> Result<Word, ExponentOverflow> {
    let mut out: Vec<Syllable> = Vec::new();
    for s in syllables {
        if s.exp == 0 {
            continue;
        }
        match out.last_mut() {
            Some(top) if top.gen == s.gen => {
                let merged = top.exp.checked_add(s.exp).ok_or(ExponentOverflow)?;
                if merged == 0 {
                    out.pop();
                } else {
                    top.exp = merged;
                }
            }
            _ => out.push(s),
        }
    }
    Ok(Word { syllables: out })
}

/// Reverses the syllables and negates every exponent.
pub fn word_inverse(w: &Word) -> Word {
    Word {
        syllables: w.syllables.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect(),
    }
}
