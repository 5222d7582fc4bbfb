//! Reduced words in the free group on generators `x0, x1, ...`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A generator power `x_index^exp` with `exp != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub exp: i64,
}

impl Letter {
    pub fn new(index: u32, exp: i64) -> Self {
        assert!(exp != 0, "letter exponent must be nonzero");
        Letter { index, exp }
    }
}

/// A reduced word: adjacent letters always carry distinct indices.
///
/// Words order first by letter count, then lexicographically by the
/// flattened `(index, exp)` sequence. This is the canonical term order used
/// for iteration and serialization.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    /// The group identity.
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    /// The generator `x_index`.
    pub fn gen(index: u32) -> Self {
        Word::power(index, 1)
    }

    /// `x_index^exp`; the identity when `exp == 0`.
    pub fn power(index: u32, exp: i64) -> Self {
        if exp == 0 {
            Word::one()
        } else {
            Word { letters: vec![Letter { index, exp }] }
        }
    }

    /// Builds a word from arbitrary `(index, exp)` pairs, reducing as it goes.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut w = Word::one();
        for (index, exp) in pairs {
            w.push(index, exp);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word.
    pub fn max_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index).max()
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|l| l.exp).sum()
    }

    /// Appends `x_index^exp` on the right and re-establishes reduced form.
    /// Cancellation can cascade: `x1 x0^-1 * x0 x1` collapses to `x1^2`.
    fn push(&mut self, index: u32, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.index == index => {
                last.exp += exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter { index, exp }),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = Word { letters: Vec::with_capacity(self.len() + other.len()) };
        out.letters.extend_from_slice(&self.letters);
        out.mul_assign(other);
        out
    }

    /// In-place right multiplication.
    pub fn mul_assign(&mut self, other: &Word) {
        let mut rest = other.letters.iter();
        // Only the junction can cancel; once a letter survives the rest of
        // `other` is already reduced.
        for l in rest.by_ref() {
            let before = self.letters.len();
            self.push(l.index, l.exp);
            if self.letters.len() > before || self.letters.last().is_some_and(|x| x.index == l.index) {
                break;
            }
        }
        self.letters.extend(rest.copied());
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter { index: l.index, exp: -l.exp })
                .collect(),
        }
    }

    /// Integer power in the group.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Word::one();
        for _ in 0..e.unsigned_abs() {
            out.mul_assign(&base);
        }
        out
    }

    /// Image under the anti-automorphism fixing every generator: the letters
    /// are reversed with their exponents kept.
    pub fn bar(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Adds `r` to every generator index.
    pub fn shift(&self, r: u32) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter { index: l.index + r, exp: l.exp })
                .collect(),
        }
    }

    /// Image under the group homomorphism sending `x_k` to `image(k)`.
    pub fn substitute<F: FnMut(u32) -> Word>(&self, mut image: F) -> Word {
        let mut out = Word::one();
        for l in &self.letters {
            out.mul_assign(&image(l.index).pow(l.exp));
        }
        out
    }

    /// True for words of the shape `x_{i1} x_{i2}^-1 x_{i3} ... x_{is}`
    /// (unit exponents, alternating sign, starting and ending positive).
    pub fn is_alternating(&self) -> bool {
        !self.letters.is_empty()
            && self.letters.len() % 2 == 1
            && self
                .letters
                .iter()
                .enumerate()
                .all(|(i, l)| l.exp == if i % 2 == 0 { 1 } else { -1 })
    }

    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for l in &self.letters {
            let idx = l.index.to_string();
            if idx.len() == 1 {
                s.push_str(&format!("x_{idx}"));
            } else {
                s.push_str(&format!("x_{{{idx}}}"));
            }
            if l.exp != 1 {
                let e = l.exp.to_string();
                if e.len() == 1 {
                    s.push_str(&format!("^{e}"));
                } else {
                    s.push_str(&format!("^{{{e}}}"));
                }
            }
        }
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", l.index)?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

/// `y_i = x_i x_{i-1}^-1`, defined for `i >= 1`.
pub fn y(i: u32) -> Result<Word> {
    if i == 0 {
        return Err(Error::InvalidArgument("y_i requires i >= 1".into()));
    }
    Ok(Word { letters: vec![Letter { index: i, exp: 1 }, Letter { index: i - 1, exp: -1 }] })
}

/// `y_i` for indices already known to be positive.
pub(crate) fn y_unchecked(i: u32) -> Word {
    debug_assert!(i >= 1);
    Word { letters: vec![Letter { index: i, exp: 1 }, Letter { index: i - 1, exp: -1 }] }
}
