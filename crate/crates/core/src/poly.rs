//! The integer group ring of the free group.
//!
//! An [`NcPoly`] is a finite sum of reduced words with nonzero integer
//! coefficients. Terms are kept sorted in the canonical word order, so
//! equality, hashing and printing are all structural.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::int::Int;
use crate::word::Word;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    /// Strictly increasing by word, no zero coefficients.
    terms: Vec<(Word, Int)>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        NcPoly::from_word(Word::one())
    }

    pub fn from_word(w: Word) -> Self {
        NcPoly { terms: vec![(w, Int::ONE)] }
    }

    pub fn monomial(w: Word, c: Int) -> Self {
        if c.is_zero() {
            NcPoly::zero()
        } else {
            NcPoly { terms: vec![(w, c)] }
        }
    }

    /// The generator `x_k` as a polynomial.
    pub fn gen(k: u32) -> Self {
        NcPoly::from_word(Word::gen(k))
    }

    pub fn constant(c: Int) -> Self {
        NcPoly::monomial(Word::one(), c)
    }

    /// Collects terms, merging equal words and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Int)>>(terms: I) -> Self {
        let mut acc: FxHashMap<Word, Int> = FxHashMap::default();
        for (w, c) in terms {
            *acc.entry(w).or_default() += &c;
        }
        NcPoly::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Word, Int>) -> Self {
        let mut terms: Vec<(Word, Int)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        NcPoly { terms }
    }

    /// Terms whose words are known to be pairwise distinct, in any order.
    fn from_distinct(mut terms: Vec<(Word, Int)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        debug_assert!(terms.windows(2).all(|p| p[0].0 != p[1].0));
        NcPoly { terms }
    }

    pub fn terms(&self) -> &[(Word, Int)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Int)> {
        self.terms.iter().map(|(w, c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Coefficient of `w` (zero if absent).
    pub fn coeff(&self, w: &Word) -> Int {
        match self.terms.binary_search_by(|(x, _)| x.cmp(w)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// The single word of a monomial with coefficient one.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.as_slice() {
            [(w, c)] if c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn max_index(&self) -> Option<u32> {
        self.terms.iter().filter_map(|(w, _)| w.max_index()).max()
    }

    pub fn scale(&self, c: &Int) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// `w * self`. Left multiplication by a group element permutes words, so
    /// no coefficients merge.
    pub fn mul_word_left(&self, w: &Word) -> NcPoly {
        NcPoly::from_distinct(self.terms.iter().map(|(x, c)| (w.mul(x), c.clone())).collect())
    }

    /// `self * w`.
    pub fn mul_word_right(&self, w: &Word) -> NcPoly {
        NcPoly::from_distinct(self.terms.iter().map(|(x, c)| (x.mul(w), c.clone())).collect())
    }

    fn merge(&self, other: &NcPoly, negate_other: bool) -> NcPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let rhs = |c: &Int| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &rhs(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(w, c)| (w.clone(), rhs(c))));
        NcPoly { terms: out }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        if self.is_zero() || other.is_zero() {
            return NcPoly::zero();
        }
        if let [(w, c)] = other.terms.as_slice() {
            if c.is_one() {
                return self.mul_word_right(w);
            }
        }
        if let [(w, c)] = self.terms.as_slice() {
            if c.is_one() {
                return other.mul_word_left(w);
            }
        }
        let mut acc: FxHashMap<Word, Int> = FxHashMap::default();
        acc.reserve(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(wa.mul(wb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += &c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        NcPoly::from_map(acc)
    }

    /// Product of a sequence of factors, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a NcPoly>>(factors: I) -> NcPoly {
        factors.into_iter().fold(NcPoly::one(), |acc, f| NcPoly::mul(&acc, f))
    }

    /// The anti-automorphism fixing each generator.
    pub fn bar(&self) -> NcPoly {
        NcPoly::from_distinct(self.terms.iter().map(|(w, c)| (w.bar(), c.clone())).collect())
    }

    /// The shift endomorphism `x_k -> x_{k+r}`.
    pub fn shift(&self, r: u32) -> NcPoly {
        if r == 0 {
            return self.clone();
        }
        // Shifting preserves the canonical order of words of equal length
        // only when all indices move together, which they do.
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.shift(r), c.clone())).collect() }
    }

    /// Counit: every generator goes to 1, so the result is the coefficient sum.
    pub fn eps(&self) -> BigInt {
        let mut s = Int::ZERO;
        for (_, c) in &self.terms {
            s += c;
        }
        s.to_bigint()
    }

    /// Applies the ring homomorphism induced by a group homomorphism given
    /// on generators. Distinct words may collide, so terms are re-collected.
    pub fn substitute<F: FnMut(u32) -> Word>(&self, mut image: F) -> NcPoly {
        let mut cache: Vec<Option<Word>> = Vec::new();
        let mut img = |k: u32| -> Word {
            let k = k as usize;
            if cache.len() <= k {
                cache.resize(k + 1, None);
            }
            cache[k].get_or_insert_with(|| image(k as u32)).clone()
        };
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.substitute(&mut img), c.clone())))
    }

    /// `x_k -> x0^k x1^k`.
    pub fn sigma(&self) -> NcPoly {
        self.substitute(sigma_gen)
    }

    /// `x_k -> x0 (x0^-1 x1)^k`.
    pub fn pi(&self) -> NcPoly {
        self.substitute(pi_gen)
    }

    /// Canonical text form, e.g. `x2 + x1*x0^-1*x1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let a = c.abs();
            if w.is_one() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                }
                s.push_str(&w.to_latex());
            }
        }
        s
    }
}

pub(crate) fn sigma_gen(k: u32) -> Word {
    Word::from_pairs([(0, k as i64), (1, k as i64)])
}

pub(crate) fn pi_gen(k: u32) -> Word {
    Word::gen(0).mul(&Word::from_pairs([(0, -1), (1, 1)]).pow(k as i64))
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if w.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl From<Word> for NcPoly {
    fn from(w: Word) -> Self {
        NcPoly::from_word(w)
    }
}

impl<'a> Add<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &'a NcPoly) -> NcPoly {
        NcPoly::add(self, rhs)
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: NcPoly) -> NcPoly {
        NcPoly::add(&self, &rhs)
    }
}

impl<'a> Sub<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &'a NcPoly) -> NcPoly {
        NcPoly::sub(self, rhs)
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: NcPoly) -> NcPoly {
        NcPoly::sub(&self, &rhs)
    }
}

impl<'a> Mul<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &'a NcPoly) -> NcPoly {
        NcPoly::mul(self, rhs)
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: NcPoly) -> NcPoly {
        NcPoly::mul(&self, &rhs)
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(&self)
    }
}

impl Sum for NcPoly {
    /// Sums by collecting all terms at once rather than pairwise merging.
    fn sum<I: Iterator<Item = NcPoly>>(iter: I) -> NcPoly {
        NcPoly::from_terms(iter.flat_map(|p| p.terms.into_iter()))
    }
}

impl<'a> Sum<&'a NcPoly> for NcPoly {
    fn sum<I: Iterator<Item = &'a NcPoly>>(iter: I) -> NcPoly {
        NcPoly::from_terms(iter.flat_map(|p| p.terms.iter().cloned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::y;

    fn p(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition_purges_zero_terms() {
        assert_eq!(p("x2 + x1*x0^-1*x1") + p("-x2"), p("x1*x0^-1*x1"));
        assert!((p("x3 - x1") - p("x3 - x1")).is_zero());
    }

    #[test]
    fn unit_is_identity() {
        let a = p("2*x3*x1^-2 - x0 + 5");
        assert_eq!(&a * &NcPoly::one(), a);
        assert_eq!(&NcPoly::one() * &a, a);
    }

    #[test]
    fn multiplication_collects() {
        // (x0 + x1)(x0 - x1) = x0^2 - x0 x1 + x1 x0 - x1^2
        let prod = p("x0 + x1") * p("x0 - x1");
        assert_eq!(prod.to_string(), "x0^2 - x1^2 - x0*x1 + x1*x0");
        // (1 + y1)(1 - y1) = 1 - y1^2
        let y1 = NcPoly::from_word(y(1).unwrap());
        let prod = (NcPoly::one() + y1.clone()) * (NcPoly::one() - y1.clone());
        assert_eq!(prod, NcPoly::one() - &y1 * &y1);
    }

    #[test]
    fn bar_reverses_words() {
        assert_eq!(p("x2*x0^-1*x1").bar(), p("x1*x0^-1*x2"));
        assert_eq!(p("x2 + x1*x0^-1*x1").bar(), p("x2 + x1*x0^-1*x1"));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("x0^-1*x1").shift(1), p("x1^-1*x2"));
        assert_eq!(p("x1").shift(1), p("x2"));
        assert_eq!(NcPoly::one().shift(5), NcPoly::one());
    }

    #[test]
    fn specializations_on_generators() {
        assert_eq!(p("x2").sigma(), p("x0^2*x1^2"));
        assert_eq!(p("x2^-1").sigma(), p("x1^-2*x0^-2"));
        assert_eq!(p("x1").pi(), p("x1"));
        assert_eq!(p("x2").pi(), p("x1*x0^-1*x1"));
        assert_eq!(p("x0").pi(), p("x0"));
        assert_eq!(p("x2 + x1*x0^-1*x1").pi(), p("2*x1*x0^-1*x1"));
    }

    #[test]
    fn eps_is_coefficient_sum() {
        assert_eq!(NcPoly::zero().eps(), BigInt::from(0));
        assert_eq!(p("3*x1 - x2*x0^-1 + 7").eps(), BigInt::from(9));
    }

    #[test]
    fn latex_form() {
        assert_eq!(p("x2 + x1*x0^-1*x1").to_latex(), "x_2+x_1x_0^{-1}x_1");
        assert_eq!(p("-2*x1 + 3").to_latex(), "3-2x_1");
    }
}
