//! Noncommutative Catalan numbers and their truncations.
//!
//! The primary route is a bottom-up table over `(n, k)`:
//!
//! ```text
//! Ct(n, 0) = 1
//! Ct(n, k) = Ct(n-1, k) + Ct(n, k-1) * y_{n+1-k}      (Ct(n, k) = 0 for k > n)
//! C(n, k)  = Ct(n, k) * x_{n-k}
//! C(n)     = C(n, n)
//! ```
//!
//! where `Ct` is the "tilde" truncation. The path sum and the index-sequence
//! sum in [`crate::paths`] are kept as oracles and never used here.
//!
//! Results are memoized in process-wide tables guarded by `RwLock`s and handed
//! out as `Arc<NcPoly>`. Entries are immutable once inserted; two threads
//! racing on the same cell compute identical values and the first insert wins.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::Result;
use crate::paths::{enumerate_jseq, enumerate_paths};
use crate::poly::NcPoly;
use crate::word::{y_unchecked, Word};

struct Memo<K> {
    map: RwLock<HashMap<K, Arc<NcPoly>>>,
}

impl<K: Eq + Hash + Copy> Memo<K> {
    fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    fn get(&self, k: &K) -> Option<Arc<NcPoly>> {
        self.map.read().expect("memo lock poisoned").get(k).cloned()
    }

    fn insert(&self, k: K, v: NcPoly) -> Arc<NcPoly> {
        let mut map = self.map.write().expect("memo lock poisoned");
        map.entry(k).or_insert_with(|| Arc::new(v)).clone()
    }

    fn get_or_compute(&self, k: K, f: impl FnOnce() -> NcPoly) -> Arc<NcPoly> {
        if let Some(v) = self.get(&k) {
            return v;
        }
        let v = f();
        self.insert(k, v)
    }
}

static TILDE: LazyLock<Memo<(usize, usize)>> = LazyLock::new(Memo::new);
static CATALAN: LazyLock<Memo<usize>> = LazyLock::new(Memo::new);
static UNDERLINE: LazyLock<Memo<usize>> = LazyLock::new(Memo::new);
static DOUBLE_UNDERLINE: LazyLock<Memo<(usize, usize)>> = LazyLock::new(Memo::new);

/// `Ct(n, k) = C(n, k) x_{n-k}^{-1}`, a polynomial in the `y_i`.
/// Zero when `k > n`.
pub fn truncated_tilde(n: usize, k: usize) -> Arc<NcPoly> {
    if k > n {
        return Arc::new(NcPoly::zero());
    }
    if let Some(v) = TILDE.get(&(n, k)) {
        return v;
    }
    // Fill the triangle below (n, k) row by row so no recursion is needed.
    for nn in 0..=n {
        for kk in 0..=k.min(nn) {
            TILDE.get_or_compute((nn, kk), || {
                if kk == 0 {
                    return NcPoly::one();
                }
                let above = if kk <= nn - 1 {
                    TILDE.get(&(nn - 1, kk)).expect("filled earlier")
                } else {
                    Arc::new(NcPoly::zero())
                };
                let left = TILDE.get(&(nn, kk - 1)).expect("filled earlier");
                above.add(&left.mul_word_right(&y_unchecked((nn + 1 - kk) as u32)))
            });
        }
    }
    TILDE.get(&(n, k)).expect("just filled")
}

/// `C(n, k)`: the sum of corner monomials over paths whose rightmost
/// southeast corner has height at most `k`. Zero when `k > n`.
pub fn truncated(n: usize, k: usize) -> NcPoly {
    if k > n {
        return NcPoly::zero();
    }
    truncated_tilde(n, k).mul_word_right(&Word::gen((n - k) as u32))
}

/// The noncommutative Catalan number `C(n)`.
pub fn catalan(n: usize) -> Arc<NcPoly> {
    CATALAN.get_or_compute(n, || truncated_tilde(n, n).mul_word_right(&Word::gen(0)))
}

/// `C(n)` as the sum over all Catalan paths of their corner monomials.
pub fn catalan_oracle(n: usize) -> Result<NcPoly> {
    Ok(enumerate_paths(n, None)?.iter().map(|p| NcPoly::from_word(p.monomial())).sum())
}

/// `C(n, k)` as a path sum restricted by the rightmost southeast corner.
pub fn truncated_oracle(n: usize, k: usize) -> Result<NcPoly> {
    Ok(enumerate_paths(n, Some(k))?.iter().map(|p| NcPoly::from_word(p.monomial())).sum())
}

/// `Ct(n, k)` as the sum of `y_{j_1} y_{j_2-1} ... y_{j_k-k+1}` over all
/// nondecreasing `j` with `s <= j_s <= n`.
pub fn tilde_oracle(n: usize, k: usize) -> Result<NcPoly> {
    Ok(enumerate_jseq(n, k)?.iter().map(|j| NcPoly::from_word(j.word())).sum())
}

/// Image of `C(n)` under `x_k -> x0^k x1^k`, built from
/// `U(0) = 1`, `U(n+1) = sum_k U(k) x0 U(n-k) x1`.
pub fn underline_catalan(n: usize) -> Arc<NcPoly> {
    if let Some(v) = UNDERLINE.get(&n) {
        return v;
    }
    let x0 = Word::gen(0);
    let x1 = Word::gen(1);
    for m in 0..=n {
        UNDERLINE.get_or_compute(m, || {
            if m == 0 {
                return NcPoly::one();
            }
            (0..m)
                .map(|k| {
                    let a = UNDERLINE.get(&k).expect("filled earlier");
                    let b = UNDERLINE.get(&(m - 1 - k)).expect("filled earlier");
                    a.mul_word_right(&x0).mul(&b.mul_word_right(&x1))
                })
                .sum()
        });
    }
    UNDERLINE.get(&n).expect("just filled")
}

/// `sigma(C(n, k)) * x1^(k-n)`, a homogeneous positive polynomial of degree
/// `n + k` in `x0, x1`, built from
/// `D(n, 0) = x0^n`, `D(n, k) = D(n, k-1) x1 + D(n-1, k) x0`.
/// Zero when `k > n`.
pub fn dd_truncated(n: usize, k: usize) -> Arc<NcPoly> {
    if k > n {
        return Arc::new(NcPoly::zero());
    }
    if let Some(v) = DOUBLE_UNDERLINE.get(&(n, k)) {
        return v;
    }
    let x0 = Word::gen(0);
    let x1 = Word::gen(1);
    for nn in 0..=n {
        for kk in 0..=k.min(nn) {
            DOUBLE_UNDERLINE.get_or_compute((nn, kk), || {
                if kk == 0 {
                    return NcPoly::from_word(Word::power(0, nn as i64));
                }
                let left = DOUBLE_UNDERLINE.get(&(nn, kk - 1)).expect("filled earlier").mul_word_right(&x1);
                if kk <= nn - 1 {
                    let above = DOUBLE_UNDERLINE.get(&(nn - 1, kk)).expect("filled earlier");
                    left.add(&above.mul_word_right(&x0))
                } else {
                    left
                }
            });
        }
    }
    DOUBLE_UNDERLINE.get(&(n, k)).expect("just filled")
}

/// Classical Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> num_bigint::BigInt {
    binomial(2 * n, n) / num_bigint::BigInt::from(n + 1)
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> num_bigint::BigInt {
    if k > n {
        return 0.into();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Int;

    fn p(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_catalan_numbers() {
        assert_eq!(*catalan(0), p("x0"));
        assert_eq!(*catalan(1), p("x1"));
        assert_eq!(*catalan(2), p("x2 + x1*x0^-1*x1"));
        assert_eq!(
            *catalan(3),
            p("x3 + x2*x1^-1*x2 + x2*x0^-1*x1 + x1*x0^-1*x2 + x1*x0^-1*x1*x0^-1*x1")
        );
    }

    #[test]
    fn truncated_examples() {
        for n in 0..8 {
            assert_eq!(truncated(n, 0), NcPoly::gen(n as u32));
            assert!(truncated_tilde(n, 0).is_one());
            assert!(truncated(n, n + 1).is_zero());
        }
        assert_eq!(*truncated_tilde(3, 1), p("x1*x0^-1 + x2*x1^-1 + x3*x2^-1"));
        for n in 1..=8 {
            assert_eq!(truncated(n, n), *catalan(n));
            assert_eq!(truncated(n, n - 1), *catalan(n));
            assert_eq!(
                *truncated_tilde(n, n),
                truncated_tilde(n, n - 1).mul_word_right(&y_unchecked(1))
            );
        }
    }

    #[test]
    fn truncated_one_closed_form() {
        // C(n,1) = x_n + sum_{i=1}^{n-1} x_i x_{i-1}^{-1} x_{n-1}
        for n in 1..8u32 {
            let mut expect = NcPoly::gen(n);
            for i in 1..n {
                expect = expect + NcPoly::from_word(Word::from_pairs([(i, 1), (i - 1, -1), (n - 1, 1)]));
            }
            assert_eq!(truncated(n as usize, 1), expect);
        }
    }

    #[test]
    fn oracles_agree_small() {
        for n in 0..=6 {
            assert_eq!(catalan_oracle(n).unwrap(), *catalan(n));
            for k in 0..=n {
                assert_eq!(tilde_oracle(n, k).unwrap(), *truncated_tilde(n, k), "n={n} k={k}");
                assert_eq!(truncated_oracle(n, k).unwrap(), truncated(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(catalan_oracle(0).unwrap(), p("x0"));
        assert!(catalan_oracle(15).is_err());
    }

    #[test]
    fn tilde_two_closed_form() {
        // sum_{1<=i<=j<=n, j>1} y_i y_{j-1}
        for n in 2..8u32 {
            let mut terms = Vec::new();
            for j in 2..=n {
                for i in 1..=j {
                    terms.push((y_unchecked(i).mul(&y_unchecked(j - 1)), Int::ONE));
                }
            }
            assert_eq!(*truncated_tilde(n as usize, 2), NcPoly::from_terms(terms));
        }
    }

    #[test]
    fn underline_examples() {
        assert_eq!(*underline_catalan(2), p("x0^2*x1^2 + x0*x1*x0*x1"));
        assert_eq!(
            *underline_catalan(3),
            p("x0^3*x1^3 + x0^2*x1*x0*x1^2 + x0^2*x1^2*x0*x1 + x0*x1*x0^2*x1^2 + x0*x1*x0*x1*x0*x1")
        );
        for n in 0..=8 {
            assert_eq!(*underline_catalan(n), catalan(n).sigma());
        }
    }

    #[test]
    fn double_underline_examples() {
        for n in 0..6 {
            assert_eq!(*dd_truncated(n, 0), NcPoly::from_word(Word::power(0, n as i64)));
        }
        assert_eq!(*dd_truncated(2, 1), p("x0^2*x1 + x0*x1*x0"));
        assert!(dd_truncated(2, 3).is_zero());
        for n in 0..=7 {
            for k in 0..=n {
                let expect = truncated(n, k).sigma().mul_word_right(&Word::power(1, k as i64 - n as i64));
                assert_eq!(*dd_truncated(n, k), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn classical_numbers() {
        let c: Vec<_> = (0..8).map(|n| catalan_number(n).to_string()).collect();
        assert_eq!(c, ["1", "1", "2", "5", "14", "42", "132", "429"]);
        assert_eq!(binomial(6, 2), 15.into());
        assert_eq!(binomial(2, 3), 0.into());
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || catalan(7 + t % 2).to_string()))
            .collect();
        let out: Vec<String> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, s) in out.iter().enumerate() {
            assert_eq!(*s, catalan(7 + t % 2).to_string());
        }
    }
}
