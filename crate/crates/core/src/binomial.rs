//! Noncommutative binomial coefficients.
//!
//! For a subset `J = {j_1 < ... < j_k}` of `[1, n]`:
//!
//! * first kind:  `y_J  = y_{j_k+k-1} ... y_{j_2+1} y_{j_1}`
//! * second kind: `y'_J = y_{j_1+k-1} y_{j_2+k-3} ... y_{j_k+1-k}`
//!   (the `s`-th factor is `y_{j_s+k+1-2s}`)
//!
//! and `B(n, k)`, `B'(n, k)` are the sums over all `k`-subsets.

use itertools::Itertools;

use crate::catalan::truncated_tilde;
use crate::int::Int;
use crate::poly::NcPoly;
use crate::word::{y_unchecked, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    First,
    Second,
}

/// `y_J` for a strictly increasing `J` (entries >= 1).
pub fn subset_word_first(j: &[usize]) -> Word {
    let mut w = Word::one();
    for (s, &js) in j.iter().enumerate().rev() {
        w.mul_assign(&y_unchecked((js + s) as u32));
    }
    w
}

/// `y'_J` for a strictly increasing `J` (entries >= 1).
pub fn subset_word_second(j: &[usize]) -> Word {
    let k = j.len() as i64;
    let mut w = Word::one();
    for (s0, &js) in j.iter().enumerate() {
        let s = s0 as i64 + 1;
        let idx = js as i64 + k + 1 - 2 * s;
        debug_assert!(idx >= 1);
        w.mul_assign(&y_unchecked(idx as u32));
    }
    w
}

/// `B(n, k)` by enumerating `k`-subsets of `[1, n]`; zero when `k > n`.
pub fn binom_first(n: usize, k: usize) -> NcPoly {
    binom(n, k, Kind::First)
}

/// `B'(n, k)` by enumerating `k`-subsets of `[1, n]`; zero when `k > n`.
pub fn binom_second(n: usize, k: usize) -> NcPoly {
    binom(n, k, Kind::Second)
}

pub fn binom(n: usize, k: usize, kind: Kind) -> NcPoly {
    if k > n {
        return NcPoly::zero();
    }
    let word = match kind {
        Kind::First => subset_word_first,
        Kind::Second => subset_word_second,
    };
    NcPoly::from_terms((1..=n).combinations(k).map(|j| (word(&j), Int::ONE)))
}

/// `B(n, k)` from the Pascal rule `B(n+1, k) = B(n, k) + y_{n+k} B(n, k-1)`.
pub fn binom_first_pascal(n: usize, k: usize) -> NcPoly {
    pascal(n, k, Kind::First)
}

/// `B'(n, k)` from the Pascal rule `B'(n+1, k) = T(B'(n, k)) + y_k B'(n, k-1)`.
pub fn binom_second_pascal(n: usize, k: usize) -> NcPoly {
    pascal(n, k, Kind::Second)
}

fn pascal(n: usize, k: usize, kind: Kind) -> NcPoly {
    if k > n {
        return NcPoly::zero();
    }
    // row[kk] = B(m, kk) for the current m
    let mut row: Vec<NcPoly> = vec![NcPoly::one()];
    for m in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for kk in 0..=(m + 1).min(k) {
            let keep = row.get(kk).cloned().unwrap_or_default();
            let keep = match kind {
                Kind::First => keep,
                Kind::Second => keep.shift(1),
            };
            let grow = if kk == 0 {
                NcPoly::zero()
            } else {
                let yi = match kind {
                    Kind::First => y_unchecked((m + kk) as u32),
                    Kind::Second => y_unchecked(kk as u32),
                };
                row[kk - 1].mul_word_left(&yi)
            };
            next.push(keep.add(&grow));
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Subsets `{0 = j_0 < j_1 < ... < j_l = k}` of `[0, k]`; for `k = 0` the
/// single subset `{0}`.
pub fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![0]];
    }
    (1..k)
        .powerset()
        .map(|inner| {
            let mut j = Vec::with_capacity(inner.len() + 2);
            j.push(0);
            j.extend(inner);
            j.push(k);
            j
        })
        .collect()
}

fn sign(k: usize, set_size: usize) -> Int {
    // (-1)^(k + 1 - |J|)
    Int::sign_pow((k + 1 + set_size) % 2)
}

/// `Ct(n, k)` as the signed sum over compositions `J` of
/// `B(n+j_{l-1}+j_l-k, j_l-j_{l-1}) ... B(n+j_0+j_1-k, j_1-j_0)`.
pub fn cnk_from_binomials(n: usize, k: usize) -> NcPoly {
    assert!(k <= n, "cnk_from_binomials requires k <= n");
    compositions(k)
        .into_iter()
        .map(|j| {
            let factors: Vec<NcPoly> = j
                .windows(2)
                .rev()
                .map(|w| binom_first(n + w[0] + w[1] - k, w[1] - w[0]))
                .collect();
            NcPoly::product(&factors).scale(&sign(k, j.len()))
        })
        .sum()
}

/// `B(n, k)` as the signed sum over compositions `J` of
/// `Ct(n+j_{l-1}+j_l-k, j_l-j_{l-1}) ... Ct(n+j_0+j_1-k, j_1-j_0)`.
///
/// The factors run from the top of the composition down, the same order as
/// in [`cnk_from_binomials`]; both come from inverting the same unitriangular
/// matrix. Multiplying them bottom-up gives a different element for `k >= 2`.
pub fn binom_from_cnk(n: usize, k: usize) -> NcPoly {
    assert!(k <= n, "binom_from_cnk requires k <= n");
    compositions(k)
        .into_iter()
        .map(|j| {
            let factors: Vec<NcPoly> = j
                .windows(2)
                .rev()
                .map(|w| (*truncated_tilde(n + w[0] + w[1] - k, w[1] - w[0])).clone())
                .collect();
            NcPoly::product(&factors).scale(&sign(k, j.len()))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::binomial;

    fn ysum(range: impl Iterator<Item = u32>) -> NcPoly {
        NcPoly::from_terms(range.map(|i| (y_unchecked(i), Int::ONE)))
    }

    #[test]
    fn small_cases() {
        for n in 0..7 {
            assert!(binom_first(n, 0).is_one());
            assert!(binom_second(n, 0).is_one());
            assert!(binom_first(n, n + 1).is_zero());
            assert!(binom_second(n, n + 3).is_zero());
        }
        for n in 1..7u32 {
            assert_eq!(binom_first(n as usize, 1), ysum(1..=n));
            assert_eq!(binom_second(n as usize, 1), ysum(1..=n));
        }
    }

    #[test]
    fn two_subsets() {
        for n in 2..8u32 {
            let mut first = Vec::new();
            let mut second = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    first.push((y_unchecked(j + 1).mul(&y_unchecked(i)), Int::ONE));
                    second.push((y_unchecked(i + 1).mul(&y_unchecked(j - 1)), Int::ONE));
                }
            }
            assert_eq!(binom_first(n as usize, 2), NcPoly::from_terms(first));
            assert_eq!(binom_second(n as usize, 2), NcPoly::from_terms(second));
        }
    }

    #[test]
    fn full_subsets() {
        for n in 1..7u32 {
            let mut w = Word::one();
            for i in (0..n).rev() {
                w.mul_assign(&y_unchecked(2 * i + 1));
            }
            assert_eq!(binom_first(n as usize, n as usize), NcPoly::from_word(w));
            let mut w = Word::one();
            for i in (1..=n).rev() {
                w.mul_assign(&y_unchecked(i));
            }
            assert_eq!(binom_second(n as usize, n as usize), NcPoly::from_word(w));
        }
    }

    #[test]
    fn complements_of_singletons() {
        // B(n, n-1) = sum_i y_{[1,n] \ {i}}, and likewise for the second kind.
        for n in 2..7usize {
            let mut f = Vec::new();
            let mut s = Vec::new();
            for i in 1..=n {
                let j: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
                f.push((subset_word_first(&j), Int::ONE));
                s.push((subset_word_second(&j), Int::ONE));
            }
            assert_eq!(binom_first(n, n - 1), NcPoly::from_terms(f));
            assert_eq!(binom_second(n, n - 1), NcPoly::from_terms(s));
        }
    }

    #[test]
    fn counts_are_classical() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                assert_eq!(binom_first(n, k).eps(), binomial(n, k));
                assert_eq!(binom_second(n, k).eps(), binomial(n, k));
            }
        }
    }

    #[test]
    fn pascal_builder_matches_enumeration() {
        for n in 0..=9 {
            for k in 0..=n + 1 {
                assert_eq!(binom_first_pascal(n, k), binom_first(n, k), "first n={n} k={k}");
                assert_eq!(binom_second_pascal(n, k), binom_second(n, k), "second n={n} k={k}");
            }
        }
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(0), vec![vec![0]]);
        assert_eq!(compositions(1), vec![vec![0, 1]]);
        let mut c3 = compositions(3);
        c3.sort();
        assert_eq!(c3, vec![vec![0, 1, 2, 3], vec![0, 1, 3], vec![0, 2, 3], vec![0, 3]]);
    }

    #[test]
    fn one_step_compositions() {
        for n in 1..7 {
            assert_eq!(cnk_from_binomials(n, 1), binom_first(n, 1));
            assert_eq!(binom_from_cnk(n, 1), *truncated_tilde(n, 1));
            assert!(cnk_from_binomials(n, 0).is_one());
        }
    }

    #[test]
    fn two_step_identity_by_hand() {
        // Ct(n,2) = B(n+1,1) B(n-1,1) - B(n,2)
        for n in 2..7 {
            let rhs = binom_first(n + 1, 1).mul(&binom_first(n - 1, 1)).sub(&binom_first(n, 2));
            assert_eq!(*truncated_tilde(n, 2), rhs);
            assert_eq!(cnk_from_binomials(n, 2), rhs);
        }
    }

    #[test]
    fn factor_order_matters_for_the_inverse_sum() {
        // Bottom-up products do not reproduce B(n, 2).
        let n = 2;
        let bottom_up = truncated_tilde(n - 1, 1).mul(&truncated_tilde(n + 1, 1)).sub(&truncated_tilde(n, 2));
        assert_ne!(bottom_up, binom_first(n, 2));
        assert_eq!(binom_from_cnk(n, 2), binom_first(n, 2));
    }
}
