//! A registry of the identities this crate can check.
//!
//! Every [`Identity`] enumerates parameter cells up to a size bound and checks
//! one cell at a time. A check computes two sides by different routes and
//! compares them exactly; on mismatch both sides come back serialized.

use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::binomial::{
    binom_first, binom_first_pascal, binom_from_cnk, binom_second, binom_second_pascal, cnk_from_binomials,
};
use crate::catalan::{
    binomial, catalan, catalan_number, catalan_oracle, dd_truncated, tilde_oracle, truncated, truncated_oracle,
    truncated_tilde, underline_catalan,
};
use crate::int::Int;
use crate::matrix::{
    gauss_l, gauss_u, hankel, hankel_inverse, inv_l, inv_u, invert_unitriangular, quasidet_bordered, NcMatrix,
};
use crate::paths::{enumerate_paths, ENUMERATION_LIMIT};
use crate::poly::NcPoly;
use crate::qpoly::{chi_q, gh_cnk, q_binomial, q_hankel_det, q_hankel_det_exponent, QPoly};
use crate::word::{y_unchecked, Word};

/// Named integer parameters of one cell, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(Vec<(&'static str, i64)>);

impl Params {
    pub fn new(pairs: &[(&'static str, i64)]) -> Self {
        Params(pairs.to_vec())
    }

    pub fn pairs(&self) -> &[(&'static str, i64)] {
        &self.0
    }

    pub fn get(&self, name: &str) -> i64 {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("missing parameter {name}"))
    }

    fn u(&self, name: &str) -> usize {
        self.get(name) as usize
    }

    /// Sum of the parameters; used to pick the smallest failing cell.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|(_, v)| v.abs()).sum()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

fn compare<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().find(|o| !o.passed()).unwrap_or(Outcome::Pass)
}

pub struct Identity {
    pub id: &'static str,
    /// The identity, written out.
    pub statement: &'static str,
    /// Meaning of the size bound passed to [`Identity::cells`].
    pub bound: &'static str,
    pub default_max_n: usize,
    pub hard_cap: usize,
    cells: fn(usize) -> Vec<Params>,
    check: fn(&Params) -> Outcome,
}

impl Identity {
    /// All parameter cells with size at most `max_n`, sorted.
    pub fn cells(&self, max_n: usize) -> Vec<Params> {
        let mut c = (self.cells)(max_n);
        c.sort();
        c
    }

    pub fn check(&self, p: &Params) -> Outcome {
        (self.check)(p)
    }

    /// Checks every cell up to `max_n`; returns the failures.
    pub fn run(&self, max_n: usize) -> Vec<(Params, Outcome)> {
        self.cells(max_n)
            .into_iter()
            .map(|p| {
                let o = self.check(&p);
                (p, o)
            })
            .filter(|(_, o)| !o.passed())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// shorthands

fn c(n: usize) -> NcPoly {
    (*catalan(n)).clone()
}

fn ct(n: usize, k: usize) -> NcPoly {
    (*truncated_tilde(n, k)).clone()
}

fn x(i: usize) -> NcPoly {
    NcPoly::gen(i as u32)
}

fn xinv(i: usize) -> NcPoly {
    NcPoly::from_word(Word::power(i as u32, -1))
}

fn yp(i: usize) -> NcPoly {
    NcPoly::from_word(y_unchecked(i as u32))
}

fn prod(fs: &[&NcPoly]) -> NcPoly {
    NcPoly::product(fs.iter().copied())
}

fn sum(ps: impl IntoIterator<Item = NcPoly>) -> NcPoly {
    ps.into_iter().sum()
}

fn ident(n: usize) -> NcMatrix {
    NcMatrix::identity(n + 1)
}

fn mat_eq(lhs: NcMatrix, rhs: NcMatrix) -> Outcome {
    compare(&lhs, &rhs)
}

fn product_is_identity(a: &NcMatrix, b: &NcMatrix, n: usize) -> Outcome {
    all([
        mat_eq(a.mul(b).expect("square"), ident(n)),
        mat_eq(b.mul(a).expect("square"), ident(n)),
    ])
}

/// `binom(n+k, k) - binom(n+k, k-1)`, taken literally for every `k >= 0`
/// (negative once `k > n + 1`).
fn ballot_closed_form(n: usize, k: usize) -> BigInt {
    let lower = if k == 0 { BigInt::from(0) } else { binomial(n + k, k - 1) };
    binomial(n + k, k) - lower
}

fn sign(e: usize) -> Int {
    Int::sign_pow(e)
}

// ---------------------------------------------------------------------------
// cell generators

fn cells_n(lo: usize) -> impl Fn(usize) -> Vec<Params> {
    move |max| (lo..=max).map(|n| Params::new(&[("n", n as i64)])).collect()
}

fn cells_nk(max: usize, k_lo: usize, n_lo: usize) -> Vec<Params> {
    let mut v = Vec::new();
    for n in n_lo..=max {
        for k in k_lo..=n {
            v.push(Params::new(&[("n", n as i64), ("k", k as i64)]));
        }
    }
    v
}

fn cells_mn(max: usize) -> Vec<Params> {
    let mut v = Vec::new();
    for m in 0..=1 {
        for n in 0..=max {
            v.push(Params::new(&[("m", m), ("n", n as i64)]));
        }
    }
    v
}

// ---------------------------------------------------------------------------
// checks

fn check_bar(p: &Params) -> Outcome {
    let cn = c(p.u("n"));
    compare(&cn.bar(), &cn)
}

fn coefficient_summary(poly: &NcPoly) -> String {
    let ones = poly.iter().all(|(_, c)| c.is_one());
    format!("terms={} all_plus_one={}", poly.len(), ones)
}

fn check_coefficients(p: &Params) -> Outcome {
    let n = p.u("n");
    let want = format!("terms={} all_plus_one=true", catalan_number(n));
    all([
        compare(&coefficient_summary(&catalan(n)), &want),
        compare(&coefficient_summary(&underline_catalan(n)), &want),
    ])
}

fn check_catalan_oracle(p: &Params) -> Outcome {
    let n = p.u("n");
    compare(&catalan_oracle(n).expect("guarded"), &c(n))
}

fn check_truncated_oracle(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    compare(&truncated_oracle(n, k).expect("guarded"), &truncated(n, k))
}

fn check_cnk_a(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    compare(&tilde_oracle(n, k).expect("guarded"), &ct(n, k))
}

fn check_jseq_bijection(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let shift = Word::power((n - k) as u32, -1);
    let mut seen = std::collections::BTreeSet::new();
    for path in enumerate_paths(n, Some(k)).expect("guarded") {
        let j = path.jseq(k);
        let lhs = path.monomial().mul(&shift);
        if lhs != j.word() {
            return Outcome::Fail { lhs: format!("{path}: {lhs}"), rhs: j.word().to_string() };
        }
        seen.insert(j);
    }
    let total = crate::paths::enumerate_jseq(n, k).expect("guarded").len();
    compare(&seen.len(), &total)
}

fn check_reflection(p: &Params) -> Outcome {
    let n = p.u("n");
    all(enumerate_paths(n, None)
        .expect("guarded")
        .into_iter()
        .map(|path| compare(&path.monomial().bar(), &path.reflect().monomial())))
}

fn check_jump_monomials(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let lhs: NcPoly = enumerate_paths(n, Some(k))
        .expect("guarded")
        .iter()
        .map(|path| NcPoly::from_word(path.jump_monomial()))
        .sum();
    let rhs = dd_truncated(n, k).mul_word_right(&Word::power(1, (n - k) as i64));
    compare(&lhs, &rhs)
}

fn check_recursion_c_left(p: &Params) -> Outcome {
    let n = p.u("n");
    let rhs = sum((0..=n).map(|k| prod(&[&c(k), &xinv(0), &c(n - k).shift(1)])));
    compare(&c(n + 1), &rhs)
}

fn check_recursion_c_right(p: &Params) -> Outcome {
    let n = p.u("n");
    let rhs = sum((0..=n).map(|k| prod(&[&c(k).shift(1), &xinv(0), &c(n - k)])));
    compare(&c(n + 1), &rhs)
}

/// Coefficients `0..=deg` of the product of two truncated series.
fn series_mul(a: &[NcPoly], b: &[NcPoly], deg: usize) -> Vec<NcPoly> {
    (0..=deg).map(|d| sum((0..=d).map(|i| a[i].mul(&b[d - i])))).collect()
}

fn catalan_series(deg: usize) -> Vec<NcPoly> {
    (0..=deg).map(c).collect()
}

fn check_c_series(p: &Params) -> Outcome {
    // C = x0 + t * C x0^-1 T(C), compared through degree n
    let n = p.u("n");
    let cs = catalan_series(n);
    let left: Vec<NcPoly> = cs.iter().map(|a| a.mul(&xinv(0))).collect();
    let right: Vec<NcPoly> = cs.iter().map(|a| a.shift(1)).collect();
    let quad = series_mul(&left, &right, n);
    let rhs: Vec<NcPoly> = (0..=n).map(|d| if d == 0 { x(0) } else { quad[d - 1].clone() }).collect();
    all((0..=n).map(|d| compare(&cs[d], &rhs[d])))
}

fn check_c_series_commutation(p: &Params) -> Outcome {
    let n = p.u("n");
    let cs = catalan_series(n);
    let shifted: Vec<NcPoly> = cs.iter().map(|a| a.shift(1)).collect();
    let with_inv = |v: &[NcPoly]| -> Vec<NcPoly> { v.iter().map(|a| a.mul(&xinv(0))).collect() };
    let lhs = series_mul(&with_inv(&shifted), &cs, n);
    let rhs = series_mul(&with_inv(&cs), &shifted, n);
    all((0..=n).map(|d| compare(&lhs[d], &rhs[d])))
}

fn check_t2_left(p: &Params) -> Outcome {
    let n = p.u("n");
    let head = prod(&[&c(n), &xinv(0), &x(1)]);
    let rhs = head + sum((1..=n).map(|k| prod(&[&c(k), &xinv(1), &c(n - k).shift(2)])));
    compare(&c(n + 1), &rhs)
}

fn check_t2_right(p: &Params) -> Outcome {
    let n = p.u("n");
    let head = prod(&[&x(1), &xinv(0), &c(n)]);
    let rhs = head + sum((0..n).map(|k| prod(&[&c(k).shift(2), &xinv(1), &c(n - k)])));
    compare(&c(n + 1), &rhs)
}

fn check_lemma_truncated(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let mut rhs = truncated(n, k - 1);
    // C(n-1, n) = 0, so the correction only exists for k < n
    if k < n {
        rhs = rhs + prod(&[&truncated(n - 1, k), &xinv(n - k - 1), &x(n - k)]);
    }
    compare(&truncated(n, k), &rhs)
}

fn check_cnk_b(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let o = |n: usize, k: usize| if k > n { NcPoly::zero() } else { tilde_oracle(n, k).expect("guarded") };
    let rhs = o(n - 1, k) + o(n, k - 1).mul(&yp(n + 1 - k));
    compare(&o(n, k), &rhs)
}

fn check_cnk_c(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let rhs = sum((0..=k).map(|i| ct(i, i).mul(&ct(n - i, k - i).shift(1))));
    compare(&ct(n + 1, k), &rhs)
}

fn check_catalan_via_truncated(p: &Params) -> Outcome {
    let n = p.u("n");
    let d = p.get("d");
    let mut terms = Vec::new();
    for b in 0..=n {
        let a = b as i64 + d;
        if a < 0 || a as usize + b > n {
            continue;
        }
        let a = a as usize;
        terms.push(prod(&[&truncated(n - b, a), &xinv(n - a - b), &truncated(n - a, b).bar()]));
    }
    compare(&sum(terms), &c(n))
}

fn sig(n: usize) -> NcPoly {
    c(n).sigma()
}

fn check_underline_builder(p: &Params) -> Outcome {
    let n = p.u("n");
    compare(&*underline_catalan(n), &sig(n))
}

fn check_underline_left(p: &Params) -> Outcome {
    let n = p.u("n");
    let rhs = sum((0..=n).map(|k| prod(&[&sig(k), &x(0), &sig(n - k), &x(1)])));
    compare(&sig(n + 1), &rhs)
}

fn check_underline_right(p: &Params) -> Outcome {
    let n = p.u("n");
    let rhs = sum((0..=n).map(|k| prod(&[&x(0), &sig(k), &x(1), &sig(n - k)])));
    compare(&sig(n + 1), &rhs)
}

fn check_underline_t2_left(p: &Params) -> Outcome {
    let n = p.u("n");
    let x1sq = NcPoly::from_word(Word::power(1, 2));
    let head = prod(&[&sig(n), &x(0), &x(1)]);
    let rhs = head + sum((1..=n).map(|k| prod(&[&sig(k), &xinv(1), &x(0), &sig(n - k), &x1sq])));
    compare(&sig(n + 1), &rhs)
}

fn check_underline_t2_right(p: &Params) -> Outcome {
    let n = p.u("n");
    let x0sq = NcPoly::from_word(Word::power(0, 2));
    let head = prod(&[&x(0), &x(1), &sig(n)]);
    let rhs = head + sum((0..n).map(|k| prod(&[&x0sq, &sig(k), &x(1), &xinv(0), &sig(n - k)])));
    compare(&sig(n + 1), &rhs)
}

fn check_dd(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let d = |n: usize, k: usize| {
        if k > n {
            NcPoly::zero()
        } else {
            truncated(n, k).sigma().mul_word_right(&Word::power(1, k as i64 - n as i64))
        }
    };
    let dnk = d(n, k);
    let positive = dnk.iter().all(|(w, _)| w.letters().iter().all(|l| l.exp > 0) && w.degree() == (n + k) as i64);
    let mut checks = vec![compare(&dnk, &*dd_truncated(n, k)), compare(&positive, &true)];
    if k >= 1 {
        let rhs = d(n, k - 1).mul(&x(1)) + d(n - 1, k).mul(&x(0));
        checks.push(compare(&dnk, &rhs));
    }
    all(checks)
}

fn check_pi(p: &Params) -> Outcome {
    let n = p.u("n");
    let rhs = x(n).pi().scale(&Int::from(catalan_number(n)));
    compare(&c(n).pi(), &rhs)
}

/// A random integer combination of alternating words `x_a x_b^-1 x_c ...`
/// over generators `0..=max_index`.
pub fn random_alternating(rng: &mut StdRng, max_index: u32) -> NcPoly {
    let nterms = rng.gen_range(1..=4);
    NcPoly::from_terms((0..nterms).map(|_| {
        let len = 2 * rng.gen_range(0..=3) + 1;
        let mut pairs: Vec<(u32, i64)> = Vec::with_capacity(len);
        for i in 0..len {
            let mut idx = rng.gen_range(0..=max_index);
            if let Some(&(prev, _)) = pairs.last() {
                while idx == prev {
                    idx = rng.gen_range(0..=max_index);
                }
            }
            pairs.push((idx, if i % 2 == 0 { 1 } else { -1 }));
        }
        let coeff = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        (Word::from_pairs(pairs), Int::from(coeff))
    }))
}

fn check_sigma_shift(p: &Params) -> Outcome {
    let mut rng = StdRng::seed_from_u64(p.get("seed") as u64);
    let poly = random_alternating(&mut rng, p.u("n").max(1) as u32);
    let lhs = poly.shift(1).sigma();
    let rhs = prod(&[&x(0), &poly.sigma(), &x(1)]);
    compare(&lhs, &rhs)
}

fn check_eps(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    all([
        compare(&truncated(n, k).eps(), &ballot_closed_form(n, k)),
        compare(&c(n).eps(), &catalan_number(n)),
    ])
}

fn eps_cnk(n: usize, k: usize) -> BigInt {
    truncated(n, k).eps()
}

fn check_classical_via_truncated(p: &Params) -> Outcome {
    let n = p.u("n");
    let d = p.get("d");
    let mut rhs = BigInt::from(0);
    for b in 0..=n {
        let a = b as i64 + d;
        if a < 0 || a as usize + b > n {
            continue;
        }
        let a = a as usize;
        rhs += eps_cnk(n - b, a) * eps_cnk(n - a, b);
    }
    compare(&rhs, &catalan_number(n))
}

fn check_classical_first(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let rhs: BigInt = (0..=k).map(|j| c(j).eps() * eps_cnk(n - j, k - j)).sum();
    compare(&eps_cnk(n + 1, k), &rhs)
}

fn check_classical_alternating(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let s: BigInt = (0..=k)
        .map(|j| {
            let t = eps_cnk(n + k - j, j) * binomial(n - j, k - j);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    compare(&s, &BigInt::from(0))
}

fn check_classical_multiplication(p: &Params) -> Outcome {
    let (m, n, k) = (p.u("m"), p.u("n"), p.u("k"));
    let term = |nn: usize, kk: usize| {
        if kk <= nn {
            eps_cnk(nn, kk)
        } else {
            ballot_closed_form(nn, kk)
        }
    };
    let rhs: BigInt = (0..=n.min(k)).map(|l| term(m + l, k - l) * binomial(n, l)).sum();
    compare(&term(m + n, k), &rhs)
}

fn cells_mnk(max: usize, k_max: impl Fn(usize, usize) -> usize) -> Vec<Params> {
    let mut v = Vec::new();
    for m in 0..=max {
        for n in 0..=max - m {
            for k in 0..=k_max(m, n) {
                v.push(Params::new(&[("m", m as i64), ("n", n as i64), ("k", k as i64)]));
            }
        }
    }
    v
}

fn check_mult_binom_first(p: &Params) -> Outcome {
    let (m, n, k) = (p.u("m"), p.u("n"), p.u("k"));
    let rhs = sum((0..=k).map(|a| {
        let b = k - a;
        binom_first(m, a).shift((n + b) as u32).mul(&binom_first(n, b))
    }));
    compare(&binom_first(m + n, k), &rhs)
}

fn check_mult_binom_second(p: &Params) -> Outcome {
    let (m, n, k) = (p.u("m"), p.u("n"), p.u("k"));
    let rhs = sum((0..=k.min(m)).map(|a| {
        let b = k - a;
        binom_second(m, a).shift(b as u32).mul(&binom_second(n, b).shift((m - a) as u32))
    }));
    compare(&binom_second(m + n, k), &rhs)
}

fn check_pascal_first(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let mut rhs = binom_first(n, k);
    if k >= 1 {
        rhs = rhs + yp(n + k).mul(&binom_first(n, k - 1));
    }
    all([
        compare(&binom_first(n + 1, k), &rhs),
        compare(&binom_first_pascal(n + 1, k), &rhs),
    ])
}

fn check_pascal_second(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let mut rhs = binom_second(n, k).shift(1);
    if k >= 1 {
        rhs = rhs + yp(k).mul(&binom_second(n, k - 1));
    }
    all([
        compare(&binom_second(n + 1, k), &rhs),
        compare(&binom_second_pascal(n + 1, k), &rhs),
    ])
}

fn cells_pascal(max: usize) -> Vec<Params> {
    let mut v = Vec::new();
    for n in 0..=max {
        for k in 0..=n + 2 {
            v.push(Params::new(&[("n", n as i64), ("k", k as i64)]));
        }
    }
    v
}

fn check_mult_truncated(p: &Params) -> Outcome {
    let (m, n, k) = (p.u("m"), p.u("n"), p.u("k"));
    let mut terms = Vec::new();
    for l in 0..=n.min(k) {
        let kk = k - l;
        if kk > m + l {
            continue;
        }
        let s = (m + l) as i64 - k as i64;
        assert!(s >= 0, "negative shift at m={m} n={n} k={k} l={l}");
        terms.push(ct(m + l, kk).mul(&binom_second(n, l).shift(s as u32)));
    }
    compare(&ct(m + n, k), &sum(terms))
}

fn check_alternating(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let s = sum((0..=k).map(|j| ct(n + k - j, j).mul(&binom_first(n - j, k - j)).scale(&sign(j))));
    compare(&s, &NcPoly::zero())
}

fn check_companion(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let s = sum((0..=k).map(|j| binom_first(n + k - j, j).mul(&ct(n - j, k - j)).scale(&sign(j))));
    compare(&s, &NcPoly::zero())
}

fn check_cnk_via_binomials(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    compare(&cnk_from_binomials(n, k), &ct(n, k))
}

fn check_binom_via_cnk(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    compare(&binom_from_cnk(n, k), &binom_first(n, k))
}

fn check_gauss(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    mat_eq(gauss_l(m, n).mul(&gauss_u(m, n)).expect("square"), hankel(m, n))
}

fn check_inverse_l(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    product_is_identity(&gauss_l(m, n), &inv_l(m, n), n)
}

fn check_inverse_u(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    product_is_identity(&gauss_u(m, n), &inv_u(m, n), n)
}

fn check_hankel_inverse(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    product_is_identity(&hankel(m, n), &hankel_inverse(m, n), n)
}

fn check_unitriangular(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    mat_eq(invert_unitriangular(&gauss_l(m, n)).expect("unitriangular"), inv_l(m, n))
}

fn check_quasidet(p: &Params) -> Outcome {
    let (m, i, j) = (p.u("m"), p.u("i"), p.u("j"));
    compare(&quasidet_bordered(m, i, j).expect("m <= 1, i <= j"), &truncated(m + i + j, j - i))
}

fn check_principal_quasiminor(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    compare(&quasidet_bordered(m, n, n).expect("m <= 1"), &x(m + 2 * n))
}

fn check_det_gh(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    compare(&chi_q(&ct(n, k)), &gh_cnk(n, k))
}

fn check_gh_hankel_det(p: &Params) -> Outcome {
    let (m, n) = (p.u("m"), p.u("n"));
    let det = q_hankel_det(m, n).expect("square");
    compare(&det, &QPoly::q_pow(q_hankel_det_exponent(m, n)))
}

fn check_chi_binomials(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let g = q_binomial(n, k);
    let k = k as i64;
    all([
        compare(&chi_q(&binom_first(n, k as usize)), &g.shift(k * (k - 1))),
        compare(&chi_q(&binom_second(n, k as usize)), &g.shift(k * (k - 1) / 2)),
    ])
}

fn check_chi_shift(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let d = k as i64;
    let a = ct(n, k);
    let b = binom_first(n, k);
    all([
        compare(&chi_q(&a.shift(1)), &chi_q(&a).shift(d)),
        compare(&chi_q(&b.shift(1)), &chi_q(&b).shift(d)),
    ])
}

fn check_chi_eps(p: &Params) -> Outcome {
    let (n, k) = (p.u("n"), p.u("k"));
    let t = truncated(n, k);
    compare(&chi_q(&t).eval_one(), &t.eps())
}

fn cells_nd(max: usize) -> Vec<Params> {
    let mut v = Vec::new();
    for n in 0..=max {
        for d in -(n as i64)..=n as i64 {
            v.push(Params::new(&[("n", n as i64), ("d", d)]));
        }
    }
    v
}

/// Number of random cases generated by `sigma-shift`.
pub const SIGMA_SHIFT_CASES: i64 = 500;

/// Every registered identity, sorted by id.
pub fn registry() -> Vec<Identity> {
    let mut r = vec![
        Identity {
            id: "bar-invariance",
            statement: "bar(C_n) = C_n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_n(0)(max),
            check: check_bar,
        },
        Identity {
            id: "coefficients",
            statement: "C_n and sigma(C_n) have Catalan(n) terms, all with coefficient +1",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_n(0)(max),
            check: check_coefficients,
        },
        Identity {
            id: "catalan-oracle",
            statement: "C_n = sum over Catalan paths P of M_P",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_n(0)(max),
            check: check_catalan_oracle,
        },
        Identity {
            id: "truncated-oracle",
            statement: "C_n^k = sum of M_P over paths whose rightmost southeast corner has height <= k",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_nk(max, 0, 0),
            check: check_truncated_oracle,
        },
        Identity {
            id: "recursion-cnk-a",
            statement: "Ct_n^k = sum over j_1 <= ... <= j_k <= n, j_s >= s, of y_{j_1} y_{j_2-1} ... y_{j_k-k+1}",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_nk(max, 0, 0),
            check: check_cnk_a,
        },
        Identity {
            id: "jseq-bijection",
            statement: "M_P x_{n-k}^-1 = y_{j(P)} and P -> j(P) is a bijection onto the index sequences",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_nk(max, 0, 0),
            check: check_jseq_bijection,
        },
        Identity {
            id: "path-reflection",
            statement: "bar(M_P) = M_{s_n(P)}, s_n(x, y) = (n - y, n - x)",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_n(0)(max),
            check: check_reflection,
        },
        Identity {
            id: "jump-monomials",
            statement: "sum over P in P_n^k of sigma(M_P) = DD_n^k x1^(n-k)",
            bound: "n",
            default_max_n: 8,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_nk(max, 0, 0),
            check: check_jump_monomials,
        },
        Identity {
            id: "recursion-c-left",
            statement: "C_{n+1} = sum_{k=0}^n C_k x0^-1 T(C_{n-k})",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_recursion_c_left,
        },
        Identity {
            id: "recursion-c-right",
            statement: "C_{n+1} = sum_{k=0}^n T(C_k) x0^-1 C_{n-k}",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_recursion_c_right,
        },
        Identity {
            id: "c-series",
            statement: "C(t) = x0 + t C(t) x0^-1 T(C(t)) through degree n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_c_series,
        },
        Identity {
            id: "c-series-commutation",
            statement: "T(C(t)) x0^-1 C(t) = C(t) x0^-1 T(C(t)) through degree n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_c_series_commutation,
        },
        Identity {
            id: "recursion-t2-left",
            statement: "C_{n+1} = C_n x0^-1 x1 + sum_{k=1}^n C_k x1^-1 T^2(C_{n-k})",
            bound: "n",
            default_max_n: 9,
            hard_cap: 13,
            cells: |max| cells_n(1)(max),
            check: check_t2_left,
        },
        Identity {
            id: "recursion-t2-right",
            statement: "C_{n+1} = x1 x0^-1 C_n + sum_{k=0}^{n-1} T^2(C_k) x1^-1 C_{n-k}",
            bound: "n",
            default_max_n: 9,
            hard_cap: 13,
            cells: |max| cells_n(1)(max),
            check: check_t2_right,
        },
        Identity {
            id: "lemma-truncated",
            statement: "C_n^k = C_n^{k-1} + C_{n-1}^k x_{n-k-1}^-1 x_{n-k}, 1 <= k <= n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_nk(max, 1, 1),
            check: check_lemma_truncated,
        },
        Identity {
            id: "recursion-cnk-b",
            statement: "Ct_n^k = Ct_{n-1}^k + Ct_n^{k-1} y_{n+1-k}, on index-sequence sums",
            bound: "n",
            default_max_n: 9,
            hard_cap: ENUMERATION_LIMIT,
            cells: |max| cells_nk(max, 1, 1),
            check: check_cnk_b,
        },
        Identity {
            id: "recursion-cnk-c",
            statement: "Ct_{n+1}^k = sum_{i=0}^k Ct_i^i T(Ct_{n-i}^{k-i})",
            bound: "n",
            default_max_n: 9,
            hard_cap: 13,
            cells: |max| cells_nk(max, 0, 0),
            check: check_cnk_c,
        },
        Identity {
            id: "catalan-via-truncated",
            statement: "C_n = sum_{a+b <= n, a-b = d} C_{n-b}^a x_{n-a-b}^-1 bar(C_{n-a}^b), |d| <= n",
            bound: "n",
            default_max_n: 8,
            hard_cap: 12,
            cells: cells_nd,
            check: check_catalan_via_truncated,
        },
        Identity {
            id: "underline-builder",
            statement: "the positive recursion for underline C_n agrees with sigma(C_n)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_underline_builder,
        },
        Identity {
            id: "recursion-underline-left",
            statement: "sigma(C_{n+1}) = sum_k sigma(C_k) x0 sigma(C_{n-k}) x1",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_underline_left,
        },
        Identity {
            id: "recursion-underline-right",
            statement: "sigma(C_{n+1}) = sum_k x0 sigma(C_k) x1 sigma(C_{n-k})",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_underline_right,
        },
        Identity {
            id: "recursion-underline-t2-left",
            statement: "sigma(C_{n+1}) = sigma(C_n) x0 x1 + sum_{k=1}^n sigma(C_k) x1^-1 x0 sigma(C_{n-k}) x1^2",
            bound: "n",
            default_max_n: 9,
            hard_cap: 13,
            cells: |max| cells_n(1)(max),
            check: check_underline_t2_left,
        },
        Identity {
            id: "recursion-underline-t2-right",
            statement: "sigma(C_{n+1}) = x0 x1 sigma(C_n) + sum_{k=0}^{n-1} x0^2 sigma(C_k) x1 x0^-1 sigma(C_{n-k})",
            bound: "n",
            default_max_n: 9,
            hard_cap: 13,
            cells: |max| cells_n(1)(max),
            check: check_underline_t2_right,
        },
        Identity {
            id: "dd-recursion",
            statement: "DD_n^k = sigma(C_n^k) x1^(k-n) = DD_n^{k-1} x1 + DD_{n-1}^k x0, a positive polynomial of degree n+k",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_nk(max, 0, 0),
            check: check_dd,
        },
        Identity {
            id: "pi-specialization",
            statement: "pi(C_n) = Catalan(n) pi(x_n)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_n(0)(max),
            check: check_pi,
        },
        Identity {
            id: "sigma-shift",
            statement: "sigma(T(p)) = x0 sigma(p) x1 for integer combinations p of alternating words",
            bound: "largest generator index in the random words",
            default_max_n: 8,
            hard_cap: 64,
            cells: |max| {
                (0..SIGMA_SHIFT_CASES).map(|s| Params::new(&[("n", max as i64), ("seed", s)])).collect()
            },
            check: check_sigma_shift,
        },
        Identity {
            id: "eps-counts",
            statement: "eps(C_n) = Catalan(n), eps(C_n^k) = binom(n+k, k) - binom(n+k, k-1)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_nk(max, 0, 0),
            check: check_eps,
        },
        Identity {
            id: "classical-via-truncated",
            statement: "c_n = sum_{a+b <= n, a-b = d} c_{n-b}^a c_{n-a}^b with c = eps(C)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: cells_nd,
            check: check_classical_via_truncated,
        },
        Identity {
            id: "classical-first",
            statement: "c_{n+1}^k = sum_{j=0}^k c_j c_{n-j}^{k-j} with c = eps(C), 0 <= k <= n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_nk(max, 0, 0),
            check: check_classical_first,
        },
        Identity {
            id: "classical-alternating",
            statement: "sum_{j=0}^k (-1)^j c_{n+k-j}^j binom(n-j, k-j) = 0 with c = eps(C), 0 < k <= n",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_nk(max, 1, 1),
            check: check_classical_alternating,
        },
        Identity {
            id: "classical-multiplication",
            statement: "c_{m+n}^k = sum_{l=0}^n c_{m+l}^{k-l} binom(n, l), 0 <= k <= m+n, \
                        with c_a^b = binom(a+b, b) - binom(a+b, b-1) outside b <= a",
            bound: "m+n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_mnk(max, |m, n| m + n),
            check: check_classical_multiplication,
        },
        Identity {
            id: "mult-binom-first",
            statement: "B(m+n, k) = sum_{a+b=k} T^{n+b}(B(m, a)) B(n, b)",
            bound: "m+n",
            default_max_n: 10,
            hard_cap: 12,
            cells: |max| cells_mnk(max, |m, n| m + n + 1),
            check: check_mult_binom_first,
        },
        Identity {
            id: "mult-binom-second",
            statement: "B'(m+n, k) = sum_{a+b=k} T^b(B'(m, a)) T^{m-a}(B'(n, b))",
            bound: "m+n",
            default_max_n: 10,
            hard_cap: 12,
            cells: |max| cells_mnk(max, |m, n| m + n + 1),
            check: check_mult_binom_second,
        },
        Identity {
            id: "pascal-first",
            statement: "B(n+1, k) = B(n, k) + y_{n+k} B(n, k-1)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 12,
            cells: cells_pascal,
            check: check_pascal_first,
        },
        Identity {
            id: "pascal-second",
            statement: "B'(n+1, k) = T(B'(n, k)) + y_k B'(n, k-1)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 12,
            cells: cells_pascal,
            check: check_pascal_second,
        },
        Identity {
            id: "mult-truncated-catalan",
            statement: "Ct_{m+n}^k = sum_{l=0}^n Ct_{m+l}^{k-l} T^{m-k+l}(B'(n, l)), \
                        for k <= m+1 (where every T-power applied to a nonzero term is nonnegative)",
            bound: "m+n",
            default_max_n: 10,
            hard_cap: 12,
            cells: |max| cells_mnk(max, |m, n| (m + 1).min(m + n)),
            check: check_mult_truncated,
        },
        Identity {
            id: "alternating-recursion",
            statement: "sum_{j=0}^k (-1)^j Ct_{n+k-j}^j B(n-j, k-j) = 0, 0 < k <= n",
            bound: "n",
            default_max_n: 8,
            hard_cap: 10,
            cells: |max| cells_nk(max, 1, 1),
            check: check_alternating,
        },
        Identity {
            id: "alternating-companion",
            statement: "sum_{j=0}^k (-1)^j B(n+k-j, j) Ct_{n-j}^{k-j} = 0, 0 < k <= n",
            bound: "n",
            default_max_n: 8,
            hard_cap: 10,
            cells: |max| cells_nk(max, 1, 1),
            check: check_companion,
        },
        Identity {
            id: "cnk-via-binomials",
            statement: "Ct_n^k = sum_J (-1)^{k+1-|J|} B(n+j_{l-1}+j_l-k, j_l-j_{l-1}) ... B(n+j_0+j_1-k, j_1-j_0)",
            bound: "n",
            default_max_n: 7,
            hard_cap: 10,
            cells: |max| cells_nk(max, 0, 0),
            check: check_cnk_via_binomials,
        },
        Identity {
            id: "binom-via-cnk",
            statement: "B(n, k) = sum_J (-1)^{k+1-|J|} Ct_{n+j_{l-1}+j_l-k}^{j_l-j_{l-1}} ... Ct_{n+j_0+j_1-k}^{j_1-j_0}",
            bound: "n",
            default_max_n: 7,
            hard_cap: 10,
            cells: |max| cells_nk(max, 0, 0),
            check: check_binom_via_cnk,
        },
        Identity {
            id: "gauss",
            statement: "H_m^n = L_m U_m (m in {0, 1})",
            bound: "n",
            default_max_n: 5,
            hard_cap: 6,
            cells: cells_mn,
            check: check_gauss,
        },
        Identity {
            id: "inverse-l",
            statement: "L_m L^-_m = L^-_m L_m = I",
            bound: "n",
            default_max_n: 5,
            hard_cap: 6,
            cells: cells_mn,
            check: check_inverse_l,
        },
        Identity {
            id: "inverse-u",
            statement: "U_m U^-_m = U^-_m U_m = I",
            bound: "n",
            default_max_n: 5,
            hard_cap: 6,
            cells: cells_mn,
            check: check_inverse_u,
        },
        Identity {
            id: "hankel-inverse",
            statement: "H_m^n (U^-_m L^-_m) = (U^-_m L^-_m) H_m^n = I",
            bound: "n",
            default_max_n: 4,
            hard_cap: 5,
            cells: cells_mn,
            check: check_hankel_inverse,
        },
        Identity {
            id: "unitriangular-inverse",
            statement: "the inverse of L_m computed by forward substitution equals L^-_m",
            bound: "n",
            default_max_n: 4,
            hard_cap: 6,
            cells: cells_mn,
            check: check_unitriangular,
        },
        Identity {
            id: "quasidet",
            statement: "the bordered Hankel quasideterminant at C_{m+i+j} equals C_{m+i+j}^{j-i}",
            bound: "m+i+j",
            default_max_n: 8,
            hard_cap: 10,
            cells: |max| {
                let mut v = Vec::new();
                for m in 0..=1usize.min(max) {
                    for i in 0..=max {
                        for j in i..=max {
                            if m + i + j <= max {
                                v.push(Params::new(&[("m", m as i64), ("i", i as i64), ("j", j as i64)]));
                            }
                        }
                    }
                }
                v
            },
            check: check_quasidet,
        },
        Identity {
            id: "principal-quasiminor",
            statement: "|H_m^n|_{nn} = x_{m+2n}",
            bound: "n",
            default_max_n: 4,
            hard_cap: 5,
            cells: cells_mn,
            check: check_principal_quasiminor,
        },
        Identity {
            id: "det-gh",
            statement: "chi_q(Ct_n^k) = c_n^k(q, 1)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_nk(max, 0, 0),
            check: check_det_gh,
        },
        Identity {
            id: "gh-hankel-det",
            statement: "det(c_{i+j+m}(q, 1))_{0 <= i, j <= n} = q^(n(n+1)(4n-1+6m)/6)",
            bound: "n",
            default_max_n: 6,
            hard_cap: 9,
            cells: |max| cells_mn(max).into_iter().filter(|p| p.get("n") >= 1).collect(),
            check: check_gh_hankel_det,
        },
        Identity {
            id: "chi-binomials",
            statement: "chi_q(B(n, k)) = q^(k(k-1)) [n k]_q and chi_q(B'(n, k)) = q^(k(k-1)/2) [n k]_q",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_nk(max, 0, 0),
            check: check_chi_binomials,
        },
        Identity {
            id: "chi-shift",
            statement: "chi_q(T(p)) = q^k chi_q(p) for p = Ct_n^k and p = B(n, k)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 13,
            cells: |max| cells_nk(max, 0, 0),
            check: check_chi_shift,
        },
        Identity {
            id: "chi-eps",
            statement: "chi_q(C_n^k) at q = 1 equals eps(C_n^k)",
            bound: "n",
            default_max_n: 10,
            hard_cap: 14,
            cells: |max| cells_nk(max, 0, 0),
            check: check_chi_eps,
        },
    ];
    r.sort_by_key(|i| i.id);
    r
}

pub fn find(id: &str) -> Option<Identity> {
    registry().into_iter().find(|i| i.id == id)
}
