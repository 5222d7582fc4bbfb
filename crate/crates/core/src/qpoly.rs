//! Laurent polynomials in one commuting variable `q`, the specialization
//! `x_k -> q^(k(k-1)/2)`, and the `(q,1)`-Catalan family it lands on.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::NcPoly;

/// An element of `Z[q, q^-1]`: exponent -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i64, Int>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, Int::ONE)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: Int) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPoly { coeffs }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QPoly::monomial(e, Int::ONE)
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_pairs<I: IntoIterator<Item = (i64, Int)>>(pairs: I) -> Self {
        let mut coeffs: BTreeMap<i64, Int> = BTreeMap::new();
        for (e, c) in pairs {
            *coeffs.entry(e).or_default() += &c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        QPoly { coeffs }
    }

    /// Dense ordinary polynomial `c0 + c1 q + ...`.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        QPoly::from_pairs(cs.iter().enumerate().map(|(e, &c)| (e as i64, Int::from(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Int {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Int)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// If this is `c * q^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i64, &Int)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        let mut s = Int::ZERO;
        for c in self.coeffs.values() {
            s += c;
        }
        s.to_bigint()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Int) -> QPoly {
        QPoly::from_pairs(self.coeffs.iter().map(|(e, x)| (*e, x * c)))
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        QPoly::from_pairs(self.iter().chain(other.iter()).map(|(e, c)| (e, c.clone())))
    }

    pub fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut acc: BTreeMap<i64, Int> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                *acc.entry(ea + eb).or_default() += &(ca * cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QPoly { coeffs: acc }
    }

    /// `self / divisor`, which must be exact in `Z[q, q^-1]`.
    ///
    /// Both sides are written as `q^a * f` with `f(0) != 0`; the division is
    /// exact iff the ordinary polynomial division of the `f` parts is.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (Some(lb), Some(hb)) = (divisor.low_degree(), divisor.high_degree()) else {
            return Err(Error::NotDivisible("division by zero".into()));
        };
        let Some(la) = self.low_degree() else { return Ok(QPoly::zero()) };
        let mut rem = self.shift(-la);
        let den = divisor.shift(-lb);
        let dlen = hb - lb;
        let lead = den.coeff(dlen);
        let mut quot: Vec<(i64, Int)> = Vec::new();
        while let Some(top) = rem.high_degree() {
            let shift = top - dlen;
            if shift < 0 {
                return Err(Error::NotDivisible(format!("{self} is not divisible by {divisor}")));
            }
            let Some(c) = rem.coeff(top).checked_div_exact(&lead) else {
                return Err(Error::NotDivisible(format!("{self} is not divisible by {divisor}")));
            };
            rem = rem.sub(&den.shift(shift).scale(&c));
            quot.push((shift, c));
        }
        Ok(QPoly::from_pairs(quot).shift(la - lb))
    }

    /// `{"<exponent>": <coefficient>, ...}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (e, c) in &self.coeffs {
            let v = match c.to_i64() {
                Some(x) => Value::from(x),
                None => Value::Number(c.to_string().parse().expect("integer literal")),
            };
            m.insert(e.to_string(), v);
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<QPoly> {
        let bad = |m: &str| Error::Parse { pos: 0, msg: format!("json: {m}") };
        let obj = v.as_object().ok_or_else(|| bad("q-polynomial must be an object"))?;
        let mut pairs = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            let e: i64 = k.parse().map_err(|_| bad("exponent keys must be integers"))?;
            let Value::Number(n) = c else { return Err(bad("coefficients must be integers")) };
            let c: Int = n.to_string().parse().map_err(|_| bad("coefficients must be integers"))?;
            pairs.push((e, c));
        }
        Ok(QPoly::from_pairs(pairs))
    }

    pub fn to_latex(&self) -> String {
        self.render(|e| match e {
            1 => "q".to_string(),
            _ => format!("q^{{{e}}}"),
        }, "")
    }

    fn render(&self, qpow: impl Fn(i64) -> String, mul: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if *e == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&qpow(*e));
            } else {
                s.push_str(&format!("{a}{mul}{}", qpow(*e)));
            }
        }
        s
    }
}

impl fmt::Display for QPoly {
    /// `1 + 2*q + q^3`, ascending exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(
            |e| match e {
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            },
            "*",
        ))
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &'a QPoly) -> QPoly {
        QPoly::add(self, rhs)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &'a QPoly) -> QPoly {
        QPoly::sub(self, rhs)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &'a QPoly) -> QPoly {
        QPoly::mul(self, rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::neg(self)
    }
}

/// Exponent of `chi_q(x_k)`.
fn chi_exponent(k: u32) -> i64 {
    let k = k as i64;
    k * (k - 1) / 2
}

/// The ring homomorphism `Z F -> Z[q, q^-1]`, `x_k -> q^(k(k-1)/2)`.
pub fn chi_q(p: &NcPoly) -> QPoly {
    QPoly::from_pairs(p.iter().map(|(w, c)| {
        let e: i64 = w.letters().iter().map(|l| l.exp * chi_exponent(l.index)).sum();
        (e, c.clone())
    }))
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_int(k: usize) -> QPoly {
    QPoly::from_pairs((0..k as i64).map(|e| (e, Int::ONE)))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| acc.mul(&q_int(i)))
}

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    q_factorial(n)
        .exact_div(&q_factorial(k).mul(&q_factorial(n - k)))
        .expect("Gaussian binomials are polynomials")
}

/// `c(n, k)(q, 1)` from
/// `c(n, 0) = 1`, `c(n, k) = sum_{r=1}^k [r+n-k choose r]_q q^(r(r-1)/2) c(k-1, k-r)`.
/// Zero when `k > n`.
pub fn gh_cnk(n: usize, k: usize) -> QPoly {
    let mut memo = HashMap::new();
    gh_rec(n, k, &mut memo)
}

fn gh_rec(n: usize, k: usize, memo: &mut HashMap<(usize, usize), QPoly>) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    if k == 0 {
        return QPoly::one();
    }
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let mut acc = QPoly::zero();
    for r in 1..=k {
        let inner = gh_rec(k - 1, k - r, memo);
        let term = q_binomial(r + n - k, r).mul(&inner).shift((r * (r - 1) / 2) as i64);
        acc = acc.add(&term);
    }
    memo.insert((n, k), acc.clone());
    acc
}

/// Determinant over `Z[q, q^-1]`.
///
/// Each row is first multiplied by `q^-(its lowest exponent)` so every entry
/// is an ordinary polynomial; fraction-free Bareiss elimination then runs with
/// exact divisions, and the removed powers are put back at the end.
pub fn determinant(m: &[Vec<QPoly>]) -> Result<QPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("determinant needs a square matrix".into()));
    }
    if n == 0 {
        return Ok(QPoly::one());
    }
    let mut a: Vec<Vec<QPoly>> = Vec::with_capacity(n);
    let mut cleared = 0i64;
    for row in m {
        let low = row.iter().filter_map(QPoly::low_degree).min().unwrap_or(0);
        cleared += low;
        a.push(row.iter().map(|x| x.shift(-low)).collect());
    }
    let mut negate = false;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(QPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = QPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].shift(cleared);
    Ok(if negate { det.neg() } else { det })
}

/// `det(c(i+j+m, i+j+m)(q, 1))_{0 <= i, j <= n}`.
pub fn q_hankel_det(m: usize, n: usize) -> Result<QPoly> {
    let cat: Vec<QPoly> = (0..=2 * n + m).map(|r| gh_cnk(r, r)).collect();
    let rows: Vec<Vec<QPoly>> = (0..=n).map(|i| (0..=n).map(|j| cat[i + j + m].clone()).collect()).collect();
    determinant(&rows)
}

/// The closed-form exponent `n(n+1)(4n-1+6m)/6`.
pub fn q_hankel_det_exponent(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    n * (n + 1) * (4 * n - 1 + 6 * m) / 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{catalan, truncated_tilde};

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(qp(&[1, 1]).mul(&qp(&[1, 1])), qp(&[1, 2, 1]));
        assert_eq!(qp(&[-1, 0, 1]).exact_div(&qp(&[-1, 1])).unwrap(), qp(&[1, 1]));
        assert_eq!(QPoly::q_pow(-1).mul(&QPoly::q_pow(1)), QPoly::one());
        assert!(qp(&[1, 0, 1]).exact_div(&qp(&[1, 1])).is_err());
        assert!(qp(&[1]).exact_div(&QPoly::zero()).is_err());
        assert!(qp(&[2]).exact_div(&qp(&[3])).is_err());
        // Laurent: (q^-2 + q^-1) / (q^3 + q^4) = q^-5
        let a = QPoly::from_pairs([(-2, Int::ONE), (-1, Int::ONE)]);
        let b = QPoly::from_pairs([(3, Int::ONE), (4, Int::ONE)]);
        assert_eq!(a.exact_div(&b).unwrap(), QPoly::q_pow(-5));
        let x = QPoly::from_pairs([(-3, Int::from(2)), (1, Int::from(-7)), (4, Int::ONE)]);
        let y = QPoly::from_pairs([(-1, Int::from(3)), (0, Int::ONE), (2, Int::from(5))]);
        assert_eq!(x.mul(&y).exact_div(&y).unwrap(), x);
    }

    #[test]
    fn text_and_json() {
        assert_eq!(qp(&[1, 2, 0, 1]).to_string(), "1 + 2*q + q^3");
        assert_eq!(QPoly::from_pairs([(-1, Int::from(-3)), (2, Int::ONE)]).to_string(), "-3*q^-1 + q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        let p = qp(&[1, 2, 0, 1]);
        assert_eq!(p.to_json().to_string(), r#"{"0":1,"1":2,"3":1}"#);
        assert_eq!(QPoly::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(qp(&[0, 2, 1]).to_latex(), "2q + q^{2}");
    }

    #[test]
    fn q_integers_and_binomials() {
        assert_eq!(q_int(3), qp(&[1, 1, 1]));
        assert_eq!(q_binomial(2, 1), qp(&[1, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
    }

    /// q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k].
    fn q_binomial_pascal(n: usize, k: usize) -> QPoly {
        if k > n {
            return QPoly::zero();
        }
        if k == 0 || k == n {
            return QPoly::one();
        }
        q_binomial_pascal(n - 1, k - 1).add(&q_binomial_pascal(n - 1, k).shift(k as i64))
    }

    #[test]
    fn q_binomial_against_pascal() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial_pascal(n, k));
                assert!(b.all_nonnegative());
                if k <= n {
                    assert_eq!(b, q_binomial(n, n - k));
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_q(&NcPoly::one()), QPoly::one());
        assert_eq!(chi_q(&catalan(3)), qp(&[1, 2, 1, 1]));
        // Ct(n,1) = y_1 + ... + y_n and chi(y_i) = q^(i-1).
        for n in 1..8 {
            assert_eq!(chi_q(&truncated_tilde(n, 1)), q_int(n));
        }
    }

    #[test]
    fn garsia_haiman_small() {
        for n in 0..6 {
            assert_eq!(gh_cnk(n, 0), QPoly::one());
        }
        assert_eq!(gh_cnk(2, 2), qp(&[1, 1]));
        assert_eq!(gh_cnk(3, 3), qp(&[1, 2, 1, 1]));
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(gh_cnk(n, k), chi_q(&truncated_tilde(n, k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn determinants() {
        let m = vec![vec![qp(&[1]), qp(&[1])], vec![qp(&[1]), qp(&[1, 1])]];
        assert_eq!(determinant(&m).unwrap(), QPoly::q_pow(1));
        let m = vec![vec![qp(&[1]), qp(&[1, 1])], vec![qp(&[1, 1]), gh_cnk(3, 3)]];
        assert_eq!(determinant(&m).unwrap(), QPoly::q_pow(3));
        assert_eq!(q_hankel_det(0, 2).unwrap(), QPoly::q_pow(7));
        // Needs a row swap, and has a Laurent row.
        let m = vec![
            vec![QPoly::zero(), qp(&[1]), qp(&[0, 1])],
            vec![QPoly::q_pow(-1), qp(&[2]), qp(&[1])],
            vec![qp(&[1]), qp(&[0, 0, 1]), qp(&[3])],
        ];
        // Cofactor expansion by hand: 0*(..) - 1*(3q^-1 - 1) + q*(q^-1*q^2 - 2)
        let expect = QPoly::from_pairs([(-1, Int::from(-3)), (0, Int::ONE), (1, Int::from(-2)), (2, Int::ONE)]);
        assert_eq!(determinant(&m).unwrap(), expect);
        let singular = vec![vec![qp(&[1, 1]), qp(&[2, 2])], vec![qp(&[1]), qp(&[2])]];
        assert!(determinant(&singular).unwrap().is_zero());
        assert!(determinant(&[vec![qp(&[1])], vec![]]).is_err());
    }

    #[test]
    fn closed_form_exponents() {
        assert_eq!(q_hankel_det_exponent(0, 1), 1);
        assert_eq!(q_hankel_det_exponent(1, 1), 3);
        assert_eq!(q_hankel_det_exponent(0, 2), 7);
    }
}
