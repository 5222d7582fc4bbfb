//! Dense matrices over the group ring and the Hankel matrices of Catalan
//! numbers.
//!
//! For `m` in `{0, 1}` the Hankel matrix `H(m, n)` with entries
//! `C(m+i+j)`, `0 <= i, j <= n`, factors as `L * U` with
//!
//! * `L[j][i] = Ct(i+j+m, j-i)` (lower unitriangular),
//! * `U[i][j] = bar(C(i+j+m, j-i))` (upper triangular, diagonal `x_{2i+m}`),
//!
//! and the inverses of both factors have explicit entries in terms of the
//! first-kind binomials `B`.

use std::fmt;

use serde_json::Value;

use crate::binomial::binom_first;
use crate::catalan::{catalan, truncated, truncated_tilde};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::NcPoly;
use crate::text::parse_poly;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NcPoly>,
}

impl NcMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NcMatrix { rows, cols, entries: vec![NcPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        NcMatrix::from_fn(n, n, |i, j| if i == j { NcPoly::one() } else { NcPoly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> NcPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        NcMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<NcPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(NcMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NcPoly) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    /// Leading `(n+1) x (n+1)` block.
    pub fn truncate(&self, n: usize) -> NcMatrix {
        let r = (n + 1).min(self.rows);
        let c = (n + 1).min(self.cols);
        NcMatrix::from_fn(r, c, |i, j| self.get(i, j).clone())
    }

    pub fn mul(&self, other: &NcMatrix) -> Result<NcMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(NcMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero() && !other.get(k, j).is_zero())
                .map(|k| self.get(i, k).mul(other.get(k, j)))
                .sum()
        }))
    }

    pub fn to_rows(&self) -> Vec<Vec<NcPoly>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// Row-major array of rows of canonical polynomial strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array((0..self.cols).map(|j| Value::String(self.get(i, j).to_string())).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<NcMatrix> {
        let bad = || Error::Parse { pos: 0, msg: "json: matrix must be an array of arrays of strings".into() };
        let rows = v.as_array().ok_or_else(bad)?;
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let cells = r.as_array().ok_or_else(bad)?;
            out.push(
                cells
                    .iter()
                    .map(|c| c.as_str().ok_or_else(bad).and_then(parse_poly))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        NcMatrix::from_rows(out)
    }

    pub fn to_latex(&self) -> String {
        let body: Vec<String> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_latex()).collect::<Vec<_>>().join(" & "))
            .collect();
        format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", body.join(" \\\\ "))
    }
}

impl fmt::Display for NcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

pub fn mat_identity(n: usize) -> NcMatrix {
    NcMatrix::identity(n)
}

pub fn mat_mul(a: &NcMatrix, b: &NcMatrix) -> Result<NcMatrix> {
    a.mul(b)
}

/// `H(m, n)`: the `(n+1) x (n+1)` matrix with entries `C(m+i+j)`.
pub fn hankel(m: usize, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n + 1, n + 1, |i, j| (*catalan(m + i + j)).clone())
}

/// Lower unitriangular factor with `L[j][i] = Ct(i+j+m, j-i)`.
pub fn gauss_l(m: usize, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n + 1, n + 1, |j, i| {
        if i <= j {
            (*truncated_tilde(i + j + m, j - i)).clone()
        } else {
            NcPoly::zero()
        }
    })
}

/// Upper triangular factor with `U[i][j] = bar(C(i+j+m, j-i))`.
pub fn gauss_u(m: usize, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n + 1, n + 1, |i, j| if i <= j { truncated(i + j + m, j - i).bar() } else { NcPoly::zero() })
}

/// `L^-[j][i] = (-1)^(i+j) B(i+j+m, j-i)`.
pub fn inv_l(m: usize, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n + 1, n + 1, |j, i| {
        if i <= j {
            binom_first(i + j + m, j - i).scale(&Int::sign_pow(i + j))
        } else {
            NcPoly::zero()
        }
    })
}

/// `U^-[i][j] = (-1)^(i+j) bar(B(i+j+m, j-i)) x_{2j+m}^-1`.
pub fn inv_u(m: usize, n: usize) -> NcMatrix {
    NcMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i <= j {
            binom_first(i + j + m, j - i)
                .bar()
                .mul_word_right(&Word::power((2 * j + m) as u32, -1))
                .scale(&Int::sign_pow(i + j))
        } else {
            NcPoly::zero()
        }
    })
}

/// `H(m, n)^-1 = U^- * L^-`.
pub fn hankel_inverse(m: usize, n: usize) -> NcMatrix {
    inv_u(m, n).mul(&inv_l(m, n)).expect("square factors of equal size")
}

/// Inverse of a lower unitriangular matrix over any ring.
///
/// Entry `(j, i)` equals the signed sum over descending chains
/// `j = i_1 > i_2 > ... > i_r = i` of `(-1)^(r-1) a[i_1][i_2] ... a[i_{r-1}][i_r]`.
/// Grouping chains by their second element gives the forward substitution
/// `D[j][i] = -sum_{i <= l < j} a[j][l] D[l][i]`, which is what is computed.
pub fn invert_unitriangular(a: &NcMatrix) -> Result<NcMatrix> {
    if a.rows != a.cols {
        return Err(Error::NotUnitriangular(format!("{}x{} is not square", a.rows, a.cols)));
    }
    let n = a.rows;
    for i in 0..n {
        if !a.get(i, i).is_one() {
            return Err(Error::NotUnitriangular(format!("diagonal entry {i} is not 1")));
        }
        for j in i + 1..n {
            if !a.get(i, j).is_zero() {
                return Err(Error::NotUnitriangular(format!("entry ({i},{j}) above the diagonal is nonzero")));
            }
        }
    }
    let mut d = NcMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            let s: NcPoly = (i..j)
                .filter(|&l| !a.get(j, l).is_zero() && !d.get(l, i).is_zero())
                .map(|l| a.get(j, l).mul(d.get(l, i)))
                .sum();
            d.set(j, i, s.neg());
        }
    }
    Ok(d)
}

/// Quasideterminant of the bordered matrix whose first `i` rows are rows
/// `0..i` of `H(m, i)` and whose last row is row `j` of the Hankel matrix
/// (columns `0..=i`), at the boxed entry `C(m+i+j)`:
///
/// `C(m+i+j) - (C(m+j), ..., C(m+j+i-1)) * H(m, i-1)^-1 * (C(m+i), ..., C(m+2i-1))^T`.
///
/// Equals `C(m+i+j, j-i)`; for `i = j = n` it is `x_{m+2n}`.
pub fn quasidet_bordered(m: usize, i: usize, j: usize) -> Result<NcPoly> {
    if m > 1 {
        return Err(Error::InvalidArgument(format!("Hankel inverses are only available for m in {{0,1}}, got {m}")));
    }
    if i > j {
        return Err(Error::InvalidArgument(format!("need i <= j, got i = {i}, j = {j}")));
    }
    let boxed = (*catalan(m + i + j)).clone();
    if i == 0 {
        return Ok(boxed);
    }
    let inv = hankel_inverse(m, i - 1);
    let row = NcMatrix::from_fn(1, i, |_, c| (*catalan(m + j + c)).clone());
    let col = NcMatrix::from_fn(i, 1, |r, _| (*catalan(m + i + r)).clone());
    let corr = row.mul(&inv)?.mul(&col)?;
    Ok(boxed.sub(corr.get(0, 0)))
}
