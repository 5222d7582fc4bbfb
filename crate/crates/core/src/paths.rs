//! Catalan lattice paths, their corner monomials, and the equivalent
//! nondecreasing index sequences.
//!
//! Everything here enumerates explicitly and is meant as an independent
//! check on the recursive constructions in [`crate::catalan`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{y_unchecked, Word};

/// Largest `n` for which enumeration is allowed.
pub const ENUMERATION_LIMIT: usize = 14;

fn guard(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        Err(Error::EnumerationGuard { n, max: ENUMERATION_LIMIT })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

/// A monotone path from `(0,0)` to `(n,n)` that never goes above the
/// diagonal, i.e. every point `(x,y)` has content `x - y >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    n: usize,
    steps: Vec<Step>,
}

/// A corner of a path and whether it is southeast (`+1`) or northwest (`-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner {
    pub x: usize,
    pub y: usize,
    pub southeast: bool,
}

impl Corner {
    pub fn content(&self) -> usize {
        self.x - self.y
    }
}

impl LatticePath {
    /// Validates a step sequence as a Catalan path.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.len() % 2 != 0 {
            return Err(Error::InvalidArgument("a path needs an even number of steps".into()));
        }
        let n = steps.len() / 2;
        let (mut x, mut y) = (0usize, 0usize);
        for s in &steps {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
            }
            if y > x {
                return Err(Error::InvalidArgument("path crosses above the diagonal".into()));
            }
        }
        if x != n || y != n {
            return Err(Error::InvalidArgument("path does not end at (n,n)".into()));
        }
        Ok(LatticePath { n, steps })
    }

    /// `E^n N^n`.
    pub fn hook(n: usize) -> Self {
        let mut steps = vec![Step::East; n];
        steps.extend(std::iter::repeat(Step::North).take(n));
        LatticePath { n, steps }
    }

    /// `(EN)^n`.
    pub fn staircase(n: usize) -> Self {
        LatticePath { n, steps: (0..2 * n).map(|i| if i % 2 == 0 { Step::East } else { Step::North }).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The `2n + 1` lattice points visited, in order.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Corners in path order. The path is read as if entered by an East
    /// step and left by a North step, which makes the empty path of size 0
    /// have the single southeast corner `(0,0)`. For `n >= 1` this changes
    /// nothing, since such a path starts East and ends North.
    pub fn corners(&self) -> Vec<Corner> {
        let pts = self.points();
        let m = self.steps.len();
        let mut out = Vec::new();
        for (t, &(x, y)) in pts.iter().enumerate() {
            let before = if t == 0 { Step::East } else { self.steps[t - 1] };
            let after = if t == m { Step::North } else { self.steps[t] };
            match (before, after) {
                (Step::East, Step::North) => out.push(Corner { x, y, southeast: true }),
                (Step::North, Step::East) => out.push(Corner { x, y, southeast: false }),
                _ => {}
            }
        }
        out
    }

    /// Height of the rightmost southeast corner (which always lies on `x = n`).
    pub fn last_southeast_height(&self) -> usize {
        let c = self
            .corners()
            .into_iter()
            .rev()
            .find(|c| c.southeast)
            .expect("every path has a southeast corner");
        debug_assert_eq!(c.x, self.n);
        c.y
    }

    /// Ordered product over corners of `x_{content}^{+1}` (southeast) or
    /// `x_{content}^{-1}` (northwest).
    pub fn monomial(&self) -> Word {
        Word::from_pairs(
            self.corners()
                .into_iter()
                .map(|c| (c.content() as u32, if c.southeast { 1 } else { -1 })),
        )
    }

    /// Image of the monomial under `x_k -> x0^k x1^k`; a positive word in
    /// `x0, x1` whose exponents are the jump lengths of the path.
    pub fn jump_monomial(&self) -> Word {
        self.monomial().substitute(crate::poly::sigma_gen)
    }

    /// The reflection `(x, y) -> (n - y, n - x)`: steps reversed with East
    /// and North exchanged.
    pub fn reflect(&self) -> LatticePath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::East => Step::North,
                Step::North => Step::East,
            })
            .collect();
        LatticePath { n: self.n, steps }
    }

    /// `j_s` = smallest x-coordinate among points at height `s`, for `s = 1..=k`.
    pub fn jseq(&self, k: usize) -> JSeq {
        let pts = self.points();
        let entries = (1..=k)
            .map(|s| pts.iter().filter(|p| p.1 == s).map(|p| p.0).min().expect("path reaches every height"))
            .collect();
        JSeq { n: self.n, entries }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'E' => Ok(Step::East),
                'N' => Ok(Step::North),
                _ => Err(Error::Parse { pos: i, msg: format!("unexpected step {c:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

/// All Catalan paths of size `n`, or only those whose rightmost southeast
/// corner has height at most `k`.
pub fn enumerate_paths(n: usize, k: Option<usize>) -> Result<Vec<LatticePath>> {
    guard(n)?;
    if let Some(k) = k {
        if k > n {
            return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
        }
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    fn rec(n: usize, x: usize, y: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if x == n && y == n {
            out.push(LatticePath { n, steps: steps.clone() });
            return;
        }
        if x < n {
            steps.push(Step::East);
            rec(n, x + 1, y, steps, out);
            steps.pop();
        }
        if y < x {
            steps.push(Step::North);
            rec(n, x, y + 1, steps, out);
            steps.pop();
        }
    }
    rec(n, 0, 0, &mut steps, &mut out);
    if let Some(k) = k {
        out.retain(|p| p.last_southeast_height() <= k);
    }
    Ok(out)
}

/// A sequence `j_1 <= ... <= j_k <= n` with `j_s >= s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JSeq {
    pub n: usize,
    pub entries: Vec<usize>,
}

impl JSeq {
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// `y_{j_1} y_{j_2 - 1} ... y_{j_k - k + 1}`.
    pub fn word(&self) -> Word {
        let mut w = Word::one();
        for (s, &j) in self.entries.iter().enumerate() {
            w.mul_assign(&y_unchecked((j - s) as u32));
        }
        w
    }
}

pub fn enumerate_jseq(n: usize, k: usize) -> Result<Vec<JSeq>> {
    guard(n)?;
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<JSeq>) {
        let s = cur.len() + 1;
        if s > k {
            out.push(JSeq { n, entries: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(s);
        for j in lo..=n {
            cur.push(j);
            rec(n, k, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut cur, &mut out);
    Ok(out)
}
