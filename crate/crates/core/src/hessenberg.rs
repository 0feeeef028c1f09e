//! Hessenberg functions and the permutation fixed points of `Hess(h)`.
//!
//! The principal nilpotent operator is taken with ones on the superdiagonal:
//! `N e_1 = 0` and `N e_m = e_{m-1}`. The fixed point attached to `w` is the
//! coordinate flag `<e_{w(1)}> ⊂ <e_{w(1)}, e_{w(2)}> ⊂ ...`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, HessenbergError, Result};

/// Largest `n` whose Hessenberg functions are enumerated by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;
/// Largest `n` for which all of `S_n` is scanned by default.
pub const DEFAULT_FIXED_POINT_CAP: usize = 7;

/// A weakly increasing `h: {1..n} -> {1..n}` with `h(i) >= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn parse(values: &[i64]) -> Result<Self, HessenbergError> {
        if values.is_empty() {
            return Err(HessenbergError::Empty);
        }
        let n = values.len();
        for (idx, &v) in values.iter().enumerate() {
            let position = idx + 1;
            if v < position as i64 {
                return Err(HessenbergError::NotAboveDiagonal { position, value: v });
            }
            if idx > 0 && v < values[idx - 1] {
                return Err(HessenbergError::NotWeaklyIncreasing {
                    position: idx,
                    previous: values[idx - 1],
                    value: v,
                });
            }
            if v > n as i64 {
                return Err(HessenbergError::OutOfRange {
                    position,
                    value: v,
                    n,
                });
            }
        }
        Ok(HessenbergFunction {
            values: values.iter().map(|&v| v as usize).collect(),
        })
    }

    /// `(1, 2, ..., n)`: `Hess(h)` is a single point.
    pub fn minimal(n: usize) -> Self {
        HessenbergFunction {
            values: (1..=n).collect(),
        }
    }

    /// `(n, ..., n)`: the full flag variety.
    pub fn full_flag(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    /// `(2, 3, ..., n, n)`: the Peterson variety.
    pub fn peterson(n: usize) -> Self {
        HessenbergFunction {
            values: (1..=n).map(|i| (i + 1).min(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `sum_j (h(j) - j)`.
    pub fn complex_dimension(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .map(|(idx, &v)| v - (idx + 1))
            .sum()
    }

    /// Pointwise `self <= other`.
    pub fn is_below(&self, other: &HessenbergFunction) -> bool {
        self.n() == other.n() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<i64>> for HessenbergFunction {
    type Error = HessenbergError;
    fn try_from(v: Vec<i64>) -> Result<Self, HessenbergError> {
        HessenbergFunction::parse(&v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// All Hessenberg functions on `{1..n}`, in lexicographic order.
pub fn enumerate_all(n: usize, cap: usize) -> Result<Vec<HessenbergFunction>> {
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "enumerating Hessenberg functions for n = {n} exceeds the cap {cap}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend_prefix(n, &mut current, &mut out);
    Ok(out)
}

fn extend_prefix(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
    let i = prefix.len() + 1;
    if i > n {
        out.push(HessenbergFunction {
            values: prefix.clone(),
        });
        return;
    }
    let lo = prefix.last().copied().unwrap_or(1).max(i);
    for v in lo..=n {
        prefix.push(v);
        extend_prefix(n, prefix, out);
        prefix.pop();
    }
}

/// A permutation in one-line notation: position `j` holds `w(j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::argument(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(j)`, 1-based.
    pub fn at(&self, j: usize) -> usize {
        self.one_line[j - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// The position `j` with `w(j) = value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.one_line
            .iter()
            .position(|&v| v == value)
            .map(|p| p + 1)
            .expect("value outside 1..n")
    }

    /// `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation {
            one_line: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Permutation {
                one_line: current.clone(),
            });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(pivot) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let succ = (pivot + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[pivot])
        .unwrap();
    v.swap(pivot, succ);
    v[pivot + 1..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.one_line
    }
}

/// Digits run together for `n <= 9` (`321`), comma-separated beyond.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        for (idx, v) in self.one_line.iter().enumerate() {
            if idx > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Per-position criterion: whenever `w(j) >= 2`, the value `w(j) - 1` sits
/// at a position `<= h(j)`.
pub fn is_fixed_point(w: &Permutation, h: &HessenbergFunction) -> bool {
    debug_assert_eq!(w.n(), h.n());
    (1..=w.n()).all(|j| {
        let v = w.at(j);
        v < 2 || w.position_of(v - 1) <= h.at(j)
    })
}

/// The permutations `w` whose coordinate flag lies in `Hess(h)`, sorted.
pub fn fixed_points(h: &HessenbergFunction, cap: usize) -> Result<Vec<Permutation>> {
    let n = h.n();
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "scanning S_{n} for fixed points exceeds the cap n <= {cap}"
        )));
    }
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| is_fixed_point(w, h))
        .collect())
}

/// Literal containment `N V_i ⊆ V_{h(i)}` for the coordinate flag of `w`,
/// computed with the matrix of `N` acting on coordinate vectors.
pub fn oracle_fixed_point_check(w: &Permutation, h: &HessenbergFunction) -> bool {
    let n = w.n();
    // nilpotent[r][c] = 1 iff N e_{c+1} has an e_{r+1} component
    let mut nilpotent = vec![vec![0i64; n]; n];
    for m in 2..=n {
        nilpotent[m - 2][m - 1] = 1;
    }
    let apply = |basis: usize| -> Vec<i64> { (0..n).map(|r| nilpotent[r][basis - 1]).collect() };

    (1..=n).all(|i| {
        let mut allowed = vec![false; n];
        for j in 1..=h.at(i) {
            allowed[w.at(j) - 1] = true;
        }
        (1..=i).all(|k| {
            apply(w.at(k))
                .iter()
                .enumerate()
                .all(|(r, &coef)| coef == 0 || allowed[r])
        })
    })
}
