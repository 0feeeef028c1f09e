use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::Error;

/// A variable of the ambient ring `Q[x_1, ..., x_n, t]`.
///
/// `X(k)` is 1-based. Internally variables are addressed by slot:
/// `x_k` lives in slot `k - 1` and `t` in slot `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    T,
}

impl Var {
    pub fn slot(self, n: usize) -> usize {
        match self {
            Var::X(k) => k - 1,
            Var::T => n,
        }
    }

    pub fn from_slot(slot: usize, n: usize) -> Var {
        if slot == n {
            Var::T
        } else {
            Var::X(slot + 1)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(k) => write!(f, "x_{k}"),
            Var::T => f.write_str("t"),
        }
    }
}

impl std::str::FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "t" {
            return Ok(Var::T);
        }
        s.strip_prefix("x_")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k > 0)
            .map(Var::X)
            .ok_or_else(|| Error::Parse(format!("not a variable name: {s:?}")))
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) type Exponents = SmallVec<[u16; 12]>;

/// Dense exponent vector of length `n + 1`; the last slot is `t`.
///
/// `Ord` is the canonical display order: graded reverse lexicographic with
/// `x_1 > x_2 > ... > x_n > t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n + 1),
        }
    }

    pub fn var(n: usize, v: Var) -> Self {
        let mut m = Monomial::one(n);
        m.exps[v.slot(n)] = 1;
        m
    }

    /// Builds `x^xs * t^t`. `xs.len()` fixes the ambient `n`.
    pub fn new(xs: &[u16], t: u16) -> Self {
        let mut exps: Exponents = xs.iter().copied().collect();
        exps.push(t);
        Monomial { exps }
    }

    pub(crate) fn from_slots(exps: Exponents) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    /// Ambient `n` (number of `x` variables).
    pub fn n(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn x_exponents(&self) -> &[u16] {
        &self.exps[..self.n()]
    }

    pub fn t_exponent(&self) -> u16 {
        self.exps[self.n()]
    }

    /// All `n + 1` exponents, `t` last.
    pub fn slots(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps[v.slot(self.n())]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison with the last slot weakest.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_degrevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let n = self.n();
        let mut first = true;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", Var::from_slot(slot, n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
