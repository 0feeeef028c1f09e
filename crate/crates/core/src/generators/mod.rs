//! The polynomials `p_i`, `f_{i,j}`, their `t = 0` specializations and the
//! presented ideals `I(h)` and its ordinary counterpart.
//!
//! Two independent routes build `f_{i,j}`: the column recursion
//! `f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}` ([`GeneratorMatrix`])
//! and the diagonal sums of the `Δ` table ([`DeltaTable`]). All entries live in
//! the full ambient ring with `n` variables plus `t`.

mod latex;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergFunction;
use crate::polyring::{Assignment, Polynomial, Var};

pub use latex::{factored_form, polynomial_latex, Factored};

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if j < 1 || j > i || i > n {
        return Err(Error::argument(format!(
            "need n >= i >= j >= 1, got i = {i}, j = {j}, n = {n}"
        )));
    }
    Ok(())
}

/// `x_j - x_i - t`, the factor introduced at each step of the recursion.
pub(crate) fn step_factor(j: usize, i: usize, n: usize) -> Polynomial {
    &(&Polynomial::x(n, j) - &Polynomial::x(n, i)) - &Polynomial::t(n)
}

/// `p_i = sum_{k <= i} (x_k - k t)`, with `p_0 = 0`.
pub fn p(i: usize, n: usize) -> Result<Polynomial> {
    if i > n {
        return Err(Error::argument(format!("p_{i} needs i <= n = {n}")));
    }
    let t = Polynomial::t(n);
    Ok((1..=i).fold(Polynomial::zero(n), |acc, k| {
        let term = &Polynomial::x(n, k) - &(&Polynomial::integer(n, k as i64) * &t);
        &acc + &term
    }))
}

/// Lower-triangular table of `f_{i,j}` filled by the column recursion.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    n: usize,
    // rows[i - 1][j - 1] = f_{i,j}
    rows: Vec<Vec<Polynomial>>,
}

impl GeneratorMatrix {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("n must be at least 1"));
        }
        let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row = Vec::with_capacity(i);
            for j in 1..=i {
                let entry = if i == j {
                    p(j, n)?
                } else {
                    let prev = &rows[i - 2];
                    let left = if j == 1 {
                        Polynomial::zero(n)
                    } else {
                        prev[j - 2].clone()
                    };
                    &left + &(&step_factor(j, i, n) * &prev[j - 1])
                };
                row.push(entry);
            }
            rows.push(row);
        }
        Ok(GeneratorMatrix { n, rows })
    }

    /// Process-wide memo: one immutable table per `n`.
    pub fn shared(n: usize) -> Result<Arc<GeneratorMatrix>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GeneratorMatrix>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(m) = cache.lock().unwrap().get(&n) {
            return Ok(Arc::clone(m));
        }
        let built = Arc::new(GeneratorMatrix::new(n)?);
        let mut guard = cache.lock().unwrap();
        Ok(Arc::clone(guard.entry(n).or_insert(built)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_{i,j}`; column `j = 0` is the zero polynomial.
    pub fn get(&self, i: usize, j: usize) -> Result<Polynomial> {
        if j == 0 && i <= self.n {
            return Ok(Polynomial::zero(self.n));
        }
        check_pair(i, j, self.n)?;
        Ok(self.rows[i - 1][j - 1].clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i - 1][j - 1]
    }

    /// `(i, j, f_{i,j})` row by row.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, f)| (r + 1, c + 1, f)))
    }
}

/// `f_{i,j}` via the recursion.
pub fn f_inductive(i: usize, j: usize, n: usize) -> Result<Polynomial> {
    if j == 0 && i <= n {
        return Ok(Polynomial::zero(n));
    }
    check_pair(i, j, n)?;
    GeneratorMatrix::shared(n)?.get(i, j)
}

/// The `Δ_{i,j}` table, filled one lower diagonal at a time.
#[derive(Debug, Clone)]
pub struct DeltaTable {
    n: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl DeltaTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("n must be at least 1"));
        }
        let mut rows: Vec<Vec<Polynomial>> =
            (1..=n).map(|i| vec![Polynomial::zero(n); i]).collect();
        for i in 1..=n {
            rows[i - 1][i - 1] =
                &Polynomial::x(n, i) - &(&Polynomial::integer(n, i as i64) * &Polynomial::t(n));
        }
        for k in 1..n {
            for j in 1..=n - k {
                let i = j + k;
                // sum of diagonal k - 1 from column 1 up to column j
                let above = (1..=j).fold(Polynomial::zero(n), |acc, l| {
                    &acc + &rows[i - j + l - 2][l - 1]
                });
                rows[i - 1][j - 1] = &above * &step_factor(j, i, n);
            }
        }
        Ok(DeltaTable { n, rows })
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Polynomial> {
        check_pair(i, j, self.n)?;
        Ok(&self.rows[i - 1][j - 1])
    }

    /// `f_{i,j} = sum_{k=1}^{j} Δ_{i-j+k, k}`.
    pub fn f(&self, i: usize, j: usize) -> Result<Polynomial> {
        check_pair(i, j, self.n)?;
        Ok((1..=j).fold(Polynomial::zero(self.n), |acc, k| {
            &acc + &self.rows[i - j + k - 1][k - 1]
        }))
    }
}

pub fn delta(i: usize, j: usize, n: usize) -> Result<Polynomial> {
    check_pair(i, j, n)?;
    DeltaTable::new(n)?.get(i, j).cloned()
}

/// `f_{i,j}` via diagonal sums of `Δ`.
pub fn f_closed(i: usize, j: usize, n: usize) -> Result<Polynomial> {
    check_pair(i, j, n)?;
    DeltaTable::new(n)?.f(i, j)
}

/// `sum_{k=1}^{j} x_k prod_{l=j+1}^{i} (x_k - x_l)`; the product is 1 when `i = j`.
pub fn f_check(i: usize, j: usize, n: usize) -> Result<Polynomial> {
    check_pair(i, j, n)?;
    Ok((1..=j).fold(Polynomial::zero(n), |acc, k| {
        let prod = (j + 1..=i).fold(Polynomial::x(n, k), |pr, l| {
            &pr * &(&Polynomial::x(n, k) - &Polynomial::x(n, l))
        });
        &acc + &prod
    }))
}

/// `q_r = sum_{k=1}^{n+1-r} x_k prod_{l=n+2-r}^{n} (x_k - x_l)`.
pub fn q(r: usize, n: usize) -> Result<Polynomial> {
    if r < 1 || r > n {
        return Err(Error::argument(format!("q_{r} needs 1 <= r <= n = {n}")));
    }
    Ok((1..=n + 1 - r).fold(Polynomial::zero(n), |acc, k| {
        let prod = (n + 2 - r..=n).fold(Polynomial::x(n, k), |pr, l| {
            &pr * &(&Polynomial::x(n, k) - &Polynomial::x(n, l))
        });
        &acc + &prod
    }))
}

/// Substitutes `t = 0`.
pub fn specialize_t_zero(f: &Polynomial) -> Polynomial {
    let mut asg = Assignment::new();
    asg.insert(Var::T, Polynomial::zero(f.n()));
    f.substitute(&asg).expect("same ambient ring")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `Q[x_1..x_n, t] / I(h)`.
    Equivariant,
    /// `Q[x_1..x_n] / Ǐ(h)`, everything at `t = 0`.
    Ordinary,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Equivariant => "equivariant",
            Mode::Ordinary => "ordinary",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equivariant" => Ok(Mode::Equivariant),
            "ordinary" => Ok(Mode::Ordinary),
            other => Err(Error::argument(format!("unknown mode {other:?}"))),
        }
    }
}

/// The `n` generators `f_{h(j),j}` (or their `t = 0` forms) in column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedIdeal {
    pub h: HessenbergFunction,
    pub mode: Mode,
    pub generators: Vec<Polynomial>,
}

impl PresentedIdeal {
    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// `(h(j), j)` for each generator.
    pub fn labels(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).map(|j| (self.h.at(j), j)).collect()
    }
}

pub fn ideal_generators(h: &HessenbergFunction, mode: Mode) -> Result<PresentedIdeal> {
    let n = h.n();
    let matrix = GeneratorMatrix::shared(n)?;
    let generators = (1..=n)
        .map(|j| {
            let f = matrix.entry(h.at(j), j);
            match mode {
                Mode::Equivariant => f.clone(),
                Mode::Ordinary => specialize_t_zero(f),
            }
        })
        .collect();
    Ok(PresentedIdeal {
        h: h.clone(),
        mode,
        generators,
    })
}
