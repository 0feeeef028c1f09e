//! Display forms for generators: the `p_i`-factored shape that the recursion
//! produces, and plain expanded LaTeX for everything else.

use num_traits::{One, Signed};

use super::{p, step_factor, Mode};
use crate::polyring::{Monomial, Polynomial, Rational, Var};

/// An unexpanded expression for `f_{i,j}` or its `t = 0` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factored {
    /// `p_i`.
    P(usize),
    /// A polynomial shown expanded, parenthesized when it has several terms.
    Atom(Polynomial),
    Sum(Vec<Factored>),
    Product(Vec<Factored>),
}

impl Factored {
    fn product(lhs: Factored, rhs: Factored) -> Factored {
        let mut factors = Vec::new();
        for f in [lhs, rhs] {
            match f {
                Factored::Product(inner) => factors.extend(inner),
                other => factors.push(other),
            }
        }
        Factored::Product(factors)
    }

    fn summands(self) -> Vec<Factored> {
        match self {
            Factored::Sum(inner) => inner,
            other => vec![other],
        }
    }

    pub fn to_polynomial(&self, n: usize) -> Polynomial {
        match self {
            Factored::P(i) => p(*i, n).expect("index within ring"),
            Factored::Atom(poly) => poly.clone(),
            Factored::Sum(parts) => parts
                .iter()
                .fold(Polynomial::zero(n), |acc, f| &acc + &f.to_polynomial(n)),
            Factored::Product(parts) => parts
                .iter()
                .fold(Polynomial::one(n), |acc, f| &acc * &f.to_polynomial(n)),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Factored::P(i) => format!("p_{{{i}}}"),
            Factored::Atom(poly) if poly.len() > 1 => format!("({})", polynomial_latex(poly)),
            Factored::Atom(poly) => polynomial_latex(poly),
            Factored::Sum(parts) => parts
                .iter()
                .map(Factored::to_latex)
                .collect::<Vec<_>>()
                .join(" + "),
            Factored::Product(parts) => parts
                .iter()
                .map(|f| match f {
                    Factored::Sum(_) => format!("\\{{{}\\}}", f.to_latex()),
                    _ => f.to_latex(),
                })
                .collect::<Vec<_>>()
                .join(""),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Factored::P(i) => format!("p_{i}"),
            Factored::Atom(poly) if poly.len() > 1 => format!("({poly})"),
            Factored::Atom(poly) => poly.to_string(),
            Factored::Sum(parts) => parts
                .iter()
                .map(Factored::to_text)
                .collect::<Vec<_>>()
                .join(" + "),
            Factored::Product(parts) => parts
                .iter()
                .map(|f| match f {
                    Factored::Sum(_) => format!("({})", f.to_text()),
                    _ => f.to_text(),
                })
                .collect::<Vec<_>>()
                .join("*"),
        }
    }
}

fn unrolled(i: usize, j: usize, n: usize) -> Option<Factored> {
    if j == 0 {
        return None;
    }
    if i == j {
        return Some(Factored::P(j));
    }
    let right = Factored::product(Factored::Atom(step_factor(j, i, n)), unrolled(i - 1, j, n)?);
    let mut parts = unrolled(i - 1, j - 1, n)
        .map(Factored::summands)
        .unwrap_or_default();
    parts.push(right);
    Some(if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Factored::Sum(parts)
    })
}

fn t_free(i: usize, j: usize, n: usize) -> Factored {
    let parts: Vec<Factored> = (1..=j)
        .map(|k| {
            let xk = Polynomial::x(n, k);
            let mut factors = vec![Factored::Atom(xk.clone())];
            factors.extend((j + 1..=i).map(|l| Factored::Atom(&xk - &Polynomial::x(n, l))));
            if factors.len() == 1 {
                factors.pop().unwrap()
            } else {
                Factored::Product(factors)
            }
        })
        .collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        Factored::Sum(parts)
    }
}

/// The factored shape of `f_{i,j}` (equivariant: recursion unrolled through
/// `p_i`; ordinary: the `t = 0` product formula), returned only when it
/// expands back to `expected`.
pub fn factored_form(
    i: usize,
    j: usize,
    n: usize,
    mode: Mode,
    expected: &Polynomial,
) -> Option<Factored> {
    if j == 0 || j > i || i > n {
        return None;
    }
    let candidate = match mode {
        Mode::Equivariant => unrolled(i, j, n)?,
        Mode::Ordinary => t_free(i, j, n),
    };
    (candidate.to_polynomial(n) == *expected).then_some(candidate)
}

fn monomial_latex(m: &Monomial) -> String {
    let n = m.n();
    m.slots()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(slot, &e)| {
            let base = match Var::from_slot(slot, n) {
                Var::X(k) => format!("x_{{{k}}}"),
                Var::T => "t".to_string(),
            };
            if e == 1 {
                base
            } else {
                format!("{base}^{{{e}}}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn coefficient_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Expanded LaTeX in canonical term order.
pub fn polynomial_latex(poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in poly.terms().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = c.abs();
        if m.is_one() {
            out.push_str(&coefficient_latex(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial_latex(m));
        } else {
            out.push_str(&coefficient_latex(&mag));
            out.push(' ');
            out.push_str(&monomial_latex(m));
        }
    }
    out
}
