//! Hilbert series of `k[vars] / in(I)` from the leading-term ideal.
//!
//! The numerator `N(q)` of `HS(q) = N(q) / (1 - q)^k` is computed by the
//! pivot recursion `N(M) = N(M + (x)) + q N(M : x)` on a variable `x` shared by
//! two minimal generators; pairwise coprime generators give
//! `N = prod (1 - q^deg)`. Common `(1 - q)` factors are then cancelled.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::buchberger::GroebnerBasis;
use crate::error::{Error, Result};
use crate::polyring::{Exponents, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind", content = "value")]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDimension::Finite(d) => Some(d),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Graded dimensions of a quotient ring, indexed by internal weight.
///
/// The series is `numerator(q) / (1 - q)^denominator_power` with no common
/// `(1 - q)` factor left. When `denominator_power == 0` the numerator is the
/// (finite) series itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub denominator_power: usize,
    pub quotient_dimension: QuotientDimension,
}

impl HilbertData {
    fn from_numerator(mut numerator: Vec<i64>, mut power: usize) -> Self {
        trim(&mut numerator);
        if numerator.is_empty() {
            // unit ideal: the quotient is zero
            power = 0;
        }
        while power > 0 && !numerator.is_empty() && numerator.iter().sum::<i64>() == 0 {
            numerator = divide_one_minus_q(&numerator);
            power -= 1;
        }
        let quotient_dimension = if power == 0 {
            QuotientDimension::Finite(numerator.iter().sum::<i64>() as u64)
        } else {
            QuotientDimension::Infinite
        };
        HilbertData {
            numerator,
            denominator_power: power,
            quotient_dimension,
        }
    }

    /// The coefficients when the quotient is finite-dimensional.
    pub fn series(&self) -> Option<&[i64]> {
        (self.denominator_power == 0).then_some(self.numerator.as_slice())
    }

    /// The series in cohomological grading (`q` of degree 2), e.g.
    /// `1 + 2q^2 + q^4` or `1/(1-q^2)`.
    pub fn poincare_text(&self) -> String {
        let top = format_q_polynomial(&self.numerator, 2);
        match self.denominator_power {
            0 => top,
            k => {
                let top = if self.numerator.iter().filter(|&&c| c != 0).count() > 1 {
                    format!("({top})")
                } else {
                    top
                };
                let power = if k == 1 {
                    String::new()
                } else {
                    format!("^{k}")
                };
                format!("{top}/(1-q^2){power}")
            }
        }
    }

    /// First `len` coefficients of the power series expansion.
    pub fn coefficients(&self, len: usize) -> Vec<i64> {
        let mut coeffs: Vec<i64> = (0..len)
            .map(|d| self.numerator.get(d).copied().unwrap_or(0))
            .collect();
        for _ in 0..self.denominator_power {
            for d in 1..len {
                coeffs[d] += coeffs[d - 1];
            }
        }
        coeffs
    }
}

/// `c_0 + c_1 q^s + c_2 q^{2s} + ...` in ascending degree, e.g.
/// `1 + 2q^2 + q^4` for `[1, 2, 1]` and `s = 2`.
pub fn format_q_polynomial(coeffs: &[i64], step: usize) -> String {
    let mut out = String::new();
    for (d, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let deg = d * step;
        let magnitude = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if magnitude != 1 || deg == 0 {
            out.push_str(&magnitude.to_string());
        }
        match deg {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn divide_one_minus_q(p: &[i64]) -> Vec<i64> {
    // p = (1 - q) * r  =>  r_d = p_0 + ... + p_d
    let mut out = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        out.push(acc);
    }
    trim(&mut out);
    out
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (d, c) in p.iter().enumerate() {
        acc[d + shift] += c;
    }
}

fn minimize(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    gens.sort_by_key(|g| g.iter().map(|&e| u32::from(e)).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Exponents> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Exponents>) -> Vec<i64> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    let slots = gens[0].len();
    let mut occurrences = vec![0usize; slots];
    for g in &gens {
        for (s, &e) in g.iter().enumerate() {
            if e > 0 {
                occurrences[s] += 1;
            }
        }
    }
    let pivot = (0..slots)
        .filter(|&s| occurrences[s] >= 2)
        .max_by_key(|&s| (occurrences[s], std::cmp::Reverse(s)));
    let Some(pivot) = pivot else {
        // pairwise coprime
        let mut acc = vec![1i64];
        for g in &gens {
            let deg = g.iter().map(|&e| usize::from(e)).sum::<usize>();
            let mut next = vec![0i64; acc.len() + deg];
            for (d, c) in acc.iter().enumerate() {
                next[d] += c;
                next[d + deg] -= c;
            }
            acc = next;
        }
        trim(&mut acc);
        return acc;
    };

    let mut var: Exponents = Exponents::from_elem(0, slots);
    var[pivot] = 1;
    let mut with_var = gens.clone();
    with_var.push(var);
    let colon: Vec<Exponents> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(1);
            h
        })
        .collect();

    let mut acc = numerator(with_var);
    add_shifted(&mut acc, &numerator(colon), 1);
    trim(&mut acc);
    acc
}

/// Hilbert data of `k[v_1..v_k] / (monomials)`, `k = ring_slots.len()`.
pub(crate) fn monomial_ideal_hilbert(monomials: &[Monomial], ring_slots: &[usize]) -> HilbertData {
    let gens: Vec<Exponents> = monomials
        .iter()
        .map(|m| ring_slots.iter().map(|&s| m.slots()[s]).collect())
        .collect();
    HilbertData::from_numerator(numerator(gens), ring_slots.len())
}

/// Hilbert series of the quotient by the ideal `gb` generates. The ideal
/// must be homogeneous.
pub fn hilbert_series(gb: &GroebnerBasis) -> Result<HilbertData> {
    if let Some(bad) = gb.basis().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::argument(format!(
            "Hilbert series needs a homogeneous ideal; {bad} is not homogeneous"
        )));
    }
    Ok(monomial_ideal_hilbert(
        &gb.leading_monomials(),
        gb.order().ring_slots(),
    ))
}

/// Monomials outside the leading-term ideal, in canonical order (smallest
/// first). Errors unless the quotient is finite-dimensional.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let lms = gb.leading_monomials();
    let slots = gb.order().ring_slots();
    let n = gb.order().n();
    let mut bounds: BTreeMap<usize, u16> = BTreeMap::new();
    for m in &lms {
        let support: Vec<usize> = (0..=n).filter(|&s| m.slots()[s] > 0).collect();
        if m.is_one() {
            return Ok(Vec::new());
        }
        if let [s] = support[..] {
            let e = m.slots()[s];
            bounds
                .entry(s)
                .and_modify(|b| *b = (*b).min(e))
                .or_insert(e);
        }
    }
    if slots.iter().any(|s| !bounds.contains_key(s)) {
        return Err(Error::NotZeroDimensional);
    }

    let mut out = Vec::new();
    let mut exps: Exponents = Exponents::from_elem(0, n + 1);
    walk(slots, 0, &bounds, &mut exps, &lms, &mut out);
    out.sort();
    Ok(out)
}

fn walk(
    slots: &[usize],
    idx: usize,
    bounds: &BTreeMap<usize, u16>,
    exps: &mut Exponents,
    lms: &[Monomial],
    out: &mut Vec<Monomial>,
) {
    let candidate = Monomial::from_slots(exps.clone());
    if lms.iter().any(|lm| lm.divides(&candidate)) {
        // every extension is divisible too
        return;
    }
    if idx == slots.len() {
        out.push(candidate);
        return;
    }
    let s = slots[idx];
    for e in 0..bounds[&s] {
        exps[s] = e;
        walk(slots, idx + 1, bounds, exps, lms, out);
    }
    exps[s] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(xs: &[u16]) -> Monomial {
        Monomial::new(xs, 0)
    }

    #[test]
    fn coprime_generators() {
        // k[a,b]/(a^2, b^3): (1+q)(1+q+q^2)
        let h = monomial_ideal_hilbert(&[mono(&[2, 0]), mono(&[0, 3])], &[0, 1]);
        assert_eq!(h.series().unwrap(), &[1, 2, 2, 1]);
        assert_eq!(h.quotient_dimension, QuotientDimension::Finite(6));
    }

    #[test]
    fn pivot_needed() {
        // k[a,b]/(a^2, ab, b^2): 1 + 2q
        let h = monomial_ideal_hilbert(&[mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])], &[0, 1]);
        assert_eq!(h.series().unwrap(), &[1, 2]);
    }

    #[test]
    fn infinite_quotient() {
        // k[a,b]/(a): 1/(1-q)
        let h = monomial_ideal_hilbert(&[mono(&[1, 0])], &[0, 1]);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.denominator_power, 1);
        assert_eq!(h.quotient_dimension, QuotientDimension::Infinite);
        assert_eq!(h.coefficients(4), vec![1, 1, 1, 1]);
        // k[a,b]/(ab): (1 - q^2)/(1-q)^2 = (1+q)/(1-q)
        let h = monomial_ideal_hilbert(&[mono(&[1, 1])], &[0, 1]);
        assert_eq!(h.numerator, vec![1, 1]);
        assert_eq!(h.denominator_power, 1);
        assert_eq!(h.coefficients(4), vec![1, 2, 2, 2]);
    }

    #[test]
    fn cohomological_text() {
        let h = monomial_ideal_hilbert(&[mono(&[2, 0]), mono(&[0, 3])], &[0, 1]);
        assert_eq!(h.poincare_text(), "1 + 2q^2 + 2q^4 + q^6");
        let h = monomial_ideal_hilbert(&[mono(&[1, 0])], &[0, 1]);
        assert_eq!(h.poincare_text(), "1/(1-q^2)");
        let h = monomial_ideal_hilbert(&[mono(&[1, 1])], &[0, 1]);
        assert_eq!(h.poincare_text(), "(1 + q^2)/(1-q^2)");
        assert_eq!(format_q_polynomial(&[1, 0, -3], 1), "1 - 3q^2");
        assert_eq!(format_q_polynomial(&[0, -1], 1), "-q");
        assert_eq!(format_q_polynomial(&[], 2), "0");
    }

    #[test]
    fn unit_ideal_and_empty() {
        let h = monomial_ideal_hilbert(&[Monomial::one(1)], &[0, 1]);
        assert_eq!(h.quotient_dimension, QuotientDimension::Finite(0));
        let h = monomial_ideal_hilbert(&[], &[0, 1]);
        assert_eq!(h.denominator_power, 2);
    }
}
