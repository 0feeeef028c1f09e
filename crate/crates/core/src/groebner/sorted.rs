//! Term lists kept sorted by a [`MonomialOrder`], smallest first, so the
//! leading term is `last()` and can be popped in O(1).

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::polyring::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub fn new(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.compare(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn empty() -> Self {
        SortedPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop()
    }

    /// Remainder terms arrive largest first; `finish_reversed` restores the
    /// ascending layout.
    pub fn push_descending(&mut self, term: (Monomial, Rational)) {
        self.terms.push(term);
    }

    pub fn finish_reversed(mut self) -> Self {
        self.terms.reverse();
        self
    }

    pub fn to_polynomial(&self, n: usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().cloned()).expect("terms share the ring")
    }

    pub fn make_monic(&mut self) {
        let Some((_, lc)) = self.terms.last() else {
            return;
        };
        if lc.is_one() {
            return;
        }
        let inv = lc.recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self -= coef * shift * g`.
    pub fn sub_multiple(
        &mut self,
        coef: &Rational,
        shift: &Monomial,
        g: &SortedPoly,
        order: &MonomialOrder,
    ) {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut lhs = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut rhs = g
            .terms
            .iter()
            .map(|(m, c)| (m.mul(shift), -(c * coef)))
            .peekable();
        loop {
            let ord = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(a), Some(b)) => order.compare(&a.0, &b.0),
            };
            match ord {
                Ordering::Less => out.push(lhs.next().unwrap()),
                Ordering::Greater => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let (m, a) = lhs.next().unwrap();
                    let (_, b) = rhs.next().unwrap();
                    let sum = a + b;
                    if !sum.is_zero() {
                        out.push((m, sum));
                    }
                }
            }
        }
        self.terms = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Mode;
    use crate::polyring::rational;

    #[test]
    fn subtraction_cancels_leading_term() {
        let n = 2;
        let order = MonomialOrder::degrevlex(n, Mode::Ordinary);
        let x1 = Polynomial::x(n, 1);
        let x2 = Polynomial::x(n, 2);
        let f = SortedPoly::new(&(&x1.pow(2) + &x2), &order);
        let g = SortedPoly::new(&(&x1 - &x2), &order);
        let mut r = f.clone();
        r.sub_multiple(&rational(1), &Monomial::new(&[1, 0], 0), &g, &order);
        // x1^2 + x2 - x1*(x1 - x2) = x1*x2 + x2
        assert_eq!(r.to_polynomial(n), &(&x1 * &x2) + &x2);
        assert_eq!(r.leading_monomial(), &Monomial::new(&[1, 1], 0));
        assert!(SortedPoly::empty().is_zero());
    }
}
