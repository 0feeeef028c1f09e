use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Exponents, Monomial, Var};
use super::rational::{rational, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial in `Q[x_1, ..., x_n, t]`.
///
/// Terms are keyed by monomial; no stored coefficient is zero, so structural
/// equality is polynomial equality. Iteration runs in canonical order
/// (degrevlex, `x_1 > ... > x_n > t`), largest monomial first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// A variable-to-polynomial substitution. Unassigned variables map to
/// themselves.
pub type Assignment = BTreeMap<Var, Polynomial>;

fn check_same(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        })
    }
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Polynomial::term(Monomial::one(n), c)
    }

    pub fn integer(n: usize, c: i64) -> Self {
        Polynomial::constant(n, rational(c))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.n());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(n: usize, v: Var) -> Self {
        Polynomial::term(Monomial::var(n, v), Rational::one())
    }

    pub fn x(n: usize, k: usize) -> Self {
        assert!(
            (1..=n).contains(&k),
            "x_{k} outside ambient ring with n = {n}"
        );
        Polynomial::var(n, Var::X(k))
    }

    pub fn t(n: usize) -> Self {
        Polynomial::var(n, Var::T)
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            check_same(n, m.n())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Ambient `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, largest monomial first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.n))
    }

    /// Leading term in canonical (degrevlex) order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Maximum total weight of a term; `None` marks the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// True for zero and for polynomials whose terms all share one weight.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(self.n, other.n)?;
        let (mut acc, rest) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term(m.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(self.n, other.n)?;
        let mut acc = self.clone();
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), -c);
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(self.n, other.n)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Polynomial {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, ca)| (a.mul(m), ca * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring-homomorphic image under `assignment`.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Polynomial> {
        for img in assignment.values() {
            check_same(self.n, img.n)?;
        }
        for v in assignment.keys() {
            if let Var::X(k) = v {
                if *k == 0 || *k > self.n {
                    return Err(Error::argument(format!(
                        "substitution for {v} outside ambient ring with n = {}",
                        self.n
                    )));
                }
            }
        }
        let slots = self.n + 1;
        let images: Vec<Option<&Polynomial>> = (0..slots)
            .map(|s| assignment.get(&Var::from_slot(s, self.n)))
            .collect();

        // Every image a single term: map term by term.
        if images.iter().flatten().all(|p| p.len() <= 1) {
            return Ok(self.substitute_monomial_images(&images));
        }

        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| match img {
                Some(p) => vec![Polynomial::one(self.n), (*p).clone()],
                None => Vec::new(),
            })
            .collect();
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut kept: Exponents = m.slots().iter().copied().collect();
            let mut factor = Polynomial::constant(self.n, c.clone());
            for (slot, e) in m.slots().iter().enumerate() {
                if images[slot].is_none() || *e == 0 {
                    continue;
                }
                kept[slot] = 0;
                let e = usize::from(*e);
                let table = &mut powers[slot];
                while table.len() <= e {
                    let next = &table[table.len() - 1] * &table[1];
                    table.push(next);
                }
                factor = &factor * &table[e];
            }
            let rest = Monomial::from_slots(kept);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        Ok(out)
    }

    fn substitute_monomial_images(&self, images: &[Option<&Polynomial>]) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        'terms: for (m, c) in &self.terms {
            let mut kept: Exponents = m.slots().iter().copied().collect();
            let mut mono = Monomial::one(self.n);
            let mut coef = c.clone();
            for (slot, e) in m.slots().iter().enumerate() {
                let Some(img) = images[slot] else { continue };
                if *e == 0 {
                    continue;
                }
                kept[slot] = 0;
                let Some((im, ic)) = img.terms.iter().next() else {
                    continue 'terms;
                };
                for _ in 0..*e {
                    mono = mono.mul(im);
                }
                coef *= num_traits::pow(ic.clone(), usize::from(*e));
            }
            out.add_term(mono.mul(&Monomial::from_slots(kept)), coef);
        }
        out
    }

    /// Value at `point = (x_1, ..., x_n, t)`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        check_same(self.n + 1, point.len())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (slot, &e) in m.slots().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[slot].clone(), usize::from(e));
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Divides through by the leading coefficient (canonical order).
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched ambient rings; use `checked_add` at API edges.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ambient rings differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ambient rings differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ambient rings differ")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text form, e.g. `x_1^2 - x_1*x_2 - 2*x_1*t + 1/2*t^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> Polynomial {
        Polynomial::x(4, k)
    }
    fn t() -> Polynomial {
        Polynomial::t(4)
    }
    fn c(v: i64) -> Polynomial {
        Polynomial::integer(4, v)
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&x(1) + &(-&x(1))).is_zero());
    }

    #[test]
    fn disjoint_sum() {
        let a = &x(1) - &t();
        let b = &x(2) - &(&c(2) * &t());
        assert_eq!(&a + &b, &(&x(1) + &x(2)) - &(&c(3) * &t()));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(lhs, &x(1).pow(2) - &x(2).pow(2));
        assert_eq!(lhs.total_degree(), Some(2));
        assert_eq!(&(&x(1) - &t()) * &c(1), &x(1) - &t());
    }

    #[test]
    fn mismatched_rings_error() {
        let a = Polynomial::x(2, 1);
        let b = Polynomial::x(3, 1);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(a.checked_mul(&b).is_err());
        assert!(a.evaluate(&[rational(1)]).is_err());
        let mut asg = Assignment::new();
        asg.insert(Var::X(1), b);
        assert!(a.substitute(&asg).is_err());
    }

    #[test]
    fn substitute_variable_for_variable() {
        let n = 2;
        let p = &Polynomial::x(n, 1) * &Polynomial::x(n, 2);
        let mut asg = Assignment::new();
        asg.insert(Var::X(1), Polynomial::x(n, 2));
        assert_eq!(p.substitute(&asg).unwrap(), Polynomial::x(n, 2).pow(2));
    }

    #[test]
    fn substitute_general_images() {
        let n = 2;
        let p = &Polynomial::x(n, 1).pow(2) + &Polynomial::t(n);
        let mut asg = Assignment::new();
        asg.insert(Var::X(1), &Polynomial::x(n, 2) + &Polynomial::t(n));
        let expect = &(&Polynomial::x(n, 2) + &Polynomial::t(n)).pow(2) + &Polynomial::t(n);
        assert_eq!(p.substitute(&asg).unwrap(), expect);
        assert_eq!(p.substitute(&Assignment::new()).unwrap(), p);
    }

    #[test]
    fn evaluate_and_zero() {
        let p = &Polynomial::x(1, 1) - &Polynomial::t(1);
        assert_eq!(
            p.evaluate(&[rational(1), rational(1)]).unwrap(),
            rational(0)
        );
        assert_eq!(
            Polynomial::zero(3).evaluate(&vec![rational(5); 4]).unwrap(),
            rational(0)
        );
        assert_eq!(Polynomial::zero(3).total_degree(), None);
        assert_eq!(Polynomial::one(3).total_degree(), Some(0));
    }

    #[test]
    fn display_is_canonical() {
        let n = 2;
        let p = &(&Polynomial::x(n, 1) - &Polynomial::x(n, 2))
            * &(&Polynomial::x(n, 1) - &Polynomial::t(n));
        assert_eq!(p.to_string(), "x_1^2 - x_1*x_2 - x_1*t + x_2*t");
        let half = Polynomial::constant(n, super::super::rational::ratio(-1, 2));
        assert_eq!((&half * &Polynomial::t(n)).to_string(), "-1/2*t");
    }
}
