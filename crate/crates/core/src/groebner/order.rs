use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::Mode;
use crate::polyring::{Monomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Degrevlex,
    Lex,
    Deglex,
}

/// A monomial order on the polynomial ring spanned by `priority`.
///
/// `priority` lists ring variables strongest first. It is either all of
/// `x_1, ..., x_n, t` or, for `t`-free quotients, just the `x` variables; a
/// polynomial mentioning a variable outside the list is not in the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    n: usize,
    priority: Vec<Var>,
    #[serde(skip)]
    slots: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, n: usize, priority: Vec<Var>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for v in &priority {
            let slot = match v {
                Var::X(k) if *k == 0 || *k > n => {
                    return Err(Error::argument(format!(
                        "{v} is not a variable when n = {n}"
                    )))
                }
                other => other.slot(n),
            };
            if std::mem::replace(&mut seen[slot], true) {
                return Err(Error::argument(format!(
                    "{v} listed twice in variable priority"
                )));
            }
        }
        if seen[..n].iter().any(|s| !s) {
            return Err(Error::argument(
                "variable priority must include every x variable",
            ));
        }
        let slots = priority.iter().map(|v| v.slot(n)).collect();
        Ok(MonomialOrder {
            kind,
            n,
            priority,
            slots,
        })
    }

    /// `x_1 > ... > x_n > t` (with `t` only for the equivariant ring).
    pub fn standard(kind: OrderKind, n: usize, mode: Mode) -> Self {
        let mut priority: Vec<Var> = (1..=n).map(Var::X).collect();
        if mode == Mode::Equivariant {
            priority.push(Var::T);
        }
        MonomialOrder::new(kind, n, priority).expect("standard priority is valid")
    }

    pub fn degrevlex(n: usize, mode: Mode) -> Self {
        MonomialOrder::standard(OrderKind::Degrevlex, n, mode)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn priority(&self) -> &[Var] {
        &self.priority
    }

    pub fn has_t(&self) -> bool {
        self.priority.contains(&Var::T)
    }

    /// Number of ring variables.
    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    pub(crate) fn ring_slots(&self) -> &[usize] {
        &self.slots
    }

    /// Re-derives the slot table after deserialization.
    pub(crate) fn revalidated(self) -> Result<Self> {
        MonomialOrder::new(self.kind, self.n, self.priority)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.slots(), b.slots());
        let lex = || {
            for &s in &self.slots {
                match ea[s].cmp(&eb[s]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        };
        let degree = |e: &[u16]| -> u32 { self.slots.iter().map(|&s| u32::from(e[s])).sum() };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Deglex => degree(ea).cmp(&degree(eb)).then_with(lex),
            OrderKind::Degrevlex => degree(ea).cmp(&degree(eb)).then_with(|| {
                for &s in self.slots.iter().rev() {
                    match ea[s].cmp(&eb[s]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            OrderKind::Degrevlex => "degrevlex",
            OrderKind::Lex => "lex",
            OrderKind::Deglex => "deglex",
        };
        let vars: Vec<String> = self.priority.iter().map(Var::to_string).collect();
        write!(f, "{kind}({})", vars.join(" > "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_degrevlex_matches_canonical_order() {
        let order = MonomialOrder::degrevlex(3, Mode::Equivariant);
        let ms = [
            Monomial::new(&[1, 0, 0], 1),
            Monomial::new(&[0, 2, 0], 0),
            Monomial::new(&[0, 0, 0], 2),
            Monomial::new(&[1, 1, 0], 0),
        ];
        for a in &ms {
            for b in &ms {
                assert_eq!(order.compare(a, b), a.cmp(b));
            }
        }
    }

    #[test]
    fn lex_and_deglex() {
        let lex = MonomialOrder::standard(OrderKind::Lex, 2, Mode::Ordinary);
        let deglex = MonomialOrder::standard(OrderKind::Deglex, 2, Mode::Ordinary);
        let x1 = Monomial::new(&[1, 0], 0);
        let x2sq = Monomial::new(&[0, 2], 0);
        assert_eq!(lex.compare(&x1, &x2sq), Ordering::Greater);
        assert_eq!(deglex.compare(&x1, &x2sq), Ordering::Less);
    }

    #[test]
    fn custom_priority() {
        let order =
            MonomialOrder::new(OrderKind::Lex, 2, vec![Var::T, Var::X(2), Var::X(1)]).unwrap();
        assert_eq!(
            order.compare(&Monomial::new(&[5, 0], 0), &Monomial::new(&[0, 0], 1)),
            Ordering::Less
        );
        assert!(MonomialOrder::new(OrderKind::Lex, 2, vec![Var::X(1)]).is_err());
        assert!(
            MonomialOrder::new(OrderKind::Lex, 2, vec![Var::X(1), Var::X(1), Var::X(2)]).is_err()
        );
        assert!(MonomialOrder::new(OrderKind::Lex, 2, vec![Var::X(1), Var::X(3)]).is_err());
    }
}
