use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::order::MonomialOrder;
use super::sorted::SortedPoly;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Var};

/// Default cap on S-pairs processed by one Buchberger run.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroebnerStats {
    pub pairs_processed: usize,
    pub reductions_to_zero: usize,
    pub pairs_skipped: usize,
}

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing
/// leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    stats: GroebnerStats,
    sorted: Vec<SortedPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub(crate) fn from_parts(
        order: MonomialOrder,
        basis: Vec<Polynomial>,
        stats: GroebnerStats,
    ) -> Self {
        let sorted = basis.iter().map(|g| SortedPoly::new(g, &order)).collect();
        GroebnerBasis {
            order,
            basis,
            stats,
            sorted,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn stats(&self) -> GroebnerStats {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted
            .iter()
            .map(|g| g.leading_monomial().clone())
            .collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|g| g.leading_monomial().is_one())
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        check_in_ring(f, &self.order)?;
        let r = reduce_sorted(SortedPoly::new(f, &self.order), &self.sorted, &self.order);
        Ok(r.to_polynomial(self.order.n()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

pub(crate) fn check_in_ring(f: &Polynomial, order: &MonomialOrder) -> Result<()> {
    if f.n() != order.n() {
        return Err(Error::DimensionMismatch {
            expected: order.n(),
            found: f.n(),
        });
    }
    if !order.has_t() && f.involves(Var::T) {
        return Err(Error::argument(format!(
            "{f} involves t but the order {order} describes a t-free ring"
        )));
    }
    Ok(())
}

/// Full reduction of `f` by `reducers` (each nonzero and monic).
fn reduce_sorted(mut f: SortedPoly, reducers: &[SortedPoly], order: &MonomialOrder) -> SortedPoly {
    let mut remainder = SortedPoly::empty();
    while let Some((lm, lc)) = f.leading().cloned() {
        let hit = reducers
            .iter()
            .find_map(|g| g.leading_monomial().quotient_of(&lm).map(|q| (g, q)));
        match hit {
            Some((g, shift)) => f.sub_multiple(&lc, &shift, g, order),
            None => {
                f.pop_leading();
                remainder.push_descending((lm, lc));
            }
        }
    }
    remainder.finish_reversed()
}

fn monic_reducers(basis: &[Polynomial], order: &MonomialOrder) -> Result<Vec<SortedPoly>> {
    let mut out = Vec::with_capacity(basis.len());
    for g in basis {
        check_in_ring(g, order)?;
        if g.is_zero() {
            continue;
        }
        let mut s = SortedPoly::new(g, order);
        s.make_monic();
        out.push(s);
    }
    Ok(out)
}

/// Remainder of multivariate division of `f` by `basis`: no term of the
/// result is divisible by a leading monomial of `basis`.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial> {
    check_in_ring(f, order)?;
    let reducers = monic_reducers(basis, order)?;
    Ok(reduce_sorted(SortedPoly::new(f, order), &reducers, order).to_polynomial(order.n()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    i: usize,
    j: usize,
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
    let (fm, _) = f.leading().expect("nonzero");
    let (gm, _) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let mut s = SortedPoly::empty();
    let one = crate::polyring::rational(1);
    let minus_one = crate::polyring::rational(-1);
    s.sub_multiple(&minus_one, &fm.quotient_of(&lcm).unwrap(), f, order);
    s.sub_multiple(&one, &gm.quotient_of(&lcm).unwrap(), g, order);
    s
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by pair index) and the product and chain criteria.
pub fn buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    pair_budget: usize,
) -> Result<GroebnerBasis> {
    let n = order.n();
    let mut basis = monic_reducers(generators, order)?;
    let mut stats = GroebnerStats::default();

    let lcm_of =
        |b: &[SortedPoly], i: usize, j: usize| b[i].leading_monomial().lcm(b[j].leading_monomial());
    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BTreeSet<PairKey>,
                     pending: &mut HashSet<(usize, usize)>,
                     b: &[SortedPoly],
                     i: usize,
                     j: usize| {
        let degree = lcm_of(b, i, j).total_degree();
        queue.insert(PairKey { degree, i, j });
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, i, j);
        }
    }

    while let Some(pair) = queue.pop_first() {
        let (i, j) = (pair.i, pair.j);
        pending.remove(&(i, j));
        let (mi, mj) = (basis[i].leading_monomial(), basis[j].leading_monomial());
        if mi.is_coprime(mj) {
            stats.pairs_skipped += 1;
            continue;
        }
        let lcm = mi.lcm(mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            stats.pairs_skipped += 1;
            continue;
        }
        stats.pairs_processed += 1;
        if stats.pairs_processed > pair_budget {
            return Err(Error::ResourceLimit(format!(
                "Buchberger run exceeded the budget of {pair_budget} S-pairs"
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = reduce_sorted(s, &basis, order);
        if r.is_zero() {
            stats.reductions_to_zero += 1;
            continue;
        }
        r.make_monic();
        basis.push(r);
        let new = basis.len() - 1;
        for k in 0..new {
            push_pair(&mut queue, &mut pending, &basis, k, new);
        }
    }

    Ok(GroebnerBasis::from_parts(
        order.clone(),
        interreduce(basis, order)
            .iter()
            .map(|g| g.to_polynomial(n))
            .collect(),
        stats,
    ))
}

/// Minimal, then fully reduced, monic basis sorted by leading monomial.
fn interreduce(basis: Vec<SortedPoly>, order: &MonomialOrder) -> Vec<SortedPoly> {
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial();
        let redundant = basis.iter().enumerate().any(|(other, h)| {
            let hm = h.leading_monomial();
            other != idx && hm.divides(lm) && (hm != lm || other < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = reduce_sorted(minimal[idx].clone(), &others, order);
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.compare(a.leading_monomial(), b.leading_monomial()));
    reduced
}

pub fn ideal_membership(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    gb.contains(f)
}

/// Equal ideals have equal reduced Gröbner bases for the same order.
pub fn ideal_equality(
    gens_a: &[Polynomial],
    gens_b: &[Polynomial],
    order: &MonomialOrder,
    pair_budget: usize,
) -> Result<bool> {
    let a = buchberger(gens_a, order, pair_budget)?;
    let b = buchberger(gens_b, order, pair_budget)?;
    Ok(a.basis() == b.basis())
}

/// Every S-polynomial of `gb` reduces to zero modulo `gb`.
pub fn satisfies_s_pair_criterion(gb: &GroebnerBasis) -> bool {
    let order = gb.order();
    let b = &gb.sorted;
    (0..b.len()).all(|j| {
        (0..j).all(|i| reduce_sorted(s_polynomial(&b[i], &b[j], order), b, order).is_zero())
    })
}
