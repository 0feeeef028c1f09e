//! Buchberger Gröbner bases over the rationals, with normal forms, ideal
//! membership and equality, standard monomials and Hilbert series.

mod buchberger;
mod cache;
mod hilbert;
mod order;
mod sorted;

pub use buchberger::{
    buchberger, ideal_equality, ideal_membership, normal_form, satisfies_s_pair_criterion,
    GroebnerBasis, GroebnerStats, DEFAULT_PAIR_BUDGET,
};
pub use cache::GroebnerCache;
pub use hilbert::{
    format_q_polynomial, hilbert_series, standard_monomials, HilbertData, QuotientDimension,
};
pub use order::{MonomialOrder, OrderKind};

use crate::error::Result;
use crate::polyring::Polynomial;

/// Pair budget plus an optional on-disk cache, shared by every Gröbner run of
/// a session.
#[derive(Debug, Clone)]
pub struct GroebnerEngine {
    pub pair_budget: usize,
    pub cache: Option<GroebnerCache>,
}

impl Default for GroebnerEngine {
    fn default() -> Self {
        GroebnerEngine {
            pair_budget: DEFAULT_PAIR_BUDGET,
            cache: None,
        }
    }
}

impl GroebnerEngine {
    pub fn with_cache(mut self, cache: GroebnerCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn basis(&self, generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.load(generators, order) {
                return Ok(hit);
            }
        }
        let gb = buchberger(generators, order, self.pair_budget)?;
        if let Some(cache) = &self.cache {
            // a failed write only costs a recomputation later
            let _ = cache.store(generators, &gb);
        }
        Ok(gb)
    }

    pub fn ideal_equality(
        &self,
        gens_a: &[Polynomial],
        gens_b: &[Polynomial],
        order: &MonomialOrder,
    ) -> Result<bool> {
        Ok(self.basis(gens_a, order)?.basis() == self.basis(gens_b, order)?.basis())
    }
}
