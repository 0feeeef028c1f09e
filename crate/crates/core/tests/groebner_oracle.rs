use std::collections::HashMap;

use hesscoh_core::generators::{ideal_generators, Mode};
use hesscoh_core::groebner::{
    buchberger, hilbert_series, ideal_equality, satisfies_s_pair_criterion, standard_monomials,
    GroebnerCache, GroebnerEngine, MonomialOrder, OrderKind, QuotientDimension,
    DEFAULT_PAIR_BUDGET,
};
use hesscoh_core::hessenberg::{enumerate_all, HessenbergFunction};
use hesscoh_core::polyring::{rational, Monomial, Polynomial, Rational};
use hesscoh_core::verify::checks::hilbert_product;
use hesscoh_core::Error;

fn h(values: &[i64]) -> HessenbergFunction {
    HessenbergFunction::parse(values).unwrap()
}

fn gens(hh: &HessenbergFunction, mode: Mode) -> Vec<Polynomial> {
    ideal_generators(hh, mode).unwrap().generators
}

fn basis(hh: &HessenbergFunction, mode: Mode) -> hesscoh_core::groebner::GroebnerBasis {
    buchberger(
        &gens(hh, mode),
        &MonomialOrder::degrevlex(hh.n(), mode),
        DEFAULT_PAIR_BUDGET,
    )
    .unwrap()
}

/// Exponent vectors of total degree `d` over `vars` variables.
fn compositions(d: u16, vars: usize) -> Vec<Vec<u16>> {
    if vars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|first| {
            compositions(d - first, vars - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn monomials(n: usize, mode: Mode, d: u16) -> Vec<Monomial> {
    match mode {
        Mode::Ordinary => compositions(d, n)
            .iter()
            .map(|e| Monomial::new(e, 0))
            .collect(),
        Mode::Equivariant => compositions(d, n + 1)
            .iter()
            .map(|e| Monomial::new(&e[..n], e[n]))
            .collect(),
    }
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let zero = rational(0);
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != zero) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut().filter(|row| row[c] != zero) {
            let factor = &row[c] / &pivot_row[c];
            for (entry, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *entry = &*entry - &(&factor * p);
            }
        }
        r += 1;
    }
    r
}

/// `dim (R / I)_d` from the rank of the degree-`d` slice of the ideal, with
/// no Gröbner basis involved.
fn hilbert_function_by_rank(generators: &[Polynomial], n: usize, mode: Mode, d: u16) -> usize {
    let columns = monomials(n, mode, d);
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in generators {
        let e = g.total_degree().unwrap() as u16;
        if e > d {
            continue;
        }
        for m in monomials(n, mode, d - e) {
            let mut row = vec![rational(0); columns.len()];
            for (mono, c) in g.mul_term(&m, &rational(1)).terms() {
                row[index[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    columns.len() - rank(rows)
}

#[test]
fn hilbert_series_matches_linear_algebra() {
    let mut cases: Vec<(HessenbergFunction, Mode, u16)> = Vec::new();
    for n in 1..=3 {
        for hh in enumerate_all(n, 12).unwrap() {
            cases.push((hh.clone(), Mode::Ordinary, 5));
            cases.push((hh, Mode::Equivariant, 4));
        }
    }
    cases.push((h(&[2, 3, 4, 4]), Mode::Ordinary, 5));
    cases.push((h(&[2, 3, 4, 4]), Mode::Equivariant, 3));
    cases.push((h(&[3, 3, 4, 4]), Mode::Ordinary, 4));
    for (hh, mode, top) in cases {
        let generators = gens(&hh, mode);
        let series = hilbert_series(&basis(&hh, mode)).unwrap();
        let expected = series.coefficients(top as usize + 1);
        for d in 0..=top {
            let by_rank = hilbert_function_by_rank(&generators, hh.n(), mode, d);
            assert_eq!(
                by_rank as i64, expected[d as usize],
                "{hh} {mode:?} degree {d}"
            );
        }
    }
}

#[test]
fn bases_satisfy_the_s_pair_criterion() {
    for n in 1..=3 {
        for hh in enumerate_all(n, 12).unwrap() {
            for mode in [Mode::Ordinary, Mode::Equivariant] {
                assert!(
                    satisfies_s_pair_criterion(&basis(&hh, mode)),
                    "{hh} {mode:?}"
                );
            }
        }
    }
    let sampled = [
        (h(&[2, 3, 4, 4]), Mode::Equivariant),
        (h(&[4, 4, 4, 4]), Mode::Ordinary),
        (h(&[1, 3, 3, 4]), Mode::Equivariant),
        (h(&[2, 3, 4, 5, 5]), Mode::Equivariant),
        (h(&[3, 4, 5, 5, 5]), Mode::Ordinary),
    ];
    for (hh, mode) in sampled {
        assert!(
            satisfies_s_pair_criterion(&basis(&hh, mode)),
            "{hh} {mode:?}"
        );
    }
}

#[test]
fn series_does_not_depend_on_the_order() {
    for n in 1..=4 {
        for hh in enumerate_all(n, 12).unwrap() {
            let g = gens(&hh, Mode::Ordinary);
            let reference = basis(&hh, Mode::Ordinary);
            let kinds: &[OrderKind] = if n <= 3 {
                &[OrderKind::Deglex, OrderKind::Lex]
            } else {
                &[OrderKind::Deglex]
            };
            for &kind in kinds {
                let order = MonomialOrder::standard(kind, n, Mode::Ordinary);
                let other = buchberger(&g, &order, DEFAULT_PAIR_BUDGET).unwrap();
                assert_eq!(
                    hilbert_series(&other).unwrap(),
                    hilbert_series(&reference).unwrap(),
                    "{hh} {kind:?}"
                );
                assert_eq!(
                    standard_monomials(&other).unwrap().len(),
                    standard_monomials(&reference).unwrap().len()
                );
            }
        }
    }
}

#[test]
fn equivariant_series_is_ordinary_over_one_minus_q() {
    for n in 1..=4 {
        for hh in enumerate_all(n, 12).unwrap() {
            let ordinary = hilbert_series(&basis(&hh, Mode::Ordinary)).unwrap();
            let equivariant = hilbert_series(&basis(&hh, Mode::Equivariant)).unwrap();
            assert_eq!(equivariant.denominator_power, 1, "{hh}");
            assert_eq!(equivariant.numerator, ordinary.numerator, "{hh}");
            assert_eq!(equivariant.quotient_dimension, QuotientDimension::Infinite);
        }
    }
}

#[test]
fn quotient_dimension_is_the_product() {
    for n in 1..=5 {
        for hh in enumerate_all(n, 12).unwrap() {
            let data = hilbert_series(&basis(&hh, Mode::Ordinary)).unwrap();
            let product = hilbert_product(&hh).iter().sum::<i64>() as u64;
            assert_eq!(data.quotient_dimension.finite(), Some(product), "{hh}");
        }
    }
}

#[test]
fn standard_monomials_examples() {
    let full = standard_monomials(&basis(&h(&[3, 3, 3]), Mode::Ordinary)).unwrap();
    assert_eq!(full.len(), 6);
    assert_eq!(full[0], Monomial::one(3));
    let point = standard_monomials(&basis(&h(&[1, 2, 3]), Mode::Ordinary)).unwrap();
    assert_eq!(point, vec![Monomial::one(3)]);
    let series = hilbert_series(&basis(&h(&[2, 3, 3]), Mode::Ordinary)).unwrap();
    let mut by_degree = vec![0i64; series.numerator.len()];
    for m in standard_monomials(&basis(&h(&[2, 3, 3]), Mode::Ordinary)).unwrap() {
        by_degree[m.total_degree() as usize] += 1;
    }
    assert_eq!(by_degree, series.numerator);
    assert!(matches!(
        standard_monomials(&basis(&h(&[3, 3, 3]), Mode::Equivariant)),
        Err(Error::NotZeroDimensional)
    ));
}

#[test]
fn poincare_examples() {
    let text = |v: &[i64], mode| hilbert_series(&basis(&h(v), mode)).unwrap().poincare_text();
    assert_eq!(text(&[1], Mode::Equivariant), "1/(1-q^2)");
    assert_eq!(text(&[2, 3, 3], Mode::Ordinary), "1 + 2q^2 + q^4");
    assert_eq!(text(&[3, 3, 3], Mode::Ordinary), "1 + 2q^2 + 2q^4 + q^6");
    assert_eq!(text(&[1, 2, 3], Mode::Ordinary), "1");
}

#[test]
fn pair_budget_is_enforced() {
    let g = gens(&h(&[3, 3, 3]), Mode::Equivariant);
    let order = MonomialOrder::degrevlex(3, Mode::Equivariant);
    assert!(matches!(
        buchberger(&g, &order, 1),
        Err(Error::ResourceLimit(_))
    ));
    assert!(ideal_equality(&g, &g, &order, DEFAULT_PAIR_BUDGET).unwrap());
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let hh = h(&[2, 3, 3]);
    let g = gens(&hh, Mode::Equivariant);
    let order = MonomialOrder::degrevlex(3, Mode::Equivariant);
    let engine = GroebnerEngine::default().with_cache(GroebnerCache::new(dir.path()));
    let first = engine.basis(&g, &order).unwrap();
    let path = dir
        .path()
        .join(format!("{}.json", GroebnerCache::key(&g, &order)));
    assert!(path.exists());
    let cache = GroebnerCache::new(dir.path());
    assert_eq!(cache.load(&g, &order).unwrap(), first);
    // a different order never sees the entry
    let lex = MonomialOrder::standard(OrderKind::Lex, 3, Mode::Equivariant);
    assert!(cache.load(&g, &lex).is_none());
    std::fs::write(&path, b"{not json").unwrap();
    assert!(cache.load(&g, &order).is_none());
    assert_eq!(engine.basis(&g, &order).unwrap(), first);
    assert_eq!(cache.load(&g, &order).unwrap(), first);
}
