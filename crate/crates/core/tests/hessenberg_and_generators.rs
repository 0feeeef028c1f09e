use hesscoh_core::generators::{
    f_check, f_closed, f_inductive, ideal_generators, p, q, specialize_t_zero, GeneratorMatrix,
    Mode,
};
use hesscoh_core::hessenberg::{
    enumerate_all, fixed_points, is_fixed_point, oracle_fixed_point_check, HessenbergFunction,
    Permutation,
};
use hesscoh_core::polyring::{
    elementary_symmetric, power_sum, ratio, rational, Polynomial, Rational,
};
use hesscoh_core::verify::checks::{
    check_homogeneity, newton_expansion, peterson_linear_form, restrict_at,
};

fn h(values: &[i64]) -> HessenbergFunction {
    HessenbergFunction::parse(values).unwrap()
}

fn perm(values: &[usize]) -> Permutation {
    Permutation::new(values.to_vec()).unwrap()
}

fn catalan(n: u64) -> u64 {
    // binom(2n, n) / (n + 1), computed incrementally
    let mut c = 1u64;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// A few fixed rational sample points `(x_1, ..., x_n, t)`.
fn sample_points(n: usize) -> Vec<Vec<Rational>> {
    (0..4i64)
        .map(|s| {
            (0..=n as i64)
                .map(|k| ratio(3 * k * k - 5 * s + 2 * k + 1, s + 2))
                .collect()
        })
        .collect()
}

#[test]
fn counts_are_catalan() {
    for n in 1..=8 {
        assert_eq!(
            enumerate_all(n, 12).unwrap().len() as u64,
            catalan(n as u64),
            "n = {n}"
        );
    }
    assert!(enumerate_all(13, 12).is_err());
}

#[test]
fn enumeration_is_sorted_and_valid() {
    let all = enumerate_all(3, 12).unwrap();
    let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
    assert_eq!(
        shown,
        ["(1,2,3)", "(1,3,3)", "(2,2,3)", "(2,3,3)", "(3,3,3)"]
    );
    for n in 1..=6 {
        let all = enumerate_all(n, 12).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn peterson_has_two_to_the_n_minus_one_fixed_points() {
    for n in 1..=7 {
        let count = fixed_points(&HessenbergFunction::peterson(n), 7)
            .unwrap()
            .len();
        assert_eq!(count, 1 << (n - 1), "n = {n}");
    }
}

#[test]
fn full_flag_and_point_fixed_points() {
    for n in 1..=6 {
        let all = fixed_points(&HessenbergFunction::full_flag(n), 7).unwrap();
        assert_eq!(all.len(), (1..=n).product::<usize>());
        let one = fixed_points(&HessenbergFunction::minimal(n), 7).unwrap();
        assert_eq!(one, vec![Permutation::identity(n)]);
    }
    let shown: Vec<String> = fixed_points(&h(&[2, 3, 3]), 7)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(shown, ["123", "132", "213", "321"]);
}

#[test]
fn fixed_points_grow_with_h() {
    for n in 1..=5 {
        let all = enumerate_all(n, 12).unwrap();
        for a in &all {
            let fa = fixed_points(a, 7).unwrap();
            for b in all.iter().filter(|b| a.is_below(b)) {
                let fb = fixed_points(b, 7).unwrap();
                assert!(fa.iter().all(|w| fb.contains(w)), "{a} <= {b}");
            }
        }
    }
}

#[test]
fn criterion_matches_matrix_containment() {
    for n in 1..=6 {
        for hh in enumerate_all(n, 12).unwrap() {
            for w in Permutation::all(n) {
                assert_eq!(
                    is_fixed_point(&w, &hh),
                    oracle_fixed_point_check(&w, &hh),
                    "{hh} {w}"
                );
            }
        }
    }
}

#[test]
fn generator_tables_agree_at_sample_points() {
    // recursion, diagonal sums and (at t = 0) the product formula, compared by value
    for n in 1..=6 {
        let matrix = GeneratorMatrix::new(n).unwrap();
        for (i, j, f) in matrix.entries() {
            let closed = f_closed(i, j, n).unwrap();
            let check = f_check(i, j, n).unwrap();
            for pt in sample_points(n) {
                assert_eq!(f.evaluate(&pt).unwrap(), closed.evaluate(&pt).unwrap());
                let mut at_zero = pt.clone();
                at_zero[n] = rational(0);
                assert_eq!(
                    f.evaluate(&at_zero).unwrap(),
                    check.evaluate(&at_zero).unwrap()
                );
            }
        }
    }
}

#[test]
fn small_entries_by_hand() {
    let n = 2;
    let x1 = Polynomial::x(n, 1);
    let x2 = Polynomial::x(n, 2);
    let t = Polynomial::t(n);
    // (x_1 - x_2 - t)(x_1 - t)
    let expected = &(&(&x1 - &x2) - &t) * &(&x1 - &t);
    assert_eq!(f_inductive(2, 1, n).unwrap(), expected);
    assert_eq!(f_inductive(1, 1, 1).unwrap().to_string(), "x_1 - t");
    assert_eq!(f_inductive(2, 0, 2).unwrap(), Polynomial::zero(2));
    assert_eq!(
        specialize_t_zero(&f_inductive(2, 1, 2).unwrap()),
        &(&x1 - &x2) * &x1
    );
}

#[test]
fn example_selection_for_seven() {
    let ideal = ideal_generators(&h(&[3, 3, 4, 5, 7, 7, 7]), Mode::Equivariant).unwrap();
    assert_eq!(
        ideal.labels(),
        vec![(3, 1), (3, 2), (4, 3), (5, 4), (7, 5), (7, 6), (7, 7)]
    );
    let ordinary = ideal_generators(&h(&[2, 3, 3]), Mode::Ordinary).unwrap();
    assert!(ordinary
        .generators
        .iter()
        .all(|g| !g.involves(hesscoh_core::polyring::Var::T)));
}

#[test]
fn q_is_a_column_of_the_t_free_table_and_expands_in_power_sums() {
    for n in 1..=6 {
        for r in 1..=n {
            let qr = q(r, n).unwrap();
            assert_eq!(qr, f_check(n, n + 1 - r, n).unwrap(), "n = {n}, r = {r}");
            assert_eq!(qr, newton_expansion(r, n).unwrap());
        }
    }
    // q_2 for n = 3 by hand: x_1 (x_1 - x_3) + x_2 (x_2 - x_3) = P_2 - x_3 P_1
    let n = 3;
    let tail = elementary_symmetric(n, 1, &[3]).unwrap();
    let by_hand = &power_sum(n, 2).unwrap() - &(&tail * &power_sum(n, 1).unwrap());
    assert_eq!(q(2, n).unwrap(), by_hand);
}

#[test]
fn peterson_linear_forms() {
    for n in 2..=7 {
        for j in 1..n {
            let lhs = &(&Polynomial::x(n, j) - &Polynomial::x(n, j + 1)) - &Polynomial::t(n);
            assert_eq!(lhs, peterson_linear_form(j, n).unwrap());
        }
    }
    // p_1 = x_1 - t and p_2 = x_1 + x_2 - 3t
    assert_eq!(p(2, 2).unwrap().to_string(), "x_1 + x_2 - 3*t");
}

#[test]
fn restriction_examples() {
    let hh = h(&[2, 3, 3]);
    let gens = ideal_generators(&hh, Mode::Equivariant).unwrap().generators;
    for g in &gens {
        assert!(restrict_at(g, &perm(&[3, 2, 1])).unwrap().is_zero());
    }
    assert!(gens
        .iter()
        .any(|g| !restrict_at(g, &perm(&[2, 3, 1])).unwrap().is_zero()));
    for n in 1..=5 {
        let pn = p(n, n).unwrap();
        for w in Permutation::all(n) {
            assert!(restrict_at(&pn, &w).unwrap().is_zero());
        }
        let id = Permutation::identity(n);
        for j in 1..=n {
            assert!(restrict_at(&p(j, n).unwrap(), &id).unwrap().is_zero());
        }
    }
}

#[test]
fn vanishing_at_integer_points_characterizes_fixed_points() {
    // evaluation at x = w, t = 1 is an independent route to the restriction
    for n in 1..=5 {
        for hh in enumerate_all(n, 12).unwrap() {
            let gens = ideal_generators(&hh, Mode::Equivariant).unwrap().generators;
            for w in Permutation::all(n) {
                let pt: Vec<Rational> = w
                    .one_line()
                    .iter()
                    .map(|&v| rational(v as i64))
                    .chain([rational(1)])
                    .collect();
                let vanishes = gens.iter().all(|g| g.evaluate(&pt).unwrap() == rational(0));
                assert_eq!(vanishes, is_fixed_point(&w, &hh), "{hh} {w}");
            }
        }
    }
}

#[test]
fn generators_are_homogeneous_through_six() {
    for n in 1..=6 {
        assert!(check_homogeneity(n).unwrap().passed, "n = {n}");
    }
}

#[test]
fn invalid_functions_are_rejected_with_codes() {
    let code = |v: &[i64]| HessenbergFunction::parse(v).unwrap_err().code();
    assert_eq!(code(&[]), "empty");
    assert_eq!(code(&[2, 1, 3]), "not-above-diagonal");
    assert_eq!(code(&[3, 2, 3]), "not-weakly-increasing");
    assert_eq!(code(&[2, 4, 4]), "out-of-range");
}
