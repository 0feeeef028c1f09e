//! The individual checks. Each `*_with` variant takes every ingredient as an
//! argument so that negative controls can feed it perturbed inputs; the plain
//! variants build the genuine ingredients and delegate.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::report::{CheckResult, Scope, Witness};
use crate::error::{Error, Result};
use crate::generators::{
    f_check, ideal_generators, p, specialize_t_zero, DeltaTable, GeneratorMatrix, Mode,
    PresentedIdeal,
};
use crate::groebner::{
    format_q_polynomial, hilbert_series, standard_monomials, GroebnerEngine, MonomialOrder,
    QuotientDimension,
};
use crate::hessenberg::{
    enumerate_all, fixed_points, oracle_fixed_point_check, HessenbergFunction, Permutation,
    DEFAULT_ENUMERATION_CAP, DEFAULT_FIXED_POINT_CAP,
};
use crate::polyring::{
    elementary_symmetric, elementary_symmetric_all, power_sum, rational, Assignment, Polynomial,
    Rational, Var,
};

pub const EXAMPLE_N4: &str = "example-n4";
pub const CLOSED_FORM: &str = "closed-form";
pub const T_SPECIALIZATION: &str = "t-specialization";
pub const HOMOGENEITY: &str = "homogeneity";
pub const LOCALIZATION_VANISHING: &str = "localization-vanishing";
pub const FIXED_POINT_EXACTNESS: &str = "fixed-point-exactness";
pub const PETERSON: &str = "peterson";
pub const FLAG_BOREL: &str = "flag-borel";
pub const HILBERT: &str = "hilbert";

fn label(name: &str, i: usize, j: usize) -> String {
    format!("{name}_{{{i},{j}}}")
}

fn difference(
    subject: String,
    indices: &[usize],
    lhs: &Polynomial,
    rhs: &Polynomial,
) -> Option<Witness> {
    let residue = lhs - rhs;
    (!residue.is_zero()).then(|| Witness::new(subject).residue(residue).indices(indices))
}

/// One of the seven `n = 4` displays, rebuilt from its printed factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedEntry {
    pub i: usize,
    pub j: usize,
    pub polynomial: Polynomial,
}

/// The `n = 4` table as printed: `f_{i,i} = p_i` and six factored entries.
pub fn example_n4_printed() -> Vec<PrintedEntry> {
    let n = 4;
    let x = |k| Polynomial::x(n, k);
    let t = Polynomial::t(n);
    let pp = |k| p(k, n).expect("k <= 4");
    // (x_a - x_b - t)
    let d = |a, b| &(&x(a) - &x(b)) - &t;

    let f32 = &(&d(1, 2) * &pp(1)) + &(&d(2, 3) * &pp(2));
    let mut out: Vec<PrintedEntry> = (1..=4)
        .map(|i| PrintedEntry {
            i,
            j: i,
            polynomial: pp(i),
        })
        .collect();
    let mut push = |i, j, polynomial| out.push(PrintedEntry { i, j, polynomial });
    push(2, 1, &d(1, 2) * &pp(1));
    push(3, 2, f32.clone());
    push(4, 3, &f32 + &(&d(3, 4) * &pp(3)));
    push(3, 1, &(&d(1, 3) * &d(1, 2)) * &pp(1));
    push(
        4,
        2,
        &(&(&d(1, 3) * &d(1, 2)) * &pp(1)) + &(&d(2, 4) * &f32),
    );
    push(4, 1, &(&(&d(1, 4) * &d(1, 3)) * &d(1, 2)) * &pp(1));
    out
}

pub fn check_example_n4() -> Result<CheckResult> {
    check_example_n4_with(&example_n4_printed(), &*GeneratorMatrix::shared(4)?)
}

pub fn check_example_n4_with(
    printed: &[PrintedEntry],
    matrix: &GeneratorMatrix,
) -> Result<CheckResult> {
    let scope = Scope::n(4).with("entries", printed.len());
    let witness = printed.iter().find_map(|e| {
        difference(
            format!("printed {} minus recursion", label("f", e.i, e.j)),
            &[e.i, e.j],
            &e.polynomial,
            matrix.entry(e.i, e.j),
        )
    });
    Ok(CheckResult::from_witness(EXAMPLE_N4, scope, witness))
}

/// Compares two lower-triangular tables entry by entry.
fn check_entrywise(
    name: &str,
    n: usize,
    what: &str,
    lhs: impl Fn(usize, usize) -> Result<Polynomial>,
    rhs: impl Fn(usize, usize) -> Result<Polynomial>,
) -> Result<CheckResult> {
    let scope = Scope::n(n).with("entries", n * (n + 1) / 2);
    for i in 1..=n {
        for j in 1..=i {
            if let Some(w) = difference(label(what, i, j), &[i, j], &lhs(i, j)?, &rhs(i, j)?) {
                return Ok(CheckResult::fail(name, scope, w));
            }
        }
    }
    Ok(CheckResult::pass(name, scope))
}

/// Recursion against the diagonal sums of `Δ` for every `(i, j)`.
pub fn check_closed_form(n: usize) -> Result<CheckResult> {
    let matrix = GeneratorMatrix::shared(n)?;
    let deltas = DeltaTable::new(n)?;
    check_closed_form_with(n, |i, j| matrix.get(i, j), |i, j| deltas.f(i, j))
}

pub fn check_closed_form_with(
    n: usize,
    inductive: impl Fn(usize, usize) -> Result<Polynomial>,
    closed: impl Fn(usize, usize) -> Result<Polynomial>,
) -> Result<CheckResult> {
    check_entrywise(
        CLOSED_FORM,
        n,
        "recursion minus closed form at f",
        inductive,
        closed,
    )
}

/// `f_{i,j}|_{t=0}` against the product formula for every `(i, j)`.
pub fn check_t_specialization(n: usize) -> Result<CheckResult> {
    let matrix = GeneratorMatrix::shared(n)?;
    check_t_specialization_with(n, |i, j| f_check(i, j, n), &matrix)
}

pub fn check_t_specialization_with(
    n: usize,
    product_formula: impl Fn(usize, usize) -> Result<Polynomial>,
    matrix: &GeneratorMatrix,
) -> Result<CheckResult> {
    check_entrywise(
        T_SPECIALIZATION,
        n,
        "t = 0 specialization minus product formula at f",
        |i, j| Ok(specialize_t_zero(matrix.entry(i, j))),
        product_formula,
    )
}

/// Every generator of every presented ideal at this `n` (both modes) is
/// homogeneous of weight `h(j) - j + 1`.
pub fn check_homogeneity(n: usize) -> Result<CheckResult> {
    let mut ideals = Vec::new();
    for h in enumerate_all(n, DEFAULT_ENUMERATION_CAP)? {
        for mode in [Mode::Equivariant, Mode::Ordinary] {
            ideals.push(ideal_generators(&h, mode)?);
        }
    }
    Ok(check_homogeneity_with(n, &ideals))
}

pub fn check_homogeneity_with(n: usize, ideals: &[PresentedIdeal]) -> CheckResult {
    let scope = Scope::n(n).with("ideals", ideals.len());
    for ideal in ideals {
        for (j, g) in (1..=ideal.n()).zip(&ideal.generators) {
            let hj = ideal.h.at(j);
            let weight = (hj - j + 1) as u32;
            if !g.is_homogeneous() || g.total_degree() != Some(weight) {
                let w = Witness::new(format!(
                    "{} generator {} of {} is not homogeneous of weight {weight}",
                    ideal.mode.as_str(),
                    label("f", hj, j),
                    ideal.h
                ))
                .residue(g)
                .indices(&[hj, j]);
                return CheckResult::fail(HOMOGENEITY, scope, w);
            }
        }
    }
    CheckResult::pass(HOMOGENEITY, scope)
}

fn check_scan_cap(n: usize) -> Result<()> {
    if n > DEFAULT_FIXED_POINT_CAP {
        return Err(Error::ResourceLimit(format!(
            "scanning all of S_{n} exceeds the cap n <= {DEFAULT_FIXED_POINT_CAP}"
        )));
    }
    Ok(())
}

/// `f(x_k ↦ w(k) t)`.
pub fn restrict_at(f: &Polynomial, w: &Permutation) -> Result<Polynomial> {
    let n = f.n();
    let t = Polynomial::t(n);
    let asg: Assignment = (1..=n)
        .map(|k| (Var::X(k), &Polynomial::integer(n, w.at(k) as i64) * &t))
        .collect();
    f.substitute(&asg)
}

/// Restrictions of every `f_{i,j}` to every permutation, for one `n`.
#[derive(Debug)]
pub struct RestrictionTable {
    n: usize,
    index: HashMap<Permutation, usize>,
    // values[w][(i, j) row-major]
    values: Vec<Vec<Polynomial>>,
}

impl RestrictionTable {
    pub fn new(n: usize) -> Result<Self> {
        check_scan_cap(n)?;
        let matrix = GeneratorMatrix::shared(n)?;
        let perms = Permutation::all(n);
        let mut values = Vec::with_capacity(perms.len());
        for w in &perms {
            values.push(
                matrix
                    .entries()
                    .map(|(_, _, f)| restrict_at(f, w))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let index = perms.into_iter().enumerate().map(|(k, w)| (w, k)).collect();
        Ok(RestrictionTable { n, index, values })
    }

    /// Process-wide memo; concurrent callers for the same `n` wait for one build.
    pub fn shared(n: usize) -> Result<Arc<RestrictionTable>> {
        type Slot = Arc<OnceLock<Arc<RestrictionTable>>>;
        static CACHE: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
        check_scan_cap(n)?;
        GeneratorMatrix::shared(n)?;
        let slot = Arc::clone(
            CACHE
                .get_or_init(Default::default)
                .lock()
                .unwrap()
                .entry(n)
                .or_default(),
        );
        let table = slot
            .get_or_init(|| Arc::new(RestrictionTable::new(n).expect("inputs validated above")));
        Ok(Arc::clone(table))
    }

    pub fn get(&self, i: usize, j: usize, w: &Permutation) -> &Polynomial {
        let entry = (i - 1) * i / 2 + (j - 1);
        &self.values[self.index[w]][entry]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Restriction of generator `j` of `I(h)` read from the shared table.
fn table_restriction(
    h: &HessenbergFunction,
) -> Result<impl Fn(usize, &Permutation) -> Result<Polynomial>> {
    let table = RestrictionTable::shared(h.n())?;
    let h = h.clone();
    Ok(move |j: usize, w: &Permutation| Ok(table.get(h.at(j), j, w).clone()))
}

/// Restriction of `generators[j - 1]` by direct substitution.
pub fn direct_restriction(
    generators: &[Polynomial],
) -> impl Fn(usize, &Permutation) -> Result<Polynomial> + '_ {
    move |j, w| restrict_at(&generators[j - 1], w)
}

pub fn check_localization_vanishing(h: &HessenbergFunction) -> Result<CheckResult> {
    let points = fixed_points(h, DEFAULT_FIXED_POINT_CAP)?;
    check_localization_vanishing_with(h, &points, table_restriction(h)?)
}

pub fn check_localization_vanishing_with(
    h: &HessenbergFunction,
    points: &[Permutation],
    restrict: impl Fn(usize, &Permutation) -> Result<Polynomial>,
) -> Result<CheckResult> {
    let scope = Scope::h(h).with("fixedPoints", points.len());
    for w in points {
        for j in 1..=h.n() {
            let r = restrict(j, w)?;
            if !r.is_zero() {
                let witness = Witness::new(format!(
                    "{} restricted to x_k = w(k) t",
                    label("f", h.at(j), j)
                ))
                .residue(r)
                .permutation(w)
                .indices(&[h.at(j), j]);
                return Ok(CheckResult::fail(LOCALIZATION_VANISHING, scope, witness));
            }
        }
    }
    Ok(CheckResult::pass(LOCALIZATION_VANISHING, scope))
}

pub fn check_fixed_point_exactness(h: &HessenbergFunction) -> Result<CheckResult> {
    let points = fixed_points(h, DEFAULT_FIXED_POINT_CAP)?;
    check_fixed_point_exactness_with(h, |w| points.contains(w), table_restriction(h)?)
}

/// Over all of `S_n`: `w` kills every generator iff `is_fixed(w)`, and
/// `is_fixed` agrees with literal containment `N V_i ⊆ V_{h(i)}`.
pub fn check_fixed_point_exactness_with(
    h: &HessenbergFunction,
    is_fixed: impl Fn(&Permutation) -> bool,
    restrict: impl Fn(usize, &Permutation) -> Result<Polynomial>,
) -> Result<CheckResult> {
    let n = h.n();
    check_scan_cap(n)?;
    let mut count = 0;
    for w in Permutation::all(n) {
        let fixed = is_fixed(&w);
        if fixed != oracle_fixed_point_check(&w, h) {
            let witness = Witness::new(format!(
                "fixed-point criterion says {fixed}, matrix containment says {}",
                !fixed
            ))
            .permutation(&w);
            return Ok(CheckResult::fail(
                FIXED_POINT_EXACTNESS,
                Scope::h(h),
                witness,
            ));
        }
        let mut nonvanishing = None;
        for j in 1..=n {
            let r = restrict(j, &w)?;
            if !r.is_zero() {
                nonvanishing = Some((j, r));
                break;
            }
        }
        let witness = match (&nonvanishing, fixed) {
            (Some((j, r)), true) => Some(
                Witness::new(format!(
                    "fixed point where {} does not vanish",
                    label("f", h.at(*j), *j)
                ))
                .residue(r)
                .permutation(&w)
                .indices(&[h.at(*j), *j]),
            ),
            (None, false) => Some(
                Witness::new("every generator vanishes at a permutation that is not a fixed point")
                    .permutation(&w),
            ),
            _ => None,
        };
        if let Some(witness) = witness {
            return Ok(CheckResult::fail(
                FIXED_POINT_EXACTNESS,
                Scope::h(h),
                witness,
            ));
        }
        count += usize::from(fixed);
    }
    let scope = Scope::h(h)
        .with("permutations", (1..=n).product::<usize>())
        .with("fixedPoints", count);
    Ok(CheckResult::pass(FIXED_POINT_EXACTNESS, scope))
}

/// A generator of one ideal that the other does not contain, if any.
fn ideal_difference(
    engine: &GroebnerEngine,
    order: &MonomialOrder,
    (name_a, a): (&str, &[Polynomial]),
    (name_b, b): (&str, &[Polynomial]),
) -> Result<Option<Witness>> {
    let gb_a = engine.basis(a, order)?;
    let gb_b = engine.basis(b, order)?;
    for (name, gens, other_name, other) in [(name_b, b, name_a, &gb_a), (name_a, a, name_b, &gb_b)]
    {
        for (k, g) in gens.iter().enumerate() {
            let r = other.reduce(g)?;
            if !r.is_zero() {
                return Ok(Some(
                    Witness::new(format!(
                        "generator {} of {name} has nonzero normal form modulo {other_name}",
                        k + 1
                    ))
                    .residue(r)
                    .indices(&[k + 1]),
                ));
            }
        }
    }
    Ok(None)
}

/// `-p_{j-1} + 2 p_j - p_{j+1} - 2t`.
pub fn peterson_linear_form(j: usize, n: usize) -> Result<Polynomial> {
    let two = Polynomial::integer(n, 2);
    Ok(&(&(&(&two * &p(j, n)?) - &p(j - 1, n)?) - &p(j + 1, n)?) - &(&two * &Polynomial::t(n)))
}

/// `{ L_j p_j : 1 <= j < n } ∪ { p_n }` for a family of linear forms `L_j`.
pub fn peterson_relations_with(
    n: usize,
    linear: &impl Fn(usize, usize) -> Result<Polynomial>,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(n);
    for j in 1..n {
        out.push(&linear(j, n)? * &p(j, n)?);
    }
    out.push(p(n, n)?);
    Ok(out)
}

pub fn check_peterson(n: usize, engine: &GroebnerEngine) -> Result<CheckResult> {
    let relations = peterson_relations_with(n, &peterson_linear_form)?;
    check_peterson_with(n, peterson_linear_form, &relations, engine)
}

/// (a) `x_j - x_{j+1} - t = L_j` for `j < n`; (b) `I(2,3,...,n,n)` equals the
/// ideal generated by `relations`.
pub fn check_peterson_with(
    n: usize,
    linear: impl Fn(usize, usize) -> Result<Polynomial>,
    relations: &[Polynomial],
    engine: &GroebnerEngine,
) -> Result<CheckResult> {
    let h = HessenbergFunction::peterson(n);
    let scope = Scope::h(&h);
    let t = Polynomial::t(n);
    for j in 1..n {
        let step = &(&Polynomial::x(n, j) - &Polynomial::x(n, j + 1)) - &t;
        if let Some(w) = difference(
            format!("x_{j} - x_{} - t minus its expression in p", j + 1),
            &[j],
            &step,
            &linear(j, n)?,
        ) {
            return Ok(CheckResult::fail(PETERSON, scope, w));
        }
    }
    let presented = ideal_generators(&h, Mode::Equivariant)?;
    let witness = ideal_difference(
        engine,
        &MonomialOrder::degrevlex(n, Mode::Equivariant),
        ("I(h)", &presented.generators),
        ("the Peterson relations", relations),
    )?;
    Ok(CheckResult::from_witness(PETERSON, scope, witness))
}

/// `sum_{i=0}^{r-1} (-1)^i e_i(x_{n+2-r}, ..., x_n) P_{r-i}(x)` with power sums `P`.
pub fn newton_expansion(r: usize, n: usize) -> Result<Polynomial> {
    let tail: Vec<usize> = (n + 2 - r..=n).collect();
    let mut acc = Polynomial::zero(n);
    for i in 0..r {
        let term = &elementary_symmetric(n, i, &tail)? * &power_sum(n, (r - i) as u32)?;
        acc = if i % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// `e_1, ..., e_n` in `x_1..x_n`.
pub fn borel_generators(n: usize) -> Result<Vec<Polynomial>> {
    (1..=n).map(|i| elementary_symmetric_all(n, i)).collect()
}

/// `e_i(x) - e_i(t, 2t, ..., nt)` for `1 <= i <= n`.
pub fn borel_generators_equivariant(n: usize) -> Result<Vec<Polynomial>> {
    let weights: Vec<Rational> = (1..=n as i64).map(rational).chain([rational(0)]).collect();
    (1..=n)
        .map(|i| {
            let e = elementary_symmetric_all(n, i)?;
            let shift =
                &Polynomial::constant(n, e.evaluate(&weights)?) * &Polynomial::t(n).pow(i as u32);
            Ok(&e - &shift)
        })
        .collect()
}

/// Ingredients of the flag/Borel comparison at one `n`.
#[derive(Debug, Clone)]
pub struct FlagBorelInputs {
    /// `q_1, ..., q_n`
    pub q: Vec<Polynomial>,
    /// Right-hand sides of the power-sum expansion of `q_r`.
    pub newton: Vec<Polynomial>,
    pub borel: Vec<Polynomial>,
    pub borel_equivariant: Vec<Polynomial>,
}

impl FlagBorelInputs {
    pub fn build(n: usize) -> Result<Self> {
        Ok(FlagBorelInputs {
            q: (1..=n)
                .map(|r| crate::generators::q(r, n))
                .collect::<Result<_>>()?,
            newton: (1..=n)
                .map(|r| newton_expansion(r, n))
                .collect::<Result<_>>()?,
            borel: borel_generators(n)?,
            borel_equivariant: borel_generators_equivariant(n)?,
        })
    }
}

/// Which parts of the flag/Borel comparison to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagBorelParts {
    pub termwise: bool,
    pub ideal: bool,
    pub equivariant: bool,
}

pub fn check_flag_borel(
    n: usize,
    parts: FlagBorelParts,
    engine: &GroebnerEngine,
) -> Result<CheckResult> {
    check_flag_borel_with(n, &FlagBorelInputs::build(n)?, parts, engine)
}

pub fn check_flag_borel_with(
    n: usize,
    inputs: &FlagBorelInputs,
    parts: FlagBorelParts,
    engine: &GroebnerEngine,
) -> Result<CheckResult> {
    let h = HessenbergFunction::full_flag(n);
    let mut ran = Vec::new();
    let fail = |ran: &[&str], w| {
        CheckResult::fail(FLAG_BOREL, Scope::h(&h).with("parts", ran.join(",")), w)
    };

    if parts.termwise {
        ran.push("termwise");
        for r in 1..=n {
            let q = &inputs.q[r - 1];
            if let Some(w) = difference(
                format!("q_{r} minus the t = 0 form of f_{{{n},{}}}", n + 1 - r),
                &[r],
                q,
                &f_check(n, n + 1 - r, n)?,
            ) {
                return Ok(fail(&ran, w));
            }
            if let Some(w) = difference(
                format!("q_{r} minus its power-sum expansion"),
                &[r],
                q,
                &inputs.newton[r - 1],
            ) {
                return Ok(fail(&ran, w));
            }
        }
    }

    if parts.ideal {
        ran.push("ideal");
        let order = MonomialOrder::degrevlex(n, Mode::Ordinary);
        let presented = ideal_generators(&h, Mode::Ordinary)?;
        if let Some(w) = ideal_difference(
            engine,
            &order,
            ("I(n,...,n) at t = 0", &presented.generators),
            ("(e_1,...,e_n)", &inputs.borel),
        )? {
            return Ok(fail(&ran, w));
        }
        ran.push("dimension");
        let gb = engine.basis(&presented.generators, &order)?;
        let factorial: usize = (1..=n).product();
        let dim = standard_monomials(&gb).map(|m| m.len());
        if dim.as_ref().ok() != Some(&factorial) {
            let got = match dim {
                Ok(d) => d.to_string(),
                Err(e) => e.to_string(),
            };
            let w =
                Witness::new(format!("quotient dimension is not {n}! = {factorial}")).residue(got);
            return Ok(fail(&ran, w));
        }
    }

    if parts.equivariant {
        ran.push("equivariant");
        let presented = ideal_generators(&h, Mode::Equivariant)?;
        if let Some(w) = ideal_difference(
            engine,
            &MonomialOrder::degrevlex(n, Mode::Equivariant),
            ("I(n,...,n)", &presented.generators),
            ("(e_i(x) - e_i(t,...,nt))", &inputs.borel_equivariant),
        )? {
            return Ok(fail(&ran, w));
        }
    }

    Ok(CheckResult::pass(
        FLAG_BOREL,
        Scope::h(&h).with("parts", ran.join(",")),
    ))
}

/// `prod_j (1 + q + ... + q^{h(j) - j})` in internal weight.
pub fn hilbert_product(h: &HessenbergFunction) -> Vec<i64> {
    let mut acc = vec![1i64];
    for j in 1..=h.n() {
        let len = h.at(j) - j + 1;
        let mut next = vec![0i64; acc.len() + len - 1];
        for (d, c) in acc.iter().enumerate() {
            for e in 0..len {
                next[d + e] += c;
            }
        }
        acc = next;
    }
    acc
}

pub fn check_hilbert(h: &HessenbergFunction, engine: &GroebnerEngine) -> Result<CheckResult> {
    let ordinary = ideal_generators(h, Mode::Ordinary)?.generators;
    let equivariant = ideal_generators(h, Mode::Equivariant)?.generators;
    check_hilbert_with(h, &ordinary, &equivariant, &hilbert_product(h), engine)
}

/// (a) the ordinary Poincaré polynomial equals `expected`; (b) the quotient
/// dimension is its coefficient sum; (c) the equivariant series is the
/// ordinary one over `(1 - q^2)`. The fixed-point count is reported only.
pub fn check_hilbert_with(
    h: &HessenbergFunction,
    ordinary: &[Polynomial],
    equivariant: &[Polynomial],
    expected: &[i64],
    engine: &GroebnerEngine,
) -> Result<CheckResult> {
    let n = h.n();
    let mut scope = Scope::h(h)
        .with("expected", format_q_polynomial(expected, 2))
        .with(
            "fixedPoints",
            fixed_points(h, DEFAULT_FIXED_POINT_CAP)?.len(),
        );

    let ord =
        hilbert_series(&engine.basis(ordinary, &MonomialOrder::degrevlex(n, Mode::Ordinary))?)?;
    scope = scope.with("poincare", ord.poincare_text());
    let Some(series) = ord.series() else {
        let w =
            Witness::new("ordinary quotient is infinite-dimensional").residue(ord.poincare_text());
        return Ok(CheckResult::fail(HILBERT, scope, w));
    };
    if series != expected {
        let w = Witness::new(format!(
            "Poincare polynomial differs from {}",
            format_q_polynomial(expected, 2)
        ))
        .residue(ord.poincare_text());
        return Ok(CheckResult::fail(HILBERT, scope, w));
    }
    let product_dim: u64 = (1..=n).map(|j| (h.at(j) - j + 1) as u64).product();
    let sum: i64 = series.iter().sum();
    scope = scope.with("dimension", sum);
    if ord.quotient_dimension != QuotientDimension::Finite(product_dim) || sum as u64 != product_dim
    {
        let w = Witness::new(format!("quotient dimension differs from {product_dim}")).residue(sum);
        return Ok(CheckResult::fail(HILBERT, scope, w));
    }

    let eq = hilbert_series(
        &engine.basis(equivariant, &MonomialOrder::degrevlex(n, Mode::Equivariant))?,
    )?;
    if eq.denominator_power != 1 || eq.numerator != series {
        let w = Witness::new(format!(
            "equivariant series is not ({})/(1-q^2)",
            ord.poincare_text()
        ))
        .residue(eq.poincare_text());
        return Ok(CheckResult::fail(HILBERT, scope, w));
    }
    Ok(CheckResult::pass(HILBERT, scope))
}
