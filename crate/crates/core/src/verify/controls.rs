//! Negative controls: each feeds a check a deliberately wrong ingredient and
//! passes only if the check fails with a witness.

use super::checks::*;
use super::report::{CheckResult, Scope, Witness};
use crate::error::Result;
use crate::generators::{f_check, ideal_generators, GeneratorMatrix, Mode};
use crate::groebner::GroebnerEngine;
use crate::hessenberg::{fixed_points, HessenbergFunction, Permutation, DEFAULT_FIXED_POINT_CAP};
use crate::polyring::{elementary_symmetric, power_sum, Polynomial};

pub const NEGATIVE_CONTROLS: &str = "negative-controls";

type Mutant = fn(&GroebnerEngine) -> Result<CheckResult>;

#[derive(Clone, Copy)]
pub struct NegativeControl {
    pub name: &'static str,
    pub target: &'static str,
    mutant: Mutant,
}

impl std::fmt::Debug for NegativeControl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NegativeControl")
            .field("name", &self.name)
            .field("target", &self.target)
            .finish()
    }
}

impl NegativeControl {
    /// The mutated check's own result (expected to fail).
    pub fn run_mutant(&self, engine: &GroebnerEngine) -> Result<CheckResult> {
        (self.mutant)(engine)
    }

    /// Passes iff the mutant fails and names a witness.
    pub fn run(&self, engine: &GroebnerEngine) -> Result<CheckResult> {
        let mutant = self.run_mutant(engine)?;
        let scope = Scope::default()
            .with("mutation", self.name)
            .with("target", self.target);
        Ok(match (mutant.passed, mutant.witness) {
            (false, Some(w)) => {
                let caught = match &w.residue {
                    Some(r) => format!("{}: {r}", w.subject),
                    None => w.subject.clone(),
                };
                CheckResult::pass(NEGATIVE_CONTROLS, scope.with("caught", caught))
            }
            (false, None) => CheckResult::fail(
                NEGATIVE_CONTROLS,
                scope,
                Witness::new(format!("{} failed without a witness", self.name)),
            ),
            (true, _) => CheckResult::fail(
                NEGATIVE_CONTROLS,
                scope,
                Witness::new(format!("mutation {} went undetected", self.name)),
            ),
        })
    }
}

fn h233() -> HessenbergFunction {
    HessenbergFunction::parse(&[2, 3, 3]).expect("valid")
}

fn example_sign_flip(_: &GroebnerEngine) -> Result<CheckResult> {
    let mut printed = example_n4_printed();
    for e in printed.iter_mut().filter(|e| (e.i, e.j) == (2, 1)) {
        e.polynomial = -&e.polynomial;
    }
    check_example_n4_with(&printed, &*GeneratorMatrix::shared(4)?)
}

fn closed_form_perturbed(_: &GroebnerEngine) -> Result<CheckResult> {
    let n = 4;
    let matrix = GeneratorMatrix::shared(n)?;
    let bump = &(&Polynomial::x(n, 1) * &Polynomial::x(n, 2)) * &Polynomial::t(n);
    check_closed_form_with(
        n,
        |i, j| matrix.get(i, j),
        |i, j| {
            let f = matrix.get(i, j)?;
            Ok(if (i, j) == (4, 2) { &f + &bump } else { f })
        },
    )
}

fn t_specialization_sign_flip(_: &GroebnerEngine) -> Result<CheckResult> {
    let n = 4;
    check_t_specialization_with(
        n,
        |i, j| {
            let f = f_check(i, j, n)?;
            Ok(if (i, j) == (3, 1) { -&f } else { f })
        },
        &*GeneratorMatrix::shared(n)?,
    )
}

fn homogeneity_constant(_: &GroebnerEngine) -> Result<CheckResult> {
    let mut ideal = ideal_generators(&h233(), Mode::Equivariant)?;
    ideal.generators[0] = &ideal.generators[0] + &Polynomial::one(3);
    Ok(check_homogeneity_with(3, &[ideal]))
}

fn localization_perturbed(_: &GroebnerEngine) -> Result<CheckResult> {
    let h = h233();
    let mut gens = ideal_generators(&h, Mode::Equivariant)?.generators;
    gens[0] = &gens[0] + &Polynomial::t(3).pow(2);
    let points = fixed_points(&h, DEFAULT_FIXED_POINT_CAP)?;
    check_localization_vanishing_with(&h, &points, direct_restriction(&gens))
}

fn localization_non_fixed(_: &GroebnerEngine) -> Result<CheckResult> {
    let h = h233();
    let gens = ideal_generators(&h, Mode::Equivariant)?.generators;
    let mut points = fixed_points(&h, DEFAULT_FIXED_POINT_CAP)?;
    points.push(Permutation::new(vec![2, 3, 1])?);
    check_localization_vanishing_with(&h, &points, direct_restriction(&gens))
}

fn exactness_wrong_criterion(_: &GroebnerEngine) -> Result<CheckResult> {
    let h = h233();
    let gens = ideal_generators(&h, Mode::Equivariant)?.generators;
    let identity = Permutation::identity(3);
    check_fixed_point_exactness_with(&h, |w| *w == identity, direct_restriction(&gens))
}

fn peterson_wrong_t(engine: &GroebnerEngine) -> Result<CheckResult> {
    let linear = |j, n| Ok(&peterson_linear_form(j, n)? + &Polynomial::t(n));
    let relations = peterson_relations_with(3, &linear)?;
    check_peterson_with(3, linear, &relations, engine)
}

fn peterson_missing_p_n(engine: &GroebnerEngine) -> Result<CheckResult> {
    let mut relations = peterson_relations_with(3, &peterson_linear_form)?;
    relations.pop();
    check_peterson_with(3, peterson_linear_form, &relations, engine)
}

fn flag_borel_sign_pattern(engine: &GroebnerEngine) -> Result<CheckResult> {
    let n = 3;
    let mut inputs = FlagBorelInputs::build(n)?;
    inputs.newton = (1..=n)
        .map(|r| {
            let tail: Vec<usize> = (n + 2 - r..=n).collect();
            (0..r).try_fold(Polynomial::zero(n), |acc, i| {
                Ok(&acc + &(&elementary_symmetric(n, i, &tail)? * &power_sum(n, (r - i) as u32)?))
            })
        })
        .collect::<Result<_>>()?;
    let parts = FlagBorelParts {
        termwise: true,
        ideal: false,
        equivariant: false,
    };
    check_flag_borel_with(n, &inputs, parts, engine)
}

fn flag_borel_missing_top(engine: &GroebnerEngine) -> Result<CheckResult> {
    let n = 3;
    let mut inputs = FlagBorelInputs::build(n)?;
    inputs.borel.pop();
    let parts = FlagBorelParts {
        termwise: false,
        ideal: true,
        equivariant: false,
    };
    check_flag_borel_with(n, &inputs, parts, engine)
}

fn hilbert_dropped_generator(engine: &GroebnerEngine) -> Result<CheckResult> {
    let h = h233();
    let mut ordinary = ideal_generators(&h, Mode::Ordinary)?.generators;
    ordinary.pop();
    let equivariant = ideal_generators(&h, Mode::Equivariant)?.generators;
    check_hilbert_with(&h, &ordinary, &equivariant, &hilbert_product(&h), engine)
}

fn hilbert_shifted_product(engine: &GroebnerEngine) -> Result<CheckResult> {
    let h = h233();
    let ordinary = ideal_generators(&h, Mode::Ordinary)?.generators;
    let equivariant = ideal_generators(&h, Mode::Equivariant)?.generators;
    // one extra power per factor
    let shifted = HessenbergFunction::parse(&[3, 3, 3])?;
    check_hilbert_with(
        &h,
        &ordinary,
        &equivariant,
        &hilbert_product(&shifted),
        engine,
    )
}

/// Every negative control, in report order.
pub fn negative_controls() -> Vec<NegativeControl> {
    let c = |name, target, mutant| NegativeControl {
        name,
        target,
        mutant,
    };
    vec![
        c(
            "example-n4/sign-flipped-f21",
            EXAMPLE_N4,
            example_sign_flip as Mutant,
        ),
        c(
            "closed-form/perturbed-entry",
            CLOSED_FORM,
            closed_form_perturbed,
        ),
        c(
            "t-specialization/sign-flipped-entry",
            T_SPECIALIZATION,
            t_specialization_sign_flip,
        ),
        c(
            "homogeneity/constant-added",
            HOMOGENEITY,
            homogeneity_constant,
        ),
        c(
            "localization-vanishing/perturbed-generator",
            LOCALIZATION_VANISHING,
            localization_perturbed,
        ),
        c(
            "localization-vanishing/non-fixed-permutation",
            LOCALIZATION_VANISHING,
            localization_non_fixed,
        ),
        c(
            "fixed-point-exactness/wrong-criterion",
            FIXED_POINT_EXACTNESS,
            exactness_wrong_criterion,
        ),
        c("peterson/wrong-t-coefficient", PETERSON, peterson_wrong_t),
        c("peterson/missing-p_n", PETERSON, peterson_missing_p_n),
        c(
            "flag-borel/unsigned-expansion",
            FLAG_BOREL,
            flag_borel_sign_pattern,
        ),
        c(
            "flag-borel/missing-top-elementary",
            FLAG_BOREL,
            flag_borel_missing_top,
        ),
        c(
            "hilbert/dropped-generator",
            HILBERT,
            hilbert_dropped_generator,
        ),
        c("hilbert/shifted-product", HILBERT, hilbert_shifted_product),
    ]
}
