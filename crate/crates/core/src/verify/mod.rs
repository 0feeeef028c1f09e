//! Named checks of the presentation, run as a suite into a structured report.
//!
//! Fixed-point restriction is the substitution `x_k ↦ w(k) t`: the class
//! `x_k` restricts at the permutation flag of `w` to the weight of the
//! `w(k)`-th coordinate line, and the circle acts on that line with weight
//! `w(k)`. The localization checks are what validate this convention.

pub mod checks;
mod controls;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

pub use controls::{negative_controls, NegativeControl, NEGATIVE_CONTROLS};
pub use report::{CheckResult, Scope, Summary, VerificationReport, Witness, REPORT_SCHEMA_VERSION};

use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::hessenberg::{enumerate_all, HessenbergFunction, DEFAULT_ENUMERATION_CAP};
use checks::FlagBorelParts;

/// Default largest `n` for purely symbolic sweeps.
pub const DEFAULT_N_MAX_SYMBOLIC: usize = 6;
/// Default largest `n` for sweeps that compute Gröbner bases.
pub const DEFAULT_N_MAX_GROEBNER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    ExampleN4,
    ClosedForm,
    TSpecialization,
    Homogeneity,
    LocalizationVanishing,
    FixedPointExactness,
    Peterson,
    FlagBorel,
    Hilbert,
    NegativeControls,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::ExampleN4,
        CheckName::ClosedForm,
        CheckName::TSpecialization,
        CheckName::Homogeneity,
        CheckName::LocalizationVanishing,
        CheckName::FixedPointExactness,
        CheckName::Peterson,
        CheckName::FlagBorel,
        CheckName::Hilbert,
        CheckName::NegativeControls,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::ExampleN4 => checks::EXAMPLE_N4,
            CheckName::ClosedForm => checks::CLOSED_FORM,
            CheckName::TSpecialization => checks::T_SPECIALIZATION,
            CheckName::Homogeneity => checks::HOMOGENEITY,
            CheckName::LocalizationVanishing => checks::LOCALIZATION_VANISHING,
            CheckName::FixedPointExactness => checks::FIXED_POINT_EXACTNESS,
            CheckName::Peterson => checks::PETERSON,
            CheckName::FlagBorel => checks::FLAG_BOREL,
            CheckName::Hilbert => checks::HILBERT,
            CheckName::NegativeControls => NEGATIVE_CONTROLS,
        }
    }

    /// Whether the check computes Gröbner bases (and so follows the Gröbner cap).
    pub fn uses_groebner(self) -> bool {
        matches!(
            self,
            CheckName::Peterson
                | CheckName::FlagBorel
                | CheckName::Hilbert
                | CheckName::NegativeControls
        )
    }

    /// `"all"` or a comma-separated list of names; duplicates collapse and
    /// the result is in canonical order.
    pub fn parse_suite(list: &str) -> Result<Vec<CheckName>> {
        let mut names = Vec::new();
        for part in list.split(',').map(str::trim) {
            if part == "all" {
                names.extend(CheckName::ALL);
            } else {
                names.push(part.parse()?);
            }
        }
        names.sort();
        names.dedup();
        Ok(names)
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub n_max_symbolic: usize,
    pub n_max_groebner: usize,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Record wall-clock time per check.
    pub timing: bool,
    pub engine: GroebnerEngine,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max_symbolic: DEFAULT_N_MAX_SYMBOLIC,
            n_max_groebner: DEFAULT_N_MAX_GROEBNER,
            jobs: 0,
            timing: true,
            engine: GroebnerEngine::default(),
        }
    }
}

type Task = Box<dyn Fn(&GroebnerEngine) -> Result<CheckResult> + Send + Sync>;

fn per_h(
    n_max: usize,
    f: fn(&HessenbergFunction, &GroebnerEngine) -> Result<CheckResult>,
) -> Result<Vec<Task>> {
    let mut tasks: Vec<Task> = Vec::new();
    for n in 1..=n_max {
        for h in enumerate_all(n, DEFAULT_ENUMERATION_CAP)? {
            tasks.push(Box::new(move |engine| f(&h, engine)));
        }
    }
    Ok(tasks)
}

fn per_n(
    range: std::ops::RangeInclusive<usize>,
    f: fn(usize, &GroebnerEngine) -> Result<CheckResult>,
) -> Vec<Task> {
    range
        .map(|n| Box::new(move |engine: &GroebnerEngine| f(n, engine)) as Task)
        .collect()
}

fn plan(name: CheckName, config: &SuiteConfig) -> Result<Vec<Task>> {
    let sym = config.n_max_symbolic;
    let gro = config.n_max_groebner;
    Ok(match name {
        CheckName::ExampleN4 => vec![Box::new(|_: &GroebnerEngine| checks::check_example_n4())],
        CheckName::ClosedForm => per_n(1..=sym, |n, _| checks::check_closed_form(n)),
        CheckName::TSpecialization => per_n(1..=sym, |n, _| checks::check_t_specialization(n)),
        CheckName::Homogeneity => per_n(1..=sym, |n, _| checks::check_homogeneity(n)),
        CheckName::LocalizationVanishing => {
            per_h(sym, |h, _| checks::check_localization_vanishing(h))?
        }
        CheckName::FixedPointExactness => {
            per_h(sym, |h, _| checks::check_fixed_point_exactness(h))?
        }
        CheckName::Peterson => per_n(2..=gro, checks::check_peterson),
        CheckName::FlagBorel => (1..=sym.max(gro))
            .map(|n| {
                let parts = FlagBorelParts {
                    termwise: n <= sym,
                    ideal: n <= gro,
                    equivariant: n <= gro,
                };
                Box::new(move |engine: &GroebnerEngine| checks::check_flag_borel(n, parts, engine))
                    as Task
            })
            .collect(),
        CheckName::Hilbert => per_h(gro, checks::check_hilbert)?,
        CheckName::NegativeControls => negative_controls()
            .into_iter()
            .map(|c| Box::new(move |engine: &GroebnerEngine| c.run(engine)) as Task)
            .collect(),
    })
}

/// Runs the named checks over their sweeps. Results come back in plan order
/// regardless of `jobs`; resource-limit errors abort the run.
pub fn run_suite(names: &[CheckName], config: &SuiteConfig) -> Result<VerificationReport> {
    let mut tasks = Vec::new();
    for &name in names {
        tasks.extend(plan(name, config)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::argument(format!("cannot start worker pool: {e}")))?;
    let results = pool.install(|| {
        tasks
            .par_iter()
            .map(|task| {
                let start = Instant::now();
                let mut result = task(&config.engine)?;
                if config.timing {
                    let micros = start.elapsed().as_micros() as f64;
                    result.elapsed_ms = Some(micros / 1000.0);
                }
                Ok(result)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(VerificationReport::from_results(results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(CheckName::parse_suite("all").unwrap().len(), 10);
        assert_eq!(
            CheckName::parse_suite("hilbert,example-n4,hilbert").unwrap(),
            vec![CheckName::ExampleN4, CheckName::Hilbert]
        );
        assert!(matches!(
            CheckName::parse_suite("bogus"),
            Err(Error::UnknownCheck(_))
        ));
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
    }

    #[test]
    fn small_suite_passes_in_order() {
        let config = SuiteConfig {
            n_max_symbolic: 3,
            n_max_groebner: 3,
            timing: false,
            ..SuiteConfig::default()
        };
        let report = run_suite(&CheckName::ALL, &config).unwrap();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
        let hilbert: Vec<_> = report
            .results
            .iter()
            .filter(|r| r.name == "hilbert" && r.scope.n == Some(3))
            .collect();
        assert_eq!(hilbert.len(), 5);
        let again = run_suite(&CheckName::ALL, &SuiteConfig { jobs: 1, ..config }).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn every_negative_control_is_caught() {
        let engine = GroebnerEngine::default();
        for control in negative_controls() {
            let mutant = control.run_mutant(&engine).unwrap();
            assert!(!mutant.passed, "{}", control.name);
            assert!(mutant.witness.is_some(), "{}", control.name);
            assert!(control.run(&engine).unwrap().passed);
        }
    }
}
