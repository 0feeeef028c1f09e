//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every criterion is exact (zero tolerance) and must also finish inside its
//! time bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hesscoh_core::generators::ideal_generators;
use hesscoh_core::generators::Mode;
use hesscoh_core::groebner::{hilbert_series, GroebnerEngine, MonomialOrder};
use hesscoh_core::hessenberg::{enumerate_all, HessenbergFunction};
use hesscoh_core::verify::{run_suite, CheckName, SuiteConfig, VerificationReport};
use hesscoh_core::Result;

struct Criterion {
    id: u32,
    title: &'static str,
    bound: Duration,
    run: fn() -> Result<Outcome>,
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite(
    names: &[CheckName],
    n_max_symbolic: usize,
    n_max_groebner: usize,
) -> Result<VerificationReport> {
    let config = SuiteConfig {
        n_max_symbolic,
        n_max_groebner,
        timing: false,
        ..SuiteConfig::default()
    };
    run_suite(names, &config)
}

fn from_report(report: VerificationReport) -> Outcome {
    let detail = match report.failures().next() {
        None => format!("{} checks", report.summary.total),
        Some(f) => {
            let w = f.witness.as_ref().expect("failures carry witnesses");
            format!(
                "{} failed at {:?}: {} {}",
                f.name,
                f.scope,
                w.subject,
                w.residue.as_deref().unwrap_or("")
            )
        }
    };
    Outcome {
        passed: report.passed,
        detail,
    }
}

fn example_n4() -> Result<Outcome> {
    Ok(from_report(suite(&[CheckName::ExampleN4], 0, 0)?))
}

fn closed_form() -> Result<Outcome> {
    Ok(from_report(suite(&[CheckName::ClosedForm], 8, 0)?))
}

fn t_specialization() -> Result<Outcome> {
    Ok(from_report(suite(&[CheckName::TSpecialization], 8, 0)?))
}

fn localization() -> Result<Outcome> {
    Ok(from_report(suite(
        &[CheckName::LocalizationVanishing],
        6,
        0,
    )?))
}

fn exactness() -> Result<Outcome> {
    Ok(from_report(suite(&[CheckName::FixedPointExactness], 5, 0)?))
}

fn peterson() -> Result<Outcome> {
    let report = suite(&[CheckName::Peterson], 0, 4)?;
    let ns: Vec<_> = report.results.iter().filter_map(|r| r.scope.n).collect();
    let mut out = from_report(report);
    out.passed &= ns == [2, 3, 4];
    Ok(out)
}

fn flag_borel() -> Result<Outcome> {
    // termwise through n = 7, ideal equalities and n! through n = 4
    let report = suite(&[CheckName::FlagBorel], 7, 4)?;
    let parts: Vec<_> = report
        .results
        .iter()
        .map(|r| (r.scope.n, r.scope.extra.get("parts").cloned()))
        .collect();
    let mut out = from_report(report);
    out.passed &= parts.len() == 7
        && parts.iter().all(|(n, parts)| {
            let parts = parts.as_deref().unwrap_or("");
            let n = n.unwrap_or(0);
            parts.contains("termwise")
                && (n > 4 || parts.contains("dimension") && parts.contains("equivariant"))
        });
    Ok(out)
}

fn hilbert() -> Result<Outcome> {
    let report = suite(&[CheckName::Hilbert], 0, 4)?;
    let expected_count: usize = (1..=4).map(|n| enumerate_all(n, 12).unwrap().len()).sum();
    let count = report.results.len();
    let mut out = from_report(report);

    let engine = GroebnerEngine::default();
    let series = |h: &HessenbergFunction| -> Result<(String, u64)> {
        let gens = ideal_generators(h, Mode::Ordinary)?.generators;
        let data = hilbert_series(
            &engine.basis(&gens, &MonomialOrder::degrevlex(h.n(), Mode::Ordinary))?,
        )?;
        Ok((
            data.poincare_text(),
            data.quotient_dimension.finite().unwrap_or(0),
        ))
    };
    let peterson = series(&HessenbergFunction::peterson(3))?;
    let flag = series(&HessenbergFunction::full_flag(3))?;
    let named_ok = peterson == ("1 + 2q^2 + q^4".to_string(), 4)
        && flag == ("1 + 2q^2 + 2q^4 + q^6".to_string(), 6);
    out.passed &= count == expected_count && named_ok;
    out.detail = format!(
        "{}; Peterson n=3: {}; flag n=3: {} (dim {})",
        out.detail, peterson.0, flag.0, flag.1
    );
    Ok(out)
}

fn negative_controls() -> Result<Outcome> {
    let report = suite(&[CheckName::NegativeControls], 0, 0)?;
    let mut out = from_report(report);
    out.detail = format!(
        "{} mutations caught",
        out.detail.trim_end_matches(" checks")
    );
    Ok(out)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "n = 4 printed example",
            bound: Duration::from_secs(1),
            run: example_n4,
        },
        Criterion {
            id: 2,
            title: "closed form equals recursion, n <= 8",
            bound: Duration::from_secs(30),
            run: closed_form,
        },
        Criterion {
            id: 3,
            title: "t = 0 specialization, n <= 8",
            bound: Duration::from_secs(30),
            run: t_specialization,
        },
        Criterion {
            id: 4,
            title: "localization vanishing, n <= 6",
            bound: Duration::from_secs(120),
            run: localization,
        },
        Criterion {
            id: 5,
            title: "fixed-point exactness, n <= 5",
            bound: Duration::from_secs(120),
            run: exactness,
        },
        Criterion {
            id: 6,
            title: "Peterson presentation, n <= 4",
            bound: Duration::from_secs(120),
            run: peterson,
        },
        Criterion {
            id: 7,
            title: "flag / Borel comparison",
            bound: Duration::from_secs(300),
            run: flag_borel,
        },
        Criterion {
            id: 8,
            title: "Hilbert series and Betti numbers, n <= 4",
            bound: Duration::from_secs(300),
            run: hilbert,
        },
        Criterion {
            id: 9,
            title: "negative controls",
            bound: Duration::from_secs(30),
            run: negative_controls,
        },
    ];

    let mut all_passed = true;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(o) => (o.passed && elapsed <= c.bound, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all_passed &= passed;
        println!(
            "criterion {}: {} - {} ({:.2?} of {:?}; {detail})",
            c.id,
            if passed { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.bound
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
