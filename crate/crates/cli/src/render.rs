//! Text, JSON and LaTeX renderings of every command's output.
//!
//! JSON documents carry `"schemaVersion": 1` and are pretty-printed with a
//! trailing newline. LaTeX output is a complete document using only
//! `amsmath` and `amssymb`.

use std::fmt::Write as _;

use hesscoh_core::generators::{
    factored_form, polynomial_latex, specialize_t_zero, GeneratorMatrix, Mode, PresentedIdeal,
};
use hesscoh_core::groebner::HilbertData;
use hesscoh_core::hessenberg::{HessenbergFunction, Permutation};
use hesscoh_core::polyring::{Polynomial, Var};
use hesscoh_core::verify::{CheckResult, VerificationReport};
use serde::Serialize;

use crate::Format;

const SCHEMA_VERSION: u32 = 1;

pub const LATEX_PREAMBLE: &str =
    "\\documentclass{article}\n\\usepackage{amsmath,amssymb}\n\\allowdisplaybreaks\n";

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types always serialize");
    s.push('\n');
    s
}

fn latex_document(body: &str) -> String {
    format!("{LATEX_PREAMBLE}\\begin{{document}}\n{body}\\end{{document}}\n")
}

fn variables(n: usize, mode: Mode) -> Vec<Var> {
    let mut vars: Vec<Var> = (1..=n).map(Var::X).collect();
    if mode == Mode::Equivariant {
        vars.push(Var::T);
    }
    vars
}

fn ring_text(n: usize, mode: Mode) -> String {
    let vars: Vec<String> = variables(n, mode).iter().map(ToString::to_string).collect();
    format!("Q[{}]", vars.join(", "))
}

fn ring_latex(n: usize, mode: Mode) -> String {
    let t = if mode == Mode::Equivariant { ",t" } else { "" };
    if n == 1 {
        format!("\\mathbb{{Q}}[x_{{1}}{t}]")
    } else {
        format!("\\mathbb{{Q}}[x_{{1}},\\ldots,x_{{{n}}}{t}]")
    }
}

/// `f_{i,j}` or, at `t = 0`, `f_{i,j}(t=0)`.
fn entry_label(i: usize, j: usize, mode: Mode) -> String {
    match mode {
        Mode::Equivariant => format!("f_{{{i},{j}}}"),
        Mode::Ordinary => format!("f_{{{i},{j}}}(t=0)"),
    }
}

fn entry_label_latex(i: usize, j: usize, mode: Mode) -> String {
    match mode {
        Mode::Equivariant => format!("f_{{{i},{j}}}"),
        Mode::Ordinary => format!("\\check{{f}}_{{{i},{j}}}"),
    }
}

/// Factored form when one is known, expanded otherwise.
fn entry_latex(i: usize, j: usize, n: usize, mode: Mode, f: &Polynomial) -> String {
    factored_form(i, j, n, mode, f)
        .map(|form| form.to_latex())
        .unwrap_or_else(|| polynomial_latex(f))
}

const P_DEFINITION: &str = "where $p_{i} = \\sum_{k=1}^{i} (x_{k} - k t)$ and $p_{0} = 0$.\n";

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Entry<'a> {
    i: usize,
    j: usize,
    polynomial: &'a Polynomial,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PresentJson<'a> {
    schema_version: u32,
    command: &'static str,
    h: &'a HessenbergFunction,
    mode: Mode,
    variables: Vec<Var>,
    generators: Vec<Entry<'a>>,
}

pub fn present(ideal: &PresentedIdeal, format: Format) -> String {
    let n = ideal.n();
    let entries = ideal.labels().into_iter().zip(&ideal.generators);
    match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "ring: {}", ring_text(n, ideal.mode));
            let _ = writeln!(s, "h: {}", ideal.h);
            let _ = writeln!(s, "mode: {}", ideal.mode.as_str());
            let _ = writeln!(s, "generators: {}", n);
            for ((i, j), g) in entries {
                let _ = writeln!(s, "{} = {g}", entry_label(i, j, ideal.mode));
            }
            s
        }
        Format::Json => json(&PresentJson {
            schema_version: SCHEMA_VERSION,
            command: "present",
            h: &ideal.h,
            mode: ideal.mode,
            variables: variables(n, ideal.mode),
            generators: entries
                .map(|((i, j), polynomial)| Entry { i, j, polynomial })
                .collect(),
        }),
        Format::Latex => {
            let ideal_name = match ideal.mode {
                Mode::Equivariant => "I(h)",
                Mode::Ordinary => "\\check{I}(h)",
            };
            let mut body = format!(
                "Presentation for $h = {}$:\n\\[\n  {} / {ideal_name}, \\qquad {ideal_name} = ({})\n\\]\nwith\n\\begin{{align*}}\n",
                ideal.h,
                ring_latex(n, ideal.mode),
                ideal
                    .labels()
                    .iter()
                    .map(|&(i, j)| entry_label_latex(i, j, ideal.mode))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let lines: Vec<String> = entries
                .map(|((i, j), g)| {
                    format!(
                        "  {} &= {}",
                        entry_label_latex(i, j, ideal.mode),
                        entry_latex(i, j, n, ideal.mode, g)
                    )
                })
                .collect();
            body.push_str(&lines.join(" \\\\\n"));
            body.push_str("\n\\end{align*}\n");
            if ideal.mode == Mode::Equivariant {
                body.push_str(P_DEFINITION);
            }
            latex_document(&body)
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GeneratorsJson<'a> {
    schema_version: u32,
    command: &'static str,
    n: usize,
    mode: Mode,
    entries: Vec<Entry<'a>>,
}

pub fn generators(matrix: &GeneratorMatrix, mode: Mode, format: Format) -> String {
    let n = matrix.n();
    let table: Vec<(usize, usize, Polynomial)> = matrix
        .entries()
        .map(|(i, j, f)| {
            let f = match mode {
                Mode::Equivariant => f.clone(),
                Mode::Ordinary => specialize_t_zero(f),
            };
            (i, j, f)
        })
        .collect();
    match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "n: {n}");
            let _ = writeln!(s, "mode: {}", mode.as_str());
            let _ = writeln!(s, "entries: {}", table.len());
            for (i, j, f) in &table {
                let _ = writeln!(s, "{} = {f}", entry_label(*i, *j, mode));
            }
            s
        }
        Format::Json => json(&GeneratorsJson {
            schema_version: SCHEMA_VERSION,
            command: "generators",
            n,
            mode,
            entries: table
                .iter()
                .map(|(i, j, polynomial)| Entry {
                    i: *i,
                    j: *j,
                    polynomial,
                })
                .collect(),
        }),
        Format::Latex => {
            let lines: Vec<String> = table
                .iter()
                .map(|(i, j, f)| {
                    format!(
                        "  {} &= {}",
                        entry_label_latex(*i, *j, mode),
                        entry_latex(*i, *j, n, mode, f)
                    )
                })
                .collect();
            let mut body = format!("The polynomials for $n = {n}$:\n\\begin{{align*}}\n");
            body.push_str(&lines.join(" \\\\\n"));
            body.push_str("\n\\end{align*}\n");
            if mode == Mode::Equivariant {
                body.push_str(P_DEFINITION);
            }
            latex_document(&body)
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FixedPointsJson<'a> {
    schema_version: u32,
    command: &'static str,
    h: &'a HessenbergFunction,
    count: usize,
    fixed_points: &'a [Permutation],
}

pub fn fixed_points(h: &HessenbergFunction, points: &[Permutation], format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("h: {h}\ncount: {}\n", points.len());
            for w in points {
                let _ = writeln!(s, "{w}");
            }
            s
        }
        Format::Json => json(&FixedPointsJson {
            schema_version: SCHEMA_VERSION,
            command: "fixed-points",
            h,
            count: points.len(),
            fixed_points: points,
        }),
        Format::Latex => {
            let list: Vec<String> = points.iter().map(ToString::to_string).collect();
            latex_document(&format!(
                "The ${}$ permutation fixed points for $h = {h}$:\n\\[\n  {}\n\\]\n",
                points.len(),
                list.join(",\\ ")
            ))
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Coefficient {
    degree: usize,
    coefficient: i64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Denominator {
    factor: &'static str,
    power: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct HilbertJson<'a> {
    schema_version: u32,
    command: &'static str,
    h: &'a HessenbergFunction,
    mode: Mode,
    poincare: String,
    numerator: Vec<Coefficient>,
    #[serde(skip_serializing_if = "Option::is_none")]
    denominator: Option<Denominator>,
    quotient_dimension: Option<u64>,
    fixed_points: usize,
}

/// `q^4` → `q^{4}` and `a/b` → `\frac{a}{b}`.
fn poincare_latex(data: &HilbertData) -> String {
    let braces = |s: &str| {
        let mut out = String::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            out.push(c);
            if c == '^' {
                out.push('{');
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    out.push(*d);
                    chars.next();
                }
                out.push('}');
            }
        }
        out
    };
    let top = braces(&hesscoh_core::groebner::format_q_polynomial(
        &data.numerator,
        2,
    ));
    match data.denominator_power {
        0 => top,
        1 => format!("\\frac{{{top}}}{{1-q^{{2}}}}"),
        k => format!("\\frac{{{top}}}{{(1-q^{{2}})^{{{k}}}}}"),
    }
}

pub fn hilbert(
    h: &HessenbergFunction,
    mode: Mode,
    data: &HilbertData,
    fixed_point_count: usize,
    format: Format,
) -> String {
    let dimension = data.quotient_dimension.finite();
    match format {
        Format::Text => {
            let dim = dimension.map_or("infinite".to_string(), |d| d.to_string());
            format!(
                "h: {h}\nmode: {}\npoincare: {}\ndimension: {dim}\nfixed points: {fixed_point_count}\n",
                mode.as_str(),
                data.poincare_text()
            )
        }
        Format::Json => json(&HilbertJson {
            schema_version: SCHEMA_VERSION,
            command: "hilbert",
            h,
            mode,
            poincare: data.poincare_text(),
            numerator: data
                .numerator
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(d, &c)| Coefficient {
                    degree: 2 * d,
                    coefficient: c,
                })
                .collect(),
            denominator: (data.denominator_power > 0).then_some(Denominator {
                factor: "1-q^2",
                power: data.denominator_power,
            }),
            quotient_dimension: dimension,
            fixed_points: fixed_point_count,
        }),
        Format::Latex => {
            let ring = ring_latex(h.n(), mode);
            let ideal = match mode {
                Mode::Equivariant => "I(h)",
                Mode::Ordinary => "\\check{I}(h)",
            };
            let dim = dimension.map_or("\\infty".to_string(), |d| d.to_string());
            latex_document(&format!(
                "Hilbert series of ${ring}/{ideal}$ for $h = {h}$ ($q$ in cohomological degree 2):\n\\[\n  {}\n\\]\nQuotient dimension ${dim}$; ${fixed_point_count}$ permutation fixed points.\n",
                poincare_latex(data)
            ))
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateJson<'a> {
    schema_version: u32,
    command: &'static str,
    n: usize,
    count: usize,
    functions: &'a [HessenbergFunction],
}

pub fn enumerate(n: usize, all: &[HessenbergFunction], format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("n: {n}\ncount: {}\n", all.len());
            for h in all {
                let _ = writeln!(s, "{h}");
            }
            s
        }
        Format::Json => json(&EnumerateJson {
            schema_version: SCHEMA_VERSION,
            command: "enumerate",
            n,
            count: all.len(),
            functions: all,
        }),
        Format::Latex => {
            let list: Vec<String> = all.iter().map(ToString::to_string).collect();
            latex_document(&format!(
                "The ${}$ Hessenberg functions with $n = {n}$:\n\\begin{{gather*}}\n  {}\n\\end{{gather*}}\n",
                all.len(),
                list.join(" \\\\\n  ")
            ))
        }
    }
}

fn scope_text(r: &CheckResult) -> String {
    let mut parts = Vec::new();
    if let Some(h) = &r.scope.h {
        parts.push(format!("h={h}"));
    } else if let Some(n) = r.scope.n {
        parts.push(format!("n={n}"));
    }
    for (k, v) in &r.scope.extra {
        parts.push(format!("{k}={v}"));
    }
    parts.join(" ")
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\textasciicircum{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(c),
        }
    }
    out
}

pub fn report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            for r in &report.results {
                let _ = write!(
                    s,
                    "{} {} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    scope_text(r)
                );
                if let Some(ms) = r.elapsed_ms {
                    let _ = write!(s, " ({ms:.3} ms)");
                }
                s.push('\n');
                if let Some(w) = &r.witness {
                    let _ = writeln!(s, "  witness: {}", w.subject);
                    if let Some(res) = &w.residue {
                        let _ = writeln!(s, "  residue: {res}");
                    }
                    if let Some(p) = &w.permutation {
                        let _ = writeln!(s, "  permutation: {p}");
                    }
                    if let Some(idx) = &w.indices {
                        let _ = writeln!(s, "  indices: {idx:?}");
                    }
                }
            }
            let _ = writeln!(
                s,
                "summary: {} passed, {} failed, {} total",
                report.summary.passed, report.summary.failed, report.summary.total
            );
            s
        }
        Format::Json => json(report),
        Format::Latex => {
            let mut body =
                String::from("\\begin{tabular}{lll}\ncheck & scope & result \\\\\n\\hline\n");
            for r in &report.results {
                let _ = writeln!(
                    body,
                    "{} & {} & {} \\\\",
                    latex_escape(&r.name),
                    latex_escape(&scope_text(r)),
                    if r.passed { "pass" } else { "fail" }
                );
            }
            let _ = write!(
                body,
                "\\end{{tabular}}\n\n{} passed, {} failed.\n",
                report.summary.passed, report.summary.failed
            );
            latex_document(&body)
        }
    }
}
