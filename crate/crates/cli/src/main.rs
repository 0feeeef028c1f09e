mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hesscoh_core::generators::{ideal_generators, GeneratorMatrix, Mode};
use hesscoh_core::groebner::{
    hilbert_series, GroebnerCache, GroebnerEngine, MonomialOrder, DEFAULT_PAIR_BUDGET,
};
use hesscoh_core::hessenberg::{
    enumerate_all, fixed_points, HessenbergFunction, DEFAULT_ENUMERATION_CAP,
    DEFAULT_FIXED_POINT_CAP,
};
use hesscoh_core::verify::{
    run_suite, CheckName, SuiteConfig, DEFAULT_N_MAX_GROEBNER, DEFAULT_N_MAX_SYMBOLIC,
};
use hesscoh_core::Error;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Largest `n` for which `generators` builds the full table by default.
const DEFAULT_GENERATOR_CAP: usize = 8;

#[derive(Parser, Debug)]
#[command(
    name = "hesscoh",
    version,
    about = "Cohomology presentations of regular nilpotent Hessenberg varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the presentation Q[x_1..x_n(,t)] / I(h).
    Present {
        #[command(flatten)]
        h: HArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Equivariant)]
        mode: ModeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dump the lower-triangular table of f_{i,j} for one n.
    Generators {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Equivariant)]
        mode: ModeArg,
        /// Refuse tables beyond this n.
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the permutation fixed points of Hess(h).
    FixedPoints {
        #[command(flatten)]
        h: HArg,
        /// Refuse to scan S_n beyond this n.
        #[arg(long, default_value_t = DEFAULT_FIXED_POINT_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Poincaré series, quotient dimension and fixed-point count.
    Hilbert {
        #[command(flatten)]
        h: HArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Equivariant)]
        mode: ModeArg,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run named checks and report.
    Verify {
        /// "all" or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sets both sweep caps.
        #[arg(long)]
        n_max: Option<usize>,
        /// Overrides the cap for Gröbner-backed checks.
        #[arg(long)]
        n_max_groebner: Option<usize>,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Leave out per-check wall-clock times.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List every Hessenberg function for one n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct HArg {
    /// Hessenberg function values, e.g. 2,3,3.
    #[arg(
        long = "h",
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    values: Vec<i64>,
}

impl HArg {
    fn parse(&self) -> Result<HessenbergFunction, Error> {
        Ok(HessenbergFunction::parse(&self.values)?)
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long = "out")]
    out_path: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EngineArgs {
    /// Directory for cached Gröbner bases.
    #[arg(long, env = "HESSCOH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Cap on S-pairs per Gröbner run.
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pair_budget: usize,
}

impl EngineArgs {
    fn engine(&self) -> GroebnerEngine {
        let engine = GroebnerEngine {
            pair_budget: self.pair_budget,
            cache: None,
        };
        match &self.cache_dir {
            Some(dir) => engine.with_cache(GroebnerCache::new(dir)),
            None => engine,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Equivariant,
    Ordinary,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Equivariant => Mode::Equivariant,
            ModeArg::Ordinary => Mode::Ordinary,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ResourceLimit(_) | Error::NotZeroDimensional => EXIT_RESOURCE,
            Error::Io(_) | Error::Json(_) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn emit(out: &OutputArgs, body: &str) -> Result<(), Failure> {
    let written = match &out.out_path {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    written.map_err(|e| Failure {
        code: EXIT_CHECK_FAILED,
        message: format!("cannot write output: {e}"),
    })
}

fn check_cap(n: usize, cap: usize, what: &str) -> Result<(), Failure> {
    if n > cap {
        return Err(Failure::from(Error::ResourceLimit(format!(
            "{what} for n = {n} exceeds the cap {cap} (raise it with --cap)"
        ))));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Present { h, mode, out } => {
            let h = h.parse()?;
            let ideal = ideal_generators(&h, mode.into())?;
            emit(&out, &render::present(&ideal, out.format))?;
        }
        Command::Generators { n, mode, cap, out } => {
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            check_cap(n, cap, "the generator table")?;
            let matrix = GeneratorMatrix::shared(n)?;
            emit(&out, &render::generators(&matrix, mode.into(), out.format))?;
        }
        Command::FixedPoints { h, cap, out } => {
            let h = h.parse()?;
            let points = fixed_points(&h, cap)?;
            emit(&out, &render::fixed_points(&h, &points, out.format))?;
        }
        Command::Hilbert {
            h,
            mode,
            engine,
            out,
        } => {
            let h = h.parse()?;
            let mode: Mode = mode.into();
            let count = fixed_points(&h, DEFAULT_FIXED_POINT_CAP)?.len();
            let ideal = ideal_generators(&h, mode)?;
            let gb = engine
                .engine()
                .basis(&ideal.generators, &MonomialOrder::degrevlex(h.n(), mode))?;
            let data = hilbert_series(&gb)?;
            emit(&out, &render::hilbert(&h, mode, &data, count, out.format))?;
        }
        Command::Verify {
            suite,
            n_max,
            n_max_groebner,
            jobs,
            no_timing,
            engine,
            out,
        } => {
            let names = CheckName::parse_suite(&suite)?;
            let config = SuiteConfig {
                n_max_symbolic: n_max.unwrap_or(DEFAULT_N_MAX_SYMBOLIC),
                n_max_groebner: n_max_groebner.or(n_max).unwrap_or(DEFAULT_N_MAX_GROEBNER),
                jobs,
                timing: !no_timing,
                engine: engine.engine(),
            };
            let report = run_suite(&names, &config)?;
            emit(&out, &render::report(&report, out.format))?;
            if !report.passed {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Enumerate { n, cap, out } => {
            let all = enumerate_all(n, cap)?;
            emit(&out, &render::enumerate(n, &all, out.format))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
