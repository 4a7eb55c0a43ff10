//! `diracred`: generate monogenic polynomials, run verification suites and
//! list kernel bases.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod config;

/// `println!` that tolerates a closed pipe, e.g. output piped into `head`.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use config::{check_cap, load_metric, parse_gamma, parse_indices, Output, RunConfig, UsageError};
use diracred::monogenic::{solution_from_indices, SolutionJson};
use diracred::polymodule::{dirac_kernel, spans};
use diracred::suites::{run_suite, sorted_tuples, Suite, SuiteConfig};
use diracred::{Blade, CliffordElement, Scalar, Status};

#[derive(Parser, Debug)]
#[command(name = "diracred", version, about = "Exact monogenic polynomials and reduction-algebra identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Number of coordinates; inferred from an explicit metric when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// euclidean, lorentzian, offdiag, diag:a,b,..., a JSON matrix, or a file
    /// containing a diag list or JSON matrix.
    #[arg(long, default_value = "euclidean")]
    metric: String,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the solution x̂^{i₁}⋯x̂^{i_m}·p with a Dirac check.
    Solve {
        /// Comma-separated 1-based indices, e.g. "1,2"; "" for none.
        #[arg(long, default_value = "")]
        indices: String,
        /// Right Clifford factor as 1-based γ indices, e.g. "1,3" for γ¹γ³.
        #[arg(long, default_value = "")]
        gamma: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        /// osp, adjoint, projector, diamond, presentation, brackets, product,
        /// solutions or cyclicity.
        suite: String,
        /// Degree bound for suites over polynomial spaces.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Largest number of indices for brackets, products and solutions.
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Random combinations tried by the cyclicity suite.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel basis of the Dirac operator in one degree, the generated
    /// solutions, and whether they span it.
    Basis {
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(UsageError),
    Verification,
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

fn run_config(common: &Common, degree_bound: usize) -> Result<RunConfig, UsageError> {
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err(UsageError("--jobs must be at least 1".into()));
        }
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    check_cap("degree", degree_bound)?;
    let (n, metric) = load_metric(&common.metric, common.n)?;
    Ok(RunConfig { n, metric, metric_label: common.metric.clone(), degree_bound, output: common.output, seed: common.seed })
}

fn library(e: diracred::Error) -> Failure {
    Failure::Usage(e.into())
}

fn cmd_solve(indices: &str, gamma: &str, common: &Common) -> Result<(), Failure> {
    let (_, metric) = load_metric(&common.metric, common.n)?;
    let idx = parse_indices(indices, metric.n())?;
    let cfg = run_config(common, idx.len())?;
    let p = parse_gamma(gamma, &cfg.metric)?;
    let v = solution_from_indices(&cfg.metric, &idx, &p).map_err(library)?;
    let residual = v.dirac();
    let check = if residual.is_zero() { "0".to_string() } else { residual.to_string() };
    match cfg.output {
        Output::Text => {
            say!("{v}");
            say!("dirac_check: {check}");
        }
        Output::Latex => {
            say!("{}", v.to_latex());
            say!("dirac_check: {check}");
        }
        Output::Json => {
            let mut obj = serde_json::to_value(SolutionJson::new(&idx, &p, &v)).expect("serializable");
            obj["dirac_check"] = json!(check);
            say!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
    }
    if residual.is_zero() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_verify(suite: &str, degree: usize, max_m: usize, samples: usize, common: &Common) -> Result<(), Failure> {
    let suite: Suite = suite.parse().map_err(library)?;
    check_cap("max-m", max_m)?;
    let cfg = run_config(common, degree)?;
    if cfg.output == Output::Latex {
        return Err(UsageError("latex output is available for solve and basis only".into()).into());
    }
    let sc = SuiteConfig { degree_bound: cfg.degree_bound, max_m, seed: cfg.seed, samples, ..SuiteConfig::new(&cfg.metric) };
    let report = run_suite(suite, &sc).map_err(library)?;
    match cfg.output {
        Output::Json => {
            let obj = json!({
                "suite": suite.name(),
                "n": cfg.n,
                "metric": cfg.metric_label,
                "passed": report.passed(),
                "counts": {
                    "pass": report.count(Status::Pass),
                    "fail": report.count(Status::Fail),
                    "skipped": report.count(Status::Skipped),
                    "warnings": report.warning_count(),
                },
                "entries": report,
            });
            say!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
        _ => {
            say!("suite {suite}, n = {}, metric {}", cfg.n, cfg.metric_label);
            say!("{report}");
            say!("{}", if report.passed() { "PASS" } else { "FAIL" });
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_basis(degree: usize, common: &Common) -> Result<(), Failure> {
    let cfg = run_config(common, degree)?;
    let metric = &cfg.metric;
    let kernel = dirac_kernel(degree, metric).map_err(library)?;
    let blades: Vec<CliffordElement> =
        Blade::all(cfg.n).into_iter().map(|b| CliffordElement::blade(metric, b, Scalar::one())).collect();
    let mut generated = Vec::new();
    for idx in sorted_tuples(cfg.n, degree) {
        let base = solution_from_indices(metric, &idx, &CliffordElement::one(metric)).map_err(library)?;
        for p in &blades {
            generated.push((idx.clone(), p.clone(), base.right_mul(p).map_err(library)?));
        }
    }
    let polys: Vec<_> = generated.iter().map(|g| g.2.clone()).collect();
    let ok = spans(&kernel, &polys).map_err(library)?;
    match cfg.output {
        Output::Json => {
            let gen: Vec<_> = generated.iter().map(|(i, p, v)| SolutionJson::new(i, p, v)).collect();
            let obj = json!({
                "degree": degree,
                "n": cfg.n,
                "dimension": kernel.dim(),
                "kernel": kernel.to_json(),
                "generated": gen,
                "spans": ok,
            });
            say!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
        out => {
            let render = |v: &diracred::CliffordPolynomial| if out == Output::Latex { v.to_latex() } else { v.to_string() };
            say!("kernel basis, degree {degree}, n = {}, dimension {}", cfg.n, kernel.dim());
            for (k, v) in kernel.vectors.iter().enumerate() {
                say!("  [{}] {}", k + 1, render(v));
            }
            say!("generated solutions: {}", generated.len());
            for (idx, p, v) in &generated {
                let word: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                say!("  indices ({}) * {p}: {}", word.join(","), render(v));
            }
            say!("spans: {ok}");
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { indices, gamma, common } => cmd_solve(indices, gamma, common),
        Command::Verify { suite, degree, max_m, samples, common } => cmd_verify(suite, *degree, *max_m, *samples, common),
        Command::Basis { degree, common } => cmd_basis(*degree, common),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
