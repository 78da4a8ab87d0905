//! `sdepth`: Stanley depth of quotients of monomial ideals from the command line.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification
//! failure, 5 size refusal.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sdepth_core::builders::{
    annulus, ci_pair_decomposition, colon_transform, lift_power, product, restrict_to_subring,
    separated_decomposition, staircase_quotient, ColonOutcome,
};
use sdepth_core::certificate::Certificate;
use sdepth_core::papercheck::{run_suite, SuiteConfig, DEFAULT_SEED};
use sdepth_core::solver::{
    depth_closed_form, formula_sdepth, sdepth_auto, sdepth_bounds, Method, SdepthResult, DEFAULT_MAX_POSET,
};
use sdepth_core::verify::verify_with;
use sdepth_core::{
    parse_module, parse_monomial, sdepth_exact, Error, Parallelism, Sdepth, SolverConfig,
    StanleyDecomposition, VarSet,
};

#[derive(Parser)]
#[command(name = "sdepth", version, about = "Stanley depth of quotients J/I of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodFlag {
    Auto,
    Exact,
    Formula,
}

#[derive(clap::Args)]
struct SolveOpts {
    /// Refuse exact search on characteristic posets larger than this.
    #[arg(long, default_value_t = DEFAULT_MAX_POSET)]
    max_poset: usize,
    /// Single-threaded search, for reproducible certificates.
    #[arg(long)]
    deterministic: bool,
}

impl SolveOpts {
    fn parallelism(&self) -> Parallelism {
        if self.deterministic {
            Parallelism::Sequential
        } else {
            Parallelism::Auto
        }
    }

    fn config(&self) -> SolverConfig {
        SolverConfig {
            parallelism: self.parallelism(),
            max_poset: Some(self.max_poset),
            ..SolverConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Stanley depth of a module such as "(x1,x2,x3) / (x1*x2*x3)".
    Sdepth {
        module: String,
        #[arg(long, value_enum, default_value_t = MethodFlag::Auto)]
        method: MethodFlag,
        /// Write a certificate (JSON) for the value.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Number of variables; defaults to the largest index used.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        solve: SolveOpts,
    },
    /// Complete-intersection bounds on the Stanley depth.
    Bounds {
        module: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run one of the decomposition builders and verify its output.
    Decompose {
        #[command(subcommand)]
        builder: Builder,
        /// Write the resulting certificate here.
        #[arg(long, global = true)]
        cert: Option<PathBuf>,
        #[command(flatten)]
        solve: SolveOpts,
    },
    /// Check a certificate file.
    Verify {
        cert: PathBuf,
        #[arg(long)]
        deterministic: bool,
    },
    /// Run the reproducibility suite.
    PaperCheck {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        deterministic: bool,
    },
}

#[derive(Subcommand)]
enum Builder {
    /// (x_v^b, J)/(x_v^b, I) from a certificate of J/I.
    LiftPower {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        var: usize,
        #[arg(long)]
        power: u32,
    },
    /// (x_v^a, J)/(x_v^b, J) from a certificate of S'/J.
    Annulus {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        var: usize,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Product of a certificate of J1/I1 with one of S''/I on disjoint variables.
    Product { first: PathBuf, second: PathBuf },
    /// S/(w) for a monomial w.
    Staircase {
        monomial: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// (u_1..u_m)/(v_1..v_m) for complete intersections with u_i | v_i.
    CiPair {
        module: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Complete-intersection quotient with unpaired generators avoiding I.
    Separated {
        module: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// (J:u)/(I:u) from a certificate of J/I.
    Colon {
        input: PathBuf,
        #[arg(long)]
        by: String,
    },
    /// J/I on the variables --vars from a certificate of (J,u)/(I,u).
    Restrict {
        input: PathBuf,
        #[arg(long)]
        by: String,
        /// 1-based variable indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<usize>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::NotContained { .. } => 2,
            Error::Domain(_) | Error::RingMismatch { .. } => 3,
            Error::SizeLimit { .. } => 5,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    }
}

type CliResult = Result<(), Failure>;

fn read_cert(path: &Path) -> Result<Certificate, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(Certificate::from_json(&text)?)
}

fn read_decomposition(path: &Path) -> Result<StanleyDecomposition, Failure> {
    Ok(read_cert(path)?.decomposition()?)
}

fn write_cert(path: &Path, d: &StanleyDecomposition, method: &str) -> CliResult {
    let c = Certificate::from_decomposition(d, method);
    fs::write(path, c.to_json()).map_err(|e| io_failure(path, e))?;
    println!("certificate: {}", path.display());
    Ok(())
}

fn cmd_sdepth(module: &str, n: Option<usize>, method: MethodFlag, cert: Option<&Path>, opts: &SolveOpts) -> CliResult {
    let m = parse_module(module, n)?;
    let cfg = opts.config();
    let mut res = match method {
        MethodFlag::Auto => sdepth_auto(&m, &cfg)?,
        MethodFlag::Exact => sdepth_exact(&m, &cfg)?,
        MethodFlag::Formula => {
            let (case, value) = formula_sdepth(&m)
                .ok_or_else(|| Error::Domain(format!("no closed form applies to {m}")))?;
            SdepthResult {
                value,
                certificate: None,
                method: Method::ClosedForm(case),
            }
        }
    };
    if cert.is_some() && res.certificate.is_none() {
        let found = sdepth_exact(&m, &cfg)?;
        if found.value != res.value {
            return Err(Failure {
                code: 4,
                msg: format!("{} gave {} but exact search gave {}", res.method, res.value, found.value),
            });
        }
        res.certificate = found.certificate;
    }
    println!("module: {m}");
    println!("sdepth: {} ({})", res.value, res.method);
    if let Ok((lo, hi)) = sdepth_bounds(&m) {
        println!("bounds: [{lo}, {hi}]");
    }
    if let Some(d) = depth_closed_form(&m) {
        println!("depth: {}", d.value);
        let verdict = if res.value >= Sdepth::Finite(d.value) { "ok" } else { "VIOLATED" };
        println!("stanley conjecture: {verdict} ({} >= {})", res.value, d.value);
    }
    if let (Some(path), Some(d)) = (cert, &res.certificate) {
        write_cert(path, d, &res.method.to_string())?;
    }
    Ok(())
}

fn cmd_bounds(module: &str, n: Option<usize>) -> CliResult {
    let m = parse_module(module, n)?;
    let (lo, hi) = sdepth_bounds(&m)?;
    println!("bounds: [{lo}, {hi}]");
    Ok(())
}

fn vars_from(n: usize, ix: &[usize]) -> Result<VarSet, Failure> {
    ix.iter()
        .map(|&i| {
            if i == 0 || i > n {
                Err(Failure {
                    code: 3,
                    msg: format!("variable index {i} outside 1..={n}"),
                })
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

fn var_index(n: usize, v: usize) -> Result<usize, Failure> {
    vars_from(n, &[v]).map(|s| s.iter().next().unwrap())
}

fn cmd_decompose(builder: &Builder, cert: Option<&Path>, opts: &SolveOpts) -> CliResult {
    let d = match builder {
        Builder::LiftPower { input, var, power } => {
            let d = read_decomposition(input)?;
            lift_power(var_index(d.n(), *var)?, *power, &d)?
        }
        Builder::Annulus { input, var, from, to } => {
            let d = read_decomposition(input)?;
            annulus(var_index(d.n(), *var)?, *from, *to, &d)?
        }
        Builder::Product { first, second } => product(&read_decomposition(first)?, &read_decomposition(second)?)?,
        Builder::Staircase { monomial, n } => {
            let w = parse_monomial(monomial, *n)?;
            staircase_quotient(&w, VarSet::full(w.n()))?
        }
        Builder::CiPair { module, n } => ci_pair_decomposition(&parse_module(module, *n)?)?,
        Builder::Separated { module, n } => separated_decomposition(&parse_module(module, *n)?, &opts.config())?,
        Builder::Colon { input, by } => {
            let d = read_decomposition(input)?;
            let u = parse_monomial(by, Some(d.n()))?;
            match colon_transform(&d, &u)? {
                ColonOutcome::Decomposition(c) => c,
                ColonOutcome::Collapsed => {
                    println!("colon collapses: (I:u) = (J:u), the module is zero");
                    return Ok(());
                }
            }
        }
        Builder::Restrict { input, by, vars } => {
            let d = read_decomposition(input)?;
            let u = parse_monomial(by, Some(d.n()))?;
            restrict_to_subring(&d, &u, vars_from(d.n(), vars)?)?
        }
    };
    let report = verify_with(&d, opts.parallelism())?;
    println!("module: {}", d.module());
    println!("decomposition: {d}");
    println!("sdepth: {}", d.sdepth());
    if !report.ok {
        return Err(Failure {
            code: 4,
            msg: format!("builder output failed verification: {:?}", report.violations),
        });
    }
    if let Some(path) = cert {
        write_cert(path, &d, "builder")?;
    }
    Ok(())
}

fn cmd_verify(path: &Path, deterministic: bool) -> CliResult {
    let c = read_cert(path)?;
    let d = c.decomposition()?;
    let par = if deterministic { Parallelism::Sequential } else { Parallelism::Auto };
    let report = verify_with(&d, par)?;
    println!("module: {}", d.module());
    println!("spaces: {}", d.len());
    if !report.ok {
        for v in &report.violations {
            println!("violation: {v}");
        }
        return Err(Failure {
            code: 4,
            msg: format!("{} violations", report.total_violations),
        });
    }
    let claimed = c.claimed_sdepth()?;
    let actual = d.sdepth();
    println!("sdepth: {actual}");
    if claimed != actual {
        return Err(Failure {
            code: 4,
            msg: format!("certificate claims sdepth {claimed}, its spaces give {actual}"),
        });
    }
    println!("ok");
    Ok(())
}

fn cmd_papercheck(max_n: usize, seed: u64, deterministic: bool) -> CliResult {
    let cfg = SuiteConfig {
        max_n,
        seed,
        parallelism: if deterministic { Parallelism::Sequential } else { Parallelism::Auto },
    };
    let reports = run_suite(&cfg);
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        println!("{r}");
    }
    if failed > 0 {
        return Err(Failure {
            code: 4,
            msg: format!("{failed} of {} checks failed", reports.len()),
        });
    }
    println!("all {} checks passed", reports.len());
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match &cli.cmd {
        Cmd::Sdepth {
            module,
            method,
            cert,
            n,
            solve,
        } => cmd_sdepth(module, *n, *method, cert.as_deref(), solve),
        Cmd::Bounds { module, n } => cmd_bounds(module, *n),
        Cmd::Decompose { builder, cert, solve } => cmd_decompose(builder, cert.as_deref(), solve),
        Cmd::Verify { cert, deterministic } => cmd_verify(cert, *deterministic),
        Cmd::PaperCheck {
            max_n,
            seed,
            deterministic,
        } => cmd_papercheck(*max_n, *seed, *deterministic),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
