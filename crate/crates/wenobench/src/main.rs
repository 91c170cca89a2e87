//! Benchmark runner: single cases, resolution sweeps, and study presets.
//!
//! Configuration comes from an optional plain-text file (`key = value` lines,
//! `[section]` headers and `#` comments ignored) with command-line flags
//! taking precedence. Artifacts are CSV files whose bytes depend only on the
//! resolved configuration.
//!
//! Exit codes: 0 success, 2 usage or configuration error, 3 numerical
//! divergence.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use weno_core::physics::Advection;
use weno_core::problems::{init_scalar, ProblemId};
use weno_core::solver::{integrate_1d, CflRule, SolveOpts};
use weno_core::table::{
    convergence_csv, run_case, run_euler_1d_case, run_scalar_case, run_study, Artifact,
    CaseConfig, LadderRow, SchemeLadder, StudyId, StudyOpts, WeightParams,
};
use weno_core::weights::SchemeId;
use weno_core::WenoError;

#[derive(Parser)]
#[command(name = "wenobench", version, about = "Finite-volume WENO benchmark runner")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one (problem, scheme, resolution) case and write its artifacts
    Run(CommonArgs),
    /// Run a resolution ladder and write a convergence table
    Sweep(CommonArgs),
    /// Run a named study preset (see `--list`)
    Study(StudyArgs),
}

#[derive(Args)]
struct StudyArgs {
    /// Study name
    name: Option<String>,
    /// List available studies and exit
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Plain-text config file: key = value lines; [sections] and # comments ignored
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem id (e.g. slp, euler-sine, riemann2d-cfg9)
    #[arg(long)]
    problem: Option<String>,
    /// Scheme id, or a comma-separated list for sweeps/studies
    #[arg(long)]
    scheme: Option<String>,
    /// Cells per direction
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated resolution ladder (sweeps/studies)
    #[arg(long, value_name = "N,N,...")]
    n_list: Option<String>,
    /// CFL number, or `dx23` for the accuracy-study rule CFL = dx^(2/3)
    #[arg(long)]
    cfl: Option<String>,
    /// Final time
    #[arg(long)]
    t_end: Option<f64>,
    /// Weight regularization epsilon
    #[arg(long)]
    eps: Option<f64>,
    /// Smoothness-ratio exponent p
    #[arg(long)]
    p: Option<f64>,
    /// First-difference factor theta (quartic-difference scheme)
    #[arg(long)]
    theta: Option<f64>,
    /// Quartic-difference exponent J (quartic-difference scheme)
    #[arg(long)]
    jexp: Option<f64>,
    /// Output directory (default: $WENOBENCH_OUTDIR, else ./out)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reconstruct conserved components directly (skip characteristic projection)
    #[arg(long)]
    componentwise: bool,
    /// Also write weight-map samples (scalar problems)
    #[arg(long)]
    imr: bool,
    /// Print the resolved configuration and exit
    #[arg(long)]
    print_config: bool,
    /// Poison one cell with NaN before integrating (failure-path check)
    #[arg(long, hide = true)]
    inject_nan: bool,
}

/// Flat resolved configuration; file values first, flags override.
struct Resolved {
    problem: Option<ProblemId>,
    schemes: Vec<SchemeId>,
    n: Option<usize>,
    n_list: Option<Vec<usize>>,
    cfl: Option<CflRule>,
    t_end: Option<f64>,
    wp: WeightParams,
    out: PathBuf,
    componentwise: bool,
    imr: bool,
    print_config: bool,
    inject_nan: bool,
}

fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('[') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected `key = value`", path.display(), lineno + 1))?;
        let key = key.trim().to_ascii_lowercase().replace('-', "_");
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn parse_cfl(s: &str) -> Result<CflRule> {
    let t = s.trim().to_ascii_lowercase();
    if t == "dx23" || t == "dx^2/3" {
        return Ok(CflRule::DxTwoThirds);
    }
    let v: f64 = t
        .parse()
        .map_err(|_| anyhow!("invalid cfl `{s}` (expected a number or `dx23`)"))?;
    if !(v > 0.0) {
        bail!("cfl must be positive, got {v}");
    }
    Ok(CflRule::Fixed(v))
}

fn parse_n_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("invalid resolution `{tok}` in n-list"))
        })
        .collect()
}

fn parse_schemes(s: &str) -> Result<Vec<SchemeId>> {
    s.split(',')
        .map(|tok| SchemeId::parse(tok.trim()).map_err(anyhow::Error::from))
        .collect()
}

fn resolve(args: &CommonArgs) -> Result<Resolved> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => BTreeMap::new(),
    };
    let fget = |key: &str| file.get(key).map(String::as_str);

    let problem = match args.problem.as_deref().or_else(|| fget("problem")) {
        Some(name) => Some(ProblemId::parse(name)?),
        None => None,
    };
    let schemes = match args.scheme.as_deref().or_else(|| fget("scheme")) {
        Some(list) => parse_schemes(list)?,
        None => Vec::new(),
    };
    let n = match args.n {
        Some(v) => Some(v),
        None => fget("n")
            .map(|s| s.parse::<usize>().map_err(|_| anyhow!("invalid n `{s}`")))
            .transpose()?,
    };
    let n_list = match args.n_list.as_deref().or_else(|| fget("n_list")) {
        Some(s) => Some(parse_n_list(s)?),
        None => None,
    };
    let cfl = match args.cfl.as_deref().or_else(|| fget("cfl")) {
        Some(s) => Some(parse_cfl(s)?),
        None => None,
    };
    let t_end = match args.t_end {
        Some(v) => Some(v),
        None => fget("t_end")
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| anyhow!("invalid t_end `{s}`"))
            })
            .transpose()?,
    };

    let mut wp = WeightParams::default();
    let num = |flag: Option<f64>, key: &str| -> Result<Option<f64>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => fget(key)
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| anyhow!("invalid {key} `{s}`"))
                })
                .transpose(),
        }
    };
    if let Some(v) = num(args.eps, "eps")? {
        wp.eps = v;
    }
    if let Some(v) = num(args.p, "p")? {
        wp.p_exp = v;
    }
    if let Some(v) = num(args.theta, "theta")? {
        wp.theta = v;
    }
    if let Some(v) = num(args.jexp, "jexp")? {
        wp.jexp = v;
    }

    let out = args
        .out
        .clone()
        .or_else(|| fget("out").map(PathBuf::from))
        .or_else(|| std::env::var_os("WENOBENCH_OUTDIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"));

    let flag_bool = |flag: bool, key: &str| -> Result<bool> {
        if flag {
            return Ok(true);
        }
        match fget(key) {
            Some(s) => match s.to_ascii_lowercase().as_str() {
                "true" | "1" | "yes" => Ok(true),
                "false" | "0" | "no" => Ok(false),
                other => bail!("invalid {key} `{other}` (expected true/false)"),
            },
            None => Ok(false),
        }
    };

    Ok(Resolved {
        problem,
        schemes,
        n,
        n_list,
        cfl,
        t_end,
        wp,
        out,
        componentwise: flag_bool(args.componentwise, "componentwise")?,
        imr: flag_bool(args.imr, "imr")?,
        print_config: args.print_config,
        inject_nan: args.inject_nan,
    })
}

fn cfl_label(rule: CflRule) -> String {
    match rule {
        CflRule::Fixed(v) => format!("{v}"),
        CflRule::DxTwoThirds => "dx23".to_string(),
    }
}

fn print_resolved(r: &Resolved) {
    let scheme_list: Vec<String> = r.schemes.iter().map(|s| s.label()).collect();
    println!(
        "problem = {}",
        r.problem.map(|p| p.label()).unwrap_or("(unset)")
    );
    println!("scheme = {}", scheme_list.join(","));
    match r.n {
        Some(n) => println!("n = {n}"),
        None => println!("n = (unset)"),
    }
    if let Some(list) = &r.n_list {
        let s: Vec<String> = list.iter().map(|n| n.to_string()).collect();
        println!("n_list = {}", s.join(","));
    }
    println!(
        "cfl = {}",
        r.cfl.map(cfl_label).unwrap_or_else(|| "(unset)".into())
    );
    match r.t_end {
        Some(t) => println!("t_end = {t}"),
        None => println!("t_end = (unset)"),
    }
    println!("eps = {:e}", r.wp.eps);
    println!("p = {}", r.wp.p_exp);
    println!("theta = {}", r.wp.theta);
    println!("jexp = {}", r.wp.jexp);
    println!("out = {}", r.out.display());
    println!("componentwise = {}", r.componentwise);
    println!("imr = {}", r.imr);
}

fn write_artifacts(out: &Path, artifacts: &[Artifact]) -> Result<()> {
    fs::create_dir_all(out)
        .with_context(|| format!("cannot create output directory {}", out.display()))?;
    for a in artifacts {
        let path = out.join(&a.name);
        fs::write(&path, &a.text).with_context(|| format!("cannot write {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Forced failure path: integrate a scalar problem whose initial data holds a
/// NaN, exercising the divergence diagnostics and exit code.
fn run_injected(problem: ProblemId, scheme: SchemeId, n: usize, cfl: CflRule, t_end: f64,
    wp: &WeightParams) -> Result<()> {
    if problem.is_euler() || problem == ProblemId::CriticalRecon {
        bail!("--inject-nan supports the scalar advection problems only");
    }
    let mut f = init_scalar(problem, n);
    f.interior_mut()[n / 2][0] = f64::NAN;
    let ctx = wp.ctx(f.dx);
    let opts = SolveOpts {
        scheme,
        cfl,
        t_end,
        componentwise: false,
    };
    integrate_1d(&Advection, &mut f, &opts, &ctx)?;
    Ok(())
}

fn cmd_run(args: &CommonArgs) -> Result<()> {
    let r = resolve(args)?;
    if r.print_config {
        print_resolved(&r);
        return Ok(());
    }
    let problem = r.problem.ok_or_else(|| anyhow!("missing --problem"))?;
    let scheme = match r.schemes.as_slice() {
        [one] => *one,
        [] => bail!("missing --scheme"),
        _ => bail!("`run` takes a single scheme; use `sweep` or `study` for lists"),
    };
    let n = r.n.ok_or_else(|| anyhow!("missing --n"))?;
    let cfl = r.cfl.unwrap_or(CflRule::DxTwoThirds);
    let t_end = r.t_end.unwrap_or_else(|| problem.default_t_end());

    if r.inject_nan {
        run_injected(problem, scheme, n, cfl, t_end, &r.wp)?;
        return Ok(());
    }

    let cfg = CaseConfig {
        problem,
        scheme,
        n,
        cfl,
        t_end,
        wp: r.wp,
        componentwise: r.componentwise,
        imr: r.imr,
    };
    let artifacts = run_case(&cfg)?;
    write_artifacts(&r.out, &artifacts)
}

fn cmd_sweep(args: &CommonArgs) -> Result<()> {
    let r = resolve(args)?;
    if r.print_config {
        print_resolved(&r);
        return Ok(());
    }
    let problem = r.problem.ok_or_else(|| anyhow!("missing --problem"))?;
    if r.schemes.is_empty() {
        bail!("missing --scheme");
    }
    let ns = r
        .n_list
        .clone()
        .or_else(|| r.n.map(|n| vec![n]))
        .ok_or_else(|| anyhow!("missing --n-list"))?;
    let cfl = r.cfl.unwrap_or(CflRule::DxTwoThirds);
    let t_end = r.t_end.unwrap_or_else(|| problem.default_t_end());

    let mut groups = Vec::new();
    for &scheme in &r.schemes {
        let mut rows = Vec::new();
        for &n in &ns {
            let (l1, linf) = if problem.is_euler() {
                if problem.is_2d() {
                    bail!("`sweep` needs an exact solution; 2D problems have none");
                }
                let c = run_euler_1d_case(problem, scheme, n, cfl, t_end, &r.wp, r.componentwise)?;
                (c.l1, c.linf)
            } else if problem == ProblemId::CriticalRecon {
                let ctx = r.wp.ctx(2.0 / n as f64);
                let e = weno_core::critical::critical_error(scheme, n, &ctx)?;
                (e, e)
            } else {
                let c = run_scalar_case(problem, scheme, n, cfl, t_end, &r.wp)?;
                (c.l1, c.linf)
            };
            eprintln!("{} {} n={}: l1 {l1:.5e}", problem.label(), scheme.label(), n);
            rows.push(LadderRow {
                res: n.to_string(),
                l1,
                linf,
            });
        }
        groups.push(SchemeLadder {
            scheme: scheme.label(),
            rows,
        });
    }
    let csv = convergence_csv("n", &groups);
    let artifacts = [Artifact {
        name: format!("{}_sweep_errors.csv", problem.label()),
        text: csv,
    }];
    write_artifacts(&r.out, &artifacts)
}

fn cmd_study(args: &StudyArgs) -> Result<()> {
    if args.list {
        for s in StudyId::ALL {
            println!("{}", s.label());
        }
        return Ok(());
    }
    let name = args
        .name
        .as_deref()
        .ok_or_else(|| anyhow!("missing study name (try --list)"))?;
    let id = StudyId::parse(name)?;
    let r = resolve(&args.common)?;
    if r.print_config {
        print_resolved(&r);
        return Ok(());
    }
    let opts = StudyOpts {
        schemes: if r.schemes.is_empty() {
            None
        } else {
            Some(r.schemes.clone())
        },
        resolutions: r.n_list.clone().or_else(|| r.n.map(|n| vec![n])),
        verbose: true,
    };
    let artifacts = run_study(id, &opts)?;
    write_artifacts(&r.out, &artifacts)
}

fn is_divergence(err: &anyhow::Error) -> bool {
    matches!(
        err.downcast_ref::<WenoError>(),
        Some(WenoError::Diverged { .. } | WenoError::Unphysical { .. })
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Run(args) => cmd_run(args),
        Cmd::Sweep(args) => cmd_sweep(args),
        Cmd::Study(args) => cmd_study(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if is_divergence(&err) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
