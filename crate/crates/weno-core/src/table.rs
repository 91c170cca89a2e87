//! Benchmark studies and their CSV artifacts: convergence ladders, long-run
//! oscillation summaries, 2D shock cases, and weight-map samples.
//!
//! Every artifact is deterministic text — rerunning a study with the same
//! configuration reproduces the files byte for byte. Independent
//! (scheme, resolution) cases run in parallel; results are assembled in a
//! fixed order.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::critical::critical_error;
use crate::error::WenoError;
use crate::metrics::{l1_error, linf_error, over_under_shoot, total_variation};
use crate::physics::{euler_primitive_2d, Advection, Euler1D, Euler2D};
use crate::problems::{
    exact_euler_density_averages, exact_scalar_averages, init_euler_1d, init_euler_2d,
    init_scalar, ProblemId,
};
use crate::solver::{integrate_1d, integrate_2d, CflRule, Field1D, RunStats, SolveOpts, NG};
use crate::weights::{scheme_weights_pair, SchemeId, WeightCtx};

/// One output file: a name relative to the output directory, and its text.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub name: String,
    pub text: String,
}

/// Six significant digits, the table style used throughout.
pub fn fmt_e(x: f64) -> String {
    format!("{x:.5e}")
}

fn fmt_order(x: f64) -> String {
    format!("{x:.4}")
}

fn fmt_pct(x: f64) -> String {
    format!("{x:.3}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StudyId {
    Critical,
    EulerIc1,
    EulerIc2,
    Slp,
    HighCrit,
    Riemann2d,
    ShockVortex,
    Imr,
}

impl StudyId {
    pub const ALL: [StudyId; 8] = [
        StudyId::Critical,
        StudyId::EulerIc1,
        StudyId::EulerIc2,
        StudyId::Slp,
        StudyId::HighCrit,
        StudyId::Riemann2d,
        StudyId::ShockVortex,
        StudyId::Imr,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            StudyId::Critical => "critical",
            StudyId::EulerIc1 => "euler-ic1",
            StudyId::EulerIc2 => "euler-ic2",
            StudyId::Slp => "slp",
            StudyId::HighCrit => "high-crit",
            StudyId::Riemann2d => "riemann2d",
            StudyId::ShockVortex => "shock-vortex",
            StudyId::Imr => "imr",
        }
    }

    pub fn parse(name: &str) -> Result<StudyId, WenoError> {
        let want = name.trim().to_ascii_lowercase().replace('_', "-");
        StudyId::ALL
            .iter()
            .copied()
            .find(|s| s.label() == want)
            .ok_or_else(|| {
                let valid: Vec<&str> = StudyId::ALL.iter().map(|s| s.label()).collect();
                WenoError::Config(format!(
                    "unknown study '{name}' (valid: {})",
                    valid.join(", ")
                ))
            })
    }
}

/// Weight-rule parameters shared by every case in a run.
#[derive(Clone, Copy, Debug)]
pub struct WeightParams {
    pub eps: f64,
    pub p_exp: f64,
    pub theta: f64,
    pub jexp: f64,
}

impl Default for WeightParams {
    fn default() -> WeightParams {
        WeightParams {
            eps: 1e-40,
            p_exp: 2.0,
            theta: 0.1,
            jexp: 1.5,
        }
    }
}

impl WeightParams {
    pub fn ctx(&self, dx: f64) -> WeightCtx {
        let mut ctx = WeightCtx::new(dx);
        ctx.eps = self.eps;
        ctx.p_exp = self.p_exp;
        ctx.theta = self.theta;
        ctx.jexp = self.jexp;
        ctx
    }
}

/// Per-study overrides; `None` keeps the study's canonical configuration.
#[derive(Clone, Debug, Default)]
pub struct StudyOpts {
    pub schemes: Option<Vec<SchemeId>>,
    pub resolutions: Option<Vec<usize>>,
    /// Print one progress line per finished case to stderr.
    pub verbose: bool,
}

fn pick_schemes(opts: &StudyOpts, def: &[&str]) -> Vec<SchemeId> {
    match &opts.schemes {
        Some(list) => list.clone(),
        None => def.iter().map(|s| SchemeId::parse(s).unwrap()).collect(),
    }
}

fn pick_ns(opts: &StudyOpts, def: &[usize]) -> Vec<usize> {
    opts.resolutions.clone().unwrap_or_else(|| def.to_vec())
}

// ---------------------------------------------------------------------------
// Convergence-table rendering

pub struct LadderRow {
    pub res: String,
    pub l1: f64,
    pub linf: f64,
}

pub struct SchemeLadder {
    pub scheme: String,
    pub rows: Vec<LadderRow>,
}

/// Unified error-table layout: one row per (scheme, resolution) with
/// refinement orders and errors relative to the ideal-weight baseline,
/// matched by resolution. Cells without a defined value stay empty.
pub fn convergence_csv(res_col: &str, groups: &[SchemeLadder]) -> String {
    let baseline = groups.iter().find(|g| g.scheme == "weno-ilw");
    let mut out = format!("scheme,{res_col},l1,l1_order,linf,linf_order,chi1_pct,chiinf_pct\n");
    for g in groups {
        for (i, row) in g.rows.iter().enumerate() {
            let l1_ord = if i > 0 && row.l1 > 0.0 && g.rows[i - 1].l1 > 0.0 {
                fmt_order((g.rows[i - 1].l1 / row.l1).log2())
            } else {
                String::new()
            };
            let linf_ord = if i > 0 && row.linf > 0.0 && g.rows[i - 1].linf > 0.0 {
                fmt_order((g.rows[i - 1].linf / row.linf).log2())
            } else {
                String::new()
            };
            let (mut chi1, mut chiinf) = (String::new(), String::new());
            if g.scheme != "weno-ilw" {
                if let Some(b) = baseline {
                    if let Some(bref) = b.rows.iter().find(|r| r.res == row.res) {
                        if bref.l1 > 0.0 {
                            chi1 = fmt_pct((row.l1 - bref.l1) / bref.l1 * 100.0);
                        }
                        if bref.linf > 0.0 {
                            chiinf = fmt_pct((row.linf - bref.linf) / bref.linf * 100.0);
                        }
                    }
                }
            }
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                g.scheme,
                row.res,
                fmt_e(row.l1),
                l1_ord,
                fmt_e(row.linf),
                linf_ord,
                chi1,
                chiinf
            )
            .unwrap();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Single-case runners

pub struct ScalarCase {
    pub n: usize,
    pub dx: f64,
    pub x: Vec<f64>,
    pub u: Vec<f64>,
    pub exact: Vec<f64>,
    pub l1: f64,
    pub linf: f64,
    pub stats: RunStats,
    pub field: Field1D<1>,
}

pub fn run_scalar_case(
    problem: ProblemId,
    scheme: SchemeId,
    n: usize,
    cfl: CflRule,
    t_end: f64,
    wp: &WeightParams,
) -> Result<ScalarCase, WenoError> {
    let mut f = init_scalar(problem, n);
    let ctx = wp.ctx(f.dx);
    let opts = SolveOpts {
        scheme,
        cfl,
        t_end,
        componentwise: false,
    };
    let stats = integrate_1d(&Advection, &mut f, &opts, &ctx)?;
    let u: Vec<f64> = f.interior().iter().map(|c| c[0]).collect();
    let exact = exact_scalar_averages(problem, n, t_end);
    let l1 = l1_error(&u, &exact, f.dx);
    let linf = linf_error(&u, &exact);
    let x = (0..n).map(|j| f.cell_center(j)).collect();
    Ok(ScalarCase {
        n,
        dx: f.dx,
        x,
        u,
        exact,
        l1,
        linf,
        stats,
        field: f,
    })
}

pub struct Euler1dCase {
    pub n: usize,
    pub dx: f64,
    pub x: Vec<f64>,
    pub state: Vec<[f64; 3]>,
    pub exact_rho: Vec<f64>,
    pub l1: f64,
    pub linf: f64,
    pub stats: RunStats,
}

pub fn run_euler_1d_case(
    problem: ProblemId,
    scheme: SchemeId,
    n: usize,
    cfl: CflRule,
    t_end: f64,
    wp: &WeightParams,
    componentwise: bool,
) -> Result<Euler1dCase, WenoError> {
    let mut f = init_euler_1d(problem, n);
    let ctx = wp.ctx(f.dx);
    let opts = SolveOpts {
        scheme,
        cfl,
        t_end,
        componentwise,
    };
    let stats = integrate_1d(&Euler1D, &mut f, &opts, &ctx)?;
    let state = f.interior().to_vec();
    let rho: Vec<f64> = state.iter().map(|c| c[0]).collect();
    let exact_rho = exact_euler_density_averages(problem, n, t_end);
    let l1 = l1_error(&rho, &exact_rho, f.dx);
    let linf = linf_error(&rho, &exact_rho);
    let x = (0..n).map(|j| f.cell_center(j)).collect();
    Ok(Euler1dCase {
        n,
        dx: f.dx,
        x,
        state,
        exact_rho,
        l1,
        linf,
        stats,
    })
}

pub struct Euler2dCase {
    pub nx: usize,
    pub ny: usize,
    pub x0: f64,
    pub y0: f64,
    pub dx: f64,
    pub dy: f64,
    /// Interior conserved states, row-major with x contiguous.
    pub field: Vec<[f64; 4]>,
    pub rho_min: f64,
    pub p_min: f64,
    pub stats: RunStats,
}

impl Euler2dCase {
    pub fn density_row(&self, jy: usize) -> Vec<f64> {
        (0..self.nx)
            .map(|jx| self.field[jy * self.nx + jx][0])
            .collect()
    }

    pub fn density_col(&self, jx: usize) -> Vec<f64> {
        (0..self.ny)
            .map(|jy| self.field[jy * self.nx + jx][0])
            .collect()
    }

    /// Row index whose cell centers sit nearest the given y.
    pub fn row_near(&self, y: f64) -> usize {
        let j = ((y - self.y0) / self.dy - 0.5).round() as isize;
        j.clamp(0, self.ny as isize - 1) as usize
    }

    /// Column index whose cell centers sit nearest the given x.
    pub fn col_near(&self, x: f64) -> usize {
        let j = ((x - self.x0) / self.dx - 0.5).round() as isize;
        j.clamp(0, self.nx as isize - 1) as usize
    }

    /// Anisotropic total variation of density: TV summed over every row and
    /// every column.
    pub fn density_tv_total(&self) -> f64 {
        let rows: f64 = (0..self.ny)
            .map(|jy| total_variation(&self.density_row(jy)))
            .sum();
        let cols: f64 = (0..self.nx)
            .map(|jx| total_variation(&self.density_col(jx)))
            .sum();
        rows + cols
    }
}

pub fn run_euler_2d_case(
    problem: ProblemId,
    scheme: SchemeId,
    n: usize,
    cfl: CflRule,
    t_end: f64,
    wp: &WeightParams,
    componentwise: bool,
) -> Result<Euler2dCase, WenoError> {
    let mut f = init_euler_2d(problem, n);
    let ctx = wp.ctx(f.dx);
    let opts = SolveOpts {
        scheme,
        cfl,
        t_end,
        componentwise,
    };
    let stats = integrate_2d(&Euler2D, &mut f, &opts, &ctx)?;
    let mut field = Vec::with_capacity(f.nx * f.ny);
    let mut rho_min = f64::INFINITY;
    let mut p_min = f64::INFINITY;
    for jy in 0..f.ny {
        for jx in 0..f.nx {
            let u = *f.at(jx, jy);
            let prim = euler_primitive_2d(&u);
            rho_min = rho_min.min(prim.0);
            p_min = p_min.min(prim.3);
            field.push(u);
        }
    }
    Ok(Euler2dCase {
        nx: f.nx,
        ny: f.ny,
        x0: f.x0,
        y0: f.y0,
        dx: f.dx,
        dy: f.dy,
        field,
        rho_min,
        p_min,
        stats,
    })
}

// ---------------------------------------------------------------------------
// Field snapshots

pub fn scalar_field_csv(c: &ScalarCase) -> String {
    let mut out = String::from("x,u,exact\n");
    for j in 0..c.n {
        writeln!(
            out,
            "{},{},{}",
            fmt_e(c.x[j]),
            fmt_e(c.u[j]),
            fmt_e(c.exact[j])
        )
        .unwrap();
    }
    out
}

pub fn euler_field_csv(c: &Euler1dCase) -> String {
    let mut out = String::from("x,rho,mom,energy,exact_rho\n");
    for j in 0..c.n {
        let s = c.state[j];
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt_e(c.x[j]),
            fmt_e(s[0]),
            fmt_e(s[1]),
            fmt_e(s[2]),
            fmt_e(c.exact_rho[j])
        )
        .unwrap();
    }
    out
}

pub fn euler2d_density_csv(c: &Euler2dCase) -> String {
    let mut out = String::from("x,y,rho\n");
    for jy in 0..c.ny {
        let y = c.y0 + (jy as f64 + 0.5) * c.dy;
        for jx in 0..c.nx {
            let x = c.x0 + (jx as f64 + 0.5) * c.dx;
            writeln!(
                out,
                "{},{},{}",
                fmt_e(x),
                fmt_e(y),
                fmt_e(c.field[jy * c.nx + jx][0])
            )
            .unwrap();
        }
    }
    out
}

pub fn slice_csv(coord: &str, xs: &[f64], rho: &[f64]) -> String {
    let mut out = format!("{coord},rho\n");
    for (x, r) in xs.iter().zip(rho) {
        writeln!(out, "{},{}", fmt_e(*x), fmt_e(*r)).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// Weight-map samples

/// Record (substencil, JS weight, final weight) for every interface of a
/// field, using the minus-side reconstruction window. This is the empirical
/// map from JS weights to a scheme's weights, observed on real data.
pub fn imr_from_field(
    f: &Field1D<1>,
    scheme: SchemeId,
    ctx: &WeightCtx,
) -> Result<Vec<(usize, f64, f64)>, WenoError> {
    let mut out = Vec::with_capacity(3 * f.n);
    for i in 0..f.n {
        // minus-side window for interface i+1/2: cells i-2..i+2
        let g = NG + i - 2;
        let w = [
            f.data[g][0],
            f.data[g + 1][0],
            f.data[g + 2][0],
            f.data[g + 3][0],
            f.data[g + 4][0],
        ];
        let (wx, wjs) = scheme_weights_pair(scheme, &w, ctx)?;
        for s in 0..3 {
            out.push((s, wjs[s], wx[s]));
        }
    }
    Ok(out)
}

pub fn imr_csv(samples: &[(usize, f64, f64)]) -> String {
    let mut out = String::from("substencil,omega_js,omega_x\n");
    for (s, wjs, wx) in samples {
        writeln!(out, "{},{},{}", s, fmt_e(*wjs), fmt_e(*wx)).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// Studies

pub fn run_study(id: StudyId, opts: &StudyOpts) -> Result<Vec<Artifact>, WenoError> {
    match id {
        StudyId::Critical => study_critical(opts),
        StudyId::EulerIc1 => study_euler(opts, ProblemId::EulerSine, "euler_ic1"),
        StudyId::EulerIc2 => study_euler(opts, ProblemId::EulerNonpolySine, "euler_ic2"),
        StudyId::Slp => study_slp(opts),
        StudyId::HighCrit => study_high_crit(opts),
        StudyId::Riemann2d => study_2d(opts, ProblemId::Riemann2dCfg9),
        StudyId::ShockVortex => study_2d(opts, ProblemId::ShockVortex),
        StudyId::Imr => study_imr(opts),
    }
}

fn study_critical(opts: &StudyOpts) -> Result<Vec<Artifact>, WenoError> {
    let schemes = pick_schemes(
        opts,
        &[
            "weno-ilw",
            "weno-js",
            "weno-z",
            "weno-zeta-tau5",
            "weno-zeta-tau81",
            "weno-zplus",
            "weno-za",
            "weno-d",
            "weno-a",
            "weno-nip",
            "mop-gmweno-z",
            "mop-gmweno-zeta-tau5",
            "mop-gmweno-zeta-tau81",
            "mop-gmweno-zplus",
            "mop-gmweno-za",
            "mop-gmweno-d",
            "mop-gmweno-a",
            "mop-gmweno-nip",
        ],
    );
    let ns = pick_ns(opts, &[160, 320, 640, 1280]);
    // This protocol's calibrated quartic-difference exponent; standalone runs
    // keep the configuration default.
    let wp = WeightParams {
        jexp: 2.0,
        ..WeightParams::default()
    };

    let cases: Vec<(SchemeId, usize)> = schemes
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let errs: Vec<f64> = cases
        .par_iter()
        .map(|&(s, n)| {
            let t0 = Instant::now();
            let ctx = wp.ctx(2.0 / n as f64);
            let e = critical_error(s, n, &ctx)?;
            if opts.verbose {
                eprintln!(
                    "critical {} n={}: {} ({:.1}s)",
                    s.label(),
                    n,
                    fmt_e(e),
                    t0.elapsed().as_secs_f64()
                );
            }
            Ok(e)
        })
        .collect::<Result<Vec<_>, WenoError>>()?;

    let groups: Vec<SchemeLadder> = schemes
        .iter()
        .enumerate()
        .map(|(gi, s)| SchemeLadder {
            scheme: s.label(),
            rows: ns
                .iter()
                .enumerate()
                .map(|(ri, &n)| {
                    let e = errs[gi * ns.len() + ri];
                    LadderRow {
                        res: format!("{}", 2.0 / n as f64),
                        l1: e,
                        linf: e,
                    }
                })
                .collect(),
        })
        .collect();
    Ok(vec![Artifact {
        name: "critical_errors.csv".into(),
        text: convergence_csv("dx", &groups),
    }])
}

fn study_euler(opts: &StudyOpts, problem: ProblemId, tag: &str) -> Result<Vec<Artifact>, WenoError> {
    let def: &[&str] = match problem {
        ProblemId::EulerSine => &[
            "weno-ilw",
            "weno-js",
            "weno-z",
            "mop-gmweno-z",
            "weno-d",
            "weno-a",
            "weno-nip",
        ],
        _ => &["weno-ilw", "weno-js", "weno-z", "mop-gmweno-z", "weno-zplus"],
    };
    let schemes = pick_schemes(opts, def);
    let ns = pick_ns(opts, &[10, 20, 40, 80, 160, 320]);
    let wp = WeightParams::default();
    let t_end = problem.default_t_end();

    let cases: Vec<(SchemeId, usize)> = schemes
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let results: Vec<Euler1dCase> = cases
        .par_iter()
        .map(|&(s, n)| {
            let t0 = Instant::now();
            let c = run_euler_1d_case(problem, s, n, CflRule::DxTwoThirds, t_end, &wp, false)?;
            if opts.verbose {
                eprintln!(
                    "{tag} {} n={}: l1 {} ({:.1}s)",
                    s.label(),
                    n,
                    fmt_e(c.l1),
                    t0.elapsed().as_secs_f64()
                );
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, WenoError>>()?;

    let groups: Vec<SchemeLadder> = schemes
        .iter()
        .enumerate()
        .map(|(gi, s)| SchemeLadder {
            scheme: s.label(),
            rows: ns
                .iter()
                .enumerate()
                .map(|(ri, &n)| {
                    let c = &results[gi * ns.len() + ri];
                    LadderRow {
                        res: n.to_string(),
                        l1: c.l1,
                        linf: c.linf,
                    }
                })
                .collect(),
        })
        .collect();
    Ok(vec![Artifact {
        name: format!("{tag}_errors.csv"),
        text: convergence_csv("n", &groups),
    }])
}

fn study_slp(opts: &StudyOpts) -> Result<Vec<Artifact>, WenoError> {
    let schemes = pick_schemes(
        opts,
        &[
            "weno-z",
            "mop-gmweno-z",
            "weno-zeta-tau81",
            "mop-gmweno-zeta-tau81",
            "weno-nip",
            "mop-gmweno-nip",
        ],
    );
    let ns = pick_ns(opts, &[1600]);
    let wp = WeightParams::default();

    let cases: Vec<(SchemeId, usize)> = schemes
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let results: Vec<ScalarCase> = cases
        .par_iter()
        .map(|&(s, n)| {
            let t0 = Instant::now();
            let c = run_scalar_case(ProblemId::Slp, s, n, CflRule::Fixed(0.1), 200.0, &wp)?;
            if opts.verbose {
                eprintln!(
                    "slp {} n={}: l1 {} ({:.1}s)",
                    s.label(),
                    n,
                    fmt_e(c.l1),
                    t0.elapsed().as_secs_f64()
                );
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, WenoError>>()?;

    let mut summary = String::from("scheme,n,l1,linf,overshoot,undershoot,tv\n");
    let mut artifacts = Vec::new();
    for (ci, &(s, n)) in cases.iter().enumerate() {
        let c = &results[ci];
        // the profile's exact range is [0, 1]
        let (over, under) = over_under_shoot(&c.u, 0.0, 1.0);
        writeln!(
            summary,
            "{},{},{},{},{},{},{}",
            s.label(),
            n,
            fmt_e(c.l1),
            fmt_e(c.linf),
            fmt_e(over),
            fmt_e(under),
            fmt_e(total_variation(&c.u))
        )
        .unwrap();
        artifacts.push(Artifact {
            name: format!("slp_{}_n{}_field.csv", s.label(), n),
            text: scalar_field_csv(c),
        });
    }
    artifacts.insert(
        0,
        Artifact {
            name: "slp_summary.csv".into(),
            text: summary,
        },
    );
    Ok(artifacts)
}

fn study_high_crit(opts: &StudyOpts) -> Result<Vec<Artifact>, WenoError> {
    let schemes = pick_schemes(opts, &["weno-ilw", "weno-js", "weno-z", "mop-gmweno-z"]);
    let ns = pick_ns(opts, &[300]);
    let wp = WeightParams::default();

    let cases: Vec<(SchemeId, usize)> = schemes
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let results: Vec<ScalarCase> = cases
        .par_iter()
        .map(|&(s, n)| {
            let t0 = Instant::now();
            let c = run_scalar_case(
                ProblemId::HighCrit,
                s,
                n,
                CflRule::DxTwoThirds,
                300.0,
                &wp,
            )?;
            if opts.verbose {
                eprintln!(
                    "high-crit {} n={}: l1 {} ({:.1}s)",
                    s.label(),
                    n,
                    fmt_e(c.l1),
                    t0.elapsed().as_secs_f64()
                );
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, WenoError>>()?;

    let groups: Vec<SchemeLadder> = schemes
        .iter()
        .enumerate()
        .map(|(gi, s)| SchemeLadder {
            scheme: s.label(),
            rows: ns
                .iter()
                .enumerate()
                .map(|(ri, &n)| {
                    let c = &results[gi * ns.len() + ri];
                    LadderRow {
                        res: n.to_string(),
                        l1: c.l1,
                        linf: c.linf,
                    }
                })
                .collect(),
        })
        .collect();
    let mut artifacts = vec![Artifact {
        name: "high_crit_errors.csv".into(),
        text: convergence_csv("n", &groups),
    }];
    for (ci, &(s, n)) in cases.iter().enumerate() {
        artifacts.push(Artifact {
            name: format!("high_crit_{}_n{}_field.csv", s.label(), n),
            text: scalar_field_csv(&results[ci]),
        });
    }
    Ok(artifacts)
}

fn study_2d(opts: &StudyOpts, problem: ProblemId) -> Result<Vec<Artifact>, WenoError> {
    let schemes = pick_schemes(opts, &["weno-z", "mop-gmweno-z"]);
    let ns = pick_ns(opts, &[200]);
    let wp = WeightParams::default();
    let t_end = problem.default_t_end();
    let tag = problem.label().replace('-', "_");

    let cases: Vec<(SchemeId, usize)> = schemes
        .iter()
        .flat_map(|&s| ns.iter().map(move |&n| (s, n)))
        .collect();
    let results: Vec<Euler2dCase> = cases
        .par_iter()
        .map(|&(s, n)| {
            let t0 = Instant::now();
            let c = run_euler_2d_case(problem, s, n, CflRule::Fixed(0.5), t_end, &wp, false)?;
            if opts.verbose {
                eprintln!(
                    "{} {} n={}: rho_min {} ({:.1}s)",
                    problem.label(),
                    s.label(),
                    n,
                    fmt_e(c.rho_min),
                    t0.elapsed().as_secs_f64()
                );
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>, WenoError>>()?;

    let mut summary = String::from("scheme,n,rho_min,p_min,tv_total,tv_slice\n");
    let mut artifacts = Vec::new();
    for (ci, &(s, n)) in cases.iter().enumerate() {
        let c = &results[ci];
        // shock-vortex: the horizontal cut at y = 0.65 through the disturbed
        // shock; quadrant Riemann: the vertical cut at x = 0.5 through the
        // post-shock wake
        let (slice, coords, coord_name, slice_tag) = if problem == ProblemId::ShockVortex {
            let jy = c.row_near(0.65);
            let xs: Vec<f64> = (0..c.nx)
                .map(|jx| c.x0 + (jx as f64 + 0.5) * c.dx)
                .collect();
            (c.density_row(jy), xs, "x", "slice_y065")
        } else {
            let jx = c.col_near(0.5);
            let ys: Vec<f64> = (0..c.ny)
                .map(|jy| c.y0 + (jy as f64 + 0.5) * c.dy)
                .collect();
            (c.density_col(jx), ys, "y", "slice_x050")
        };
        writeln!(
            summary,
            "{},{},{},{},{},{}",
            s.label(),
            n,
            fmt_e(c.rho_min),
            fmt_e(c.p_min),
            fmt_e(c.density_tv_total()),
            fmt_e(total_variation(&slice))
        )
        .unwrap();
        artifacts.push(Artifact {
            name: format!("{tag}_{}_n{}_density.csv", s.label(), n),
            text: euler2d_density_csv(c),
        });
        artifacts.push(Artifact {
            name: format!("{tag}_{}_n{}_{slice_tag}.csv", s.label(), n),
            text: slice_csv(coord_name, &coords, &slice),
        });
    }
    artifacts.insert(
        0,
        Artifact {
            name: format!("{tag}_summary.csv"),
            text: summary,
        },
    );
    Ok(artifacts)
}

fn study_imr(opts: &StudyOpts) -> Result<Vec<Artifact>, WenoError> {
    let schemes = pick_schemes(opts, &["weno-z"]);
    let ns = pick_ns(opts, &[800]);
    let wp = WeightParams::default();

    let mut artifacts = Vec::new();
    for &s in &schemes {
        for &n in &ns {
            let c = run_scalar_case(ProblemId::Slp, s, n, CflRule::Fixed(0.1), 2.0, &wp)?;
            let ctx = wp.ctx(c.dx);
            let samples = imr_from_field(&c.field, s, &ctx)?;
            if opts.verbose {
                eprintln!("imr {} n={}: {} samples", s.label(), n, samples.len());
            }
            artifacts.push(Artifact {
                name: format!("imr_slp_{}_n{}.csv", s.label(), n),
                text: imr_csv(&samples),
            });
        }
    }
    Ok(artifacts)
}

// ---------------------------------------------------------------------------
// Single-case entry (CLI `run`)

#[derive(Clone, Debug)]
pub struct CaseConfig {
    pub problem: ProblemId,
    pub scheme: SchemeId,
    pub n: usize,
    pub cfl: CflRule,
    pub t_end: f64,
    pub wp: WeightParams,
    pub componentwise: bool,
    /// Also emit the weight-map sample file (scalar problems only).
    pub imr: bool,
}

pub fn run_case(cfg: &CaseConfig) -> Result<Vec<Artifact>, WenoError> {
    let label = cfg.scheme.label();
    let stem = format!("{}_{}_n{}", cfg.problem.label(), label, cfg.n);
    match cfg.problem {
        ProblemId::CriticalRecon => {
            let ctx = cfg.wp.ctx(2.0 / cfg.n as f64);
            let e = critical_error(cfg.scheme, cfg.n, &ctx)?;
            let text = format!(
                "scheme,n,dx,error\n{},{},{},{}\n",
                label,
                cfg.n,
                2.0 / cfg.n as f64,
                fmt_e(e)
            );
            Ok(vec![Artifact {
                name: format!("{stem}_summary.csv"),
                text,
            }])
        }
        ProblemId::Riemann2dCfg9 | ProblemId::ShockVortex => {
            let c = run_euler_2d_case(
                cfg.problem,
                cfg.scheme,
                cfg.n,
                cfg.cfl,
                cfg.t_end,
                &cfg.wp,
                cfg.componentwise,
            )?;
            let text = format!(
                "scheme,n,rho_min,p_min,tv_total,steps\n{},{},{},{},{},{}\n",
                label,
                cfg.n,
                fmt_e(c.rho_min),
                fmt_e(c.p_min),
                fmt_e(c.density_tv_total()),
                c.stats.steps
            );
            Ok(vec![
                Artifact {
                    name: format!("{stem}_summary.csv"),
                    text,
                },
                Artifact {
                    name: format!("{stem}_density.csv"),
                    text: euler2d_density_csv(&c),
                },
            ])
        }
        ProblemId::EulerSine | ProblemId::EulerNonpolySine => {
            let c = run_euler_1d_case(
                cfg.problem,
                cfg.scheme,
                cfg.n,
                cfg.cfl,
                cfg.t_end,
                &cfg.wp,
                cfg.componentwise,
            )?;
            let text = format!(
                "scheme,n,l1,linf,steps\n{},{},{},{},{}\n",
                label,
                cfg.n,
                fmt_e(c.l1),
                fmt_e(c.linf),
                c.stats.steps
            );
            Ok(vec![
                Artifact {
                    name: format!("{stem}_summary.csv"),
                    text,
                },
                Artifact {
                    name: format!("{stem}_field.csv"),
                    text: euler_field_csv(&c),
                },
            ])
        }
        _ => {
            let c = run_scalar_case(
                cfg.problem,
                cfg.scheme,
                cfg.n,
                cfg.cfl,
                cfg.t_end,
                &cfg.wp,
            )?;
            // oscillation bounds come from the initial profile's range
            let init: Vec<f64> = exact_scalar_averages(cfg.problem, cfg.n, 0.0);
            let (ilo, ihi) = init
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                    (lo.min(v), hi.max(v))
                });
            let (over, under) = over_under_shoot(&c.u, ilo, ihi);
            let text = format!(
                "scheme,n,l1,linf,overshoot,undershoot,tv,steps\n{},{},{},{},{},{},{},{}\n",
                label,
                cfg.n,
                fmt_e(c.l1),
                fmt_e(c.linf),
                fmt_e(over),
                fmt_e(under),
                fmt_e(total_variation(&c.u)),
                c.stats.steps
            );
            let mut artifacts = vec![
                Artifact {
                    name: format!("{stem}_summary.csv"),
                    text,
                },
                Artifact {
                    name: format!("{stem}_field.csv"),
                    text: scalar_field_csv(&c),
                },
            ];
            if cfg.imr {
                let ctx = cfg.wp.ctx(c.dx);
                let samples = imr_from_field(&c.field, cfg.scheme, &ctx)?;
                artifacts.push(Artifact {
                    name: format!("{stem}_imr.csv"),
                    text: imr_csv(&samples),
                });
            }
            Ok(artifacts)
        }
    }
}
