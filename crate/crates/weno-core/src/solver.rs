//! Semi-discrete finite-volume evolution: global Lax-Friedrichs interface
//! fluxes on WENO-reconstructed states, advanced with SSP-RK3.
//!
//! Fields carry three ghost layers per side. Systems are reconstructed in
//! local characteristic variables by default (componentwise is available as
//! a fallback); scalar advection takes a pure-upwind shortcut, since the LF
//! flux with alpha = 1 reduces to the left-biased state exactly.

use crate::error::WenoError;
use crate::physics::{Axis, System};
use crate::recon::{reconstruct_minus, reconstruct_pair};
use crate::weights::{SchemeId, WeightCtx};

/// Ghost-layer width required by the five-cell stencils.
pub const NG: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bc {
    Periodic,
    Outflow,
}

#[derive(Clone, Copy, Debug)]
pub enum CflRule {
    Fixed(f64),
    /// CFL = dx^(2/3), which keeps the RK3 temporal error below the spatial
    /// fifth-order error in refinement studies.
    DxTwoThirds,
}

impl CflRule {
    pub fn value(&self, dx: f64) -> f64 {
        match *self {
            CflRule::Fixed(c) => c,
            CflRule::DxTwoThirds => dx.powf(2.0 / 3.0),
        }
    }
}

/// Run-level options shared by the 1D and 2D drivers.
#[derive(Clone, Copy, Debug)]
pub struct SolveOpts {
    pub scheme: SchemeId,
    pub cfl: CflRule,
    pub t_end: f64,
    /// Reconstruct conserved components directly instead of characteristic
    /// variables (A/B fallback; scalar problems ignore it).
    pub componentwise: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RunStats {
    pub steps: usize,
    pub t: f64,
}

/// Uniform 1D grid of cell averages with ghost cells.
pub struct Field1D<const M: usize> {
    pub n: usize,
    pub x0: f64,
    pub dx: f64,
    pub bc: Bc,
    /// Length n + 2*NG; interior occupies NG..NG+n.
    pub data: Vec<[f64; M]>,
}

impl<const M: usize> Field1D<M> {
    pub fn new(n: usize, x0: f64, x1: f64, bc: Bc) -> Field1D<M> {
        assert!(n >= 7, "grid too coarse for five-cell stencils");
        Field1D {
            n,
            x0,
            dx: (x1 - x0) / n as f64,
            bc,
            data: vec![[0.0; M]; n + 2 * NG],
        }
    }

    pub fn cell_center(&self, j: usize) -> f64 {
        self.x0 + (j as f64 + 0.5) * self.dx
    }

    pub fn interior(&self) -> &[[f64; M]] {
        &self.data[NG..NG + self.n]
    }

    pub fn interior_mut(&mut self) -> &mut [[f64; M]] {
        &mut self.data[NG..NG + self.n]
    }

    pub fn apply_bc(&mut self) {
        let n = self.n;
        match self.bc {
            Bc::Periodic => {
                for g in 0..NG {
                    self.data[g] = self.data[g + n];
                    self.data[NG + n + g] = self.data[NG + g];
                }
            }
            Bc::Outflow => {
                for g in 0..NG {
                    self.data[g] = self.data[NG];
                    self.data[NG + n + g] = self.data[NG + n - 1];
                }
            }
        }
    }
}

/// f_hat = (f(uL) + f(uR) - alpha (uR - uL)) / 2, componentwise.
pub fn global_lf_flux<const M: usize, S: System<M>>(
    sys: &S,
    ul: &[f64; M],
    ur: &[f64; M],
    axis: Axis,
    alpha: f64,
) -> [f64; M] {
    let fl = sys.flux(ul, axis);
    let fr = sys.flux(ur, axis);
    let mut out = [0.0; M];
    for m in 0..M {
        out[m] = 0.5 * (fl[m] + fr[m] - alpha * (ur[m] - ul[m]));
    }
    out
}

/// Numerical fluxes for every interface of one grid line.
///
/// `line` is a ghost-extended run of cell averages (len n + 2*NG); `fhat`
/// receives n + 1 interface fluxes. On a non-finite result the index of the
/// cell left of the offending interface is returned so callers can report
/// where the run died.
fn sweep_line<const M: usize, S: System<M>>(
    sys: &S,
    line: &[[f64; M]],
    axis: Axis,
    scheme: SchemeId,
    ctx: &WeightCtx,
    alpha: f64,
    componentwise: bool,
    fhat: &mut [[f64; M]],
) -> Result<(), usize> {
    let n = line.len() - 2 * NG;
    debug_assert_eq!(fhat.len(), n + 1);

    for i in 0..=n {
        // Interface i sits between cells NG+i-1 and NG+i; the six-cell
        // window starts NG-3 = 0 cells earlier.
        let w6 = &line[i..i + 6];

        if S::LINEAR_UPWIND {
            let w = [w6[0][0], w6[1][0], w6[2][0], w6[3][0], w6[4][0]];
            match reconstruct_minus(&w, scheme, ctx) {
                Ok(v) if v.is_finite() => fhat[i][0] = v,
                _ => return Err(i),
            }
            continue;
        }

        let mut um = [0.0; M];
        let mut up = [0.0; M];
        if S::CHARACTERISTIC && !componentwise {
            let basis = sys.basis(&w6[2], &w6[3], axis);
            let mut proj = [[0.0; M]; 6];
            for k in 0..6 {
                proj[k] = basis.to_char(&w6[k]);
            }
            let mut wm = [0.0; M];
            let mut wp = [0.0; M];
            for m in 0..M {
                let six = [
                    proj[0][m], proj[1][m], proj[2][m], proj[3][m], proj[4][m], proj[5][m],
                ];
                match reconstruct_pair(&six, scheme, ctx) {
                    Ok(pair) => {
                        wm[m] = pair.minus;
                        wp[m] = pair.plus;
                    }
                    Err(_) => return Err(i),
                }
            }
            um = basis.from_char(&wm);
            up = basis.from_char(&wp);
        } else {
            for m in 0..M {
                let six = [w6[0][m], w6[1][m], w6[2][m], w6[3][m], w6[4][m], w6[5][m]];
                match reconstruct_pair(&six, scheme, ctx) {
                    Ok(pair) => {
                        um[m] = pair.minus;
                        up[m] = pair.plus;
                    }
                    Err(_) => return Err(i),
                }
            }
        }

        let f = global_lf_flux(sys, &um, &up, axis, alpha);
        if !f.iter().all(|v| v.is_finite()) {
            return Err(i);
        }
        fhat[i] = f;
    }
    Ok(())
}

/// Largest wave speed over the interior cells.
pub fn max_wavespeed_1d<const M: usize, S: System<M>>(sys: &S, f: &Field1D<M>) -> f64 {
    let mut a = 0.0f64;
    for u in f.interior() {
        a = a.max(sys.wavespeed(u, Axis::X));
    }
    a
}

/// Semi-discrete rate L(u) = -(f_{j+1/2} - f_{j-1/2}) / dx.
pub fn rhs_1d<const M: usize, S: System<M>>(
    sys: &S,
    f: &Field1D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
    alpha: f64,
    t: f64,
    fhat: &mut Vec<[f64; M]>,
    rate: &mut [[f64; M]],
) -> Result<(), WenoError> {
    let n = f.n;
    fhat.resize(n + 1, [0.0; M]);
    sweep_line(
        sys,
        &f.data,
        Axis::X,
        opts.scheme,
        ctx,
        alpha,
        opts.componentwise,
        fhat,
    )
    .map_err(|i| WenoError::Diverged { cell: i.min(n - 1), time: t })?;
    let inv = 1.0 / f.dx;
    for j in 0..n {
        for m in 0..M {
            rate[j][m] = -(fhat[j + 1][m] - fhat[j][m]) * inv;
        }
    }
    Ok(())
}

/// Shu-Osher stages. `s` receives the new stage; for stages two and three it
/// must hold the previous stage on entry.
fn rk_stage1<const M: usize>(u0: &[[f64; M]], rate: &[[f64; M]], dt: f64, s: &mut [[f64; M]]) {
    for j in 0..u0.len() {
        for m in 0..M {
            s[j][m] = u0[j][m] + dt * rate[j][m];
        }
    }
}

fn rk_stage2<const M: usize>(u0: &[[f64; M]], rate: &[[f64; M]], dt: f64, s: &mut [[f64; M]]) {
    for j in 0..u0.len() {
        for m in 0..M {
            s[j][m] = 0.75 * u0[j][m] + 0.25 * (s[j][m] + dt * rate[j][m]);
        }
    }
}

fn rk_stage3<const M: usize>(u0: &[[f64; M]], rate: &[[f64; M]], dt: f64, s: &mut [[f64; M]]) {
    for j in 0..u0.len() {
        for m in 0..M {
            s[j][m] = u0[j][m] / 3.0 + (2.0 / 3.0) * (s[j][m] + dt * rate[j][m]);
        }
    }
}

fn scan_state<const M: usize, S: System<M>>(
    sys: &S,
    interior: &[[f64; M]],
    t: f64,
) -> Result<(), WenoError> {
    for (j, u) in interior.iter().enumerate() {
        if !sys.admissible(u) {
            if u.iter().all(|v| v.is_finite()) {
                return Err(WenoError::Unphysical { cell: j, time: t });
            }
            return Err(WenoError::Diverged { cell: j, time: t });
        }
    }
    Ok(())
}

/// One Shu-Osher SSP-RK3 step of the 1D field; `alpha` is frozen for all
/// three stages. `t_next` labels divergence reports.
pub fn ssp_rk3_step_1d<const M: usize, S: System<M>>(
    sys: &S,
    f: &mut Field1D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
    dt: f64,
    alpha: f64,
    t_next: f64,
    work: &mut StepWork<M>,
) -> Result<(), WenoError> {
    let n = f.n;
    work.u0.resize(n, [0.0; M]);
    work.rate.resize(n, [0.0; M]);
    work.u0.copy_from_slice(f.interior());

    rhs_1d(sys, f, opts, ctx, alpha, t_next, &mut work.fhat, &mut work.rate)?;
    rk_stage1(&work.u0, &work.rate, dt, f.interior_mut());
    f.apply_bc();

    rhs_1d(sys, f, opts, ctx, alpha, t_next, &mut work.fhat, &mut work.rate)?;
    rk_stage2(&work.u0, &work.rate, dt, f.interior_mut());
    f.apply_bc();

    rhs_1d(sys, f, opts, ctx, alpha, t_next, &mut work.fhat, &mut work.rate)?;
    rk_stage3(&work.u0, &work.rate, dt, f.interior_mut());
    f.apply_bc();

    scan_state(sys, f.interior(), t_next)
}

/// Reusable stage buffers.
pub struct StepWork<const M: usize> {
    u0: Vec<[f64; M]>,
    rate: Vec<[f64; M]>,
    fhat: Vec<[f64; M]>,
}

impl<const M: usize> StepWork<M> {
    pub fn new() -> StepWork<M> {
        StepWork {
            u0: Vec::new(),
            rate: Vec::new(),
            fhat: Vec::new(),
        }
    }
}

impl<const M: usize> Default for StepWork<M> {
    fn default() -> Self {
        StepWork::new()
    }
}

/// Advance the field to t_end; the last step is clipped to land exactly.
pub fn integrate_1d<const M: usize, S: System<M>>(
    sys: &S,
    f: &mut Field1D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
) -> Result<RunStats, WenoError> {
    f.apply_bc();
    scan_state(sys, f.interior(), 0.0)?;
    let mut work = StepWork::new();
    let cfl = opts.cfl.value(f.dx);
    let mut t = 0.0;
    let mut steps = 0usize;
    while t < opts.t_end {
        let alpha = if S::LINEAR_UPWIND {
            1.0
        } else {
            max_wavespeed_1d(sys, f)
        };
        if !(alpha > 0.0) {
            return Err(WenoError::Config(format!(
                "non-positive wave speed {alpha} at t = {t:.6e}"
            )));
        }
        let mut dt = cfl * f.dx / alpha;
        let mut last = false;
        if t + dt >= opts.t_end {
            dt = opts.t_end - t;
            last = true;
        }
        let t_next = if last { opts.t_end } else { t + dt };
        ssp_rk3_step_1d(sys, f, opts, ctx, dt, alpha, t_next, &mut work)?;
        t = t_next;
        steps += 1;
    }
    Ok(RunStats { steps, t })
}

/// Uniform 2D grid of cell averages with ghost cells on both axes.
///
/// Storage is row-major with x contiguous: index (ix, iy) with ghosts is
/// iy * (nx + 2*NG) + ix.
pub struct Field2D<const M: usize> {
    pub nx: usize,
    pub ny: usize,
    pub x0: f64,
    pub y0: f64,
    pub dx: f64,
    pub dy: f64,
    pub bc: Bc,
    pub data: Vec<[f64; M]>,
}

impl<const M: usize> Field2D<M> {
    pub fn new(nx: usize, ny: usize, xr: (f64, f64), yr: (f64, f64), bc: Bc) -> Field2D<M> {
        assert!(nx >= 7 && ny >= 7, "grid too coarse for five-cell stencils");
        Field2D {
            nx,
            ny,
            x0: xr.0,
            y0: yr.0,
            dx: (xr.1 - xr.0) / nx as f64,
            dy: (yr.1 - yr.0) / ny as f64,
            bc,
            data: vec![[0.0; M]; (nx + 2 * NG) * (ny + 2 * NG)],
        }
    }

    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * (self.nx + 2 * NG) + ix
    }

    /// Interior cell (jx, jy), zero-based without ghosts.
    pub fn at(&self, jx: usize, jy: usize) -> &[f64; M] {
        &self.data[self.idx(jx + NG, jy + NG)]
    }

    pub fn at_mut(&mut self, jx: usize, jy: usize) -> &mut [f64; M] {
        let k = self.idx(jx + NG, jy + NG);
        &mut self.data[k]
    }

    pub fn cell_center(&self, jx: usize, jy: usize) -> (f64, f64) {
        (
            self.x0 + (jx as f64 + 0.5) * self.dx,
            self.y0 + (jy as f64 + 0.5) * self.dy,
        )
    }

    pub fn apply_bc(&mut self) {
        let (nx, ny) = (self.nx, self.ny);
        let w = nx + 2 * NG;
        // x ghosts, every row that has interior data (and ghost rows too;
        // corners are never read by the dimension-by-dimension sweeps).
        for iy in 0..ny + 2 * NG {
            let row = iy * w;
            match self.bc {
                Bc::Periodic => {
                    for g in 0..NG {
                        self.data[row + g] = self.data[row + g + nx];
                        self.data[row + NG + nx + g] = self.data[row + NG + g];
                    }
                }
                Bc::Outflow => {
                    for g in 0..NG {
                        self.data[row + g] = self.data[row + NG];
                        self.data[row + NG + nx + g] = self.data[row + NG + nx - 1];
                    }
                }
            }
        }
        // y ghosts, every column.
        for ix in 0..w {
            match self.bc {
                Bc::Periodic => {
                    for g in 0..NG {
                        self.data[g * w + ix] = self.data[(g + ny) * w + ix];
                        self.data[(NG + ny + g) * w + ix] = self.data[(NG + g) * w + ix];
                    }
                }
                Bc::Outflow => {
                    for g in 0..NG {
                        self.data[g * w + ix] = self.data[NG * w + ix];
                        self.data[(NG + ny + g) * w + ix] = self.data[(NG + ny - 1) * w + ix];
                    }
                }
            }
        }
    }
}

/// Largest wave speeds along each axis over the interior.
pub fn max_wavespeed_2d<const M: usize, S: System<M>>(sys: &S, f: &Field2D<M>) -> (f64, f64) {
    let mut ax = 0.0f64;
    let mut ay = 0.0f64;
    for jy in 0..f.ny {
        for jx in 0..f.nx {
            let u = f.at(jx, jy);
            ax = ax.max(sys.wavespeed(u, Axis::X));
            ay = ay.max(sys.wavespeed(u, Axis::Y));
        }
    }
    (ax, ay)
}

/// Dimension-by-dimension rate: x-sweeps along rows, y-sweeps along columns.
#[allow(clippy::too_many_arguments)]
pub fn rhs_2d<const M: usize, S: System<M>>(
    sys: &S,
    f: &Field2D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
    alpha: (f64, f64),
    t: f64,
    work: &mut Work2D<M>,
    rate: &mut [[f64; M]],
) -> Result<(), WenoError> {
    let (nx, ny) = (f.nx, f.ny);
    let w = nx + 2 * NG;
    let inv_dx = 1.0 / f.dx;
    let inv_dy = 1.0 / f.dy;
    work.fhat_x.resize(nx + 1, [0.0; M]);
    work.fhat_y.resize(ny + 1, [0.0; M]);
    work.col.resize(ny + 2 * NG, [0.0; M]);

    for jy in 0..ny {
        let row = (jy + NG) * w;
        sweep_line(
            sys,
            &f.data[row..row + w],
            Axis::X,
            opts.scheme,
            ctx,
            alpha.0,
            opts.componentwise,
            &mut work.fhat_x,
        )
        .map_err(|i| WenoError::Diverged { cell: jy * nx + i.min(nx - 1), time: t })?;
        for jx in 0..nx {
            for m in 0..M {
                rate[jy * nx + jx][m] = -(work.fhat_x[jx + 1][m] - work.fhat_x[jx][m]) * inv_dx;
            }
        }
    }

    for jx in 0..nx {
        for iy in 0..ny + 2 * NG {
            work.col[iy] = f.data[iy * w + jx + NG];
        }
        sweep_line(
            sys,
            &work.col,
            Axis::Y,
            opts.scheme,
            ctx,
            alpha.1,
            opts.componentwise,
            &mut work.fhat_y,
        )
        .map_err(|i| WenoError::Diverged { cell: i.min(ny - 1) * nx + jx, time: t })?;
        for jy in 0..ny {
            for m in 0..M {
                rate[jy * nx + jx][m] -= (work.fhat_y[jy + 1][m] - work.fhat_y[jy][m]) * inv_dy;
            }
        }
    }
    Ok(())
}

pub struct Work2D<const M: usize> {
    fhat_x: Vec<[f64; M]>,
    fhat_y: Vec<[f64; M]>,
    col: Vec<[f64; M]>,
    u0: Vec<[f64; M]>,
    rate: Vec<[f64; M]>,
}

impl<const M: usize> Work2D<M> {
    pub fn new() -> Work2D<M> {
        Work2D {
            fhat_x: Vec::new(),
            fhat_y: Vec::new(),
            col: Vec::new(),
            u0: Vec::new(),
            rate: Vec::new(),
        }
    }
}

impl<const M: usize> Default for Work2D<M> {
    fn default() -> Self {
        Work2D::new()
    }
}

fn interior_cells_2d<const M: usize>(f: &Field2D<M>, out: &mut Vec<[f64; M]>) {
    let (nx, ny) = (f.nx, f.ny);
    out.resize(nx * ny, [0.0; M]);
    for jy in 0..ny {
        for jx in 0..nx {
            out[jy * nx + jx] = *f.at(jx, jy);
        }
    }
}

fn write_interior_2d<const M: usize>(f: &mut Field2D<M>, cells: &[[f64; M]]) {
    let nx = f.nx;
    for jy in 0..f.ny {
        for jx in 0..nx {
            *f.at_mut(jx, jy) = cells[jy * nx + jx];
        }
    }
}

/// One SSP-RK3 step of the 2D field with per-axis frozen wave speeds.
#[allow(clippy::too_many_arguments)]
pub fn ssp_rk3_step_2d<const M: usize, S: System<M>>(
    sys: &S,
    f: &mut Field2D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
    dt: f64,
    alpha: (f64, f64),
    t_next: f64,
    work: &mut Work2D<M>,
) -> Result<(), WenoError> {
    let ncell = f.nx * f.ny;
    let mut u0 = std::mem::take(&mut work.u0);
    let mut rate = std::mem::take(&mut work.rate);
    rate.resize(ncell, [0.0; M]);
    interior_cells_2d(f, &mut u0);

    let mut stage = u0.clone();
    rhs_2d(sys, f, opts, ctx, alpha, t_next, work, &mut rate)?;
    rk_stage1(&u0, &rate, dt, &mut stage);
    write_interior_2d(f, &stage);
    f.apply_bc();

    rhs_2d(sys, f, opts, ctx, alpha, t_next, work, &mut rate)?;
    rk_stage2(&u0, &rate, dt, &mut stage);
    write_interior_2d(f, &stage);
    f.apply_bc();

    rhs_2d(sys, f, opts, ctx, alpha, t_next, work, &mut rate)?;
    rk_stage3(&u0, &rate, dt, &mut stage);
    write_interior_2d(f, &stage);
    f.apply_bc();

    work.u0 = u0;
    work.rate = rate;

    for jy in 0..f.ny {
        for jx in 0..f.nx {
            let u = f.at(jx, jy);
            if !sys.admissible(u) {
                let cell = jy * f.nx + jx;
                if u.iter().all(|v| v.is_finite()) {
                    return Err(WenoError::Unphysical { cell, time: t_next });
                }
                return Err(WenoError::Diverged { cell, time: t_next });
            }
        }
    }
    Ok(())
}

/// Advance the 2D field to t_end with dt = CFL / (ax/dx + ay/dy).
pub fn integrate_2d<const M: usize, S: System<M>>(
    sys: &S,
    f: &mut Field2D<M>,
    opts: &SolveOpts,
    ctx: &WeightCtx,
) -> Result<RunStats, WenoError> {
    f.apply_bc();
    let mut work = Work2D::new();
    let cfl = opts.cfl.value(f.dx);
    let mut t = 0.0;
    let mut steps = 0usize;
    while t < opts.t_end {
        let alpha = max_wavespeed_2d(sys, f);
        let denom = alpha.0 / f.dx + alpha.1 / f.dy;
        if !(denom > 0.0) {
            return Err(WenoError::Config(format!(
                "non-positive wave speed at t = {t:.6e}"
            )));
        }
        let mut dt = cfl / denom;
        let mut last = false;
        if t + dt >= opts.t_end {
            dt = opts.t_end - t;
            last = true;
        }
        let t_next = if last { opts.t_end } else { t + dt };
        ssp_rk3_step_2d(sys, f, opts, ctx, dt, alpha, t_next, &mut work)?;
        t = t_next;
        steps += 1;
    }
    Ok(RunStats { steps, t })
}
