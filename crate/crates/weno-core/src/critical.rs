//! Long-run accuracy probe at a high-order critical point: u_t + u_x = 0
//! with u(x, 0) = x^3 + cos x on (-1, 1), advanced to t = 2 with dt = h^(5/3),
//! measuring the cell-average error of the cell just right of x = 0.
//!
//! At the resolutions of interest the fifth-order error sits at 1e-11..1e-15,
//! below f64 roundoff of a direct evolution. The driver therefore evolves the
//! *deviation* v = ubar - ebar(t) from the exact cell averages: every RK stage
//! subtracts the analytically advanced exact part in closed form (Taylor
//! brackets in dt away from the periodic seam, exact antiderivative integrals
//! near it), which mirrors the direct scheme in real arithmetic while keeping
//! roundoff at the deviation's own tiny scale.

use crate::error::WenoError;
use crate::stencil::{ilw_value, substencil_spreads, StencilWindow};
use crate::weights::{scheme_weights, BaseScheme, SchemeId, WeightCtx, IDEAL_WEIGHTS};

/// Integral of x^3 + cos x over one period (-1, 1).
fn period_mass() -> f64 {
    2.0 * 1.0f64.sin()
}

fn f_anti(x: f64) -> f64 {
    x * x * x * x / 4.0 + x.sin()
}

/// Continuous antiderivative of the periodic extension of x^3 + cos x.
fn g_per(xi: f64) -> f64 {
    let k = ((xi + 1.0) / 2.0).floor();
    f_anti(xi - 2.0 * k) + k * period_mass()
}

/// Map xi into [-1, 1).
fn wrap_pm1(xi: f64) -> f64 {
    xi - 2.0 * ((xi + 1.0) / 2.0).floor()
}

fn f_per(xi: f64) -> f64 {
    let s = wrap_pm1(xi);
    s * s * s + s.cos()
}

/// Exact cell averages at time tau for cells -3..n+2 (n + 6 values).
fn ebar_ghost(n: usize, h: f64, tau: f64, out: &mut [f64]) {
    debug_assert_eq!(out.len(), n + 6);
    let mut prev = g_per(-1.0 + (-3.0) * h - tau);
    for (j, slot) in out.iter_mut().enumerate() {
        let next = g_per(-1.0 + (j as f64 - 2.0) * h - tau);
        *slot = (next - prev) / h;
        prev = next;
    }
}

/// ILW flux of the exact averages minus the exact point value, as a series
/// in h (smooth branch); s is the wrapped x - tau.
fn d_series(h: f64, s: f64) -> f64 {
    let (sn, cs) = (s.sin(), s.cos());
    (h.powi(5) / 60.0) * sn - (h.powi(6) / 140.0) * cs - (h.powi(7) / 240.0) * sn
}

/// Interfaces within four cells of the advected periodic seam need exact
/// integrals instead of the smooth series.
fn near_seam(x: f64, h: f64, tau: f64) -> bool {
    let xw = wrap_pm1(tau - 1.0);
    wrap_pm1(x - xw).abs() <= 4.0 * h
}

/// Derivatives f'..f''''' of f(s) = s^3 + cos s.
fn f_derivs(s: f64) -> (f64, f64, f64, f64, f64) {
    let (sn, cs) = (s.sin(), s.cos());
    (3.0 * s * s - sn, 6.0 * s - cs, 6.0 + sn, cs, -sn)
}

/// Stage brackets par_s = c_s dt u_exact(x, t_s) - (exact time integrals),
/// Taylor-expanded around the base time; valid away from the seam.
fn pars_smooth(x: f64, t: f64, dt: f64) -> (f64, f64, f64) {
    let s = wrap_pm1(x - t);
    let (f1, f2, f3, f4, f5) = f_derivs(s);
    let d2 = dt * dt;
    let d3 = d2 * dt;
    let d4 = d3 * dt;
    let d5 = d4 * dt;
    let d6 = d5 * dt;
    let par1 = (d2 / 2.0) * f1 - (d3 / 6.0) * f2 + (d4 / 24.0) * f3 - (d5 / 120.0) * f4
        + (d6 / 720.0) * f5;
    let par2 = -(d2 / 4.0) * f1 + (7.0 * d3 / 48.0) * f2 - (19.0 * d4 / 384.0) * f3
        + (47.0 * d5 / 3840.0) * f4
        - (37.0 * d6 / 15360.0) * f5;
    let par3 = (d2 / 12.0) * f1 - (5.0 * d3 / 72.0) * f2 + (5.0 * d4 / 192.0) * f3
        - (37.0 * d5 / 5760.0) * f4
        + (83.0 * d6 / 69120.0) * f5;
    (par1, par2, par3)
}

/// Exact-integral stage brackets for interfaces near the seam.
fn pars_near(x: f64, t: f64, dt: f64) -> (f64, f64, f64) {
    let hh = 0.5 * dt;
    let a = g_per(x - t) - g_per(x - t - hh);
    let b = g_per(x - t - hh) - g_per(x - t - dt);
    let par1 = dt * f_per(x - t) - (a + b);
    let par2 = 0.25 * dt * f_per(x - t - dt) - 0.75 * a + 0.25 * b;
    let par3 = (2.0 / 3.0) * dt * f_per(x - t - hh) - a / 3.0 - b;
    (par1, par2, par3)
}

struct Scratch {
    eb: Vec<f64>,
    vg: Vec<f64>,
    q: [Vec<f64>; 3],
    v1: Vec<f64>,
    v2: Vec<f64>,
    arr: Vec<f64>,
    pars: Vec<(f64, f64, f64)>,
}

impl Scratch {
    fn new(n: usize) -> Scratch {
        Scratch {
            eb: vec![0.0; n + 6],
            vg: vec![0.0; n + 6],
            q: [vec![0.0; n], vec![0.0; n], vec![0.0; n]],
            v1: vec![0.0; n],
            v2: vec![0.0; n],
            arr: vec![0.0; n],
            pars: vec![(0.0, 0.0, 0.0); n],
        }
    }
}

/// Interface flux deficiency Q_i = fhat_i - u_exact(X_i, tau) for the
/// deviation field v at stage time tau; X_i = -1 + i h.
fn q_flux(
    id: SchemeId,
    v: &[f64],
    h: f64,
    tau: f64,
    ctx: &WeightCtx,
    eb: &mut [f64],
    vg: &mut [f64],
    out: &mut [f64],
) -> Result<(), WenoError> {
    let n = v.len();
    ebar_ghost(n, h, tau, eb);
    vg[3..n + 3].copy_from_slice(v);
    for g in 0..3 {
        vg[g] = v[n - 3 + g];
        vg[n + 3 + g] = v[g];
    }

    let ilw = id.base == BaseScheme::Ilw;
    for i in 0..n {
        let x = -1.0 + i as f64 * h;
        let ewin: StencilWindow = [eb[i], eb[i + 1], eb[i + 2], eb[i + 3], eb[i + 4]];
        let vwin: StencilWindow = [vg[i], vg[i + 1], vg[i + 2], vg[i + 3], vg[i + 4]];

        let dser = if near_seam(x, h, tau) {
            ilw_value(&ewin) - f_per(x - tau)
        } else {
            d_series(h, wrap_pm1(x - tau))
        };

        if ilw {
            out[i] = dser + ilw_value(&vwin);
            continue;
        }

        let mut wwin = ewin;
        for (w, dv) in wwin.iter_mut().zip(&vwin) {
            *w += dv;
        }
        let om = scheme_weights(id, &wwin, ctx)?;
        let d0 = om[0] - IDEAL_WEIGHTS[0];
        let d2 = om[2] - IDEAL_WEIGHTS[2];
        let (se0, se2) = substencil_spreads(&ewin);
        let (sv0, sv2) = substencil_spreads(&vwin);
        out[i] = dser + d0 * se0 + d2 * se2 + ilw_value(&vwin) + d0 * sv0 + d2 * sv2;
    }
    Ok(())
}

/// Cell-average error |v| at the cell just right of the critical point x = 0
/// after one period of advection (t = 2, dt = h^(5/3)).
///
/// `ctx` supplies eps/p/theta/J; its dx must equal 2/n.
pub fn critical_error(id: SchemeId, n: usize, ctx: &WeightCtx) -> Result<f64, WenoError> {
    let h = 2.0 / n as f64;
    let t_final = 2.0;
    let dt0 = h.powf(5.0 / 3.0);
    let mut v = vec![0.0; n];
    let mut s = Scratch::new(n);

    let mut t = 0.0;
    while t < t_final - 1e-14 {
        let dt = dt0.min(t_final - t);
        for i in 0..n {
            let x = -1.0 + i as f64 * h;
            s.pars[i] = if near_seam(x, h, t) {
                pars_near(x, t, dt)
            } else {
                pars_smooth(x, t, dt)
            };
        }

        let [q0, q1, q2] = &mut s.q;

        q_flux(id, &v, h, t, ctx, &mut s.eb, &mut s.vg, q0)?;
        for i in 0..n {
            s.arr[i] = dt * q0[i] + s.pars[i].0;
        }
        for i in 0..n {
            s.v1[i] = v[i] - (s.arr[(i + 1) % n] - s.arr[i]) / h;
        }

        q_flux(id, &s.v1, h, t + dt, ctx, &mut s.eb, &mut s.vg, q1)?;
        let c2 = 0.25 * dt;
        for i in 0..n {
            s.arr[i] = c2 * q1[i] + s.pars[i].1;
        }
        for i in 0..n {
            s.v2[i] = 0.75 * v[i] + 0.25 * s.v1[i] - (s.arr[(i + 1) % n] - s.arr[i]) / h;
        }

        q_flux(id, &s.v2, h, t + 0.5 * dt, ctx, &mut s.eb, &mut s.vg, q2)?;
        let c3 = (2.0 / 3.0) * dt;
        for i in 0..n {
            s.arr[i] = c3 * q2[i] + s.pars[i].2;
        }
        for i in 0..n {
            v[i] = v[i] / 3.0 + (2.0 / 3.0) * s.v2[i] - (s.arr[(i + 1) % n] - s.arr[i]) / h;
        }

        t += dt;
    }
    Ok(v[n / 2].abs())
}

/// Convenience wrapper with the study's weight parameters: everything at its
/// default except the quartic-difference exponent, which the convergence
/// study pins to 2 (the calibrated value for this protocol).
pub fn critical_error_study(id: SchemeId, n: usize) -> Result<f64, WenoError> {
    let mut ctx = WeightCtx::new(2.0 / n as f64);
    ctx.jexp = 2.0;
    critical_error(id, n, &ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn periodic_antiderivative_is_continuous_and_consistent() {
        // G' = f almost everywhere; check a secant across the seam.
        let e = 1e-6;
        let secant = (g_per(1.0 + e) - g_per(1.0 - e)) / (2.0 * e);
        // both sides approach f(±1) = ∓... f(1-) = 1 + cos 1, f(-1+) = -1 + cos 1
        let mean = 0.5 * (f_per(1.0 - e) + f_per(-1.0 + e));
        assert_relative_eq!(secant, mean, max_relative = 1e-6);
        // continuity at the seam itself
        assert_relative_eq!(g_per(1.0 - 1e-12), g_per(1.0), epsilon = 1e-11);
        // wraps: G(x + 2) = G(x) + mass
        assert_relative_eq!(
            g_per(0.3 + 2.0),
            g_per(0.3) + period_mass(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn wrap_maps_into_half_open_period() {
        assert_eq!(wrap_pm1(0.0), 0.0);
        assert_eq!(wrap_pm1(1.0), -1.0);
        assert_relative_eq!(wrap_pm1(2.3), 0.3, max_relative = 1e-12);
        assert_relative_eq!(wrap_pm1(-1.7), 0.3, max_relative = 1e-12);
    }

    #[test]
    fn exact_averages_telescope_to_the_period_mass() {
        let n = 40;
        let h = 2.0 / n as f64;
        let mut eb = vec![0.0; n + 6];
        ebar_ghost(n, h, 0.37, &mut eb);
        let total: f64 = eb[3..n + 3].iter().sum::<f64>() * h;
        assert_relative_eq!(total, period_mass(), max_relative = 1e-12);
        // ghost cells replicate the periodic interior
        for g in 0..3 {
            assert_relative_eq!(eb[g], eb[g + n], max_relative = 1e-10);
        }
    }

    #[test]
    fn smooth_series_matches_direct_ilw_deficiency() {
        // Away from the seam, D_series must equal ILW(exact averages) minus
        // the exact point value to roundoff of the direct form (~1e-17).
        let n = 160;
        let h = 2.0 / n as f64;
        let tau = 0.21;
        let mut eb = vec![0.0; n + 6];
        ebar_ghost(n, h, tau, &mut eb);
        for i in [40usize, 80, 120] {
            let x = -1.0 + i as f64 * h;
            if near_seam(x, h, tau) {
                continue;
            }
            let win = [eb[i], eb[i + 1], eb[i + 2], eb[i + 3], eb[i + 4]];
            let direct = ilw_value(&win) - f_per(x - tau);
            let series = d_series(h, wrap_pm1(x - tau));
            // the direct form differences O(1) values, so its own roundoff
            // floor (~1e-16) is the meaningful bound here
            assert!(
                (direct - series).abs() < 5e-15,
                "i={i}: direct {direct:e} vs series {series:e}"
            );
        }
    }

    #[test]
    fn stage_brackets_agree_between_series_and_exact_integrals() {
        // pars_smooth is a Taylor expansion of pars_near; far from the seam
        // they must agree up to the exact-integral form's own roundoff
        // (differences of O(1) antiderivative values, ~1e-16).
        let (t, dt) = (0.13, 3e-3);
        for &x in &[-0.52, 0.11, 0.73] {
            let a = pars_smooth(x, t, dt);
            let b = pars_near(x, t, dt);
            assert!((a.0 - b.0).abs() < 1e-15, "par1 {:e}", a.0 - b.0);
            assert!((a.1 - b.1).abs() < 1e-15, "par2 {:e}", a.1 - b.1);
            assert!((a.2 - b.2).abs() < 1e-15, "par3 {:e}", a.2 - b.2);
        }
    }

    #[test]
    fn ideal_weights_reproduce_reference_error_ladder() {
        let id = SchemeId::parse("weno-ilw").unwrap();
        let e160 = critical_error_study(id, 160).unwrap();
        let e320 = critical_error_study(id, 320).unwrap();
        println!("ilw critical: {e160:.6e} {e320:.6e}");
        assert_relative_eq!(e160, 2.728456e-11, max_relative = 1e-4);
        assert_relative_eq!(e320, 1.112602e-12, max_relative = 1e-4);
        let order = (e160 / e320).log2();
        assert!((order - 4.616).abs() < 0.05, "order {order}");
    }

    #[test]
    fn z_scheme_superconverges_at_the_critical_point() {
        let id = SchemeId::parse("weno-z").unwrap();
        let e160 = critical_error_study(id, 160).unwrap();
        let e320 = critical_error_study(id, 320).unwrap();
        println!("z critical: {e160:.6e} {e320:.6e}");
        assert_relative_eq!(e160, 5.357710e-08, max_relative = 1e-4);
        let order = (e160 / e320).log2();
        assert!((order - 5.551).abs() < 0.1, "order {order}");
    }

    #[test]
    fn mapped_variant_tracks_base_and_matches_its_own_reference() {
        // On the coarse grid the remap fires near the critical point and the
        // two results differ in the sixth digit; by n = 320 they agree to
        // many digits because the weights sit in their own cells there.
        let base = SchemeId::parse("weno-z").unwrap();
        let mop = SchemeId::parse("mop-gmweno-z").unwrap();
        let em160 = critical_error_study(mop, 160).unwrap();
        println!("mop-z critical: {em160:.6e}");
        assert_relative_eq!(em160, 5.357759e-08, max_relative = 1e-4);
        let eb320 = critical_error_study(base, 320).unwrap();
        let em320 = critical_error_study(mop, 320).unwrap();
        assert_relative_eq!(eb320, em320, max_relative = 1e-9);
    }
}
