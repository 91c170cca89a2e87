//! Structural properties of the weight machinery and reconstruction,
//! checked over generated inputs.

mod common;

use proptest::prelude::*;

use weno_core::recon::reconstruct_minus;
use weno_core::stencil::beta_js;
use weno_core::weights::{
    nearest_ideal, scheme_weights, scheme_weights_pair, BaseScheme, SchemeId, WeightCtx,
    IDEAL_WEIGHTS,
};

fn all_scheme_ids() -> Vec<SchemeId> {
    let mut ids: Vec<SchemeId> = BaseScheme::ALL.iter().map(|&b| SchemeId::base(b)).collect();
    for &b in &BaseScheme::Z_TYPES {
        ids.push(SchemeId::new(b, true).unwrap());
    }
    ids
}

fn window() -> impl Strategy<Value = [f64; 5]> {
    prop::array::uniform5(-3.0f64..3.0)
}

proptest! {
    #[test]
    fn weights_partition_unity_and_stay_nonnegative(w in window()) {
        let ctx = WeightCtx::new(0.01);
        for id in all_scheme_ids() {
            let om = scheme_weights(id, &w, &ctx).unwrap();
            let sum: f64 = om.iter().sum();
            prop_assert!((sum - 1.0).abs() <= 1e-14, "{}: sum {sum}", id.label());
            for (s, &o) in om.iter().enumerate() {
                prop_assert!(o >= 0.0, "{}: omega[{s}] = {o} < 0", id.label());
                prop_assert!(o <= 1.0 + 1e-14, "{}: omega[{s}] = {o} > 1", id.label());
            }
        }
    }

    #[test]
    fn nearest_ideal_matches_interval_classification(omega in 0.0f64..1.0) {
        // cell boundaries are the midpoints of the sorted ideal weights;
        // the algorithm's scan disagrees with half-open intervals only at
        // the exact midpoint 0.45
        prop_assume!(omega != 0.45);
        let expect = if omega <= 0.2 {
            0
        } else if omega <= 0.45 {
            2
        } else {
            1
        };
        prop_assert_eq!(nearest_ideal(omega), expect);
    }

    #[test]
    fn mirrored_windows_swap_outer_smoothness_exactly(w in window()) {
        let rev = [w[4], w[3], w[2], w[1], w[0]];
        let b = beta_js(&w).local;
        let br = beta_js(&rev).local;
        // the canonical difference forms make the mirror exact, not just close
        prop_assert_eq!(b[0].to_bits(), br[2].to_bits());
        prop_assert_eq!(b[1].to_bits(), br[1].to_bits());
        prop_assert_eq!(b[2].to_bits(), br[0].to_bits());
    }

    #[test]
    fn quadratic_window_reconstructs_interface_value(
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
        c in -3.0f64..3.0,
    ) {
        // every substencil reproduces quadratics, so any convex combination
        // of them does too
        let h = 0.1;
        let avg = |xj: f64| a + b * xj + c * (xj * xj + h * h / 12.0);
        let w = [avg(-2.0 * h), avg(-h), avg(0.0), avg(h), avg(2.0 * h)];
        let target = a + b * (h / 2.0) + c * (h / 2.0) * (h / 2.0);
        let scale = 1.0 + target.abs();
        let ctx = WeightCtx::new(h);
        for id in all_scheme_ids() {
            let v = reconstruct_minus(&w, id, &ctx).unwrap();
            prop_assert!(
                (v - target).abs() <= 1e-12 * scale,
                "{}: {v} vs {target}",
                id.label()
            );
        }
    }

    #[test]
    fn quartic_window_reconstructs_exactly_with_ideal_weights(
        c3 in -3.0f64..3.0,
        c4 in -3.0f64..3.0,
    ) {
        // the five-point combination is the unique fifth-order one; it is
        // exact for quartic cell averages
        let h = 0.1;
        let avg = |xj: f64| {
            c3 * (xj * xj * xj + xj * h * h / 4.0)
                + c4 * (xj * xj * xj * xj + xj * xj * h * h / 2.0 + h * h * h * h / 80.0)
        };
        let w = [avg(-2.0 * h), avg(-h), avg(0.0), avg(h), avg(2.0 * h)];
        let xe = h / 2.0;
        let target = c3 * xe * xe * xe + c4 * xe * xe * xe * xe;
        let ctx = WeightCtx::new(h);
        let id = SchemeId::base(BaseScheme::Ilw);
        let v = reconstruct_minus(&w, id, &ctx).unwrap();
        prop_assert!((v - target).abs() <= 1e-13 * (1.0 + target.abs()));
    }

    #[test]
    fn mapped_weights_equal_base_on_own_cell_inputs(
        a in -3.0..3.0f64,
        b in -1.0..1.0f64,
        e in prop::array::uniform5(-1e-6..1e-6f64),
    ) {
        // near-linear window: every separation measure lands each weight in
        // its own cell, so the order-preserving remap must be the identity
        let w: [f64; 5] = std::array::from_fn(|k| a + b * k as f64 + e[k]);
        let ctx = WeightCtx::new(0.01);
        for &base_kind in &BaseScheme::Z_TYPES {
            let base = SchemeId::base(base_kind);
            let (omega, js) = scheme_weights_pair(base, &w, &ctx).unwrap();
            prop_assume!((0..3).all(|s| nearest_ideal(js[s]) == s));
            let mop = scheme_weights(SchemeId::new(base_kind, true).unwrap(), &w, &ctx).unwrap();
            for s in 0..3 {
                prop_assert_eq!(
                    omega[s].to_bits(),
                    mop[s].to_bits(),
                    "{}: omega[{}] differs",
                    base.label(),
                    s
                );
            }
        }
    }
}

#[test]
fn linear_windows_give_ideal_weights_and_exact_interfaces() {
    // dyadic slope and offset keep the window differences exact, so every
    // indicator sees a perfectly smooth stencil
    let ctx = WeightCtx::new(0.0625);
    for k in [-5i32, -1, 0, 3, 8] {
        for m in [-4i32, 1, 2, 7] {
            let a = k as f64 / 64.0;
            let d = m as f64 / 64.0;
            let w = [a, a + d, a + 2.0 * d, a + 3.0 * d, a + 4.0 * d];
            for id in all_scheme_ids() {
                let om = scheme_weights(id, &w, &ctx).unwrap();
                for s in 0..3 {
                    assert!(
                        (om[s] - IDEAL_WEIGHTS[s]).abs() <= 1e-14,
                        "{}: omega {om:?}",
                        id.label()
                    );
                }
                // cell averages of a linear profile equal its midpoint values
                let v = reconstruct_minus(&w, id, &ctx).unwrap();
                let target = a + 2.5 * d;
                assert!(
                    (v - target).abs() <= 1e-13 * (1.0 + target.abs()),
                    "{}: {v} vs {target}",
                    id.label()
                );
            }
        }
    }
}

#[test]
fn error_norms_are_zero_only_on_identical_fields() {
    use weno_core::metrics::{l1_error, linf_error};
    let u = [0.3, -1.2, 4.0, 0.0];
    assert_eq!(l1_error(&u, &u, 0.5), 0.0);
    assert_eq!(linf_error(&u, &u), 0.0);
    let mut v = u;
    v[2] += 1e-9;
    assert!(l1_error(&u, &v, 0.5) > 0.0);
    assert!(linf_error(&u, &v) > 0.0);
}
