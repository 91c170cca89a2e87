//! Error norms, convergence orders, and oscillation measures.

/// L1 = h * sum |num - exact|.
pub fn l1_error(num: &[f64], exact: &[f64], h: f64) -> f64 {
    assert_eq!(num.len(), exact.len());
    let mut acc = 0.0;
    for (a, b) in num.iter().zip(exact) {
        acc += (a - b).abs();
    }
    h * acc
}

pub fn linf_error(num: &[f64], exact: &[f64]) -> f64 {
    assert_eq!(num.len(), exact.len());
    let mut m = 0.0f64;
    for (a, b) in num.iter().zip(exact) {
        m = m.max((a - b).abs());
    }
    m
}

/// Orders between successive refinements: log2(e_i / e_{i+1}).
pub fn convergence_orders(errors: &[f64]) -> Vec<f64> {
    errors
        .windows(2)
        .map(|w| (w[0] / w[1]).log2())
        .collect()
}

/// Increased error versus the ideal-linear-weights baseline, in percent.
pub fn increased_error_pct(err: f64, ilw_err: f64) -> f64 {
    (err - ilw_err) / ilw_err * 100.0
}

pub fn total_variation(u: &[f64]) -> f64 {
    u.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
}

/// Amounts by which the slice exceeds the band [lo, hi]: (overshoot above
/// hi, undershoot below lo), both nonnegative.
pub fn over_under_shoot(u: &[f64], lo: f64, hi: f64) -> (f64, f64) {
    let mut over = 0.0f64;
    let mut under = 0.0f64;
    for &v in u {
        over = over.max(v - hi);
        under = under.max(lo - v);
    }
    (over.max(0.0), under.max(0.0))
}

/// Total cell-average mass, h * sum u.
pub fn mass(u: &[f64], h: f64) -> f64 {
    h * u.iter().sum::<f64>()
}
