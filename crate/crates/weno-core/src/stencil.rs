//! Per-stencil smoothness kernels shared by every weight scheme.
//!
//! A [`StencilWindow`] holds the five cell averages `ubar[j-2..=j+2]` feeding
//! the left-biased reconstruction of `u` at the interface `x_{j+1/2}`.
//! All kernels are written in terms of a few canonical difference forms so
//! that reversing a window maps the `s = 0` quantities onto the `s = 2` ones
//! bit-for-bit (needed for exact mirror symmetry of paired reconstructions).

/// Five consecutive cell averages, left to right.
pub type StencilWindow = [f64; 5];

/// Indicator family carried alongside the three per-substencil values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothnessKind {
    BetaJs,
    EtaShenZha,
    BetaZa,
    ChiNip,
}

/// Three per-substencil smoothness values plus their family tag.
#[derive(Clone, Copy, Debug)]
pub struct SmoothnessSet {
    pub local: [f64; 3],
    pub kind: SmoothnessKind,
}

/// Scalar global (higher-order) smoothness indicators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndicatorKind {
    Tau5Js,
    Tau5Eta,
    Tau6Eta,
    Tau81,
    Tau82,
    Tau6Za,
    AZa,
    PhiD,
    TauNip,
}

/// Second difference `a - 2b + c`, symmetric in `(a, c)`.
#[inline]
fn d2(a: f64, b: f64, c: f64) -> f64 {
    (a + c) - 2.0 * b
}

/// One-sided combination `a - 4b + 3c`; `g(w4, w3, w2)` is its mirror image.
#[inline]
fn g1(a: f64, b: f64, c: f64) -> f64 {
    (a + 3.0 * c) - 4.0 * b
}

/// Classic Jiang-Shu local smoothness indicators (β₀, β₁, β₂).
pub fn beta_js(w: &StencilWindow) -> SmoothnessSet {
    let c0 = 13.0 / 12.0;
    let s0 = d2(w[0], w[1], w[2]);
    let s1 = d2(w[1], w[2], w[3]);
    let s2 = d2(w[2], w[3], w[4]);
    let t0 = g1(w[0], w[1], w[2]);
    let t1 = w[1] - w[3];
    let t2 = g1(w[4], w[3], w[2]);
    SmoothnessSet {
        local: [
            c0 * (s0 * s0) + 0.25 * (t0 * t0),
            c0 * (s1 * s1) + 0.25 * (t1 * t1),
            c0 * (s2 * s2) + 0.25 * (t2 * t2),
        ],
        kind: SmoothnessKind::BetaJs,
    }
}

/// Shen-Zha η indicators: ¼ on the first-difference term, 1 on the second.
pub fn eta_shen_zha(w: &StencilWindow) -> SmoothnessSet {
    let s0 = d2(w[0], w[1], w[2]);
    let s1 = d2(w[1], w[2], w[3]);
    let s2 = d2(w[2], w[3], w[4]);
    let t0 = g1(w[0], w[1], w[2]);
    let t1 = w[1] - w[3];
    let t2 = g1(w[4], w[3], w[2]);
    SmoothnessSet {
        local: [
            0.25 * (t0 * t0) + s0 * s0,
            0.25 * (t1 * t1) + s1 * s1,
            0.25 * (t2 * t2) + s2 * s2,
        ],
        kind: SmoothnessKind::EtaShenZha,
    }
}

/// First-derivative proxies `P_s'(x_j) · Δx` of the three substencil parabolas.
pub fn p_first(w: &StencilWindow) -> [f64; 3] {
    [
        0.5 * g1(w[0], w[1], w[2]),
        0.5 * (w[3] - w[1]),
        -0.5 * g1(w[4], w[3], w[2]),
    ]
}

/// Second-derivative proxies `P_s''(x_j) · Δx²` (plain second differences).
pub fn p_second(w: &StencilWindow) -> [f64; 3] {
    [
        d2(w[0], w[1], w[2]),
        d2(w[1], w[2], w[3]),
        d2(w[2], w[3], w[4]),
    ]
}

/// Undivided fourth difference over the whole window.
pub fn delta4(w: &StencilWindow) -> f64 {
    let p = p_second(w);
    d2(p[0], p[1], p[2])
}

/// Smoothness of the quartic reconstruction over the full five-cell stencil.
pub fn eta5(w: &StencilWindow) -> f64 {
    let a = (w[0] - w[4]) + 8.0 * (w[3] - w[1]);
    let b = (w[0] + w[4]) + 30.0 * w[2] - 16.0 * (w[1] + w[3]);
    (a * a + b * b) / 144.0
}

/// The β variant used by the ZA weights: γ₁(ū')² + γ₂(ū'')², γ₁=1, γ₂=13/12.
pub fn beta_za(w: &StencilWindow) -> SmoothnessSet {
    let c2 = 13.0 / 12.0;
    let p1 = p_first(w);
    let p2 = p_second(w);
    let mut local = [0.0; 3];
    for s in 0..3 {
        local[s] = p1[s] * p1[s] + c2 * (p2[s] * p2[s]);
    }
    SmoothnessSet {
        local,
        kind: SmoothnessKind::BetaZa,
    }
}

/// NIP absolute-value indicators χ_s; degree-1 homogeneous in the data.
pub fn chi_nip(w: &StencilWindow, theta: f64) -> SmoothnessSet {
    let s0 = d2(w[0], w[1], w[2]);
    let s1 = d2(w[1], w[2], w[3]);
    let s2 = d2(w[2], w[3], w[4]);
    // the first-order parts are one-sided exactly as printed
    let f0 = (w[0] - 3.0 * w[1]) + 2.0 * w[2];
    let f12 = w[3] - w[2];
    SmoothnessSet {
        local: [
            theta * f0.abs() + s0.abs(),
            theta * f12.abs() + s1.abs(),
            theta * f12.abs() + s2.abs(),
        ],
        kind: SmoothnessKind::ChiNip,
    }
}

/// Evaluate one of the scalar global indicators.
///
/// `local` must hold the family the indicator is defined on (η for the
/// τ5η/τ6η/τ81/τ82 group, β^ZA for τ6ZA/A, β^JS for τ5/Φ); `jexp` is the
/// NIP exponent. For `AZa` a nonpositive denominator clamps the result to 0.
pub fn global_indicator(
    kind: IndicatorKind,
    w: &StencilWindow,
    local: &[f64; 3],
    eps: f64,
    jexp: f64,
) -> f64 {
    match kind {
        IndicatorKind::Tau5Js | IndicatorKind::Tau5Eta => (local[0] - local[2]).abs(),
        IndicatorKind::Tau6Eta => {
            (eta5(w) - (local[0] + 4.0 * local[1] + local[2]) / 6.0).abs()
        }
        IndicatorKind::Tau81 => {
            let p1 = p_first(w);
            ((p1[0].abs() - p1[2].abs()) * delta4(w)).abs()
        }
        IndicatorKind::Tau82 => {
            let p1 = p_first(w);
            let a = p1[0].abs() - p1[2].abs();
            let b = delta4(w);
            a * a + b * b
        }
        IndicatorKind::Tau6Za => {
            let p1 = p_first(w);
            let p2 = p_second(w);
            let a = p1[0].abs() - p1[2].abs();
            let b = p2[0].abs() - p2[2].abs();
            a * a + (13.0 / 12.0) * (b * b)
        }
        IndicatorKind::AZa => {
            let tau6 = global_indicator(IndicatorKind::Tau6Za, w, local, eps, jexp);
            let denom = (local[0] + local[2] - tau6) + eps;
            if denom <= 0.0 {
                0.0
            } else {
                tau6 / denom
            }
        }
        IndicatorKind::PhiD => (local[0] - 2.0 * local[1] + local[2]).abs().sqrt().min(1.0),
        IndicatorKind::TauNip => delta4(w).abs().powf(jexp),
    }
}

/// Third-order substencil reconstructions (u⁰, u¹, u²) at `x_{j+1/2}`.
pub fn substencil_values(w: &StencilWindow) -> [f64; 3] {
    [
        (2.0 * w[0] - 7.0 * w[1] + 11.0 * w[2]) / 6.0,
        (-w[1] + 5.0 * w[2] + 2.0 * w[3]) / 6.0,
        (2.0 * w[2] + 5.0 * w[3] - w[4]) / 6.0,
    ]
}

/// The ideal-linear-weight value: fifth-order upstream reconstruction.
pub fn ilw_value(w: &StencilWindow) -> f64 {
    (2.0 * w[0] - 13.0 * w[1] + 47.0 * w[2] + 27.0 * w[3] - 3.0 * w[4]) / 60.0
}

/// Differences of substencil reconstructions, `(u⁰ - u¹, u² - u¹)`.
///
/// Written as undivided third differences so the O(Δx³) spread of smooth
/// data survives in floating point; used by the deviation-form solver.
pub fn substencil_spreads(w: &StencilWindow) -> (f64, f64) {
    let a = ((w[0] - w[1]) - 2.0 * (w[1] - w[2])) + (w[2] - w[3]);
    let b = ((w[1] - w[2]) - 2.0 * (w[2] - w[3])) + (w[3] - w[4]);
    (a / 3.0, b / 6.0)
}
