//! Nonlinear weights for every supported scheme, expressed through one
//! uniform decomposition α_s = ψ₁ + H(ω_s)·ψ₂ + ψ₃, plus the
//! order-preserving (OP) row-swap transform built on top of it.
//!
//! Every scheme also has an independent "native formula" evaluator used by
//! the test suite to cross-check the decomposition to a few ulp.

use crate::error::WenoError;
use crate::stencil::{
    beta_js, beta_za, chi_nip, eta_shen_zha, global_indicator, IndicatorKind, StencilWindow,
};

/// Ideal (linear) weights of the fifth-order upstream reconstruction.
pub const IDEAL_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Base nonlinear-weight scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseScheme {
    /// Linear weights only (the ideal-linear-weight scheme).
    Ilw,
    Js,
    M,
    Z,
    ZetaTau5,
    ZetaTau81,
    ZPlus,
    Za,
    D,
    A,
    Nip,
}

impl BaseScheme {
    pub fn label(self) -> &'static str {
        match self {
            BaseScheme::Ilw => "weno-ilw",
            BaseScheme::Js => "weno-js",
            BaseScheme::M => "weno-m",
            BaseScheme::Z => "weno-z",
            BaseScheme::ZetaTau5 => "weno-zeta-tau5",
            BaseScheme::ZetaTau81 => "weno-zeta-tau81",
            BaseScheme::ZPlus => "weno-zplus",
            BaseScheme::Za => "weno-za",
            BaseScheme::D => "weno-d",
            BaseScheme::A => "weno-a",
            BaseScheme::Nip => "weno-nip",
        }
    }

    pub const ALL: [BaseScheme; 11] = [
        BaseScheme::Ilw,
        BaseScheme::Js,
        BaseScheme::M,
        BaseScheme::Z,
        BaseScheme::ZetaTau5,
        BaseScheme::ZetaTau81,
        BaseScheme::ZPlus,
        BaseScheme::Za,
        BaseScheme::D,
        BaseScheme::A,
        BaseScheme::Nip,
    ];

    /// The Z-type schemes, i.e. everything the OP transform applies to.
    pub const Z_TYPES: [BaseScheme; 8] = [
        BaseScheme::Z,
        BaseScheme::ZetaTau5,
        BaseScheme::ZetaTau81,
        BaseScheme::ZPlus,
        BaseScheme::Za,
        BaseScheme::D,
        BaseScheme::A,
        BaseScheme::Nip,
    ];
}

/// A scheme selection: base weights plus the optional OP row-swap mapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchemeId {
    pub base: BaseScheme,
    pub mop: bool,
}

impl SchemeId {
    /// `mop = true` is only defined for the Z-type schemes.
    pub fn new(base: BaseScheme, mop: bool) -> Result<SchemeId, WenoError> {
        if mop && !BaseScheme::Z_TYPES.contains(&base) {
            return Err(WenoError::MopUnsupported(base.label().to_string()));
        }
        Ok(SchemeId { base, mop })
    }

    pub fn base(base: BaseScheme) -> SchemeId {
        SchemeId { base, mop: false }
    }

    pub fn label(&self) -> String {
        if self.mop {
            format!("mop-gm{}", self.base.label())
        } else {
            self.base.label().to_string()
        }
    }

    /// Parse a command-line scheme name, e.g. `weno-z` or `mop-gmweno-z`.
    pub fn parse(name: &str) -> Result<SchemeId, WenoError> {
        let (mop, rest) = match name.strip_prefix("mop-gm") {
            Some(rest) => (true, rest),
            None => (false, name),
        };
        for base in BaseScheme::ALL {
            if base.label() == rest {
                return SchemeId::new(base, mop);
            }
        }
        let valid: Vec<&str> = BaseScheme::ALL.iter().map(|b| b.label()).collect();
        Err(WenoError::UnknownScheme(format!(
            "`{name}` (valid: {}; prefix mop-gm for the order-preserving Z-type variants, e.g. mop-gmweno-z)",
            valid.join(", ")
        )))
    }
}

/// Tunable weight parameters; `new` fills the standard values.
#[derive(Clone, Copy, Debug)]
pub struct WeightCtx {
    pub eps: f64,
    /// Exponent p of the Z/D/A amplification term.
    pub p_exp: f64,
    /// θ of the NIP first-order indicator part.
    pub theta: f64,
    /// Exponent applied to the fourth difference in the NIP indicator.
    pub jexp: f64,
    pub dx: f64,
    /// λ = Δx^{2/3} of the Z+ third term, precomputed off the hot path.
    pub zplus_lambda: f64,
}

impl WeightCtx {
    pub fn new(dx: f64) -> WeightCtx {
        WeightCtx {
            eps: 1e-40,
            p_exp: 2.0,
            theta: 0.1,
            jexp: 1.5,
            dx,
            zplus_lambda: dx.powf(2.0 / 3.0),
        }
    }

    pub fn with_eps(mut self, eps: f64) -> WeightCtx {
        self.eps = eps;
        self
    }
}

/// `x^e` with exact fast paths for the small integer exponents.
#[inline]
fn powg(x: f64, e: f64) -> f64 {
    if e == 2.0 {
        x * x
    } else if e == 1.0 {
        x
    } else if e == 0.0 {
        1.0
    } else {
        x.powf(e)
    }
}

/// Classic weights: α_s = d_s/(ε+β_s)². Returns (ω, raw α); the raw sum
/// Σα feeds the ψ₂ entries of every Z-type scheme.
pub fn weights_js(beta: &[f64; 3], eps: f64) -> ([f64; 3], [f64; 3]) {
    let mut alpha = [0.0; 3];
    for s in 0..3 {
        let q = eps + beta[s];
        alpha[s] = IDEAL_WEIGHTS[s] / (q * q);
    }
    let sum = alpha[0] + alpha[1] + alpha[2];
    (
        [alpha[0] / sum, alpha[1] / sum, alpha[2] / sum],
        alpha,
    )
}

/// The mapping-function increment of the M scheme: (ω−d)³/((ω−d)²+ω(1−ω)).
///
/// Returns the fraction alone (the caller adds ψ₁ = d). The two removable
/// singularities (0,0) and (1,1) are defined as 0 by continuity.
pub fn map_henrick(omega: f64, d: f64) -> f64 {
    let q = omega - d;
    let denom = q * q + omega * (1.0 - omega);
    if denom == 0.0 {
        0.0
    } else {
        q * q * q / denom
    }
}

/// Which mapping H the ψ₂ column is multiplied by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HKind {
    /// H(ω) = ω: all Z-type schemes, and JS itself (α^JS = 0 + ω·1 + 0).
    Omega,
    /// The M mapping fraction.
    Henrick,
}

/// Numeric decomposition rows of one stencil: α_s = ψ₁[s] + H(ω_s)·ψ₂[s] + ψ₃[s].
#[derive(Clone, Copy, Debug)]
pub struct PsiTable {
    pub psi1: [f64; 3],
    pub psi2: [f64; 3],
    pub psi3: [f64; 3],
    pub h_kind: HKind,
}

/// Build the ψ rows of `scheme` for one window.
pub fn psi_decomposition(scheme: BaseScheme, w: &StencilWindow, ctx: &WeightCtx) -> PsiTable {
    let d = IDEAL_WEIGHTS;
    let eps = ctx.eps;
    let beta = beta_js(w).local;
    let (_, alpha_js) = weights_js(&beta, eps);
    let asum = alpha_js[0] + alpha_js[1] + alpha_js[2];
    let zero = [0.0; 3];
    match scheme {
        BaseScheme::Ilw => PsiTable {
            psi1: d,
            psi2: zero,
            psi3: zero,
            h_kind: HKind::Omega,
        },
        BaseScheme::Js => PsiTable {
            psi1: zero,
            psi2: [1.0; 3],
            psi3: zero,
            h_kind: HKind::Omega,
        },
        BaseScheme::M => PsiTable {
            psi1: d,
            psi2: [1.0; 3],
            psi3: zero,
            h_kind: HKind::Henrick,
        },
        BaseScheme::Z => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            // ψ₂ = Σα^JS·τ₅², identical for every substencil
            let p2 = asum * powg(t5, ctx.p_exp);
            PsiTable {
                psi1: d,
                psi2: [p2; 3],
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::ZetaTau5 | BaseScheme::ZetaTau81 => {
            let eta = eta_shen_zha(w).local;
            let kind = if scheme == BaseScheme::ZetaTau5 {
                IndicatorKind::Tau5Eta
            } else {
                IndicatorKind::Tau81
            };
            let t = global_indicator(kind, w, &eta, eps, ctx.jexp);
            let mut psi2 = [0.0; 3];
            for s in 0..3 {
                let eq = eta[s] + eps;
                // Σα^JS·(β+ε)^p/(η+ε)^p·τ^p, grouped through the raw JS alpha
                // so multiplying back by ω^JS reproduces the native correction
                // d·(τ/(η+ε))^p without fresh rounding sites
                let corr = d[s] * powg(t / eq, ctx.p_exp);
                psi2[s] = asum * corr / alpha_js[s];
            }
            PsiTable {
                psi1: d,
                psi2,
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::ZPlus => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let tq = t5 + eps;
            let mut psi2 = [0.0; 3];
            let mut psi3 = [0.0; 3];
            for s in 0..3 {
                let bq = beta[s] + eps;
                let r = tq / bq;
                // equals Σα^JS·(τ₅+ε)² for every row; grouped like the Zη rows
                psi2[s] = asum * (d[s] * (r * r)) / alpha_js[s];
                psi3[s] = d[s] * ctx.zplus_lambda * bq / tq;
            }
            PsiTable {
                psi1: d,
                psi2,
                psi3,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::Za => {
            let bz = beta_za(w).local;
            let t6 = global_indicator(IndicatorKind::Tau6Za, w, &bz, eps, ctx.jexp);
            let a_ind = global_indicator(IndicatorKind::AZa, w, &bz, eps, ctx.jexp);
            let at6 = a_ind * t6;
            let mut psi2 = [0.0; 3];
            for s in 0..3 {
                let bq = beta[s] + eps;
                psi2[s] = asum * (bq * bq) / (bz[s] + eps) * at6;
            }
            PsiTable {
                psi1: d,
                psi2,
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::D => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let phi = global_indicator(IndicatorKind::PhiD, w, &beta, eps, ctx.jexp);
            let num = phi * powg(t5, ctx.p_exp);
            let mut psi2 = [0.0; 3];
            for s in 0..3 {
                psi2[s] = asum * (num * powg(beta[s] + eps, 2.0 - ctx.p_exp));
            }
            PsiTable {
                psi1: d,
                psi2,
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::A => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let phi = global_indicator(IndicatorKind::PhiD, w, &beta, eps, ctx.jexp);
            let num = phi * powg(t5, ctx.p_exp);
            let mut psi1 = [0.0; 3];
            let mut psi2 = [0.0; 3];
            for s in 0..3 {
                let bq = beta[s] + eps;
                let r = t5 / bq;
                // B = 1 exactly when the amplification max(1, Φ·r^p) stays at 1
                let b = if phi * powg(r, ctx.p_exp) <= 1.0 { 1.0 } else { 0.0 };
                psi1[s] = d[s] * b;
                psi2[s] = asum * (num * powg(bq, 2.0 - ctx.p_exp)) * (1.0 - b);
            }
            PsiTable {
                psi1,
                psi2,
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
        BaseScheme::Nip => {
            let chi = chi_nip(w, ctx.theta).local;
            let t = global_indicator(IndicatorKind::TauNip, w, &chi, eps, ctx.jexp);
            let mut psi2 = [0.0; 3];
            for s in 0..3 {
                let bq = beta[s] + eps;
                let cq = chi[s] + eps;
                psi2[s] = asum * t * (bq * bq) / (cq * cq);
            }
            PsiTable {
                psi1: d,
                psi2,
                psi3: zero,
                h_kind: HKind::Omega,
            }
        }
    }
}

/// Assemble raw α values from ψ rows. `rows[s]` selects which ψ row feeds
/// substencil `s`: the identity `[0, 1, 2]` gives the plain scheme, a
/// permuted row vector gives the OP transform. Shared so that the two
/// paths are bit-identical whenever the permutation is the identity.
pub fn alpha_from_psi(psi: &PsiTable, omega_js: &[f64; 3], rows: [usize; 3]) -> [f64; 3] {
    let mut alpha = [0.0; 3];
    for s in 0..3 {
        let r = rows[s];
        let h = match psi.h_kind {
            HKind::Omega => omega_js[s],
            HKind::Henrick => map_henrick(omega_js[s], IDEAL_WEIGHTS[r]),
        };
        alpha[s] = psi.psi1[r] + h * psi.psi2[r] + psi.psi3[r];
    }
    alpha
}

/// Index of the ideal weight nearest to ω; ties keep the earliest index
/// in the original order (0.1, 0.6, 0.3) — updates need strict improvement.
pub fn nearest_ideal(omega: f64) -> usize {
    let mut best = 0;
    let mut dist = (omega - IDEAL_WEIGHTS[0]).abs();
    for j in 1..3 {
        let dj = (omega - IDEAL_WEIGHTS[j]).abs();
        if dj < dist {
            dist = dj;
            best = j;
        }
    }
    best
}

/// Raw α via the uniform formula with the identity row assignment.
pub fn raw_alpha(scheme: BaseScheme, w: &StencilWindow, ctx: &WeightCtx) -> [f64; 3] {
    let beta = beta_js(w).local;
    let (omega, _) = weights_js(&beta, ctx.eps);
    let psi = psi_decomposition(scheme, w, ctx);
    alpha_from_psi(&psi, &omega, [0, 1, 2])
}

/// Raw α of the OP transform: each substencil adopts the ψ row of the
/// substencil whose ideal weight is closest to its own ω^JS.
pub fn mop_alpha(scheme: BaseScheme, w: &StencilWindow, ctx: &WeightCtx) -> [f64; 3] {
    let beta = beta_js(w).local;
    let (omega, _) = weights_js(&beta, ctx.eps);
    let psi = psi_decomposition(scheme, w, ctx);
    let rows = [
        nearest_ideal(omega[0]),
        nearest_ideal(omega[1]),
        nearest_ideal(omega[2]),
    ];
    alpha_from_psi(&psi, &omega, rows)
}

/// Normalize raw α to weights; a non-positive sum means the table upstream
/// produced garbage (or a NaN crept in) and is reported as an error.
pub fn normalize(alpha: [f64; 3]) -> Result<[f64; 3], WenoError> {
    let sum = alpha[0] + alpha[1] + alpha[2];
    if !(sum > 0.0) {
        return Err(WenoError::InvalidWeights);
    }
    Ok([alpha[0] / sum, alpha[1] / sum, alpha[2] / sum])
}

/// Final normalized weights of any scheme, with the ω^JS vector alongside
/// (the pairing the weight-relation scatter export samples).
pub fn scheme_weights_pair(
    id: SchemeId,
    w: &StencilWindow,
    ctx: &WeightCtx,
) -> Result<([f64; 3], [f64; 3]), WenoError> {
    let beta = beta_js(w).local;
    let (omega_js, _) = weights_js(&beta, ctx.eps);
    if id.base == BaseScheme::Ilw {
        return Ok((IDEAL_WEIGHTS, omega_js));
    }
    let psi = psi_decomposition(id.base, w, ctx);
    let rows = if id.mop {
        [
            nearest_ideal(omega_js[0]),
            nearest_ideal(omega_js[1]),
            nearest_ideal(omega_js[2]),
        ]
    } else {
        [0, 1, 2]
    };
    let omega = normalize(alpha_from_psi(&psi, &omega_js, rows))?;
    Ok((omega, omega_js))
}

/// Final normalized weights of any scheme.
pub fn scheme_weights(
    id: SchemeId,
    w: &StencilWindow,
    ctx: &WeightCtx,
) -> Result<[f64; 3], WenoError> {
    Ok(scheme_weights_pair(id, w, ctx)?.0)
}

/// Direct evaluation of each scheme's published α formula, kept separate
/// from the ψ route on purpose: the test suite checks the two agree to a
/// few ulp on random data.
pub fn alpha_native(scheme: BaseScheme, w: &StencilWindow, ctx: &WeightCtx) -> [f64; 3] {
    let d = IDEAL_WEIGHTS;
    let eps = ctx.eps;
    let beta = beta_js(w).local;
    let mut alpha = [0.0; 3];
    match scheme {
        BaseScheme::Ilw => alpha = d,
        BaseScheme::Js => {
            let (omega, _) = weights_js(&beta, eps);
            alpha = omega;
        }
        BaseScheme::M => {
            let (omega, _) = weights_js(&beta, eps);
            for s in 0..3 {
                alpha[s] = d[s] + map_henrick(omega[s], d[s]);
            }
        }
        BaseScheme::Z => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let tp = powg(t5, ctx.p_exp);
            for s in 0..3 {
                let bq = beta[s] + eps;
                // d·(1 + τ₅^p/(β+ε)²): at the standard p = 2 this is the
                // classic d·(1 + (τ₅/(β+ε))²), factored the way the ψ route
                // rounds through it
                alpha[s] = d[s] + d[s] / (bq * bq) * tp;
            }
        }
        BaseScheme::ZetaTau5 | BaseScheme::ZetaTau81 => {
            let eta = eta_shen_zha(w).local;
            let kind = if scheme == BaseScheme::ZetaTau5 {
                IndicatorKind::Tau5Eta
            } else {
                IndicatorKind::Tau81
            };
            let t = global_indicator(kind, w, &eta, eps, ctx.jexp);
            for s in 0..3 {
                alpha[s] = d[s] + d[s] * powg(t / (eta[s] + eps), ctx.p_exp);
            }
        }
        BaseScheme::ZPlus => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let tq = t5 + eps;
            for s in 0..3 {
                let bq = beta[s] + eps;
                let r = tq / bq;
                alpha[s] = d[s] + d[s] * (r * r) + d[s] * ctx.zplus_lambda * bq / tq;
            }
        }
        BaseScheme::Za => {
            let bz = beta_za(w).local;
            let t6 = global_indicator(IndicatorKind::Tau6Za, w, &bz, eps, ctx.jexp);
            let a_ind = global_indicator(IndicatorKind::AZa, w, &bz, eps, ctx.jexp);
            let at6 = a_ind * t6;
            for s in 0..3 {
                alpha[s] = d[s] * (1.0 + at6 / (bz[s] + eps));
            }
        }
        BaseScheme::D => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let phi = global_indicator(IndicatorKind::PhiD, w, &beta, eps, ctx.jexp);
            let num = phi * powg(t5, ctx.p_exp);
            for s in 0..3 {
                let bq = beta[s] + eps;
                alpha[s] = d[s] + d[s] / (bq * bq) * (num * powg(bq, 2.0 - ctx.p_exp));
            }
        }
        BaseScheme::A => {
            let t5 = global_indicator(IndicatorKind::Tau5Js, w, &beta, eps, ctx.jexp);
            let phi = global_indicator(IndicatorKind::PhiD, w, &beta, eps, ctx.jexp);
            let num = phi * powg(t5, ctx.p_exp);
            for s in 0..3 {
                let bq = beta[s] + eps;
                // the max(1, ·) switch, with the amplified branch factored
                // like the D correction
                if phi * powg(t5 / bq, ctx.p_exp) <= 1.0 {
                    alpha[s] = d[s];
                } else {
                    alpha[s] = d[s] / (bq * bq) * (num * powg(bq, 2.0 - ctx.p_exp));
                }
            }
        }
        BaseScheme::Nip => {
            let chi = chi_nip(w, ctx.theta).local;
            let t = global_indicator(IndicatorKind::TauNip, w, &chi, eps, ctx.jexp);
            for s in 0..3 {
                let cq = eps + chi[s];
                alpha[s] = d[s] * (1.0 + t / (cq * cq));
            }
        }
    }
    alpha
}
