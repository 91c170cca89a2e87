//! Interface reconstruction: convex combinations of the substencil values
//! with any scheme's weights, on both sides of a cell interface.

use crate::error::WenoError;
use crate::stencil::{substencil_values, StencilWindow};
use crate::weights::{scheme_weights, SchemeId, WeightCtx};

/// The two biased reconstructions meeting at one interface.
#[derive(Clone, Copy, Debug)]
pub struct InterfaceStates {
    pub minus: f64,
    pub plus: f64,
}

/// Left-biased value at `x_{j+1/2}` from the window `ubar[j-2..=j+2]`.
pub fn reconstruct_minus(
    w: &StencilWindow,
    id: SchemeId,
    ctx: &WeightCtx,
) -> Result<f64, WenoError> {
    let omega = scheme_weights(id, w, ctx)?;
    let u = substencil_values(w);
    Ok(omega[0] * u[0] + omega[1] * u[1] + omega[2] * u[2])
}

/// Both biased values at `x_{j+1/2}` from the six cells `ubar[j-2..=j+3]`.
///
/// The right-biased value is the left-biased reconstruction applied to the
/// window reflected through the interface, so mirror-symmetric data yields
/// `minus == plus` bit-for-bit (for reversal-symmetric weight schemes).
pub fn reconstruct_pair(
    six: &[f64; 6],
    id: SchemeId,
    ctx: &WeightCtx,
) -> Result<InterfaceStates, WenoError> {
    let wm: StencilWindow = [six[0], six[1], six[2], six[3], six[4]];
    let wp: StencilWindow = [six[5], six[4], six[3], six[2], six[1]];
    Ok(InterfaceStates {
        minus: reconstruct_minus(&wm, id, ctx)?,
        plus: reconstruct_minus(&wp, id, ctx)?,
    })
}
