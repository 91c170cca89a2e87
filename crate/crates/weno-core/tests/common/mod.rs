//! Helpers shared by the integration-test binaries.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Distance in representable doubles between two finite values; values of
/// opposite sign are measured through zero.
pub fn ulp_diff(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if !a.is_finite() || !b.is_finite() {
        return u64::MAX;
    }
    if (a < 0.0) != (b < 0.0) {
        return a.abs().to_bits().saturating_add(b.abs().to_bits());
    }
    a.abs().to_bits().abs_diff(b.abs().to_bits())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard-normal five-cell window.
pub fn normal_window(r: &mut ChaCha8Rng) -> [f64; 5] {
    let mut w = [0.0; 5];
    for v in &mut w {
        *v = r.sample(StandardNormal);
    }
    w
}
