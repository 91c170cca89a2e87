//! Flux functions, wave speeds, and characteristic bases for the model systems.
//!
//! Everything here is a pure function of one or two states. Divergence
//! detection (non-finite or non-physical cells) is the solver's job; the
//! routines below never panic on bad input, they just propagate NaN.

/// Ratio of specific heats for the gas problems.
pub const GAMMA: f64 = 1.4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    X,
    Y,
}

/// Left/right eigenvector pair of a flux Jacobian frozen at one state.
///
/// `to_char` applies the left matrix (conserved -> characteristic) and
/// `from_char` the right matrix (characteristic -> conserved); the two are
/// inverses up to roundoff.
#[derive(Clone, Copy, Debug)]
pub struct CharBasis<const M: usize> {
    pub left: [[f64; M]; M],
    pub right: [[f64; M]; M],
}

impl<const M: usize> CharBasis<M> {
    pub fn identity() -> Self {
        let mut left = [[0.0; M]; M];
        let mut right = [[0.0; M]; M];
        for i in 0..M {
            left[i][i] = 1.0;
            right[i][i] = 1.0;
        }
        CharBasis { left, right }
    }

    pub fn to_char(&self, u: &[f64; M]) -> [f64; M] {
        matvec(&self.left, u)
    }

    pub fn from_char(&self, w: &[f64; M]) -> [f64; M] {
        matvec(&self.right, w)
    }
}

fn matvec<const M: usize>(a: &[[f64; M]; M], x: &[f64; M]) -> [f64; M] {
    let mut out = [0.0; M];
    for i in 0..M {
        let mut acc = 0.0;
        for j in 0..M {
            acc += a[i][j] * x[j];
        }
        out[i] = acc;
    }
    out
}

/// A hyperbolic conservation law with `M` conserved components.
pub trait System<const M: usize> {
    /// Physical flux along `axis`.
    fn flux(&self, u: &[f64; M], axis: Axis) -> [f64; M];

    /// Largest characteristic speed |lambda| of one state along `axis`.
    fn wavespeed(&self, u: &[f64; M], axis: Axis) -> f64;

    /// Eigenvector basis at the arithmetic average of two neighbor states.
    fn basis(&self, ul: &[f64; M], ur: &[f64; M], axis: Axis) -> CharBasis<M>;

    /// Quick physical-validity check used by the solver's divergence scan.
    fn admissible(&self, u: &[f64; M]) -> bool {
        u.iter().all(|v| v.is_finite())
    }

    /// True when the global LF flux with alpha = wavespeed collapses to pure
    /// upwinding (linear flux, unit speed), letting the solver skip the
    /// right-biased reconstruction entirely.
    const LINEAR_UPWIND: bool = false;

    /// Whether interface reconstruction runs in characteristic variables.
    const CHARACTERISTIC: bool = true;
}

/// Scalar advection u_t + u_x (+ u_y) = 0 with unit speed.
pub struct Advection;

impl System<1> for Advection {
    fn flux(&self, u: &[f64; 1], _axis: Axis) -> [f64; 1] {
        *u
    }

    fn wavespeed(&self, _u: &[f64; 1], _axis: Axis) -> f64 {
        1.0
    }

    fn basis(&self, _ul: &[f64; 1], _ur: &[f64; 1], _axis: Axis) -> CharBasis<1> {
        CharBasis::identity()
    }

    const LINEAR_UPWIND: bool = true;
    const CHARACTERISTIC: bool = false;
}

/// Conserved state (rho, rho*u, E) from primitives.
pub fn euler_state_1d(rho: f64, vel: f64, p: f64) -> [f64; 3] {
    [rho, rho * vel, p / (GAMMA - 1.0) + 0.5 * rho * vel * vel]
}

/// Primitives (rho, u, p) from a conserved state.
pub fn euler_primitive_1d(u: &[f64; 3]) -> (f64, f64, f64) {
    let rho = u[0];
    let vel = u[1] / rho;
    let p = (GAMMA - 1.0) * (u[2] - 0.5 * rho * vel * vel);
    (rho, vel, p)
}

/// One-dimensional Euler equations of an ideal gas.
pub struct Euler1D;

impl System<3> for Euler1D {
    fn flux(&self, u: &[f64; 3], _axis: Axis) -> [f64; 3] {
        let (rho, vel, p) = euler_primitive_1d(u);
        [rho * vel, rho * vel * vel + p, vel * (u[2] + p)]
    }

    fn wavespeed(&self, u: &[f64; 3], _axis: Axis) -> f64 {
        let (rho, vel, p) = euler_primitive_1d(u);
        vel.abs() + (GAMMA * p / rho).sqrt()
    }

    fn basis(&self, ul: &[f64; 3], ur: &[f64; 3], _axis: Axis) -> CharBasis<3> {
        let avg = [
            0.5 * (ul[0] + ur[0]),
            0.5 * (ul[1] + ur[1]),
            0.5 * (ul[2] + ur[2]),
        ];
        let (rho, u, p) = euler_primitive_1d(&avg);
        let c2 = GAMMA * p / rho;
        let c = c2.sqrt();
        let h = (avg[2] + p) / rho;
        let b1 = (GAMMA - 1.0) / c2;
        let b2 = 0.5 * b1 * u * u;

        let right = [
            [1.0, 1.0, 1.0],
            [u - c, u, u + c],
            [h - u * c, 0.5 * u * u, h + u * c],
        ];
        let left = [
            [
                0.5 * (b2 + u / c),
                -0.5 * (b1 * u + 1.0 / c),
                0.5 * b1,
            ],
            [1.0 - b2, b1 * u, -b1],
            [
                0.5 * (b2 - u / c),
                -0.5 * (b1 * u - 1.0 / c),
                0.5 * b1,
            ],
        ];
        CharBasis { left, right }
    }

    fn admissible(&self, u: &[f64; 3]) -> bool {
        if !u.iter().all(|v| v.is_finite()) {
            return false;
        }
        let (rho, _, p) = euler_primitive_1d(u);
        rho > 0.0 && p > 0.0
    }
}

/// Conserved state (rho, rho*u, rho*v, E) from primitives.
pub fn euler_state_2d(rho: f64, u: f64, v: f64, p: f64) -> [f64; 4] {
    [
        rho,
        rho * u,
        rho * v,
        p / (GAMMA - 1.0) + 0.5 * rho * (u * u + v * v),
    ]
}

/// Primitives (rho, u, v, p) from a conserved state.
pub fn euler_primitive_2d(s: &[f64; 4]) -> (f64, f64, f64, f64) {
    let rho = s[0];
    let u = s[1] / rho;
    let v = s[2] / rho;
    let p = (GAMMA - 1.0) * (s[3] - 0.5 * rho * (u * u + v * v));
    (rho, u, v, p)
}

/// Two-dimensional Euler equations of an ideal gas.
pub struct Euler2D;

impl System<4> for Euler2D {
    fn flux(&self, s: &[f64; 4], axis: Axis) -> [f64; 4] {
        let (rho, u, v, p) = euler_primitive_2d(s);
        match axis {
            Axis::X => [rho * u, rho * u * u + p, rho * u * v, u * (s[3] + p)],
            Axis::Y => [rho * v, rho * u * v, rho * v * v + p, v * (s[3] + p)],
        }
    }

    fn wavespeed(&self, s: &[f64; 4], axis: Axis) -> f64 {
        let (rho, u, v, p) = euler_primitive_2d(s);
        let c = (GAMMA * p / rho).sqrt();
        match axis {
            Axis::X => u.abs() + c,
            Axis::Y => v.abs() + c,
        }
    }

    fn basis(&self, ul: &[f64; 4], ur: &[f64; 4], axis: Axis) -> CharBasis<4> {
        let mut avg = [0.0; 4];
        for i in 0..4 {
            avg[i] = 0.5 * (ul[i] + ur[i]);
        }
        let (rho, u, v, p) = euler_primitive_2d(&avg);
        let c2 = GAMMA * p / rho;
        let c = c2.sqrt();
        let h = (avg[3] + p) / rho;
        let b1 = (GAMMA - 1.0) / c2;
        let q2 = u * u + v * v;
        let b2 = 0.5 * b1 * q2;

        // The Y basis is the X basis with the roles of u and v (and the two
        // momentum rows) exchanged.
        match axis {
            Axis::X => {
                let right = [
                    [1.0, 1.0, 0.0, 1.0],
                    [u - c, u, 0.0, u + c],
                    [v, v, 1.0, v],
                    [h - u * c, 0.5 * q2, v, h + u * c],
                ];
                let left = [
                    [
                        0.5 * (b2 + u / c),
                        -0.5 * (b1 * u + 1.0 / c),
                        -0.5 * b1 * v,
                        0.5 * b1,
                    ],
                    [1.0 - b2, b1 * u, b1 * v, -b1],
                    [-v, 0.0, 1.0, 0.0],
                    [
                        0.5 * (b2 - u / c),
                        -0.5 * (b1 * u - 1.0 / c),
                        -0.5 * b1 * v,
                        0.5 * b1,
                    ],
                ];
                CharBasis { left, right }
            }
            Axis::Y => {
                let right = [
                    [1.0, 1.0, 0.0, 1.0],
                    [u, u, 1.0, u],
                    [v - c, v, 0.0, v + c],
                    [h - v * c, 0.5 * q2, u, h + v * c],
                ];
                let left = [
                    [
                        0.5 * (b2 + v / c),
                        -0.5 * b1 * u,
                        -0.5 * (b1 * v + 1.0 / c),
                        0.5 * b1,
                    ],
                    [1.0 - b2, b1 * u, b1 * v, -b1],
                    [-u, 1.0, 0.0, 0.0],
                    [
                        0.5 * (b2 - v / c),
                        -0.5 * b1 * u,
                        -0.5 * (b1 * v - 1.0 / c),
                        0.5 * b1,
                    ],
                ];
                CharBasis { left, right }
            }
        }
    }

    fn admissible(&self, s: &[f64; 4]) -> bool {
        if !s.iter().all(|v| v.is_finite()) {
            return false;
        }
        let (rho, _, _, p) = euler_primitive_2d(s);
        rho > 0.0 && p > 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn euler_flux_hand_values() {
        let s = euler_state_1d(1.0, 0.0, 1.0);
        let f = Euler1D.flux(&s, Axis::X);
        assert_eq!(f, [0.0, 1.0, 0.0]);

        let s = euler_state_1d(1.0, 1.0, 1.0);
        assert_relative_eq!(s[2], 3.0, max_relative = 1e-15);
        let f = Euler1D.flux(&s, Axis::X);
        assert_relative_eq!(f[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(f[1], 2.0, max_relative = 1e-14);
        assert_relative_eq!(f[2], 4.0, max_relative = 1e-14);

        assert_relative_eq!(
            Euler1D.wavespeed(&euler_state_1d(1.0, 0.0, 1.0), Axis::X),
            1.4f64.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn primitive_round_trip() {
        let s = euler_state_1d(0.7, -1.3, 2.1);
        let (rho, vel, p) = euler_primitive_1d(&s);
        assert_relative_eq!(rho, 0.7, max_relative = 1e-14);
        assert_relative_eq!(vel, -1.3, max_relative = 1e-14);
        assert_relative_eq!(p, 2.1, max_relative = 1e-14);

        let s = euler_state_2d(1.25, 0.4, -0.9, 0.55);
        let (rho, u, v, p) = euler_primitive_2d(&s);
        assert_relative_eq!(rho, 1.25, max_relative = 1e-14);
        assert_relative_eq!(u, 0.4, max_relative = 1e-14);
        assert_relative_eq!(v, -0.9, max_relative = 1e-14);
        assert_relative_eq!(p, 0.55, max_relative = 1e-14);
    }

    #[test]
    fn flux_2d_axis_symmetry() {
        // G(rho,u,v,E) must equal F(rho,v,u,E) with its momentum rows swapped.
        let s = euler_state_2d(1.1, 0.3, -0.8, 0.9);
        let swapped = euler_state_2d(1.1, -0.8, 0.3, 0.9);
        let g = Euler2D.flux(&s, Axis::Y);
        let f = Euler2D.flux(&swapped, Axis::X);
        assert_relative_eq!(g[0], f[0], max_relative = 1e-14);
        assert_relative_eq!(g[1], f[2], max_relative = 1e-14);
        assert_relative_eq!(g[2], f[1], max_relative = 1e-14);
        assert_relative_eq!(g[3], f[3], max_relative = 1e-14);

        let still = euler_state_2d(2.0, 0.0, 0.0, 0.75);
        assert_eq!(Euler2D.flux(&still, Axis::X), [0.0, 0.75, 0.0, 0.0]);
        assert_eq!(Euler2D.flux(&still, Axis::Y), [0.0, 0.0, 0.75, 0.0]);
    }

    fn check_inverse<const M: usize>(b: &CharBasis<M>, tol: f64) {
        for i in 0..M {
            let mut e = [0.0; M];
            e[i] = 1.0;
            let round = b.from_char(&b.to_char(&e));
            for j in 0..M {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (round[j] - want).abs() <= tol,
                    "L*R deviates from identity: entry ({j},{i}) = {}",
                    round[j]
                );
            }
        }
    }

    #[test]
    fn characteristic_round_trip_random_states() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9d2c5680);
        for _ in 0..10_000 {
            let rho = rng.gen_range(0.1..5.0);
            let vel = rng.gen_range(-3.0..3.0);
            let p = rng.gen_range(0.05..10.0);
            let ul = euler_state_1d(rho, vel, p);
            let ur = euler_state_1d(
                rng.gen_range(0.1..5.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(0.05..10.0),
            );
            check_inverse(&Euler1D.basis(&ul, &ur, Axis::X), 1e-12);

            let sl = euler_state_2d(rho, vel, rng.gen_range(-3.0..3.0), p);
            let sr = euler_state_2d(
                rng.gen_range(0.1..5.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(0.05..10.0),
            );
            check_inverse(&Euler2D.basis(&sl, &sr, Axis::X), 1e-12);
            check_inverse(&Euler2D.basis(&sl, &sr, Axis::Y), 1e-12);
        }
    }

    #[test]
    fn eigen_decomposition_matches_flux_jacobian() {
        // R * diag(lambda) * L should reproduce dF/dU, checked against a
        // central finite-difference Jacobian at a generic state.
        let s = euler_state_1d(1.3, 0.7, 1.9);
        let b = Euler1D.basis(&s, &s, Axis::X);
        let (rho, u, p) = euler_primitive_1d(&s);
        let _ = rho;
        let c = (GAMMA * p / s[0]).sqrt();
        let lam = [u - c, u, u + c];

        let eps = 1e-6;
        for j in 0..3 {
            let mut up = s;
            let mut dn = s;
            up[j] += eps;
            dn[j] -= eps;
            let fp = Euler1D.flux(&up, Axis::X);
            let fm = Euler1D.flux(&dn, Axis::X);
            for i in 0..3 {
                let fd = (fp[i] - fm[i]) / (2.0 * eps);
                let mut analytic = 0.0;
                for k in 0..3 {
                    analytic += b.right[i][k] * lam[k] * b.left[k][j];
                }
                assert_relative_eq!(analytic, fd, epsilon = 1e-5, max_relative = 1e-5);
            }
        }
    }

    #[test]
    fn eigenvalues_at_rest_state() {
        let s = euler_state_1d(1.0, 0.0, 1.0);
        let (_, u, p) = euler_primitive_1d(&s);
        let c = (GAMMA * p / s[0]).sqrt();
        let lam = [u - c, u, u + c];
        assert_relative_eq!(lam[0], -1.4f64.sqrt(), max_relative = 1e-15);
        assert_eq!(lam[1], 0.0);
        assert_relative_eq!(lam[2], 1.4f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn constant_stencil_stays_constant_in_characteristics() {
        let s = euler_state_1d(1.0, 0.5, 0.8);
        let b = Euler1D.basis(&s, &s, Axis::X);
        let w = b.to_char(&s);
        let back = b.from_char(&w);
        for i in 0..3 {
            assert_relative_eq!(back[i], s[i], max_relative = 1e-13);
        }
    }

    #[test]
    fn admissibility_flags_bad_states() {
        assert!(Euler1D.admissible(&euler_state_1d(1.0, 2.0, 3.0)));
        assert!(!Euler1D.admissible(&[1.0, f64::NAN, 1.0]));
        assert!(!Euler1D.admissible(&euler_state_1d(-1.0, 0.0, 1.0)));
        // Kinetic energy exceeding total energy means negative pressure.
        assert!(!Euler1D.admissible(&[1.0, 10.0, 1.0]));
        assert!(Euler2D.admissible(&euler_state_2d(1.0, 0.1, 0.2, 0.3)));
        assert!(!Euler2D.admissible(&[1.0, 0.0, 0.0, -2.0]));
    }
}
