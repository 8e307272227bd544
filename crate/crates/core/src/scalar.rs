//! Scalar abstraction: the whole engine is generic over the real floating
//! type carried inside `Complex<T>`.
//!
//! `f64` is the working precision for everything the CLI does; `f32` is
//! supported with proportionally looser default tolerances.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar type usable as the component type of complex amplitudes.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Default numeric tolerances for this precision.
    fn default_tolerances() -> Tolerances<Self>;
}

/// Centralized numeric tolerances. Every internal consistency check reads
/// from this record; nothing else hard-codes a threshold.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances<T> {
    /// Maximum Hermiticity defect `max_ij |m_ij - conj(m_ji)|` for a density
    /// operator.
    pub hermiticity: T,
    /// Maximum deviation of a density operator trace from 1.
    pub unit_trace: T,
    /// Eigenvalues of a density operator may dip below zero by at most this
    /// much before the operator is rejected as non-positive.
    pub psd_floor: T,
    /// Maximum deviation of a pure-state Euclidean norm from 1.
    pub state_norm: T,
    /// Hermiticity defect accepted by the eigensolver and the trace norm.
    pub hermitian_input: T,
    /// Jacobi sweep convergence: off-diagonal Frobenius norm threshold
    /// (relative to `max(1, ||m||_F)`).
    pub jacobi_off_diagonal: T,
    /// Entanglement measures below this magnitude are clamped to zero.
    pub measure_clamp: T,
    /// A measure more negative than this signals an internal error instead
    /// of eigenvalue noise.
    pub measure_floor: T,
    /// Slack allowed when testing the monogamy inequality.
    pub ckw_slack: T,
    /// Agreement required between the two transpose orders of a pair
    /// negativity (checked in debug builds).
    pub pair_symmetry: T,
}

impl Scalar for f64 {
    fn default_tolerances() -> Tolerances<f64> {
        Tolerances {
            hermiticity: 1e-12,
            unit_trace: 1e-12,
            psd_floor: 1e-10,
            state_norm: 1e-12,
            hermitian_input: 1e-10,
            jacobi_off_diagonal: 1e-13,
            measure_clamp: 1e-12,
            measure_floor: 1e-10,
            ckw_slack: 1e-10,
            pair_symmetry: 1e-10,
        }
    }
}

impl Scalar for f32 {
    fn default_tolerances() -> Tolerances<f32> {
        Tolerances {
            hermiticity: 1e-5,
            unit_trace: 1e-5,
            psd_floor: 1e-4,
            state_norm: 1e-5,
            hermitian_input: 1e-4,
            jacobi_off_diagonal: 1e-6,
            measure_clamp: 1e-5,
            measure_floor: 1e-4,
            ckw_slack: 1e-4,
            pair_symmetry: 1e-4,
        }
    }
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        T::default_tolerances()
    }
}

/// Converts an `f64` constant into the working scalar type.
pub(crate) fn from_f64<T: Scalar>(value: f64) -> T {
    T::from_f64(value).expect("constant not representable in scalar type")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_defaults_are_strictest() {
        let t64 = f64::default_tolerances();
        let t32 = f32::default_tolerances();
        assert!(t64.hermiticity < t32.hermiticity as f64);
        assert!(t64.jacobi_off_diagonal < t32.jacobi_off_diagonal as f64);
    }

    #[test]
    fn tolerances_positive() {
        let t = f64::default_tolerances();
        for v in [
            t.hermiticity,
            t.unit_trace,
            t.psd_floor,
            t.state_norm,
            t.hermitian_input,
            t.jacobi_off_diagonal,
            t.measure_clamp,
            t.measure_floor,
            t.ckw_slack,
            t.pair_symmetry,
        ] {
            assert!(v > 0.0);
        }
    }
}
