//! Entanglement of a 3-qubit GHZ state shared with uniformly accelerated
//! observers.
//!
//! An accelerated observer sees each Minkowski mode as an entangled pair of
//! Rindler-wedge modes; tracing the inaccessible wedge degrades the shared
//! entanglement. This crate builds that state explicitly and computes the
//! negativity-based measures on it:
//!
//! * [`rindler`] constructs the GHZ state, applies the two-mode embedding to
//!   each accelerated observer and traces out the hidden wedge;
//! * [`measures`] computes one-tangles, two-tangles, Wootters concurrence,
//!   monogamy residuals and the pi-tangle;
//! * [`closed_form`] carries the reference closed-form expressions as an
//!   independent reference;
//! * [`sweep`] drives parameter sweeps, CSV emission and the
//!   numeric-vs-closed-form verification run used by the CLI.
//!
//! All linear algebra is generic over the real scalar type through
//! [`scalar::Scalar`]; the `*64` aliases below fix `f64`, which is what the
//! CLI uses.

pub mod closed_form;
pub mod eig;
pub mod error;
pub mod layout;
pub mod matrix;
pub mod measures;
pub mod rindler;
pub mod scalar;
pub mod state;
pub mod sweep;

pub use error::{Error, Result};
pub use layout::SubsystemLayout;
pub use scalar::{Scalar, Tolerances};

/// Double-precision aliases for the core types.
pub type ComplexMatrix64 = matrix::ComplexMatrix<f64>;
pub type PureState64 = state::PureState<f64>;
pub type DensityOperator64 = state::DensityOperator<f64>;
pub type AccelerationParam64 = rindler::AccelerationParam<f64>;
pub type Scenario64 = rindler::Scenario<f64>;
pub type TangleReport64 = measures::TangleReport<f64>;
pub type AnalyticOneTangles64 = closed_form::AnalyticOneTangles<f64>;
