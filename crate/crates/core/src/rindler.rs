//! Inertial GHZ state and the single-mode fermionic embedding seen by a
//! uniformly accelerated observer.
//!
//! From the accelerated frame a Minkowski vacuum mode splits across the two
//! Rindler wedges,
//!
//! ```text
//! |0>  ->  cos r |0>_I |0>_II + sin r |1>_I |1>_II
//! |1>  ->  |1>_I |0>_II
//! ```
//!
//! with `cos r = (exp(-2 pi omega c / a) + 1)^(-1/2)`, so `r` runs from 0
//! (inertial) to pi/4 (infinite acceleration). Region II is causally
//! disconnected from the observer and gets traced out.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::layout::SubsystemLayout;
use crate::scalar::{from_f64, Scalar};
use crate::state::{DensityOperator, PureState};

/// Acceleration parameter `r` in radians, restricted to the fermionic range
/// `[0, pi/4]` (equivalently `cos r` in `[1/sqrt(2), 1]`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccelerationParam<T> {
    r: T,
}

impl<T: Scalar> AccelerationParam<T> {
    pub fn new(r: T) -> Result<Self> {
        let quarter_pi = from_f64::<T>(std::f64::consts::FRAC_PI_4);
        if !r.is_finite() || r < T::zero() || r > quarter_pi {
            return Err(Error::ParamOutOfRange {
                value: r.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { r })
    }

    /// The inertial limit `r = 0`.
    pub fn inertial() -> Self {
        Self { r: T::zero() }
    }

    pub fn r(&self) -> T {
        self.r
    }
}

/// Maps a physical acceleration to the parameter `r`:
/// `r = arccos((exp(-2 pi omega c / a) + 1)^(-1/2))`.
///
/// Monotone increasing in `a`, with `r -> 0` as `a -> 0` and `r -> pi/4`
/// as `a -> infinity`.
pub fn acceleration_to_r<T: Scalar>(omega: T, accel: T, c: T) -> Result<AccelerationParam<T>> {
    for (name, value) in [("omega", omega), ("accel", accel), ("c", c)] {
        if !value.is_finite() || value <= T::zero() {
            return Err(Error::NonPositiveArgument {
                name,
                value: value.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let two_pi = from_f64::<T>(std::f64::consts::TAU);
    let exponent = -(two_pi * omega * c / accel);
    let cos_r = T::one() / (exponent.exp() + T::one()).sqrt();
    // Rounding can push acos a hair past pi/4 in the infinite-acceleration
    // limit; clamp back into range.
    let quarter_pi = from_f64::<T>(std::f64::consts::FRAC_PI_4);
    let r = cos_r.acos().max(T::zero()).min(quarter_pi);
    AccelerationParam::new(r)
}

/// Which observers are accelerated, and how hard.
///
/// `one_accelerated` (only Charlie) and `two_accelerated` (Bob and Charlie)
/// are the two configurations of interest; Alice is always inertial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scenario<T> {
    b: Option<AccelerationParam<T>>,
    c: Option<AccelerationParam<T>>,
}

impl<T: Scalar> Scenario<T> {
    pub fn new(b: Option<AccelerationParam<T>>, c: Option<AccelerationParam<T>>) -> Result<Self> {
        if b.is_none() && c.is_none() {
            return Err(Error::EmptyScenario);
        }
        Ok(Self { b, c })
    }

    /// Alice and Bob stationary, Charlie accelerated.
    pub fn one_accelerated(r_c: AccelerationParam<T>) -> Self {
        Self {
            b: None,
            c: Some(r_c),
        }
    }

    /// Alice stationary, Bob and Charlie accelerated.
    pub fn two_accelerated(r_b: AccelerationParam<T>, r_c: AccelerationParam<T>) -> Self {
        Self {
            b: Some(r_b),
            c: Some(r_c),
        }
    }

    pub fn r_b(&self) -> Option<AccelerationParam<T>> {
        self.b
    }

    pub fn r_c(&self) -> Option<AccelerationParam<T>> {
        self.c
    }
}

/// The shared 3-qubit GHZ state `(|000> + |111>) / sqrt(2)` on `(A, B, C)`.
pub fn ghz_state<T: Scalar>() -> PureState<T> {
    let layout = SubsystemLayout::qubits(vec!["A", "B", "C"]).expect("fixed labels");
    let mut amplitudes = vec![Complex::zero(); 8];
    let w = Complex::new(T::one() / from_f64::<T>(2.0).sqrt(), T::zero());
    amplitudes[0] = w;
    amplitudes[7] = w;
    PureState::new(layout, amplitudes).expect("GHZ is normalized")
}

/// Rewrites one dim-2 factor of `state` in Rindler modes: the factor `mode`
/// is replaced by the adjacent pair `(mode_I, mode_II)` and each amplitude
/// is split according to the embedding above. Norm is preserved.
pub fn unruh_embed<T: Scalar>(
    state: &PureState<T>,
    mode: &str,
    param: AccelerationParam<T>,
) -> Result<PureState<T>> {
    let layout = state.layout();
    let pos = layout.position_or_err(mode)?;
    if layout.dim_at(pos) != 2 {
        return Err(Error::WrongLayout {
            expected: format!("factor `{mode}` of dimension 2"),
            got: format!("dimension {}", layout.dim_at(pos)),
        });
    }

    let new_layout = layout.replace_factor(
        pos,
        vec![(format!("{mode}_I"), 2), (format!("{mode}_II"), 2)],
    )?;
    let (cos_r, sin_r) = (param.r().cos(), param.r().sin());

    let mut amplitudes = vec![Complex::zero(); new_layout.total_dim()];
    for (index, &amp) in state.amplitudes().iter().enumerate() {
        if amp.is_zero() {
            continue;
        }
        let digits = layout.digits(index);
        let mut target = Vec::with_capacity(digits.len() + 1);
        target.extend_from_slice(&digits[..pos]);
        target.extend_from_slice(&[0, 0]);
        target.extend_from_slice(&digits[pos + 1..]);
        if digits[pos] == 0 {
            // |0> -> cos r |00> + sin r |11>
            target[pos] = 0;
            target[pos + 1] = 0;
            amplitudes[new_layout.flat_index(&target)] =
                amplitudes[new_layout.flat_index(&target)] + amp.scale(cos_r);
            target[pos] = 1;
            target[pos + 1] = 1;
            amplitudes[new_layout.flat_index(&target)] =
                amplitudes[new_layout.flat_index(&target)] + amp.scale(sin_r);
        } else {
            // |1> -> |10>
            target[pos] = 1;
            target[pos + 1] = 0;
            amplitudes[new_layout.flat_index(&target)] =
                amplitudes[new_layout.flat_index(&target)] + amp;
        }
    }
    PureState::new(new_layout, amplitudes)
}

/// Full pipeline for a scenario: GHZ state, Rindler embedding of each
/// accelerated observer, then a trace over the inaccessible region-II
/// modes. The result is a 3-qubit operator on `(A, B or B_I, C or C_I)`.
pub fn physical_state<T: Scalar>(scenario: &Scenario<T>) -> Result<DensityOperator<T>> {
    let mut state = ghz_state::<T>();
    if let Some(r_b) = scenario.r_b() {
        state = unruh_embed(&state, "B", r_b)?;
    }
    if let Some(r_c) = scenario.r_c() {
        state = unruh_embed(&state, "C", r_c)?;
    }
    let keep: Vec<&str> = state
        .layout()
        .labels()
        .filter(|l| !l.ends_with("_II"))
        .collect();
    state.to_density().partial_trace(&keep)
}
