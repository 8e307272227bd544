//! Reference closed-form one-tangle expressions for both acceleration
//! scenarios, kept verbatim in their source form so they can serve as an
//! independent check on the numeric pipeline.
//!
//! The `verify` machinery compares these against the eigenvalue pipeline
//! point by point and reports every deviation; the expressions themselves
//! are deliberately not simplified or corrected, including their final
//! `- 1` terms.

use crate::error::{Error, Result};
use crate::rindler::{AccelerationParam, Scenario};
use crate::scalar::{from_f64, Scalar};

/// The three closed-form one-tangle values of a scenario.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticOneTangles<T> {
    /// Negativity of the first stationary party against the rest.
    pub n_a: T,
    /// Negativity of the second party against the rest.
    pub n_b: T,
    /// Negativity of the third party against the rest.
    pub n_c: T,
}

/// Closed forms for the case where both Bob and Charlie accelerate:
///
/// ```text
/// N_A = 1/2 [ cb cc + cc^2 + cb^2 sc^2 + sqrt(cb^2 cc^2 + sb^4 sc^4) - 1 ]
/// N_B = 1/2 [ cb cc + cb^2 + sb^2 sc^2 + cc sqrt(cb^2 + sb^4 cc^2) - 1 ]
/// N_C = 1/2 [ cb cc + sb^2 + cb^2 cc^2 + cb sqrt(cc^2 + sc^4 cb^2) - 1 ]
/// ```
pub fn two_acc_one_tangles<T: Scalar>(
    r_b: AccelerationParam<T>,
    r_c: AccelerationParam<T>,
) -> AnalyticOneTangles<T> {
    let half = from_f64::<T>(0.5);
    let (cb, sb) = (r_b.r().cos(), r_b.r().sin());
    let (cc, sc) = (r_c.r().cos(), r_c.r().sin());

    let n_a = half
        * (cb * cc
            + cc * cc
            + cb * cb * sc * sc
            + (cb * cb * cc * cc + sb.powi(4) * sc.powi(4)).sqrt()
            - T::one());
    let n_b = half
        * (cb * cc + cb * cb + sb * sb * sc * sc + cc * (cb * cb + sb.powi(4) * cc * cc).sqrt()
            - T::one());
    let n_c = half
        * (cb * cc + sb * sb + cb * cb * cc * cc + cb * (cc * cc + sc.powi(4) * cb * cb).sqrt()
            - T::one());
    AnalyticOneTangles { n_a, n_b, n_c }
}

/// Closed forms for the case where only Charlie accelerates:
///
/// ```text
/// N_A = N_B = cos r_c
/// N_C = 1/2 [ cos r_c + cos^2 r_c + sqrt(cos^2 r_c + sin^4 r_c) - 1 ]
/// ```
pub fn one_acc_one_tangles<T: Scalar>(r_c: AccelerationParam<T>) -> AnalyticOneTangles<T> {
    let half = from_f64::<T>(0.5);
    let (cc, sc) = (r_c.r().cos(), r_c.r().sin());
    let n_c = half * (cc + cc * cc + (cc * cc + sc.powi(4)).sqrt() - T::one());
    AnalyticOneTangles {
        n_a: cc,
        n_b: cc,
        n_c,
    }
}

impl<T: Scalar> AnalyticOneTangles<T> {
    /// One third of the sum of squared one-tangles. The two-tangles are
    /// identically zero, so this is the closed-form pi-tangle.
    pub fn pi_tangle(&self) -> T {
        let third = T::one() / from_f64::<T>(3.0);
        (self.n_a * self.n_a + self.n_b * self.n_b + self.n_c * self.n_c) * third
    }
}

/// Closed-form one-tangles of a scenario.
///
/// A scenario accelerating only Bob is handled by the `b <-> c` relabeling
/// symmetry of the shared state.
pub fn analytic_one_tangles<T: Scalar>(scenario: &Scenario<T>) -> Result<AnalyticOneTangles<T>> {
    match (scenario.r_b(), scenario.r_c()) {
        (Some(r_b), Some(r_c)) => Ok(two_acc_one_tangles(r_b, r_c)),
        (None, Some(r_c)) => Ok(one_acc_one_tangles(r_c)),
        (Some(r_b), None) => {
            let swapped = one_acc_one_tangles(r_b);
            Ok(AnalyticOneTangles {
                n_a: swapped.n_a,
                n_b: swapped.n_c,
                n_c: swapped.n_b,
            })
        }
        (None, None) => Err(Error::EmptyScenario),
    }
}

/// Closed-form pi-tangle of a scenario.
pub fn analytic_pi<T: Scalar>(scenario: &Scenario<T>) -> Result<T> {
    Ok(analytic_one_tangles(scenario)?.pi_tangle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    fn param(r: f64) -> AccelerationParam<f64> {
        AccelerationParam::new(r).unwrap()
    }

    #[test]
    fn inertial_limit_is_unity() {
        let t = two_acc_one_tangles(param(0.0), param(0.0));
        assert_eq!((t.n_a, t.n_b, t.n_c), (1.0, 1.0, 1.0));
        let o = one_acc_one_tangles(param(0.0));
        assert_eq!((o.n_a, o.n_b, o.n_c), (1.0, 1.0, 1.0));
    }

    #[test]
    fn two_acc_infinite_acceleration_limit() {
        // Substituting cos r = sin r = 1/sqrt(2) makes all three expressions
        // (1 + sqrt(5))/8; the limit value quoted alongside them, (1 - sqrt(5))/8,
        // is negative and clearly a sign slip.
        let expected = (1.0 + 5f64.sqrt()) / 8.0;
        let t = two_acc_one_tangles(param(FRAC_PI_4), param(FRAC_PI_4));
        assert!((t.n_a - expected).abs() < 1e-15);
        assert!((t.n_b - expected).abs() < 1e-15);
        assert!((t.n_c - expected).abs() < 1e-15);
    }

    #[test]
    fn equal_accelerations_make_bc_symmetric() {
        // The two formulas are the b <-> c relabeling of each other; at
        // equal angles they agree to rounding in the polynomial part.
        for k in 0..=16 {
            let r = param(FRAC_PI_4 * k as f64 / 16.0);
            let t = two_acc_one_tangles(r, r);
            assert!((t.n_b - t.n_c).abs() < 1e-15, "r = {}", r.r());
        }
    }

    #[test]
    fn one_acc_endpoint_values() {
        let t = one_acc_one_tangles(param(FRAC_PI_4));
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        assert!((t.n_a - inv_sqrt2).abs() < 1e-15);
        assert!((t.n_b - inv_sqrt2).abs() < 1e-15);
        // 1/2 (1/sqrt(2) + 1/2 + sqrt(3)/2 - 1)
        let expected = 0.5 * (inv_sqrt2 + 0.5 + 3f64.sqrt() / 2.0 - 1.0);
        assert!((t.n_c - expected).abs() < 1e-15);
        assert!((t.n_c - 0.536566092485).abs() < 1e-12);
    }

    #[test]
    fn one_acc_at_pi_six() {
        let t = one_acc_one_tangles(param(FRAC_PI_6));
        assert!((t.n_a - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn analytic_pi_values() {
        let both = Scenario::two_accelerated(param(0.0), param(0.0));
        assert!((analytic_pi(&both).unwrap() - 1.0).abs() < 1e-15);

        let both = Scenario::two_accelerated(param(FRAC_PI_4), param(FRAC_PI_4));
        let n = (1.0 + 5f64.sqrt()) / 8.0;
        assert!((analytic_pi(&both).unwrap() - n * n).abs() < 1e-15);

        let one = Scenario::one_accelerated(param(FRAC_PI_4));
        assert!((analytic_pi(&one).unwrap() - 0.429301057202).abs() < 1e-12);
    }

    #[test]
    fn bob_only_matches_charlie_only_by_relabeling() {
        let r = param(0.37);
        let c_only = analytic_one_tangles(&Scenario::one_accelerated(r)).unwrap();
        let b_only = analytic_one_tangles(&Scenario::new(Some(r), None).unwrap()).unwrap();
        assert_eq!(b_only.n_a, c_only.n_a);
        assert_eq!(b_only.n_b, c_only.n_c);
        assert_eq!(b_only.n_c, c_only.n_b);
    }
}
