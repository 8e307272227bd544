//! Cross-module invariants of the physical pipeline, checked on grids of
//! acceleration parameters.

mod common;

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex;
use unruh_tangle::measures::negativity;
use unruh_tangle::rindler::{physical_state, AccelerationParam, Scenario};
use unruh_tangle::{ComplexMatrix64, DensityOperator64, Tolerances};

fn param(r: f64) -> AccelerationParam<f64> {
    AccelerationParam::new(r).unwrap()
}

fn two_acc_state(r_b: f64, r_c: f64) -> DensityOperator64 {
    physical_state(&Scenario::two_accelerated(param(r_b), param(r_c))).unwrap()
}

fn one_acc_state(r_c: f64) -> DensityOperator64 {
    physical_state(&Scenario::one_accelerated(param(r_c))).unwrap()
}

fn grid(steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| FRAC_PI_4 * i as f64 / (steps - 1) as f64)
        .collect()
}

/// The traced two-observer state written out directly: four diagonal
/// vacuum-sector weights, the double-excitation corner at 1/2, and the
/// cos r_b cos r_c / 2 coherence between |000> and |111>.
fn transcribed_matrix(r_b: f64, r_c: f64) -> ComplexMatrix64 {
    let (cb, sb) = (r_b.cos(), r_b.sin());
    let (cc, sc) = (r_c.cos(), r_c.sin());
    let mut m = ComplexMatrix64::zeros(8);
    let re = |x: f64| Complex::new(x, 0.0);
    m[(0, 0)] = re(cb * cb * cc * cc / 2.0);
    m[(1, 1)] = re(cb * cb * sc * sc / 2.0);
    m[(2, 2)] = re(sb * sb * cc * cc / 2.0);
    m[(3, 3)] = re(sb * sb * sc * sc / 2.0);
    m[(7, 7)] = re(0.5);
    m[(0, 7)] = re(cb * cc / 2.0);
    m[(7, 0)] = re(cb * cc / 2.0);
    m
}

#[test]
fn traced_state_matches_transcription_and_invariants_on_grid() {
    let tolerances = Tolerances::<f64>::default();
    for &r_b in &grid(4) {
        for &r_c in &grid(4) {
            let rho = two_acc_state(r_b, r_c);
            let gap = rho.matrix().max_abs_diff(&transcribed_matrix(r_b, r_c));
            assert!(gap < 1e-12, "entrywise gap {gap:.3e} at ({r_b}, {r_c})");
            rho.validate(&tolerances)
                .unwrap_or_else(|e| panic!("invariants at ({r_b}, {r_c}): {e}"));
        }
    }
}

#[test]
fn equal_accelerations_give_equal_bob_charlie_tangles() {
    for &r in &grid(65) {
        let rho = two_acc_state(r, r);
        let n_b = negativity(&rho, &["B_I"]).unwrap();
        let n_c = negativity(&rho, &["C_I"]).unwrap();
        assert!((n_b - n_c).abs() < 1e-10, "r = {r}: {n_b} vs {n_c}");
    }
}

#[test]
fn stationary_parties_agree_for_one_accelerated_observer() {
    for &r_c in &grid(65) {
        let rho = one_acc_state(r_c);
        let n_a = negativity(&rho, &["A"]).unwrap();
        let n_b = negativity(&rho, &["B"]).unwrap();
        assert!((n_a - n_b).abs() < 1e-10, "r_c = {r_c}: {n_a} vs {n_b}");
    }
}

#[test]
fn one_tangles_never_increase_along_the_diagonal() {
    let mut previous = [f64::INFINITY; 3];
    for &r in &grid(65) {
        let rho = two_acc_state(r, r);
        let current = [
            negativity(&rho, &["A"]).unwrap(),
            negativity(&rho, &["B_I"]).unwrap(),
            negativity(&rho, &["C_I"]).unwrap(),
        ];
        for (now, before) in current.iter().zip(previous) {
            assert!(*now <= before + 1e-12, "increase at r = {r}");
        }
        previous = current;
    }
}

#[test]
fn accelerated_party_tangle_never_vanishes() {
    let mut min_two = f64::INFINITY;
    for &r_b in &grid(17) {
        for &r_c in &grid(17) {
            let rho = two_acc_state(r_b, r_c);
            min_two = min_two.min(negativity(&rho, &["C_I"]).unwrap());
        }
    }
    assert!(min_two > 0.1, "two-observer min N_C = {min_two}");

    let mut min_one = f64::INFINITY;
    for &r_c in &grid(65) {
        let rho = one_acc_state(r_c);
        min_one = min_one.min(negativity(&rho, &["C_I"]).unwrap());
    }
    assert!(min_one > 0.1, "one-observer min N_C = {min_one}");
}
