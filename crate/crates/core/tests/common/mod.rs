//! Seeded random-state helpers shared by the integration suites.
#![allow(dead_code)]

use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unruh_tangle::state::{DensityOperator, PureState};
use unruh_tangle::{ComplexMatrix64, DensityOperator64, PureState64, SubsystemLayout};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex<f64> {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random Hermitian matrix `(G + G^H) / 2` with entries of order one.
pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix64 {
    let g = ComplexMatrix64::from_fn(dim, |_, _| random_complex(rng));
    (&g + &g.adjoint()).scale(Complex::new(0.5, 0.0))
}

/// Random density operator `G G^H / tr(G G^H)` on the given layout.
pub fn random_density(rng: &mut ChaCha8Rng, layout: SubsystemLayout) -> DensityOperator64 {
    let dim = layout.total_dim();
    let g = ComplexMatrix64::from_fn(dim, |_, _| random_complex(rng));
    let m = &g * &g.adjoint();
    let trace = m.trace().re;
    DensityOperator::try_new(layout, m.scale(Complex::new(1.0 / trace, 0.0)))
        .expect("Wishart matrix is a valid density operator")
}

/// Random normalized pure state on the given layout.
pub fn random_pure(rng: &mut ChaCha8Rng, layout: SubsystemLayout) -> PureState64 {
    let dim = layout.total_dim();
    let raw: Vec<Complex<f64>> = (0..dim).map(|_| random_complex(rng)).collect();
    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let amplitudes = raw.into_iter().map(|z| z / norm).collect();
    PureState::new(layout, amplitudes).expect("normalized by construction")
}

/// Haar-ish random single-qubit unitary from three angles.
pub fn random_qubit_unitary(rng: &mut ChaCha8Rng) -> ComplexMatrix64 {
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let lambda: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let mut u = ComplexMatrix64::zeros(2);
    u[(0, 0)] = Complex::new(c, 0.0);
    u[(0, 1)] = -Complex::from_polar(s, lambda);
    u[(1, 0)] = Complex::from_polar(s, phi);
    u[(1, 1)] = Complex::from_polar(c, phi + lambda);
    u
}
