//! Hermitian eigendecomposition by cyclic Jacobi rotations, plus the trace
//! norm built on it.
//!
//! Matrices here never exceed a few dozen rows, so the quadratic-convergence
//! sweep structure of Jacobi is both simple and more than fast enough; no
//! external linear-algebra backend is involved.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{Scalar, Tolerances};

const MAX_SWEEPS: usize = 64;

/// Full eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are ascending; `vectors` (when requested) holds the matching
/// orthonormal eigenvectors as columns.
pub(crate) struct Eigh<T> {
    pub values: Vec<T>,
    pub vectors: Option<ComplexMatrix<T>>,
}

/// Ascending real eigenvalues of a Hermitian matrix.
///
/// Rejects inputs whose Hermiticity defect exceeds the configured tolerance.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    Ok(eigh(m, false)?.values)
}

/// Trace norm (sum of absolute eigenvalues) of a Hermitian matrix.
pub fn trace_norm<T: Scalar>(m: &ComplexMatrix<T>) -> Result<T> {
    let values = hermitian_eigenvalues(m)?;
    Ok(values.into_iter().fold(T::zero(), |acc, v| acc + v.abs()))
}

pub(crate) fn eigh<T: Scalar>(m: &ComplexMatrix<T>, want_vectors: bool) -> Result<Eigh<T>> {
    let tol: Tolerances<T> = T::default_tolerances();
    let defect = m.hermiticity_defect();
    if defect > tol.hermitian_input {
        return Err(Error::NotHermitian {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }

    let n = m.dim();
    // Symmetrize exactly so rotation arithmetic sees a true Hermitian matrix.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        let half = T::from_f64(0.5).unwrap();
        (m[(i, j)] + m[(j, i)].conj()).scale(half)
    });
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));

    let threshold = tol.jacobi_off_diagonal * T::one().max(a.frobenius_norm());
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) >= threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("eigenvalues are finite")
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]));
    Ok(Eigh { values, vectors })
}

fn off_diagonal_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let two = T::from_f64(2.0).unwrap();
    let mut sum = T::zero();
    for p in 0..n {
        for q in p + 1..n {
            sum += a[(p, q)].norm_sqr();
        }
    }
    (two * sum).sqrt()
}

/// One Jacobi rotation annihilating the (p, q) entry.
///
/// The pivot `g = a_pq` is factored as `|g| * u` with unimodular `u`; the
/// plane rotation is then the real Jacobi rotation of angle `theta`
/// (tan 2theta = 2|g| / (a_pp - a_qq)) carried on the phase `u`:
///
/// ```text
/// U = [[ c,       -s u ],
///      [ s conj(u), c  ]]
/// ```
fn rotate<T: Scalar>(
    a: &mut ComplexMatrix<T>,
    v: Option<&mut ComplexMatrix<T>>,
    p: usize,
    q: usize,
) {
    let g = a[(p, q)];
    let mag = g.norm();
    if mag == T::zero() {
        return;
    }
    let u = g.unscale(mag);

    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;
    let two = T::from_f64(2.0).unwrap();
    let theta = (alpha - beta) / (two * mag);
    let t = if theta.is_zero() {
        T::one()
    } else {
        theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let su = u.scale(s);
    let su_conj = u.conj().scale(s);

    let n = a.dim();
    // A <- A U (columns p, q)
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp.scale(c) + akq * su_conj;
        a[(k, q)] = akq.scale(c) - akp * su;
    }
    // A <- U^H A (rows p, q)
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk.scale(c) + aqk * su;
        a[(q, k)] = aqk.scale(c) - apk * su_conj;
    }
    // The pivot is zero analytically; pin it and keep the diagonal real.
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp.scale(c) + vkq * su_conj;
            v[(k, q)] = vkq.scale(c) - vkp * su;
        }
    }
}

/// Hermitian square root `V sqrt(diag(lambda)) V^H` of a PSD matrix.
/// Eigenvalues below zero (noise) are clamped before the root.
pub(crate) fn psd_sqrt<T: Scalar>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let Eigh { values, vectors } = eigh(m, true)?;
    let v = vectors.expect("vectors requested");
    let roots: Vec<T> = values
        .iter()
        .map(|&lambda| lambda.max(T::zero()).sqrt())
        .collect();
    let scaled = ComplexMatrix::from_fn(m.dim(), |i, j| v[(i, j)].scale(roots[j]));
    Ok(&scaled * &v.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    #[test]
    fn diagonal_matrix_sorted() {
        let m = ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let vals = hermitian_eigenvalues(&ComplexMatrix::<f64>::pauli_x()).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 3]] has eigenvalues 2 -+ sqrt(2).
        let m = ComplexMatrix::new(
            2,
            vec![
                re(1.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, -1.0),
                re(3.0),
            ],
        )
        .unwrap();
        let vals = hermitian_eigenvalues(&m).unwrap();
        assert!((vals[0] - (2.0 - 2f64.sqrt())).abs() < 1e-13);
        assert!((vals[1] - (2.0 + 2f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // Fixed 4x4 Hermitian matrix with mixed complex entries.
        let mut m = ComplexMatrix::<f64>::zeros(4);
        let entries = [
            (0, 0, re(0.7)),
            (1, 1, re(-0.2)),
            (2, 2, re(1.3)),
            (3, 3, re(0.4)),
            (0, 1, Complex::new(0.3, 0.1)),
            (0, 3, Complex::new(-0.2, 0.5)),
            (1, 2, Complex::new(0.0, -0.9)),
            (2, 3, re(0.6)),
        ];
        for (i, j, z) in entries {
            m[(i, j)] = z;
            if i != j {
                m[(j, i)] = z.conj();
            }
        }
        let vals = hermitian_eigenvalues(&m).unwrap();
        let sum: f64 = vals.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-10);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let mut m = ComplexMatrix::<f64>::zeros(3);
        m[(0, 0)] = re(1.0);
        m[(1, 1)] = re(2.0);
        m[(2, 2)] = re(0.5);
        m[(0, 2)] = Complex::new(0.2, -0.4);
        m[(2, 0)] = Complex::new(0.2, 0.4);
        let Eigh { values, vectors } = eigh(&m, true).unwrap();
        let v = vectors.unwrap();
        // V^H V = I
        assert!((&v.adjoint() * &v).max_abs_diff(&ComplexMatrix::identity(3)) < 1e-12);
        // M V = V diag(values)
        let mv = &m * &v;
        let vd = ComplexMatrix::from_fn(3, |i, j| v[(i, j)].scale(values[j]));
        assert!(mv.max_abs_diff(&vd) < 1e-12);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        // rho^T_A of (|00> + |11>)/sqrt(2), written out by hand:
        // diag(1/2, 0, 0, 1/2) with 1/2 swapped onto the (1,2)/(2,1) entries.
        let mut m = ComplexMatrix::<f64>::zeros(4);
        m[(0, 0)] = re(0.5);
        m[(3, 3)] = re(0.5);
        m[(1, 2)] = re(0.5);
        m[(2, 1)] = re(0.5);
        let vals = hermitian_eigenvalues(&m).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (got, want) in vals.iter().zip(expected) {
            assert!((got - want).abs() < 1e-14);
        }
        assert!((trace_norm(&m).unwrap() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::<f64>::zeros(2);
        m[(0, 1)] = re(1.0);
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(trace_norm(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn one_by_one() {
        let m = ComplexMatrix::from_real_diagonal(&[4.0]);
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![4.0]);
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let mut m = ComplexMatrix::<f64>::zeros(2);
        m[(0, 0)] = re(0.75);
        m[(1, 1)] = re(0.25);
        m[(0, 1)] = Complex::new(0.1, 0.2);
        m[(1, 0)] = Complex::new(0.1, -0.2);
        let root = psd_sqrt(&m).unwrap();
        assert!((&root * &root).max_abs_diff(&m) < 1e-12);
    }
}
