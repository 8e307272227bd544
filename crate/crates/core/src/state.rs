//! Pure states and density operators over labeled tensor factors, with the
//! partial trace and partial transpose that the entanglement measures are
//! built from.

use num_complex::Complex;
use num_traits::Zero;

use crate::eig::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::layout::SubsystemLayout;
use crate::matrix::ComplexMatrix;
use crate::scalar::{Scalar, Tolerances};

/// Unit-norm complex amplitude vector over a [`SubsystemLayout`].
#[derive(Clone, Debug)]
pub struct PureState<T> {
    layout: SubsystemLayout,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> PureState<T> {
    /// Builds a state, requiring `|| psi || = 1` within the norm tolerance.
    pub fn new(layout: SubsystemLayout, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.len() != layout.total_dim() {
            return Err(Error::LayoutMismatch {
                layout: layout.total_dim(),
                data: amplitudes.len(),
            });
        }
        let state = Self { layout, amplitudes };
        let defect = (state.norm() - T::one()).abs();
        if defect > T::default_tolerances().state_norm {
            return Err(Error::NotNormalized {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(state)
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.amplitudes[index]
    }

    /// Amplitude of the basis ket with the given digits, e.g. `&[0, 1, 1]`.
    pub fn amplitude_of(&self, digits: &[usize]) -> Complex<T> {
        self.amplitudes[self.layout.flat_index(digits)]
    }

    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Projector `|psi><psi|` as a density operator.
    pub fn to_density(&self) -> DensityOperator<T> {
        let n = self.amplitudes.len();
        let matrix =
            ComplexMatrix::from_fn(n, |i, j| self.amplitudes[i] * self.amplitudes[j].conj());
        DensityOperator {
            layout: self.layout.clone(),
            matrix,
        }
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix tagged with the
/// tensor structure of its Hilbert space.
#[derive(Clone, Debug)]
pub struct DensityOperator<T> {
    layout: SubsystemLayout,
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityOperator<T> {
    /// Builds a density operator, verifying all three invariants
    /// (Hermiticity, unit trace, positivity).
    pub fn try_new(layout: SubsystemLayout, matrix: ComplexMatrix<T>) -> Result<Self> {
        if layout.total_dim() != matrix.dim() {
            return Err(Error::LayoutMismatch {
                layout: layout.total_dim(),
                data: matrix.dim(),
            });
        }
        let op = Self { layout, matrix };
        op.validate(&T::default_tolerances())?;
        Ok(op)
    }

    /// For operators produced by trace-preserving internal transforms.
    pub(crate) fn new_unchecked(layout: SubsystemLayout, matrix: ComplexMatrix<T>) -> Self {
        debug_assert_eq!(layout.total_dim(), matrix.dim());
        Self { layout, matrix }
    }

    /// Checks Hermiticity, unit trace and positive semidefiniteness against
    /// the given tolerances.
    pub fn validate(&self, tol: &Tolerances<T>) -> Result<()> {
        let defect = self.matrix.hermiticity_defect();
        if defect > tol.hermiticity {
            return Err(Error::NotHermitian {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = self.matrix.trace();
        let trace_defect = (trace.re - T::one()).abs().max(trace.im.abs());
        if trace_defect > tol.unit_trace {
            return Err(Error::NotUnitTrace {
                defect: trace_defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let eigenvalues = hermitian_eigenvalues(&self.matrix)?;
        let min = eigenvalues[0];
        if min < -tol.psd_floor {
            return Err(Error::NotPositive {
                min_eigenvalue: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Matrix element `<bra| rho |ket>` by basis digits.
    pub fn element(&self, bra: &[usize], ket: &[usize]) -> Complex<T> {
        self.matrix[(self.layout.flat_index(bra), self.layout.flat_index(ket))]
    }

    /// Traces out every factor not in `keep`; kept factors stay in their
    /// original order.
    pub fn partial_trace(&self, keep: &[&str]) -> Result<DensityOperator<T>> {
        if keep.is_empty() {
            return Err(Error::InvalidPartition(
                "partial trace must keep at least one factor".into(),
            ));
        }
        let mut keep_positions = Vec::with_capacity(keep.len());
        for label in keep {
            let pos = self.layout.position_or_err(label)?;
            if keep_positions.contains(&pos) {
                return Err(Error::DuplicateLabel((*label).to_string()));
            }
            keep_positions.push(pos);
        }
        keep_positions.sort_unstable();

        let drop_positions: Vec<usize> = (0..self.layout.len())
            .filter(|p| !keep_positions.contains(p))
            .collect();
        let kept_layout = self.layout.sublayout(&keep_positions);
        let dropped_layout = self.layout.sublayout(&drop_positions);

        // Flat-index offsets contributed by each kept (resp. dropped)
        // sub-index in the full index space.
        let kept_offsets = offsets(&self.layout, &kept_layout, &keep_positions);
        let dropped_offsets = offsets(&self.layout, &dropped_layout, &drop_positions);

        let dk = kept_layout.total_dim();
        let mut out = ComplexMatrix::zeros(dk);
        for (i, &row_base) in kept_offsets.iter().enumerate() {
            for (j, &col_base) in kept_offsets.iter().enumerate() {
                let mut sum = Complex::zero();
                for &env in &dropped_offsets {
                    sum += self.matrix[(row_base + env, col_base + env)];
                }
                out[(i, j)] = sum;
            }
        }
        Ok(DensityOperator::new_unchecked(kept_layout, out))
    }

    /// Transposes the indices of a single named factor, leaving all other
    /// factors untouched. The result is Hermitian and trace-one but in
    /// general not positive, so it is returned as a bare matrix.
    pub fn partial_transpose(&self, subsystem: &str) -> Result<ComplexMatrix<T>> {
        partial_transpose_matrix(&self.matrix, &self.layout, subsystem)
    }
}

/// Partial transpose of a bare Hermitian matrix over one factor of
/// `layout`. [`DensityOperator::partial_transpose`] wraps this; the free
/// function is useful when the input is not a valid state (the transpose of
/// a transpose, random Hermitian test matrices, ...).
pub fn partial_transpose_matrix<T: Scalar>(
    m: &ComplexMatrix<T>,
    layout: &SubsystemLayout,
    subsystem: &str,
) -> Result<ComplexMatrix<T>> {
    let pos = layout.position_or_err(subsystem)?;
    let dim = layout.dim_at(pos);
    let stride = layout.stride(pos);
    let n = m.dim();

    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        let di = (i / stride) % dim;
        for j in 0..n {
            let dj = (j / stride) % dim;
            // Swap the factor's digit between row and column.
            let ti = i - di * stride + dj * stride;
            let tj = j - dj * stride + di * stride;
            out[(ti, tj)] = m[(i, j)];
        }
    }
    Ok(out)
}

fn offsets(full: &SubsystemLayout, sub: &SubsystemLayout, positions: &[usize]) -> Vec<usize> {
    let strides: Vec<usize> = positions.iter().map(|&p| full.stride(p)).collect();
    (0..sub.total_dim())
        .map(|flat| {
            sub.digits(flat)
                .iter()
                .zip(&strides)
                .map(|(&digit, &stride)| digit * stride)
                .sum()
        })
        .collect()
}
