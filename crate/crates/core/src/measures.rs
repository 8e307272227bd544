//! Negativity-based entanglement measures: one-tangles, two-tangles,
//! Wootters concurrence, monogamy residuals and the pi-tangle.

use crate::eig::{eigh, psd_sqrt, trace_norm};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{from_f64, Scalar};
use crate::state::{partial_transpose_matrix, DensityOperator};

/// Negativity `|| rho^T_part || - 1` of a bipartition.
///
/// `part` is the set of factors whose indices are transposed; it must be a
/// nonempty proper subset of the layout. Values inside eigenvalue noise of
/// zero are clamped to exactly zero.
pub fn negativity<T: Scalar>(rho: &DensityOperator<T>, part: &[&str]) -> Result<T> {
    let layout = rho.layout();
    if part.is_empty() || part.len() >= layout.len() {
        return Err(Error::InvalidPartition(format!(
            "transposed set must be a nonempty proper subset of the {} factors",
            layout.len()
        )));
    }
    let mut seen = Vec::with_capacity(part.len());
    for label in part {
        layout.position_or_err(label)?;
        if seen.contains(label) {
            return Err(Error::DuplicateLabel((*label).to_string()));
        }
        seen.push(label);
    }

    let mut transposed = rho.matrix().clone();
    for label in part {
        transposed = partial_transpose_matrix(&transposed, layout, label)?;
    }
    clamp_measure(trace_norm(&transposed)? - T::one())
}

/// Wootters concurrence of a two-qubit state.
///
/// The spin-flipped companion is `rho~ = (sy (x) sy) rho* (sy (x) sy)` with
/// conjugation in the computational basis; the measure is
/// `max(0, l1 - l2 - l3 - l4)` over the descending square roots of the
/// eigenvalues of `rho rho~`, computed here through the Hermitian product
/// `sqrt(rho) rho~ sqrt(rho)` which shares its spectrum.
pub fn concurrence<T: Scalar>(rho: &DensityOperator<T>) -> Result<T> {
    let layout = rho.layout();
    let two_qubits = layout.len() == 2 && layout.factors().all(|(_, d)| d == 2);
    if !two_qubits {
        return Err(Error::WrongLayout {
            expected: "exactly two dim-2 factors".into(),
            got: format!(
                "{} factors of dims {:?}",
                layout.len(),
                layout.factors().map(|(_, d)| d).collect::<Vec<_>>()
            ),
        });
    }

    let flip = ComplexMatrix::<T>::pauli_y().kron(&ComplexMatrix::pauli_y());
    let companion = &(&flip * &rho.matrix().conjugate()) * &flip;
    let root = psd_sqrt(rho.matrix())?;
    let product = &(&root * &companion) * &root;
    let eigenvalues = eigh(&product, false)?.values;

    // Noise can leave tiny negatives; clamp before the square roots.
    let mut lambdas: Vec<T> = eigenvalues
        .into_iter()
        .map(|v| v.max(T::zero()).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(value.max(T::zero()))
}

/// Two-tangle of a pair inside a 3-qubit state: the negativity of the
/// reduced pair state, transposing the first member of the pair.
pub fn two_tangle<T: Scalar>(rho3: &DensityOperator<T>, pair: (&str, &str)) -> Result<T> {
    require_three_qubits(rho3)?;
    let (x, y) = pair;
    if x == y {
        return Err(Error::InvalidPartition(format!(
            "pair members must differ, got (`{x}`, `{y}`)"
        )));
    }
    let layout = rho3.layout();
    let px = layout.position_or_err(x)?;
    let py = layout.position_or_err(y)?;
    // Keep the layout's own factor order in the reduced state.
    let keep = if px < py { [x, y] } else { [y, x] };
    let reduced = rho3.partial_trace(&keep)?;
    let value = negativity(&reduced, &[x])?;
    #[cfg(debug_assertions)]
    {
        let other = negativity(&reduced, &[y])?;
        let gap = (value - other).abs();
        debug_assert!(
            gap <= T::default_tolerances().pair_symmetry,
            "pair negativity depends on transpose order: |{value} - {other}| = {gap}"
        );
    }
    Ok(value)
}

/// Everything the sweep reports for one 3-qubit state.
#[derive(Clone, Debug)]
pub struct TangleReport<T> {
    /// Party labels in layout order.
    pub parties: [String; 3],
    /// `N_{alpha(beta gamma)}` per party, in `parties` order.
    pub one_tangles: [T; 3],
    /// Pair negativities for `PAIRS` order: (0,1), (0,2), (1,2).
    pub two_tangles: [T; 3],
    /// Monogamy residuals `pi_alpha` per party.
    pub residuals: [T; 3],
    /// Mean of the three residuals.
    pub pi_tangle: T,
    /// Whether the monogamy inequality holds for each party (with slack).
    pub ckw_satisfied: [bool; 3],
}

/// Index pairs of [`TangleReport::two_tangles`] into
/// [`TangleReport::parties`].
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl<T: Scalar> TangleReport<T> {
    pub fn one_tangle(&self, party: &str) -> Option<T> {
        self.parties
            .iter()
            .position(|p| p == party)
            .map(|i| self.one_tangles[i])
    }

    pub fn two_tangle(&self, a: &str, b: &str) -> Option<T> {
        let pa = self.parties.iter().position(|p| p == a)?;
        let pb = self.parties.iter().position(|p| p == b)?;
        let key = (pa.min(pb), pa.max(pb));
        PAIRS
            .iter()
            .position(|&p| p == key)
            .map(|i| self.two_tangles[i])
    }
}

/// One-tangles, two-tangles, residuals, pi-tangle and monogamy flags for a
/// 3-qubit state.
pub fn tangle_report<T: Scalar>(rho3: &DensityOperator<T>) -> Result<TangleReport<T>> {
    require_three_qubits(rho3)?;
    let layout = rho3.layout();
    let parties: [String; 3] = [
        layout.label(0).to_string(),
        layout.label(1).to_string(),
        layout.label(2).to_string(),
    ];

    let mut one_tangles = [T::zero(); 3];
    for (i, party) in parties.iter().enumerate() {
        one_tangles[i] = negativity(rho3, &[party])?;
    }
    let mut two_tangles = [T::zero(); 3];
    for (k, (i, j)) in PAIRS.into_iter().enumerate() {
        two_tangles[k] = two_tangle(rho3, (&parties[i], &parties[j]))?;
    }

    let slack = T::default_tolerances().ckw_slack;
    let mut residuals = [T::zero(); 3];
    let mut ckw_satisfied = [false; 3];
    for i in 0..3 {
        let pair_sum: T = PAIRS
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == i || b == i)
            .fold(T::zero(), |acc, (k, _)| {
                acc + two_tangles[k] * two_tangles[k]
            });
        let one_sq = one_tangles[i] * one_tangles[i];
        residuals[i] = one_sq - pair_sum;
        ckw_satisfied[i] = pair_sum <= one_sq + slack;
    }
    let third = T::one() / from_f64::<T>(3.0);
    let pi_tangle = (residuals[0] + residuals[1] + residuals[2]) * third;

    Ok(TangleReport {
        parties,
        one_tangles,
        two_tangles,
        residuals,
        pi_tangle,
        ckw_satisfied,
    })
}

fn require_three_qubits<T: Scalar>(rho: &DensityOperator<T>) -> Result<()> {
    let layout = rho.layout();
    if layout.len() == 3 && layout.factors().all(|(_, d)| d == 2) {
        Ok(())
    } else {
        Err(Error::WrongLayout {
            expected: "three dim-2 factors".into(),
            got: format!(
                "{} factors of dims {:?}",
                layout.len(),
                layout.factors().map(|(_, d)| d).collect::<Vec<_>>()
            ),
        })
    }
}

fn clamp_measure<T: Scalar>(value: T) -> Result<T> {
    let tol = T::default_tolerances();
    if value < -tol.measure_floor {
        return Err(Error::NegativeMeasure {
            value: value.to_f64().unwrap_or(f64::NAN),
        });
    }
    if value < tol.measure_clamp {
        Ok(T::zero())
    } else {
        Ok(value)
    }
}
