//! Labeled tensor-product structure over a flat index space.
//!
//! The first factor is the most significant digit of the mixed-radix
//! row/column index, so kets written left-to-right map directly onto
//! basis indices: with three qubits `(A, B, C)`, the ket `|lmn>` sits at
//! index `4l + 2m + n`.

use crate::error::{Error, Result};

/// Ordered list of labeled tensor factors with local dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemLayout {
    factors: Vec<(String, usize)>,
}

impl SubsystemLayout {
    pub fn new<L: Into<String>>(factors: Vec<(L, usize)>) -> Result<Self> {
        let factors: Vec<(String, usize)> =
            factors.into_iter().map(|(l, d)| (l.into(), d)).collect();
        for (i, (label, dim)) in factors.iter().enumerate() {
            if *dim == 0 {
                return Err(Error::EmptyFactor);
            }
            if factors[..i].iter().any(|(other, _)| other == label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { factors })
    }

    /// Layout of `n` qubits with the given labels.
    pub fn qubits<L: Into<String>>(labels: Vec<L>) -> Result<Self> {
        Self::new(labels.into_iter().map(|l| (l, 2)).collect())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of all local dimensions.
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(_, d)| d).product()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.factors[index].0
    }

    pub fn dim_at(&self, index: usize) -> usize {
        self.factors[index].1
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.factors.iter().map(|(l, _)| l.as_str())
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, usize)> {
        self.factors.iter().map(|(l, d)| (l.as_str(), *d))
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.factors.iter().position(|(l, _)| l == label)
    }

    pub(crate) fn position_or_err(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Distance between consecutive values of the factor's digit in the
    /// flat index: the product of all dimensions to its right.
    pub fn stride(&self, index: usize) -> usize {
        self.factors[index + 1..].iter().map(|(_, d)| d).product()
    }

    /// Flat index of a multi-index (big-endian digit order).
    pub fn flat_index(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.factors.len());
        digits
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&digit, (_, dim))| {
                debug_assert!(digit < *dim);
                acc * dim + digit
            })
    }

    /// Multi-index digits of a flat index (big-endian digit order).
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, (_, dim)) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % dim;
            index /= dim;
        }
        out
    }

    /// Sub-layout of the given labels, kept in this layout's order.
    pub(crate) fn sublayout(&self, keep: &[usize]) -> SubsystemLayout {
        SubsystemLayout {
            factors: keep.iter().map(|&k| self.factors[k].clone()).collect(),
        }
    }

    /// Replaces the factor at `position` with the given factors, preserving
    /// the order of everything else.
    pub(crate) fn replace_factor(
        &self,
        position: usize,
        replacement: Vec<(String, usize)>,
    ) -> Result<SubsystemLayout> {
        let mut factors = Vec::with_capacity(self.factors.len() + replacement.len() - 1);
        factors.extend_from_slice(&self.factors[..position]);
        factors.extend(replacement);
        factors.extend_from_slice(&self.factors[position + 1..]);
        SubsystemLayout::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_endian_indexing() {
        let layout = SubsystemLayout::new(vec![("A", 2), ("B", 3)]).unwrap();
        assert_eq!(layout.total_dim(), 6);
        assert_eq!(layout.flat_index(&[1, 2]), 5);
        assert_eq!(layout.digits(5), vec![1, 2]);
        assert_eq!(layout.digits(3), vec![1, 0]);
        assert_eq!(layout.stride(0), 3);
        assert_eq!(layout.stride(1), 1);
    }

    #[test]
    fn qubit_index_matches_ket_reading() {
        let layout = SubsystemLayout::qubits(vec!["A", "B", "C"]).unwrap();
        // |lmn> -> 4l + 2m + n
        assert_eq!(layout.flat_index(&[1, 0, 1]), 5);
        assert_eq!(layout.digits(6), vec![1, 1, 0]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = SubsystemLayout::qubits(vec!["A", "A"]);
        assert!(matches!(err, Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn dim_one_factors_allowed() {
        let layout = SubsystemLayout::new(vec![("A", 2), ("aux", 1)]).unwrap();
        assert_eq!(layout.total_dim(), 2);
        assert_eq!(layout.flat_index(&[1, 0]), 1);
    }

    #[test]
    fn unknown_label_reported() {
        let layout = SubsystemLayout::qubits(vec!["A", "B"]).unwrap();
        assert!(matches!(
            layout.position_or_err("Z"),
            Err(Error::UnknownLabel(_))
        ));
    }
}
