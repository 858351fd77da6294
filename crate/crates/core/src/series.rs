//! Truncated power series with exact nonnegative integer coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::partition_counts;

/// `Σ_{k ≤ degree} c_k x^k`; coefficients above the truncation degree are
/// discarded by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSeries {
    coefficients: Vec<BigUint>,
}

impl CoefficientSeries {
    pub fn new(mut coefficients: Vec<BigUint>, degree: usize) -> Self {
        coefficients.resize(degree + 1, BigUint::zero());
        CoefficientSeries { coefficients }
    }

    pub fn one(degree: usize) -> Self {
        CoefficientSeries::new(vec![BigUint::one()], degree)
    }

    /// `P(x) = Π_{k≥1} 1/(1 − x^k)` truncated at `degree`.
    pub fn partitions(degree: usize) -> Self {
        CoefficientSeries { coefficients: partition_counts(degree) }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// `[x^k]`, zero beyond the truncation.
    pub fn coefficient(&self, k: usize) -> BigUint {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree().min(other.degree());
        let mut out = vec![BigUint::zero(); degree + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(degree + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(degree + 1 - i) {
                out[i + j] += a * b;
            }
        }
        CoefficientSeries { coefficients: out }
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CoefficientSeries::one(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
