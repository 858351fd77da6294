//! Integer partitions and the symmetric-group data attached to them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Sum of `j - i` over the cells `(i, j)` of the diagram.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let (i, p) = (i as i64, p as i64);
                p * (p - 1) / 2 - i * p
            })
            .sum()
    }

    /// Number of standard Young tableaux (hook-length formula).
    pub fn dim(&self) -> BigUint {
        dim_sym(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the comma form `3,1,1`; the empty string is the empty partition.
/// `offset` is added to reported error positions.
pub(crate) fn parse_partition_at(text: &str, offset: usize) -> Result<Partition> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for field in text.split(',') {
        let value: usize = field.trim().parse().map_err(|_| Error::Parse {
            position: pos,
            message: format!("expected a positive integer part, found {field:?}"),
        })?;
        if value == 0 {
            return Err(Error::Parse { position: pos, message: "parts must be positive".into() });
        }
        if let Some(&prev) = parts.last() {
            if value > prev {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("parts must be weakly decreasing ({value} after {prev})"),
                });
            }
        }
        parts.push(value);
        pos += field.len() + 1;
    }
    Ok(Partition { parts })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition_at(s, 0)
    }
}

/// All partitions of `n`, in lexicographically decreasing order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p(n)` for `0..=n` by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::one()];
    for m in 1..=n {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for k in 1.. {
            let k = k as i64;
            let pent = [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2];
            if pent[0] > m as i64 {
                break;
            }
            for g in pent {
                if g <= m as i64 {
                    let term = &counts[m - g as usize];
                    if k % 2 == 1 {
                        plus += term;
                    } else {
                        minus += term;
                    }
                }
            }
        }
        counts.push(plus - minus);
    }
    counts
}

/// `f_λ` by the hook-length formula.
pub fn dim_sym(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.parts[j] - i) - 1;
            hooks *= hook as u64;
        }
    }
    factorial(lambda.size() as u64) / hooks
}

/// `χ_λ(s₁)` at a transposition, from `f_λ · 2·Σ contents / (n(n−1))`.
pub fn transposition_character(lambda: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::NoTransposition(n));
    }
    let f = BigInt::from(dim_sym(lambda));
    let numerator = f * (2 * lambda.content_sum());
    let denominator = BigInt::from((n * (n - 1)) as u64);
    debug_assert!((&numerator % &denominator).is_zero());
    Ok(numerator / denominator)
}

/// `g_λ = (f_λ − χ_λ(s₁)) / 2`, with `g_λ = 0` when `|λ| ≤ 1`.
pub fn chirality(lambda: &Partition) -> BigUint {
    if lambda.size() < 2 {
        return BigUint::default();
    }
    let f = BigInt::from(dim_sym(lambda));
    let chi = transposition_character(lambda).expect("size checked");
    let twice = f - chi;
    (twice / BigInt::from(2)).to_biguint().expect("f_λ ≥ |χ_λ(s₁)|")
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn enumeration_matches_recurrence() {
        let counts = partition_counts(20);
        for n in 0..=20 {
            assert_eq!(BigUint::from(enumerate_partitions(n).len()), counts[n], "n = {n}");
        }
    }

    #[test]
    fn dims() {
        assert_eq!(dim_sym(&Partition::column(7)).to_u64(), Some(1));
        assert_eq!(dim_sym(&p(&[2, 1])).to_u64(), Some(2));
        assert_eq!(dim_sym(&p(&[3, 3])).to_u64(), Some(5));
        assert_eq!(dim_sym(&Partition::empty()).to_u64(), Some(1));
    }

    #[test]
    fn transposition_values() {
        assert_eq!(transposition_character(&Partition::row(5)).unwrap(), BigInt::from(1));
        assert_eq!(transposition_character(&p(&[1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(transposition_character(&p(&[2, 1])).unwrap(), BigInt::from(0));
        assert_eq!(transposition_character(&p(&[1])), Err(Error::NoTransposition(1)));
        assert_eq!(transposition_character(&Partition::empty()), Err(Error::NoTransposition(0)));
    }

    #[test]
    fn chirality_values() {
        assert_eq!(chirality(&p(&[1, 1])).to_u64(), Some(1));
        assert_eq!(chirality(&p(&[2])).to_u64(), Some(0));
        assert_eq!(chirality(&p(&[2, 1])).to_u64(), Some(1));
        assert_eq!(chirality(&p(&[1])).to_u64(), Some(0));
        assert_eq!(chirality(&Partition::empty()).to_u64(), Some(0));
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::row(4).conjugate(), Partition::column(4));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=12 {
            let total: BigUint = enumerate_partitions(n).iter().map(|l| dim_sym(l).pow(2)).sum();
            assert_eq!(total, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn conjugation_identities() {
        for n in 2..=12 {
            for lambda in enumerate_partitions(n) {
                let conj = lambda.conjugate();
                assert_eq!(conj.conjugate(), lambda);
                assert_eq!(dim_sym(&conj), dim_sym(&lambda));
                let lhs = chirality(&conj) % 2u32;
                let rhs = (chirality(&lambda) + dim_sym(&lambda)) % 2u32;
                assert_eq!(lhs, rhs, "{lambda}");
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!(matches!("1,3".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("2,x".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("0".parse::<Partition>(), Err(Error::Parse { position: 0, .. })));
    }
}
