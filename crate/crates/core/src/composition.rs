//! Weak compositions: ordered tuples of nonnegative integers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Sum of the entries.
    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Number of entries, zeros included.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.entries.iter().map(|&a| a as i64).collect()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn canonical(&self) -> Composition {
        let mut entries = self.entries.clone();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Composition { entries }
    }

    /// Multiplicity of each distinct entry value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &a in &self.entries {
            *counts.entry(a).or_insert(0) += 1;
        }
        counts
    }

    /// `Π (multiplicity of each distinct value)!`.
    pub fn repetition_factor(&self) -> BigUint {
        self.multiplicities().values().map(|&m| factorial(m as u64)).product()
    }

    /// Number of distinct rearrangements, `r! / Π (multiplicity)!`.
    pub fn ordering_count(&self) -> BigUint {
        factorial(self.len() as u64) / self.repetition_factor()
    }

    /// Every distinct rearrangement, in lexicographically increasing order.
    pub fn distinct_orderings(&self) -> Vec<Composition> {
        let mut current = self.entries.clone();
        current.sort_unstable();
        let mut out = vec![Composition { entries: current.clone() }];
        while next_permutation(&mut current) {
            out.push(Composition { entries: current.clone() });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated nonnegative entries, e.g. `2,1,0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut pos = 0;
        for field in s.split(',') {
            let value = field.trim().parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("expected a nonnegative integer entry, found {field:?}"),
            })?;
            entries.push(value);
            pos += field.len() + 1;
        }
        Ok(Composition { entries })
    }
}

/// All weak compositions of `n` into `r` entries, lexicographically decreasing.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    fn go(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Composition { entries: prefix.clone() });
            prefix.pop();
            return;
        }
        for a in (0..=remaining).rev() {
            prefix.push(a);
            go(remaining - a, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(Composition { entries: Vec::new() });
        }
        return out;
    }
    go(n, r, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing compositions of `n` with exactly `r` entries (zero padded),
/// in lexicographically decreasing order.
pub fn canonical_compositions(n: usize, r: usize) -> Vec<Composition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|lambda| lambda.parts().len() <= r)
        .map(|lambda| {
            let mut entries = lambda.parts().to_vec();
            entries.resize(r, 0);
            Composition { entries }
        })
        .collect()
}
