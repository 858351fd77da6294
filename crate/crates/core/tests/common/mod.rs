//! Oracles that share no code with the library: standard Young tableaux are
//! counted by removing corners, and `χ_λ(s₁)` is evaluated by removing
//! dominoes (rim hooks of length 2).
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

fn trimmed(parts: &[usize]) -> Vec<usize> {
    parts.iter().copied().filter(|&p| p > 0).collect()
}

/// Number of standard Young tableaux of shape `parts`, memoized on the shape.
pub fn syt_count(parts: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    let shape = trimmed(parts);
    if shape.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&shape) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..shape.len() {
        let below = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] > below {
            let mut smaller = shape.clone();
            smaller[i] -= 1;
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(shape, total.clone());
    total
}

/// `χ_λ(s₁)` by the Murnaghan–Nakayama rule with one 2-cycle: the sum over
/// removable dominoes of `(−1)^{height} · #SYT(λ − domino)`.
pub fn transposition_character_mn(parts: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigInt {
    let shape = trimmed(parts);
    let mut total = BigInt::zero();
    for i in 0..shape.len() {
        let below = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] >= below + 2 {
            let mut rest = shape.clone();
            rest[i] -= 2;
            total += BigInt::from(syt_count(&rest, memo));
        }
        let below2 = shape.get(i + 2).copied().unwrap_or(0);
        if i + 1 < shape.len() && shape[i] == shape[i + 1] && shape[i + 1] > below2 {
            let mut rest = shape.clone();
            rest[i] -= 1;
            rest[i + 1] -= 1;
            total -= BigInt::from(syt_count(&rest, memo));
        }
    }
    total
}

/// Partitions of `n` as plain vectors, by a recursion independent of the library.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
