//! Exact integer helpers: factorials, binomial and multinomial coefficients,
//! their residues modulo a prime via Lucas' theorem, and binary profiles.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Exact `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `top! / (b_1! ... b_r!)`.
///
/// Evaluates to zero whenever an entry of `bottom` is negative or the entries
/// do not sum to `top`. Computed as the chain
/// `C(b_1, b_1) C(b_1 + b_2, b_2) ... C(b_1 + ... + b_r, b_r)`.
pub fn multinomial_exact(top: i64, bottom: &[i64]) -> BigUint {
    if top < 0 || bottom.iter().any(|&b| b < 0) || bottom.iter().sum::<i64>() != top {
        return BigUint::zero();
    }
    let mut running = 0u64;
    let mut acc = BigUint::one();
    for &b in bottom {
        let b = b as u64;
        running += b;
        acc *= binomial(running, b);
    }
    acc
}

/// Deterministic trial division; inputs here are small moduli.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn ensure_odd_prime(p: u64) -> Result<()> {
    if p != 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Base-`p` digits of `n`, least significant first. Empty for `n = 0`.
pub fn base_digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % p);
        n /= p;
    }
    digits
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// `C(m, k) mod p` for single digits `m, k < p`.
fn small_binomial_mod(m: u64, k: u64, p: u64) -> u64 {
    if k > m {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = mul_mod(num, m - i, p);
        den = mul_mod(den, i + 1, p);
    }
    // den is a product of integers below p, hence invertible.
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

/// `C(m, k) mod p` as the product of digit-wise binomials.
pub fn binomial_mod_p_lucas(mut m: u64, mut k: u64, p: u64) -> Result<u64> {
    ensure_prime(p)?;
    let mut acc = 1 % p;
    while k > 0 || m > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return Ok(0);
        }
        acc = mul_mod(acc, small_binomial_mod(md, kd, p), p);
        m /= p;
        k /= p;
    }
    Ok(acc)
}

/// Residue of [`multinomial_exact`] modulo the prime `p`, via the binomial
/// chain and Lucas' theorem on each factor. Same zero conventions.
pub fn multinomial_mod_p_lucas(top: i64, bottom: &[i64], p: u64) -> Result<u64> {
    ensure_prime(p)?;
    if top < 0 || bottom.iter().any(|&b| b < 0) || bottom.iter().sum::<i64>() != top {
        return Ok(0);
    }
    let mut running = 0u64;
    let mut acc = 1 % p;
    for &b in bottom {
        let b = b as u64;
        running += b;
        acc = mul_mod(acc, binomial_mod_p_lucas(running, b, p)?, p);
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

/// Reduces an exact value modulo a small modulus.
pub fn residue(value: &BigUint, modulus: u64) -> u64 {
    (value % modulus).to_u64().expect("residue below a u64 modulus")
}

/// The set of exponents in the base-2 expansion and the 2-adic valuation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryProfile {
    pub bits: BTreeSet<u32>,
    /// `None` for 0, where the valuation is undefined.
    pub ord2: Option<u32>,
}

impl BinaryProfile {
    pub fn value(&self) -> u64 {
        self.bits.iter().map(|&k| 1u64 << k).sum()
    }

    /// `bin(n) \ {ord(n)}`; empty for 0.
    pub fn bits_above_ord(&self) -> BTreeSet<u32> {
        let mut bits = self.bits.clone();
        if let Some(o) = self.ord2 {
            bits.remove(&o);
        }
        bits
    }
}

pub fn binary_profile(n: u64) -> BinaryProfile {
    let bits = (0..64).filter(|&k| (n >> k) & 1 == 1).collect();
    let ord2 = (n != 0).then(|| n.trailing_zeros());
    BinaryProfile { bits, ord2 }
}

/// Serializes exact integers as decimal strings, so JSON consumers never
/// round them through floating point.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn serialize_vec<S: Serializer>(values: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(|v| v.to_string()))
    }
}
