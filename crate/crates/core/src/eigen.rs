//! Determinants recomputed from character values at two generators.
//!
//! `e₁` (a generator of the first `Z_r` factor) acts on the coset blocks of the
//! induced representation by scalars `ζ^k`, so `χ_λ(e₁)` is recorded as the
//! multiplicity vector of those eigenvalues and the `ζ`-exponent of the
//! determinant is `Σ k·m_k`. The transposition `s₁` is an involution, so the
//! `sgn`-exponent is the multiplicity of the eigenvalue −1, `(f_λ − χ_λ(s₁))/2`.
//! This route shares no formula with [`crate::det`] beyond multinomials and
//! single-partition data.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{multinomial_exact, residue};
use crate::det::{dim_wreath, DetCharacter};
use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::partition::{dim_sym, transposition_character};

/// `χ_λ(e₁)` as integer coefficients of `ζ^0, …, ζ^{r-1}`: the coefficient of
/// `ζ^k` is the multiplicity of that eigenvalue,
/// `Π f_{λ_j} · C(n-1; …, a_{k+1}-1, …)`.
pub fn char_at_e1(lambda: &Multipartition) -> Result<Vec<BigUint>> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::NoDiagonalGenerator);
    }
    let dims: BigUint = lambda.components().iter().map(dim_sym).product();
    let sizes: Vec<i64> = lambda.components().iter().map(|c| c.size() as i64).collect();
    Ok((0..lambda.r())
        .map(|k| {
            let mut bottom = sizes.clone();
            bottom[k] -= 1;
            &dims * multinomial_exact(n as i64 - 1, &bottom)
        })
        .collect())
}

/// `χ_λ(s₁) = Σ_k (Π_{j≠k} f_{λ_j}) · χ_{λ_k}(s₁) · C(n-2; …, a_k-2, …)`.
pub fn char_at_s1(lambda: &Multipartition) -> Result<BigInt> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::NoTransposition(n));
    }
    let sizes: Vec<i64> = lambda.components().iter().map(|c| c.size() as i64).collect();
    let dims: Vec<BigUint> = lambda.components().iter().map(dim_sym).collect();
    let mut total = BigInt::zero();
    for (k, component) in lambda.components().iter().enumerate() {
        if component.size() < 2 {
            // the block multinomial has a negative entry
            continue;
        }
        let mut bottom = sizes.clone();
        bottom[k] -= 2;
        let cosets = multinomial_exact(n as i64 - 2, &bottom);
        let others: BigUint = dims.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, f)| f).product();
        total += BigInt::from(others * cosets) * transposition_character(component)?;
    }
    Ok(total)
}

/// The determinant from eigenvalue multiplicities at `e₁` and `s₁`.
pub fn det_via_eigenvalues(lambda: &Multipartition) -> DetCharacter {
    let r = lambda.r();
    let n = lambda.size();
    let x = if n == 0 {
        0
    } else {
        let multiplicities = char_at_e1(lambda).expect("n ≥ 1");
        let weighted: BigUint = multiplicities.into_iter().enumerate().map(|(k, m)| m * k as u64).sum();
        residue(&weighted, r as u64)
    };
    let y = if n < 2 {
        0
    } else {
        let f = BigInt::from(dim_wreath(lambda));
        let chi = char_at_s1(lambda).expect("n ≥ 2");
        let (half, rem) = (f - chi).div_rem(&BigInt::from(2));
        assert!(rem.is_zero(), "f_λ and χ_λ(s₁) must have equal parity");
        half.mod_floor(&BigInt::from(2)).to_u64().expect("0 or 1")
    };
    DetCharacter::new(x, y, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::det_irrep;
    use crate::multipartition::{multipartitions, WreathParams};

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn coeffs(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&c| BigUint::from(c)).collect()
    }

    #[test]
    fn e1_examples() {
        assert_eq!(char_at_e1(&mp("1;1")).unwrap(), coeffs(&[1, 1]));
        assert_eq!(char_at_e1(&mp("3;;")).unwrap(), coeffs(&[1, 0, 0]));
        assert_eq!(char_at_e1(&mp(";2")).unwrap(), coeffs(&[0, 1]));
        assert_eq!(char_at_e1(&mp(";")), Err(Error::NoDiagonalGenerator));
    }

    #[test]
    fn s1_examples() {
        assert_eq!(char_at_s1(&mp("1,1;")).unwrap(), BigInt::from(-1));
        assert_eq!(char_at_s1(&mp("2;")).unwrap(), BigInt::from(1));
        assert_eq!(char_at_s1(&mp("1;1")).unwrap(), BigInt::from(0));
        assert_eq!(char_at_s1(&mp("1;")), Err(Error::NoTransposition(1)));
    }

    #[test]
    fn eigen_examples() {
        assert_eq!(det_via_eigenvalues(&mp("1;1")), DetCharacter::new(1, 1, 2));
        assert_eq!(det_via_eigenvalues(&mp("4;;")), DetCharacter::trivial());
        assert_eq!(det_via_eigenvalues(&mp(";;")), DetCharacter::trivial());
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        for lambda in multipartitions(WreathParams::new(5, 3).unwrap()) {
            let total: BigUint = char_at_e1(&lambda).unwrap().into_iter().sum();
            assert_eq!(total, dim_wreath(&lambda));
        }
    }

    #[test]
    fn routes_agree_on_p43() {
        let all = multipartitions(WreathParams::new(4, 3).unwrap());
        assert_eq!(all.len(), 51);
        for lambda in all {
            assert_eq!(det_via_eigenvalues(&lambda), det_irrep(&lambda), "{lambda}");
        }
    }
}
