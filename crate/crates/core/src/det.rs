//! The determinant character `det ρ_λ = ζ^x · sgn^y` of the irreducible
//! representation `ρ_λ` of `G(n, r)`.
//!
//! `ζ` never appears as a complex number: a determinant is the pair
//! `(x mod r, y mod 2)`. All intermediate quantities are exact integers built
//! from multinomial coefficients of the underlying composition `a`, with the
//! convention that a multinomial with a negative lower entry is zero.
//!
//! * `x = F · Σ_{k=1}^{r-1} k · C(n-1; a_1, …, a_{k+1}-1, …, a_r)` where
//!   `F = Π f_{λ_k}`;
//! * `y = F · orbits(a) + Σ_k g_{λ_k} · F/f_{λ_k} · C(n-2; a_1, …, a_k-2, …, a_r)`
//!   where `orbits(a)` counts the ordered set partitions of shape `a` that put
//!   the points 1 and 2 in different blocks, up to swapping them.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{multinomial_exact, residue};
use crate::composition::Composition;
use crate::multipartition::Multipartition;
use crate::partition::{chirality, dim_sym, Partition};

/// The linear character `ζ^zeta_exp · sgn^sign_exp`, with exponents reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DetCharacter {
    pub zeta_exp: u64,
    pub sign_exp: u8,
}

impl DetCharacter {
    pub fn new(zeta_exp: u64, sign_exp: u64, r: usize) -> Self {
        DetCharacter { zeta_exp: zeta_exp % r as u64, sign_exp: (sign_exp % 2) as u8 }
    }

    pub fn trivial() -> Self {
        DetCharacter { zeta_exp: 0, sign_exp: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        self.zeta_exp == 0 && self.sign_exp == 0
    }

    /// `1`, `-1`, `zeta^x` or `-zeta^x`.
    pub fn label(&self) -> String {
        match (self.zeta_exp, self.sign_exp) {
            (0, 0) => "1".to_string(),
            (0, _) => "-1".to_string(),
            (x, 0) => format!("zeta^{x}"),
            (x, _) => format!("-zeta^{x}"),
        }
    }

    /// Column of this character in the `2r` layout
    /// `N_1, N_zeta_1..N_zeta_{r-1}, N_negzeta_1..N_negzeta_{r-1}, N_neg1`.
    pub fn column(&self, r: usize) -> usize {
        let x = self.zeta_exp as usize;
        match (x, self.sign_exp) {
            (0, 0) => 0,
            (0, _) => 2 * r - 1,
            (x, 0) => x,
            (x, _) => r - 1 + x,
        }
    }

    /// Inverse of [`DetCharacter::column`].
    pub fn from_column(column: usize, r: usize) -> Self {
        if column == 0 {
            DetCharacter::trivial()
        } else if column == 2 * r - 1 {
            DetCharacter { zeta_exp: 0, sign_exp: 1 }
        } else if column < r {
            DetCharacter { zeta_exp: column as u64, sign_exp: 0 }
        } else {
            DetCharacter { zeta_exp: (column + 1 - r) as u64, sign_exp: 1 }
        }
    }
}

impl fmt::Display for DetCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Images of the transposition and of the diagonal generator under the
/// transfer map to the Young subgroup, as exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferImage {
    /// `C(n-2; a_1, …, a_k-2, …, a_r)` for each `k`.
    #[serde(serialize_with = "crate::arith::decimal::serialize_vec")]
    pub tau_exponents: Vec<BigUint>,
    /// `C(n-1; a_1, …, a_k-1, …, a_r)` for each `k`.
    #[serde(serialize_with = "crate::arith::decimal::serialize_vec")]
    pub e_exponents: Vec<BigUint>,
}

fn decremented(a: &Composition, top_drop: i64, drops: &[(usize, i64)]) -> BigUint {
    let mut bottom = a.signed();
    for &(k, d) in drops {
        bottom[k] -= d;
    }
    multinomial_exact(a.size() as i64 - top_drop, &bottom)
}

/// `C(n-1; …, a_k-1, …)` for each position `k`.
pub fn e_multinomials(a: &Composition) -> Vec<BigUint> {
    (0..a.len()).map(|k| decremented(a, 1, &[(k, 1)])).collect()
}

/// `C(n-2; …, a_k-2, …)` for each position `k`.
pub fn tau_multinomials(a: &Composition) -> Vec<BigUint> {
    (0..a.len()).map(|k| decremented(a, 2, &[(k, 2)])).collect()
}

/// Orbits of the transposition `(1 2)` on the ordered set partitions of
/// shape `a` that separate 1 from 2: `Σ_{i<j} C(n-2; …, a_i-1, …, a_j-1, …)`,
/// which equals `(n-2)! Σ_{i<j} a_i a_j / Π a_k!`. Zero when `n < 2`.
pub fn orbit_count(a: &Composition) -> BigUint {
    let mut total = BigUint::zero();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            total += decremented(a, 2, &[(i, 1), (j, 1)]);
        }
    }
    total
}

/// Both exponent vectors; the tau vector vanishes when `n < 2`.
pub fn transfer_image(a: &Composition) -> TransferImage {
    TransferImage { tau_exponents: tau_multinomials(a), e_exponents: e_multinomials(a) }
}

/// `Π_k f_{λ_k}`.
pub fn component_dim_product(lambda: &Multipartition) -> BigUint {
    lambda.components().iter().map(dim_sym).product()
}

/// `f_λ = Π_k f_{λ_k} · C(n; a_1, …, a_r)`.
pub fn dim_wreath(lambda: &Multipartition) -> BigUint {
    let a = lambda.underlying();
    component_dim_product(lambda) * multinomial_exact(a.size() as i64, &a.signed())
}

/// `Σ_{k=1}^{r-1} k · C(n-1; …, a_{k+1}-1, …)`, before multiplying by `F`.
pub fn zeta_weight(a: &Composition) -> BigUint {
    e_multinomials(a).into_iter().enumerate().skip(1).map(|(k, m)| m * k as u64).sum()
}

/// Exponent of `ζ` in the determinant, reduced mod `r`.
pub fn x_lambda(lambda: &Multipartition) -> u64 {
    let a = lambda.underlying();
    if a.size() == 0 {
        return 0;
    }
    residue(&(component_dim_product(lambda) * zeta_weight(&a)), lambda.r() as u64)
}

/// The exact (unreduced) value whose parity is the exponent of `sgn`.
pub fn y_lambda_exact(lambda: &Multipartition) -> BigUint {
    let a = lambda.underlying();
    let dims: Vec<BigUint> = lambda.components().iter().map(dim_sym).collect();
    let product: BigUint = dims.iter().product();
    let mut total = &product * orbit_count(&a);
    for (k, (component, tau)) in lambda.components().iter().zip(tau_multinomials(&a)).enumerate() {
        if tau.is_zero() {
            continue;
        }
        let others: BigUint = dims.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, f)| f).product();
        total += chirality(component) * others * tau;
    }
    total
}

/// Exponent of `sgn` in the determinant, reduced mod 2.
pub fn y_lambda(lambda: &Multipartition) -> u8 {
    residue(&y_lambda_exact(lambda), 2) as u8
}

pub fn det_irrep(lambda: &Multipartition) -> DetCharacter {
    DetCharacter::new(x_lambda(lambda), y_lambda(lambda) as u64, lambda.r())
}

/// Exact change of the (unreduced) ζ-exponent when components `i` and `i+1`
/// are swapped: `F · (C(n-1; …a_i-1…) − C(n-1; …a_{i+1}-1…))`, which is
/// `F · (n-1)! (a_i − a_{i+1}) / Π a_k!`.
pub fn adjacent_swap_shift(lambda: &Multipartition, i: usize) -> BigInt {
    let a = lambda.underlying();
    let e = e_multinomials(&a);
    let product = BigInt::from(component_dim_product(lambda));
    product * (BigInt::from(e[i].clone()) - BigInt::from(e[i + 1].clone()))
}

/// Residues of one partition used by [`CompositionKernel`].
#[derive(Debug, Clone)]
pub struct ComponentResidues {
    pub partition: Partition,
    pub dim: BigUint,
    pub dim_mod_r: u64,
    pub dim_odd: bool,
    pub chirality_odd: bool,
}

impl ComponentResidues {
    pub fn new(partition: Partition, r: usize) -> Self {
        let dim = dim_sym(&partition);
        ComponentResidues {
            dim_mod_r: residue(&dim, r as u64),
            dim_odd: residue(&dim, 2) == 1,
            chirality_odd: residue(&chirality(&partition), 2) == 1,
            dim,
            partition,
        }
    }
}

/// The composition-level factors of `x` and `y`, reduced once so that the
/// determinant of every multipartition on `a` is a product of residues.
/// Agrees with [`det_irrep`] on every input.
#[derive(Debug, Clone)]
pub struct CompositionKernel {
    r: usize,
    nonempty: bool,
    zeta_weight_mod_r: u64,
    orbit_odd: bool,
    tau_odd: Vec<bool>,
}

impl CompositionKernel {
    pub fn new(a: &Composition) -> Self {
        let r = a.len();
        CompositionKernel {
            r,
            nonempty: a.size() > 0,
            zeta_weight_mod_r: residue(&zeta_weight(a), r as u64),
            orbit_odd: residue(&orbit_count(a), 2) == 1,
            tau_odd: tau_multinomials(a).iter().map(|m| residue(m, 2) == 1).collect(),
        }
    }

    pub fn det(&self, components: &[&ComponentResidues]) -> DetCharacter {
        let r = self.r as u64;
        let x = if self.nonempty {
            components.iter().fold(self.zeta_weight_mod_r, |acc, c| acc * c.dim_mod_r % r)
        } else {
            0
        };
        let even_dims = components.iter().filter(|c| !c.dim_odd).count();
        let mut y = self.orbit_odd && even_dims == 0;
        for (k, c) in components.iter().enumerate() {
            // F / f_k is odd iff every other component has odd dimension.
            let others_odd = even_dims == 0 || (even_dims == 1 && !c.dim_odd);
            if self.tau_odd[k] && c.chirality_odd && others_odd {
                y = !y;
            }
        }
        DetCharacter::new(x, y as u64, self.r)
    }
}
