//! Composition-level sufficient conditions for the determinant: the
//! residue-class test for `x ≡ 0 mod r`, the four parity conditions for `y`
//! even, and eight named families of special compositions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{binary_profile, ensure_odd_prime, is_prime, multinomial_mod_p_lucas};
use crate::composition::Composition;
use crate::counting::PartitionCache;
use crate::det::{CompositionKernel, DetCharacter};
use crate::error::{Error, Result};

/// True iff the `r` values `C(n-1; …, a_k-1, …)` all lie in one residue class
/// mod `r` (a zero entry contributes the value 0).
pub fn residue_class_test(a: &Composition, r: u64) -> Result<bool> {
    ensure_odd_prime(r)?;
    let n = a.size() as i64;
    let mut classes = BTreeSet::new();
    for k in 0..a.len() {
        let mut bottom = a.signed();
        bottom[k] -= 1;
        classes.insert(multinomial_mod_p_lucas(n - 1, &bottom, r)?);
    }
    Ok(classes.len() <= 1)
}

/// Which of the four sufficient conditions for even `y` hold:
/// 1. two entries share a bit of `bin(·) \ {ord(·)}`;
/// 2. three entries are `≡ 2 mod 4`;
/// 3. three distinct entries are `≡ 3, 2, 1 mod 4`;
/// 4. at least four entries are odd.
pub fn y_parity_conditions(a: &Composition) -> BTreeSet<u8> {
    let entries = a.entries();
    let mut held = BTreeSet::new();
    let upper: Vec<BTreeSet<u32>> = entries.iter().map(|&v| binary_profile(v as u64).bits_above_ord()).collect();
    let shares = (0..upper.len()).any(|i| (i + 1..upper.len()).any(|j| !upper[i].is_disjoint(&upper[j])));
    if shares {
        held.insert(1);
    }
    let by_class = |c: usize| entries.iter().filter(|&&v| v % 4 == c).count();
    if by_class(2) >= 3 {
        held.insert(2);
    }
    if by_class(3) >= 1 && by_class(2) >= 1 && by_class(1) >= 1 {
        held.insert(3);
    }
    if by_class(1) + by_class(3) >= 4 {
        held.insert(4);
    }
    held
}

/// What a family asserts about the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// `x ≡ 0 mod r`, i.e. the determinant is `±1`.
    ZetaTrivial,
    /// `y` even, i.e. the determinant is some `ζ^s`.
    SignTrivial,
}

/// A matched family and whether its claim is backed by the residue-class test
/// (for [`Claim::ZetaTrivial`]) or a parity condition (for [`Claim::SignTrivial`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowClaim {
    pub row: u8,
    pub claim: Claim,
    pub supported: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub a: Composition,
    pub r: usize,
    pub n: usize,
    /// `false` when `r` is not an odd prime.
    pub residue_class_holds: bool,
    pub parity_conditions: BTreeSet<u8>,
    pub rows: BTreeSet<u8>,
    pub claims: Vec<RowClaim>,
    /// Labels of every determinant value allowed by the supported claims.
    pub possible_values: Vec<String>,
    pub notes: Vec<String>,
}

impl ClassificationVerdict {
    fn supported(&self, claim: Claim) -> bool {
        self.claims.iter().any(|c| c.claim == claim && c.supported)
    }

    pub fn admits(&self, det: DetCharacter) -> bool {
        !(self.supported(Claim::ZetaTrivial) && det.zeta_exp != 0)
            && !(self.supported(Claim::SignTrivial) && det.sign_exp != 0)
    }

    /// Allowed values in column order.
    pub fn possible(&self) -> Vec<DetCharacter> {
        (0..2 * self.r).map(|c| DetCharacter::from_column(c, self.r)).filter(|&d| self.admits(d)).collect()
    }
}

fn ceil_half(r: usize) -> usize {
    r.div_ceil(2)
}

/// Evaluates every family predicate on `a` (any order; the families are
/// symmetric). Families 1–3 need `r` an odd prime. Family 1 reads as all
/// entries equal and `≥ 2`; family 4 as some pair of equal entries `> 2`.
pub fn table1_classify(a: &Composition, r: usize) -> Result<ClassificationVerdict> {
    if a.len() != r {
        return Err(Error::ComponentCount { expected: r, found: a.len() });
    }
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    let entries = a.entries();
    let odd_prime = r > 2 && is_prime(r as u64);
    let residue_class_holds = odd_prime && residue_class_test(a, r as u64)?;
    let parity_conditions = y_parity_conditions(a);
    let parity_holds = !parity_conditions.is_empty();
    let mut rows = BTreeSet::new();
    let mut notes = Vec::new();

    if odd_prime {
        if entries.iter().all(|&v| v == entries[0] && v >= 2) {
            rows.insert(1);
        }
        if entries.iter().all(|&v| v % r == entries[0] % r) {
            rows.insert(2);
        }
        let threshold = ceil_half(r);
        for i in 0..r {
            if !entries[i].is_multiple_of(r) {
                continue;
            }
            let others: BTreeSet<usize> =
                entries.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v % r).collect();
            if others.len() == 1 {
                let s = *others.iter().next().expect("one class");
                if s > threshold {
                    rows.insert(3);
                } else if s == threshold && s > r / 2 {
                    notes.push(format!(
                        "family 3: common residue {s} equals ceil(r/2); it matches only under the floor({}) threshold",
                        r / 2
                    ));
                }
            }
        }
    }
    let pairs_equal_above_two = (0..r).any(|i| (i + 1..r).any(|j| entries[i] == entries[j] && entries[i] > 2));
    if pairs_equal_above_two {
        rows.insert(4);
    }
    let count = |pred: &dyn Fn(usize) -> bool| entries.iter().filter(|&&v| pred(v)).count();
    if count(&|v| v % 2 == 1) >= 4 {
        rows.insert(5);
    }
    if count(&|v| v % 4 == 2) >= 3 {
        rows.insert(6);
    }
    if count(&|v| v % 4 == 3) >= 2 {
        rows.insert(7);
    }
    if count(&|v| v % 4 == 3) >= 1 && count(&|v| v % 4 == 2) >= 1 && count(&|v| v % 4 == 1) >= 1 {
        rows.insert(8);
    }

    let mut claims = Vec::new();
    for &row in &rows {
        if row <= 3 {
            claims.push(RowClaim { row, claim: Claim::ZetaTrivial, supported: residue_class_holds });
        }
        if row == 1 || row >= 4 {
            claims.push(RowClaim { row, claim: Claim::SignTrivial, supported: parity_holds });
        }
    }
    for c in claims.iter().filter(|c| !c.supported) {
        notes.push(format!(
            "family {}: match not backed by the {} criterion; claim dropped",
            c.row,
            match c.claim {
                Claim::ZetaTrivial => "residue-class",
                Claim::SignTrivial => "parity",
            }
        ));
    }
    let mut verdict = ClassificationVerdict {
        a: a.clone(),
        r,
        n: a.size(),
        residue_class_holds,
        parity_conditions,
        rows,
        claims,
        possible_values: Vec::new(),
        notes,
    };
    verdict.possible_values = verdict.possible().iter().map(DetCharacter::label).collect();
    Ok(verdict)
}

/// Every determinant value realized by a multipartition on some ordering of `a`.
pub fn realized_determinants(a: &Composition) -> BTreeSet<DetCharacter> {
    let r = a.len();
    let cache = PartitionCache::new(a.entries().iter().copied().max().unwrap_or(0), r.max(1));
    let mut seen = BTreeSet::new();
    for ordering in a.canonical().distinct_orderings() {
        let kernel = CompositionKernel::new(&ordering);
        cache.for_each_on(&ordering, |components| {
            seen.insert(kernel.det(components));
        });
    }
    seen
}

/// Enumeration cross-check of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictCheck {
    pub realized: Vec<String>,
    /// Realized values outside `possible_values`.
    pub violations: Vec<String>,
    pub residue_class_sound: bool,
    pub parity_sound: bool,
}

impl VerdictCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.residue_class_sound && self.parity_sound
    }
}

pub fn check_verdict(verdict: &ClassificationVerdict) -> VerdictCheck {
    let realized = realized_determinants(&verdict.a);
    let violations = realized.iter().filter(|&&d| !verdict.admits(d)).map(DetCharacter::label).collect();
    VerdictCheck {
        realized: realized.iter().map(DetCharacter::label).collect(),
        violations,
        residue_class_sound: !verdict.residue_class_holds || realized.iter().all(|d| d.zeta_exp == 0),
        parity_sound: verdict.parity_conditions.is_empty() || realized.iter().all(|d| d.sign_exp == 0),
    }
}
