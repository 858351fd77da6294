//! Counting irreducibles of `G(n, r)` by degree and by determinant.
//!
//! Every count has a brute-force path that enumerates multipartitions and
//! evaluates exact dimensions or determinants one by one. Closed formulas are
//! evaluated alongside and compared against it; enumeration is the reference.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    base_digits, binary_profile, ensure_odd_prime, ensure_prime, factorial, is_prime, multinomial_exact, residue,
};
use crate::classify::residue_class_test;
use crate::composition::{canonical_compositions, compositions, Composition};
use crate::det::{orbit_count, tau_multinomials, ComponentResidues, CompositionKernel, DetCharacter};
use crate::error::{Error, Result};
use crate::multipartition::WreathParams;
use crate::partition::{chirality, dim_sym, enumerate_partitions, partition_counts};
use crate::reference::column_names;
use crate::series::CoefficientSeries;

/// Per-size lists of partitions with their residues, shared by the enumerators.
pub struct PartitionCache {
    by_size: Vec<Vec<ComponentResidues>>,
}

impl PartitionCache {
    pub fn new(max_size: usize, r: usize) -> Self {
        let by_size = (0..=max_size)
            .map(|m| enumerate_partitions(m).into_iter().map(|p| ComponentResidues::new(p, r)).collect())
            .collect();
        PartitionCache { by_size }
    }

    pub fn of_size(&self, m: usize) -> &[ComponentResidues] {
        &self.by_size[m]
    }

    /// Calls `visit` once per multipartition with underlying composition `a`,
    /// in lexicographic order of the component indices.
    pub fn for_each_on<F: FnMut(&[&ComponentResidues])>(&self, a: &Composition, mut visit: F) {
        let lists: Vec<&[ComponentResidues]> = a.entries().iter().map(|&m| self.of_size(m)).collect();
        let mut index = vec![0usize; lists.len()];
        let mut current: Vec<&ComponentResidues> = lists.iter().map(|l| &l[0]).collect();
        loop {
            visit(&current);
            let mut k = lists.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                index[k] += 1;
                if index[k] < lists[k].len() {
                    current[k] = &lists[k][index[k]];
                    break;
                }
                index[k] = 0;
                current[k] = &lists[k][0];
            }
        }
    }
}

/// `|P(n, r)| = [x^n] P(x)^r`.
pub fn multipartition_count(params: WreathParams) -> BigUint {
    CoefficientSeries::partitions(params.n).pow(params.r as u64).coefficient(params.n)
}

/// `Σ_{n=1}^{n_max} |P(n, r)|`, the work of a full table.
pub fn table_enumeration_size(n_max: usize, r: usize) -> BigUint {
    let series = CoefficientSeries::partitions(n_max).pow(r as u64);
    series.coefficients().iter().skip(1).sum()
}

/// `A(n)`: the product of the powers of 2 in the binary expansion of `n`.
/// `A(0) = 1`.
pub fn count_odd_sym(n: usize) -> BigUint {
    let exponent: u32 = binary_profile(n as u64).bits.iter().sum();
    BigUint::one() << exponent
}

/// Number of `λ ⊢ n` with `f_λ` odd, by enumeration.
pub fn count_odd_sym_brute(n: usize) -> BigUint {
    BigUint::from(enumerate_partitions(n).iter().filter(|l| residue(&dim_sym(l), 2) == 1).count())
}

/// `B(n)`: number of chiral partitions (`g_λ` odd), by enumeration.
/// `B(0) = B(1) = 0`.
pub fn count_chiral_sym(n: usize) -> BigUint {
    BigUint::from(enumerate_partitions(n).iter().filter(|l| residue(&chirality(l), 2) == 1).count())
}

/// Sizes of the three nonempty parity classes of `(f_λ, g_λ)` for `λ ⊢ n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiralityClasses {
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub odd_dim_chiral: BigUint,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub odd_dim_achiral: BigUint,
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub even_dim_chiral: BigUint,
}

/// Enumerated class sizes, returned together with the predicted
/// `(A(n)/2, A(n)/2, B(n) − A(n)/2)`.
pub fn chirality_split_classes(n: usize) -> Result<(ChiralityClasses, ChiralityClasses)> {
    if n < 2 {
        return Err(Error::NoTransposition(n));
    }
    let mut counts = [0u64; 3];
    for lambda in enumerate_partitions(n) {
        let f_odd = residue(&dim_sym(&lambda), 2) == 1;
        let g_odd = residue(&chirality(&lambda), 2) == 1;
        match (f_odd, g_odd) {
            (true, true) => counts[0] += 1,
            (true, false) => counts[1] += 1,
            (false, true) => counts[2] += 1,
            (false, false) => {}
        }
    }
    let enumerated = ChiralityClasses {
        odd_dim_chiral: counts[0].into(),
        odd_dim_achiral: counts[1].into(),
        even_dim_chiral: counts[2].into(),
    };
    let half = count_odd_sym(n) / 2u32;
    let predicted = ChiralityClasses {
        odd_dim_chiral: half.clone(),
        odd_dim_achiral: half.clone(),
        even_dim_chiral: count_chiral_sym(n) - half,
    };
    Ok((enumerated, predicted))
}

/// `A(n, r) = r^{|bin(n)|} A(n)`.
pub fn count_odd_wreath(n: usize, r: usize) -> BigUint {
    let ones = binary_profile(n as u64).bits.len() as u32;
    BigUint::from(r).pow(ones) * count_odd_sym(n)
}

fn exact_dims_on(a: &Composition, cache: &PartitionCache, mut visit: impl FnMut(BigUint)) {
    let top = multinomial_exact(a.size() as i64, &a.signed());
    cache.for_each_on(a, |components| {
        let product: BigUint = components.iter().map(|c| &c.dim).product();
        visit(product * &top);
    });
}

/// Number of `λ ∈ P(n, r)` whose exact dimension is not divisible by `p`.
fn count_dims_coprime(params: WreathParams, p: u64) -> BigUint {
    let cache = PartitionCache::new(params.n, params.r);
    let total: u64 = compositions(params.n, params.r)
        .par_iter()
        .map(|a| {
            let mut count = 0u64;
            exact_dims_on(a, &cache, |dim| {
                if residue(&dim, p) != 0 {
                    count += 1;
                }
            });
            count
        })
        .sum();
    BigUint::from(total)
}

/// Odd-dimensional irreducibles of `G(n, r)` by enumeration.
pub fn count_odd_wreath_brute(params: WreathParams) -> BigUint {
    count_dims_coprime(params, 2)
}

/// `m_p(S_n)`: partitions of `n` with `f_λ` not divisible by `p`.
pub fn mp_sym(n: usize, p: u64) -> Result<BigUint> {
    ensure_prime(p)?;
    Ok(BigUint::from(enumerate_partitions(n).iter().filter(|l| residue(&dim_sym(l), p) != 0).count()))
}

/// `m_p(G(n, r)) = Π_k [x^{α_k}] P(x)^{r p^k}` over the base-`p` digits `α_k`
/// of `n`.
pub fn mp_wreath_formula(n: usize, r: usize, p: u64) -> Result<BigUint> {
    ensure_prime(p)?;
    let digits = base_digits(n as u64, p);
    let degree = digits.iter().copied().max().unwrap_or(0) as usize;
    let base = CoefficientSeries::partitions(degree);
    let mut acc = BigUint::one();
    let mut p_power = 1u64;
    for &alpha in &digits {
        acc *= base.pow(r as u64 * p_power).coefficient(alpha as usize);
        p_power = p_power.saturating_mul(p);
    }
    Ok(acc)
}

/// `m_p(G(n, r))` by enumeration with exact dimensions.
pub fn mp_wreath_brute(params: WreathParams, p: u64) -> Result<BigUint> {
    ensure_prime(p)?;
    Ok(count_dims_coprime(params, p))
}

/// Multipartitions on a fixed composition split by the parity of `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiralitySplit {
    pub a: Composition,
    /// `A_0(a)`: `y` even.
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub even: BigUint,
    /// `A_1(a)`: `y` odd.
    #[serde(serialize_with = "crate::arith::decimal::serialize")]
    pub odd: BigUint,
}

/// `A_0(a), A_1(a)` from the closed formula.
///
/// With `I` the positions whose `C(n-2; …, a_i-2, …)` is odd and `m = |I|`:
/// if `m = 0`, `A_1 = Π A(a_k)` when the orbit count is odd and 0 otherwise;
/// if `m ≥ 1`, `A_1 = Σ_{i∈I} B(a_i) Π_{k≠i} A(a_k) − (m−1)/2 · Π A(a_k)`.
pub fn chirality_split(a: &Composition) -> ChiralitySplit {
    let odd_dims: Vec<BigInt> = a.entries().iter().map(|&m| BigInt::from(count_odd_sym(m))).collect();
    let product: BigInt = odd_dims.iter().product();
    let odd_positions: Vec<usize> =
        tau_multinomials(a).iter().enumerate().filter(|(_, m)| residue(m, 2) == 1).map(|(i, _)| i).collect();
    let odd = if odd_positions.is_empty() {
        if residue(&orbit_count(a), 2) == 1 {
            product.clone()
        } else {
            BigInt::zero()
        }
    } else {
        let m = odd_positions.len() as i64;
        let mut sum = BigInt::zero();
        for &i in &odd_positions {
            let others: BigInt = odd_dims.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, v)| v).product();
            sum += BigInt::from(count_chiral_sym(a.entries()[i])) * others;
        }
        let correction = (BigInt::from(m - 1) * &product) / 2;
        sum - correction
    };
    let total: BigUint = a.entries().iter().map(|&m| partition_counts(m)[m].clone()).product();
    let odd = odd.to_biguint().expect("A_1 is nonnegative");
    ChiralitySplit { a: a.clone(), even: total - &odd, odd }
}

/// `A_0(a), A_1(a)` by evaluating every multipartition on `a`.
pub fn chirality_split_brute(a: &Composition) -> ChiralitySplit {
    let cache = PartitionCache::new(a.entries().iter().copied().max().unwrap_or(0), a.len().max(1));
    let kernel = CompositionKernel::new(a);
    let (mut even, mut odd) = (0u64, 0u64);
    cache.for_each_on(a, |components| {
        if kernel.det(components).sign_exp == 1 {
            odd += 1;
        } else {
            even += 1;
        }
    });
    ChiralitySplit { a: a.clone(), even: even.into(), odd: odd.into() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "composition", rename_all = "snake_case")]
pub enum TableScope {
    Aggregate,
    Composition(Composition),
}

/// Counts of irreducibles by determinant, in the `2r` column layout of
/// [`DetCharacter::column`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NTable {
    pub params: WreathParams,
    pub scope: TableScope,
    #[serde(serialize_with = "crate::arith::decimal::serialize_vec")]
    pub counts: Vec<BigUint>,
}

impl NTable {
    fn from_counts(params: WreathParams, scope: TableScope, counts: Vec<u64>) -> Self {
        NTable { params, scope, counts: counts.into_iter().map(BigUint::from).collect() }
    }

    pub fn get(&self, character: DetCharacter) -> &BigUint {
        &self.counts[character.column(self.params.r)]
    }

    /// `N_{ζ^s}` for `1 ≤ s ≤ r`, where `s = r` is `N_1`.
    pub fn zeta(&self, s: usize) -> &BigUint {
        self.get(DetCharacter::new(s as u64, 0, self.params.r))
    }

    /// `N_{−ζ^s}` for `1 ≤ s ≤ r`, where `s = r` is `N_{−1}`.
    pub fn neg_zeta(&self, s: usize) -> &BigUint {
        self.get(DetCharacter::new(s as u64, 1, self.params.r))
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `all`, or the composition quoted as one CSV field.
    pub fn scope_label(&self) -> String {
        match &self.scope {
            TableScope::Aggregate => "all".to_string(),
            TableScope::Composition(a) => format!("\"{a}\""),
        }
    }

    /// One line under [`csv_header`], without a trailing newline.
    pub fn csv_row(&self) -> String {
        let mut fields = vec![self.params.n.to_string(), self.params.r.to_string(), self.scope_label()];
        fields.extend(self.counts.iter().map(|c| c.to_string()));
        fields.push(self.total().to_string());
        fields.join(",")
    }

    /// One line under [`plot_header`]: `log₂` of each count to six decimals,
    /// empty where the count is zero.
    pub fn plot_row(&self) -> String {
        let mut fields = vec![self.params.n.to_string()];
        fields.extend(self.counts.iter().map(|c| if c.is_zero() { String::new() } else { format!("{:.6}", log2(c)) }));
        fields.join(",")
    }

    pub fn merge(&mut self, other: &NTable) {
        for (mine, theirs) in self.counts.iter_mut().zip(&other.counts) {
            *mine += theirs;
        }
    }
}

/// `n,r,scope,N_1,N_zeta_1..,N_negzeta_1..,N_neg1,total`.
pub fn csv_header(r: usize) -> String {
    let mut fields = vec!["n".to_string(), "r".to_string(), "scope".to_string()];
    fields.extend(column_names(r));
    fields.push("total".to_string());
    fields.join(",")
}

/// `n,log2_N_1,…` in the column order of [`csv_header`].
pub fn plot_header(r: usize) -> String {
    let mut fields = vec!["n".to_string()];
    fields.extend(column_names(r).into_iter().map(|c| format!("log2_{c}")));
    fields.join(",")
}

/// `log₂ v` from the leading 53 bits, for plot data only.
fn log2(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 53 {
        return (v.to_u64().expect("fits") as f64).log2();
    }
    let shift = bits - 53;
    let mantissa = (v >> shift).to_u64().expect("53 bits") as f64;
    mantissa.log2() + shift as f64
}

fn count_on(a: &Composition, cache: &PartitionCache, r: usize, counts: &mut [u64]) {
    let kernel = CompositionKernel::new(a);
    cache.for_each_on(a, |components| counts[kernel.det(components).column(r)] += 1);
}

/// Which composition-level closed formula was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionFormula {
    /// `Σ_{s=1}^r N_{−ζ^s}(a) = #orderings · A_1(a)` and the `ζ` analogue.
    SignSums,
    /// Constant residue class: `N_{±ζ^s}(a) = 0` for `s < r`,
    /// `N_{±1}(a) = #orderings · A_{0/1}(a)`.
    ConstantResidue,
    /// `r ∤ n`, every `a_k < r`: `N_{±ζ^s}(a) = (r−1)!/Π(rep)! · A_{0/1}(a)` for all `s`.
    SmallParts,
    /// The same closed form in the regime `n < r`, where it always applies.
    FewerPointsThanRank,
    /// `N_{ζ^s}(a) + N_{−ζ^s}(a)` and `N_1(a) + N_{−1}(a)` via `m_r(S_{a_k})`, `r ∤ n`.
    PairSums,
    /// The same pair sums as stated for `r | n`. Known not to hold in general;
    /// evaluated as a reference claim.
    PairSumsDivisible,
}

impl CompositionFormula {
    pub fn name(&self) -> &'static str {
        match self {
            CompositionFormula::SignSums => "sign-sums",
            CompositionFormula::ConstantResidue => "constant-residue",
            CompositionFormula::SmallParts => "small-parts",
            CompositionFormula::FewerPointsThanRank => "fewer-points-than-rank",
            CompositionFormula::PairSums => "pair-sums",
            CompositionFormula::PairSumsDivisible => "pair-sums-divisible",
        }
    }

    /// Formulas whose failure is a known defect of the stated claim rather than
    /// of this implementation.
    pub fn is_reference_claim(&self) -> bool {
        matches!(self, CompositionFormula::PairSumsDivisible)
    }
}

/// A closed-formula value compared with the enumerated one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaComparison {
    pub formula: CompositionFormula,
    pub quantity: String,
    /// Rendered exactly; a non-integral prediction appears as `p/q`.
    pub predicted: String,
    pub enumerated: String,
    pub agrees: bool,
}

fn compare(
    formula: CompositionFormula,
    quantity: String,
    numer: BigUint,
    denom: &BigUint,
    enumerated: &BigUint,
) -> FormulaComparison {
    let agrees = numer == enumerated * denom;
    let g = numer.gcd(denom);
    let predicted = if &g == denom { (&numer / denom).to_string() } else { format!("{}/{}", &numer / &g, denom / &g) };
    FormulaComparison { formula, quantity, predicted, enumerated: enumerated.to_string(), agrees }
}

/// A composition-scope table with the closed formulas that applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionTable {
    pub table: NTable,
    pub split: ChiralitySplit,
    pub comparisons: Vec<FormulaComparison>,
}

impl CompositionTable {
    pub fn all_agree(&self) -> bool {
        self.comparisons.iter().all(|c| c.agrees)
    }
}

/// Counts over every multipartition on every distinct ordering of the weakly
/// decreasing composition `a`, plus every closed formula whose hypotheses hold.
pub fn n_table_for_composition(a: &Composition) -> Result<CompositionTable> {
    if !a.is_weakly_decreasing() {
        return Err(Error::Parse { position: 0, message: format!("composition {a} is not weakly decreasing") });
    }
    let r = a.len();
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    let n = a.size();
    let params = WreathParams::new(n, r)?;
    let cache = PartitionCache::new(a.entries().first().copied().unwrap_or(0), r);
    let mut counts = vec![0u64; 2 * r];
    for ordering in a.distinct_orderings() {
        count_on(&ordering, &cache, r, &mut counts);
    }
    let table = NTable::from_counts(params, TableScope::Composition(a.clone()), counts);
    let split = chirality_split(a);
    let orderings = a.ordering_count();
    let one = BigUint::one();
    let mut comparisons = Vec::new();

    let neg_sum: BigUint = (1..=r).map(|s| table.neg_zeta(s)).sum();
    let pos_sum: BigUint = (1..=r).map(|s| table.zeta(s)).sum();
    comparisons.push(compare(
        CompositionFormula::SignSums,
        "sum_s N_negzeta_s".into(),
        &orderings * &split.odd,
        &one,
        &neg_sum,
    ));
    comparisons.push(compare(
        CompositionFormula::SignSums,
        "sum_s N_zeta_s".into(),
        &orderings * &split.even,
        &one,
        &pos_sum,
    ));

    if r > 2 && is_prime(r as u64) && n > 0 {
        let zero = BigUint::zero();
        let reps = a.repetition_factor();
        if residue_class_test(a, r as u64)? {
            let f = CompositionFormula::ConstantResidue;
            for s in 1..r {
                comparisons.push(compare(f, format!("N_zeta_{s}"), zero.clone(), &one, table.zeta(s)));
                comparisons.push(compare(f, format!("N_negzeta_{s}"), zero.clone(), &one, table.neg_zeta(s)));
            }
            comparisons.push(compare(f, "N_1".into(), &orderings * &split.even, &one, table.zeta(r)));
            comparisons.push(compare(f, "N_neg1".into(), &orderings * &split.odd, &one, table.neg_zeta(r)));
        } else {
            let small = if n < r {
                Some(CompositionFormula::FewerPointsThanRank)
            } else if !n.is_multiple_of(r) && a.entries().iter().all(|&v| v < r) {
                Some(CompositionFormula::SmallParts)
            } else {
                None
            };
            if let Some(f) = small {
                let coef = factorial(r as u64 - 1);
                for s in 1..=r {
                    comparisons.push(compare(f, format!("N_zeta_{s}"), &coef * &split.even, &reps, table.zeta(s)));
                    comparisons.push(compare(
                        f,
                        format!("N_negzeta_{s}"),
                        &coef * &split.odd,
                        &reps,
                        table.neg_zeta(s),
                    ));
                }
            }
            let coprime: BigUint = a.entries().iter().map(|&m| mp_sym(m, r as u64).expect("prime")).product();
            let all: BigUint = a.entries().iter().map(|&m| partition_counts(m)[m].clone()).product();
            let rb = BigUint::from(r);
            let (f, pair, unit) = if n.is_multiple_of(r) {
                (
                    CompositionFormula::PairSumsDivisible,
                    factorial(r as u64 - 2) * &rb * &coprime,
                    factorial(r as u64) * (&all - &coprime),
                )
            } else {
                (
                    CompositionFormula::PairSums,
                    factorial(r as u64 - 1) * &coprime,
                    factorial(r as u64 - 1) * (&rb * &all - (&rb - 1u32) * &coprime),
                )
            };
            for s in 1..r {
                let observed = table.zeta(s) + table.neg_zeta(s);
                comparisons.push(compare(f, format!("N_zeta_{s} + N_negzeta_{s}"), pair.clone(), &reps, &observed));
            }
            let observed = table.zeta(r) + table.neg_zeta(r);
            comparisons.push(compare(f, "N_1 + N_neg1".into(), unit, &reps, &observed));
        }
    }
    Ok(CompositionTable { table, split, comparisons })
}

/// Aggregate table by direct enumeration of `P(n, r)`, one worker task per
/// composition; the merge is an exact sum, so the result is independent of
/// scheduling.
pub fn n_table_aggregate(params: WreathParams) -> NTable {
    let r = params.r;
    let cache = PartitionCache::new(params.n, r);
    let counts = compositions(params.n, r)
        .par_iter()
        .map(|a| {
            let mut counts = vec![0u64; 2 * r];
            count_on(a, &cache, r, &mut counts);
            counts
        })
        .reduce(
            || vec![0u64; 2 * r],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );
    NTable::from_counts(params, TableScope::Aggregate, counts)
}

/// Aggregate table as the sum of composition-scope tables over weakly
/// decreasing compositions.
pub fn n_table_aggregate_by_compositions(params: WreathParams) -> Result<NTable> {
    let parts: Vec<CompositionTable> =
        canonical_compositions(params.n, params.r).par_iter().map(n_table_for_composition).collect::<Result<_>>()?;
    let mut total = NTable::from_counts(params, TableScope::Aggregate, vec![0; 2 * params.r]);
    for part in &parts {
        total.merge(&part.table);
    }
    Ok(total)
}

/// One clause of the equal-count and inequality statements on an aggregate table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub applicable: bool,
    pub holds: bool,
    pub witness: String,
}

fn render(values: &[&BigUint]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Checks, for `r` an odd prime:
/// (i) `N_{ζ^s}` and `N_{−ζ^s}` are constant over `1 ≤ s < r`;
/// (ii) when `n < r`, also equal at `s = r`;
/// (iii) when `r ∤ n`, `N_{ζ^s} ≤ N_1` and `N_{−ζ^s} ≤ N_{−1}`.
pub fn verify_inequalities(table: &NTable) -> Result<Vec<ClauseResult>> {
    let WreathParams { n, r } = table.params;
    ensure_odd_prime(r as u64)?;
    let zetas: Vec<&BigUint> = (1..r).map(|s| table.zeta(s)).collect();
    let negs: Vec<&BigUint> = (1..r).map(|s| table.neg_zeta(s)).collect();
    let constant = |v: &[&BigUint]| v.windows(2).all(|w| w[0] == w[1]);
    let n1 = table.zeta(r);
    let nm1 = table.neg_zeta(r);
    let mut out = vec![ClauseResult {
        clause: "equal-nontrivial",
        applicable: true,
        holds: constant(&zetas) && constant(&negs),
        witness: format!("zeta=[{}] negzeta=[{}]", render(&zetas), render(&negs)),
    }];
    out.push(ClauseResult {
        clause: "equal-including-trivial",
        applicable: n < r,
        holds: n >= r || (zetas.iter().all(|v| *v == n1) && negs.iter().all(|v| *v == nm1)),
        witness: format!("N_1={n1} N_zeta_1={} N_neg1={nm1} N_negzeta_1={}", zetas[0], negs[0]),
    });
    out.push(ClauseResult {
        clause: "bounded-by-trivial",
        applicable: n % r != 0,
        holds: n % r == 0 || (zetas.iter().all(|v| *v <= n1) && negs.iter().all(|v| *v <= nm1)),
        witness: format!(
            "max N_zeta={} <= N_1={n1}; max N_negzeta={} <= N_neg1={nm1}",
            zetas.iter().max().map(|v| v.to_string()).unwrap_or_default(),
            negs.iter().max().map(|v| v.to_string()).unwrap_or_default()
        ),
    });
    Ok(out)
}

/// Count of multipartitions `|P(n, r)|` as a `u128`, for resource guards.
pub fn enumeration_estimate(n_max: usize, r: usize) -> u128 {
    table_enumeration_size(n_max, r).to_u128().unwrap_or(u128::MAX)
}
