//! Counting and classification through the public API.

use num_bigint::BigUint;

use wreathdet::classify::{check_verdict, table1_classify};
use wreathdet::composition::canonical_compositions;
use wreathdet::counting::{
    chirality_split, chirality_split_brute, count_odd_wreath, count_odd_wreath_brute, mp_wreath_brute,
    mp_wreath_formula, multipartition_count, n_table_aggregate, n_table_aggregate_by_compositions,
    n_table_for_composition, verify_inequalities,
};
use wreathdet::reference::{compare_row, errata, reference_ranks, reference_table};
use wreathdet::{Composition, WreathParams};

fn params(n: usize, r: usize) -> WreathParams {
    WreathParams::new(n, r).unwrap()
}

#[test]
fn multipartition_counts() {
    let expected = [(2, [2u64, 5, 10, 20, 36, 65]), (3, [3, 9, 22, 51, 108, 221]), (7, [7, 35, 140, 490, 1547, 4522])];
    for (r, row) in expected {
        for (i, &v) in row.iter().enumerate() {
            assert_eq!(multipartition_count(params(i + 1, r)), BigUint::from(v));
        }
    }
}

#[test]
fn odd_degree_beyond_acceptance_scope() {
    for r in [4, 6, 7] {
        for n in 1..=7 {
            assert_eq!(count_odd_wreath(n, r), count_odd_wreath_brute(params(n, r)), "r={r} n={n}");
        }
    }
}

#[test]
fn coprime_degree_with_larger_primes() {
    for (r, p) in [(2, 7), (4, 3), (3, 11)] {
        for n in 0..=9 {
            assert_eq!(
                mp_wreath_formula(n, r, p).unwrap(),
                mp_wreath_brute(params(n, r), p).unwrap(),
                "r={r} n={n} p={p}"
            );
        }
    }
}

#[test]
fn chirality_split_on_other_ranks() {
    for r in [2, 4, 6] {
        for n in 0..=7 {
            for a in canonical_compositions(n, r) {
                assert_eq!(chirality_split(&a), chirality_split_brute(&a), "{a}");
            }
        }
    }
}

#[test]
fn composition_tables_sum_to_aggregate() {
    for (n, r) in [(7, 3), (6, 5), (5, 7), (8, 2)] {
        assert_eq!(n_table_aggregate(params(n, r)), n_table_aggregate_by_compositions(params(n, r)).unwrap());
    }
}

#[test]
fn closed_formulas_hold_except_divisible_pair_sums() {
    for r in [3, 5, 7] {
        for n in 1..=7 {
            for a in canonical_compositions(n, r) {
                let t = n_table_for_composition(&a).unwrap();
                for c in t.comparisons.iter().filter(|c| !c.formula.is_reference_claim()) {
                    assert!(c.agrees, "{a}: {c:?}");
                }
            }
        }
    }
}

#[test]
fn divisible_pair_sums_fail_as_printed() {
    let t = n_table_for_composition(&Composition::new(vec![3, 0, 0])).unwrap();
    let bad: Vec<_> = t.comparisons.iter().filter(|c| !c.agrees).collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|c| c.formula.is_reference_claim()));
    assert!(bad.iter().any(|c| c.predicted == "9/2" && c.enumerated == "3"));
}

#[test]
fn equalities_and_bounds_on_published_ranges() {
    for r in [3, 5, 7] {
        for n in 1..=9 {
            for clause in verify_inequalities(&n_table_aggregate(params(n, r))).unwrap() {
                assert!(!clause.applicable || clause.holds, "r={r} n={n} {clause:?}");
            }
        }
    }
}

#[test]
fn published_tables_disagree_only_in_errata() {
    let known = errata();
    let mut seen = 0;
    for r in reference_ranks() {
        let table = reference_table(r).unwrap();
        for row in &table.rows {
            let computed = n_table_aggregate(params(row.n, r));
            for m in compare_row(row, &computed, &known) {
                assert!(m.documented, "{m:?}");
                seen += 1;
            }
        }
    }
    assert_eq!(seen, known.len());
}

#[test]
fn verdicts_sound_up_to_seven() {
    for r in [3, 5] {
        for n in 1..=7 {
            for a in canonical_compositions(n, r) {
                let v = table1_classify(&a, r).unwrap();
                assert!(check_verdict(&v).passed(), "{a}");
            }
        }
    }
}
