//! Single-partition data and determinants against independent oracles.

mod common;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};

use common::{partitions, syt_count, transposition_character_mn};
use wreathdet::det::{det_irrep, dim_wreath};
use wreathdet::eigen::{char_at_s1, det_via_eigenvalues};
use wreathdet::multipartition::multipartitions;
use wreathdet::partition::{chirality, dim_sym, enumerate_partitions, partition_counts, transposition_character};
use wreathdet::{Partition, WreathParams};

#[test]
fn enumeration_matches_independent_recursion() {
    for n in 0..=14 {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(ours, partitions(n), "n = {n}");
        assert_eq!(partition_counts(n)[n], BigUint::from(ours.len()));
    }
}

#[test]
fn hook_lengths_match_tableau_counts() {
    let mut memo = HashMap::new();
    for n in 0..=14 {
        for parts in partitions(n) {
            let lambda = Partition::new(parts.clone());
            assert_eq!(dim_sym(&lambda), syt_count(&parts, &mut memo), "{lambda}");
        }
    }
}

#[test]
fn contents_match_murnaghan_nakayama() {
    let mut memo = HashMap::new();
    for n in 2..=10 {
        for parts in partitions(n) {
            let lambda = Partition::new(parts.clone());
            let oracle = transposition_character_mn(&parts, &mut memo);
            assert_eq!(transposition_character(&lambda).unwrap(), oracle, "{lambda}");
            let g = (BigInt::from(syt_count(&parts, &mut memo)) - &oracle) / 2;
            assert_eq!(BigInt::from(chirality(&lambda)), g, "{lambda}");
        }
    }
}

#[test]
fn wreath_character_at_transposition_has_parity_of_dimension() {
    for (n, r) in [(4, 2), (5, 3), (6, 2), (4, 4)] {
        for lambda in multipartitions(WreathParams::new(n, r).unwrap()) {
            let f = BigInt::from(dim_wreath(&lambda));
            let chi = char_at_s1(&lambda).unwrap();
            assert_eq!((&f - &chi) % 2, BigInt::from(0), "{lambda}");
            assert!(chi.magnitude() <= f.magnitude());
        }
    }
}

#[test]
fn determinant_routes_agree_beyond_acceptance_scope() {
    for (n, r) in [(9, 2), (10, 2), (9, 3), (6, 7), (5, 4), (6, 6)] {
        for lambda in multipartitions(WreathParams::new(n, r).unwrap()) {
            assert_eq!(det_irrep(&lambda), det_via_eigenvalues(&lambda), "{lambda}");
        }
    }
}

#[test]
fn determinant_examples() {
    let det = |s: &str| det_irrep(&s.parse().unwrap());
    assert_eq!(det("1;1").label(), "-zeta^1");
    assert_eq!(det("2;").label(), "1");
    assert_eq!(det(";2").label(), "zeta^1");
    assert_eq!(det("1,1;").label(), "-1");
}
