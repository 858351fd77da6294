//! Multipartitions indexing the irreducibles of `G(n, r) = Z_r ≀ S_n`, and the
//! two actions on them: permuting components and conjugating each component.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, parse_partition_at, Partition};

/// `(n, r)` for the group `G(n, r)`. `r = 1` is `S_n`, `r = 2` the
/// hyperoctahedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WreathParams {
    pub n: usize,
    pub r: usize,
}

impl WreathParams {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(WreathParams { n, r })
    }
}

/// An `r`-tuple of partitions `(λ_1, ..., λ_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    /// `(λ, (), ..., ())` with `r` components.
    pub fn first_only(lambda: Partition, r: usize) -> Self {
        let mut components = vec![Partition::empty(); r.max(1)];
        components[0] = lambda;
        Multipartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `(|λ_1|, ..., |λ_r|)`.
    pub fn underlying(&self) -> Composition {
        Composition::new(self.components.iter().map(Partition::size).collect())
    }

    pub fn params(&self) -> WreathParams {
        WreathParams { n: self.size(), r: self.r() }
    }

    /// Checks that the component count and total size agree with `params`.
    pub fn check(&self, params: WreathParams) -> Result<()> {
        if self.r() != params.r {
            return Err(Error::ComponentCount { expected: params.r, found: self.r() });
        }
        if self.size() != params.n {
            return Err(Error::SizeMismatch { expected: params.n, found: self.size() });
        }
        Ok(())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lambda) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{lambda}")?;
        }
        Ok(())
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// `2,1;;1` is `((2,1), (), (1))`; `r` is the number of `;`-separated fields.
    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut offset = 0;
        for field in s.split(';') {
            components.push(parse_partition_at(field, offset)?);
            offset += field.len() + 1;
        }
        Ok(Multipartition { components })
    }
}

/// Every multipartition whose underlying composition is `a`.
pub fn multipartitions_on(a: &Composition) -> Vec<Multipartition> {
    let lists: Vec<Vec<Partition>> = a.entries().iter().map(|&m| enumerate_partitions(m)).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(lists.len());
    fn go(lists: &[Vec<Partition>], current: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        match lists.split_first() {
            None => out.push(Multipartition { components: current.clone() }),
            Some((head, tail)) => {
                for lambda in head {
                    current.push(lambda.clone());
                    go(tail, current, out);
                    current.pop();
                }
            }
        }
    }
    go(&lists, &mut current, &mut out);
    out
}

/// All of `P(n, r)`, grouped by underlying composition.
pub fn multipartitions(params: WreathParams) -> Vec<Multipartition> {
    compositions(params.n, params.r).iter().flat_map(multipartitions_on).collect()
}

fn check_permutation(pi: &[usize]) -> Result<()> {
    let mut seen = vec![false; pi.len()];
    for &image in pi {
        if image >= pi.len() || seen[image] {
            return Err(Error::InvalidPermutation(pi.len()));
        }
        seen[image] = true;
    }
    Ok(())
}

/// Moves component `i` to position `pi[i]` (0-based). The 3-cycle
/// `[1, 2, 0]` sends `((3),(1),())` to `((),(3),(1))`; adjacent transpositions
/// swap two neighbouring components.
pub fn apply_permutation(lambda: &Multipartition, pi: &[usize]) -> Result<Multipartition> {
    if pi.len() != lambda.r() {
        return Err(Error::InvalidPermutation(lambda.r()));
    }
    check_permutation(pi)?;
    let mut components = vec![Partition::empty(); pi.len()];
    for (i, &target) in pi.iter().enumerate() {
        components[target] = lambda.components[i].clone();
    }
    Ok(Multipartition { components })
}

/// Swaps components `i` and `i + 1`.
pub fn swap_adjacent(lambda: &Multipartition, i: usize) -> Multipartition {
    let mut components = lambda.components.clone();
    components.swap(i, i + 1);
    Multipartition { components }
}

/// A reduced word for `pi`: positions `i` of adjacent swaps `(i, i+1)` which,
/// applied left to right with [`swap_adjacent`], realize [`apply_permutation`].
/// Its length is the inversion count of `pi`.
pub fn reduced_word(pi: &[usize]) -> Result<Vec<usize>> {
    check_permutation(pi)?;
    // target[p] = index of the component that must end up at position p
    let mut target = vec![0; pi.len()];
    for (i, &p) in pi.iter().enumerate() {
        target[p] = i;
    }
    let mut current: Vec<usize> = (0..pi.len()).collect();
    let mut word = Vec::new();
    for pos in 0..pi.len() {
        let mut at = current.iter().position(|&c| c == target[pos]).expect("present");
        while at > pos {
            current.swap(at - 1, at);
            word.push(at - 1);
            at -= 1;
        }
    }
    Ok(word)
}

/// Replaces every component by its conjugate.
pub fn apply_conjugation(lambda: &Multipartition) -> Multipartition {
    Multipartition { components: lambda.components.iter().map(Partition::conjugate).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn grammar() {
        let lambda = mp("2,1;;1");
        assert_eq!(lambda.r(), 3);
        assert_eq!(lambda.size(), 4);
        assert_eq!(lambda.underlying(), Composition::new(vec![3, 0, 1]));
        assert_eq!(lambda.to_string(), "2,1;;1");
        assert_eq!(mp(";").components(), &[Partition::empty(), Partition::empty()]);
        match "2,1;1,2".parse::<Multipartition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        match "2;a".parse::<Multipartition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn check_against_params() {
        let lambda = mp("1;1");
        assert!(lambda.check(WreathParams::new(2, 2).unwrap()).is_ok());
        assert_eq!(
            lambda.check(WreathParams::new(2, 3).unwrap()),
            Err(Error::ComponentCount { expected: 3, found: 2 })
        );
        assert_eq!(lambda.check(WreathParams::new(3, 2).unwrap()), Err(Error::SizeMismatch { expected: 3, found: 2 }));
        assert_eq!(WreathParams::new(1, 0), Err(Error::ZeroRank));
    }

    #[test]
    fn permutation_examples() {
        let lambda = mp("2;1");
        assert_eq!(apply_permutation(&lambda, &[0, 1]).unwrap(), lambda);
        assert_eq!(apply_permutation(&lambda, &[1, 0]).unwrap(), mp("1;2"));
        assert_eq!(apply_permutation(&mp("3;1;"), &[1, 2, 0]).unwrap(), mp(";3;1"));
        assert!(apply_permutation(&lambda, &[0, 0]).is_err());
        assert!(apply_permutation(&lambda, &[0, 1, 2]).is_err());
    }

    #[test]
    fn reduced_words_realize_permutations() {
        let lambda = mp("3;2,1;1,1;;4");
        let pis: [&[usize]; 4] = [&[0, 1, 2, 3, 4], &[4, 3, 2, 1, 0], &[1, 2, 0, 4, 3], &[2, 0, 4, 1, 3]];
        for pi in pis {
            let word = reduced_word(pi).unwrap();
            let inversions = (0..pi.len())
                .flat_map(|i| (i + 1..pi.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| pi[i] > pi[j])
                .count();
            assert_eq!(word.len(), inversions);
            let stepped = word.iter().fold(lambda.clone(), |acc, &i| swap_adjacent(&acc, i));
            assert_eq!(stepped, apply_permutation(&lambda, pi).unwrap());
        }
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(apply_conjugation(&mp("1,1;")), mp("2;"));
        assert_eq!(apply_conjugation(&mp("2,1;1;")), mp("2,1;1;"));
        assert_eq!(apply_conjugation(&mp("3,1;2")), mp("2,1,1;1,1"));
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(multipartitions(WreathParams::new(2, 2).unwrap()).len(), 5);
        assert_eq!(multipartitions(WreathParams::new(4, 3).unwrap()).len(), 51);
        assert_eq!(multipartitions(WreathParams::new(0, 3).unwrap()), vec![mp(";;")]);
    }
}
