//! Compositions, weak compositions and integer partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A finite sequence of positive integers. The empty sequence is the
/// composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<usize>);

/// A finite sequence of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeakComposition(Vec<usize>);

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on parts, so among partitions of
/// the same size `(1,1,1) < (2,1) < (3)`. Expansions print in this order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(position) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { position });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by sorting the parts into weakly decreasing order.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Product of the factorials of the parts.
    pub fn factorial_product(&self) -> BigUint {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// All compositions obtained by adding together adjacent parts, including
    /// `self` and the one-part composition.
    ///
    /// Bit `i` of the merge mask joins parts `i` and `i + 1`; results are
    /// returned in increasing mask order, so `self` comes first.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.0.is_empty() {
            return vec![Composition::empty()];
        }
        let gaps = self.0.len() - 1;
        (0u64..1 << gaps)
            .map(|mask| {
                let mut parts = Vec::with_capacity(self.0.len());
                let mut acc = self.0[0];
                for (i, &p) in self.0[1..].iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc += p;
                    } else {
                        parts.push(acc);
                        acc = p;
                    }
                }
                parts.push(acc);
                Composition(parts)
            })
            .collect()
    }

    /// True when `coarse` is obtained from `self` by merging adjacent parts.
    pub fn is_refined_by_coarsening(&self, coarse: &Composition) -> bool {
        if self.size() != coarse.size() {
            return false;
        }
        // every partial sum of `coarse` must be a partial sum of `self`
        let fine: Vec<usize> = partial_sums(&self.0).collect();
        partial_sums(&coarse.0).all(|s| fine.binary_search(&s).is_ok())
    }

    /// Returns true when `self` dominates `other`: every partial sum of `self`
    /// is at least the matching partial sum of `other`, over the common
    /// length.
    pub fn dominates(&self, other: &Composition) -> bool {
        partial_sums(&self.0)
            .zip(partial_sums(&other.0))
            .all(|(a, b)| a >= b)
    }

    /// All compositions of `n`, ordered by the bitmask of cut points.
    pub fn all_of_size(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        Composition(vec![1; n]).coarsenings()
    }
}

fn partial_sums(parts: &[usize]) -> impl Iterator<Item = usize> + '_ {
    parts.iter().scan(0, |acc, &p| {
        *acc += p;
        Some(*acc)
    })
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drops zero parts.
    pub fn to_composition(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Sorts the nonzero parts into a partition.
    pub fn sort_to_partition(&self) -> Partition {
        self.to_composition().sort_to_partition()
    }

    pub fn reverse(&self) -> WeakComposition {
        WeakComposition(self.0.iter().rev().copied().collect())
    }
}

impl TryFrom<WeakComposition> for Composition {
    type Error = Error;

    fn try_from(value: WeakComposition) -> Result<Self> {
        Composition::new(value.0)
    }
}

impl From<Composition> for WeakComposition {
    fn from(value: Composition) -> Self {
        WeakComposition(value.0)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(position) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { position });
        }
        if let Some(position) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                position: position + 1,
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn factorial_product(&self) -> BigUint {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let mut a = 0;
        let mut b = 0;
        (0..n).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        })
    }

    /// Union of the parts of both partitions, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }
}

impl From<Partition> for Composition {
    fn from(value: Partition) -> Self {
        Composition(value.0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// Parses `"1,2,1"`, `"(1,2,1)"` or the empty string into a list of integers.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::parse(tok, "expected a nonnegative integer"))
        })
        .collect()
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        Composition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(WeakComposition)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        Partition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sorting_to_partition() {
        assert_eq!(
            comp(&[1, 2, 1, 3, 2]).sort_to_partition().parts(),
            &[3, 2, 2, 1, 1]
        );
        assert!(Composition::empty().sort_to_partition().is_empty());
        assert_eq!(comp(&[4]).sort_to_partition().parts(), &[4]);
    }

    #[test]
    fn factorials() {
        assert_eq!(
            comp(&[1, 2, 1, 3, 2]).factorial_product(),
            BigUint::from(24u32)
        );
        assert_eq!(
            Composition::empty().factorial_product(),
            BigUint::from(1u32)
        );
        assert_eq!(comp(&[3]).factorial_product(), BigUint::from(6u32));
    }

    #[test]
    fn reversal() {
        assert_eq!(comp(&[1, 2, 1, 3, 2]).reverse(), comp(&[2, 3, 1, 2, 1]));
        assert_eq!(comp(&[2, 2]).reverse(), comp(&[2, 2]));
        assert_eq!(Composition::empty().reverse(), Composition::empty());
    }

    /// Independent oracle: recursively merge or keep each adjacent gap.
    fn brute_coarsenings(parts: &[usize]) -> Vec<Vec<usize>> {
        if parts.len() <= 1 {
            return vec![parts.to_vec()];
        }
        let mut out = Vec::new();
        for rest in brute_coarsenings(&parts[1..]) {
            let mut kept = vec![parts[0]];
            kept.extend(&rest);
            out.push(kept);
            let mut merged = rest.clone();
            merged[0] += parts[0];
            out.push(merged);
        }
        out
    }

    #[test]
    fn coarsening_examples() {
        let c = comp(&[2, 1]).coarsenings();
        assert_eq!(c, vec![comp(&[2, 1]), comp(&[3])]);

        let big = comp(&[1, 2, 1, 3, 2]).coarsenings();
        assert!(big.contains(&comp(&[1, 3, 3, 2])));
        assert_eq!(big.len(), 16);

        let mut got: Vec<_> = comp(&[1, 1, 1]).coarsenings();
        got.sort();
        let mut want: Vec<_> = brute_coarsenings(&[1, 1, 1])
            .into_iter()
            .map(|p| comp(&p))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(want.len(), 4);
        assert!(want.contains(&comp(&[1, 2])) && want.contains(&comp(&[2, 1])));
    }

    #[test]
    fn dominance_examples() {
        assert!(comp(&[3]).dominates(&comp(&[2, 1])));
        assert!(comp(&[2, 1]).dominates(&comp(&[2, 1])));
        assert!(!comp(&[1, 2]).dominates(&comp(&[2, 1])));
    }

    #[test]
    fn zero_parts_rejected() {
        assert_eq!(
            Composition::new(vec![1, 0]),
            Err(Error::ZeroPart { position: 1 })
        );
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("1,x".parse::<Composition>().unwrap_err().is_parse());
        assert_eq!(
            "(0,0,1)".parse::<WeakComposition>().unwrap().parts(),
            &[0, 0, 1]
        );
    }

    #[test]
    fn all_compositions_count() {
        for n in 1..=7 {
            let all = Composition::all_of_size(n);
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.iter().all(|c| c.size() == n));
        }
    }

    proptest! {
        #[test]
        fn reverse_preserves_sorted_parts(parts in prop::collection::vec(1usize..6, 0..8)) {
            let a = Composition::new(parts).unwrap();
            prop_assert_eq!(a.reverse().sort_to_partition(), a.sort_to_partition());
            prop_assert_eq!(a.reverse().reverse(), a);
        }

        #[test]
        fn coarsenings_match_brute_force(parts in prop::collection::vec(1usize..5, 1..7)) {
            let a = Composition::new(parts.clone()).unwrap();
            let mut got = a.coarsenings();
            prop_assert_eq!(got.len(), 1 << (parts.len() - 1));
            prop_assert!(got.iter().all(|b| a.is_refined_by_coarsening(b)));
            got.sort();
            let mut want: Vec<_> = brute_coarsenings(&parts).into_iter().map(|p| Composition::new(p).unwrap()).collect();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }
}
