//! Set partitions of `[n] = {1, ..., n}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A set partition of `[n]` in canonical form: elements ascending within each
/// block, blocks ordered by least element. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl SetPartition {
    /// Validates and canonicalizes a family of blocks. The union must be
    /// exactly `{1, ..., n}` where `n` is the total number of elements.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[e - 1], true) {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {e} appears twice"
                    )));
                }
            }
        }
        Ok(Self::canonical(blocks, n))
    }

    fn canonical(mut blocks: Vec<Vec<usize>>, n: usize) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { blocks, n }
    }

    /// The set partition of size 0.
    pub fn empty() -> Self {
        SetPartition::default()
    }

    /// `[α]`: consecutive intervals of lengths `α_1, α_2, ...`.
    pub fn from_composition(alpha: &Composition) -> Self {
        let mut blocks = Vec::with_capacity(alpha.len());
        let mut next = 1;
        for &part in alpha.parts() {
            blocks.push((next..next + part).collect());
            next += part;
        }
        SetPartition {
            blocks,
            n: next - 1,
        }
    }

    /// All set partitions of `[n]`, generated from restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == rgs.len() {
                let count = if rgs.is_empty() { 0 } else { max + 1 };
                let mut blocks = vec![Vec::new(); count];
                for (e, &b) in rgs.iter().enumerate() {
                    blocks[b].push(e + 1);
                }
                out.push(SetPartition {
                    blocks,
                    n: rgs.len(),
                });
                return;
            }
            let limit = if i == 0 { 0 } else { max + 1 };
            for b in 0..=limit {
                rgs[i] = b;
                rec(i + 1, max.max(b), rgs, out);
            }
        }
        rec(0, 0, &mut rgs, &mut out);
        out
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `n`, the size of the underlying set.
    pub fn size(&self) -> usize {
        self.n
    }

    /// `π | σ`: blocks of `self`, followed by the blocks of `other` shifted
    /// by `|self|`.
    pub fn slash_product(&self, other: &SetPartition) -> SetPartition {
        let shift = self.n;
        let mut blocks = self.blocks.clone();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|b| b.iter().map(|&e| e + shift).collect()),
        );
        SetPartition {
            blocks,
            n: self.n + other.n,
        }
    }

    /// Block sizes in weakly decreasing order.
    pub fn shape(&self) -> Partition {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(sizes)
    }

    pub fn shape_factorial(&self) -> BigUint {
        self.shape().factorial_product()
    }

    /// True when every block of `self` lies inside some block of `other`,
    /// i.e. `other` is obtained by merging blocks of `self`.
    pub fn merge_leq(&self, other: &SetPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let owner = other.block_index_of();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&e| owner[e - 1] == owner[b[0] - 1])))
    }

    /// If every block is an interval and they appear left to right, returns
    /// the composition `α` with `self = [α]`.
    pub fn as_interval_composition(&self) -> Option<Composition> {
        let mut next = 1;
        let mut parts = Vec::with_capacity(self.len());
        for b in &self.blocks {
            if b[0] != next || b[b.len() - 1] != next + b.len() - 1 {
                return None;
            }
            next += b.len();
            parts.push(b.len());
        }
        Composition::new(parts).ok()
    }

    /// `δ_π`: blocks sorted by decreasing size (ties by increasing least
    /// element), then read left to right with the slashes removed.
    pub fn standard_permutation(&self) -> Permutation {
        let mut order: Vec<&Vec<usize>> = self.blocks.iter().collect();
        order.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Permutation::new(order.into_iter().flatten().copied().collect())
            .expect("blocks cover 1..=n")
    }

    /// Order used when printing expansions: by shape, then structurally.
    pub fn cmp_term_order(&self, other: &SetPartition) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.cmp(other))
    }

    /// `owner[e - 1]` is the index of the block containing `e`.
    pub(crate) fn block_index_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                owner[e - 1] = i;
            }
        }
        owner
    }

    pub(crate) fn relabel(&self, f: impl Fn(usize) -> usize) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| f(e)).collect())
            .collect();
        Self::canonical(blocks, self.n)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// `"1/24/3"` with single-digit elements, or `"1/2,4/3"` with
    /// comma-separated elements. The empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(SetPartition::empty());
        }
        let digit_runs = || -> Result<Vec<Vec<usize>>> {
            s.split('/')
                .map(|blk| {
                    blk.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::parse(blk, "expected digits"))
                        })
                        .collect()
                })
                .collect()
        };
        let comma_lists = || -> Result<Vec<Vec<usize>>> {
            s.split('/')
                .map(|blk| {
                    blk.split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::parse(t.trim(), "expected an integer"))
                        })
                        .collect()
                })
                .collect()
        };
        if !s.contains(',') {
            if let Ok(pi) = digit_runs().and_then(SetPartition::new) {
                return Ok(pi);
            }
        }
        comma_lists()
            .and_then(SetPartition::new)
            .map_err(|e| match e {
                Error::Parse { .. } => e,
                other => Error::parse(s, other.to_string()),
            })
    }
}
