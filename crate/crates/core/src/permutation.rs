//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set_partition::SetPartition;

/// A bijection of `{1, ..., n}` stored in one-line notation:
/// `images[j - 1]` is the image of `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `j -> n + 1 - j`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `j` (1-based).
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`, i.e. `j -> self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_len(other.len())?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.apply(j)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `j -> n + 1 - self(j)`, the reversal composed after `self`.
    pub fn bar(&self) -> Permutation {
        let n = self.len();
        Permutation {
            images: self.images.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.len()];
        let mut parity = 0;
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            let mut j = start;
            let mut cycle = 0;
            while !visited[j] {
                visited[j] = true;
                j = self.images[j] - 1;
                cycle += 1;
            }
            parity += cycle - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Relabels every element `i` of `pi` to `self(i)`.
    pub fn act(&self, pi: &SetPartition) -> Result<SetPartition> {
        self.check_len(pi.size())?;
        Ok(pi.relabel(|i| self.apply(i)))
    }

    /// True when `self(B) = B` as a set for every block `B` of `pi`.
    pub fn preserves_blocks(&self, pi: &SetPartition) -> Result<bool> {
        self.check_len(pi.size())?;
        Ok(self.preserves_blocks_unchecked(pi))
    }

    pub(crate) fn preserves_blocks_unchecked(&self, pi: &SetPartition) -> bool {
        let owner = pi.block_index_of();
        (1..=self.len()).all(|i| owner[i - 1] == owner[self.apply(i) - 1])
    }

    /// Every permutation of `{1, ..., n}`, in lexicographic order of the
    /// one-line notation.
    pub fn all(n: usize) -> SymmetricGroup {
        SymmetricGroup {
            next: Some((1..=n).collect()),
        }
    }
}

/// Iterator over `S_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation: `"321"` (digits, n ≤ 9) or `"3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::parse(t.trim(), "expected an integer"))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(c.to_string(), "expected a digit"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(images).map_err(|e| Error::parse(s, e.to_string()))
    }
}
