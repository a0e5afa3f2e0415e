//! Finite-variable truncation of `h_π` as a polynomial in noncommuting
//! variables `x_1, ..., x_m`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set_partition::SetPartition;

/// Coefficients of the words of length `n` over `{1, ..., m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCMonomialTruncation {
    variables: usize,
    length: usize,
    coefficients: BTreeMap<Vec<usize>, u64>,
}

impl NCMonomialTruncation {
    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn word_length(&self) -> usize {
        self.length
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.coefficients
    }

    pub fn coefficient(&self, word: &[usize]) -> u64 {
        self.coefficients.get(word).copied().unwrap_or(0)
    }

    /// Product in the free algebra: words concatenate.
    pub fn product(&self, other: &NCMonomialTruncation) -> Result<NCMonomialTruncation> {
        if self.variables != other.variables {
            return Err(Error::SizeMismatch {
                expected: self.variables,
                found: other.variables,
            });
        }
        let mut coefficients = BTreeMap::new();
        for (u, a) in &self.coefficients {
            for (v, b) in &other.coefficients {
                let mut w = u.clone();
                w.extend(v);
                *coefficients.entry(w).or_insert(0) += a * b;
            }
        }
        Ok(NCMonomialTruncation {
            variables: self.variables,
            length: self.length + other.length,
            coefficients,
        })
    }
}

/// `h_π = Σ_ε Σ_(i_1..i_n) x_{i_ε(1)} ⋯ x_{i_ε(n)}` restricted to `m`
/// variables, where `ε` ranges over permutations with `ε(B) = B` for every
/// block `B`, and the tuple is weakly increasing along each block.
pub fn monomial_truncation(pi: &SetPartition, m: usize) -> Result<NCMonomialTruncation> {
    if m == 0 {
        return Err(Error::OutOfRange {
            n: m,
            min: 1,
            max: usize::MAX,
        });
    }
    let n = pi.size();
    let stabilizer = block_stabilizer(pi);
    let tuples = block_monotone_tuples(pi, m);
    let mut coefficients = BTreeMap::new();
    for eps in &stabilizer {
        for tuple in &tuples {
            let word: Vec<usize> = (0..n).map(|p| tuple[eps[p] - 1]).collect();
            *coefficients.entry(word).or_insert(0) += 1;
        }
    }
    Ok(NCMonomialTruncation {
        variables: m,
        length: n,
        coefficients,
    })
}

/// The Young subgroup `∏_B S_B`, each element in one-line form.
fn block_stabilizer(pi: &SetPartition) -> Vec<Vec<usize>> {
    let mut out = vec![(1..=pi.size()).collect::<Vec<_>>()];
    for block in pi.blocks() {
        let mut next = Vec::new();
        for base in &out {
            for arrangement in arrangements(block) {
                let mut eps = base.clone();
                for (&src, &dst) in block.iter().zip(&arrangement) {
                    eps[src - 1] = dst;
                }
                next.push(eps);
            }
        }
        out = next;
    }
    out
}

fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in arrangements(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Tuples `(i_1, ..., i_n)` over `{1..m}` with `i_j ≤ i_k` whenever `j < k`
/// share a block.
fn block_monotone_tuples(pi: &SetPartition, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; pi.size()]];
    for block in pi.blocks() {
        let mut next = Vec::new();
        for base in &out {
            for values in weakly_increasing(block.len(), m) {
                let mut t = base.clone();
                for (&e, &v) in block.iter().zip(&values) {
                    t[e - 1] = v;
                }
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn weakly_increasing(len: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, lo: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(len, v, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 1, m, &mut Vec::new(), &mut out);
    out
}
