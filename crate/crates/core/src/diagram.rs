//! Skew diagrams `λ/μ` in English notation.
//!
//! Row `i` (1-based) occupies columns `μ_i + 1 ..= λ_i`. Diagrams are kept in
//! basic form: every row is nonempty and the leftmost occupied column is 1,
//! so two diagrams with the same boxes compare equal.

use std::fmt;
use std::str::FromStr;

use crate::composition::{Composition, Partition, WeakComposition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    /// Builds `λ/μ`, rejecting shapes where `μ ⊄ λ` or some row is empty, and
    /// translates the result left so that column 1 is occupied.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if outer.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        if inner.len() > outer.len() {
            return Err(Error::NotContained {
                row: outer.len() + 1,
            });
        }
        for i in 0..outer.len() {
            match outer.part(i).cmp(&inner.part(i)) {
                std::cmp::Ordering::Less => return Err(Error::NotContained { row: i + 1 }),
                std::cmp::Ordering::Equal => return Err(Error::EmptyRow { row: i + 1 }),
                std::cmp::Ordering::Greater => {}
            }
        }
        let shift = inner.part(outer.len() - 1);
        let lambda = outer.parts().iter().map(|&p| p - shift).collect();
        let mu = inner
            .parts()
            .iter()
            .map(|&p| p - shift)
            .filter(|&p| p > 0)
            .collect();
        Ok(SkewDiagram {
            outer: Partition::from_sorted_unchecked(lambda),
            inner: Partition::from_sorted_unchecked(mu),
        })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(shape: Partition) -> Result<Self> {
        SkewDiagram::new(shape, Partition::empty())
    }

    /// Builds a diagram from per-row column intervals `(start, end)`,
    /// inclusive, top row first. Columns may be any integers.
    pub fn from_rows(rows: &[(i64, i64)]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        for (i, &(s, e)) in rows.iter().enumerate() {
            if e < s {
                return Err(Error::EmptyRow { row: i + 1 });
            }
        }
        let min = rows.iter().map(|r| r.0).min().unwrap();
        let lambda: Vec<usize> = rows.iter().map(|r| (r.1 - min + 1) as usize).collect();
        let mu: Vec<usize> = rows
            .iter()
            .map(|r| (r.0 - min) as usize)
            .filter(|&p| p > 0)
            .collect();
        SkewDiagram::new(
            Partition::new(lambda).map_err(|_| Error::NotContained { row: 1 })?,
            Partition::new(mu).map_err(|_| Error::NotContained { row: 1 })?,
        )
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Inclusive column interval of row `i` (0-based).
    pub fn row(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    /// Columns shared by rows `i` and `i + 1` (0-based).
    fn adjacent_overlap(&self, i: usize) -> i64 {
        self.outer.part(i + 1) as i64 - self.inner.part(i) as i64
    }

    /// Each pair of adjacent rows shares at least one column.
    pub fn is_connected(&self) -> bool {
        (0..self.num_rows() - 1).all(|i| self.adjacent_overlap(i) >= 1)
    }

    /// Each pair of adjacent rows shares exactly one column.
    pub fn is_ribbon(&self) -> bool {
        (0..self.num_rows() - 1).all(|i| self.adjacent_overlap(i) == 1)
    }

    /// The 180° rotation.
    pub fn rotate(&self) -> SkewDiagram {
        let width = self.outer.part(0);
        let l = self.num_rows();
        let lambda = (0..l).map(|i| width - self.inner.part(l - 1 - i)).collect();
        let mu = (0..l)
            .map(|i| width - self.outer.part(l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        SkewDiagram {
            outer: Partition::from_sorted_unchecked(lambda),
            inner: Partition::from_sorted_unchecked(mu),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.rotate()
    }

    /// `α^{(k)}`: entry `i` counts the columns common to rows `i..i+k`.
    pub fn row_overlap_composition(&self, k: usize) -> Result<WeakComposition> {
        let rows = self.num_rows();
        if k == 0 || k > rows {
            return Err(Error::OverlapOutOfRange { k, rows });
        }
        Ok(WeakComposition::new(
            (0..=rows - k)
                .map(|i| {
                    self.outer
                        .part(i + k - 1)
                        .saturating_sub(self.inner.part(i))
                })
                .collect(),
        ))
    }

    /// `λ^{(k)}`: the nonzero parts of `α^{(k)}`, sorted.
    pub fn row_overlap_partition(&self, k: usize) -> Result<Partition> {
        Ok(self.row_overlap_composition(k)?.sort_to_partition())
    }

    /// `α(𝒟)`, the row lengths from top to bottom.
    pub fn row_lengths(&self) -> Composition {
        Composition::new(
            (0..self.num_rows())
                .map(|i| self.outer.part(i) - self.inner.part(i))
                .collect(),
        )
        .expect("rows are nonempty")
    }

    /// The ribbon whose row lengths are `alpha`.
    pub fn ribbon_from_composition(alpha: &Composition) -> Result<SkewDiagram> {
        if alpha.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let parts = alpha.parts();
        let l = parts.len();
        let mut lambda = vec![0; l];
        let mut mu = vec![0; l];
        lambda[l - 1] = parts[l - 1];
        for i in (0..l - 1).rev() {
            mu[i] = lambda[i + 1] - 1;
            lambda[i] = mu[i] + parts[i];
        }
        mu.retain(|&p| p > 0);
        Ok(SkewDiagram {
            outer: Partition::from_sorted_unchecked(lambda),
            inner: Partition::from_sorted_unchecked(mu),
        })
    }

    /// Jacobi–Trudi subscripts `λ_i − μ_j − i + j`.
    pub fn jt_subscripts(&self) -> SubscriptMatrix {
        let l = self.num_rows();
        let mut entries = Vec::with_capacity(l * l);
        for i in 0..l {
            for j in 0..l {
                entries.push(
                    self.outer.part(i) as i64 - self.inner.part(j) as i64 - i as i64 + j as i64,
                );
            }
        }
        SubscriptMatrix { dim: l, entries }
    }

    /// Every connected skew diagram with `n` boxes, each exactly once.
    ///
    /// Rows are stacked top to bottom. The first row is `1..=a`; each next
    /// row ends no later and starts no later than the one above and shares
    /// at least one column with it.
    pub fn enumerate_connected(n: usize) -> Result<Vec<SkewDiagram>> {
        if n == 0 {
            return Err(Error::OutOfRange {
                n,
                min: 1,
                max: usize::MAX,
            });
        }
        fn extend(rows: &mut Vec<(i64, i64)>, remaining: usize, out: &mut Vec<SkewDiagram>) {
            if remaining == 0 {
                out.push(SkewDiagram::from_rows(rows).expect("valid row stack"));
                return;
            }
            let (start, end) = *rows.last().unwrap();
            for new_end in start..=end {
                for len in 1..=remaining as i64 {
                    let new_start = new_end - len + 1;
                    if new_start > start {
                        continue;
                    }
                    rows.push((new_start, new_end));
                    extend(rows, remaining - len as usize, out);
                    rows.pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = Vec::new();
        for first in 1..=n {
            rows.push((1, first as i64));
            extend(&mut rows, n - first, &mut out);
            rows.pop();
        }
        Ok(out)
    }

    /// Rows of `.` (outside) and `#` (box), padded to the width of `λ_1`.
    pub fn render_ascii(&self) -> String {
        let width = self.outer.part(0);
        let mut out = String::new();
        for i in 0..self.num_rows() {
            let (s, e) = self.row(i);
            for c in 1..=width {
                out.push(if c >= s && c <= e { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &Partition| {
            p.parts()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}", join(&self.outer))?;
        if !self.inner.is_empty() {
            write!(f, "/{}", join(&self.inner))?;
        }
        Ok(())
    }
}

impl FromStr for SkewDiagram {
    type Err = Error;

    /// `"5,5,4,4,2/4,3,3,1"`, `"2,1"` or `"2,1/"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pieces = s.trim().splitn(2, '/');
        let outer: Partition = pieces.next().unwrap_or("").parse()?;
        let inner: Partition = match pieces.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        if outer.is_empty() {
            return Err(Error::parse(s, "outer shape is empty"));
        }
        SkewDiagram::new(outer, inner)
    }
}

/// The `ℓ × ℓ` matrix of Jacobi–Trudi subscripts. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubscriptMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SubscriptMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn d(s: &str) -> SkewDiagram {
        s.parse().unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn example() -> SkewDiagram {
        d("5,5,4,4,2/4,3,3,1")
    }

    #[test]
    fn construction() {
        let e = example();
        assert_eq!(e.num_rows(), 5);
        assert_eq!(e.size(), 9);
        assert!(d("2,1").inner().is_empty());
        assert_eq!(
            "2,2/2".parse::<SkewDiagram>(),
            Err(Error::EmptyRow { row: 1 })
        );
        assert_eq!(
            "2,1/3".parse::<SkewDiagram>(),
            Err(Error::NotContained { row: 1 })
        );
        assert_eq!(
            "2/1,1".parse::<SkewDiagram>(),
            Err(Error::NotContained { row: 2 })
        );
        assert_eq!(d("2,1/"), d("2,1"));
        // translation to basic form
        assert_eq!(d("3,2/1,1"), d("2,1"));
        assert!("2,x/1".parse::<SkewDiagram>().unwrap_err().is_parse());
    }

    #[test]
    fn connectivity_and_ribbons() {
        assert!(example().is_connected());
        assert!(d("2,1").is_connected());
        assert!(!d("2,1/1").is_connected());
        assert!(example().is_ribbon());
        assert!(!d("2,2").is_ribbon());
        assert!(d("4").is_ribbon());
    }

    #[test]
    fn rotation() {
        let e = example();
        assert_eq!(e.rotate().row_lengths(), comp(&[2, 3, 1, 2, 1]));
        assert_eq!(e.rotate().rotate(), e);
        assert_eq!(d("2,1").rotate(), d("2,2/1"));
        assert!(d("2,2").is_symmetric());
        assert!(SkewDiagram::ribbon_from_composition(&comp(&[1, 2, 1]))
            .unwrap()
            .is_symmetric());
        assert!(!d("2,1").is_symmetric());
        assert!(d("1").is_symmetric());
    }

    #[test]
    fn overlaps() {
        let e = example();
        let a = |k| e.row_overlap_composition(k).unwrap().parts().to_vec();
        assert_eq!(a(1), vec![1, 2, 1, 3, 2]);
        assert_eq!(a(2), vec![1, 1, 1, 1]);
        // rows 2, 3 and 4 all occupy column 4
        assert_eq!(a(3), vec![0, 1, 0]);
        assert_eq!(a(4), vec![0, 0]);
        assert_eq!(a(5), vec![0]);
        assert_eq!(
            e.row_overlap_partition(1).unwrap().parts(),
            &[3, 2, 2, 1, 1]
        );
        assert_eq!(e.row_overlap_partition(2).unwrap().parts(), &[1, 1, 1, 1]);
        assert_eq!(e.row_overlap_partition(3).unwrap().parts(), &[1]);
        assert!(e.row_overlap_partition(5).unwrap().is_empty());
        assert!(e.row_overlap_composition(0).is_err());
        assert!(e.row_overlap_composition(6).is_err());
    }

    /// Counts common columns by intersecting explicit column sets.
    fn brute_overlap(diag: &SkewDiagram, k: usize) -> Vec<usize> {
        let cols: Vec<BTreeSet<usize>> = (0..diag.num_rows())
            .map(|i| {
                let (s, e) = diag.row(i);
                (s..=e).collect()
            })
            .collect();
        (0..=cols.len() - k)
            .map(|i| {
                cols[i + 1..i + k]
                    .iter()
                    .fold(cols[i].clone(), |acc, c| {
                        acc.intersection(c).copied().collect()
                    })
                    .len()
            })
            .collect()
    }

    #[test]
    fn overlaps_match_set_intersection() {
        for n in 1..=7 {
            for diag in SkewDiagram::enumerate_connected(n).unwrap() {
                for k in 1..=diag.num_rows() {
                    assert_eq!(
                        diag.row_overlap_composition(k).unwrap().parts(),
                        brute_overlap(&diag, k)
                    );
                }
            }
        }
        assert_eq!(brute_overlap(&example(), 3), vec![0, 1, 0]);
    }

    #[test]
    fn row_lengths() {
        assert_eq!(example().row_lengths(), comp(&[1, 2, 1, 3, 2]));
        assert_eq!(d("2,1").row_lengths(), comp(&[2, 1]));
        assert_eq!(d("6").row_lengths(), comp(&[6]));
    }

    #[test]
    fn ribbons_from_compositions() {
        assert_eq!(
            SkewDiagram::ribbon_from_composition(&comp(&[1, 2, 1, 3, 2])).unwrap(),
            example()
        );
        assert_eq!(
            SkewDiagram::ribbon_from_composition(&comp(&[5])).unwrap(),
            d("5")
        );
        assert_eq!(
            SkewDiagram::ribbon_from_composition(&comp(&[2, 1])).unwrap(),
            d("2,1")
        );
        assert_eq!(
            SkewDiagram::ribbon_from_composition(&Composition::empty()),
            Err(Error::EmptyComposition)
        );
        for n in 1..=7 {
            let mut seen = BTreeSet::new();
            for alpha in Composition::all_of_size(n) {
                let r = SkewDiagram::ribbon_from_composition(&alpha).unwrap();
                assert!(r.is_ribbon());
                assert_eq!(r.row_lengths(), alpha);
                assert!(seen.insert(r));
            }
            let ribbons: BTreeSet<_> = SkewDiagram::enumerate_connected(n)
                .unwrap()
                .into_iter()
                .filter(SkewDiagram::is_ribbon)
                .collect();
            assert_eq!(ribbons, seen);
        }
    }

    #[test]
    fn subscripts() {
        assert_eq!(
            d("2,2/1").jt_subscripts().rows(),
            vec![vec![1, 3], vec![0, 2]]
        );
        assert_eq!(
            d("2,1").jt_subscripts().rows(),
            vec![vec![2, 3], vec![0, 1]]
        );
        let m = example().jt_subscripts();
        assert_eq!(m.get(0, 4), 5 + 5 - 1);
        assert_eq!(m.diagonal(), vec![1, 2, 1, 3, 2]);
    }

    /// Independent oracle: every (λ, μ) pair of bounded size, canonicalized.
    fn brute_diagrams(n: usize) -> BTreeSet<SkewDiagram> {
        fn partitions_bounded(max_part: usize, max_len: usize) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            if max_len == 0 {
                return out;
            }
            for first in 1..=max_part {
                for rest in partitions_bounded(first, max_len - 1) {
                    let mut p = vec![first];
                    p.extend(rest);
                    out.push(p);
                }
            }
            out
        }
        let mut found = BTreeSet::new();
        let shapes = partitions_bounded(n, n);
        for lambda in &shapes {
            for mu in &shapes {
                let lam = Partition::new(lambda.clone()).unwrap();
                let m = Partition::new(mu.clone()).unwrap();
                if lam.size() < m.size() || lam.size() - m.size() != n {
                    continue;
                }
                if let Ok(diag) = SkewDiagram::new(lam, m) {
                    found.insert(diag);
                }
            }
        }
        found
    }

    fn brute_connected(n: usize) -> BTreeSet<SkewDiagram> {
        brute_diagrams(n)
            .into_iter()
            .filter(SkewDiagram::is_connected)
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // counts frozen from the brute-force oracle
        let expected = [1usize, 2, 4, 9, 20, 46];
        for n in 1..=6 {
            let list = SkewDiagram::enumerate_connected(n).unwrap();
            let set: BTreeSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len(), "duplicates at n={n}");
            assert!(list.iter().all(|x| x.is_connected() && x.size() == n));
            assert_eq!(set, brute_connected(n));
            assert_eq!(list.len(), expected[n - 1]);
        }
        assert!(SkewDiagram::enumerate_connected(0).is_err());
    }

    #[test]
    fn structural_properties_over_small_diagrams() {
        for n in 1..=6 {
            for diag in brute_diagrams(n) {
                let m = diag.jt_subscripts();
                let l = m.dim();
                for i in 0..l {
                    for j in i + 1..l {
                        for k in 0..l {
                            for q in k + 1..l {
                                assert_eq!(m.get(i, k) + m.get(j, q), m.get(i, q) + m.get(j, k));
                            }
                        }
                    }
                }
                let rot = diag.rotate();
                for k in 1..=l {
                    assert_eq!(
                        rot.row_overlap_composition(k).unwrap(),
                        diag.row_overlap_composition(k).unwrap().reverse()
                    );
                }
                let sub_ok = (0..l.saturating_sub(1)).all(|i| m.get(i + 1, i) >= 0);
                assert_eq!(diag.is_connected(), sub_ok);
                let sub_zero = (0..l.saturating_sub(1)).all(|i| m.get(i + 1, i) == 0);
                assert_eq!(diag.is_ribbon(), sub_zero);
                assert_eq!(
                    m.diagonal(),
                    diag.row_lengths()
                        .parts()
                        .iter()
                        .map(|&p| p as i64)
                        .collect::<Vec<_>>()
                );
                assert_eq!(diag.to_string().parse::<SkewDiagram>().unwrap(), diag);
            }
        }
    }

    #[test]
    fn ascii() {
        assert_eq!(d("2,1").render_ascii(), "##\n#.\n");
        assert_eq!(d("2,2/1").render_ascii(), ".#\n##\n");
    }
}
