//! Leibniz expansion of a Jacobi–Trudi subscript matrix.
//!
//! A term picks entry `(i, w(i))` from each row `i`, top to bottom. Terms with
//! a negative subscript vanish and are never produced; a zero subscript
//! stands for `h_0 = 1` and is kept in the weak composition.

use crate::composition::WeakComposition;
use crate::diagram::SubscriptMatrix;

/// One surviving term `sgn(w) · h_{w(α)_1} ⋯ h_{w(α)_ℓ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JtTerm {
    pub sign: i64,
    /// `w(i)` for each row `i`, 0-based.
    pub columns: Vec<usize>,
    /// `w(α)`, the subscripts picked in row order.
    pub subscripts: WeakComposition,
}

/// Every `w ∈ S_ℓ` whose picked entries are all nonnegative, in
/// lexicographic order of `w`.
pub fn jt_terms(matrix: &SubscriptMatrix) -> Vec<JtTerm> {
    let l = matrix.dim();
    let mut out = Vec::new();
    let mut used = vec![false; l];
    let mut columns = Vec::with_capacity(l);
    let mut picks = Vec::with_capacity(l);
    descend(matrix, 0, 0, &mut used, &mut columns, &mut picks, &mut out);
    out
}

fn descend(
    m: &SubscriptMatrix,
    row: usize,
    inversions: usize,
    used: &mut [bool],
    columns: &mut Vec<usize>,
    picks: &mut Vec<usize>,
    out: &mut Vec<JtTerm>,
) {
    let l = m.dim();
    if row == l {
        out.push(JtTerm {
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
            columns: columns.clone(),
            subscripts: WeakComposition::new(picks.clone()),
        });
        return;
    }
    for col in 0..l {
        if used[col] {
            continue;
        }
        let entry = m.get(row, col);
        if entry < 0 {
            continue;
        }
        // earlier rows that took a larger column form inversions with this one
        let added = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        columns.push(col);
        picks.push(entry as usize);
        descend(m, row + 1, inversions + added, used, columns, picks, out);
        picks.pop();
        columns.pop();
        used[col] = false;
    }
}
