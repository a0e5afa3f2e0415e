//! Commutative symmetric functions in the complete homogeneous basis.

use num_traits::One;

use crate::composition::{Composition, Partition};
use crate::determinant::jt_terms;
use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::expansion::Expansion;
use crate::rational::{integer, Rational};

/// `Σ c_λ h_λ`.
pub type SymExpansion = Expansion<Partition>;

pub fn h(lambda: Partition) -> SymExpansion {
    SymExpansion::basis(lambda)
}

/// `s_{λ/μ} = det JT(λ/μ)`, expanded over `h_λ`.
pub fn skew_schur(diagram: &SkewDiagram) -> SymExpansion {
    let mut out = SymExpansion::zero();
    for term in jt_terms(&diagram.jt_subscripts()) {
        out.add_term(term.subscripts.sort_to_partition(), integer(term.sign));
    }
    out
}

/// Ribbon Schur function `r_α = (−1)^{ℓ(α)} Σ_{β ≽ α} (−1)^{ℓ(β)} h_β`.
pub fn ribbon_schur(alpha: &Composition) -> Result<SymExpansion> {
    if alpha.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut out = SymExpansion::zero();
    for beta in alpha.coarsenings() {
        let sign = if (alpha.len() + beta.len()).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(beta.sort_to_partition(), sign);
    }
    Ok(out)
}

/// Same `k`-row overlap partitions for every `k`; a diagram with fewer rows
/// contributes the empty partition for the missing `k`.
pub fn overlap_necessary(d: &SkewDiagram, t: &SkewDiagram) -> bool {
    let rows = d.num_rows().max(t.num_rows());
    let overlap = |x: &SkewDiagram, k: usize| {
        x.row_overlap_partition(k)
            .unwrap_or_else(|_| Partition::empty())
    };
    (1..=rows).all(|k| overlap(d, k) == overlap(t, k))
}
