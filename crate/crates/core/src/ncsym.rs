//! Symmetric functions in noncommuting variables, in the basis `h_π`.
//!
//! Products follow `h_π h_σ = h_{π|σ}` and a permutation `δ ∈ S_n` acts on
//! degree-`n` elements by relabelling every key, `δ ∘ h_π = h_{δπ}`.

use num_traits::One;

use crate::composition::{Composition, Partition};
use crate::determinant::jt_terms;
use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::expansion::Expansion;
use crate::permutation::Permutation;
use crate::rational::{from_biguint, integer, inverse_factorial, Rational};
use crate::set_partition::SetPartition;
use crate::sym::SymExpansion;

/// `Σ c_π h_π`.
pub type NCExpansion = Expansion<SetPartition>;

pub fn h_basis(pi: SetPartition) -> NCExpansion {
    NCExpansion::basis(pi)
}

pub fn nc_mul(a: &NCExpansion, b: &NCExpansion) -> NCExpansion {
    a.mul(b)
}

/// `δ ∘ E`. Every key of `E` must have size `|δ|`.
pub fn act_nc(delta: &Permutation, e: &NCExpansion) -> Result<NCExpansion> {
    if let Some(found) = e
        .terms()
        .keys()
        .map(SetPartition::size)
        .find(|&s| s != delta.len())
    {
        return Err(Error::SizeMismatch {
            expected: delta.len(),
            found,
        });
    }
    Ok(act_unchecked(delta, e))
}

pub(crate) fn act_unchecked(delta: &Permutation, e: &NCExpansion) -> NCExpansion {
    e.map_keys(|k| k.relabel(|i| delta.apply(i)))
}

/// Source skew Schur function `s_[𝒟]`: the noncommutative determinant of the
/// matrix with entries `h_[𝒜_ij] / 𝒜_ij!`, multiplied out top row first.
pub fn source_skew_schur(diagram: &SkewDiagram) -> NCExpansion {
    let mut out = NCExpansion::zero();
    for term in jt_terms(&diagram.jt_subscripts()) {
        // ∏ 1/w(α)_i!, with 0! = 1 for the h_∅ entries
        let coefficient = term
            .subscripts
            .parts()
            .iter()
            .fold(integer(term.sign), |acc, &p| acc * inverse_factorial(p));
        let key = SetPartition::from_composition(&term.subscripts.to_composition());
        out.add_term(key, coefficient);
    }
    out
}

/// `s_(δ,𝒟) = δ ∘ s_[𝒟]`.
pub fn skew_schur_nc(delta: &Permutation, diagram: &SkewDiagram) -> Result<NCExpansion> {
    if delta.len() != diagram.size() {
        return Err(Error::SizeMismatch {
            expected: diagram.size(),
            found: delta.len(),
        });
    }
    Ok(act_unchecked(delta, &source_skew_schur(diagram)))
}

/// `δ_π`, see [`SetPartition::standard_permutation`].
pub fn delta_of(pi: &SetPartition) -> Permutation {
    pi.standard_permutation()
}

/// Standard Schur function `s_π = δ_π ∘ s_[λ(π)]`.
pub fn schur_nc(pi: &SetPartition) -> NCExpansion {
    if pi.is_empty() {
        return NCExpansion::one();
    }
    let shape = SkewDiagram::straight(pi.shape()).expect("nonempty shape");
    act_unchecked(&delta_of(pi), &source_skew_schur(&shape))
}

/// `r_[α] = (−1)^{ℓ(α)} Σ_{β ≽ α} (−1)^{ℓ(β)} h_[β] / β!`.
pub fn ribbon_schur_nc(alpha: &Composition) -> Result<NCExpansion> {
    if alpha.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut out = NCExpansion::zero();
    for beta in alpha.coarsenings() {
        let mut c = Rational::one() / from_biguint(beta.factorial_product());
        if (alpha.len() + beta.len()) % 2 == 1 {
            c = -c;
        }
        out.add_term(SetPartition::from_composition(&beta), c);
    }
    Ok(out)
}

/// Lets the variables commute: `h_π ↦ λ(π)! h_{λ(π)}`.
pub fn rho(e: &NCExpansion) -> SymExpansion {
    let mut out = SymExpansion::zero();
    for (pi, c) in e.terms() {
        let shape: Partition = pi.shape();
        let weight = from_biguint(shape.factorial_product());
        out.add_term(shape, c * weight);
    }
    out
}
