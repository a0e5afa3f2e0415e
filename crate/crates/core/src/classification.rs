//! When are two skew Schur functions in noncommuting variables equal?
//!
//! For connected `𝒟 ≠ 𝒯`, `s_(δ,𝒟) = s_(τ,𝒯)` exactly when `𝒟` is a
//! nonsymmetric ribbon, `𝒯 = 𝒟*`, and `j ↦ n + 1 − τ⁻¹δ(j)` maps every block
//! of `[α(𝒟)]` onto itself. This module states that criterion as a
//! predicate, decides equality directly by comparing expansions, and checks
//! the two against each other over every pair of small diagrams.

use std::fmt;

use rayon::prelude::*;

use crate::determinant::jt_terms;
use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::ncsym::{source_skew_schur, NCExpansion};
use crate::permutation::Permutation;
use crate::set_partition::SetPartition;
use crate::sym::overlap_necessary;

/// Default upper bound on `n` accepted by the exhaustive verifier.
pub const DEFAULT_MAX_N: usize = 6;
/// Upper bound on `n` even when the default cap is lifted.
pub const HARD_MAX_N: usize = 8;

/// A pair `(δ, 𝒟)` naming the function `s_(δ,𝒟)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDiagram {
    perm: Permutation,
    diagram: SkewDiagram,
}

impl LabeledDiagram {
    pub fn new(perm: Permutation, diagram: SkewDiagram) -> Result<Self> {
        if perm.len() != diagram.size() {
            return Err(Error::SizeMismatch {
                expected: diagram.size(),
                found: perm.len(),
            });
        }
        if !diagram.is_connected() {
            return Err(Error::Disconnected(diagram.to_string()));
        }
        Ok(LabeledDiagram { perm, diagram })
    }

    /// `(id, 𝒟)`.
    pub fn source(diagram: SkewDiagram) -> Result<Self> {
        LabeledDiagram::new(Permutation::identity(diagram.size()), diagram)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn size(&self) -> usize {
        self.diagram.size()
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.perm, self.diagram)
    }
}

/// Outcome of the criterion for two distinct diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremVerdict {
    Equal,
    /// Condition (1): the first diagram is not a nonsymmetric ribbon.
    NotNonsymmetricRibbon,
    /// Condition (2): the second diagram is not the rotation of the first.
    NotRotation,
    /// Condition (3): the barred coset permutation moves a block of `[α]`.
    BlocksNotPreserved,
}

impl TheoremVerdict {
    pub fn is_equal(self) -> bool {
        self == TheoremVerdict::Equal
    }

    /// Number of the first failing condition.
    pub fn failed_condition(self) -> Option<u8> {
        match self {
            TheoremVerdict::Equal => None,
            TheoremVerdict::NotNonsymmetricRibbon => Some(1),
            TheoremVerdict::NotRotation => Some(2),
            TheoremVerdict::BlocksNotPreserved => Some(3),
        }
    }
}

fn check_pair(a: &LabeledDiagram, b: &LabeledDiagram) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            expected: a.size(),
            found: b.size(),
        });
    }
    for x in [a, b] {
        if !x.diagram.is_connected() {
            return Err(Error::Disconnected(x.diagram.to_string()));
        }
    }
    Ok(())
}

/// `τ⁻¹δ` for `a = (δ, 𝒟)`, `b = (τ, 𝒯)`.
fn coset(a: &LabeledDiagram, b: &LabeledDiagram) -> Permutation {
    b.perm.inverse().compose(&a.perm).expect("sizes checked")
}

fn is_nonsymmetric_ribbon(d: &SkewDiagram) -> bool {
    d.is_ribbon() && !d.is_symmetric()
}

/// Evaluates the three conditions in order, reporting the first failure.
pub fn theorem_verdict(a: &LabeledDiagram, b: &LabeledDiagram) -> Result<TheoremVerdict> {
    check_pair(a, b)?;
    if a.diagram == b.diagram {
        return Err(Error::SameDiagram(a.diagram.to_string()));
    }
    if !is_nonsymmetric_ribbon(&a.diagram) {
        return Ok(TheoremVerdict::NotNonsymmetricRibbon);
    }
    if b.diagram != a.diagram.rotate() {
        return Ok(TheoremVerdict::NotRotation);
    }
    let blocks = SetPartition::from_composition(&a.diagram.row_lengths());
    if coset(a, b).bar().preserves_blocks_unchecked(&blocks) {
        Ok(TheoremVerdict::Equal)
    } else {
        Ok(TheoremVerdict::BlocksNotPreserved)
    }
}

pub fn theorem_predicate(a: &LabeledDiagram, b: &LabeledDiagram) -> Result<bool> {
    theorem_verdict(a, b).map(TheoremVerdict::is_equal)
}

/// `σ ∘ source == target`, comparing term maps directly. `σ` permutes keys
/// bijectively, so equal term counts plus termwise agreement is equality.
pub(crate) fn maps_onto(sigma: &Permutation, source: &NCExpansion, target: &NCExpansion) -> bool {
    if source.len() != target.len() {
        return false;
    }
    source.terms().iter().all(|(key, c)| {
        let moved = key.relabel(|i| sigma.apply(i));
        target.terms().get(&moved) == Some(c)
    })
}

/// Decides `s_(δ,𝒟) = s_(τ,𝒯)` by checking `τ⁻¹δ ∘ s_[𝒟] = s_[𝒯]` exactly.
pub fn equal_oracle(a: &LabeledDiagram, b: &LabeledDiagram) -> Result<bool> {
    check_pair(a, b)?;
    let sigma = coset(a, b);
    Ok(maps_onto(
        &sigma,
        &source_skew_schur(&a.diagram),
        &source_skew_schur(&b.diagram),
    ))
}

/// Result of comparing `s_(σ,𝒟)` with `s_[𝒟]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SameDiagramCheck {
    /// `s_(σ,𝒟) = s_[𝒟]`, decided by expansion comparison.
    pub equal: bool,
    /// `σ` maps every block of `[w(α)]` onto itself, for every `w` whose
    /// determinant term has no negative subscript.
    pub preserves_term_blocks: bool,
}

pub fn equal_same_diagram(sigma: &Permutation, diagram: &SkewDiagram) -> Result<SameDiagramCheck> {
    if sigma.len() != diagram.size() {
        return Err(Error::SizeMismatch {
            expected: diagram.size(),
            found: sigma.len(),
        });
    }
    if !diagram.is_connected() {
        return Err(Error::Disconnected(diagram.to_string()));
    }
    let source = source_skew_schur(diagram);
    let keys = term_keys(diagram);
    Ok(same_diagram_check(sigma, &source, &keys))
}

/// Interval set partitions `[w(α)]` of every surviving determinant term.
fn term_keys(diagram: &SkewDiagram) -> Vec<SetPartition> {
    let mut keys: Vec<SetPartition> = jt_terms(&diagram.jt_subscripts())
        .into_iter()
        .map(|t| SetPartition::from_composition(&t.subscripts.to_composition()))
        .collect();
    keys.sort();
    keys.dedup();
    keys
}

fn same_diagram_check(
    sigma: &Permutation,
    source: &NCExpansion,
    keys: &[SetPartition],
) -> SameDiagramCheck {
    SameDiagramCheck {
        equal: maps_onto(sigma, source, source),
        preserves_term_blocks: keys.iter().all(|k| sigma.preserves_blocks_unchecked(k)),
    }
}

/// Number of `σ ∈ S_n` with `s_(σ,𝒟) = s_[𝒟*]`, found by brute force.
pub fn count_equivalent(diagram: &SkewDiagram) -> Result<u64> {
    if !diagram.is_connected() || !is_nonsymmetric_ribbon(diagram) {
        return Err(Error::NotNonsymmetricRibbon(diagram.to_string()));
    }
    let source = source_skew_schur(diagram);
    let target = source_skew_schur(&diagram.rotate());
    Ok(Permutation::all(diagram.size())
        .filter(|sigma| maps_onto(sigma, &source, &target))
        .count() as u64)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Largest accepted `n`, at most [`HARD_MAX_N`].
    pub max_n: usize,
    /// Re-run the distinct-diagram comparison skipping pairs whose overlap
    /// partitions differ, and record how many equalities it finds.
    pub cross_check_pruning: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: None,
            max_n: DEFAULT_MAX_N,
            cross_check_pruning: true,
        }
    }
}

/// A `(σ, 𝒟)` vs `(id, 𝒯)` check where the predicate and oracle differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub pair_index: usize,
    pub diagram: SkewDiagram,
    pub target: SkewDiagram,
    pub sigma: Permutation,
    pub predicate: bool,
    pub oracle: bool,
}

impl Disagreement {
    /// `n pair_index sigma verdict_predicate verdict_oracle`
    pub fn machine_line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.diagram.size(),
            self.pair_index,
            self.sigma,
            self.predicate,
            self.oracle
        )
    }
}

/// A same-diagram observation where `equal` and `preserves_term_blocks`
/// differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameDiagramFlag {
    pub diagram: SkewDiagram,
    pub sigma: Permutation,
    pub check: SameDiagramCheck,
}

/// An oracle equality between distinct diagrams whose overlap partitions
/// differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapViolation {
    pub pair_index: usize,
    pub diagram: SkewDiagram,
    pub target: SkewDiagram,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub n: usize,
    pub diagram_count: usize,
    /// Ordered pairs of distinct diagrams.
    pub diagram_pair_count: usize,
    /// `σ` values tested across all distinct pairs.
    pub coset_checks: u64,
    pub agreements: u64,
    pub disagreements: Vec<Disagreement>,
    /// Distinct-pair checks where the oracle reported equality.
    pub oracle_equalities: u64,
    pub overlap_violations: Vec<OverlapViolation>,
    /// Oracle equalities found by the pruned re-run, when enabled.
    pub pruned_oracle_equalities: Option<u64>,
    pub same_diagram_checks: u64,
    pub same_diagram_equalities: u64,
    /// Block condition held but the expansions differ.
    pub sufficiency_violations: Vec<SameDiagramFlag>,
    /// Expansions agree although the block condition fails. Recorded, not
    /// counted against the run.
    pub necessity_gaps: Vec<SameDiagramFlag>,
}

impl VerificationReport {
    pub fn pruning_consistent(&self) -> bool {
        self.pruned_oracle_equalities
            .is_none_or(|p| p == self.oracle_equalities)
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
            && self.sufficiency_violations.is_empty()
            && self.overlap_violations.is_empty()
            && self.pruning_consistent()
            && self.agreements + self.disagreements.len() as u64 == self.coset_checks
    }

    fn absorb(&mut self, other: PartialReport) {
        self.coset_checks += other.coset_checks;
        self.agreements += other.agreements;
        self.oracle_equalities += other.oracle_equalities;
        self.disagreements.extend(other.disagreements);
        self.overlap_violations.extend(other.overlap_violations);
    }

    /// Human-readable multi-line summary.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let mut line = |t: String| {
            s.push_str(&t);
            s.push('\n');
        };
        line(format!("n = {}", self.n));
        line(format!("connected diagrams: {}", self.diagram_count));
        line(format!(
            "distinct ordered pairs: {}",
            self.diagram_pair_count
        ));
        line(format!("coset checks: {}", self.coset_checks));
        line(format!("agreements: {}", self.agreements));
        line(format!("disagreements: {}", self.disagreements.len()));
        line(format!(
            "equalities between distinct diagrams: {}",
            self.oracle_equalities
        ));
        if let Some(p) = self.pruned_oracle_equalities {
            line(format!("equalities found with overlap pruning: {p}"));
        }
        line(format!(
            "overlap-condition violations: {}",
            self.overlap_violations.len()
        ));
        line(format!(
            "same-diagram checks: {} ({} equal)",
            self.same_diagram_checks, self.same_diagram_equalities
        ));
        line(format!(
            "block-condition sufficiency violations: {}",
            self.sufficiency_violations.len()
        ));
        line(format!(
            "block-condition necessity gaps: {}",
            self.necessity_gaps.len()
        ));
        line(format!(
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        s
    }
}

#[derive(Default)]
struct PartialReport {
    coset_checks: u64,
    agreements: u64,
    oracle_equalities: u64,
    disagreements: Vec<Disagreement>,
    overlap_violations: Vec<OverlapViolation>,
}

struct Prepared {
    diagram: SkewDiagram,
    rotated: SkewDiagram,
    nonsymmetric_ribbon: bool,
    blocks: SetPartition,
    source: NCExpansion,
    term_keys: Vec<SetPartition>,
}

pub fn verify_exhaustive(n: usize) -> Result<VerificationReport> {
    verify_exhaustive_with(n, &VerifyOptions::default())
}

/// For every ordered pair of distinct connected diagrams `(𝒟, 𝒯)` with `n`
/// boxes and every `σ ∈ S_n`, compares the predicate on `(σ,𝒟), (id,𝒯)`
/// with the oracle. Also runs every `σ` against `𝒟` itself.
pub fn verify_exhaustive_with(n: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    let max = options.max_n.min(HARD_MAX_N);
    if n == 0 || n > max {
        return Err(Error::OutOfRange { n, min: 1, max });
    }
    match options.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .expect("thread pool");
            pool.install(|| run(n, options))
        }
        None => run(n, options),
    }
}

fn run(n: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    let diagrams = SkewDiagram::enumerate_connected(n)?;
    let prepared: Vec<Prepared> = diagrams
        .into_par_iter()
        .map(|diagram| Prepared {
            rotated: diagram.rotate(),
            nonsymmetric_ribbon: is_nonsymmetric_ribbon(&diagram),
            blocks: SetPartition::from_composition(&diagram.row_lengths()),
            source: source_skew_schur(&diagram),
            term_keys: term_keys(&diagram),
            diagram,
        })
        .collect();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let count = prepared.len();
    let pairs: Vec<(usize, usize, usize)> = (0..count)
        .flat_map(|i| (0..count).filter(move |&j| j != i).map(move |j| (i, j)))
        .enumerate()
        .map(|(idx, (i, j))| (idx, i, j))
        .collect();

    let partials: Vec<PartialReport> = pairs
        .par_iter()
        .map(|&(idx, i, j)| check_distinct_pair(idx, &prepared[i], &prepared[j], &perms))
        .collect();

    let mut report = VerificationReport {
        n,
        diagram_count: count,
        diagram_pair_count: pairs.len(),
        ..Default::default()
    };
    for p in partials {
        report.absorb(p);
    }

    if options.cross_check_pruning {
        let pruned: u64 = pairs
            .par_iter()
            .filter(|&&(_, i, j)| overlap_necessary(&prepared[i].diagram, &prepared[j].diagram))
            .map(|&(_, i, j)| {
                perms
                    .iter()
                    .filter(|s| maps_onto(s, &prepared[i].source, &prepared[j].source))
                    .count() as u64
            })
            .sum();
        report.pruned_oracle_equalities = Some(pruned);
    }

    let same: Vec<(u64, Vec<SameDiagramFlag>, Vec<SameDiagramFlag>)> = prepared
        .par_iter()
        .map(|p| {
            let mut equalities = 0;
            let mut violations = Vec::new();
            let mut gaps = Vec::new();
            for sigma in &perms {
                let check = same_diagram_check(sigma, &p.source, &p.term_keys);
                if check.equal {
                    equalities += 1;
                }
                let flag = || SameDiagramFlag {
                    diagram: p.diagram.clone(),
                    sigma: sigma.clone(),
                    check,
                };
                match (check.preserves_term_blocks, check.equal) {
                    (true, false) => violations.push(flag()),
                    (false, true) => gaps.push(flag()),
                    _ => {}
                }
            }
            (equalities, violations, gaps)
        })
        .collect();
    for (equalities, violations, gaps) in same {
        report.same_diagram_checks += perms.len() as u64;
        report.same_diagram_equalities += equalities;
        report.sufficiency_violations.extend(violations);
        report.necessity_gaps.extend(gaps);
    }
    Ok(report)
}

fn check_distinct_pair(
    pair_index: usize,
    d: &Prepared,
    t: &Prepared,
    perms: &[Permutation],
) -> PartialReport {
    let mut out = PartialReport::default();
    // conditions (1) and (2) do not depend on σ
    let shape_ok = d.nonsymmetric_ribbon && t.diagram == d.rotated;
    let overlap_ok = overlap_necessary(&d.diagram, &t.diagram);
    let mut overlap_flagged = false;
    for sigma in perms {
        let predicate = shape_ok && sigma.bar().preserves_blocks_unchecked(&d.blocks);
        let oracle = maps_onto(sigma, &d.source, &t.source);
        out.coset_checks += 1;
        if oracle {
            out.oracle_equalities += 1;
            if !overlap_ok && !overlap_flagged {
                overlap_flagged = true;
                out.overlap_violations.push(OverlapViolation {
                    pair_index,
                    diagram: d.diagram.clone(),
                    target: t.diagram.clone(),
                });
            }
        }
        if predicate == oracle {
            out.agreements += 1;
        } else {
            out.disagreements.push(Disagreement {
                pair_index,
                diagram: d.diagram.clone(),
                target: t.diagram.clone(),
                sigma: sigma.clone(),
                predicate,
                oracle,
            });
        }
    }
    out
}
