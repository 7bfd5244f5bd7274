//! Embeddings of measure spaces and the construction of every extension.
//!
//! `(X, ℬ, μ)` is embedded in `(Y, 𝒞, λ)` when `X ⊆ Y`, `ℬ` is the trace
//! `{C ∩ X : C ∈ 𝒞}` and `λ(C) = μ(C ∩ X)` for every `C ∈ 𝒞`. Every such
//! `Y` is obtained from `X` by attaching, to each ultrafilter of `ℬ` with the
//! countable intersection property, a fiber of points that cannot be
//! measurably separated from it, and pasting a measurable space `Z` in
//! through families `𝒟_B` ([`ExtensionKit`]). [`construct_extension`] builds
//! the space from a kit, [`decompose_extension`] recovers the kit from a
//! space, and [`enumerate_extensions`] lists every extension by brute force
//! so the two can be checked against each other.

mod construct;
mod decompose;
mod enumerate;
mod kit;

pub use construct::{construct_blowup, construct_extension};
pub use decompose::{
    classify_outside_points, decompose_extension, DecompositionRecord, KitForm, OutsidePoint,
    PointRole,
};
pub use enumerate::enumerate_extensions;
pub use kit::{validate_kit, ExtensionKit, KitViolation};

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::ground::{GroundSet, SubsetMask};
use crate::measure::MeasureSpace;
use crate::sigma::SigmaAlgebra;

/// Why an embedding check failed, with a concrete set as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingFailure {
    /// `set ∈ 𝒞` has trace `trace ∉ ℬ`.
    TraceNotInSmall { set: SubsetMask, trace: SubsetMask },
    /// `set ∈ ℬ` is not the trace of any member of `𝒞`.
    SmallNotInTrace { set: SubsetMask },
    /// `λ(set) ≠ μ(set ∩ X)`.
    MeasureMismatch {
        set: SubsetMask,
        big: ExtReal,
        small: ExtReal,
    },
}

/// Result of an embedding check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingVerdict {
    /// The small ground set inside the big one.
    pub x: SubsetMask,
    pub failure: Option<EmbeddingFailure>,
}

impl EmbeddingVerdict {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    /// The witness set as labels, with the ground set it lives in
    /// (`"big"` or `"small"`) and a short explanation.
    pub fn witness(&self, small: &GroundSet, big: &GroundSet) -> Option<(Vec<String>, &'static str, String)> {
        self.failure.as_ref().map(|f| match f {
            EmbeddingFailure::TraceNotInSmall { set, trace } => (
                big.labels_of(*set),
                "big",
                format!(
                    "its trace {} on the small space is not measurable there",
                    small.render(*trace)
                ),
            ),
            EmbeddingFailure::SmallNotInTrace { set } => (
                small.labels_of(*set),
                "small",
                "measurable in the small space but not the trace of any set of the big space".into(),
            ),
            EmbeddingFailure::MeasureMismatch { set, big: b, small: s } => (
                big.labels_of(*set),
                "big",
                format!("big measure {b} differs from small measure {s} of its trace"),
            ),
        })
    }
}

/// Whether `ℬ = {C ∩ X : C ∈ 𝒞}`. The small points must all occur in the
/// big ground set.
pub fn check_measurable_embedding(small: &SigmaAlgebra, big: &SigmaAlgebra) -> Result<EmbeddingVerdict> {
    let (sg, bg) = (small.ground(), big.ground());
    let x = bg.locate(sg)?;
    // masks over `sg`, whichever order the labels are declared in
    let to_small = |c: SubsetMask| -> SubsetMask {
        sg.translate(&bg.subspace(x), bg.restrict(x, c))
            .expect("subspace labels belong to the small ground set")
    };
    let trace = big.trace(x)?.relabel(sg)?;
    let failure = if &trace == small {
        None
    } else if let Some(&atom) = big
        .atoms()
        .iter()
        .find(|&&a| !small.contains(to_small(a)))
    {
        Some(EmbeddingFailure::TraceNotInSmall {
            set: atom,
            trace: to_small(atom),
        })
    } else {
        let &set = small
            .atoms()
            .iter()
            .find(|&&b| !trace.contains(b))
            .ok_or_else(|| Error::Invariant("distinct algebras with equal atoms".into()))?;
        Some(EmbeddingFailure::SmallNotInTrace { set })
    };
    Ok(EmbeddingVerdict { x, failure })
}

/// Whether `small` is embedded in `big` as a measure space: the measurable
/// embedding holds and `λ(C) = μ(C ∩ X)` for every `C ∈ 𝒞`, checked over
/// the whole of `𝒞`.
pub fn check_measure_embedding(small: &MeasureSpace, big: &MeasureSpace) -> Result<EmbeddingVerdict> {
    let verdict = check_measurable_embedding(small.algebra(), big.algebra())?;
    if !verdict.holds() {
        return Ok(verdict);
    }
    let (sg, bg) = (small.ground(), big.ground());
    let x = verdict.x;
    let sub = bg.subspace(x);
    for c in big.algebra().members() {
        let trace = sg.translate(&sub, bg.restrict(x, c))?;
        let lambda = big.measure_of(c)?;
        let mu = small.measure_of(trace)?;
        if lambda != mu {
            return Ok(EmbeddingVerdict {
                x,
                failure: Some(EmbeddingFailure::MeasureMismatch {
                    set: c,
                    big: lambda,
                    small: mu,
                }),
            });
        }
    }
    Ok(verdict)
}

/// For a measurable embedding, whether "`small` is embedded in `big`" agrees
/// with "`X` is thick in `big` and `μ` is the measure induced on the trace".
///
/// The right-hand side is computed independently: thickness through the
/// inner measure of `Y ∖ X`, then the induced measure `ν(C ∩ X) = λ(C)`
/// (well defined exactly when `X` is thick) compared with `μ` atom by atom.
pub fn check_thickness_equivalence(small: &MeasureSpace, big: &MeasureSpace) -> Result<bool> {
    let verdict = check_measurable_embedding(small.algebra(), big.algebra())?;
    if !verdict.holds() {
        return Err(Error::NotEmbedded("the σ-algebras do not embed".into()));
    }
    let embedded = check_measure_embedding(small, big)?.holds();

    let (sg, bg) = (small.ground(), big.ground());
    let x = verdict.x;
    let sub = bg.subspace(x);
    let thick = big.is_thick(x)?;
    let mut induced = thick;
    if thick {
        // ν on ℬ: every C with the same trace must carry the same λ
        let mut nu: Vec<Option<ExtReal>> = vec![None; small.algebra().member_count()];
        let index_of = |b: SubsetMask| -> usize {
            small
                .algebra()
                .atoms()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.is_subset_of(b))
                .fold(0usize, |acc, (i, _)| acc | (1 << i))
        };
        for c in big.algebra().members() {
            let b = sg.translate(&sub, bg.restrict(x, c))?;
            let slot = &mut nu[index_of(b)];
            let lambda = big.measure_of(c)?;
            match slot {
                Some(prev) if *prev != lambda => induced = false,
                Some(_) => {}
                None => *slot = Some(lambda),
            }
        }
        if induced {
            induced = small.algebra().atoms().iter().enumerate().all(|(i, &a)| {
                nu[index_of(a)].as_ref() == Some(small.atom_value(i))
            });
        }
    }
    Ok(embedded == induced)
}
