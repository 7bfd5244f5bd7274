use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SubsetMask, MAX_POINTS};
use crate::measure::MeasureSpace;
use crate::sigma::SigmaAlgebra;

/// The data that generates an extension of `base`.
///
/// * `pasted` is the measurable space `(Z, 𝒟)`.
/// * `dfamily[B]` is `𝒟_B`, keyed by the mask of `B ∈ ℬ` over the base ground
///   set, holding masks over `Z`.
/// * `fibers[K]` is the fiber attached to the ultrafilter of `ℬ` with kernel
///   `K`. On a finite space every ultrafilter is principal, so `K` is an atom
///   of `ℬ`; when `ℬ` separates points, `K = {u}` and the fiber is the
///   blow-up `T_u` of the point `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionKit {
    pub base: MeasureSpace,
    pub pasted: SigmaAlgebra,
    pub dfamily: BTreeMap<SubsetMask, BTreeSet<SubsetMask>>,
    pub fibers: BTreeMap<SubsetMask, Vec<String>>,
}

impl ExtensionKit {
    /// No fibers, nothing pasted: constructs `base` itself.
    pub fn identity(base: MeasureSpace) -> Self {
        let dfamily = base
            .algebra()
            .members()
            .map(|b| (b, BTreeSet::from([SubsetMask::EMPTY])))
            .collect();
        ExtensionKit {
            base,
            pasted: SigmaAlgebra::trivial(GroundSet::empty()),
            dfamily,
            fibers: BTreeMap::new(),
        }
    }

    /// Pastes `pasted` with `𝒟_B = 𝒟` for every `B`.
    pub fn with_full_dfamily(base: MeasureSpace, pasted: SigmaAlgebra) -> Self {
        let all: BTreeSet<SubsetMask> = pasted.members().collect();
        let dfamily = base.algebra().members().map(|b| (b, all.clone())).collect();
        ExtensionKit {
            base,
            pasted,
            dfamily,
            fibers: BTreeMap::new(),
        }
    }

    /// A pasted space whose labels are namespaced as `z:<name>`.
    pub fn namespaced_pasted(names: &[&str], atoms: &[&[&str]]) -> Result<SigmaAlgebra> {
        let ground = GroundSet::new(names.iter().map(|n| format!("z:{n}")))?;
        let atoms = atoms
            .iter()
            .map(|a| {
                let labels: Vec<String> = a.iter().map(|n| format!("z:{n}")).collect();
                ground.mask_of(&labels)
            })
            .collect::<Result<Vec<_>>>()?;
        SigmaAlgebra::from_atoms(ground, atoms)
    }

    /// Attaches `size` fresh points `<u>#1 .. <u>#size` to the atom
    /// `kernel`, where `u` is its lowest-ordered point.
    pub fn add_fiber_of_size(&mut self, kernel: SubsetMask, size: usize) -> Result<()> {
        let g = self.base.ground();
        g.check(kernel)?;
        let u = kernel
            .lowest()
            .map(|i| g.label(i).to_string())
            .ok_or(Error::GroundMismatch)?;
        let labels = (1..=size).map(|k| format!("{u}#{k}")).collect();
        self.fibers.insert(kernel, labels);
        Ok(())
    }

    /// Fiber keys in the canonical atom order of the base algebra.
    pub(crate) fn ordered_fibers(&self) -> Vec<(SubsetMask, &[String])> {
        let atoms = self.base.algebra().atoms();
        let mut out: Vec<_> = self
            .fibers
            .iter()
            .map(|(&k, v)| (k, v.as_slice()))
            .collect();
        out.sort_by_key(|(k, _)| (atoms.iter().position(|a| a == k), k.bits()));
        out
    }

    /// Labels of `Y = X ∪ fibers ∪ Z`, in that order.
    pub fn extension_labels(&self) -> Vec<String> {
        let mut labels = self.base.ground().labels().to_vec();
        for (_, fiber) in self.ordered_fibers() {
            labels.extend(fiber.iter().cloned());
        }
        labels.extend(self.pasted.ground().labels().iter().cloned());
        labels
    }
}

/// One way a kit can be invalid. Sets are given as label lists: `set` over
/// the base, `member` over the pasted space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KitViolation {
    /// The same label occurs twice among `X`, the fibers and `Z`.
    LabelCollision { label: String },
    InvalidLabel { label: String, reason: String },
    TooManyPoints { found: usize, max: usize },
    EmptyFiber { kernel: Vec<String> },
    /// Fiber keys must be kernels of ultrafilters of `ℬ`, i.e. atoms.
    FiberKeyNotAtom { kernel: Vec<String> },
    FamilyKeyNotMeasurable { set: Vec<String> },
    /// `𝒟_B` is missing or empty.
    MissingFamily { set: Vec<String> },
    /// A member of `𝒟_B` is not in `𝒟`.
    NotInPasted { set: Vec<String>, member: Vec<String> },
    /// Condition (1): `∅ ∈ 𝒟_∅`.
    EmptyMissing,
    /// Condition (2): `Z ∖ D ∈ 𝒟_{X∖B}` for `D ∈ 𝒟_B`.
    ComplementMissing { set: Vec<String>, member: Vec<String> },
    /// Condition (3): `D₁ ∪ D₂ ∈ 𝒟_{B₁∪B₂}`.
    UnionMissing {
        left_set: Vec<String>,
        left_member: Vec<String>,
        right_set: Vec<String>,
        right_member: Vec<String>,
    },
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

impl fmt::Display for KitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use KitViolation::*;
        match self {
            LabelCollision { label } => write!(f, "label `{label}` is used twice"),
            InvalidLabel { label, reason } => write!(f, "invalid label `{label}`: {reason}"),
            TooManyPoints { found, max } => write!(f, "extension would have {found} points (max {max})"),
            EmptyFiber { kernel } => write!(f, "fiber at {} is empty", braces(kernel)),
            FiberKeyNotAtom { kernel } => write!(f, "fiber key {} is not an atom of the base", braces(kernel)),
            FamilyKeyNotMeasurable { set } => write!(f, "family key {} is not measurable", braces(set)),
            MissingFamily { set } => write!(f, "no nonempty family for {}", braces(set)),
            NotInPasted { set, member } => {
                write!(f, "{} in the family of {} is not in the pasted algebra", braces(member), braces(set))
            }
            EmptyMissing => write!(f, "the family of the empty set lacks the empty set"),
            ComplementMissing { set, member } => write!(
                f,
                "complement of {} (family of {}) missing from the family of the complement",
                braces(member),
                braces(set)
            ),
            UnionMissing { left_set, left_member, right_set, right_member } => write!(
                f,
                "{} ∪ {} missing from the family of {} ∪ {}",
                braces(left_member),
                braces(right_member),
                braces(left_set),
                braces(right_set)
            ),
        }
    }
}

/// Lists every violated kit invariant; an empty list means the kit is valid.
///
/// Condition (3) is checked on pairs: with pairwise closure, any finite
/// selection `D₁, .., Dₙ` folds into `𝒟_{B₁∪..∪Bₙ}` one union at a time, and
/// a countable selection from finite families has only finitely many
/// distinct terms.
pub fn validate_kit(kit: &ExtensionKit) -> Vec<KitViolation> {
    let mut out = structural_violations(kit);
    if out.is_empty() {
        out.extend(condition_violations(kit));
    }
    out
}

fn structural_violations(kit: &ExtensionKit) -> Vec<KitViolation> {
    let mut out = Vec::new();
    let xg = kit.base.ground();
    let zg = kit.pasted.ground();
    let algebra = kit.base.algebra();

    let labels = kit.extension_labels();
    let mut seen = BTreeSet::new();
    for l in &labels {
        if !seen.insert(l.as_str()) && !out.contains(&KitViolation::LabelCollision { label: l.clone() }) {
            out.push(KitViolation::LabelCollision { label: l.clone() });
        }
        if l.is_empty() || l.contains(',') {
            out.push(KitViolation::InvalidLabel {
                label: l.clone(),
                reason: "labels must be nonempty and free of `,`".into(),
            });
        }
    }
    if labels.len() > MAX_POINTS {
        out.push(KitViolation::TooManyPoints { found: labels.len(), max: MAX_POINTS });
    }

    for (&kernel, fiber) in &kit.fibers {
        if !algebra.atoms().contains(&kernel) {
            out.push(KitViolation::FiberKeyNotAtom { kernel: xg.labels_of(kernel) });
        }
        if fiber.is_empty() {
            out.push(KitViolation::EmptyFiber { kernel: xg.labels_of(kernel) });
        }
    }

    for (&b, family) in &kit.dfamily {
        if !algebra.contains(b) {
            out.push(KitViolation::FamilyKeyNotMeasurable { set: xg.labels_of(b) });
            continue;
        }
        for &d in family {
            if !kit.pasted.contains(d) {
                out.push(KitViolation::NotInPasted {
                    set: xg.labels_of(b),
                    member: zg.labels_of(d),
                });
            }
        }
    }
    for b in algebra.members() {
        if kit.dfamily.get(&b).is_none_or(|f| f.is_empty()) {
            out.push(KitViolation::MissingFamily { set: xg.labels_of(b) });
        }
    }
    out
}

fn condition_violations(kit: &ExtensionKit) -> Vec<KitViolation> {
    let mut out = Vec::new();
    let xg = kit.base.ground();
    let zg = kit.pasted.ground();
    let family = |b: SubsetMask| &kit.dfamily[&b];

    if !family(SubsetMask::EMPTY).contains(&SubsetMask::EMPTY) {
        out.push(KitViolation::EmptyMissing);
    }
    for (&b, ds) in &kit.dfamily {
        let target = family(xg.complement(b));
        for &d in ds {
            if !target.contains(&zg.complement(d)) {
                out.push(KitViolation::ComplementMissing {
                    set: xg.labels_of(b),
                    member: zg.labels_of(d),
                });
            }
        }
    }
    let pairs: Vec<(SubsetMask, SubsetMask)> = kit
        .dfamily
        .iter()
        .flat_map(|(&b, ds)| ds.iter().map(move |&d| (b, d)))
        .collect();
    for (i, &(b1, d1)) in pairs.iter().enumerate() {
        for &(b2, d2) in &pairs[i..] {
            if !family(b1 | b2).contains(&(d1 | d2)) {
                out.push(KitViolation::UnionMissing {
                    left_set: xg.labels_of(b1),
                    left_member: zg.labels_of(d1),
                    right_set: xg.labels_of(b2),
                    right_member: zg.labels_of(d2),
                });
            }
        }
    }
    out
}
