use std::collections::{BTreeMap, BTreeSet};

use crate::embeddings::construct::{construct_blowup, construct_extension};
use crate::embeddings::kit::ExtensionKit;
use crate::embeddings::check_measure_embedding;
use crate::error::{Error, Result};
use crate::filters::{classify_family, SetFamily, UltrafilterRecord};
use crate::ground::{GroundSet, SubsetMask};
use crate::measure::MeasureSpace;

/// What a point outside `X` is in the canonical decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointRole {
    /// In the pasted part `Z`.
    Pasted,
    /// In the fiber of the ultrafilter with this kernel (a mask over `X`).
    Fiber(SubsetMask),
}

/// Whether the fibers can be indexed by points of `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KitForm {
    /// Every fiber kernel is a singleton `{u}`.
    Blowup,
    /// Some kernel has several points; only the ultrafilter-indexed form
    /// exists.
    UltrafilterOnly,
}

/// The canonical kit of an extension, as recovered by
/// [`decompose_extension`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionRecord {
    /// The extension's ground set `Y`, in its original order.
    pub ground: GroundSet,
    /// `X` inside `Y`.
    pub x: SubsetMask,
    /// `Z = {p ∈ Y ∖ X : p ∈ C ⊆ Y ∖ X for some C ∈ 𝒞}`.
    pub z_part: SubsetMask,
    pub kit: ExtensionKit,
    /// Role of every point of `Y ∖ X`, by index into `ground`.
    pub point_assignment: Vec<(usize, PointRole)>,
    /// The ultrafilters `𝒰_p`, one per fiber, in atom order.
    pub ultrafilters: Vec<UltrafilterRecord>,
}

impl DecompositionRecord {
    pub fn form(&self) -> KitForm {
        if self.kit.fibers.keys().all(|k| k.len() == 1) {
            KitForm::Blowup
        } else {
            KitForm::UltrafilterOnly
        }
    }

    /// Fibers keyed by the point they blow up; fails when some kernel is not
    /// a singleton.
    pub fn point_indexed_fibers(&self) -> Result<BTreeMap<usize, Vec<String>>> {
        self.kit
            .fibers
            .iter()
            .map(|(&k, labels)| {
                if k.len() == 1 {
                    Ok((k.lowest().expect("nonempty"), labels.clone()))
                } else {
                    Err(Error::NotSeparated(self.kit.base.ground().render(k)))
                }
            })
            .collect()
    }

    /// Rebuilds the extension from the kit, with points in the original
    /// order.
    pub fn reconstruct(&self) -> Result<MeasureSpace> {
        construct_extension(&self.kit)?.relabel(&self.ground)
    }

    /// As [`DecompositionRecord::reconstruct`], through the point-indexed
    /// blow-up form.
    pub fn reconstruct_blowup(&self) -> Result<MeasureSpace> {
        construct_blowup(&self.kit)?.relabel(&self.ground)
    }
}

/// The trace space `(X, ℬ, μ)` induced on `x` by `big`, provided it is
/// embedded there.
fn induced_subspace(big: &MeasureSpace, x: SubsetMask) -> Result<MeasureSpace> {
    let g = big.ground();
    g.check(x)?;
    let algebra = big.algebra().trace(x)?;
    let values = algebra
        .atoms()
        .iter()
        .map(|&p| {
            let i = big
                .algebra()
                .atoms()
                .iter()
                .position(|&a| g.restrict(x, a) == p)
                .expect("trace atoms come from atoms");
            big.atom_value(i).clone()
        })
        .collect();
    let small = MeasureSpace::new(algebra, values)?;
    let verdict = check_measure_embedding(&small, big)?;
    if let Some((w, _, why)) = verdict.witness(small.ground(), g) {
        return Err(Error::NotEmbedded(format!("{{{}}}: {why}", w.join(","))));
    }
    Ok(small)
}

/// `Z`: the union of the measurable sets avoiding `X`.
fn pasted_part(big: &MeasureSpace, x: SubsetMask) -> SubsetMask {
    let outside = big.ground().complement(x);
    big.algebra()
        .members()
        .filter(|c| c.is_subset_of(outside))
        .fold(SubsetMask::EMPTY, |acc, c| acc | c)
}

/// `𝒰_p = {C ∩ X : p ∈ C ∈ 𝒞}` as a classified family over the trace.
fn point_ultrafilter(big: &MeasureSpace, small: &MeasureSpace, x: SubsetMask, p: usize) -> Result<UltrafilterRecord> {
    let g = big.ground();
    let members = big
        .algebra()
        .members()
        .filter(|c| c.contains(p))
        .map(|c| g.restrict(x, c));
    Ok(classify_family(SetFamily::new(small.algebra().clone(), members)?))
}

/// Splits an extension of the trace space on `x` into its canonical kit:
/// the pasted part `Z` with `𝒟 = {C ∩ Z}`, the families
/// `𝒟_B = {C ∩ Z : C ∩ X = B}`, and the fibers `S_𝒰 = {p : 𝒰_p = 𝒰}`.
pub fn decompose_extension(big: &MeasureSpace, x: SubsetMask) -> Result<DecompositionRecord> {
    let g = big.ground();
    let small = induced_subspace(big, x)?;
    let z = pasted_part(big, x);
    let pasted = big.algebra().trace(z)?;

    let mut dfamily: BTreeMap<SubsetMask, BTreeSet<SubsetMask>> = BTreeMap::new();
    for c in big.algebra().members() {
        dfamily
            .entry(g.restrict(x, c))
            .or_default()
            .insert(g.restrict(z, c));
    }

    let rest = g.full() - x - z;
    let mut by_kernel: BTreeMap<SubsetMask, (UltrafilterRecord, Vec<usize>)> = BTreeMap::new();
    for p in rest.iter() {
        let u = point_ultrafilter(big, &small, x, p)?;
        if !u.is_ultrafilter() || !u.flags().has_cip {
            return Err(Error::Invariant(format!(
                "point `{}` does not determine an ultrafilter with c.i.p.",
                g.label(p)
            )));
        }
        let kernel = u.kernel();
        match by_kernel.get_mut(&kernel) {
            Some((prev, points)) => {
                if *prev != u {
                    return Err(Error::Invariant("equal kernels with different ultrafilters".into()));
                }
                points.push(p);
            }
            None => {
                by_kernel.insert(kernel, (u, vec![p]));
            }
        }
    }

    let atom_rank = |k: &SubsetMask| small.algebra().atoms().iter().position(|a| a == k);
    let mut ordered: Vec<_> = by_kernel.into_iter().collect();
    ordered.sort_by_key(|(k, _)| atom_rank(k));

    let mut fibers = BTreeMap::new();
    let mut ultrafilters = Vec::new();
    let mut point_assignment: Vec<(usize, PointRole)> =
        z.iter().map(|p| (p, PointRole::Pasted)).collect();
    for (kernel, (u, points)) in ordered {
        fibers.insert(kernel, points.iter().map(|&p| g.label(p).to_string()).collect());
        point_assignment.extend(points.iter().map(|&p| (p, PointRole::Fiber(kernel))));
        ultrafilters.push(u);
    }
    point_assignment.sort_by_key(|(p, _)| *p);

    Ok(DecompositionRecord {
        ground: g.clone(),
        x,
        z_part: z,
        kit: ExtensionKit {
            base: small,
            pasted,
            dfamily,
            fibers,
        },
        point_assignment,
        ultrafilters,
    })
}

/// How a point outside `X` relates to `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutsidePoint {
    /// Lies in a measurable set disjoint from `X`.
    Pasted,
    /// Cannot be separated by `𝒞` from these points of `X` (the kernel of
    /// `𝒰_p`).
    SticksTo(Vec<String>),
    /// Separated from every point of `X` (`𝒰_p` free). Impossible on a
    /// finite space.
    Separated,
}

/// Labels every point of `Y ∖ X` as pasted, stuck to the points of `X` it
/// cannot be separated from, or separated from all of `X`.
pub fn classify_outside_points(big: &MeasureSpace, x: SubsetMask) -> Result<Vec<(String, OutsidePoint)>> {
    let g = big.ground();
    let small = induced_subspace(big, x)?;
    let z = pasted_part(big, x);
    (g.full() - x)
        .iter()
        .map(|p| {
            let class = if z.contains(p) {
                OutsidePoint::Pasted
            } else {
                let u = point_ultrafilter(big, &small, x, p)?;
                if u.flags().is_free {
                    OutsidePoint::Separated
                } else {
                    OutsidePoint::SticksTo(small.ground().labels_of(u.kernel()))
                }
            };
            Ok((g.label(p).to_string(), class))
        })
        .collect()
}
