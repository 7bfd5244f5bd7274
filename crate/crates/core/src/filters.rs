//! Filters and ultrafilters inside a finite σ-algebra.
//!
//! Families are classified straight from the definitions (filter-base,
//! filter, ultrafilter, countable intersection property, free/fixed) rather
//! than from the atom structure, so that the finite-case facts (every
//! ultrafilter is the up-set of an atom, none is free) are checked, not
//! assumed.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::ground::SubsetMask;
use crate::measure::MeasureSpace;
use crate::sigma::SigmaAlgebra;

/// A family of measurable sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    algebra: SigmaAlgebra,
    members: BTreeSet<SubsetMask>,
}

impl SetFamily {
    /// Every member must be measurable in `algebra`.
    pub fn new<I: IntoIterator<Item = SubsetMask>>(algebra: SigmaAlgebra, members: I) -> Result<Self> {
        let members: BTreeSet<SubsetMask> = members.into_iter().collect();
        for &m in &members {
            algebra.require(m)?;
        }
        Ok(SetFamily { algebra, members })
    }

    /// All members of the algebra that contain `s`.
    pub fn up_set(algebra: &SigmaAlgebra, s: SubsetMask) -> SetFamily {
        let members = algebra.members().filter(|m| s.is_subset_of(*m)).collect();
        SetFamily {
            algebra: algebra.clone(),
            members,
        }
    }

    pub fn algebra(&self) -> &SigmaAlgebra {
        &self.algebra
    }

    pub fn members(&self) -> &BTreeSet<SubsetMask> {
        &self.members
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        self.members.contains(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Intersection of all members; the whole space for an empty family.
    pub fn kernel(&self) -> SubsetMask {
        self.members
            .iter()
            .fold(self.algebra.full(), |acc, &m| acc & m)
    }

    /// Union of all members.
    pub fn union(&self) -> SubsetMask {
        self.members.iter().fold(SubsetMask::EMPTY, |acc, &m| acc | m)
    }

    /// Nonempty, and any two members contain a common nonempty member.
    pub fn is_filter_base(&self) -> bool {
        !self.members.is_empty()
            && self.members.iter().all(|&a| {
                self.members.iter().all(|&b| {
                    self.members
                        .iter()
                        .any(|&c| !c.is_empty() && c.is_subset_of(a & b))
                })
            })
    }

    /// A filter-base closed under measurable supersets.
    pub fn is_filter(&self) -> bool {
        self.is_filter_base()
            && self.algebra.members().all(|b| {
                self.contains(b) || !self.members.iter().any(|&f| f.is_subset_of(b))
            })
    }

    /// A filter such that every measurable set meeting all members is a
    /// member.
    pub fn is_ultrafilter(&self) -> bool {
        self.is_filter()
            && self.algebra.members().all(|b| {
                self.contains(b) || !self.members.iter().all(|&f| f.meets(b))
            })
    }

    /// Every countable subfamily has nonempty intersection. A finite family
    /// has finitely many subfamilies and the whole family is one of them,
    /// so this is equivalent to a nonempty kernel.
    pub fn has_countable_intersection(&self) -> bool {
        self.members.is_empty() || !self.kernel().is_empty()
    }
}

/// Outcome of classifying a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFlags {
    pub is_filter_base: bool,
    pub is_filter: bool,
    pub is_ultrafilter: bool,
    pub has_cip: bool,
    pub is_free: bool,
}

/// A family together with its kernel and classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltrafilterRecord {
    family: SetFamily,
    kernel: SubsetMask,
    flags: FamilyFlags,
}

impl UltrafilterRecord {
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn algebra(&self) -> &SigmaAlgebra {
        self.family.algebra()
    }

    pub fn kernel(&self) -> SubsetMask {
        self.kernel
    }

    pub fn flags(&self) -> FamilyFlags {
        self.flags
    }

    pub fn is_ultrafilter(&self) -> bool {
        self.flags.is_ultrafilter
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        self.family.contains(s)
    }

    fn require_ultrafilter(&self) -> Result<()> {
        if self.flags.is_ultrafilter {
            Ok(())
        } else {
            Err(Error::NotUltrafilter)
        }
    }

    fn require_cip(&self) -> Result<()> {
        self.require_ultrafilter()?;
        if self.flags.has_cip {
            Ok(())
        } else {
            Err(Error::NoCountableIntersection)
        }
    }
}

/// Classifies `family` by direct appeal to the definitions.
pub fn classify_family(family: SetFamily) -> UltrafilterRecord {
    let kernel = family.kernel();
    let flags = FamilyFlags {
        is_filter_base: family.is_filter_base(),
        is_filter: family.is_filter(),
        is_ultrafilter: family.is_ultrafilter(),
        has_cip: family.has_countable_intersection(),
        is_free: kernel.is_empty(),
    };
    UltrafilterRecord { family, kernel, flags }
}

/// The principal ultrafilter at an atom.
pub fn principal_ultrafilter(algebra: &SigmaAlgebra, atom: usize) -> UltrafilterRecord {
    classify_family(SetFamily::up_set(algebra, algebra.atoms()[atom]))
}

/// Every ultrafilter of a finite algebra: the up-set of each atom, in atom
/// order.
pub fn enumerate_ultrafilters(algebra: &SigmaAlgebra) -> Vec<UltrafilterRecord> {
    (0..algebra.atoms().len())
        .map(|i| principal_ultrafilter(algebra, i))
        .collect()
}

/// Exactly one of `b` and its complement belongs to `u`.
pub fn check_dichotomy(u: &UltrafilterRecord, b: SubsetMask) -> Result<bool> {
    u.require_ultrafilter()?;
    u.algebra().require(b)?;
    let complement = u.algebra().ground().complement(b);
    Ok(u.contains(b) != u.contains(complement))
}

/// Whether `⋃bs ∈ u ⟺ some b ∈ u` holds for this list.
pub fn check_union_membership(u: &UltrafilterRecord, bs: &[SubsetMask]) -> Result<bool> {
    u.require_cip()?;
    for &b in bs {
        u.algebra().require(b)?;
    }
    let union = bs.iter().fold(SubsetMask::EMPTY, |acc, &b| acc | b);
    Ok(u.contains(union) == bs.iter().any(|&b| u.contains(b)))
}

/// An ultrafilter containing the filter-base `base`: the principal
/// ultrafilter of the lowest-ordered atom inside the kernel of `base`.
pub fn extend_to_ultrafilter(base: &SetFamily) -> Result<UltrafilterRecord> {
    if base.is_empty() {
        return Err(Error::NotFilterBase("family is empty".into()));
    }
    if !base.is_filter_base() {
        let g = base.algebra().ground();
        let reason = if base.contains(SubsetMask::EMPTY) {
            "contains the empty set".to_string()
        } else {
            let (a, b) = base
                .members()
                .iter()
                .flat_map(|&a| base.members().iter().map(move |&b| (a, b)))
                .find(|&(a, b)| {
                    !base
                        .members()
                        .iter()
                        .any(|&c| !c.is_empty() && c.is_subset_of(a & b))
                })
                .expect("some pair lacks a lower bound");
            format!("{} and {} have no common nonempty lower bound", g.render(a), g.render(b))
        };
        return Err(Error::NotFilterBase(reason));
    }
    let algebra = base.algebra();
    let kernel = base.kernel();
    let atom = algebra
        .atoms_within(kernel)
        .next()
        .ok_or_else(|| Error::Invariant("filter-base with no atom in its kernel".into()))?;
    let u = principal_ultrafilter(algebra, atom);
    if !u.is_ultrafilter() || !base.members().iter().all(|&b| u.contains(b)) {
        return Err(Error::Invariant("extension does not contain the base".into()));
    }
    Ok(u)
}

/// A `{0,1}`-valued measure: at most one atom carries the value one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMeasure {
    algebra: SigmaAlgebra,
    unit_atom: Option<SubsetMask>,
}

impl ZeroOneMeasure {
    /// The measure that is one exactly on sets containing `atom`.
    pub fn concentrated(algebra: SigmaAlgebra, atom: usize) -> Self {
        let unit_atom = Some(algebra.atoms()[atom]);
        ZeroOneMeasure { algebra, unit_atom }
    }

    /// The measure that vanishes everywhere.
    pub fn trivial(algebra: SigmaAlgebra) -> Self {
        ZeroOneMeasure {
            algebra,
            unit_atom: None,
        }
    }

    /// Accepts a space whose measure only takes the values 0 and 1.
    pub fn from_measure_space(ms: &MeasureSpace) -> Result<Self> {
        let g = ms.ground();
        let mut unit = None;
        for (i, v) in ms.values().iter().enumerate() {
            let atom = ms.algebra().atoms()[i];
            if *v == ExtReal::one() {
                if let Some(prev) = unit {
                    return Err(Error::NotZeroOne(format!(
                        "atoms {} and {} both have measure 1",
                        g.render(prev),
                        g.render(atom)
                    )));
                }
                unit = Some(atom);
            } else if !v.is_zero() {
                return Err(Error::NotZeroOne(format!("atom {} has measure {v}", g.render(atom))));
            }
        }
        Ok(ZeroOneMeasure {
            algebra: ms.algebra().clone(),
            unit_atom: unit,
        })
    }

    pub fn algebra(&self) -> &SigmaAlgebra {
        &self.algebra
    }

    pub fn unit_atom(&self) -> Option<SubsetMask> {
        self.unit_atom
    }

    pub fn is_trivial(&self) -> bool {
        self.unit_atom.is_none()
    }

    /// `μ(b) ∈ {0, 1}`.
    pub fn measure_of(&self, b: SubsetMask) -> Result<u8> {
        self.algebra.require(b)?;
        Ok(self.unit_atom.map_or(0, |a| a.is_subset_of(b) as u8))
    }

    /// Union of the measurable null sets.
    pub fn null_cover(&self) -> SubsetMask {
        self.algebra
            .members()
            .filter(|&b| self.unit_atom.is_none_or(|a| !a.is_subset_of(b)))
            .fold(SubsetMask::EMPTY, |acc, b| acc | b)
    }

    pub fn to_measure_space(&self) -> MeasureSpace {
        let values = self
            .algebra
            .atoms()
            .iter()
            .map(|&a| {
                if Some(a) == self.unit_atom {
                    ExtReal::one()
                } else {
                    ExtReal::zero()
                }
            })
            .collect();
        MeasureSpace::new(self.algebra.clone(), values).expect("one value per atom")
    }
}

/// `μ(B) = 1` iff `B ∈ u`.
pub fn measure_from_ultrafilter(u: &UltrafilterRecord) -> Result<ZeroOneMeasure> {
    u.require_ultrafilter()?;
    let algebra = u.algebra().clone();
    let atom = algebra
        .atoms()
        .iter()
        .position(|&a| a == u.kernel())
        .ok_or_else(|| Error::Invariant("ultrafilter kernel is not an atom".into()))?;
    let m = ZeroOneMeasure::concentrated(algebra, atom);
    for b in u.algebra().members() {
        if (m.measure_of(b)? == 1) != u.contains(b) {
            return Err(Error::Invariant("measure disagrees with ultrafilter".into()));
        }
    }
    Ok(m)
}

/// The family `{B : μ(B) = 1}` of a non-trivial `{0,1}`-valued measure.
pub fn ultrafilter_from_01_measure(m: &ZeroOneMeasure) -> Result<UltrafilterRecord> {
    if m.is_trivial() {
        return Err(Error::TrivialMeasure);
    }
    let members = m
        .algebra
        .members()
        .filter(|&b| m.measure_of(b) == Ok(1))
        .collect::<Vec<_>>();
    let u = classify_family(SetFamily::new(m.algebra.clone(), members)?);
    if !u.flags.is_ultrafilter || !u.flags.has_cip {
        return Err(Error::Invariant("unit sets do not form an ultrafilter with c.i.p.".into()));
    }
    Ok(u)
}

/// `μ(⋃family) = sup μ(C)` for a measure whose null sets cover the space.
///
/// On a finite space only the zero measure satisfies the precondition.
pub fn check_sup_property(m: &ZeroOneMeasure, family: &SetFamily) -> Result<bool> {
    if family.algebra() != m.algebra() {
        return Err(Error::GroundMismatch);
    }
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let uncovered = m.algebra.full() - m.null_cover();
    if let Some(p) = uncovered.lowest() {
        return Err(Error::NullSetsDoNotCover(m.algebra.ground().label(p).to_string()));
    }
    let union = family.union();
    m.algebra.require(union)?;
    let sup = family
        .members()
        .iter()
        .map(|&c| m.measure_of(c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    Ok(m.measure_of(union)? == sup)
}

/// Pushes an ultrafilter on a measurable subspace `X ∈ 𝒞` up into `𝒞`:
/// `{G ∈ 𝒞 : G ⊇ F for some F ∈ f}`.
pub fn lift_to_superspace(f: &UltrafilterRecord, superalgebra: &SigmaAlgebra) -> Result<UltrafilterRecord> {
    f.require_cip()?;
    let big = superalgebra.ground();
    let small = f.algebra().ground();
    let x = big.locate(small)?;
    if !superalgebra.contains(x) {
        return Err(Error::TraceMismatch(format!("{} is not measurable in the larger algebra", big.render(x))));
    }
    let trace = superalgebra.trace(x)?.relabel(small)?;
    if &trace != f.algebra() {
        return Err(Error::TraceMismatch(
            "the subspace algebra is not {C ∈ 𝒞 : C ⊆ X}".into(),
        ));
    }
    let lifted: Vec<SubsetMask> = f
        .family()
        .members()
        .iter()
        .map(|&m| big.translate(small, m))
        .collect::<Result<_>>()?;
    let members = superalgebra
        .members()
        .filter(|&g| lifted.iter().any(|&m| m.is_subset_of(g)));
    let g = classify_family(SetFamily::new(superalgebra.clone(), members)?);
    if !g.flags.is_ultrafilter || !g.flags.has_cip || g.flags.is_free != f.flags.is_free {
        return Err(Error::Invariant("lifted family is not an ultrafilter of the same kind".into()));
    }
    Ok(g)
}

/// Restricts an ultrafilter on `𝒞` to the trace algebra on `x`: extends
/// `{H ∩ X : H ∈ h}` to an ultrafilter there.
pub fn restrict_by_trace(h: &UltrafilterRecord, x: SubsetMask) -> Result<UltrafilterRecord> {
    h.require_cip()?;
    let big = h.algebra().ground();
    let trace = h.algebra().trace(x)?;
    if let Some(&miss) = h.family().members().iter().find(|&&m| !m.meets(x)) {
        return Err(Error::MemberMissesSubspace(big.render(miss)));
    }
    let traced = h.family().members().iter().map(|&m| big.restrict(x, m));
    let base = SetFamily::new(trace, traced)?;
    let f = extend_to_ultrafilter(&base)?;
    if !f.flags.has_cip {
        return Err(Error::Invariant("restricted ultrafilter lacks c.i.p.".into()));
    }
    Ok(f)
}
