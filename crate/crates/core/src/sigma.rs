//! σ-algebras on finite ground sets, stored as atom partitions.
//!
//! Every σ-algebra on a finite set is atomic: its members are exactly the
//! unions of its atoms. Storing the atoms sorted by their lowest member
//! index gives a canonical form, so two algebras on the same ground set are
//! equal iff their atom lists are equal.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaAlgebra {
    ground: GroundSet,
    atoms: Vec<SubsetMask>,
}

impl SigmaAlgebra {
    /// Validates that `atoms` partition the ground set and stores them in
    /// canonical order.
    pub fn from_atoms(ground: GroundSet, atoms: Vec<SubsetMask>) -> Result<Self> {
        let mut seen = SubsetMask::EMPTY;
        for &atom in &atoms {
            ground.check(atom)?;
            if atom.is_empty() {
                return Err(Error::NotAPartition("empty atom".into()));
            }
            if atom.meets(seen) {
                return Err(Error::NotAPartition(format!(
                    "atom {} overlaps another atom",
                    ground.render(atom)
                )));
            }
            seen = seen | atom;
        }
        if seen != ground.full() {
            return Err(Error::NotAPartition(format!(
                "points {} are not covered",
                ground.render(ground.full() - seen)
            )));
        }
        Ok(Self::canonical(ground, atoms))
    }

    pub(crate) fn canonical(ground: GroundSet, mut atoms: Vec<SubsetMask>) -> Self {
        atoms.sort_by_key(|a| a.lowest());
        SigmaAlgebra { ground, atoms }
    }

    /// The smallest σ-algebra containing every generator.
    ///
    /// Its atoms are the nonempty blocks of the common refinement of the
    /// generators and their complements.
    pub fn generate(ground: GroundSet, generators: &[SubsetMask]) -> Result<Self> {
        for &g in generators {
            ground.check(g)?;
        }
        let mut blocks = if ground.is_empty() {
            Vec::new()
        } else {
            vec![ground.full()]
        };
        for &g in generators {
            blocks = blocks
                .into_iter()
                .flat_map(|b| [b & g, b - g])
                .filter(|b| !b.is_empty())
                .collect();
        }
        Ok(Self::canonical(ground, blocks))
    }

    /// `{∅, X}`.
    pub fn trivial(ground: GroundSet) -> Self {
        Self::generate(ground, &[]).expect("no generators")
    }

    /// The power set.
    pub fn discrete(ground: GroundSet) -> Self {
        let atoms = (0..ground.len()).map(SubsetMask::singleton).collect();
        Self::canonical(ground, atoms)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn atoms(&self) -> &[SubsetMask] {
        &self.atoms
    }

    pub fn full(&self) -> SubsetMask {
        self.ground.full()
    }

    /// Whether `s` is a union of atoms.
    pub fn member(&self, s: SubsetMask) -> Result<bool> {
        self.ground.check(s)?;
        Ok(self.contains(s))
    }

    /// [`SigmaAlgebra::member`] without the ground check; masks outside the
    /// ground set are never members.
    pub fn contains(&self, s: SubsetMask) -> bool {
        s.is_subset_of(self.full())
            && self
                .atoms
                .iter()
                .all(|&a| a.is_subset_of(s) || !a.meets(s))
    }

    /// Fails with [`Error::NotMeasurable`] unless `s` is a member.
    pub fn require(&self, s: SubsetMask) -> Result<()> {
        if self.member(s)? {
            Ok(())
        } else {
            Err(Error::NotMeasurable(self.ground.render(s)))
        }
    }

    /// Index of the atom holding `point`.
    pub fn atom_of(&self, point: usize) -> Option<usize> {
        self.atoms.iter().position(|a| a.contains(point))
    }

    /// Indices of the atoms contained in `s`.
    pub fn atoms_within(&self, s: SubsetMask) -> impl Iterator<Item = usize> + '_ {
        (0..self.atoms.len()).filter(move |&i| self.atoms[i].is_subset_of(s))
    }

    /// Smallest member containing `s`.
    pub fn hull(&self, s: SubsetMask) -> SubsetMask {
        self.atoms
            .iter()
            .filter(|a| a.meets(s))
            .fold(SubsetMask::EMPTY, |acc, &a| acc | a)
    }

    /// Union of the atoms selected by the bits of `selection`.
    pub fn union_of_atoms(&self, selection: u32) -> SubsetMask {
        SubsetMask::from_bits(selection)
            .iter()
            .fold(SubsetMask::EMPTY, |acc, i| acc | self.atoms[i])
    }

    pub fn member_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    /// Every member, indexed by subsets of the atom list.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..self.member_count() as u32).map(move |sel| self.union_of_atoms(sel))
    }

    /// Whether every singleton is measurable.
    pub fn separates_points(&self) -> bool {
        self.atoms.iter().all(|a| a.len() == 1)
    }

    /// The trace `{C ∩ X : C ∈ self}` as an algebra on the subspace `x`.
    pub fn trace(&self, x: SubsetMask) -> Result<SigmaAlgebra> {
        self.ground.check(x)?;
        let sub = self.ground.subspace(x);
        let atoms = self
            .atoms
            .iter()
            .map(|&a| self.ground.restrict(x, a))
            .filter(|a| !a.is_empty())
            .collect();
        Ok(Self::canonical(sub, atoms))
    }

    /// The same algebra viewed over a reordering of its labels.
    pub fn relabel(&self, ground: &GroundSet) -> Result<SigmaAlgebra> {
        if ground.len() != self.ground.len() {
            return Err(Error::GroundMismatch);
        }
        let atoms = self
            .atoms
            .iter()
            .map(|&a| ground.translate(&self.ground, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(ground.clone(), atoms))
    }

    /// Atoms as label lists.
    pub fn atom_labels(&self) -> Vec<Vec<String>> {
        self.atoms.iter().map(|&a| self.ground.labels_of(a)).collect()
    }
}
