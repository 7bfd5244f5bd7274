//! Measure spaces over atom-partition σ-algebras.

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::ground::{GroundSet, SubsetMask};
use crate::sigma::SigmaAlgebra;

/// A σ-algebra together with one value per atom.
///
/// `μ(B)` is the sum of the values of the atoms inside `B`; on a finite
/// space this is the only countably additive measure with those atom
/// values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeasureSpace {
    algebra: SigmaAlgebra,
    values: Vec<ExtReal>,
}

impl MeasureSpace {
    /// `values[i]` belongs to `algebra.atoms()[i]`.
    pub fn new(algebra: SigmaAlgebra, values: Vec<ExtReal>) -> Result<Self> {
        if values.len() != algebra.atoms().len() {
            return Err(Error::ValueCount {
                expected: algebra.atoms().len(),
                found: values.len(),
            });
        }
        Ok(MeasureSpace { algebra, values })
    }

    /// Builds a space from atoms in any order, each paired with its value.
    pub fn from_weighted_atoms(
        ground: GroundSet,
        weighted: Vec<(SubsetMask, ExtReal)>,
    ) -> Result<Self> {
        let algebra = SigmaAlgebra::from_atoms(ground, weighted.iter().map(|(a, _)| *a).collect())?;
        let values = algebra
            .atoms()
            .iter()
            .map(|a| {
                weighted
                    .iter()
                    .find(|(w, _)| w == a)
                    .map(|(_, v)| v.clone())
                    .expect("atom present")
            })
            .collect();
        Ok(MeasureSpace { algebra, values })
    }

    /// Every atom gets the value zero.
    pub fn zero(algebra: SigmaAlgebra) -> Self {
        let values = vec![ExtReal::zero(); algebra.atoms().len()];
        MeasureSpace { algebra, values }
    }

    pub fn algebra(&self) -> &SigmaAlgebra {
        &self.algebra
    }

    pub fn ground(&self) -> &GroundSet {
        self.algebra.ground()
    }

    pub fn values(&self) -> &[ExtReal] {
        &self.values
    }

    pub fn atom_value(&self, atom: usize) -> &ExtReal {
        &self.values[atom]
    }

    /// `μ(s)` for measurable `s`.
    pub fn measure_of(&self, s: SubsetMask) -> Result<ExtReal> {
        self.algebra.require(s)?;
        Ok(self.sum_within(s))
    }

    fn sum_within(&self, s: SubsetMask) -> ExtReal {
        self.algebra.atoms_within(s).map(|i| &self.values[i]).sum()
    }

    /// `inf { μ(C) : C measurable, C ⊇ s }`, by scanning the algebra.
    pub fn outer_measure(&self, s: SubsetMask) -> Result<ExtReal> {
        self.ground().check(s)?;
        Ok(self
            .algebra
            .members()
            .filter(|c| s.is_subset_of(*c))
            .map(|c| self.sum_within(c))
            .min()
            .expect("the whole space covers every subset"))
    }

    /// `sup { μ(C) : C measurable, C ⊆ s }`, by scanning the algebra.
    pub fn inner_measure(&self, s: SubsetMask) -> Result<ExtReal> {
        self.ground().check(s)?;
        Ok(self
            .algebra
            .members()
            .filter(|c| c.is_subset_of(s))
            .map(|c| self.sum_within(c))
            .max()
            .expect("the empty set fits inside every subset"))
    }

    /// Whether `x` is thick: its complement has inner measure zero.
    pub fn is_thick(&self, x: SubsetMask) -> Result<bool> {
        self.ground().check(x)?;
        Ok(self.inner_measure(self.ground().complement(x))?.is_zero())
    }

    /// A measurable set inside the complement of `x` with positive measure,
    /// if `x` is not thick.
    pub fn thickness_witness(&self, x: SubsetMask) -> Result<Option<SubsetMask>> {
        self.ground().check(x)?;
        let outside = self.ground().complement(x);
        Ok(self
            .algebra
            .members()
            .filter(|c| c.is_subset_of(outside))
            .find(|&c| !self.sum_within(c).is_zero()))
    }

    /// On a finite space: every atom has finite measure.
    pub fn is_sigma_finite(&self) -> bool {
        self.values.iter().all(|v| !v.is_infinite())
    }

    /// The same space with its points listed in a different order.
    pub fn relabel(&self, ground: &GroundSet) -> Result<MeasureSpace> {
        let algebra = self.algebra.relabel(ground)?;
        let weighted = self
            .algebra
            .atoms()
            .iter()
            .zip(&self.values)
            .map(|(&a, v)| Ok((ground.translate(self.ground(), a)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        MeasureSpace::from_weighted_atoms(algebra.ground().clone(), weighted)
    }
}
