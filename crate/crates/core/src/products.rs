//! Product measurable spaces and the ultrafilter lifting/projection maps.
//!
//! The point `(x, y)` of `X × Y` gets index `i·|Y| + j` and the label
//! `(x|y)`. The product σ-algebra is the one generated by the measurable
//! rectangles; on finite spaces its atoms are the products of atoms.

use crate::error::{Error, Result};
use crate::filters::{extend_to_ultrafilter, SetFamily, UltrafilterRecord};
use crate::ground::{GroundSet, SubsetMask};
use crate::measure::MeasureSpace;
use crate::sigma::SigmaAlgebra;

/// Two factor spaces and their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpace {
    left: MeasureSpace,
    right: MeasureSpace,
    product: MeasureSpace,
}

fn escape(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for ch in label.chars() {
        if ch == '|' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

/// The label of the pair `(x, y)`. `|` and `\` inside either label are
/// escaped with a backslash.
pub fn pair_label(x: &str, y: &str) -> String {
    format!("({}|{})", escape(x), escape(y))
}

/// Builds `(X × Y, ℬ × 𝒞, μ × λ)`. Atom values multiply with `0·∞ = 0`.
pub fn product_space(left: &MeasureSpace, right: &MeasureSpace) -> Result<ProductSpace> {
    let (lg, rg) = (left.ground(), right.ground());
    let labels = lg
        .labels()
        .iter()
        .flat_map(|x| rg.labels().iter().map(move |y| pair_label(x, y)));
    let ground = GroundSet::new(labels)?;
    let space = ProductSpace {
        left: left.clone(),
        right: right.clone(),
        product: MeasureSpace::zero(SigmaAlgebra::trivial(ground.clone())),
    };

    let mut weighted = Vec::new();
    for (a, va) in left.algebra().atoms().iter().zip(left.values()) {
        for (b, vb) in right.algebra().atoms().iter().zip(right.values()) {
            weighted.push((space.rectangle(*a, *b), va.clone() * vb.clone()));
        }
    }
    let product = MeasureSpace::from_weighted_atoms(ground.clone(), weighted)?;

    let rectangles: Vec<SubsetMask> = left
        .algebra()
        .members()
        .flat_map(|a| right.algebra().members().map(move |b| (a, b)))
        .map(|(a, b)| space.rectangle(a, b))
        .collect();
    if &SigmaAlgebra::generate(ground, &rectangles)? != product.algebra() {
        return Err(Error::Invariant(
            "rectangles generate a different algebra than the atom products".into(),
        ));
    }
    Ok(ProductSpace { product, ..space })
}

impl ProductSpace {
    pub fn left(&self) -> &MeasureSpace {
        &self.left
    }

    pub fn right(&self) -> &MeasureSpace {
        &self.right
    }

    pub fn product(&self) -> &MeasureSpace {
        &self.product
    }

    /// Index of `(x_i, y_j)` in the product ground set.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.right.ground().len() + j
    }

    /// `a × b` for masks over the left and right ground sets.
    pub fn rectangle(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(a.iter().flat_map(|i| b.iter().map(move |j| self.pair_index(i, j))))
    }

    /// Both factors give every atom finite measure. Reported, never
    /// required.
    pub fn is_sigma_finite(&self) -> bool {
        self.left.is_sigma_finite() && self.right.is_sigma_finite()
    }

    fn right_index(&self, y: &str) -> Result<usize> {
        self.right
            .ground()
            .index_of(y)
            .ok_or_else(|| Error::UnknownLabel(y.to_string()))
    }

    /// `{x : (x, y) ∈ set}` for a product-measurable `set`.
    pub fn y_section(&self, set: SubsetMask, y: &str) -> Result<SubsetMask> {
        self.product.algebra().require(set)?;
        let j = self.right_index(y)?;
        let section = SubsetMask::from_indices(
            (0..self.left.ground().len()).filter(|&i| set.contains(self.pair_index(i, j))),
        );
        if !self.left.algebra().contains(section) {
            return Err(Error::Invariant("section of a measurable set is not measurable".into()));
        }
        Ok(section)
    }

    /// Extends `{F × {y} : F ∈ f}` to an ultrafilter of the product. `{y}`
    /// must be measurable on the right.
    pub fn lift_ultrafilter(&self, f: &UltrafilterRecord, y: &str) -> Result<UltrafilterRecord> {
        if f.algebra() != self.left.algebra() {
            return Err(Error::GroundMismatch);
        }
        if !f.is_ultrafilter() {
            return Err(Error::NotUltrafilter);
        }
        let j = self.right_index(y)?;
        let point = SubsetMask::singleton(j);
        if !self.right.algebra().contains(point) {
            return Err(Error::SingletonNotMeasurable(y.to_string()));
        }
        let strips = f.family().members().iter().map(|&m| self.rectangle(m, point));
        let h = extend_to_ultrafilter(&SetFamily::new(self.product.algebra().clone(), strips)?)?;
        if !h.flags().has_cip {
            return Err(Error::Invariant("lifted ultrafilter lacks c.i.p.".into()));
        }
        for &m in h.family().members() {
            if !f.contains(self.y_section(m, y)?) {
                return Err(Error::Invariant("a section of the lift falls outside f".into()));
            }
        }
        Ok(h)
    }

    /// The factor ultrafilters of `h`: on the left the extension of
    /// `{B : B × Y ∈ h}`, on the right `{C : X × C ∈ h}`. The product of
    /// the two kernels is checked to be the kernel of `h`.
    pub fn project_ultrafilter(&self, h: &UltrafilterRecord) -> Result<(UltrafilterRecord, UltrafilterRecord)> {
        if h.algebra() != self.product.algebra() {
            return Err(Error::GroundMismatch);
        }
        if !h.is_ultrafilter() {
            return Err(Error::NotUltrafilter);
        }
        if !h.flags().has_cip {
            return Err(Error::NoCountableIntersection);
        }
        let (lx, ry) = (self.left.algebra().full(), self.right.algebra().full());
        let left_base = self
            .left
            .algebra()
            .members()
            .filter(|&b| h.contains(self.rectangle(b, ry)));
        let right_base = self
            .right
            .algebra()
            .members()
            .filter(|&c| h.contains(self.rectangle(lx, c)));
        let f = extend_to_ultrafilter(&SetFamily::new(self.left.algebra().clone(), left_base)?)?;
        let g = extend_to_ultrafilter(&SetFamily::new(self.right.algebra().clone(), right_base)?)?;
        if self.rectangle(f.kernel(), g.kernel()) != h.kernel() {
            return Err(Error::Invariant("factor kernels do not rebuild the product kernel".into()));
        }
        Ok((f, g))
    }
}
