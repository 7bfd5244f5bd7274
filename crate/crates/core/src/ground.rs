//! Finite ground sets and bitmask subsets.
//!
//! A [`GroundSet`] fixes an order on its labels; the label at position `i`
//! owns bit `i` of every [`SubsetMask`] over that ground set. Masks carry no
//! reference to their ground set, so every public operation that accepts a
//! mask validates its width against the ground set it is used with.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Hard cap on the number of points in a ground set (the mask width).
pub const MAX_POINTS: usize = 16;

/// Documented practical cap for exhaustive enumeration of extensions.
pub const ENUMERATION_CAP: usize = 8;

/// A subset of a ground set, one bit per point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        SubsetMask(1 << index)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, i| m | SubsetMask::singleton(i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member index, if any.
    pub fn lowest(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                Some(i as usize)
            }
        })
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// An ordered list of distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Labels must be nonempty, distinct and free of `,` (commas separate
    /// labels in kit keys and on the command line).
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_POINTS {
            return Err(Error::TooManyPoints {
                found: labels.len(),
                max: MAX_POINTS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidLabel {
                    label: label.clone(),
                    reason: "labels must be nonempty",
                });
            }
            if label.contains(',') {
                return Err(Error::InvalidLabel {
                    label: label.clone(),
                    reason: "labels must not contain `,`",
                });
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// The empty space.
    pub fn empty() -> Self {
        GroundSet::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn complement(&self, s: SubsetMask) -> SubsetMask {
        self.full() - s
    }

    /// Fails unless every bit of `s` names a point of this ground set.
    pub fn check(&self, s: SubsetMask) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// Builds a mask from labels; unknown labels are an error.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        labels.iter().try_fold(SubsetMask::EMPTY, |m, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|i| m | SubsetMask::singleton(i))
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        })
    }

    /// Labels of the members of `s`, in declared order.
    pub fn labels_of(&self, s: SubsetMask) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Renders `s` as `{a,b}`.
    pub fn render(&self, s: SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// The ground set formed by the members of `x`, in this set's order.
    pub fn subspace(&self, x: SubsetMask) -> GroundSet {
        GroundSet {
            labels: self.labels_of(x),
        }
    }

    /// Re-indexes `s ∩ x` onto [`GroundSet::subspace`]`(x)`.
    pub fn restrict(&self, x: SubsetMask, s: SubsetMask) -> SubsetMask {
        let mut out = 0u32;
        for (k, i) in x.iter().enumerate() {
            if s.contains(i) {
                out |= 1 << k;
            }
        }
        SubsetMask(out)
    }

    /// Inverse of [`GroundSet::restrict`]: lifts a mask over the subspace
    /// `x` back into this ground set.
    pub fn expand(&self, x: SubsetMask, sub: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(x.iter().enumerate().filter(|(k, _)| sub.contains(*k)).map(|(_, i)| i))
    }

    /// Where the points of `sub` sit inside `self`; every label of `sub`
    /// must occur here.
    pub fn locate(&self, sub: &GroundSet) -> Result<SubsetMask> {
        self.mask_of(sub.labels()).map_err(|_| {
            Error::NotASubspace(format!("{{{}}}", sub.labels().join(",")))
        })
    }

    /// Translates a mask over `other` into this ground set by label.
    pub fn translate(&self, other: &GroundSet, s: SubsetMask) -> Result<SubsetMask> {
        other.check(s)?;
        self.mask_of(&other.labels_of(s))
    }

    /// Every subset of the ground set, in increasing bit order.
    pub fn all_subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..=self.full().0).map(SubsetMask)
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}
