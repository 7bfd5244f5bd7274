//! Finite measure spaces and the construction of all their extensions.
//!
//! σ-algebras on a finite ground set are stored as atom partitions and
//! measures as exact extended rationals per atom. On top of that the crate
//! provides filters and ultrafilters with the countable intersection
//! property, embeddings of measure spaces, extension kits (blown-up points
//! plus a pasted null space) that generate every extension of a given space,
//! the inverse decomposition, a brute-force enumeration of extensions used
//! as an oracle, and product spaces with the ultrafilter lifting and
//! projection maps.
//!
//! ```
//! use measext_core::{GroundSet, SigmaAlgebra, MeasureSpace, ExtReal, enumerate_extensions};
//!
//! let ground = GroundSet::new(["a"]).unwrap();
//! let base = MeasureSpace::new(SigmaAlgebra::discrete(ground), vec![ExtReal::one()]).unwrap();
//! let extensions = enumerate_extensions(&base, &["p", "q"]).unwrap();
//! assert_eq!(extensions.len(), 5);
//! ```

pub mod embeddings;
pub mod error;
pub mod ext_real;
pub mod filters;
pub mod ground;
pub mod json;
pub mod measure;
pub mod partition;
pub mod products;
pub mod sigma;

pub use embeddings::{
    check_measurable_embedding, check_measure_embedding, check_thickness_equivalence,
    classify_outside_points, construct_blowup, construct_extension, decompose_extension,
    enumerate_extensions, validate_kit, DecompositionRecord, EmbeddingFailure, EmbeddingVerdict,
    ExtensionKit, KitForm, KitViolation, OutsidePoint, PointRole,
};
pub use error::{Error, Result};
pub use ext_real::ExtReal;
pub use filters::{
    check_dichotomy, check_sup_property, check_union_membership, classify_family,
    enumerate_ultrafilters, extend_to_ultrafilter, lift_to_superspace, measure_from_ultrafilter,
    principal_ultrafilter, restrict_by_trace, ultrafilter_from_01_measure, FamilyFlags, SetFamily,
    UltrafilterRecord, ZeroOneMeasure,
};
pub use ground::{GroundSet, SubsetMask, ENUMERATION_CAP, MAX_POINTS};
pub use measure::MeasureSpace;
pub use products::{pair_label, product_space, ProductSpace};
pub use sigma::SigmaAlgebra;
