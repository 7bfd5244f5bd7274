//! JSON documents for spaces, families, kits and decompositions.
//!
//! Sets are written as arrays of labels in declared order. Values are
//! rational strings (`"2/3"`) or `"inf"`. [`to_canonical_json`] sorts object
//! keys, so equal documents always serialize to the same bytes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::embeddings::{DecompositionRecord, ExtensionKit, KitForm, PointRole};
use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::filters::{FamilyFlags, SetFamily, UltrafilterRecord};
use crate::ground::{GroundSet, SubsetMask};
use crate::measure::MeasureSpace;
use crate::products::{product_space, ProductSpace};
use crate::sigma::SigmaAlgebra;

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> Result<String> {
    // serde_json's default map is ordered by key
    let value = serde_json::to_value(doc).map_err(|e| Error::Format(e.to_string()))?;
    let mut out = serde_json::to_string_pretty(&value).map_err(|e| Error::Format(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

/// A measurable space, or a measure space when `values` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub atoms: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<ExtReal>>,
    /// Set on product spaces.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Box<FactorsDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorsDoc {
    pub left: SpaceDoc,
    pub right: SpaceDoc,
}

fn atom_masks(ground: &GroundSet, atoms: &[Vec<String>]) -> Result<Vec<SubsetMask>> {
    atoms.iter().map(|a| ground.mask_of(a)).collect()
}

impl SpaceDoc {
    pub fn from_algebra(algebra: &SigmaAlgebra) -> Self {
        SpaceDoc {
            points: algebra.ground().labels().to_vec(),
            atoms: algebra.atom_labels(),
            values: None,
            factors: None,
        }
    }

    pub fn from_measure(ms: &MeasureSpace) -> Self {
        SpaceDoc {
            values: Some(ms.values().to_vec()),
            ..SpaceDoc::from_algebra(ms.algebra())
        }
    }

    pub fn from_product(p: &ProductSpace) -> Self {
        SpaceDoc {
            factors: Some(Box::new(FactorsDoc {
                left: SpaceDoc::from_measure(p.left()),
                right: SpaceDoc::from_measure(p.right()),
            })),
            ..SpaceDoc::from_measure(p.product())
        }
    }

    pub fn ground(&self) -> Result<GroundSet> {
        GroundSet::new(self.points.iter().cloned())
    }

    pub fn has_values(&self) -> bool {
        self.values.is_some()
    }

    /// The σ-algebra, ignoring any values.
    pub fn to_algebra(&self) -> Result<SigmaAlgebra> {
        let ground = self.ground()?;
        let atoms = atom_masks(&ground, &self.atoms)?;
        SigmaAlgebra::from_atoms(ground, atoms)
    }

    /// The measure space; values pair with atoms in the order listed.
    pub fn to_measure(&self) -> Result<MeasureSpace> {
        let values = self.values.as_ref().ok_or(Error::MissingValues)?;
        if values.len() != self.atoms.len() {
            return Err(Error::ValueCount {
                expected: self.atoms.len(),
                found: values.len(),
            });
        }
        let ground = self.ground()?;
        let atoms = atom_masks(&ground, &self.atoms)?;
        let space = MeasureSpace::from_weighted_atoms(ground, atoms.into_iter().zip(values.iter().cloned()).collect())?;
        if self.factors.is_some() {
            self.to_product()?;
        }
        Ok(space)
    }

    /// Rebuilds the product from `factors` and checks it against the listed
    /// points, atoms and values.
    pub fn to_product(&self) -> Result<ProductSpace> {
        let factors = self
            .factors
            .as_ref()
            .ok_or_else(|| Error::Format("space has no `factors`".into()))?;
        let p = product_space(&factors.left.to_measure()?, &factors.right.to_measure()?)?;
        let listed = SpaceDoc {
            factors: None,
            ..self.clone()
        };
        let mut rebuilt = SpaceDoc::from_measure(p.product());
        if listed.values.is_none() {
            rebuilt.values = None;
        }
        if listed.points != rebuilt.points || listed.to_algebra()? != rebuilt.to_algebra()? {
            return Err(Error::Format("space does not match the product of its factors".into()));
        }
        if listed.values.is_some() && listed.to_measure()? != *p.product() {
            return Err(Error::Format("values do not match the product measure".into()));
        }
        Ok(p)
    }
}

/// Input of `generate`: `{"points": [...], "generators": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateDoc {
    pub points: Vec<String>,
    #[serde(default)]
    pub generators: Vec<Vec<String>>,
}

impl GenerateDoc {
    pub fn generate(&self) -> Result<SigmaAlgebra> {
        let ground = GroundSet::new(self.points.iter().cloned())?;
        let generators = atom_masks(&ground, &self.generators)?;
        SigmaAlgebra::generate(ground, &generators)
    }
}

/// Where a family's space lives: inline, or a path to a space document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Inline(SpaceDoc),
    Path(String),
}

/// `{"space": <space or path>, "members": [[...], ...]}`. Ultrafilter
/// output also carries `kernel` and `flags`; both are recomputed on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub space: SpaceRef,
    pub members: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FamilyFlags>,
}

impl FamilyDoc {
    /// The family over `algebra`, which must be the algebra of its space.
    pub fn to_family(&self, algebra: &SigmaAlgebra) -> Result<SetFamily> {
        let members = self
            .members
            .iter()
            .map(|m| algebra.ground().mask_of(m))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(algebra.clone(), members)
    }
}

/// A classified family together with its space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UltrafilterDoc {
    pub space: SpaceDoc,
    pub members: Vec<Vec<String>>,
    pub kernel: Vec<String>,
    pub flags: FamilyFlags,
}

impl UltrafilterDoc {
    /// `space` must describe the algebra of `record`.
    pub fn new(record: &UltrafilterRecord, space: SpaceDoc) -> Self {
        let g = record.algebra().ground();
        UltrafilterDoc {
            space,
            members: record.family().members().iter().map(|&m| g.labels_of(m)).collect(),
            kernel: g.labels_of(record.kernel()),
            flags: record.flags(),
        }
    }
}

/// `{"points": [...], "atoms": [...]}` for the pasted space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PastedDoc {
    pub points: Vec<String>,
    pub atoms: Vec<Vec<String>>,
}

/// An extension kit. `dfamily` and `fibers` are keyed by comma-joined
/// labels of a set of the base (`""` for the empty set).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KitDoc {
    pub base: SpaceDoc,
    pub pasted: PastedDoc,
    pub dfamily: BTreeMap<String, Vec<Vec<String>>>,
    pub fibers: BTreeMap<String, Vec<String>>,
}

fn key_of(ground: &GroundSet, s: SubsetMask) -> String {
    ground.labels_of(s).join(",")
}

fn parse_key(ground: &GroundSet, key: &str) -> Result<SubsetMask> {
    if key.is_empty() {
        return Ok(SubsetMask::EMPTY);
    }
    let labels: Vec<&str> = key.split(',').collect();
    ground.mask_of(&labels)
}

impl KitDoc {
    pub fn from_kit(kit: &ExtensionKit) -> Self {
        let (xg, zg) = (kit.base.ground(), kit.pasted.ground());
        KitDoc {
            base: SpaceDoc::from_measure(&kit.base),
            pasted: PastedDoc {
                points: zg.labels().to_vec(),
                atoms: kit.pasted.atom_labels(),
            },
            dfamily: kit
                .dfamily
                .iter()
                .map(|(&b, ds)| (key_of(xg, b), ds.iter().map(|&d| zg.labels_of(d)).collect()))
                .collect(),
            fibers: kit
                .fibers
                .iter()
                .map(|(&k, labels)| (key_of(xg, k), labels.clone()))
                .collect(),
        }
    }

    /// Parses the kit without validating it; see
    /// [`validate_kit`](crate::validate_kit).
    pub fn to_kit(&self) -> Result<ExtensionKit> {
        let base = self.base.to_measure()?;
        let zg = GroundSet::new(self.pasted.points.iter().cloned())?;
        let pasted = SigmaAlgebra::from_atoms(zg.clone(), atom_masks(&zg, &self.pasted.atoms)?)?;
        let xg = base.ground().clone();
        let mut dfamily = BTreeMap::new();
        for (key, members) in &self.dfamily {
            let b = parse_key(&xg, key)?;
            let ds = members
                .iter()
                .map(|m| zg.mask_of(m))
                .collect::<Result<BTreeSet<_>>>()?;
            if dfamily.insert(b, ds).is_some() {
                return Err(Error::Format(format!("family key `{key}` repeats a set")));
            }
        }
        let mut fibers = BTreeMap::new();
        for (key, labels) in &self.fibers {
            if fibers.insert(parse_key(&xg, key)?, labels.clone()).is_some() {
                return Err(Error::Format(format!("fiber key `{key}` repeats a set")));
            }
        }
        Ok(ExtensionKit {
            base,
            pasted,
            dfamily,
            fibers,
        })
    }
}

/// Role of one point of `Y ∖ X` in a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDoc {
    pub point: String,
    /// `"pasted"` or `"fiber"`.
    pub role: String,
    /// The kernel of the fiber's ultrafilter, for fiber points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<String>>,
}

/// A kit plus where each outside point went.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    #[serde(flatten)]
    pub kit: KitDoc,
    pub point_assignment: Vec<AssignmentDoc>,
    pub z_part: Vec<String>,
    /// `"blowup"` when every fiber key is a single point, otherwise
    /// `"ultrafilter_only"`.
    pub form: String,
}

impl DecompositionDoc {
    pub fn new(rec: &DecompositionRecord) -> Self {
        let xg = rec.kit.base.ground();
        DecompositionDoc {
            kit: KitDoc::from_kit(&rec.kit),
            point_assignment: rec
                .point_assignment
                .iter()
                .map(|(p, role)| AssignmentDoc {
                    point: rec.ground.label(*p).to_string(),
                    role: match role {
                        PointRole::Pasted => "pasted".into(),
                        PointRole::Fiber(_) => "fiber".into(),
                    },
                    kernel: match role {
                        PointRole::Pasted => None,
                        PointRole::Fiber(k) => Some(xg.labels_of(*k)),
                    },
                })
                .collect(),
            z_part: rec.ground.labels_of(rec.z_part),
            form: match rec.form() {
                KitForm::Blowup => "blowup".into(),
                KitForm::UltrafilterOnly => "ultrafilter_only".into(),
            },
        }
    }
}
