use std::collections::BTreeSet;

use crate::embeddings::kit::{validate_kit, ExtensionKit};
use crate::embeddings::check_measure_embedding;
use crate::error::{Error, Result};
use crate::filters::{principal_ultrafilter, UltrafilterRecord};
use crate::ground::{GroundSet, SubsetMask};
use crate::measure::MeasureSpace;
use crate::sigma::SigmaAlgebra;

/// How a set `B ∈ ℬ` picks up fibers.
enum Indexing {
    /// `S_𝒰` joins `B` when `B ∈ 𝒰`.
    Ultrafilters(Vec<(UltrafilterRecord, SubsetMask)>),
    /// `T_u` joins `B` when `u ∈ B`.
    Points(Vec<(usize, SubsetMask)>),
}

impl Indexing {
    fn fibers_for(&self, b: SubsetMask) -> SubsetMask {
        match self {
            Indexing::Ultrafilters(us) => us
                .iter()
                .filter(|(u, _)| u.contains(b))
                .fold(SubsetMask::EMPTY, |acc, (_, s)| acc | *s),
            Indexing::Points(ts) => ts
                .iter()
                .filter(|(u, _)| b.contains(*u))
                .fold(SubsetMask::EMPTY, |acc, (_, t)| acc | *t),
        }
    }
}

/// Builds the extension generated by a valid kit:
/// `Y = X ∪ ⋃ S_𝒰 ∪ Z`, `𝒞 = {B ∪ ⋃_{B∈𝒰} S_𝒰 ∪ D : B ∈ ℬ, D ∈ 𝒟_B}` and
/// `λ(B ∪ ⋃_{B∈𝒰} S_𝒰 ∪ D) = μ(B)`.
///
/// Points of `Y` are listed as `X`, then each fiber in atom order, then `Z`.
/// The result is checked to be a σ-algebra in which the base is embedded.
pub fn construct_extension(kit: &ExtensionKit) -> Result<MeasureSpace> {
    let layout = Layout::new(kit)?;
    let indexing = Indexing::Ultrafilters(
        layout
            .fibers
            .iter()
            .map(|&(kernel, mask)| {
                let atom = kit
                    .base
                    .algebra()
                    .atoms()
                    .iter()
                    .position(|&a| a == kernel)
                    .expect("validated fiber key");
                (principal_ultrafilter(kit.base.algebra(), atom), mask)
            })
            .collect(),
    );
    assemble(kit, &layout, &indexing)
}

/// The blow-up form of [`construct_extension`]: each fiber is keyed by a
/// point `u` and joins exactly the sets `B ∋ u`. Every fiber key must be a
/// singleton.
pub fn construct_blowup(kit: &ExtensionKit) -> Result<MeasureSpace> {
    let layout = Layout::new(kit)?;
    let points = layout
        .fibers
        .iter()
        .map(|&(kernel, mask)| {
            if kernel.len() == 1 {
                Ok((kernel.lowest().expect("nonempty"), mask))
            } else {
                Err(Error::NotSeparated(kit.base.ground().render(kernel)))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(kit, &layout, &Indexing::Points(points))
}

struct Layout {
    ground: GroundSet,
    x: SubsetMask,
    /// fiber key and its mask in `Y`
    fibers: Vec<(SubsetMask, SubsetMask)>,
    z: SubsetMask,
}

impl Layout {
    fn new(kit: &ExtensionKit) -> Result<Self> {
        let violations = validate_kit(kit);
        if !violations.is_empty() {
            return Err(Error::InvalidKit(violations));
        }
        let ground = GroundSet::new(kit.extension_labels())?;
        let n_x = kit.base.ground().len();
        let mut next = n_x;
        let mut fibers = Vec::new();
        for (kernel, labels) in kit.ordered_fibers() {
            let mask = SubsetMask::from_indices(next..next + labels.len());
            next += labels.len();
            fibers.push((kernel, mask));
        }
        let z = SubsetMask::from_indices(next..ground.len());
        Ok(Layout {
            x: SubsetMask::full(n_x),
            ground,
            fibers,
            z,
        })
    }
}

fn assemble(kit: &ExtensionKit, layout: &Layout, indexing: &Indexing) -> Result<MeasureSpace> {
    let g = &layout.ground;
    let mut family = BTreeSet::new();
    for (&b, ds) in &kit.dfamily {
        // B is already over the first |X| bits of Y
        let head = b | indexing.fibers_for(b);
        for &d in ds {
            family.insert(head | g.expand(layout.z, d));
        }
    }
    let generators: Vec<SubsetMask> = family.iter().copied().collect();
    let algebra = SigmaAlgebra::generate(g.clone(), &generators)?;
    if algebra.member_count() != family.len() || !algebra.members().all(|c| family.contains(&c)) {
        return Err(Error::Invariant("constructed family is not a σ-algebra".into()));
    }
    let values = algebra
        .atoms()
        .iter()
        .map(|&a| kit.base.measure_of(g.restrict(layout.x, a)))
        .collect::<Result<Vec<_>>>()?;
    let space = MeasureSpace::new(algebra, values)?;
    if !check_measure_embedding(&kit.base, &space)?.holds() {
        return Err(Error::Invariant("base is not embedded in the constructed space".into()));
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::tests::space;
    use crate::embeddings::KitViolation;
    use crate::ext_real::ExtReal;

    #[test]
    fn identity_kit_returns_base() {
        let base = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["1/2", "inf"]);
        let out = construct_extension(&ExtensionKit::identity(base.clone())).unwrap();
        assert_eq!(out, base);
    }

    #[test]
    fn single_blowup() {
        let base = space(&["a"], &[&["a"]], &["1"]);
        let mut kit = ExtensionKit::identity(base);
        kit.fibers.insert(SubsetMask::from_bits(1), vec!["p".into()]);
        let out = construct_extension(&kit).unwrap();
        assert_eq!(out.ground().labels(), ["a", "p"]);
        assert_eq!(out.algebra().atom_labels(), vec![vec!["a", "p"]]);
        assert_eq!(out.values(), &[ExtReal::one()]);
        assert_eq!(construct_blowup(&kit).unwrap(), out);
    }

    #[test]
    fn single_pasted_point() {
        let base = space(&["a"], &[&["a"]], &["1"]);
        let z = SigmaAlgebra::discrete(GroundSet::new(["z"]).unwrap());
        let kit = ExtensionKit::with_full_dfamily(base, z);
        let out = construct_extension(&kit).unwrap();
        assert_eq!(out.ground().labels(), ["a", "z"]);
        assert_eq!(out.algebra().atom_labels(), vec![vec!["a"], vec!["z"]]);
        assert_eq!(out.values(), &[ExtReal::one(), ExtReal::zero()]);
    }

    #[test]
    fn fiber_on_coarse_atom() {
        // fibers keyed by a two-point atom: only the ultrafilter form applies
        let base = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["2", "3"]);
        let mut kit = ExtensionKit::identity(base);
        kit.add_fiber_of_size(SubsetMask::from_bits(0b011), 2).unwrap();
        let out = construct_extension(&kit).unwrap();
        assert_eq!(out.ground().labels(), ["a", "b", "c", "a#1", "a#2"]);
        assert_eq!(
            out.algebra().atom_labels(),
            vec![vec!["a", "b", "a#1", "a#2"], vec!["c"]]
        );
        assert_eq!(construct_blowup(&kit), Err(Error::NotSeparated("{a,b}".into())));
    }

    #[test]
    fn invalid_kit_is_rejected_not_repaired() {
        let base = space(&["a"], &[&["a"]], &["1"]);
        let z = SigmaAlgebra::discrete(GroundSet::new(["z"]).unwrap());
        let mut kit = ExtensionKit::with_full_dfamily(base, z);
        for fam in kit.dfamily.values_mut() {
            *fam = BTreeSet::from([SubsetMask::EMPTY]);
        }
        match construct_extension(&kit) {
            Err(Error::InvalidKit(v)) => {
                assert!(matches!(v[0], KitViolation::ComplementMissing { .. }))
            }
            other => panic!("{other:?}"),
        }
    }
}
