use crate::error::{Error, Result};
use crate::ground::{GroundSet, SubsetMask, ENUMERATION_CAP};
use crate::measure::MeasureSpace;
use crate::partition::set_partitions;
use crate::sigma::SigmaAlgebra;

/// Every extension of `base` to `Y = X ∪ extra`, by brute force.
///
/// Each set partition of `Y` is an atom partition of a σ-algebra `𝒞`; it is
/// kept when its trace on `X` is `ℬ`, and then `λ(C) = μ(C ∩ X)` is the only
/// measure embedding the base. Extensions are ordered by their atom masks;
/// label-distinct isomorphic extensions are counted separately.
pub fn enumerate_extensions<S: AsRef<str>>(base: &MeasureSpace, extra: &[S]) -> Result<Vec<MeasureSpace>> {
    let xg = base.ground();
    let n = xg.len() + extra.len();
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            requested: n,
            cap: ENUMERATION_CAP,
        });
    }
    for (i, e) in extra.iter().enumerate() {
        let e = e.as_ref();
        if xg.index_of(e).is_some() || extra[..i].iter().any(|o| o.as_ref() == e) {
            return Err(Error::LabelNotFresh(e.to_string()));
        }
    }
    let labels = xg
        .labels()
        .iter()
        .cloned()
        .chain(extra.iter().map(|e| e.as_ref().to_string()));
    let ground = GroundSet::new(labels)?;
    let x = SubsetMask::full(xg.len());

    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        let algebra = SigmaAlgebra::canonical(ground.clone(), blocks);
        if &algebra.trace(x)? != base.algebra() {
            continue;
        }
        let values = algebra
            .atoms()
            .iter()
            .map(|&a| base.measure_of(ground.restrict(x, a)))
            .collect::<Result<Vec<_>>>()?;
        out.push(MeasureSpace::new(algebra, values)?);
    }
    out.sort_by(|a, b| {
        let key = |m: &MeasureSpace| m.algebra().atoms().iter().map(|a| a.bits()).collect::<Vec<_>>();
        key(a).cmp(&key(b)).then_with(|| a.values().cmp(b.values()))
    });
    Ok(out)
}
