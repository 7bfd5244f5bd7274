//! Sample spaces shared by the benchmarks.

use measext_core::{ExtReal, ExtensionKit, GroundSet, MeasureSpace, SigmaAlgebra, SubsetMask};

pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// `n` points, every singleton measurable, atom `i` weighted `i + 1`.
pub fn discrete(prefix: &str, n: usize) -> MeasureSpace {
    let algebra = SigmaAlgebra::discrete(GroundSet::new(labels(prefix, n)).unwrap());
    let values = (0..n).map(|i| ExtReal::integer(i as u64 + 1)).collect();
    MeasureSpace::new(algebra, values).unwrap()
}

/// `n` points paired into two-point atoms (the last may be single).
pub fn paired(prefix: &str, n: usize) -> MeasureSpace {
    let ground = GroundSet::new(labels(prefix, n)).unwrap();
    let atoms: Vec<SubsetMask> = (0..n)
        .step_by(2)
        .map(|i| SubsetMask::from_indices(i..(i + 2).min(n)))
        .collect();
    let k = atoms.len();
    let algebra = SigmaAlgebra::from_atoms(ground, atoms).unwrap();
    MeasureSpace::new(algebra, vec![ExtReal::one(); k]).unwrap()
}

/// A kit over `discrete("x", n)` with a two-point fiber on every atom and a
/// two-atom pasted space.
pub fn busy_kit(n: usize) -> ExtensionKit {
    let pasted = ExtensionKit::namespaced_pasted(&["u", "v"], &[&["u"], &["v"]]).unwrap();
    let mut kit = ExtensionKit::with_full_dfamily(discrete("x", n), pasted);
    for atom in kit.base.algebra().atoms().to_vec() {
        kit.add_fiber_of_size(atom, 2).unwrap();
    }
    kit
}
