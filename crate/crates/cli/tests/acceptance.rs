//! Acceptance suite. Each criterion runs exhaustively over small instances,
//! prints one PASS/FAIL line, and fails the run if any criterion fails.
//!
//!  1. finite dichotomy: one fixed c.i.p. ultrafilter per atom, none else
//!  2. dichotomy and union-membership laws for every ultrafilter
//!  3. ultrafilters and non-trivial {0,1}-measures are in bijection
//!  4. every valid kit constructs a space embedding its base, base thick
//!  5. decompose then construct reproduces every enumerated extension
//!  6. blow-up form agrees with the ultrafilter form when points separate
//!  7. embedded iff thick with the induced measure, incl. perturbed λ
//!  8. product algebra, lift/project and fixedness of product ultrafilters
//!  9. command-line golden files

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use measext_core::json::{to_canonical_json, SpaceDoc};
use measext_core::partition::set_partitions;
use measext_core::{
    check_dichotomy, check_measure_embedding, check_sup_property, check_thickness_equivalence,
    check_union_membership, construct_extension, decompose_extension, enumerate_extensions, enumerate_ultrafilters,
    measure_from_ultrafilter, principal_ultrafilter, product_space, ultrafilter_from_01_measure, validate_kit, Error,
    ExtReal, ExtensionKit, GroundSet, KitForm, MeasureSpace, SetFamily, SigmaAlgebra, SubsetMask, ZeroOneMeasure,
};

const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

fn ground(n: usize) -> GroundSet {
    GroundSet::new(LABELS[..n].iter().copied()).unwrap()
}

/// Every σ-algebra on the first `n` labels.
fn algebras(n: usize) -> Vec<SigmaAlgebra> {
    set_partitions(n)
        .map(|blocks| SigmaAlgebra::from_atoms(ground(n), blocks).unwrap())
        .collect()
}

fn ext(s: &str) -> ExtReal {
    s.parse().unwrap()
}

/// All value vectors of length `k` over `choices`.
fn value_vectors(k: usize, choices: &[ExtReal]) -> Vec<Vec<ExtReal>> {
    (0..k).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                choices.iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect()
    })
}

fn members(alg: &SigmaAlgebra) -> Vec<SubsetMask> {
    alg.members().collect()
}

// ---------------------------------------------------------------------------

/// Up-closed families of the member list, given as bitsets over member
/// indices, that are proper filters and maximal. Uses only set operations on
/// masks.
fn brute_force_ultrafilters(ms: &[SubsetMask], full: SubsetMask) -> Vec<BTreeSet<SubsetMask>> {
    let idx: BTreeMap<SubsetMask, usize> = ms.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut found = Vec::new();
    for fam in 1u64..(1u64 << ms.len()) {
        let has = |m: SubsetMask| fam >> idx[&m] & 1 == 1;
        let inside: Vec<SubsetMask> = ms.iter().copied().filter(|&m| has(m)).collect();
        let up_closed = inside
            .iter()
            .all(|&a| ms.iter().filter(|&&b| a.is_subset_of(b)).all(|&b| has(b)));
        if !up_closed || has(SubsetMask::EMPTY) {
            continue;
        }
        let meets_closed = inside.iter().all(|&a| inside.iter().all(|&b| has(a & b)));
        let maximal = ms.iter().all(|&b| has(b) || has(full - b));
        if meets_closed && maximal {
            found.push(inside.into_iter().collect());
        }
    }
    found
}

fn criterion_1() -> Result<String, String> {
    let mut algebras_seen = 0;
    let mut ultrafilters_seen = 0;
    for n in 1..=4 {
        for alg in algebras(n) {
            algebras_seen += 1;
            let ufs = enumerate_ultrafilters(&alg);
            if ufs.len() != alg.atoms().len() {
                return Err(format!("{:?}: {} ultrafilters", alg.atom_labels(), ufs.len()));
            }
            for u in &ufs {
                let f = u.flags();
                if !(f.is_ultrafilter && f.has_cip && !f.is_free) {
                    return Err(format!("{:?}: {f:?}", alg.atom_labels()));
                }
            }
            let listed: BTreeSet<BTreeSet<SubsetMask>> =
                ufs.iter().map(|u| u.family().members().clone()).collect();
            let brute: BTreeSet<BTreeSet<SubsetMask>> =
                brute_force_ultrafilters(&members(&alg), alg.full()).into_iter().collect();
            if listed != brute {
                return Err(format!("{:?}: brute force disagrees", alg.atom_labels()));
            }
            ultrafilters_seen += ufs.len();
        }
    }
    if algebras_seen != 1 + 2 + 5 + 15 {
        return Err(format!("{algebras_seen} algebras"));
    }
    Ok(format!("{algebras_seen} algebras, {ultrafilters_seen} ultrafilters"))
}

fn criterion_2() -> Result<String, String> {
    let mut checks = 0usize;
    for n in 1..=4 {
        for alg in algebras(n) {
            let ms = members(&alg);
            for u in enumerate_ultrafilters(&alg) {
                for &b in &ms {
                    if !check_dichotomy(&u, b).map_err(|e| e.to_string())? {
                        return Err(format!("dichotomy fails at {}", alg.ground().render(b)));
                    }
                    checks += 1;
                }
                let mut lists: Vec<Vec<SubsetMask>> = vec![vec![]];
                for _ in 0..3 {
                    lists = lists
                        .iter()
                        .flat_map(|l| {
                            ms.iter().map(move |&m| {
                                let mut l = l.clone();
                                l.push(m);
                                l
                            })
                        })
                        .collect();
                    for l in &lists {
                        if !check_union_membership(&u, l).map_err(|e| e.to_string())? {
                            return Err(format!("union membership fails for {l:?}"));
                        }
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checks} checks"))
}

fn criterion_3() -> Result<String, String> {
    let mut pairs = 0;
    for n in 1..=4 {
        for alg in algebras(n) {
            let k = alg.atoms().len();
            let ufs = enumerate_ultrafilters(&alg);
            let mut images = BTreeSet::new();
            for u in &ufs {
                let m = measure_from_ultrafilter(u).map_err(|e| e.to_string())?;
                if ultrafilter_from_01_measure(&m).map_err(|e| e.to_string())? != *u {
                    return Err("ultrafilter does not round-trip".into());
                }
                images.insert(m.unit_atom());
            }
            if images.len() != ufs.len() {
                return Err("measure_from_ultrafilter is not injective".into());
            }
            let mut nontrivial = 0;
            for values in value_vectors(k, &[ExtReal::zero(), ExtReal::one()]) {
                let ones = values.iter().filter(|v| **v == ExtReal::one()).count();
                let ms = MeasureSpace::new(alg.clone(), values).unwrap();
                match (ones, ZeroOneMeasure::from_measure_space(&ms)) {
                    (0, Ok(m)) => {
                        if ultrafilter_from_01_measure(&m) != Err(Error::TrivialMeasure) {
                            return Err("trivial measure produced an ultrafilter".into());
                        }
                    }
                    (1, Ok(m)) => {
                        nontrivial += 1;
                        let u = ultrafilter_from_01_measure(&m).map_err(|e| e.to_string())?;
                        if measure_from_ultrafilter(&u).map_err(|e| e.to_string())? != m {
                            return Err("measure does not round-trip".into());
                        }
                        if !images.contains(&m.unit_atom()) {
                            return Err("measure_from_ultrafilter is not surjective".into());
                        }
                        // null sets, computed from the values: never all of X
                        let cover = alg
                            .members()
                            .filter(|&b| ms.measure_of(b).unwrap().is_zero())
                            .fold(SubsetMask::EMPTY, |acc, b| acc | b);
                        if cover == alg.full() || m.null_cover() != cover {
                            return Err("null sets of a non-trivial measure cover X".into());
                        }
                        let any = SetFamily::new(alg.clone(), [alg.full()]).unwrap();
                        if !matches!(check_sup_property(&m, &any), Err(Error::NullSetsDoNotCover(_))) {
                            return Err("sup property accepted uncovered null sets".into());
                        }
                    }
                    (_, Err(Error::NotZeroOne(_))) if ones >= 2 => {}
                    (ones, other) => return Err(format!("{ones} unit atoms gave {other:?}")),
                }
            }
            if nontrivial != ufs.len() {
                return Err(format!("{nontrivial} measures for {} ultrafilters", ufs.len()));
            }
            pairs += nontrivial;
        }
    }
    Ok(format!("{pairs} ultrafilter/measure pairs"))
}

// ---------------------------------------------------------------------------

/// Every kit over `base` with `|Z| ≤ 1` and fibers of size ≤ 2.
fn kits(base: &MeasureSpace) -> Vec<ExtensionKit> {
    let alg = base.algebra();
    let bs = members(alg);
    let mut out = Vec::new();
    let pasted_spaces = [
        SigmaAlgebra::trivial(GroundSet::empty()),
        SigmaAlgebra::discrete(GroundSet::new(["z"]).unwrap()),
    ];
    for pasted in pasted_spaces {
        let ds = members(&pasted);
        // nonempty subfamilies of 𝒟
        let choices: Vec<BTreeSet<SubsetMask>> = (1u32..(1 << ds.len()))
            .map(|sel| ds.iter().enumerate().filter(|(i, _)| sel >> i & 1 == 1).map(|(_, &d)| d).collect())
            .collect();
        let dfamilies = bs.iter().fold(vec![BTreeMap::new()], |acc, &b| {
            acc.into_iter()
                .flat_map(|m| {
                    choices.iter().map(move |c| {
                        let mut m = m.clone();
                        m.insert(b, c.clone());
                        m
                    })
                })
                .collect::<Vec<_>>()
        });
        let sizes = alg.atoms().iter().fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|v: Vec<usize>| {
                    (0..=2).map(move |s| {
                        let mut v = v.clone();
                        v.push(s);
                        v
                    })
                })
                .collect::<Vec<_>>()
        });
        for dfamily in &dfamilies {
            for fiber_sizes in &sizes {
                let mut kit = ExtensionKit {
                    base: base.clone(),
                    pasted: pasted.clone(),
                    dfamily: dfamily.clone(),
                    fibers: BTreeMap::new(),
                };
                for (&atom, &size) in alg.atoms().iter().zip(fiber_sizes) {
                    if size > 0 {
                        kit.add_fiber_of_size(atom, size).unwrap();
                    }
                }
                out.push(kit);
            }
        }
    }
    out
}

fn criterion_4() -> Result<String, String> {
    let values = [ext("0"), ext("1"), ext("inf")];
    let (mut valid, mut invalid) = (0, 0);
    for n in 1..=2 {
        for alg in algebras(n) {
            for vs in value_vectors(alg.atoms().len(), &values) {
                let base = MeasureSpace::new(alg.clone(), vs).unwrap();
                for kit in kits(&base) {
                    if !validate_kit(&kit).is_empty() {
                        invalid += 1;
                        if !matches!(construct_extension(&kit), Err(Error::InvalidKit(_))) {
                            return Err("an invalid kit was constructed".into());
                        }
                        continue;
                    }
                    valid += 1;
                    let big = construct_extension(&kit).map_err(|e| e.to_string())?;
                    let x = big.ground().locate(base.ground()).map_err(|e| e.to_string())?;
                    if !check_measure_embedding(&base, &big).map_err(|e| e.to_string())?.holds() {
                        return Err(format!("not embedded: {:?}", big.algebra().atom_labels()));
                    }
                    if !big.is_thick(x).map_err(|e| e.to_string())? {
                        return Err(format!("X not thick: {:?}", big.algebra().atom_labels()));
                    }
                }
            }
        }
    }
    if valid == 0 || invalid == 0 {
        return Err(format!("degenerate kit corpus: {valid} valid, {invalid} invalid"));
    }
    Ok(format!("{valid} valid kits constructed, {invalid} invalid kits rejected"))
}

// ---------------------------------------------------------------------------

/// Number of partitions of `n_x + m` points whose blocks cut `X` into
/// exactly `atoms`, by labelling points with block numbers in first-use
/// order.
fn partition_trace_count(n_x: usize, m: usize, atoms: &[SubsetMask]) -> usize {
    let n = n_x + m;
    let want: BTreeSet<SubsetMask> = atoms.iter().copied().collect();
    let mut count = 0;
    let mut labels = vec![0usize; n];
    loop {
        // keep labellings in restricted growth form: one per partition
        let canonical = (0..n).all(|i| labels[i] <= labels[..i].iter().map(|&l| l + 1).max().unwrap_or(0));
        if canonical {
            let blocks = labels.iter().copied().max().map_or(0, |b| b + 1);
            let traces: BTreeSet<SubsetMask> = (0..blocks)
                .map(|b| SubsetMask::from_indices((0..n_x).filter(|&i| labels[i] == b)))
                .filter(|t| !t.is_empty())
                .collect();
            if traces == want {
                count += 1;
            }
        }
        let mut i = 0;
        while i < n {
            labels[i] += 1;
            if labels[i] < n {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

/// The independent side of the embedding biconditional: `X` is thick (every
/// atom outside `X` is null) and, for each atom `b` of `ℬ`, the union of the
/// atoms of `𝒞` tracing into `b` has measure `μ(b)`.
fn thick_with_induced_measure(base: &MeasureSpace, big: &MeasureSpace) -> bool {
    let g = big.ground();
    let x = g.locate(base.ground()).unwrap();
    let atoms = big.algebra().atoms();
    let thick = atoms
        .iter()
        .zip(big.values())
        .all(|(&a, v)| a.meets(x) || v.is_zero());
    thick
        && base.algebra().atoms().iter().zip(base.values()).all(|(&b, mu)| {
            let b_in_y = g.translate(base.ground(), b).unwrap();
            let lambda: ExtReal = atoms
                .iter()
                .zip(big.values())
                .filter(|(&a, _)| a.meets(x) && (a & x).is_subset_of(b_in_y))
                .map(|(_, v)| v)
                .sum();
            lambda == *mu
        })
}

struct SuiteTotals {
    bases: usize,
    extensions: usize,
    separated: usize,
    perturbed: usize,
    perturbed_false: usize,
}

/// Criteria 5, 6 and 7 share one pass over the same bases and extensions.
fn extension_suite() -> Result<SuiteTotals, String> {
    let values = [ext("0"), ext("1"), ext("2"), ext("inf")];
    let extras = ["p", "q"];
    let mut t = SuiteTotals {
        bases: 0,
        extensions: 0,
        separated: 0,
        perturbed: 0,
        perturbed_false: 0,
    };
    for n in 1..=3 {
        for alg in algebras(n) {
            for vs in value_vectors(alg.atoms().len(), &values) {
                let base = MeasureSpace::new(alg.clone(), vs).unwrap();
                t.bases += 1;
                for m in 0..=2 {
                    let exts = enumerate_extensions(&base, &extras[..m]).map_err(|e| e.to_string())?;
                    let expected = partition_trace_count(n, m, alg.atoms());
                    if exts.len() != expected {
                        return Err(format!("{} extensions, oracle says {expected}", exts.len()));
                    }
                    for big in &exts {
                        t.extensions += 1;
                        let x = SubsetMask::full(n);
                        let rec = decompose_extension(big, x).map_err(|e| e.to_string())?;
                        let rebuilt = rec.reconstruct().map_err(|e| e.to_string())?;
                        let canon = |s: &MeasureSpace| to_canonical_json(&SpaceDoc::from_measure(s)).unwrap();
                        if canon(&rebuilt) != canon(big) {
                            return Err(format!("round trip differs:\n{}\n{}", canon(big), canon(&rebuilt)));
                        }

                        // criterion 6
                        if alg.separates_points() {
                            t.separated += 1;
                            if rec.form() != KitForm::Blowup || rec.kit.fibers.keys().any(|k| k.len() != 1) {
                                return Err("separating base gave a non-singleton fiber key".into());
                            }
                            let blown = rec.reconstruct_blowup().map_err(|e| e.to_string())?;
                            if blown != rebuilt {
                                return Err("blow-up form differs from ultrafilter form".into());
                            }
                        }

                        // criterion 7, the extension itself and every single-atom perturbation
                        let mut candidates = vec![big.clone()];
                        for i in 0..big.values().len() {
                            for v in &values {
                                let mut vs = big.values().to_vec();
                                vs[i] = v.clone();
                                candidates.push(MeasureSpace::new(big.algebra().clone(), vs).unwrap());
                            }
                        }
                        for (i, cand) in candidates.iter().enumerate() {
                            let lhs = check_measure_embedding(&base, cand).map_err(|e| e.to_string())?.holds();
                            if i == 0 && !lhs {
                                return Err("enumerated extension is not embedded".into());
                            }
                            if lhs != thick_with_induced_measure(&base, cand) {
                                return Err(format!("biconditional fails on {:?}", cand.values()));
                            }
                            if !check_thickness_equivalence(&base, cand).map_err(|e| e.to_string())? {
                                return Err("library equivalence check disagrees".into());
                            }
                            t.perturbed += 1;
                            t.perturbed_false += usize::from(!lhs);
                        }
                    }
                }
            }
        }
    }

    // the two fixed counts
    let one = MeasureSpace::new(SigmaAlgebra::discrete(ground(1)), vec![ext("1")]).unwrap();
    let n = enumerate_extensions(&one, &["p", "q"]).map_err(|e| e.to_string())?.len();
    let trivial = MeasureSpace::new(SigmaAlgebra::trivial(ground(2)), vec![ext("1")]).unwrap();
    let none: [&str; 0] = [];
    let k = enumerate_extensions(&trivial, &none).map_err(|e| e.to_string())?.len();
    if (n, k) != (5, 1) {
        return Err(format!("expected 5 and 1 extensions, got {n} and {k}"));
    }
    Ok(t)
}

// ---------------------------------------------------------------------------

/// Closure of `gens` under complement and union inside `2^(n)`, by
/// fixpoint iteration over plain bitsets.
fn closure(n: usize, gens: &[SubsetMask]) -> BTreeSet<SubsetMask> {
    let full = SubsetMask::full(n);
    let mut set: BTreeSet<SubsetMask> = gens.iter().copied().collect();
    set.insert(SubsetMask::EMPTY);
    loop {
        let current: Vec<SubsetMask> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            set.insert(full - a);
            for &b in &current {
                set.insert(a | b);
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

fn criterion_8() -> Result<String, String> {
    let mut products = 0;
    let mut lifts = 0;
    let spaces: Vec<MeasureSpace> = (1..=3)
        .flat_map(algebras)
        .map(|alg| {
            let k = alg.atoms().len();
            let vs = (0..k).map(|i| [ext("1"), ext("0"), ext("inf")][i % 3].clone()).collect();
            MeasureSpace::new(alg, vs).unwrap()
        })
        .collect();
    for l in &spaces {
        for r in &spaces {
            let p = product_space(l, r).map_err(|e| e.to_string())?;
            products += 1;
            let rectangles: Vec<SubsetMask> = l
                .algebra()
                .members()
                .flat_map(|a| r.algebra().members().map(move |b| (a, b)))
                .map(|(a, b)| p.rectangle(a, b))
                .collect();
            let generated = closure(p.product().ground().len(), &rectangles);
            let atom_products: BTreeSet<SubsetMask> = p.product().algebra().members().collect();
            if generated != atom_products {
                return Err("rectangle closure differs from the atom products".into());
            }
            for a in l.algebra().members() {
                for b in r.algebra().members() {
                    let lhs = p.product().measure_of(p.rectangle(a, b)).unwrap();
                    if lhs != l.measure_of(a).unwrap() * r.measure_of(b).unwrap() {
                        return Err("product measure of a rectangle".into());
                    }
                }
            }
            let ufs = enumerate_ultrafilters(p.product().algebra());
            if ufs.iter().any(|h| h.flags().is_free || !h.flags().has_cip) {
                return Err("a product ultrafilter is free or lacks c.i.p.".into());
            }

            if !(l.algebra().separates_points() && r.algebra().separates_points()) {
                continue;
            }
            // measurable singletons: lift and project are inverse on kernels
            for (i, f) in enumerate_ultrafilters(l.algebra()).iter().enumerate() {
                for (j, y) in r.ground().labels().iter().enumerate() {
                    let h = p.lift_ultrafilter(f, y).map_err(|e| e.to_string())?;
                    let (back, side) = p.project_ultrafilter(&h).map_err(|e| e.to_string())?;
                    if back != *f || side != principal_ultrafilter(r.algebra(), j) {
                        return Err(format!("project(lift) differs at atom {i}, point {y}"));
                    }
                    if h.kernel() != p.rectangle(f.kernel(), SubsetMask::singleton(j)) {
                        return Err("lifted kernel".into());
                    }
                    lifts += 1;
                }
            }
            for h in &ufs {
                let (f, g) = p.project_ultrafilter(h).map_err(|e| e.to_string())?;
                let y = r.ground().label(g.kernel().lowest().unwrap());
                if p.lift_ultrafilter(&f, y).map_err(|e| e.to_string())? != *h {
                    return Err("lift(project) differs".into());
                }
            }
        }
    }
    Ok(format!("{products} products, {lifts} lift/project round trips"))
}

fn criterion_9() -> Result<String, String> {
    let n = common::check_goldens()?;
    let (code, out) = common::run_case(&[
        "check-embed",
        "--small",
        "tests/fixtures/x1.json",
        "--big",
        "tests/fixtures/ap_bad.json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    if code != 1 || v["ok"] != false || !v["witness"].is_array() {
        return Err(format!("broken fixture: exit {code}, {out}"));
    }
    Ok(format!("{n} golden cases"))
}

// ---------------------------------------------------------------------------

fn report(id: &str, limit: Duration, f: impl FnOnce() -> Result<String, String>) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|detail| {
        if elapsed <= limit {
            Ok(detail)
        } else {
            Err(format!("{detail}; took {elapsed:.2?}, limit {limit:.0?}"))
        }
    });
    match &outcome {
        Ok(detail) => println!("criterion {id}: PASS ({detail}; {elapsed:.2?})"),
        Err(why) => println!("criterion {id}: FAIL ({why})"),
    }
    outcome.is_ok()
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= report("1 finite dichotomy", secs(1), criterion_1);
    ok &= report("2 ultrafilter laws", secs(5), criterion_2);
    ok &= report("3 ultrafilter/measure dictionary", secs(5), criterion_3);
    ok &= report("4 kit soundness", secs(30), criterion_4);

    let start = Instant::now();
    let suite = catch_unwind(extension_suite).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let suite = suite.and_then(|t| {
        if elapsed <= secs(60) {
            Ok(t)
        } else {
            Err(format!("took {elapsed:.2?}, limit 60s"))
        }
    });
    ok &= report("5 round trip and counts", Duration::MAX, || {
        suite
            .as_ref()
            .map(|t| format!("{} bases, {} extensions; {elapsed:.2?} for 5-7", t.bases, t.extensions))
            .map_err(Clone::clone)
    });
    ok &= report("6 blow-up equivalence", Duration::MAX, || match &suite {
        Ok(t) if t.separated > 0 => Ok(format!("{} extensions of separating bases", t.separated)),
        Ok(_) => Err("no separating base in the suite".into()),
        Err(e) => Err(e.clone()),
    });
    ok &= report("7 thickness biconditional", Duration::MAX, || match &suite {
        Ok(t) if t.perturbed_false > 0 && t.perturbed_false < t.perturbed => Ok(format!(
            "{} spaces, {} not embedded, no exceptions",
            t.perturbed, t.perturbed_false
        )),
        Ok(_) => Err("suite lacks both true and false cases".into()),
        Err(e) => Err(e.clone()),
    });

    ok &= report("8 products", secs(30), criterion_8);
    ok &= report("9 command-line goldens", secs(30), criterion_9);

    if !ok {
        std::process::exit(1);
    }
}
