//! The `measext` command line: every verb reads JSON documents, calls one
//! library operation and prints canonical JSON.
//!
//! Exit codes: `0` success or a true verdict, `1` a false verdict (with a
//! witness), `2` bad input, reported as `{"error": {"code", "message", "path"}}`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use measext_core::json::{
    to_canonical_json, DecompositionDoc, FamilyDoc, GenerateDoc, KitDoc, SpaceDoc, SpaceRef, UltrafilterDoc,
};
use measext_core::{
    check_measurable_embedding, check_measure_embedding, classify_family, classify_outside_points,
    construct_extension, decompose_extension, enumerate_extensions, enumerate_ultrafilters, extend_to_ultrafilter,
    measure_from_ultrafilter, product_space, ultrafilter_from_01_measure, validate_kit, Error, MeasureSpace,
    OutsidePoint, ProductSpace, SigmaAlgebra, SubsetMask, ZeroOneMeasure,
};

#[derive(Debug, Parser)]
#[command(name = "measext", version, about = "Finite measure spaces and their extensions")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// σ-algebra generated by `generators` over `points`.
    Generate(SpaceArg),
    /// Canonical atoms of a space.
    Atoms(SpaceArg),
    /// Measure of a measurable set.
    Measure(SpaceSet),
    /// Inner measure of any set.
    Inner(SpaceSet),
    /// Outer measure of any set.
    Outer(SpaceSet),
    /// Whether a set is thick (exit 1 if not).
    Thick(SpaceSet),
    /// Every ultrafilter of a space.
    Ultrafilters(SpaceArg),
    /// Classify a family of sets.
    ClassifyFamily(SpaceArg),
    /// Extend a filter-base to an ultrafilter.
    ExtendUf(SpaceArg),
    /// The {0,1}-measure of an ultrafilter.
    UfToMeasure(SpaceArg),
    /// The ultrafilter of a {0,1}-measure.
    MeasureToUf(SpaceArg),
    /// Whether `--small` is embedded in `--big` (exit 1 with a witness if not).
    CheckEmbed(SmallBig),
    /// Canonical kit of an extension of the subspace `--set`.
    Decompose(SpaceSet),
    /// Extension generated by a kit.
    Construct(KitArg),
    /// Kit violations (exit 1 if any).
    ValidateKit(KitArg),
    /// Every extension of a space by fresh points.
    EnumerateExtensions(Extra),
    /// Pasted / stuck-to status of the points outside `--set`.
    ClassifyPoints(SpaceSet),
    /// Product of two spaces.
    Product(LeftRight),
    /// Section of a product set at a right point.
    Section(SectionArgs),
    /// Lift a left ultrafilter to the product at a right point.
    LiftUf(LiftArgs),
    /// Project a product ultrafilter onto both factors.
    ProjectUf(SpaceArg),
}

#[derive(Debug, Args)]
struct SpaceArg {
    #[arg(long)]
    space: PathBuf,
}

#[derive(Debug, Args)]
struct SpaceSet {
    #[arg(long)]
    space: PathBuf,
    /// JSON array of labels.
    #[arg(long)]
    set: String,
}

#[derive(Debug, Args)]
struct SmallBig {
    #[arg(long)]
    small: PathBuf,
    #[arg(long)]
    big: PathBuf,
}

#[derive(Debug, Args)]
struct KitArg {
    #[arg(long)]
    kit: PathBuf,
}

#[derive(Debug, Args)]
struct Extra {
    #[arg(long)]
    space: PathBuf,
    /// Comma-separated fresh labels.
    #[arg(long, default_value = "")]
    extra: String,
}

#[derive(Debug, Args)]
struct LeftRight {
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
}

#[derive(Debug, Args)]
struct SectionArgs {
    /// A product space (with `factors`).
    #[arg(long)]
    space: PathBuf,
    #[arg(long)]
    set: String,
    /// A label of the right factor.
    #[arg(long)]
    point: String,
}

#[derive(Debug, Args)]
struct LiftArgs {
    /// An ultrafilter document over the left factor.
    #[arg(long)]
    left: PathBuf,
    /// The right factor.
    #[arg(long)]
    right: PathBuf,
    #[arg(long)]
    point: String,
}

/// A reported input error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: String,
    pub message: String,
    pub path: Option<String>,
}

impl Failure {
    fn new(code: &str, message: impl Into<String>) -> Self {
        Failure {
            code: code.into(),
            message: message.into(),
            path: None,
        }
    }

    fn at(mut self, path: &Path) -> Self {
        self.path.get_or_insert_with(|| path.display().to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"code": self.code, "message": self.message, "path": self.path}})
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(e.code(), e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// What a verb produced: a JSON document and whether the verdict was true.
struct Output {
    doc: Value,
    verdict: bool,
}

impl Output {
    fn ok<T: Serialize>(doc: &T) -> Outcome<Output> {
        Ok(Output {
            doc: serde_json::to_value(doc).map_err(|e| Failure::new("internal", e.to_string()))?,
            verdict: true,
        })
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Outcome<T> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new("io", e.to_string()).at(path))?;
    serde_json::from_str(&text).map_err(|e| Failure::new("invalid_json", e.to_string()).at(path))
}

/// A space document with everything it can be turned into.
struct Loaded {
    doc: SpaceDoc,
    algebra: SigmaAlgebra,
    measure: Option<MeasureSpace>,
    product: Option<ProductSpace>,
}

impl Loaded {
    fn from_doc(doc: SpaceDoc) -> Result<Loaded, Error> {
        let algebra = doc.to_algebra()?;
        let product = doc.factors.as_ref().map(|_| doc.to_product()).transpose()?;
        let measure = match &product {
            Some(p) => Some(p.product().clone()),
            None if doc.has_values() => Some(doc.to_measure()?),
            None => None,
        };
        let doc = match (&product, &measure) {
            (Some(p), _) => SpaceDoc::from_product(p),
            (None, Some(m)) => SpaceDoc::from_measure(m),
            (None, None) => SpaceDoc::from_algebra(&algebra),
        };
        Ok(Loaded {
            doc,
            algebra,
            measure,
            product,
        })
    }

    fn measure(&self) -> Result<&MeasureSpace, Error> {
        self.measure.as_ref().ok_or(Error::MissingValues)
    }

    fn product(&self) -> Result<&ProductSpace, Error> {
        self.product
            .as_ref()
            .ok_or_else(|| Error::Format("space has no `factors`".into()))
    }
}

fn load_space(path: &Path) -> Outcome<Loaded> {
    let doc: SpaceDoc = read_json(path)?;
    Loaded::from_doc(doc).map_err(|e| Failure::from(e).at(path))
}

/// A family document with its space resolved; a path is taken relative to
/// the family file.
fn load_family(path: &Path) -> Outcome<(FamilyDoc, Loaded)> {
    let doc: FamilyDoc = read_json(path)?;
    let space = match &doc.space {
        SpaceRef::Inline(s) => Loaded::from_doc(s.clone()).map_err(|e| Failure::from(e).at(path))?,
        SpaceRef::Path(p) => load_space(&path.parent().unwrap_or(Path::new("")).join(p))?,
    };
    Ok((doc, space))
}

fn parse_set(algebra_ground: &measext_core::GroundSet, text: &str) -> Outcome<SubsetMask> {
    let labels: Vec<String> =
        serde_json::from_str(text).map_err(|e| Failure::new("invalid_set", format!("--set: {e}")))?;
    Ok(algebra_ground.mask_of(&labels)?)
}

fn execute(verb: &Verb) -> Outcome<Output> {
    match verb {
        Verb::Generate(a) => {
            let doc: GenerateDoc = read_json(&a.space)?;
            let algebra = doc.generate().map_err(|e| Failure::from(e).at(&a.space))?;
            Output::ok(&SpaceDoc::from_algebra(&algebra))
        }
        Verb::Atoms(a) => {
            let s = load_space(&a.space)?;
            Output::ok(&json!({
                "atoms": s.doc.atoms,
                "member_count": s.algebra.member_count(),
                "separates_points": s.algebra.separates_points(),
            }))
        }
        Verb::Measure(a) | Verb::Inner(a) | Verb::Outer(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let set = parse_set(ms.ground(), &a.set)?;
            let value = match verb {
                Verb::Measure(_) => ms.measure_of(set)?,
                Verb::Inner(_) => ms.inner_measure(set)?,
                _ => ms.outer_measure(set)?,
            };
            Output::ok(&json!({"set": ms.ground().labels_of(set), "value": value}))
        }
        Verb::Thick(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let set = parse_set(ms.ground(), &a.set)?;
            let witness = ms.thickness_witness(set)?;
            let mut doc = json!({"ok": witness.is_none(), "set": ms.ground().labels_of(set)});
            if let Some(w) = witness {
                doc["witness"] = json!(ms.ground().labels_of(w));
                doc["reason"] = json!("measurable set of positive measure outside the set");
            }
            Ok(Output {
                doc,
                verdict: witness.is_none(),
            })
        }
        Verb::Ultrafilters(a) => {
            let s = load_space(&a.space)?;
            let ufs: Vec<Value> = enumerate_ultrafilters(&s.algebra)
                .iter()
                .map(|u| {
                    let d = UltrafilterDoc::new(u, s.doc.clone());
                    json!({"members": d.members, "kernel": d.kernel, "flags": d.flags})
                })
                .collect();
            Output::ok(&json!({"count": ufs.len(), "space": s.doc, "ultrafilters": ufs}))
        }
        Verb::ClassifyFamily(a) | Verb::ExtendUf(a) | Verb::UfToMeasure(a) => {
            let (doc, s) = load_family(&a.space)?;
            let family = doc.to_family(&s.algebra).map_err(|e| Failure::from(e).at(&a.space))?;
            match verb {
                Verb::ClassifyFamily(_) => Output::ok(&UltrafilterDoc::new(&classify_family(family), s.doc)),
                Verb::ExtendUf(_) => Output::ok(&UltrafilterDoc::new(&extend_to_ultrafilter(&family)?, s.doc)),
                _ => {
                    let m = measure_from_ultrafilter(&classify_family(family))?;
                    Output::ok(&SpaceDoc::from_measure(&m.to_measure_space()))
                }
            }
        }
        Verb::MeasureToUf(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let m = ZeroOneMeasure::from_measure_space(ms).map_err(|e| Failure::from(e).at(&a.space))?;
            let u = ultrafilter_from_01_measure(&m)?;
            Output::ok(&UltrafilterDoc::new(&u, SpaceDoc::from_algebra(&s.algebra)))
        }
        Verb::CheckEmbed(a) => {
            let small = load_space(&a.small)?;
            let big = load_space(&a.big)?;
            let verdict = match (&small.measure, &big.measure) {
                (Some(m), Some(l)) => check_measure_embedding(m, l)?,
                _ => check_measurable_embedding(&small.algebra, &big.algebra)?,
            };
            let mut doc = json!({"ok": verdict.holds()});
            if let Some((set, side, reason)) = verdict.witness(small.algebra.ground(), big.algebra.ground()) {
                doc["witness"] = json!(set);
                doc["witness_in"] = json!(side);
                doc["reason"] = json!(reason);
            }
            Ok(Output {
                doc,
                verdict: verdict.holds(),
            })
        }
        Verb::Decompose(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let x = parse_set(ms.ground(), &a.set)?;
            Output::ok(&DecompositionDoc::new(&decompose_extension(ms, x)?))
        }
        Verb::Construct(a) => {
            let kit = load_kit(&a.kit)?;
            Output::ok(&SpaceDoc::from_measure(&construct_extension(&kit)?))
        }
        Verb::ValidateKit(a) => {
            let kit = load_kit(&a.kit)?;
            let violations = validate_kit(&kit);
            let messages: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Ok(Output {
                doc: json!({"ok": violations.is_empty(), "violations": violations, "messages": messages}),
                verdict: violations.is_empty(),
            })
        }
        Verb::EnumerateExtensions(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let extra: Vec<&str> = a.extra.split(',').filter(|e| !e.is_empty()).collect();
            let exts: Vec<SpaceDoc> = enumerate_extensions(ms, &extra)?
                .iter()
                .map(SpaceDoc::from_measure)
                .collect();
            Output::ok(&json!({"count": exts.len(), "extensions": exts}))
        }
        Verb::ClassifyPoints(a) => {
            let s = load_space(&a.space)?;
            let ms = s.measure().map_err(|e| Failure::from(e).at(&a.space))?;
            let x = parse_set(ms.ground(), &a.set)?;
            let points: Vec<Value> = classify_outside_points(ms, x)?
                .into_iter()
                .map(|(p, class)| match class {
                    OutsidePoint::Pasted => json!({"point": p, "kind": "pasted"}),
                    OutsidePoint::SticksTo(to) => json!({"point": p, "kind": "sticks_to", "to": to}),
                    OutsidePoint::Separated => json!({"point": p, "kind": "separated"}),
                })
                .collect();
            Output::ok(&json!({"points": points}))
        }
        Verb::Product(a) => {
            let l = load_space(&a.left)?;
            let r = load_space(&a.right)?;
            let lm = l.measure().map_err(|e| Failure::from(e).at(&a.left))?;
            let rm = r.measure().map_err(|e| Failure::from(e).at(&a.right))?;
            Output::ok(&SpaceDoc::from_product(&product_space(lm, rm)?))
        }
        Verb::Section(a) => {
            let s = load_space(&a.space)?;
            let p = s.product().map_err(|e| Failure::from(e).at(&a.space))?;
            let set = parse_set(p.product().ground(), &a.set)?;
            let section = p.y_section(set, &a.point)?;
            Output::ok(&json!({
                "point": a.point,
                "set": p.product().ground().labels_of(set),
                "section": p.left().ground().labels_of(section),
            }))
        }
        Verb::LiftUf(a) => {
            let (doc, l) = load_family(&a.left)?;
            let r = load_space(&a.right)?;
            let lm = l.measure().map_err(|e| Failure::from(e).at(&a.left))?;
            let rm = r.measure().map_err(|e| Failure::from(e).at(&a.right))?;
            let f = classify_family(doc.to_family(&l.algebra).map_err(|e| Failure::from(e).at(&a.left))?);
            let p = product_space(lm, rm)?;
            let h = p.lift_ultrafilter(&f, &a.point)?;
            Output::ok(&UltrafilterDoc::new(&h, SpaceDoc::from_product(&p)))
        }
        Verb::ProjectUf(a) => {
            let (doc, s) = load_family(&a.space)?;
            let p = s.product().map_err(|e| Failure::from(e).at(&a.space))?;
            let h = classify_family(doc.to_family(&s.algebra).map_err(|e| Failure::from(e).at(&a.space))?);
            let (f, g) = p.project_ultrafilter(&h)?;
            Output::ok(&json!({
                "left": UltrafilterDoc::new(&f, SpaceDoc::from_measure(p.left())),
                "right": UltrafilterDoc::new(&g, SpaceDoc::from_measure(p.right())),
            }))
        }
    }
}

/// Reads a kit, or the kit inside a decomposition document.
fn load_kit(path: &Path) -> Outcome<measext_core::ExtensionKit> {
    let value: Value = read_json(path)?;
    let parsed = if value.get("point_assignment").is_some() {
        serde_json::from_value::<DecompositionDoc>(value).map(|d| d.kit)
    } else {
        serde_json::from_value::<KitDoc>(value)
    };
    let doc = parsed.map_err(|e| Failure::new("invalid_json", e.to_string()).at(path))?;
    doc.to_kit().map_err(|e| Failure::from(e).at(path))
}

/// Runs one command line (including the program name) and writes its JSON
/// to `stdout`, or to `--out` when given. Returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let first = e.to_string().lines().next().unwrap_or_default().to_string();
            let failure = Failure::new("usage", first.trim_start_matches("error: "));
            return emit_failure(&failure, stdout);
        }
    };
    match execute(&cli.verb).and_then(|out| {
        let text = to_canonical_json(&out.doc)?;
        match &cli.out {
            Some(path) => fs::write(path, &text).map_err(|e| Failure::new("io", e.to_string()).at(path))?,
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::new("io", e.to_string()))?,
        }
        Ok(out.verdict)
    }) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => emit_failure(&f, stdout),
    }
}

fn emit_failure(f: &Failure, stdout: &mut dyn Write) -> i32 {
    let text = to_canonical_json(&f.to_json()).unwrap_or_else(|_| "{}\n".into());
    let _ = stdout.write_all(text.as_bytes());
    2
}
