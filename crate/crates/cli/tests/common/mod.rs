//! Golden cases for the command line. Paths are relative to the crate root,
//! which is the working directory of `cargo test`.

use std::fs;
use std::path::Path;

/// name, arguments after the program name, expected exit code
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("generate", &["generate", "--space", "tests/fixtures/gen.json"], 0),
    ("atoms", &["atoms", "--space", "tests/fixtures/abc.json"], 0),
    ("measure", &["measure", "--space", "tests/fixtures/abc.json", "--set", r#"["b","c"]"#], 0),
    ("inner", &["inner", "--space", "tests/fixtures/abc.json", "--set", r#"["a","b"]"#], 0),
    ("outer", &["outer", "--space", "tests/fixtures/abc.json", "--set", r#"["b"]"#], 0),
    ("thick_yes", &["thick", "--space", "tests/fixtures/ap.json", "--set", r#"["a"]"#], 0),
    ("thick_no", &["thick", "--space", "tests/fixtures/abc.json", "--set", r#"["a"]"#], 1),
    ("ultrafilters", &["ultrafilters", "--space", "tests/fixtures/abc_discrete.json"], 0),
    ("classify_family", &["classify-family", "--space", "tests/fixtures/family_not_filter.json"], 0),
    ("extend_uf", &["extend-uf", "--space", "tests/fixtures/family_base.json"], 0),
    ("uf_to_measure", &["uf-to-measure", "--space", "tests/fixtures/uf_b.json"], 0),
    ("measure_to_uf", &["measure-to-uf", "--space", "tests/fixtures/zero_one.json"], 0),
    ("check_embed_ok", &["check-embed", "--small", "tests/fixtures/x1.json", "--big", "tests/fixtures/ap.json"], 0),
    (
        "check_embed_broken",
        &["check-embed", "--small", "tests/fixtures/x1.json", "--big", "tests/fixtures/ap_bad.json"],
        1,
    ),
    ("decompose", &["decompose", "--space", "tests/fixtures/apz.json", "--set", r#"["a"]"#], 0),
    ("construct_identity", &["construct", "--kit", "tests/fixtures/identity_kit.json"], 0),
    ("construct_blowup", &["construct", "--kit", "tests/fixtures/blowup_kit.json"], 0),
    ("validate_kit_ok", &["validate-kit", "--kit", "tests/fixtures/blowup_kit.json"], 0),
    ("validate_kit_bad", &["validate-kit", "--kit", "tests/fixtures/bad_kit.json"], 1),
    (
        "enumerate_extensions",
        &["enumerate-extensions", "--space", "tests/fixtures/x1.json", "--extra", "p,q"],
        0,
    ),
    ("classify_points", &["classify-points", "--space", "tests/fixtures/apz.json", "--set", r#"["a"]"#], 0),
    ("product", &["product", "--left", "tests/fixtures/left.json", "--right", "tests/fixtures/right.json"], 0),
    (
        "section",
        &["section", "--space", "tests/fixtures/product.json", "--set", r#"["(a|1)","(b|2)","(c|2)"]"#, "--point", "2"],
        0,
    ),
    (
        "lift_uf",
        &["lift-uf", "--left", "tests/fixtures/left_uf.json", "--right", "tests/fixtures/right.json", "--point", "2"],
        0,
    ),
    ("project_uf", &["project-uf", "--space", "tests/fixtures/product_uf.json"], 0),
    ("error_malformed", &["measure", "--space", "tests/fixtures/malformed.json", "--set", "[]"], 2),
    ("error_usage", &["frobnicate"], 2),
    (
        "error_not_fresh",
        &["enumerate-extensions", "--space", "tests/fixtures/x1.json", "--extra", "a"],
        2,
    ),
];

pub fn run_case(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = measext_cli::run(std::iter::once("measext").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

/// Runs every case twice and compares with `tests/golden/<name>.json`.
/// With `UPDATE_GOLDEN` set, rewrites the golden files instead.
pub fn check_goldens() -> Result<usize, String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args, expected_code) in CASES {
        let (code, first) = run_case(args);
        let (code2, second) = run_case(args);
        if first != second || code != code2 {
            return Err(format!("{name}: output differs between two runs"));
        }
        if code != *expected_code {
            return Err(format!("{name}: exit {code}, expected {expected_code}\n{first}"));
        }
        let path = Path::new("tests/golden").join(format!("{name}.json"));
        if update {
            fs::write(&path, &first).map_err(|e| e.to_string())?;
            continue;
        }
        let golden = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if golden != first {
            return Err(format!("{name}: output differs from {}\n{first}", path.display()));
        }
        // emitted JSON re-parses to the same bytes
        let value: serde_json::Value = serde_json::from_str(&first).map_err(|e| format!("{name}: {e}"))?;
        let again = measext_core::json::to_canonical_json(&value).map_err(|e| e.to_string())?;
        if again != first {
            return Err(format!("{name}: output is not canonical"));
        }
    }
    Ok(CASES.len())
}
