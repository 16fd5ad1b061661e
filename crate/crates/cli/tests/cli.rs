use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const MANIFEST: &str = env!("CARGO_MANIFEST_DIR");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cprep(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cprep")).args(args).current_dir(MANIFEST).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let r = cprep(&full);
    assert!(r.code != 1, "{args:?}: {}", r.stderr);
    (r.code, serde_json::from_str(&r.stdout).unwrap())
}

fn schema_dir() -> PathBuf {
    Path::new(MANIFEST).join("../../schemas")
}

fn assert_valid(schema: &str, value: &Value) {
    let text = std::fs::read_to_string(schema_dir().join(format!("{schema}.schema.json"))).unwrap();
    let schema_json: Value = serde_json::from_str(&text).unwrap();
    let v = jsonschema::validator_for(&schema_json).unwrap();
    let errors: Vec<String> = v.iter_errors(value).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

/// Compares against `tests/golden/<name>.json`; `CPREP_BLESS=1` rewrites it.
fn golden(name: &str, value: &Value) {
    let path = Path::new(MANIFEST).join("tests/golden").join(format!("{name}.json"));
    let text = serde_json::to_string_pretty(value).unwrap() + "\n";
    if std::env::var_os("CPREP_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(text, expected, "golden {name} differs");
}

#[test]
fn table_of_d8() {
    let r = cprep(&["table", "D(8)"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().filter(|l| l.starts_with("X.")).count(), 5);
    let (_, v) = json(&["table", "D(8)"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_valid("table", &v);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [["table", "Q(16)"], ["omega", "D(12)"], ["socle", "S(4)"]] {
        let a = cprep(&["--format", "json", args[0], args[1]]);
        let b = cprep(&["--format", "json", args[0], args[1]]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn example_goldens() {
    for (name, spec, sub) in [
        ("heis_pair", "paper:ex-heis-pair", "[x]"),
        ("d8cube", "paper:ex-d8cube", "[s1, s2, s3]"),
        ("d8xc4", "paper:ex-d8xc4", "[a^2, c]"),
    ] {
        let (code, v) = json(&["cp-check", spec, "--subgroup", sub]);
        assert_eq!(code, 0, "{name}");
        assert_valid("cp_check", &v);
        golden(&format!("{name}_cp_check"), &v);
    }
}

#[test]
fn heisenberg_pair_report() {
    let (_, v) = json(&["cp-check", "paper:ex-heis-pair", "--subgroup", "[x]"]);
    let entries = v["report"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    for e in entries {
        let both = e["constituents"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["faithful_on_h"] == true && c["center_preserving_on_h"] == true)
            .count();
        assert_eq!(both, 1);
    }
}

#[test]
fn commands_match_schemas() {
    let (_, v) = json(&["socle", "A(4) x C(3)"]);
    assert_valid("socle", &v);
    assert_eq!(v["socle_abelian"]["order"], 12);
    let (_, v) = json(&["gaschutz", "S(4)"]);
    assert_valid("gaschutz", &v);
    assert_eq!(v["faithful_irreducible"], true);
    let (_, v) = json(&["gaschutz", "EA(2,2)"]);
    assert_eq!(v["faithful_irreducible"], false);
    let (_, v) = json(&["induce", "S(4)", "--subgroup", "[g1]"]);
    assert_valid("induce", &v);
    let (_, v) = json(&["omega", "paper:ex-heis-pair"]);
    assert_valid("omega", &v);
    assert_eq!(v["cp_existence"]["agree"], true);
}

#[test]
fn action_file() {
    let (_, v) = json(&["table", "sdp(EA(2,2), C(3), file(\"tests/data/c3_on_v4.json\"))"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    let r = cprep(&["table", "sdp(EA(2,2), C(3), file(\"tests/data/missing.json\"))"]);
    assert_eq!(r.code, 1);
}

#[test]
fn scan_small_config() {
    let (code, v) = json(&["scan", "--config", "tests/data/small.toml", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_valid("scan_report", &v);
    assert_eq!(v["verdict"], "pass");
    let (_, all) = json(&["scan", "--config", "tests/data/small.toml", "--all-subgroups"]);
    assert!(all["subgroups_checked"].as_u64() > v["subgroups_checked"].as_u64());
    let text = cprep(&["scan", "--config", "tests/data/small.toml"]);
    assert!(text.stdout.contains("verdict: pass"));
}

#[test]
fn extension_commands() {
    let (_, v) = json(&["ext", "build", "--base", "C(2)", "--cocycle", "tests/data/c2_cocycle.json"]);
    assert_valid("extension", &v);
    assert_eq!(v["order"], 4);
    let (_, v) = json(&["ext", "reduce", "--base", "C(2)", "--cocycle", "tests/data/c2_cocycle.json"]);
    assert_valid("ext_reduce", &v);
    assert_valid("cocycle", &v["cocycle"]);
    let (_, v) = json(&["ext", "zc", "--total", "D(8)", "--mu", "[z]"]);
    assert_valid("ext_zc", &v);
    assert_eq!(v["equal"], true);
    assert_eq!(v["z_c"]["order"], 1);
    let (_, v) = json(&["ext", "cfaithful", "--total", "Q(8)", "--mu", "[z]"]);
    assert_valid("ext_cfaithful", &v);
    assert_eq!(v["exists"], true);
    let (_, v) = json(&["ext", "split", "--total", "Q(8)", "--mu", "[z]", "--subgroup", "[a]"]);
    assert_valid("ext_split", &v);
    assert_eq!(v["splits"], false);
    let (_, v) = json(&["ext", "split", "--base", "C(2)", "--cocycle", "tests/data/c2_cocycle.json", "--subgroup", "[a]"]);
    assert_eq!(v["splits"], false);
}

#[test]
fn input_errors_exit_one() {
    let r = cprep(&["--format", "json", "table", "C("]);
    assert_eq!(r.code, 1);
    let err: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_valid("error", &err);
    assert_eq!((err["error"]["line"].as_u64(), err["error"]["col"].as_u64()), (Some(1), Some(3)));
    let r = cprep(&["ext", "build", "--base", "C(3)", "--cocycle", "tests/data/bad_cocycle.json"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("cocycle identity fails"), "{}", r.stderr);
    assert_eq!(cprep(&["cp-check", "D(8)", "--subgroup", "[nope]"]).code, 1);
    assert_eq!(cprep(&["table"]).code, 1);
    assert_eq!(cprep(&["ext", "zc", "--total", "D(8)"]).code, 1);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("cprep-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let r = cprep(&["--format", "json", "--out", p, "gaschutz", "C(6)"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid("gaschutz", &v);
    std::fs::remove_file(path).unwrap();
}
