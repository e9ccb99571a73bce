use anncat::ann::check_all;
use anncat::CategoryOps;
use anncat_cli::file::{load, parse, LoadError, Loaded};
use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn anncat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_anncat")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn ann(name: &str) -> anncat::AnnCat {
    match load(&fixture(name)).unwrap().loaded {
        Loaded::Ann(a) => a,
        Loaded::Category(_) => panic!("{name} has no structure"),
    }
}

#[test]
fn ring_z6_has_six_objects() {
    assert_eq!(ann("ring_z6.cat").objects().len(), 6);
}

#[test]
fn raw_tables_match_the_generator() {
    let raw = check_all(&ann("raw_bimodule_z2.cat")).unwrap();
    let generated = check_all(&ann("bimodule_z2_z2_trivial.cat")).unwrap();
    assert!(raw.passed());
    let counts = |r: &anncat::Report| r.checks.iter().map(|c| (c.id.clone(), c.instances)).collect::<Vec<_>>();
    assert_eq!(counts(&raw), counts(&generated));
}

#[test]
fn unknown_morphism_in_compose_is_a_schema_error() {
    let text = "objects = [\"x\"]\ncompose = [[\"id_x\", \"f\", \"id_x\"]]\n";
    match parse(text) {
        Err(LoadError::Schema { key, msg, .. }) => {
            assert_eq!(key, "compose[0]");
            assert!(msg.contains("\"f\""), "{msg}");
        }
        other => panic!("expected a schema error, got {:?}", other.err()),
    }
}

#[test]
fn unknown_keys_are_rejected_with_a_position() {
    match parse("objects = [\"x\"]\ncolour = 3\n") {
        Err(LoadError::Schema { position: Some((line, _)), .. }) => assert_eq!(line, 2),
        other => panic!("expected a schema error, got {:?}", other.err()),
    }
    assert!(parse("[generator]\nkind = \"ring\"\nring = \"Z/2\"\nextra = 1\n").is_err());
}

#[test]
fn incomplete_constraint_table_is_rejected() {
    let text = std::fs::read_to_string(fixture("broken.cat")).unwrap().replace("\"1,1\" = \"e0\"\n", "");
    assert!(matches!(parse(&text), Err(LoadError::Schema { key, .. }) if key == "constraints.c"));
}

#[test]
fn plain_category_loads_without_structure() {
    assert!(
        matches!(parse("objects = [\"x\", \"y\"]\n").unwrap().loaded, Loaded::Category(c) if c.object_count() == 2)
    );
}

#[test]
fn exit_codes() {
    let (code, out, _) = anncat(&["check", fixture("ring_z6.cat").to_str().unwrap(), "--axioms", "all"]);
    assert_eq!(code, 0);
    assert!(out.contains("(2.10)") && out.contains("1296 instances"), "{out}");

    let (code, out, _) = anncat(&["check", fixture("broken.cat").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("witness (A=1, B=1, X=1, Y=1)"), "{out}");

    let (code, _, err) = anncat(&["check", "missing.cat"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));

    let (code, _, _) = anncat(&["check", fixture("ring_z2.cat").to_str().unwrap(), "--axioms", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn embed_prints_faithfulness_and_strictness() {
    let (code, out, _) =
        anncat(&["embed", fixture("bimodule_z2_z2_trivial.cat").to_str().unwrap(), "--probe-depth", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("faithful: yes"));
    for fam in ["aplus", "g", "d", "a", "l", "r", "R"] {
        assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == [fam, "identity"]), "{fam}\n{out}");
    }
}

#[test]
fn pic_fixture_violates_cxx() {
    let p = ann("pic_z2_cxy.cat");
    let c = anncat::constructions::check_cxx_condition(&p);
    assert_eq!(c.failures.len(), 1);
    assert_eq!(c.failures[0].binding, ["X=1"]);
}

#[test]
fn machine_report_lines_are_json() {
    let (_, out, _) = anncat(&["check", fixture("broken.cat").to_str().unwrap(), "--report", "machine"]);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let fail = lines.iter().find(|v| v["verdict"] == "fail" && v.get("binding").is_some()).unwrap();
    assert_eq!(fail["diagram"], "2.12");
}
