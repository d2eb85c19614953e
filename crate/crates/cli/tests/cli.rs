use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn bfz2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bfz2"))
        .args(args)
        .env("BFZ2_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn grade_diagram_prints_the_table() {
    let o = bfz2(&["grade-diagram", &path("figure2.json")]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows[0], "x\t[1, 3]\t(1 3 2 4)\t(1 3 4 2)\t-1\t1\t-1\t1");
    assert_eq!(rows[3], "w\t[2, 4]\t(2 4 1 3)\t(2 4 3 1)\t-1\t1\t-1\t1");
}

#[test]
fn canonical_lagrangian_text_and_json() {
    let o = bfz2(&["canonical-lagrangian", &path("antipodal.json")]);
    assert!(stdout(&o).starts_with("l_Z = (-e4, -e2+e3)\n"));
    assert!(stdout(&o).contains("L prefix: (-e4, -e2+e3), (-e4, e2-e3)"));
    let j = bfz2(&[
        "--format",
        "json",
        "canonical-lagrangian",
        &path("antipodal.json"),
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["l_z"], serde_json::json!([[0, 0, 0, -1], [0, -1, 1, 0]]));
    assert_eq!(v["h1_prefix"].as_array().unwrap().len(), 21);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "verify",
        "algebra",
        "--genus",
        "2",
        "--samples",
        "3000",
        "--seed",
        "7",
    ];
    let a = bfz2(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_bfz2"))
        .args(args)
        .env("BFZ2_THREADS", "1")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn absolute_and_pairing() {
    let o = bfz2(&[
        "absolute-grade",
        &path("figure2.json"),
        "--hz",
        &path("hz_antipodal.json"),
    ]);
    assert!(stdout(&o).contains("glued chi -1 -> 1"));
    let o = bfz2(&[
        "pair",
        &path("hz_ainf.json"),
        &path("figure2_typed.json"),
        &path("hz_antipodal.json"),
        &path("figure2.json"),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("constant offset 0"));
    let o = bfz2(&["box", &path("hz_ainf.json"), &path("figure2_typed.json")]);
    assert!(stdout(&o).contains("d⊠y\tm = 1\t∂ = b⊠y"));
}

#[test]
fn modules_and_domains() {
    assert!(bfz2(&["validate-module", &path("figure2_typed.json")])
        .status
        .success());
    assert!(bfz2(&["validate-module", &path("hz_ainf.json")]).status.success());
    for f in ["bigon.json", "az_interleaved.json", "boundary_strip.json"] {
        let o = bfz2(&["index", &path(f)]);
        assert!(stdout(&o).ends_with("ind = 1\n"), "{f}: {}", stdout(&o));
    }
}

#[test]
fn invalid_inputs_fail() {
    let o = bfz2(&["validate-circle", &path("invalid_genus1.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("surgery circles 3"));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"genus": 1, "matchng": [[1, 3], [2, 4]]}}"#).unwrap();
    let o = bfz2(&["grade-algebra", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("matchng"));
    assert_eq!(bfz2(&["verify", "nonsense"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_bfz2"))
        .args(["verify", "tables"])
        .env("BFZ2_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_laws_on_a_circle() {
    let o = bfz2(&[
        "verify",
        "--laws",
        "algebra",
        &path("split1.json"),
        "--exhaustive",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all suites pass"));
    let o = bfz2(&["verify", "all", "--genus", "1", "--exhaustive"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn algebra_table_by_strands() {
    let o = bfz2(&["algebra-table", &path("split1.json"), "--strands", "0"]);
    assert_eq!(stdout(&o), "I{}\t[] -> []\n1 generators\n");
    let text = stdout(&bfz2(&["algebra-table", &path("split1.json"), "--strands", "1"]));
    assert!(text.starts_with("I{1}\t[1] -> [1]\nI{2}\t[2] -> [2]\n"), "{text}");
    let g = bfz2(&["grade-algebra", &path("split1.json")]);
    assert!(stdout(&g).lines().next().unwrap().contains("m = "));
}
