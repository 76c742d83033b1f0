use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const OCTAGON: &str =
    r#"{"dim":2,"vertices":[["1","0"],["2","0"],["3","1"],["3","2"],["2","3"],["1","3"],["0","2"],["0","1"]]}"#;
const TRIANGLE: &str = r#"{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]]}"#;
const SQUARE2: &str = r#"{"dim":2,"vertices":[["0","0"],["2","0"],["2","2"],["0","2"]]}"#;
const CUBE: &str = r#"{"dim":3,"vertices":[["0","0","0"],["1","0","0"],["0","1","0"],["0","0","1"],["1","1","0"],["1","0","1"],["0","1","1"],["1","1","1"]]}"#;
const Z2: &str = r#"{"lattice":[["1/1","0/1"],["0/1","1/1"]]}"#;
const Z3: &str = r#"{"lattice":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;

struct Files(TempDir);

impl Files {
    fn new() -> Files {
        Files(TempDir::new().unwrap())
    }

    fn put(&self, name: &str, body: &str) -> PathBuf {
        let path = self.0.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn run(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tilescope"));
    cmd.env_remove("TILESCOPE_SEED");
    for a in args {
        cmd.arg(a);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_reports_decisions() {
    let f = Files::new();
    let r = json(&run(&[&"analyze", &f.put("o7.json", OCTAGON)]));
    assert_eq!(r["onefold"]["verdict"], "NotTile");
    assert_eq!(r["onefold"]["reason"]["kind"], "BeltWitness");
    assert_eq!(r["belts"]["belts"][0]["size"], 8);
    assert_eq!(r["twofold"]["verdict"], "NotTile");
    assert_eq!(r["volume"], "7/1");
    assert_eq!(r["tool_version"], env!("CARGO_PKG_VERSION"));

    let r = json(&run(&[&"analyze", &f.put("tri.json", TRIANGLE)]));
    assert_eq!(r["onefold"]["reason"]["kind"], "NotCS");
    assert!(r["belts"].is_null());
}

#[test]
fn echoed_input_is_canonical() {
    let f = Files::new();
    let r = json(&run(&[&"analyze", &f.put("o7.json", OCTAGON)]));
    let echoed = f.put("echo.json", &r["input"].to_string());
    let again = json(&run(&[&"analyze", &echoed]));
    assert_eq!(again["input"], r["input"]);
    assert_eq!(r["input"]["vertices"][0], serde_json::json!(["0/1", "1/1"]));
}

#[test]
fn verify_lattice_and_translates() {
    let f = Files::new();
    let o7 = f.put("o7.json", OCTAGON);
    let r = json(&run(&[&"verify", &o7, &"--lattice", &f.put("z2.json", Z2)]));
    assert_eq!(r["multiplicity"]["verdict"]["kind"], "Constant");
    assert_eq!(r["multiplicity"]["verdict"]["k"], 7);
    assert_eq!(r["multiplicity"]["method"]["kind"], "Exact2D");
    assert_eq!(r["multiplicity"]["volume_identity"]["consistent"], true);

    let x = f.put("x.json", r#"{"translates":[{"v":["0","0"],"m":2},{"v":["1","0"],"m":1}]}"#);
    let r = json(&run(&[&"verify", &o7, &"--translates", &x, &"--point", &"3/2,3/2", &"--point", &"5/2,1/4"]));
    assert_eq!(r["multiplicities"][0]["multiplicity"], 3);
    assert_eq!(r["multiplicities"][1]["multiplicity"], 1);
}

#[test]
fn reports_are_deterministic_and_seeded() {
    let f = Files::new();
    let cube = f.put("cube.json", CUBE);
    let z3 = f.put("z3.json", Z3);
    let args: [&dyn AsRef<std::ffi::OsStr>; 6] = [&"verify", &cube, &"--lattice", &z3, &"--samples", &"200"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["seed"], 0);
    assert_eq!(r["multiplicity"]["method"]["kind"], "Sampled3D");
    assert_eq!(r["multiplicity"]["verdict"]["k"], 1);

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tilescope"));
    let out = cmd.env("TILESCOPE_SEED", "42").args(["verify"]).arg(&cube).arg("--lattice").arg(&z3).args(["--samples", "100"]).output().unwrap();
    assert_eq!(json(&out)["seed"], 42);
    let r = json(&run(&[&"--seed", &"7", &"verify", &cube, &"--lattice", &z3, &"--samples", &"50"]));
    assert_eq!(r["seed"], 7);
    assert!(r.get("timing_ms").is_none());
    let r = json(&run(&[&"--timing", &"analyze", &cube]));
    assert!(r["timing_ms"].is_u64());
}

#[test]
fn probe_reports_local_structure() {
    let f = Files::new();
    let r = json(&run(&[&"probe", &f.put("sq.json", SQUARE2), &"--point", &"2,1/2", &"--window", &"2"]));
    assert_eq!(r["belt_geometry"]["angle_is_straight"], true);
    assert_eq!(r["partner_search"]["partner"], serde_json::json!(["2/1", "-1/1"]));
    assert_eq!(r["local_multiplicities"][0], 4);
    assert!(!r["refined_plus"]["side_set"].as_array().unwrap().is_empty());
    assert!(!r["refined_minus"]["side_set"].as_array().unwrap().is_empty());
    assert!(r["belt_geometry"]["angle_radians_display"].is_string());
}

#[test]
fn search_finds_the_octagon_lattice() {
    let f = Files::new();
    let r = json(&run(&[&"search", &f.put("o7.json", OCTAGON), &"--max-k", &"7"]));
    let found = r["search"]["found"].as_array().unwrap();
    assert!(found.iter().any(|e| e["k"] == 7 && e["lattice"] == serde_json::json!([["1/1", "0/1"], ["0/1", "1/1"]])));
}

#[test]
fn render_writes_svg() {
    let f = Files::new();
    let o7 = f.put("o7.json", OCTAGON);
    for (args, name) in [
        (vec![], "plain.svg"),
        (vec![f.put("z2.json", Z2)], "tiling.svg"),
    ] {
        let out_path = f.path(name);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_tilescope"));
        cmd.arg("render").arg(&o7).arg("--out").arg(&out_path);
        if let Some(l) = args.first() {
            cmd.arg("--lattice").arg(l);
        }
        let out = cmd.output().unwrap();
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let svg = std::fs::read_to_string(&out_path).unwrap();
        assert!(svg.starts_with("<svg"));
    }
    let out = run(&[&"render", &f.put("cube.json", CUBE), &"--out", &f.path("cube.svg")]);
    assert_eq!(code(&out), 0);
}

#[test]
fn exit_codes() {
    let f = Files::new();
    let o7 = f.put("o7.json", OCTAGON);
    let missing: &Path = Path::new("/nonexistent/poly.json");
    assert_eq!(code(&run(&[&"analyze", &f.put("bad.json", "{\"dim\": 2")])), 1);
    assert_eq!(code(&run(&[&"analyze", &missing])), 1);
    assert_eq!(code(&run(&[&"frobnicate"])), 1);
    assert_eq!(code(&run(&[&"verify", &o7])), 1);
    assert_eq!(code(&run(&[&"verify", &o7, &"--lattice", &f.put("z3.json", Z3)])), 1);
    let x = f.put("x.json", r#"{"translates":[{"v":["0","0"],"m":1}]}"#);
    // A vertex of the octagon is not a generic point.
    assert_eq!(code(&run(&[&"verify", &o7, &"--translates", &x, &"--point", &"1,0"])), 2);
    assert_eq!(code(&run(&[&"probe", &o7, &"--point", &"3/2,3/2"])), 2);
    assert_eq!(code(&run(&[&"probe", &o7, &"--point", &"3/2,0", &"--subfacet", &"99"])), 1);
    let out = run(&[&"analyze", &f.put("deg.json", r#"{"dim":2,"vertices":[["0","0"],["1","1"],["2","2"]]}"#)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn bundled_inputs_are_canonical() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        if text.contains("\"dim\"") {
            let p = tilescope::io::parse_polytope(&text).unwrap();
            assert_eq!(tilescope::io::polytope_json(&p).to_string(), text.trim(), "{}", path.display());
        } else {
            tilescope::io::parse_translations(&text).unwrap();
        }
    }
}
