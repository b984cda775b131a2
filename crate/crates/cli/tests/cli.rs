use std::fs;
use std::process::{Command, Output};

fn orbifano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbifano")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_all_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = orbifano(&["verify", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v.as_array().unwrap();
    assert!(checks.len() > 500);
    for c in checks {
        for key in ["id", "citation", "status", "expected", "computed"] {
            assert!(c.get(key).is_some(), "missing {} in {}", key, c);
        }
        assert!(!c["citation"].as_str().unwrap().is_empty());
    }
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn verify_report_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    orbifano(&["verify", "--suite", "polygons", "--json", a.to_str().unwrap()]);
    orbifano(&["verify", "--suite", "polygons", "--json", b.to_str().unwrap()]);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
}

#[test]
fn verify_exit_codes() {
    assert_eq!(orbifano(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(orbifano(&["verify", "--registry", "/nonexistent.json"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let reg = orbifano::registry::Registry::embedded().unwrap();
    let mut bad = reg.clone();
    bad.families.iter_mut().find(|f| f.name == "X_{4,7/3}").unwrap().h0 = 3;
    let path = dir.path().join("bad.json");
    fs::write(&path, bad.to_json()).unwrap();
    let o = orbifano(&["verify", "--suite", "tables", "--registry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let fails: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with("fail")).map(String::from).collect();
    assert_eq!(fails.len(), 1);
    assert!(fails[0].contains("X_{4,7/3}/h0"));

    fs::write(&path, "{\"families\": [").unwrap();
    assert_eq!(orbifano(&["verify", "--registry", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn polygon_analyze_by_id_and_vertices() {
    let o = orbifano(&["polygon", "analyze", "--id", "9"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("basket: 6 x 1/3(1,1)") && s.contains("-K^2: 2") && s.contains("family: X_{6,2}"), "{}", s);

    // polygon 26 given by hand, in another GL2 frame
    let o = orbifano(&["polygon", "analyze", "--vertices", "-1,1;0,-1;1,2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("n: 2") && s.contains("family: S_{1,25/3}"), "{}", s);

    assert_eq!(orbifano(&["polygon", "analyze", "--vertices", "2,0;0,1;-1,-1"]).status.code(), Some(2));
    assert_eq!(orbifano(&["polygon", "analyze", "--id", "99"]).status.code(), Some(2));
}

#[test]
fn polygon_render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert!(orbifano(&["polygon", "render", "--id", "26", "--out", a.to_str().unwrap()]).status.success());
    orbifano(&["polygon", "render", "--id", "26", "--out", b.to_str().unwrap()]);
    let svg = fs::read_to_string(&a).unwrap();
    assert_eq!(svg.matches("class=\"vertex\"").count(), 3);
    assert_eq!(svg.matches("class=\"origin\"").count(), 1);
    assert_eq!(svg, fs::read_to_string(&b).unwrap());
}

#[test]
fn toric_and_degree_on_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    fs::write(&w, "2 6\n1 1 2 1 0 0\n0 0 1 2 1 1\n| bundles\n2 2\n2 2\n").unwrap();
    let w = w.to_str().unwrap();

    let irr = stdout(&orbifano(&["toric", "irrelevant", "--weights", w, "--omega", "1,1"]));
    assert_eq!(irr.lines().count(), 9);
    let charts = stdout(&orbifano(&["toric", "charts", "--weights", w, "--omega", "1,1"]));
    assert!(charts.contains("U[x2,x3]: 1/3(1,1,1,1)"), "{}", charts);
    assert!(charts.contains("U[x0,x3]: 1/2(0,1,1,1)"), "{}", charts);
    let nef = stdout(&orbifano(&["toric", "nef", "--weights", w]));
    assert_eq!(nef.lines().count(), 2);
    let fan = stdout(&orbifano(&["toric", "fan", "--weights", w, "--omega", "1,1"]));
    assert_eq!(fan.lines().filter(|l| l.starts_with("cone")).count(), 9);

    let plain = dir.path().join("plain.txt");
    fs::write(&plain, "2 6\n1 1 2 1 0 0\n0 0 1 2 1 1\n").unwrap();
    let b = dir.path().join("b.txt");
    fs::write(&b, "2 2\n2 2\n").unwrap();
    let o = orbifano(&["degree", "--weights", plain.to_str().unwrap(), "--bundles", b.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "10/3");

    assert_eq!(orbifano(&["toric", "nef", "--weights", w, "--omega", "1,2,3"]).status.code(), Some(2));
    fs::write(&plain, "2 6\n1 1 2\n").unwrap();
    assert_eq!(orbifano(&["toric", "nef", "--weights", plain.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn mmp_tree_modes() {
    let curated = stdout(&orbifano(&["mmp", "tree", "--k", "4"]));
    assert!(curated.contains("X_{4,7/3}"));
    assert!(curated.contains("D5"));
    let raw = stdout(&orbifano(&["mmp", "tree", "--k", "4", "--mode", "raw"]));
    assert!(raw.lines().count() > curated.lines().count());
    let o = orbifano(&["mmp", "tree", "--k", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(orbifano(&["mmp", "tree", "--k", "9"]).status.code(), Some(2));
}

#[test]
fn candidates_json() {
    let o = orbifano(&["candidates", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let undecided: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "undecided")
        .map(|c| format!("({},{})", c["k"], c["d"].as_str().unwrap()))
        .collect();
    assert_eq!(undecided, vec!["(2,20/3)", "(4,10/3)", "(5,8/3)"]);
}
