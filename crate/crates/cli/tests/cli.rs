use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_foliate"))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], files: &[&Path]) -> (i32, Value) {
    let out = bin().args(args).args(files).output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

#[test]
fn exit_codes_partition_outcomes() {
    let d = tempfile::tempdir().unwrap();
    let xy = write(d.path(), "xy.fol", "foliation: d(x*y)\n");
    let radial = write(d.path(), "radial.fol", "foliation: y*dx - x*dy\n");
    let bad = write(d.path(), "bad.fol", "foliation: d(x*\n");
    let cusp = write(d.path(), "cusp.fol", "foliation: d(y^2 - x^3)\n");
    let div = write(d.path(), "ab.div", "divisor: A:1  B:-1\n");
    let ok_div = write(d.path(), "ok.div", "divisor: A:1  B:2\n");

    let (code, j) = run(&["model"], &[&xy]);
    assert_eq!(code, 0);
    assert_eq!(j["branches"][0]["coefficient"]["text"], "1");
    assert_eq!(j["branches"][1]["coefficient"]["text"], "1");
    let (code, j) = run(&["resolve"], &[&radial]);
    assert_eq!(code, 3);
    assert_eq!(j["reason"], "resonant_presimple");
    assert_eq!(j["diagnosis"], "dicritical");
    assert_eq!(run(&["resolve"], &[&bad]).0, 2);
    assert_eq!(run(&["resolve"], &[Path::new("/nonexistent/file")]).0, 2);
    assert_eq!(run(&["resolve", "--max-depth", "1"], &[&cusp]).0, 4);
    let (code, j) = run(&["dicritical"], &[&div]);
    assert_eq!(code, 3);
    assert_eq!(j["witness"], serde_json::json!([1, 1]));
    assert_eq!(run(&["dicritical"], &[&ok_div]).0, 0);
    let (code, j) = run(&["classify"], &[&radial]);
    assert_eq!(code, 0);
    assert_eq!(j["classification"], "resonant_presimple");
}

#[test]
fn divisors_with_equations_are_resolved_first() {
    let d = tempfile::tempdir().unwrap();
    let par = write(d.path(), "p.div", "divisor:\nA : 1\nequation: y - x^2\nB : -1\nequation: y + x^2\n");
    let (code, j) = run(&["dicritical"], &[&par]);
    assert_eq!(code, 3);
    assert_eq!(j["at"], "E1");
    let fol = write(d.path(), "p.fol", "foliation: d((y - x^2)*(y + x^2))\n");
    let (code, j) = run(&["verify", fol.to_str().unwrap()], &[&par]);
    assert_eq!(code, 3);
    assert_eq!(j["status"], "not_a_model");
    let model = write(d.path(), "m.div", "divisor:\nA : 3\nequation: y - x^2\nB : 3\nequation: y + x^2\n");
    let (code, j) = run(&["verify", fol.to_str().unwrap()], &[&model]);
    assert_eq!((code, j["status"].as_str()), (0, Some("model")));
}

#[test]
fn equations_give_a_logarithmic_model() {
    let d = tempfile::tempdir().unwrap();
    let f = write(d.path(), "f.fol", "foliation: d(x^2*y^3)\n");
    let eqs = write(d.path(), "eqs.lst", "list: x, y\n");
    let (code, j) = run(&["model", "--equations", eqs.to_str().unwrap()], &[&f]);
    assert_eq!(code, 0);
    let eta = j["logarithmic_model"].as_str().unwrap();
    assert_eq!(eta, "2/3*d(x)/(x) + 1*d(y)/(y)");
    assert!(matches!(symbolic::parse(eta), Ok(symbolic::Parsed::Log(_))));
}

#[test]
fn reports_are_deterministic_and_atomic() {
    let d = tempfile::tempdir().unwrap();
    let cusp = write(d.path(), "cusp.fol", "# cusp\nfoliation:\nd(y^2 - x^3)\n");
    let mut seen = Vec::new();
    for k in 0..2 {
        let (j, g) = (d.path().join(format!("r{k}.json")), d.path().join(format!("r{k}.dot")));
        let out = bin().args(["model", "--json", j.to_str().unwrap(), "--dot", g.to_str().unwrap()]).arg(&cusp).output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("model (1) after 3 blow-ups"));
        seen.push((std::fs::read(j).unwrap(), std::fs::read(g).unwrap()));
    }
    assert_eq!(seen[0], seen[1]);
    let leftovers = std::fs::read_dir(d.path()).unwrap().filter(|e| {
        e.as_ref().unwrap().file_name().to_string_lossy().starts_with(".tmp")
    });
    assert_eq!(leftovers.count(), 0);
}

#[test]
fn several_files_run_in_parallel() {
    let d = tempfile::tempdir().unwrap();
    let files: Vec<PathBuf> = ["d(x*y)", "d(y^2 - x^3)", "y*dx - x*dy", "d(x*y*(x+y))"]
        .iter()
        .enumerate()
        .map(|(i, w)| write(d.path(), &format!("{i}.fol"), &format!("foliation: {w}\n")))
        .collect();
    let refs: Vec<&Path> = files.iter().map(PathBuf::as_path).collect();
    let (code, j) = run(&["resolve", "--jobs", "3"], &refs);
    assert_eq!(code, 3);
    let arr = j.as_array().unwrap();
    assert_eq!(arr.len(), 4);
    assert_eq!(arr[1]["report"]["blowups"], 3);
    assert_eq!(arr[2]["report"]["status"], "rejected");
    assert!(arr[0]["file"].as_str().unwrap().ends_with("0.fol"));
}

#[test]
fn list_reduction_reports_certificates() {
    let d = tempfile::tempdir().unwrap();
    let l = write(d.path(), "l.lst", "list:\nx, y, x + y\n");
    let (code, j) = run(&["reduce-list"], &[&l]);
    assert_eq!(code, 0);
    assert_eq!(j["blowups"], 1);
    assert!(j["points"].as_array().unwrap().iter().all(|p| p["verified"] == true));
}
