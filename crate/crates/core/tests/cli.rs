//! The `dragonforest` binary: output formats and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn dragonforest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dragonforest"))
        .args(args)
        .env_remove("DRAGONFOREST_TRACE")
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("dragonforest-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn arboricity_lines() {
    for (file, line) in [
        ("tree.txt", "gamma=1/1 arboricity=1"),
        ("k4.txt", "gamma=2/1 arboricity=2"),
        ("petersen.txt", "gamma=5/3 arboricity=2"),
    ] {
        let o = dragonforest(&["arboricity", &path(file)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), line);
    }
}

#[test]
fn sndt_then_verify() {
    let o = dragonforest(&["sndt", &path("petersen.txt"), "--k", "1", "--d", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["d"], 5);
    assert!(json["max_red_component_edges"].as_u64().unwrap() <= 5);
    let out = scratch("petersen.json", &stdout(&o));
    let v = dragonforest(&["verify", &path("petersen.txt"), &out]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).trim(), "PASS");

    // recolor every blue edge red: the red side now has cycles
    let mut bad = json.clone();
    let blue = bad["blue"][0].take();
    bad["red"].as_array_mut().unwrap().extend(blue.as_array().unwrap().iter().cloned());
    bad["blue"][0] = serde_json::json!([]);
    let tampered = scratch("tampered.json", &bad.to_string());
    let v = dragonforest(&["verify", &path("petersen.txt"), &tampered]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).starts_with("FAIL"));

    let mut claim = json;
    claim["d"] = serde_json::json!(0);
    let wrong = scratch("bound.json", &claim.to_string());
    assert_eq!(dragonforest(&["verify", &path("petersen.txt"), &wrong]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(dragonforest(&["sndt", &path("k4.txt"), "--k", "1", "--d", "4"]).status.code(), Some(3));
    assert_eq!(dragonforest(&["sndt", &path("k4.txt"), "--k", "1", "--d", "5"]).status.code(), Some(3));
    assert_eq!(dragonforest(&["sndt", &path("k4.txt"), "--k", "2", "--d", "1"]).status.code(), Some(0));
    assert_eq!(dragonforest(&["arboricity", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let garbage = scratch("garbage.txt", "3 2\n0 1\n1 x\n");
    assert_eq!(dragonforest(&["arboricity", &garbage]).status.code(), Some(2));
    assert_eq!(dragonforest(&["sndt", &path("k4.txt")]).status.code(), Some(2));
    let not_json = scratch("not.json", "{");
    assert_eq!(dragonforest(&["verify", &path("k4.txt"), &not_json]).status.code(), Some(2));
}

#[test]
fn thintree_codes() {
    let o = dragonforest(&["thintree", &path("icosahedron.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["mode"], "exhaustive");
    assert_eq!(json["tree"].as_array().unwrap().len(), 11);

    let s = dragonforest(&["thintree", &path("icosahedron.txt"), "--verify", "sampled:100"]);
    assert_eq!(s.status.code(), Some(0));
    assert!(stdout(&s).contains("\"mode\":\"sampled:100\""));

    assert_eq!(dragonforest(&["thintree", &path("cube.txt")]).status.code(), Some(3));
    assert_eq!(dragonforest(&["thintree", &path("petersen.txt")]).status.code(), Some(3));

    let ico = std::fs::read_to_string(data("icosahedron.txt")).unwrap();
    let broken = ico.replacen("0: ", "0: 99 ", 1);
    assert_ne!(broken, ico);
    assert_eq!(dragonforest(&["thintree", &scratch("broken.txt", &broken)]).status.code(), Some(2));
}

#[test]
fn trace_goes_to_stderr() {
    let o = Command::new(env!("CARGO_BIN_EXE_dragonforest"))
        .args(["sndt", &path("petersen.txt"), "--k", "1", "--d", "1"])
        .env("DRAGONFOREST_TRACE", "1")
        .output()
        .unwrap();
    // Petersen is too dense for (1, 1); the density check stops it first
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_dragonforest"))
        .args(["sndt", &path("needs_moves.txt"), "--k", "1", "--d", "2"])
        .env("DRAGONFOREST_TRACE", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.lines().count() >= 1, "no trace");
    assert!(err.lines().all(|l| l.starts_with("[dragonforest] move")), "{err}");
}

#[test]
fn output_is_byte_stable() {
    let a = dragonforest(&["sndt", &path("dodecahedron.txt"), "--k", "1", "--d", "3"]);
    let b = dragonforest(&["sndt", &path("dodecahedron.txt"), "--k", "1", "--d", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
