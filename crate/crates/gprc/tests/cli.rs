use std::process::{Command, Output};

fn gprc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gprc")).args(args).env_remove("GPRC_CACHE_DIR").output().expect("run gprc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn text_output() {
    let o = gprc(&["classify", "0 1 2 3 4 5 / 3 2 5 4 1 0"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "H(4):odd"));
    let o = gprc(&["class", "0 1 2 3 / 3 2 1 0"]);
    assert_eq!(stdout(&o), "7");
    let o = gprc(&["class", "--extended", "0 1 2 3 4 5 6 / 4 3 2 6 5 1 0"]);
    assert_eq!(stdout(&o), "770");
    let o = gprc(&["op", "c", "0 1 2 / 2 1 0"]);
    assert_eq!(code(&o), 0);
    let o = gprc(&["contract", "0 1 2 3 4 5 6 7 8 / 4 3 2 8 7 6 5 1 0", "3", "5"]);
    assert_eq!(stdout(&o), "0 1 2 3 4 5 6 / 3 2 6 5 4 1 0");
    let o = gprc(&["spin", "0 1 2 3 / 3 2 1 0"]);
    assert_eq!(stdout(&o), "1");
    let o = gprc(&["member", "0 1 2 / 2 1 0", "2 0 1 / 0 1 2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn json_output() {
    let o = gprc(&["--json", "stratum", "0 0 1 / 1 2 2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stratum"], "Q(-1^4)");
    assert_eq!(v["genus"], 0);

    let o = gprc(&["--json", "rep", "H(4):odd"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["component"], "H(4):odd");
    let back = gprc(&["classify", v["permutation"].as_str().unwrap()]);
    assert_eq!(stdout(&back), "H(4):odd");
}

#[test]
fn exit_codes() {
    // Malformed and unsupported input.
    assert_eq!(code(&gprc(&["stratum", "0 1 / 0"])), 2);
    assert_eq!(code(&gprc(&["rep", "H(3)"])), 2);
    assert_eq!(code(&gprc(&["rep", "H(4)"])), 2);
    assert_eq!(code(&gprc(&["contract", "0 1 2 / 2 1 0", "9"])), 2);
    // Valid input the operation does not apply to.
    assert_eq!(code(&gprc(&["classify", "0 1 / 0 1"])), 3);
    assert_eq!(code(&gprc(&["rep", "Q(4)"])), 3);
    assert_eq!(code(&gprc(&["class", "0 1 2 3 / 1 0 3 2"])), 3);
}

#[test]
fn class_store() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gprc"))
            .args(["--json", "class", "0 1 2 3 4 / 4 3 2 1 0"])
            .env("GPRC_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first: serde_json::Value = serde_json::from_slice(&run().stdout).unwrap();
    assert_eq!(first["count"], 15);
    let file = first["file"].as_str().expect("class file written").to_string();
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("#gprc v1 kind=rauzy seed=0 1 2 3 4 / 4 3 2 1 0 count=15\n"));
    assert_eq!(text.lines().count(), 16);
    let second: serde_json::Value = serde_json::from_slice(&run().stdout).unwrap();
    assert_eq!(second, first);
}

#[test]
fn verify_exit_status() {
    let o = gprc(&["verify", "adjacency"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("s"));
}
