use std::path::PathBuf;

use coalg_cli::run_command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    run_command(args)
}

#[test]
fn sqrt2_dual_is_not_pointed_and_has_no_group_likes() {
    let (code, text) = run(&["coalg", "pointed", &data("sqrt2-dual.json")]);
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("pointed: false"));
    let (code, text) = run(&["coalg", "grouplikes", &data("sqrt2-dual.json")]);
    assert_eq!(code, 0);
    assert!(text.contains("group-like elements: 0"));
}

#[test]
fn set_like_has_two_group_likes_in_lexicographic_order() {
    let (code, text) = run(&["coalg", "grouplikes", &data("setlike2.json")]);
    assert_eq!(code, 0);
    let expected = "coalgebra of rank 2 over Z\ngroup-like elements: 2\n  g0 = [0, 1]  (b)\n  g1 = [1, 0]  (a)\n";
    assert_eq!(text, expected);
}

#[test]
fn circle_homology_report() {
    assert_eq!(run(&["sset", "homology", &data("circle.json"), "-N", "1"]), (0, "H0=Z, H1=Z\n".into()));
    assert_eq!(run(&["sset", "homology", &data("rp2.json"), "-N", "2"]).1, "H0=Z, H1=Z/2, H2=0\n");
    assert_eq!(run(&["sset", "homology", &data("rp2.json"), "-N", "1", "--ring", "F2"]).1, "H0=F_2, H1=F_2\n");
    // truncated at 3, so degree 3 is out of range
    assert_eq!(run(&["sset", "homology", &data("circle.json"), "-N", "3"]).0, 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["coalg", "components", &data("t3-plus-point.json")[..]],
        vec!["coalg", "filtration", &data("truncated3-dual.json")[..]],
        vec!["corpus", "generate", "--seed", "11", "--count", "30"],
        vec!["binomial", "check", &data("sqrt2.json")[..], "--primes", "2,3"],
    ] {
        assert_eq!(run(&args), run(&args));
    }
}

#[test]
fn invalid_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring":{"kind":"Z"},"rank":1,"delta":[[0,0,0,"1/2"]],"counit":["1"]}"#).unwrap();
    let (code, text) = run(&["coalg", "grouplikes", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(text.contains("delta[0][3]"), "{text}");
    std::fs::write(&bad, "{\"ring\": ").unwrap();
    let (code, text) = run(&["coalg", "pointed", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(text.contains("line 1"), "{text}");
    assert_eq!(run(&["coalg", "pointed", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["coalg", "frobnicate"]).0, 2);
    assert_eq!(run(&["smap", "check", &data("circle-to-rp2.map.json")]).0, 2);
}

#[test]
fn check_distinguishes_invalid_from_unreadable() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c.json");
    std::fs::write(&f, r#"{"ring":{"kind":"Z"},"rank":1,"delta":[[0,0,0,"2"]],"counit":["1"]}"#).unwrap();
    let (code, text) = run(&["coalg", "check", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(text.contains("[FAIL]"), "{text}");
    assert_eq!(run(&["coalg", "check", &data("setlike2.json")]).0, 0);
    assert_eq!(run(&["coalg", "check", &data("sqrt2.json")]).0, 0);
    assert_eq!(run(&["coalg", "check", &data("t2-into-t3.map.json")]).0, 0);
}

#[test]
fn unsupported_operations_exit_three() {
    assert_eq!(run(&["coalg", "components", &data("sqrt2-dual.json")]).0, 3);
    assert_eq!(run(&["coalg", "primitives", &data("setlike2.json")]).0, 3);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("q.json");
    std::fs::write(&f, r#"{"ring":{"kind":"Q"},"rank":1,"delta":[[0,0,0,"1"]],"counit":["1"]}"#).unwrap();
    assert_eq!(run(&["coalg", "grouplikes", f.to_str().unwrap(), "--ring", "Z"]).0, 0);
    std::fs::write(&f, r#"{"ring":{"kind":"Q"},"rank":2,"delta":[[0,0,0,"1"],[1,0,1,"1"],[1,1,0,"1"],[1,1,1,"1/2"]],"counit":["1","0"]}"#).unwrap();
    // 1/2 has no image in ℤ
    assert_eq!(run(&["coalg", "pointed", f.to_str().unwrap(), "--ring", "Z"]).0, 3);
    assert_eq!(run(&["coalg", "pointed", f.to_str().unwrap()]).0, 0);
}

#[test]
fn binomial_prime_list_and_environment() {
    let (code, text) = run(&["binomial", "check", &data("zxz.json")]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("p=13"));
    let (code, text) = run(&["binomial", "check", &data("sqrt2.json"), "--primes", "7"]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(run(&["binomial", "check", &data("sqrt2.json"), "--primes", "2"]).0, 1);
    assert_eq!(coalg_cli::primes_from_env(Some("3, 5")).unwrap(), [3, 5]);
    assert!(coalg_cli::primes_from_env(Some("x")).is_err());
}

#[test]
fn simplicial_map_checks() {
    assert_eq!(run(&["smap", "check", &data("two-point-to-point.map.json"), "--we", "-N", "0"]).0, 1);
    assert_eq!(run(&["smap", "check", &data("delta1-to-point.map.json"), "--we", "-N", "2"]).0, 0);
    assert_eq!(run(&["smap", "check", &data("circle-to-rp2.map.json"), "--we", "-N", "0"]).0, 0);
    assert_eq!(run(&["smap", "check", &data("circle-to-rp2.map.json"), "--we", "-N", "1"]).0, 1);
    assert_eq!(run(&["smap", "check", &data("circle-to-rp2.map.json"), "--cof"]).0, 0);
    assert_eq!(run(&["smap", "check", &data("delta1-to-point.map.json"), "--cof"]).0, 1);
}

#[test]
fn outputs_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    let (code, _) = run(&["coalg", "tensor", &data("truncated2-dual.json"), &data("truncated2-dual.json"), "-o", t.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, text) = run(&["coalg", "filtration", t.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("ranks: 1, 3, 4"), "{text}");
    let a = dir.path().join("a.json");
    run(&["coalg", "dual", &data("truncated3-dual.json"), "-o", a.to_str().unwrap()]);
    let (_, back) = run(&["coalg", "dual", a.to_str().unwrap()]);
    assert_eq!(back, std::fs::read_to_string(data("truncated3-dual.json")).unwrap());
    let l = dir.path().join("l.json");
    run(&["coalg", "coradical", &data("truncated3-dual.json"), "-o", l.to_str().unwrap()]);
    let (code, text) = run(&["coalg", "wedge", &data("truncated3-dual.json"), "--sub", l.to_str().unwrap(), "--sub", l.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("wedge: rank 2"));
}

#[test]
fn purify_and_split() {
    let (code, text) = run(&["coalg", "purify", &data("truncated2-dual.json"), "--sub", &data("t2-index2.lat.json")]);
    assert_eq!(code, 0);
    assert!(text.contains("purification: rank 2"));
    let (code, text) = run(&["coalg", "split", &data("t3-plus-point.json")]);
    assert_eq!(code, 0);
    assert!(text.contains("[0, 0, 0, 1]"));
}

#[test]
fn chains_and_corpus_files() {
    let (code, text) = run(&["sset", "chains", &data("circle.json")]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["levels"].as_array().unwrap().len(), 4);
    assert_eq!(run(&["sset", "validate", &data("rp2.json")]).0, 0);
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = run(&["corpus", "generate", "--seed", "3", "--count", "5", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 6);
    for k in 0..5 {
        let f = dir.path().join(format!("c{k:04}.json"));
        assert_eq!(run(&["coalg", "pointed", f.to_str().unwrap()]).0, 0);
    }
}

#[test]
fn shipped_files_are_canonical() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut names: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    for name in names {
        let text = std::fs::read_to_string(dir.join(&name)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(coalg::io::to_canonical_string(&v), text, "{name}");
    }
}

#[test]
fn binaries_honor_exit_codes_and_prime_variable() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_binomial"))
        .args(["check", &data("sqrt2.json")])
        .env("COALG_PRIMES", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p=7") && !text.contains("p=2"), "{text}");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_coalg")).args(["pointed", &data("sqrt2-dual.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_sset")).args(["homology", &data("circle.json"), "-N", "1"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "H0=Z, H1=Z\n");
}
