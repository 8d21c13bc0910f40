use std::process::Command;
use wreathmac::RatFun;
use wreathmac_cli::commands::run;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wreathmac"))
}

fn args(v: &[&str]) -> Vec<String> {
    std::iter::once("wreathmac").chain(v.iter().copied()).map(String::from).collect()
}

const N4: &[&str] = &[
    "compute", "--g", "0", "--k", "2", "--n", "4", "--class", "0,0:1 1", "--class", "0,0:1 1", "--class", "2,0:",
    "--class", "2,0:",
];

#[test]
fn compute_json_contains_reference_polynomial() {
    let mut a = N4.to_vec();
    a.push("--json");
    let r = run(args(&a));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let hb = RatFun::from_json(&v["hb"]).unwrap();
    let fixture: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/appendix_c.json")).unwrap())
            .unwrap();
    let want = RatFun::parse(fixture["n4_g0_k2"]["hb"].as_str().unwrap(), ["z", "w"]).unwrap();
    assert_eq!(hb, want);
    assert_eq!(v["d"], 8);
    assert_eq!(v["pass"], true);
}

#[test]
fn json_polynomials_round_trip() {
    let mut a = N4.to_vec();
    a.push("--json");
    let v: serde_json::Value = serde_json::from_str(&run(args(&a)).stdout).unwrap();
    for key in ["hb", "e_poly", "mhp"] {
        let emitted = serde_json::to_string(&v[key]).unwrap();
        let again = serde_json::to_string(&RatFun::from_json(&v[key]).unwrap().to_json()).unwrap();
        assert_eq!(emitted, again, "{}", key);
    }
}

#[test]
fn rank_one_mixed_hodge_polynomial() {
    let r = run(args(&["compute", "--n", "1", "--g", "2", "--k", "1", "--class", "0,0:", "--class", "0,0:", "--json"]));
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let (q, t) = (RatFun::x(), RatFun::y());
    assert_eq!(RatFun::from_json(&v["mhp"]).unwrap(), (&t + &(&q * &t.pow(2))).pow(4));
}

#[test]
fn wreath_mac_degree_one() {
    let r = run(args(&["wreath-mac", "--size", "1", "--core", "0"]));
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "H~([1],[]) = s([1],[]) + (q)*s([],[1])\nH~([],[1]) = s([1],[]) + (t)*s([],[1])\n");
}

#[test]
fn bad_input_exits_3() {
    // wrong number of classes
    assert_eq!(run(args(&["compute", "--g", "0", "--k", "2", "--n", "1", "--class", "0,0:"])).code, 3);
    // malformed class
    assert_eq!(run(args(&["compute", "--g", "0", "--k", "1", "--n", "2", "--class", "x", "--class", "1,0:"])).code, 3);
    // class size mismatch
    assert_eq!(run(args(&["compute", "--g", "0", "--k", "1", "--n", "4", "--class", "1,0:", "--class", "2,0:"])).code, 3);
    // unknown flag
    assert_eq!(run(args(&["compute", "--bogus"])).code, 3);
    // core out of range
    assert_eq!(run(args(&["wreath-mac", "--size", "1", "--core", "2"])).code, 3);
    // non-generic oracle input
    assert_eq!(run(args(&["oracle", "--q", "7", "--n", "2", "--g", "0", "--eigs", "2", "--eigs", "3"])).code, 3);
}

#[test]
fn oracle_matches_formula() {
    let r = run(args(&[
        "oracle", "--q", "7", "--n", "2", "--g", "1", "--eigs", "2", "--eigs", "1", "--strong-check", "--class", "0,0:1",
        "--class", "1,0:",
    ]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("count = 4104\n"));
    assert!(r.stdout.contains("PASS"));
}

#[test]
fn selftest_filter_and_binary() {
    let out = bin().args(["selftest", "--filter", "wreath"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    // 1, 2 and 10 are named after wreath objects, 8 is tagged with them
    let ids: Vec<&str> = lines.iter().map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    assert_eq!(ids, ["1", "2", "8", "10"], "{}", text);
}

#[test]
fn corrupted_fixture_is_a_named_failure() {
    let dir = std::env::temp_dir().join(format!("wreathmac-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/appendix_a.json");
    let text = std::fs::read_to_string(src).unwrap().replace("\"q^3 + q\"", "\"q^3 + 2*q\"");
    std::fs::write(dir.join("appendix_a.json"), text).unwrap();
    let out = bin()
        .args(["selftest", "--filter", "wreath-macdonald-tables", "--fixtures"])
        .arg(&dir)
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL criterion  1 wreath-macdonald-tables"), "{}", text);
}
