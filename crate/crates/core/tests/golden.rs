use serde_json::Value;
use wreathmac::hodge::{compute_hb, e_polynomial, ProblemSpec};
use wreathmac::partitions::BiPartition;
use wreathmac::symfunc::{Basis2, SymFunc2};
use wreathmac::types::SimpleType;
use wreathmac::wreath_macdonald::{wreath_h, wreath_n};
use wreathmac::RatFun;

const QT: [&str; 2] = ["q", "t"];
const ZW: [&str; 2] = ["z", "w"];

fn fixture(name: &str) -> Value {
    let path = format!("{}/../../fixtures/{}", env!("CARGO_MANIFEST_DIR"), name);
    serde_json::from_str(&std::fs::read_to_string(&path).expect("fixture")).expect("json")
}

fn spec(e: &Value) -> ProblemSpec {
    let n = |k: &str| e[k].as_u64().unwrap() as usize;
    let classes = e["classes"].as_array().unwrap().iter().map(|c| SimpleType::parse(c.as_str().unwrap()).unwrap()).collect();
    ProblemSpec::new(n("g"), n("k"), n("n"), classes).unwrap()
}

#[test]
fn wreath_h_tables() {
    let v = fixture("appendix_a.json");
    for e in v["wreath_h"].as_array().unwrap() {
        let core = e["core"].as_u64().unwrap() as u8;
        let label = BiPartition::parse(e["label"].as_str().unwrap()).unwrap();
        let want = SymFunc2::from_terms(
            Basis2::Schur2,
            e["schur"].as_array().unwrap().iter().map(|p| {
                (BiPartition::parse(p[0].as_str().unwrap()).unwrap(), RatFun::parse(p[1].as_str().unwrap(), QT).unwrap())
            }),
        );
        assert_eq!(wreath_h(&label, core).unwrap().expansion, want, "{} core {}", label, core);
    }
}

#[test]
fn wreath_n_core_zero_table() {
    let v = fixture("appendix_a.json");
    let mut n = 0;
    for e in v["wreath_n"].as_array().unwrap() {
        let core = e["core"].as_u64().unwrap() as u8;
        let label = BiPartition::parse(e["label"].as_str().unwrap()).unwrap();
        if core != 0 && label.size() > 1 {
            continue;
        }
        let want = e["factors"]
            .as_array()
            .unwrap()
            .iter()
            .fold(RatFun::one(), |acc, f| &acc * &RatFun::parse(f.as_str().unwrap(), QT).unwrap());
        let got = wreath_n(&label, core).unwrap();
        assert_eq!(got.n_total, want, "{} core {}", label, core);
        n += 1;
    }
    assert!(n >= 6);
}

#[test]
fn hb_reference_problems() {
    let v = fixture("appendix_c.json");
    for key in ["n4_g0_k2", "n5_g0_k2"] {
        let e = &v[key];
        let want = RatFun::parse(e["hb"].as_str().unwrap(), ZW).unwrap();
        let r = compute_hb(&spec(e)).unwrap();
        assert_eq!(r.hb, want, "{}", key);
        assert!(r.checks.all_pass(), "{}", key);
    }
}

#[test]
fn rank_three_e_polynomials() {
    let v = fixture("section_7_4.json");
    for e in v["e_polynomials"].as_array().unwrap() {
        let want = RatFun::parse(e["e"].as_str().unwrap(), QT).unwrap();
        assert_eq!(e_polynomial(&spec(e)).unwrap(), want);
    }
}
