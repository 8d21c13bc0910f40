use serde_json::{json, Value};
use wreathmac::symfunc::SymFunc2;
use wreathmac::partitions::{bipartitions_of, BiPartition};
use wreathmac::RatFun;

const QT: [&str; 2] = ["q", "t"];

fn term_text(coeff: &RatFun, basis: &str) -> String {
    if coeff.is_one() {
        basis.to_string()
    } else {
        format!("({})*{}", coeff.to_text(QT), basis)
    }
}

/// Keys in the order of `bipartitions_of`, smaller sizes first.
fn ordered(f: &SymFunc2) -> Vec<(&BiPartition, &RatFun)> {
    let mut v: Vec<_> = f.terms().iter().collect();
    v.sort_by_cached_key(|(k, _)| (k.size(), bipartitions_of(k.size()).iter().position(|b| b == *k)));
    v
}

/// `c₁*s(λ,μ) + …` over `ℚ(q,t)`.
pub fn sym2_text(f: &SymFunc2) -> String {
    let parts: Vec<String> = ordered(f).into_iter().map(|(k, c)| term_text(c, &format!("s{}", k))).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `[[label, coeff-json], …]`.
pub fn sym2_json(f: &SymFunc2) -> Value {
    Value::Array(ordered(f).into_iter().map(|(k, c)| json!([k.to_string(), c.to_json()])).collect())
}
