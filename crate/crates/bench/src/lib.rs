//! Benchmark-only crate; see `benches/`.

use wreathmac::{ProblemSpec, SimpleType};

/// The two reference problems, used as benchmark workloads.
pub fn reference_specs() -> Vec<(&'static str, ProblemSpec)> {
    let cls = |v: &[&str]| v.iter().map(|s| SimpleType::parse(s).unwrap()).collect();
    vec![
        ("n4", ProblemSpec::new(0, 2, 4, cls(&["0,0:1 1", "0,0:1 1", "2,0:", "2,0:"])).unwrap()),
        ("n5", ProblemSpec::new(0, 2, 5, cls(&["0,0:1 1", "1,0:1", "2,0:", "2,0:"])).unwrap()),
    ]
}
