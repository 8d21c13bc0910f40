//! Acceptance criteria 1–10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use wreathmac_cli::selftest::{criteria, run_one, Options};

fn main() {
    let opts = Options::default();
    let mut failed = 0;
    for c in criteria() {
        let o = run_one(c.id, &opts);
        println!("{}", o.line());
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria().len() - failed, criteria().len());
    if failed > 0 {
        std::process::exit(1);
    }
}
