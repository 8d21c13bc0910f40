use crate::format::{sym2_json, sym2_text};
use crate::selftest;
use crate::{exit, exit_code_for};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;
use std::path::PathBuf;
use wreathmac::algebra::eval1;
use wreathmac::hodge::{compute_hb, e_polynomial};
use wreathmac::oracle::{count_points, genericity_check, TwistedClass};
use wreathmac::partitions::bipartitions_of;
use wreathmac::wreath_macdonald::{wreath_family, wreath_n};
use wreathmac::{Error, ProblemSpec, SimpleType};

#[derive(Parser, Debug)]
#[command(name = "wreathmac", version, about = "Wreath Macdonald polynomials and twisted character-variety counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// H_B(z,w), the E-polynomial and the mixed Hodge polynomial for a problem.
    Compute(ComputeArgs),
    /// Brute-force point count over F_q for n ≤ 2.
    Oracle(OracleArgs),
    /// Wreath Macdonald polynomials of one size and 2-core.
    WreathMac(WreathMacArgs),
    /// Runs the acceptance criteria.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long)]
    pub g: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// Simple type "m+,m-:m1 m2 ..." (give exactly 2k).
    #[arg(long = "class")]
    pub classes: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub g: usize,
    /// Eigenvalue tuple of one puncture, e.g. "2" (empty for n = 1). Give 2k of them.
    #[arg(long = "eigs", allow_hyphen_values = true)]
    pub eigs: Vec<String>,
    /// Require strong genericity.
    #[arg(long)]
    pub strong_check: bool,
    /// Use single rational orbits instead of whole geometric classes.
    #[arg(long)]
    pub orbit: bool,
    /// Simple types of the same classes; enables comparison with the formula.
    #[arg(long = "class")]
    pub classes: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct WreathMacArgs {
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub core: u8,
    /// Also print the self-pairings.
    #[arg(long)]
    pub pairing: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Substring of criterion names or tags.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: String) -> Report {
        Report { code: exit::OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Report {
        Report { code, stdout: String::new(), stderr: format!("error: {}", msg.into()) }
    }

    fn from_error(e: &Error) -> Report {
        Report::fail(exit_code_for(e), e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::BAD_INPUT } else { exit::OK };
            let text = e.render().to_string();
            return if code == exit::OK {
                Report::ok(text)
            } else {
                Report { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.command {
        Command::Compute(a) => compute(&a),
        Command::Oracle(a) => oracle(&a),
        Command::WreathMac(a) => wreath_mac(&a),
        Command::Selftest(a) => run_selftest(&a),
    }
}

fn parse_classes(v: &[String]) -> Result<Vec<SimpleType>, Error> {
    v.iter().map(|s| SimpleType::parse(s)).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes)
}

pub fn compute(a: &ComputeArgs) -> Report {
    let spec = match parse_classes(&a.classes).and_then(|c| ProblemSpec::new(a.g, a.k, a.n, c)) {
        Ok(s) => s,
        Err(e) => return Report::from_error(&e),
    };
    let r = match compute_hb(&spec) {
        Ok(r) => r,
        Err(e) => return Report::from_error(&e),
    };
    let code = if r.checks.all_pass() { exit::OK } else { exit::CHECK_FAILED };
    let stdout = if a.json {
        let mut v = r.to_json();
        v["spec"] = json!({
            "g": spec.g,
            "k": spec.k,
            "n": spec.n,
            "classes": spec.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        });
        v["pass"] = json!(r.checks.all_pass());
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let c = &r.checks;
        let mut s = String::new();
        s += &format!("H_B(z,w) = {}\n", r.hb.to_text(["z", "w"]));
        s += &format!("d = {}\n", r.d);
        if let Some(e) = &r.e_poly {
            s += &format!("E(q) = {}\n", e.to_text(["q", "t"]));
        }
        if let Some(m) = &r.mhp {
            s += &format!("MHP(q,t) = {}\n", m.to_text(["q", "t"]));
        }
        s += &format!(
            "checks: polynomial={} deg<=d={} (deg_z={:?}, deg_w={:?}, equal={}) even={} HB(-z,w)>=0={} symmetric={} \
             E-routes={} palindromic={} MHP->E={} curious-Poincare={}\n",
            yes(c.is_polynomial),
            yes(c.degree_le_d),
            c.deg_z,
            c.deg_w,
            yes(c.degree_eq_d),
            yes(c.even_total_degree),
            yes(c.nonneg_minus_z),
            yes(c.symmetric && c.sign_symmetric),
            opt(c.e_routes_agree),
            opt(c.e_palindromic),
            opt(c.mhp_specializes_to_e),
            opt(c.curious_poincare),
        );
        for w in &r.warnings {
            s += &format!("warning: {}\n", w);
        }
        s
    };
    Report { code, stdout, stderr: String::new() }
}

fn parse_eigs(s: &str) -> Result<Vec<u64>, Error> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad eigenvalue '{}'", t))))
        .collect()
}

pub fn oracle(a: &OracleArgs) -> Report {
    let eigs: Vec<Vec<u64>> = match a.eigs.iter().map(|s| parse_eigs(s)).collect() {
        Ok(v) => v,
        Err(e) => return Report::from_error(&e),
    };
    if eigs.is_empty() || eigs.len() % 2 == 1 {
        return Report::fail(exit::BAD_INPUT, format!("need an even, positive number of --eigs, got {}", eigs.len()));
    }
    let strong = match genericity_check(&eigs, a.q, true) {
        Ok(r) => r,
        Err(e) => return Report::from_error(&e),
    };
    if a.strong_check && !strong.generic {
        return Report::fail(exit::BAD_INPUT, format!("classes are not strongly generic: {:?}", strong.witness));
    }
    let classes: Result<Vec<TwistedClass>, Error> = eigs
        .iter()
        .map(|e| if a.orbit { TwistedClass::orbit(a.n, a.q, e) } else { TwistedClass::geometric(a.n, a.q, e) })
        .collect();
    let count = match classes.and_then(|c| count_points(a.n, a.g, a.q, &c)) {
        Ok(c) => c,
        Err(e) => return Report::from_error(&e),
    };
    let mut formula: Option<BigInt> = None;
    if !a.classes.is_empty() {
        let k = eigs.len() / 2;
        let e = parse_classes(&a.classes)
            .and_then(|c| ProblemSpec::new(a.g, k, a.n, c))
            .and_then(|s| e_polynomial(&s))
            .and_then(|e| eval1(&e, &BigInt::from(a.q).into()));
        match e {
            Ok(v) if v.is_integer() => formula = Some(v.to_integer()),
            Ok(v) => return Report::fail(exit::COMPUTE, format!("formula value {} is not an integer", v)),
            Err(e) => return Report::from_error(&e),
        }
    }
    let verdict = formula.as_ref().map(|f| *f == count);
    let code = if verdict == Some(false) { exit::CHECK_FAILED } else { exit::OK };
    let stdout = if a.json {
        let v = json!({
            "q": a.q,
            "n": a.n,
            "g": a.g,
            "count": count.to_string(),
            "strongly_generic": strong.generic,
            "formula": formula.as_ref().map(|f| f.to_string()),
            "pass": verdict,
        });
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let mut s = format!("count = {}\n", count);
        if !strong.generic {
            s += "note: classes are generic but not strongly generic\n";
        }
        if let (Some(f), Some(ok)) = (&formula, verdict) {
            s += &format!("formula E({}) = {}\n{}\n", a.q, f, if ok { "PASS" } else { "FAIL" });
        }
        s
    };
    Report { code, stdout, stderr: String::new() }
}

pub fn wreath_mac(a: &WreathMacArgs) -> Report {
    let fam = match wreath_family(a.size, a.core) {
        Ok(f) => f,
        Err(e) => return Report::from_error(&e),
    };
    let mut rows = Vec::new();
    for label in bipartitions_of(a.size) {
        let h = &fam[&label];
        let n = if a.pairing {
            match wreath_n(&label, a.core) {
                Ok(p) => Some(p),
                Err(e) => return Report::from_error(&e),
            }
        } else {
            None
        };
        rows.push((label, h.expansion.clone(), n));
    }
    let stdout = if a.json {
        let v: Vec<_> = rows
            .iter()
            .map(|(l, h, n)| {
                json!({
                    "label": l.to_string(),
                    "core": a.core,
                    "schur": sym2_json(h),
                    "pairing": n.as_ref().map(|p| p.n_total.to_json()),
                })
            })
            .collect();
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let mut s = String::new();
        for (l, h, n) in &rows {
            s += &format!("H~{} = {}\n", l, sym2_text(h));
            if let Some(p) = n {
                s += &format!("N~{} = {}\n", l, p.n_total.to_text(["q", "t"]));
            }
        }
        s
    };
    Report::ok(stdout)
}

pub fn run_selftest(a: &SelftestArgs) -> Report {
    let opts = selftest::Options {
        filter: a.filter.clone(),
        seed: a.seed,
        fixtures: a.fixtures.clone().unwrap_or_else(selftest::default_fixtures),
    };
    let outcomes = selftest::run(&opts);
    let all = outcomes.iter().all(|o| o.pass);
    let stdout = if a.json {
        let v: Vec<_> = outcomes.iter().map(|o| o.to_json()).collect();
        format!("{}\n", serde_json::to_string_pretty(&json!({ "pass": all, "criteria": v })).expect("json"))
    } else {
        let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
        s += &format!("{}/{} criteria passed\n", outcomes.iter().filter(|o| o.pass).count(), outcomes.len());
        s
    };
    Report { code: if all { exit::OK } else { exit::CHECK_FAILED }, stdout, stderr: String::new() }
}

/// Thread count from `WREATHMAC_THREADS`, if set.
pub fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("WREATHMAC_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| format!("WREATHMAC_THREADS must be a positive integer, got '{}'", v))?;
        if n == 0 {
            return Err("WREATHMAC_THREADS must be positive".into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}
