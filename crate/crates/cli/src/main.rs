use std::io::Write;
use wreathmac_cli::commands::{configure_threads, run};
use wreathmac_cli::exit;

fn main() {
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e);
        std::process::exit(exit::BAD_INPUT);
    }
    let report = run(std::env::args_os());
    print!("{}", report.stdout);
    if !report.stderr.is_empty() {
        eprintln!("{}", report.stderr.trim_end());
    }
    let _ = std::io::stdout().flush();
    std::process::exit(report.code);
}
