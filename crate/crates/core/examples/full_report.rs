//! Runs the whole analysis on a file, or on a built-in example, and prints the JSON report.
//!
//! ```bash
//! cargo run --example full_report -- path/to/algebra.json
//! cargo run --example full_report
//! ```

use rankone::catalog::{build_example, ExampleParams};
use rankone::format::read_file;
use rankone::report::{analyze_any, AnalyzeOptions};

fn main() {
    let bundle = match std::env::args().nth(1) {
        Some(path) => read_file(path.as_ref()).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }),
        None => build_example("rrca-c2", &ExampleParams { c: "0".into(), ..Default::default() }).unwrap(),
    };
    match analyze_any(&bundle, &AnalyzeOptions::default()) {
        Ok(r) => {
            println!("{}", r.to_json());
            std::process::exit(r.exit_code());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
