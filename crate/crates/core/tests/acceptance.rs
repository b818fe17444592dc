//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are never captured.

use std::process::Command;
use std::time::Instant;

use strand::suite::{Suite, CRITERIA};

const CAP: usize = 25_000;

/// Criteria that fail for a documented mathematical reason. Trace then
/// evaluation does not vanish on shapes with two removable corners such as
/// (2,1): on `V ⊗ V` the composite is `(n - m) - swap`. They still print
/// FAIL, and the test insists they keep failing so a change is noticed.
const KNOWN_FAILURES: &[u8] = &[4];

/// The command-line refusal half of the negative controls.
fn cli_refusal() -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_strand"))
        .args(["build-pe", "--n", "3", "--r", "2", "--s", "1"])
        .output()
        .expect("binary runs");
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    (out.status.code() == Some(2) && stderr.contains("requires dim E > s+r"), stderr)
}

fn main() {
    let suite = Suite::new(CAP);
    let mut failed = Vec::new();
    for (id, name) in CRITERIA {
        let start = Instant::now();
        let (mut result, _) = suite.run_criterion(id);
        let mut note = String::new();
        if id == 9 {
            let (ok, stderr) = cli_refusal();
            result.passed &= ok;
            note = format!(" (cli: {})", stderr.trim());
        }
        let status = if result.passed { "PASS" } else { "FAIL" };
        if !result.passed && KNOWN_FAILURES.contains(&id) {
            note.push_str(" (known failure, see README)");
        }
        println!("{status} criterion {id}: {name} [{:.2}s]{note}", start.elapsed().as_secs_f64());
        if !result.passed {
            println!("  detail: {}", result.detail);
            failed.push(id);
        }
    }
    if failed != KNOWN_FAILURES {
        eprintln!("failed criteria {failed:?} differ from the documented list {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}
