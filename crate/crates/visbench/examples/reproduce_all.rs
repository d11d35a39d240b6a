//! Full reproduction run: recomputes every built-in table, checks it
//! against the reference values, and writes the per-dataset reports.
//!
//! ```text
//! cargo run -p visbench --example reproduce_all
//! ```

use visbench::reproduce::{reproduce, write_reports, CheckStatus, FixtureSource};

fn main() -> visbench::Result<()> {
    let report = reproduce(&FixtureSource::Embedded)?;
    for dataset in &report.datasets {
        println!("{:<20} {:>3} checks, {} failures", dataset.name, dataset.checks.len(), dataset.failures());
        for check in &dataset.checks {
            if check.status == CheckStatus::Fail {
                println!("  FAIL {}: computed {} expected {}", check.item, check.computed, check.expected);
            }
            if check.status == CheckStatus::Flagged {
                println!("  flag {}: computed {} target {} ({})", check.item, check.computed, check.expected, check.note);
            }
        }
    }
    println!("\ntotal: {} checks, {} failures", report.total_checks(), report.failures());

    let out = std::env::temp_dir().join("visbench_reports");
    let written = write_reports(&report, &out)?;
    println!("wrote {} report files to {}", written.len(), out.display());
    Ok(())
}
