//! Ingesting the two survey data sets and computing per-surveyee benefits.
//!
//! ```text
//! cargo run -p visbench --example survey_analysis
//! ```

use std::path::PathBuf;

use visbench::measures::DivergenceSpec;
use visbench::survey::{
    parse_london_csv, parse_volvis_csv, question_stats, surveyee_benefit, surveyee_categories,
    volvis_summary, Overrides, DEFAULT_XIS,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/survey").join(name)
}

fn main() -> visbench::Result<()> {
    let kcl = parse_london_csv(&fixture("london_kcl.csv"))?;
    let ou = parse_london_csv(&fixture("london_ou.csv"))?;
    println!("{} surveyees at KCL, {} at OU", kcl.len(), ou.len());

    println!("\nwalking-time estimates, mean [min, max] minutes and mean time:");
    for (site, records) in [("KCL", &kcl), ("OU", &ou)] {
        for q in 1..=4usize {
            let s = question_stats(records, q)?;
            println!("  {site} Q{q}: {:.2} [{}, {}]  {:.2} s", s.mean, s.min, s.max, s.mean_time_s);
        }
    }

    // per-surveyee benefit under the selected bounded measure
    let new2 = DivergenceSpec::d_new(2.0);
    let strict = Overrides::default();
    println!("\nper-surveyee average benefit (new:2, strict bands):");
    for r in &kcl {
        let cats = surveyee_categories(r, &DEFAULT_XIS, &strict)?;
        let b = surveyee_benefit(r, &DEFAULT_XIS, &new2, &strict)?;
        let short: Vec<&str> = cats.iter().map(|c| c.name()).collect();
        println!("  {:<4} {b:+.3} bits  ({})", r.surveyee, short.join(", "));
    }

    let volvis = parse_volvis_csv(&fixture("volvis.csv"))?;
    println!("\nvolume visualization tallies (letter:count):");
    for (qi, tally) in volvis_summary(&volvis)?.iter().enumerate() {
        let parts: Vec<String> = tally.counts.iter().map(|(l, _, n)| format!("{l}:{n}")).collect();
        println!("  Q{}: {}", qi + 1, parts.join(" "));
    }
    Ok(())
}
