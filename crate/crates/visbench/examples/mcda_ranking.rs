//! The staged multi-criteria analysis: sums, eliminations, winner, and a
//! weighted ranking.
//!
//! ```text
//! cargo run -p visbench --example mcda_ranking
//! ```

use visbench::mcda::{
    reference_table, stage_sums, sums_through_stage, weighted_rank, winner, Stage, Weights,
};

fn main() -> visbench::Result<()> {
    let table = reference_table();
    println!("{}", table.to_report_table().to_markdown(0));

    let sums = sums_through_stage(&table, Stage::TwoToFive);
    println!("criteria 1-5 sums:");
    for (m, s) in table.measures.iter().zip(&sums) {
        match s {
            Some(s) => println!("  {m:<9} {s}"),
            None => println!("  {m:<9} (eliminated)"),
        }
    }

    let late = stage_sums(&table, Stage::SixToNine)?;
    let cumulative = sums_through_stage(&table, Stage::SixToNine);
    println!("\ncriteria 6-9 sums (cumulative 1-9):");
    for (i, m) in table.measures.iter().enumerate() {
        if let (Some(s), Some(c)) = (late[i], cumulative[i]) {
            println!("  {m:<9} {s} ({c})");
        }
    }
    println!("\nwinner: {}", winner(&table)?);

    // importance weights are configuration; the published analysis uses
    // plain sums, which unit weights reproduce
    for weights in ["critical=1,important=1,helpful=1", "critical=4,important=2,helpful=1"] {
        let ranked = weighted_rank(&table, &Weights::parse(weights)?)?;
        println!("\nweighted ranking with {weights}:");
        for (name, total) in ranked {
            println!("  {name:<9} {total}");
        }
    }
    Ok(())
}
