//! The two synthetic user scenarios, with per-letter decompositions and a
//! stacked-bar SVG written next to the target directory.
//!
//! ```text
//! cargo run -p visbench --example scenario_decompositions
//! ```

use visbench::measures::candidate_measures;
use visbench::scenarios::{abcd_scenario, good_bad_scenario, scenario_divergence_table};

fn main() -> visbench::Result<()> {
    let measures = candidate_measures();

    for scenario in [good_bad_scenario(), abcd_scenario()] {
        let table = scenario_divergence_table(&scenario, &measures)?;
        println!("{}", table.to_table().to_markdown(3));

        // the per-letter split shows where each user's divergence comes from
        println!("per-letter split under ncm:1:");
        for (user, row) in table.row_labels.iter().zip(&table.cells) {
            let parts: Vec<String> = table
                .letters
                .iter()
                .zip(&row[3].per_letter)
                .map(|(letter, v)| format!("{letter} {v:.3}"))
                .collect();
            println!("  {user}: {}", parts.join(", "));
        }
        println!();

        let svg_path = std::env::temp_dir().join(format!("{}_decomposition.svg", scenario.name));
        std::fs::write(&svg_path, table.to_svg(3))?;
        println!("wrote {}\n", svg_path.display());
    }
    Ok(())
}
