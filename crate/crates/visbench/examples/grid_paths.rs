//! Metro-path enumeration under configurable drawing rules.
//!
//! ```text
//! cargo run -p visbench --example grid_paths
//! ```

use visbench::scenarios::{enumerate_grid_paths, PathRules};

fn main() -> visbench::Result<()> {
    let default = PathRules::default();
    for n in [1u32, 2, 4] {
        let result = enumerate_grid_paths(n, &default)?;
        println!("{n}x{n} grid, default rules: {} paths", result.count);
        if n <= 2 {
            for path in &result.paths {
                println!("  {path}");
            }
        }
    }

    // a cap of one full-angle turn is the rule reading that matches the
    // published 1 / 3 / 15 sequence
    let capped = PathRules { max_sharp_turns: Some(1), ..PathRules::default() };
    for n in [1u32, 2, 4] {
        println!("{n}x{n} grid, at most one full-angle turn: {} paths", enumerate_grid_paths(n, &capped)?.count);
    }

    // tightening the turn angle to 45 degrees kills the apex paths
    let tight = PathRules { max_turn_deg: 45.0, ..PathRules::default() };
    println!("2x2 grid, 45-degree turns: {} paths", enumerate_grid_paths(2, &tight)?.count);

    // growth with resolution under the default rules
    let counts: Vec<String> = (1..=8u32)
        .map(|n| enumerate_grid_paths(n, &default).map(|g| g.count.to_string()))
        .collect::<visbench::Result<_>>()?;
    println!("counts for n = 1..8: {}", counts.join(", "));
    Ok(())
}
