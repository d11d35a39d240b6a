//! Benefit of a lossy process: alphabet compression minus potential
//! distortion, with the unbounded KL formula and its bounded replacement.
//!
//! ```text
//! cargo run -p visbench --example bounded_benefit
//! ```

use std::path::PathBuf;

use visbench::benefit::{benefit_bounded, benefit_kl, cost_benefit_ratio, TransformCase};
use visbench::measures::{candidate_measures, Pmf};

fn main() -> visbench::Result<()> {
    // a four-answer question; the depiction collapses everything onto C
    let truth = Pmf::new(vec!["A", "B", "C", "D"], vec![0.1, 0.878, 0.002, 0.02])?;
    let depiction = Pmf::one_hot_labeled(vec!["A", "B", "C", "D"], 3)?;

    println!("input entropy {:.3} bits, output entropy {:.3} bits", truth.entropy(), depiction.entropy());
    println!("\nviewer answers B (the most appropriate answer):");
    let case = TransformCase::new(truth.clone(), depiction.clone(), Pmf::one_hot_labeled(vec!["A", "B", "C", "D"], 2)?)?;
    for spec in candidate_measures() {
        let b = benefit_bounded(&case, &spec)?;
        println!(
            "  {:<6} ac {:.3}  pd {:.3}  benefit {:+.3}",
            spec.label(),
            b.ac,
            b.pd,
            b.benefit
        );
    }
    println!("  under kl: {:+.3}", benefit_kl(&case)?.benefit);

    println!("\nviewer answers C (trusts the misleading depiction):");
    let case = TransformCase::new(truth, depiction, Pmf::one_hot_labeled(vec!["A", "B", "C", "D"], 3)?)?;
    for spec in candidate_measures() {
        let b = benefit_bounded(&case, &spec)?;
        println!("  {:<6} benefit {:+.3}", spec.label(), b.benefit);
    }

    // the same case can live in a manifest next to its PMF files
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/benefit/mip_b.manifest");
    let case = TransformCase::read_manifest(&manifest)?;
    let b = benefit_bounded(&case, &visbench::DivergenceSpec::js())?;
    println!("\nfrom {}:", manifest.display());
    println!("  js benefit {:+.3}", b.benefit);
    println!("  at a 9.27 s response time: {:+.4} bits/second", cost_benefit_ratio(&b, 9.27)?);
    Ok(())
}
