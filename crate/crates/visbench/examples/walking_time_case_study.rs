//! The metro walking-time alphabet: the banded PMF, per-category benefits,
//! and question-level aggregates computed from the shipped survey data.
//!
//! ```text
//! cargo run -p visbench --example walking_time_case_study
//! ```

use std::path::PathBuf;

use visbench::measures::{candidate_measures, DivergenceSpec};
use visbench::scenarios::{
    categorize_answer, london_benefit_table, london_pmf, per_question_benefit, LondonPmfSpec,
};
use visbench::survey::{
    parse_london_csv, question_category_counts, question_stats, Overrides, DEFAULT_XIS,
};

fn main() -> visbench::Result<()> {
    let spec = LondonPmfSpec::new(20)?;
    let q = london_pmf(&spec)?;
    let sum: f64 = q.probs().iter().sum();
    println!("alphabet of {} minutes, sum {sum}, entropy {:.3} bits", q.len(), q.entropy());
    for answer in [20u32, 24, 8] {
        println!("  answer {answer} -> {}", categorize_answer(answer, &spec)?.name());
    }

    println!("\n{}", london_benefit_table(&spec, &candidate_measures())?.to_markdown(3));

    // question-level aggregates from the shipped survey fixture
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/survey/london_kcl.csv");
    let records = parse_london_csv(&fixture)?;
    let overrides = Overrides::reference();
    let js = DivergenceSpec::js();
    let new2 = DivergenceSpec::d_new(2.0);
    println!("question  bands (spot/close/wild)   js        new:2     ratio new:2");
    for question in 1..=4usize {
        let xi = DEFAULT_XIS[question - 1];
        let spec = LondonPmfSpec::new(xi)?;
        let (counts, _) = question_category_counts(&records, question, xi, &overrides)?;
        let js_avg = per_question_benefit(&counts, &spec, &js)?;
        let new2_avg = per_question_benefit(&counts, &spec, &new2)?;
        let mean_time = question_stats(&records, question)?.mean_time_s;
        println!(
            "Q{question}        {}/{}/{}                  {js_avg:+.3}    {new2_avg:+.3}    {:+.4} bits/s",
            counts.spot_on,
            counts.close,
            counts.wild_guess,
            new2_avg / mean_time
        );
    }
    Ok(())
}
