//! The two volume-depiction alphabets: the four-answer arteries question
//! and the 256-configuration iso-surface question.
//!
//! ```text
//! cargo run -p visbench --example depiction_case_studies
//! ```

use visbench::measures::candidate_measures;
use visbench::scenarios::{
    isosurface_pmf, isosurface_tables, mip_arteries_tables, mip_q, mip_qprime,
};

fn main() -> visbench::Result<()> {
    let measures = candidate_measures();

    let q = mip_q();
    println!("arteries ground truth {:?}, entropy {:.3} bits\n", q.probs(), q.entropy());
    let tables = mip_arteries_tables(&q, &measures)?;
    println!("{}", tables.divergence.to_table().to_markdown(3));
    println!("{}", tables.benefit.to_markdown(3));

    // with flat surfaces considered more probable, even answer C keeps some
    // benefit under the bounded candidates
    let qprime = mip_qprime();
    let tables = mip_arteries_tables(&qprime, &measures)?;
    println!("alternative ground truth {:?}:\n", qprime.probs());
    println!("{}", tables.benefit.to_markdown(3));

    let iso = isosurface_pmf();
    let sum: f64 = iso.probs().iter().sum();
    println!("iso-surface alphabet: {} letters, sum {sum}, entropy {:.3} bits\n", iso.len(), iso.entropy());
    println!("{}", isosurface_tables(&measures)?.to_table().to_markdown(3));
    Ok(())
}
