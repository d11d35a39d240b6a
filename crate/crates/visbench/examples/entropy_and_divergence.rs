//! Entropies and divergence measures on small hand-built PMFs.
//!
//! ```text
//! cargo run -p visbench --example entropy_and_divergence
//! ```

use visbench::measures::{cross_entropy, divergence, js, kl, max_entropy, DivergenceSpec, Pmf};

fn main() -> visbench::Result<()> {
    // a three-option design alphabet under two assumptions about the designer
    let uniform = Pmf::uniform(3)?;
    let favoured = Pmf::from_probs(vec![0.9, 0.05, 0.05])?;
    println!("H(uniform)  = {:.3} bits (max {:.3})", uniform.entropy(), max_entropy(3)?);
    println!("H(favoured) = {:.3} bits", favoured.entropy());

    // viewers who are nearly certain the straight line was the original
    let viewers = Pmf::from_probs(vec![0.998, 0.001, 0.001])?;
    println!("\nKL(viewers || uniform)  = {:.3} bits", kl(&viewers, &uniform)?);
    println!("KL(viewers || favoured) = {:.3} bits", kl(&viewers, &favoured)?);
    println!("cross entropy(viewers, favoured) = {:.4} bits", cross_entropy(&viewers, &favoured)?);

    // KL blows up when the truth concentrates where the viewers put almost
    // no mass; the bounded candidates stay in [0, 1]
    let inverted = Pmf::from_probs(vec![0.001, 0.998, 0.001])?;
    println!("\nKL(viewers || inverted) = {:.3} bits", kl(&viewers, &inverted)?);
    for spec in [
        DivergenceSpec::js(),
        DivergenceSpec::d_new(1.0),
        DivergenceSpec::d_new(2.0),
        DivergenceSpec::d_ncm(1.0),
        DivergenceSpec::d_ncm(2.0),
        DivergenceSpec::minkowski(2.0),
    ] {
        let d = divergence(&spec, &viewers, &inverted)?;
        println!("{:<8} = {:.3}", spec.label(), d.total);
    }

    // per-letter decomposition of a symmetric measure
    let d = js(&viewers, &favoured)?;
    println!("\njs(viewers, favoured) decomposition:");
    for (label, term) in viewers.labels().iter().zip(&d.per_letter) {
        println!("  letter {label}: {term:.4}");
    }
    println!("  total:    {:.4}", d.total);

    // a scaled measure, spelled the same way the command line accepts
    let scaled = DivergenceSpec::parse("kl@0.3")?;
    println!("\n{} = {:.3}", scaled.label(), divergence(&scaled, &viewers, &uniform)?.total);
    Ok(())
}
