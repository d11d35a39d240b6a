//! Alphabet compression, potential distortion, and the cost-benefit ratio.
//!
//! A lossy process maps an input alphabet to an output alphabet; a viewer
//! reconstructs the input from what the process shows. The benefit of the
//! process is
//!
//! ```text
//! benefit = AC - PD
//!         = H(input) - H(output) - PD
//! ```
//!
//! where PD is either the raw KL-divergence of the reconstruction from the
//! input ([`benefit_kl`]) or, for a bounded measure D, the maximum input
//! entropy times the divergence total ([`benefit_bounded`]). Dividing by a
//! positive cost (seconds in the surveys) gives the cost-benefit ratio.

use std::path::Path;

use crate::error::{Error, Result};
use crate::measures::{divergence, kl, max_entropy, DivergenceSpec, MeasureFamily, Pmf};

/// One evaluation unit: the ground-truth input PMF, the process output PMF,
/// and the viewer's reconstruction PMF over the input alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformCase {
    pub input: Pmf,
    pub output: Pmf,
    pub recon: Pmf,
}

impl TransformCase {
    /// Builds a case, checking that the reconstruction shares the input
    /// alphabet (same length and labels). The output alphabet may differ.
    pub fn new(input: Pmf, output: Pmf, recon: Pmf) -> Result<Self> {
        if !input.same_alphabet(&recon) {
            return Err(Error::InvalidCase(format!(
                "reconstruction alphabet ({} letters) must match the input alphabet ({} letters, same labels)",
                recon.len(),
                input.len()
            )));
        }
        Ok(TransformCase { input, output, recon })
    }

    /// Reads a case from a plain key=value manifest:
    ///
    /// ```text
    /// input=q.csv
    /// output=f.csv
    /// recon=pb.csv
    /// ```
    ///
    /// Paths are resolved relative to the manifest's directory. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn read_manifest(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::ReadFailed {
            path: path.to_path_buf(),
            source,
        })?;
        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let name = path.display().to_string();
        let mut input = None;
        let mut output = None;
        let mut recon = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::BadFile {
                path: name.clone(),
                reason: format!("line {}: expected key=value, got `{line}`", lineno + 1),
            })?;
            let slot = match key.trim() {
                "input" => &mut input,
                "output" => &mut output,
                "recon" => &mut recon,
                other => {
                    return Err(Error::BadFile {
                        path: name.clone(),
                        reason: format!("line {}: unknown key `{other}`", lineno + 1),
                    })
                }
            };
            if slot.is_some() {
                return Err(Error::BadFile {
                    path: name.clone(),
                    reason: format!("line {}: duplicate key `{}`", lineno + 1, key.trim()),
                });
            }
            *slot = Some(Pmf::read_csv(&dir.join(value.trim()))?);
        }
        let missing = |what: &str| Error::BadFile {
            path: name.clone(),
            reason: format!("missing `{what}=` entry"),
        };
        TransformCase::new(
            input.ok_or_else(|| missing("input"))?,
            output.ok_or_else(|| missing("output"))?,
            recon.ok_or_else(|| missing("recon"))?,
        )
    }
}

/// Benefit of one transform case under one measure.
#[derive(Debug, Clone, PartialEq)]
pub struct BenefitResult {
    /// Alphabet compression H(input) - H(output), bits.
    pub ac: f64,
    /// Potential distortion, bits; already scaled by max entropy for
    /// bounded measures. May be +infinity under KL.
    pub pd: f64,
    /// ac - pd; -infinity when pd is infinite.
    pub benefit: f64,
    /// Maximum entropy of the input alphabet, bits.
    pub hmax: f64,
    /// The measure that produced pd.
    pub measure: DivergenceSpec,
}

/// Entropy drop from input to output; negative when the output is more
/// uncertain than the input.
pub fn alphabet_compression(case: &TransformCase) -> f64 {
    case.input.entropy() - case.output.entropy()
}

/// Benefit with potential distortion measured by raw KL-divergence of the
/// reconstruction from the input.
pub fn benefit_kl(case: &TransformCase) -> Result<BenefitResult> {
    let ac = alphabet_compression(case);
    let pd = kl(&case.recon, &case.input)?;
    Ok(BenefitResult {
        ac,
        pd,
        benefit: ac - pd,
        hmax: max_entropy(case.input.len())?,
        measure: DivergenceSpec::kl(),
    })
}

/// Benefit with potential distortion measured by a bounded divergence,
/// scaled by the maximum entropy of the input alphabet. KL is rejected.
pub fn benefit_bounded(case: &TransformCase, spec: &DivergenceSpec) -> Result<BenefitResult> {
    if spec.family == MeasureFamily::Kl {
        return Err(Error::InvalidMeasure(
            "bounded benefit requires a bounded measure; use benefit_kl for kl".into(),
        ));
    }
    spec.validate()?;
    let ac = alphabet_compression(case);
    let hmax = max_entropy(case.input.len())?;
    let pd = hmax * divergence(spec, &case.recon, &case.input)?.total;
    Ok(BenefitResult { ac, pd, benefit: ac - pd, hmax, measure: *spec })
}

/// Benefit per unit cost; the surveys approximate cost with mean response
/// time in seconds.
pub fn cost_benefit_ratio(result: &BenefitResult, cost_seconds: f64) -> Result<f64> {
    if !cost_seconds.is_finite() || cost_seconds <= 0.0 {
        return Err(Error::InvalidCost(cost_seconds));
    }
    Ok(result.benefit / cost_seconds)
}
