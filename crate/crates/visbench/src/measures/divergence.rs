//! Divergence measures between two PMFs on the same alphabet.
//!
//! Five candidate families are provided. KL is the classical unbounded
//! divergence; the other four are bounded replacements considered for the
//! potential-distortion term of the cost-benefit formula:
//!
//! * `kl`   — sum of p*log2(p/q), non-negative, asymmetric, unbounded
//! * `js`   — Jensen-Shannon, symmetric, in [0, 1] with base-2 logarithms
//! * `new`  — (1/2) * sum of (p+q)*log2(|p-q|^k + 1), symmetric, in [0, 1]
//! * `ncm`  — sum of p*log2(|p-q|^k + 1), non-commutative, in [0, 1]
//! * `mink` — Minkowski distance (sum of |p-q|^k)^(1/k)
//!
//! The bounded entropic families return a [`Decomposition`] so per-letter
//! contributions can be charted; totals are always the sum of the per-letter
//! terms.

use crate::error::{Error, Result};
use crate::measures::pmf::Pmf;

/// The five measure families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureFamily {
    Kl,
    Js,
    New,
    Ncm,
    Minkowski,
}

/// A measure family plus its exponent `k` and a scalar multiplier.
///
/// `k` is ignored by KL and JS. The multiplier covers scaled variants such
/// as `kl@0.3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceSpec {
    pub family: MeasureFamily,
    pub k: f64,
    pub scale: f64,
}

impl DivergenceSpec {
    pub fn kl() -> Self {
        DivergenceSpec { family: MeasureFamily::Kl, k: 1.0, scale: 1.0 }
    }

    pub fn js() -> Self {
        DivergenceSpec { family: MeasureFamily::Js, k: 1.0, scale: 1.0 }
    }

    pub fn d_new(k: f64) -> Self {
        DivergenceSpec { family: MeasureFamily::New, k, scale: 1.0 }
    }

    pub fn d_ncm(k: f64) -> Self {
        DivergenceSpec { family: MeasureFamily::Ncm, k, scale: 1.0 }
    }

    pub fn minkowski(k: f64) -> Self {
        DivergenceSpec { family: MeasureFamily::Minkowski, k, scale: 1.0 }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.k.is_finite() || self.k <= 0.0 {
            return Err(Error::InvalidMeasure(format!("exponent k must be positive, got {}", self.k)));
        }
        if self.family == MeasureFamily::Minkowski && self.k < 1.0 {
            return Err(Error::InvalidMeasure(format!("Minkowski exponent must be >= 1, got {}", self.k)));
        }
        if !self.scale.is_finite() || self.scale <= 0.0 {
            return Err(Error::InvalidMeasure(format!("scale must be positive, got {}", self.scale)));
        }
        Ok(())
    }

    /// True for every family except KL, the only unbounded one.
    pub fn is_bounded(&self) -> bool {
        self.family != MeasureFamily::Kl
    }

    /// Parses the command-line spelling: `kl`, `js`, `new:<k>`, `ncm:<k>`,
    /// `mink:<k>`, each with an optional `@<scale>` suffix (e.g. `kl@0.3`).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidMeasure(format!("`{text}`: {reason}"));
        let (body, scale) = match text.split_once('@') {
            Some((b, s)) => {
                let scale: f64 = s.parse().map_err(|_| bad("scale is not a number"))?;
                (b, scale)
            }
            None => (text, 1.0),
        };
        let (name, k) = match body.split_once(':') {
            Some((n, kstr)) => {
                let k: f64 = kstr.parse().map_err(|_| bad("exponent is not a number"))?;
                (n, Some(k))
            }
            None => (body, None),
        };
        let spec = match (name, k) {
            ("kl", None) => DivergenceSpec::kl(),
            ("js", None) => DivergenceSpec::js(),
            ("new", Some(k)) => DivergenceSpec::d_new(k),
            ("ncm", Some(k)) => DivergenceSpec::d_ncm(k),
            ("mink", Some(k)) => DivergenceSpec::minkowski(k),
            ("new" | "ncm" | "mink", None) => return Err(bad("missing exponent, expected e.g. `new:2`")),
            ("kl" | "js", Some(_)) => return Err(bad("kl and js take no exponent")),
            _ => return Err(bad("unknown measure, expected kl, js, new:<k>, ncm:<k> or mink:<k>")),
        };
        let spec = spec.with_scale(scale);
        spec.validate()?;
        Ok(spec)
    }

    /// Canonical spelling, inverse of [`DivergenceSpec::parse`].
    pub fn label(&self) -> String {
        let base = match self.family {
            MeasureFamily::Kl => "kl".to_string(),
            MeasureFamily::Js => "js".to_string(),
            MeasureFamily::New => format!("new:{}", trim_float(self.k)),
            MeasureFamily::Ncm => format!("ncm:{}", trim_float(self.k)),
            MeasureFamily::Minkowski => format!("mink:{}", trim_float(self.k)),
        };
        if self.scale == 1.0 {
            base
        } else {
            format!("{base}@{}", trim_float(self.scale))
        }
    }
}

fn trim_float(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// The default candidate list used by scenario tables: JS, new k=1, new k=2,
/// ncm k=1, ncm k=2, in that column order.
pub fn candidate_measures() -> Vec<DivergenceSpec> {
    vec![
        DivergenceSpec::js(),
        DivergenceSpec::d_new(1.0),
        DivergenceSpec::d_new(2.0),
        DivergenceSpec::d_ncm(1.0),
        DivergenceSpec::d_ncm(2.0),
    ]
}

/// A divergence value split into per-letter contributions (bits).
///
/// The total is the sum of the per-letter terms. An infinite KL result is
/// carried as an infinite total with an empty per-letter list.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub per_letter: Vec<f64>,
    pub total: f64,
}

impl Decomposition {
    fn from_terms(per_letter: Vec<f64>) -> Self {
        let total = per_letter.iter().sum();
        Decomposition { per_letter, total }
    }

    fn infinite() -> Self {
        Decomposition { per_letter: Vec::new(), total: f64::INFINITY }
    }

    pub fn is_infinite(&self) -> bool {
        self.total.is_infinite()
    }

    fn scaled(mut self, scale: f64) -> Self {
        if self.is_infinite() {
            return self;
        }
        for t in &mut self.per_letter {
            *t *= scale;
        }
        self.total = self.per_letter.iter().sum();
        self
    }
}

fn check_lengths(p: &Pmf, q: &Pmf) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    Ok(())
}

/// Shannon entropy of `p` in bits.
pub fn entropy(p: &Pmf) -> f64 {
    p.entropy()
}

/// Cross entropy -sum(p*log2(q)) in bits; +infinity when q has a zero where
/// p has mass.
pub fn cross_entropy(p: &Pmf, q: &Pmf) -> Result<f64> {
    check_lengths(p, q)?;
    let mut total = 0.0;
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi > 0.0 {
            if qi == 0.0 {
                return Ok(f64::INFINITY);
            }
            total -= pi * qi.log2();
        }
    }
    Ok(total)
}

/// KL-divergence sum(p*log2(p/q)) in bits. Terms with p=0 contribute
/// nothing; +infinity when q has a zero where p has mass.
pub fn kl(p: &Pmf, q: &Pmf) -> Result<f64> {
    check_lengths(p, q)?;
    Ok(kl_terms(p, q).map_or(f64::INFINITY, |t| t.iter().sum()))
}

fn kl_terms(p: &Pmf, q: &Pmf) -> Option<Vec<f64>> {
    let mut terms = Vec::with_capacity(p.len());
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi > 0.0 {
            if qi == 0.0 {
                return None;
            }
            terms.push(pi * (pi / qi).log2());
        } else {
            terms.push(0.0);
        }
    }
    Some(terms)
}

/// Jensen-Shannon divergence; symmetric and always in [0, 1].
pub fn js(p: &Pmf, q: &Pmf) -> Result<Decomposition> {
    check_lengths(p, q)?;
    let terms = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| {
            let m = pi + qi;
            let mut t = 0.0;
            if pi > 0.0 {
                t += pi * (2.0 * pi / m).log2();
            }
            if qi > 0.0 {
                t += qi * (2.0 * qi / m).log2();
            }
            t / 2.0
        })
        .collect();
    Ok(Decomposition::from_terms(terms))
}

/// Bounded symmetric candidate: (1/2)*sum((p+q)*log2(|p-q|^k + 1)).
pub fn d_new(p: &Pmf, q: &Pmf, k: f64) -> Result<Decomposition> {
    check_lengths(p, q)?;
    check_exponent(k)?;
    let terms = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| 0.5 * (pi + qi) * ((pi - qi).abs().powf(k) + 1.0).log2())
        .collect();
    Ok(Decomposition::from_terms(terms))
}

/// Bounded non-commutative candidate: sum(p*log2(|p-q|^k + 1)).
pub fn d_ncm(p: &Pmf, q: &Pmf, k: f64) -> Result<Decomposition> {
    check_lengths(p, q)?;
    check_exponent(k)?;
    let terms = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| pi * ((pi - qi).abs().powf(k) + 1.0).log2())
        .collect();
    Ok(Decomposition::from_terms(terms))
}

fn check_exponent(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidMeasure(format!("exponent k must be positive, got {k}")));
    }
    Ok(())
}

/// Minkowski distance (sum of |p-q|^k)^(1/k), k >= 1.
pub fn minkowski(p: &Pmf, q: &Pmf, k: f64) -> Result<f64> {
    check_lengths(p, q)?;
    if !k.is_finite() || k < 1.0 {
        return Err(Error::InvalidMeasure(format!("Minkowski exponent must be >= 1, got {k}")));
    }
    let sum: f64 = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| (pi - qi).abs().powf(k))
        .sum();
    Ok(sum.powf(1.0 / k))
}

/// Dispatches over the measure family and applies the spec's scale to both
/// the total and the per-letter terms.
///
/// KL maps +infinity to an infinite total with an empty decomposition. The
/// Minkowski decomposition attributes the total proportionally to |p-q|^k;
/// that split is a reporting convention, not an additive identity of the
/// measure itself.
pub fn divergence(spec: &DivergenceSpec, p: &Pmf, q: &Pmf) -> Result<Decomposition> {
    spec.validate()?;
    check_lengths(p, q)?;
    let dec = match spec.family {
        MeasureFamily::Kl => match kl_terms(p, q) {
            Some(terms) => Decomposition::from_terms(terms),
            None => Decomposition::infinite(),
        },
        MeasureFamily::Js => js(p, q)?,
        MeasureFamily::New => d_new(p, q, spec.k)?,
        MeasureFamily::Ncm => d_ncm(p, q, spec.k)?,
        MeasureFamily::Minkowski => {
            let total = minkowski(p, q, spec.k)?;
            let weights: Vec<f64> = p
                .probs()
                .iter()
                .zip(q.probs())
                .map(|(&pi, &qi)| (pi - qi).abs().powf(spec.k))
                .collect();
            let wsum: f64 = weights.iter().sum();
            let per_letter = if wsum > 0.0 {
                weights.iter().map(|w| w / wsum * total).collect()
            } else {
                vec![0.0; p.len()]
            };
            Decomposition { per_letter, total }
        }
    };
    Ok(dec.scaled(spec.scale))
}
