//! Probability mass functions over finite alphabets.
//!
//! A [`Pmf`] couples an ordered list of letter labels with a probability
//! vector. All measures in this crate take PMFs as input; entropy and the
//! divergence families live in [`crate::measures::divergence`].

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Absolute tolerance on the probability sum accepted by [`Pmf::new`].
///
/// Inputs within this tolerance are renormalized by dividing by the actual
/// sum, which keeps hand-entered decimal PMFs usable.
pub const PMF_SUM_TOLERANCE: f64 = 1e-9;

/// A probability mass function: ordered letters with their probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    labels: Vec<String>,
    probs: Vec<f64>,
}

impl Pmf {
    /// Builds a PMF, validating that probabilities are non-negative and sum
    /// to one within [`PMF_SUM_TOLERANCE`].
    pub fn new<L: Into<String>>(labels: Vec<L>, probs: Vec<f64>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != probs.len() {
            return Err(Error::InvalidPmf(format!(
                "{} labels but {} probabilities",
                labels.len(),
                probs.len()
            )));
        }
        if probs.is_empty() {
            return Err(Error::InvalidPmf("alphabet must have at least one letter".into()));
        }
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidPmf(format!(
                    "probability {p} at letter `{}` (position {}) is not in [0,1]",
                    labels[i],
                    i + 1
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PMF_SUM_TOLERANCE {
            return Err(Error::InvalidPmf(format!(
                "probabilities sum to {sum}, expected 1 within {PMF_SUM_TOLERANCE}"
            )));
        }
        let mut probs = probs;
        // renormalize imprecise hand-entered sums; sums already within a few
        // ulps of 1 are kept bit-exact so construction is idempotent and
        // exact zeros stay zero
        if (sum - 1.0).abs() > probs.len() as f64 * 4.0 * f64::EPSILON {
            for p in &mut probs {
                *p /= sum;
            }
        }
        Ok(Pmf { labels, probs })
    }

    /// Builds a PMF with 1-based index labels "1", "2", ...
    pub fn from_probs(probs: Vec<f64>) -> Result<Self> {
        let labels = (1..=probs.len()).map(|i| i.to_string()).collect();
        Pmf::new(labels, probs)
    }

    /// Uniform PMF over `n` letters.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPmf("alphabet must have at least one letter".into()));
        }
        Pmf::from_probs(vec![1.0 / n as f64; n])
    }

    /// Degenerate PMF with all mass on the letter at 1-based `index`.
    pub fn one_hot(n: usize, index: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPmf("alphabet must have at least one letter".into()));
        }
        if index < 1 || index > n {
            return Err(Error::IndexOutOfRange { index, len: n });
        }
        let mut probs = vec![0.0; n];
        probs[index - 1] = 1.0;
        Pmf::from_probs(probs)
    }

    /// One-hot PMF carrying the given labels.
    pub fn one_hot_labeled<L: Into<String>>(labels: Vec<L>, index: usize) -> Result<Self> {
        let n = labels.len();
        if index < 1 || index > n {
            return Err(Error::IndexOutOfRange { index, len: n });
        }
        let mut probs = vec![0.0; n];
        probs[index - 1] = 1.0;
        Pmf::new(labels, probs)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one letter
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Probability of the letter at 0-based position `i`.
    pub fn prob(&self, i: usize) -> f64 {
        self.probs[i]
    }

    /// True when both PMFs share length and labels.
    pub fn same_alphabet(&self, other: &Pmf) -> bool {
        self.labels == other.labels
    }

    /// Shannon entropy in bits, with the convention 0*log2(0) = 0.
    pub fn entropy(&self) -> f64 {
        let h = -self
            .probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * p.log2())
            .sum::<f64>();
        h + 0.0 // degenerate PMFs yield -0.0; normalize the sign
    }

    /// Reads a PMF from CSV with header `index,label,probability`.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let file = crate::error::open_file(path)?;
        Self::from_csv_reader(file, &path.display().to_string())
    }

    /// Parses PMF CSV from any reader; `name` is used in error messages.
    pub fn from_csv_reader<R: Read>(reader: R, name: &str) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let headers = rdr.headers()?.clone();
        let expect = ["index", "label", "probability"];
        if headers.iter().collect::<Vec<_>>() != expect {
            return Err(Error::BadFile {
                path: name.into(),
                reason: format!("expected header `index,label,probability`, got `{}`", headers.iter().collect::<Vec<_>>().join(",")),
            });
        }
        let mut labels = Vec::new();
        let mut probs = Vec::new();
        for (rec_idx, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let row = rec_idx + 2; // 1-based, counting the header line
            let field = |col: usize| -> Result<&str> {
                rec.get(col).ok_or_else(|| Error::MalformedRow {
                    path: name.into(),
                    row,
                    column: expect[col].into(),
                    reason: "missing field".into(),
                })
            };
            let index: usize = field(0)?.trim().parse().map_err(|_| Error::MalformedRow {
                path: name.into(),
                row,
                column: "index".into(),
                reason: format!("`{}` is not an integer", field(0).unwrap_or("")),
            })?;
            if index != rec_idx + 1 {
                return Err(Error::MalformedRow {
                    path: name.into(),
                    row,
                    column: "index".into(),
                    reason: format!("expected {} (rows are 1-based and in order), got {index}", rec_idx + 1),
                });
            }
            let label = field(1)?.to_string();
            let prob: f64 = field(2)?.trim().parse().map_err(|_| Error::MalformedRow {
                path: name.into(),
                row,
                column: "probability".into(),
                reason: format!("`{}` is not a decimal literal", field(2).unwrap_or("")),
            })?;
            labels.push(label);
            probs.push(prob);
        }
        if labels.is_empty() {
            return Err(Error::BadFile {
                path: name.into(),
                reason: "no letters (file has a header but no rows)".into(),
            });
        }
        Pmf::new(labels, probs)
    }

    /// Writes this PMF as CSV with header `index,label,probability`.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        self.to_csv_string(&mut out);
        std::fs::write(path, out).map_err(|source| Error::WriteFailed {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn to_csv_string(&self, out: &mut String) {
        out.push_str("index,label,probability\n");
        for (i, (label, p)) in self.labels.iter().zip(&self.probs).enumerate() {
            out.push_str(&format!("{},{},{}\n", i + 1, label, p));
        }
    }

    pub fn write_csv_writer<W: Write>(&self, mut w: W) -> Result<()> {
        let mut s = String::new();
        self.to_csv_string(&mut s);
        w.write_all(s.as_bytes())?;
        Ok(())
    }
}

/// Maximum entropy of an `n`-letter alphabet: log2(n) bits.
pub fn max_entropy(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidPmf("alphabet must have at least one letter".into()));
    }
    Ok((n as f64).log2())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pmf(probs: &[f64]) -> Pmf {
        Pmf::from_probs(probs.to_vec()).unwrap()
    }

    #[test]
    fn entropy_matches_published_values() {
        assert_eq!(pmf(&[1.0]).entropy(), 0.0);
        assert!((pmf(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]).entropy() - 1.585).abs() < 1.5e-3);
        assert!((pmf(&[0.9, 0.05, 0.05]).entropy() - 0.569).abs() < 1.5e-3);
        assert!((pmf(&[0.30, 0.57, 0.03, 0.10]).entropy() - 1.467).abs() < 1.5e-3);
    }

    #[test]
    fn entropy_bounded_by_log_n() {
        let p = pmf(&[0.7, 0.1, 0.1, 0.1]);
        let h = p.entropy();
        assert!(h >= 0.0 && h <= max_entropy(4).unwrap());
    }

    #[test]
    fn max_entropy_values() {
        assert_eq!(max_entropy(4).unwrap(), 2.0);
        assert_eq!(max_entropy(256).unwrap(), 8.0);
        assert_eq!(max_entropy(1).unwrap(), 0.0);
        assert!(max_entropy(0).is_err());
    }

    #[test]
    fn one_hot_places_mass() {
        let p = Pmf::one_hot(4, 1).unwrap();
        assert_eq!(p.probs(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(Pmf::one_hot(1, 1).unwrap().probs(), &[1.0]);
        let big = Pmf::one_hot(256, 20).unwrap();
        assert_eq!(big.prob(19), 1.0);
        assert_eq!(big.probs().iter().filter(|&&p| p != 0.0).count(), 1);
        assert!(Pmf::one_hot(4, 0).is_err());
        assert!(Pmf::one_hot(4, 5).is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Pmf::from_probs(vec![]).is_err());
        assert!(Pmf::from_probs(vec![0.5, 0.6]).is_err());
        assert!(Pmf::from_probs(vec![-0.1, 1.1]).is_err());
        assert!(Pmf::from_probs(vec![f64::NAN, 1.0]).is_err());
        assert!(Pmf::new(vec!["a"], vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn renormalizes_within_tolerance() {
        let p = Pmf::from_probs(vec![0.5, 0.5 + 4e-10]).unwrap();
        let sum: f64 = p.probs().iter().sum();
        assert!((sum - 1.0).abs() < 1e-15);
        // outside the tolerance the input is rejected, not repaired
        assert!(Pmf::from_probs(vec![0.5, 0.51]).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let p = Pmf::new(vec!["A", "B", "C", "D"], vec![0.1, 0.878, 0.002, 0.02]).unwrap();
        let mut s = String::new();
        p.to_csv_string(&mut s);
        let back = Pmf::from_csv_reader(s.as_bytes(), "mem").unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn csv_errors_name_row_and_column() {
        let bad = "index,label,probability\n1,A,0.5\n2,B,oops\n";
        let err = Pmf::from_csv_reader(bad.as_bytes(), "t.csv").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("row 3") && msg.contains("probability"), "{msg}");

        let empty = "index,label,probability\n";
        assert!(Pmf::from_csv_reader(empty.as_bytes(), "t.csv").is_err());

        let wrong_header = "i,l,p\n1,A,1.0\n";
        assert!(Pmf::from_csv_reader(wrong_header.as_bytes(), "t.csv").is_err());
    }
}
