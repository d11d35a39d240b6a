//! Built-in scenario generators: the good/bad and A–D synthetic user
//! studies, the arteries and iso-surface depiction alphabets, and the metro
//! walking-time alphabet with its answer bands.

pub mod grid;

use crate::benefit::{benefit_bounded, TransformCase};
use crate::error::{Error, Result};
use crate::measures::{divergence, Decomposition, DivergenceSpec, Pmf};
use crate::report::{BarGroup, Cell, Table};

pub use grid::{enumerate_grid_paths, Direction, GridPaths, PathRules};

/// A named scenario: a ground-truth PMF, the outputs of one or more lossy
/// processes, and a set of user decision PMFs over the ground-truth
/// alphabet.
#[derive(Debug, Clone)]
pub struct UserScenario {
    pub name: String,
    pub ground_truth: Pmf,
    pub outputs: Vec<(String, Pmf)>,
    pub users: Vec<(String, Pmf)>,
}

/// Two-state scenario: the truth favours `good` 80/20 but a biased process
/// always reports `bad`; five users differ in how much they correct for it.
pub fn good_bad_scenario() -> UserScenario {
    let letters = || vec!["good", "bad"];
    let pmf = |probs: &[f64]| Pmf::new(letters(), probs.to_vec()).expect("constant PMF");
    UserScenario {
        name: "good-bad".into(),
        ground_truth: pmf(&[0.8, 0.2]),
        outputs: vec![("biased".into(), pmf(&[0.0, 1.0]))],
        users: vec![
            ("LD".into(), pmf(&[0.1, 0.9])),
            ("FD".into(), pmf(&[0.3, 0.7])),
            ("RG".into(), pmf(&[0.5, 0.5])),
            ("UC".into(), pmf(&[0.7, 0.3])),
            ("OC".into(), pmf(&[0.9, 0.1])),
        ],
    }
}

/// Four-value scenario: two aggregation processes map A,B,C,D onto AB,CD —
/// one correct, one biased — and six users reconstruct the original values.
pub fn abcd_scenario() -> UserScenario {
    let pmf = |probs: &[f64]| {
        Pmf::new(vec!["A", "B", "C", "D"], probs.to_vec()).expect("constant PMF")
    };
    let out = |probs: &[f64]| Pmf::new(vec!["AB", "CD"], probs.to_vec()).expect("constant PMF");
    UserScenario {
        name: "abcd".into(),
        ground_truth: pmf(&[0.1, 0.4, 0.2, 0.3]),
        outputs: vec![
            ("correct".into(), out(&[0.5, 0.5])),
            ("biased".into(), out(&[0.0, 1.0])),
        ],
        users: vec![
            ("CG".into(), pmf(&[0.25, 0.25, 0.25, 0.25])),
            ("CU".into(), pmf(&[0.1, 0.4, 0.1, 0.4])),
            ("CB".into(), pmf(&[0.4, 0.1, 0.4, 0.1])),
            ("BG".into(), pmf(&[0.0, 0.0, 0.5, 0.5])),
            ("BS".into(), pmf(&[0.1, 0.1, 0.4, 0.4])),
            ("BM".into(), pmf(&[0.2, 0.2, 0.3, 0.3])),
        ],
    }
}

/// Divergence of every user from the ground truth under every measure,
/// with per-letter decompositions kept for charting.
#[derive(Debug, Clone)]
pub struct DivergenceTable {
    pub title: String,
    pub row_labels: Vec<String>,
    pub letters: Vec<String>,
    pub measures: Vec<DivergenceSpec>,
    /// cells[row][measure]
    pub cells: Vec<Vec<Decomposition>>,
}

impl DivergenceTable {
    pub fn to_table(&self) -> Table {
        let mut t = Table::new(
            self.title.clone(),
            "row".into(),
            self.measures.iter().map(|m| m.label()).collect(),
        );
        for (label, row) in self.row_labels.iter().zip(&self.cells) {
            t.push_row(label.clone(), row.iter().map(|d| Cell::Num(d.total)).collect());
        }
        t
    }

    /// One stacked-bar chart per measure, stacked by letter contribution.
    pub fn to_svg(&self, precision: usize) -> String {
        let mut out = String::new();
        for (mi, m) in self.measures.iter().enumerate() {
            let groups: Vec<BarGroup> = self
                .row_labels
                .iter()
                .zip(&self.cells)
                .map(|(label, row)| BarGroup {
                    label: label.clone(),
                    segments: self
                        .letters
                        .iter()
                        .cloned()
                        .zip(row[mi].per_letter.iter().copied())
                        .collect(),
                })
                .collect();
            out.push_str(&crate::report::stacked_bar_svg(
                &format!("{} — {}", self.title, m.label()),
                &groups,
                precision,
            ));
        }
        out
    }
}

/// Divergence of each user's decision PMF from the scenario's ground truth.
pub fn scenario_divergence_table(
    scenario: &UserScenario,
    measures: &[DivergenceSpec],
) -> Result<DivergenceTable> {
    let mut cells = Vec::with_capacity(scenario.users.len());
    for (_, user) in &scenario.users {
        let mut row = Vec::with_capacity(measures.len());
        for m in measures {
            row.push(divergence(m, user, &scenario.ground_truth)?);
        }
        cells.push(row);
    }
    Ok(DivergenceTable {
        title: format!("{} divergence", scenario.name),
        row_labels: scenario.users.iter().map(|(n, _)| n.clone()).collect(),
        letters: scenario.ground_truth.labels().to_vec(),
        measures: measures.to_vec(),
        cells,
    })
}

/// Ground-truth PMF of the arteries depiction question, answers A–D.
pub fn mip_q() -> Pmf {
    Pmf::new(vec!["A", "B", "C", "D"], vec![0.1, 0.878, 0.002, 0.02]).expect("constant PMF")
}

/// Alternative ground truth with flat/smooth surfaces more probable.
pub fn mip_qprime() -> Pmf {
    Pmf::new(vec!["A", "B", "C", "D"], vec![0.30, 0.57, 0.03, 0.10]).expect("constant PMF")
}

/// Divergence and benefit tables for a four-answer depiction question.
#[derive(Debug, Clone)]
pub struct MipTables {
    pub divergence: DivergenceTable,
    pub benefit: Table,
}

/// For each answer letter X: the divergence of the one-hot answer PMF from
/// `q`, and the bounded benefit of the depiction that collapses `q` onto
/// answer C (output one-hot at letter 3).
pub fn mip_arteries_tables(q: &Pmf, measures: &[DivergenceSpec]) -> Result<MipTables> {
    if q.len() != 4 {
        return Err(Error::InvalidArgument(format!(
            "expected a 4-letter answer alphabet, got {} letters",
            q.len()
        )));
    }
    let labels: Vec<String> = q.labels().to_vec();
    let depiction = Pmf::one_hot_labeled(labels.clone(), 3)?;

    let mut div_cells = Vec::new();
    let mut benefit = Table::new(
        "benefit".to_string(),
        "answer".to_string(),
        measures.iter().map(|m| m.label()).collect(),
    );
    for i in 1..=4 {
        let answer = Pmf::one_hot_labeled(labels.clone(), i)?;
        let mut div_row = Vec::new();
        let mut ben_row = Vec::new();
        let case = TransformCase::new(q.clone(), depiction.clone(), answer.clone())?;
        for m in measures {
            div_row.push(divergence(m, &answer, q)?);
            ben_row.push(Cell::Num(benefit_bounded(&case, m)?.benefit));
        }
        div_cells.push(div_row);
        benefit.push_row(labels[i - 1].clone(), ben_row);
    }
    Ok(MipTables {
        divergence: DivergenceTable {
            title: "divergence".into(),
            row_labels: labels.clone(),
            letters: labels,
            measures: measures.to_vec(),
            cells: div_cells,
        },
        benefit,
    })
}

/// Rewrites the last probability so that a plain left-to-right sum of the
/// vector is exactly 1.0. The correction is at most a few ulps of the
/// accumulated sum.
fn seal_unit_sum(probs: &mut [f64]) {
    let n = probs.len();
    let partial: f64 = probs[..n - 1].iter().sum();
    probs[n - 1] = 1.0 - partial;
}

/// 1-based answer positions of letters A, B, C, D in [`isosurface_pmf`].
pub const ISO_ANSWER_INDICES: [(char, usize); 4] = [('A', 1), ('B', 6), ('C', 71), ('D', 256)];

/// The 256-configuration iso-surface alphabet: answer A and 4 other letters
/// at 0.01, answer B and 64 others at 0.0002, answer C and 184 others at
/// 0.0001, answer D at 0.9185. The sum is exactly 1.
pub fn isosurface_pmf() -> Pmf {
    let mut probs = Vec::with_capacity(256);
    probs.extend(std::iter::repeat_n(0.01, 5));
    probs.extend(std::iter::repeat_n(0.0002, 65));
    probs.extend(std::iter::repeat_n(0.0001, 185));
    probs.push(0.9185);
    seal_unit_sum(&mut probs);
    let labels: Vec<String> = (1..=256)
        .map(|i| match ISO_ANSWER_INDICES.iter().find(|(_, idx)| *idx == i) {
            Some((c, _)) => c.to_string(),
            None => i.to_string(),
        })
        .collect();
    Pmf::new(labels, probs).expect("constant PMF")
}

/// Divergence table of the four one-hot answers against the iso-surface
/// alphabet.
pub fn isosurface_tables(measures: &[DivergenceSpec]) -> Result<DivergenceTable> {
    let q = isosurface_pmf();
    let mut cells = Vec::new();
    let mut row_labels = Vec::new();
    for (letter, idx) in ISO_ANSWER_INDICES {
        let p = Pmf::one_hot_labeled(q.labels().to_vec(), idx)?;
        let mut row = Vec::new();
        for m in measures {
            row.push(divergence(m, &p, &q)?);
        }
        cells.push(row);
        row_labels.push(letter.to_string());
    }
    Ok(DivergenceTable {
        title: "divergence".into(),
        row_labels,
        letters: q.labels().to_vec(),
        measures: measures.to_vec(),
        cells,
    })
}

/// Parameters of the walking-time alphabet: the estimate peak `xi` (minutes)
/// and the alphabet size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LondonPmfSpec {
    pub xi: u32,
    pub n: u32,
}

impl LondonPmfSpec {
    /// Spec with the default 256-letter alphabet.
    pub fn new(xi: u32) -> Result<Self> {
        Self::with_n(xi, 256)
    }

    pub fn with_n(xi: u32, n: u32) -> Result<Self> {
        let spec = LondonPmfSpec { xi, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 22 || self.xi < 9 || self.xi > self.n - 13 {
            return Err(Error::InvalidArgument(format!(
                "xi must be in [9, n-13] so every band is non-empty; got xi={}, n={}",
                self.xi, self.n
            )));
        }
        Ok(())
    }
}

/// The three answer bands around the estimate peak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnswerCategory {
    SpotOn,
    Close,
    WildGuess,
}

impl AnswerCategory {
    pub const ALL: [AnswerCategory; 3] =
        [AnswerCategory::SpotOn, AnswerCategory::Close, AnswerCategory::WildGuess];

    pub fn name(&self) -> &'static str {
        match self {
            AnswerCategory::SpotOn => "spot-on",
            AnswerCategory::Close => "close",
            AnswerCategory::WildGuess => "wild-guess",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "spot-on" | "spot_on" | "spoton" => Ok(AnswerCategory::SpotOn),
            "close" => Ok(AnswerCategory::Close),
            "wild-guess" | "wild_guess" | "wild" => Ok(AnswerCategory::WildGuess),
            other => Err(Error::InvalidArgument(format!(
                "unknown category `{other}`, expected spot-on, close or wild-guess"
            ))),
        }
    }

    fn index(&self) -> usize {
        match self {
            AnswerCategory::SpotOn => 0,
            AnswerCategory::Close => 1,
            AnswerCategory::WildGuess => 2,
        }
    }
}

/// Piecewise PMF over minutes 1..=n, peaked at `xi`:
///
/// ```text
/// 0.12        for xi-2 <= i <= xi+2    (spot-on)
/// 0.026       for xi-7 <= i <= xi-3    (close, below)
/// 0.026       for xi+3 <= i <= xi+12   (close, above)
/// 0.01/(n-20) everywhere else          (wild-guess)
/// ```
///
/// With n = 256 the wild-guess band holds 236 letters at 0.01/236. The
/// constructed vector sums to exactly 1.
pub fn london_pmf(spec: &LondonPmfSpec) -> Result<Pmf> {
    spec.validate()?;
    let n = spec.n as i64;
    let xi = spec.xi as i64;
    let wild = 0.01 / (n - 20) as f64;
    let mut probs = Vec::with_capacity(spec.n as usize);
    for i in 1..=n {
        let p = if (xi - 2..=xi + 2).contains(&i) {
            0.12
        } else if (xi - 7..=xi - 3).contains(&i) || (xi + 3..=xi + 12).contains(&i) {
            0.026
        } else {
            wild
        };
        probs.push(p);
    }
    seal_unit_sum(&mut probs);
    Pmf::from_probs(probs)
}

/// Maps an answer in minutes to its band.
pub fn categorize_answer(answer: u32, spec: &LondonPmfSpec) -> Result<AnswerCategory> {
    spec.validate()?;
    if answer < 1 || answer > spec.n {
        return Err(Error::IndexOutOfRange { index: answer as usize, len: spec.n as usize });
    }
    let a = answer as i64;
    let xi = spec.xi as i64;
    Ok(if (xi - 2..=xi + 2).contains(&a) {
        AnswerCategory::SpotOn
    } else if (xi - 7..=xi - 3).contains(&a) || (xi + 3..=xi + 12).contains(&a) {
        AnswerCategory::Close
    } else {
        AnswerCategory::WildGuess
    })
}

/// Representative one-hot answer letter for a category: the peak letter for
/// spot-on, the first letter of the upper close band for close, and the
/// last letter for wild-guess.
pub fn category_representative(category: AnswerCategory, spec: &LondonPmfSpec) -> u32 {
    match category {
        AnswerCategory::SpotOn => spec.xi,
        AnswerCategory::Close => spec.xi + 3,
        AnswerCategory::WildGuess => spec.n,
    }
}

/// Bounded benefit per category of the fully collapsed depiction: input is
/// the walking-time PMF, output a single-letter alphabet (entropy 0), and
/// the reconstruction a one-hot at the category's representative letter.
pub fn london_category_benefits(
    spec: &LondonPmfSpec,
    measure: &DivergenceSpec,
) -> Result<[f64; 3]> {
    let input = london_pmf(spec)?;
    let output = Pmf::one_hot_labeled(vec!["depiction"], 1)?;
    let mut out = [0.0; 3];
    for cat in AnswerCategory::ALL {
        let recon = Pmf::one_hot_labeled(input.labels().to_vec(), category_representative(cat, spec) as usize)?;
        let case = TransformCase::new(input.clone(), output.clone(), recon)?;
        out[cat.index()] = benefit_bounded(&case, measure)?.benefit;
    }
    Ok(out)
}

/// Benefit table: one row per category, one column per measure.
pub fn london_benefit_table(spec: &LondonPmfSpec, measures: &[DivergenceSpec]) -> Result<Table> {
    let mut columns = Vec::new();
    let mut per_measure = Vec::new();
    for m in measures {
        columns.push(m.label());
        per_measure.push(london_category_benefits(spec, m)?);
    }
    let mut t = Table::new("benefit".to_string(), "category".to_string(), columns);
    for cat in AnswerCategory::ALL {
        t.push_row(
            cat.name(),
            per_measure.iter().map(|b| Cell::Num(b[cat.index()])).collect(),
        );
    }
    Ok(t)
}

/// How many answers fell into each band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CategoryCounts {
    pub spot_on: u32,
    pub close: u32,
    pub wild_guess: u32,
}

impl CategoryCounts {
    pub fn new(spot_on: u32, close: u32, wild_guess: u32) -> Self {
        CategoryCounts { spot_on, close, wild_guess }
    }

    pub fn add(&mut self, category: AnswerCategory) {
        match category {
            AnswerCategory::SpotOn => self.spot_on += 1,
            AnswerCategory::Close => self.close += 1,
            AnswerCategory::WildGuess => self.wild_guess += 1,
        }
    }

    pub fn total(&self) -> u32 {
        self.spot_on + self.close + self.wild_guess
    }

    pub fn get(&self, category: AnswerCategory) -> u32 {
        match category {
            AnswerCategory::SpotOn => self.spot_on,
            AnswerCategory::Close => self.close,
            AnswerCategory::WildGuess => self.wild_guess,
        }
    }
}

/// Count-weighted mean of the per-category benefits.
pub fn per_question_benefit(
    counts: &CategoryCounts,
    spec: &LondonPmfSpec,
    measure: &DivergenceSpec,
) -> Result<f64> {
    if counts.total() == 0 {
        return Err(Error::InvalidArgument("category counts are all zero".into()));
    }
    let b = london_category_benefits(spec, measure)?;
    let weighted = counts.spot_on as f64 * b[0] + counts.close as f64 * b[1] + counts.wild_guess as f64 * b[2];
    Ok(weighted / counts.total() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::candidate_measures;

    const TOL3: f64 = 1.5e-3;

    #[test]
    fn good_bad_published_divergences() {
        let s = good_bad_scenario();
        let t = scenario_divergence_table(&s, &[DivergenceSpec::js()]).unwrap();
        let uc = &t.cells[3][0];
        let oc = &t.cells[4][0];
        assert!((uc.total - 0.010).abs() < TOL3);
        assert!((oc.total - 0.014).abs() < TOL3);
        // under-compensation and over-compensation coincide under new:1
        let t = scenario_divergence_table(&s, &[DivergenceSpec::d_new(1.0)]).unwrap();
        assert!((t.cells[3][0].total - t.cells[4][0].total).abs() < 1e-12);
        assert!((t.cells[3][0].total - 0.13750352374993502).abs() < 1e-12); // frozen oracle value
    }

    #[test]
    fn abcd_published_properties() {
        let s = abcd_scenario();
        assert_eq!(s.ground_truth.probs(), &[0.1, 0.4, 0.2, 0.3]);
        let t = scenario_divergence_table(&s, &[DivergenceSpec::d_ncm(1.0)]).unwrap();
        let bg = &t.cells[3][0];
        assert_eq!(t.row_labels[3], "BG");
        assert_eq!(bg.per_letter[0], 0.0);
        assert_eq!(bg.per_letter[1], 0.0);
        assert!(bg.per_letter[2] > 0.0 && bg.per_letter[3] > 0.0);
        // frozen oracle value for CG under js
        let t = scenario_divergence_table(&s, &[DivergenceSpec::js()]).unwrap();
        assert!((t.cells[0][0].total - 0.040201582346141906).abs() < 1e-12);
        // relabelling symmetry: swapping within the AB and CD pairs turns
        // CB into CU, so CU against the truth equals CB against the
        // within-pair-swapped truth
        let swapped = Pmf::new(vec!["A", "B", "C", "D"], vec![0.4, 0.1, 0.3, 0.2]).unwrap();
        let cu = crate::measures::js(&s.users[1].1, &s.ground_truth).unwrap().total;
        let cb_sw = crate::measures::js(&s.users[2].1, &swapped).unwrap().total;
        assert!((cu - cb_sw).abs() < 1e-12);
    }

    #[test]
    fn mip_tables_published_values() {
        let t = mip_arteries_tables(&mip_q(), &candidate_measures()).unwrap();
        let js_col: Vec<f64> = t.divergence.cells.iter().map(|r| r[0].total).collect();
        for (got, want) in js_col.iter().zip([0.758, 0.064, 0.990, 0.929]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
        let ncm1: Vec<f64> = t.divergence.cells.iter().map(|r| r[3].total).collect();
        for (got, want) in ncm1.iter().zip([0.926, 0.166, 0.999, 0.986]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
        let qp = mip_arteries_tables(&mip_qprime(), &candidate_measures()).unwrap();
        let js_ben: Vec<f64> = qp
            .benefit
            .rows
            .iter()
            .map(|r| match r.cells[0] {
                Cell::Num(x) => x,
                _ => panic!("numeric cell expected"),
            })
            .collect();
        for (got, want) in js_ben.iter().zip([0.480, 0.951, -0.337, -0.049]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
    }

    #[test]
    fn isosurface_pmf_shape() {
        let q = isosurface_pmf();
        assert_eq!(q.len(), 256);
        let sum: f64 = q.probs().iter().sum();
        assert_eq!(sum, 1.0);
        assert!((q.entropy() - 0.850).abs() < TOL3);
        assert_eq!(q.labels()[0], "A");
        assert_eq!(q.labels()[5], "B");
        assert_eq!(q.labels()[70], "C");
        assert_eq!(q.labels()[255], "D");
        let t = isosurface_tables(&candidate_measures()).unwrap();
        assert!((t.cells[3][4].total - 0.010).abs() < TOL3); // D under ncm:2
        assert!((t.cells[1][0].total - 0.999).abs() < TOL3); // B under js
    }

    #[test]
    fn london_pmf_bands_and_exact_sum() {
        let spec = LondonPmfSpec::new(20).unwrap();
        let q = london_pmf(&spec).unwrap();
        assert_eq!(q.prob(19), 0.12); // q_20
        assert_eq!(q.prob(0), 0.01 / 236.0); // q_1
        for xi in [9u32, 17, 20, 32, 45, 243] {
            let q = london_pmf(&LondonPmfSpec::new(xi).unwrap()).unwrap();
            let sum: f64 = q.probs().iter().sum();
            assert_eq!(sum, 1.0, "xi={xi}");
        }
        assert!((q.entropy() - 4.034).abs() < 0.01);
        assert!(LondonPmfSpec::new(8).is_err());
        assert!(LondonPmfSpec::new(244).is_err());
        assert!(LondonPmfSpec::with_n(9, 21).is_err());
    }

    #[test]
    fn categorization_bands() {
        let spec = LondonPmfSpec::new(20).unwrap();
        assert_eq!(categorize_answer(20, &spec).unwrap(), AnswerCategory::SpotOn);
        assert_eq!(categorize_answer(30, &spec).unwrap(), AnswerCategory::Close);
        assert_eq!(categorize_answer(8, &spec).unwrap(), AnswerCategory::WildGuess);
        assert!(categorize_answer(0, &spec).is_err());
        assert!(categorize_answer(257, &spec).is_err());
        // bands partition the whole range
        for a in 1..=256 {
            categorize_answer(a, &spec).unwrap();
        }
    }

    #[test]
    fn london_benefit_published_columns() {
        let spec = LondonPmfSpec::new(20).unwrap();
        let new2 = london_category_benefits(&spec, &DivergenceSpec::d_new(2.0)).unwrap();
        for (got, want) in new2.iter().zip([0.287, 0.033, -0.017]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
        let js = london_category_benefits(&spec, &DivergenceSpec::js()).unwrap();
        for (got, want) in js.iter().zip([-1.765, -3.266, -3.963]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
        let ncm1 = london_category_benefits(&spec, &DivergenceSpec::d_ncm(1.0)).unwrap();
        for (got, want) in ncm1.iter().zip([-3.252, -3.815, -3.966]) {
            assert!((got - want).abs() < TOL3, "{got} vs {want}");
        }
    }

    #[test]
    fn london_benefit_composes_from_parts() {
        // each entry equals H(pmf) - 8 * divergence(one-hot, pmf)
        let spec = LondonPmfSpec::new(32).unwrap();
        let q = london_pmf(&spec).unwrap();
        for m in candidate_measures() {
            let b = london_category_benefits(&spec, &m).unwrap();
            for cat in AnswerCategory::ALL {
                let rep = category_representative(cat, &spec) as usize;
                let p = Pmf::one_hot_labeled(q.labels().to_vec(), rep).unwrap();
                let expect = q.entropy() - 8.0 * divergence(&m, &p, &q).unwrap().total;
                assert!((b[cat.index()] - expect).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn close_band_representative_is_interchangeable() {
        // one-hot at xi-3 and xi+3 carry the same probability (0.026), so
        // every candidate measure gives identical totals
        let spec = LondonPmfSpec::new(40).unwrap();
        let q = london_pmf(&spec).unwrap();
        for m in candidate_measures() {
            let lo = Pmf::one_hot_labeled(q.labels().to_vec(), 37).unwrap();
            let hi = Pmf::one_hot_labeled(q.labels().to_vec(), 43).unwrap();
            let a = divergence(&m, &lo, &q).unwrap().total;
            let b = divergence(&m, &hi, &q).unwrap().total;
            assert!((a - b).abs() < 1e-12, "{}: {a} vs {b}", m.label());
        }
    }

    #[test]
    fn per_question_benefit_published_values() {
        let spec = LondonPmfSpec::new(20).unwrap();
        let q1 = CategoryCounts::new(4, 5, 3);
        let js = per_question_benefit(&q1, &spec, &DivergenceSpec::js()).unwrap();
        assert!((js - -2.940).abs() < TOL3);
        let new2 = per_question_benefit(&q1, &spec, &DivergenceSpec::d_new(2.0)).unwrap();
        assert!((new2 - 0.105).abs() < TOL3);
        let q3 = CategoryCounts::new(0, 3, 9);
        let js3 = per_question_benefit(&q3, &spec, &DivergenceSpec::js()).unwrap();
        assert!((js3 - -3.789).abs() < TOL3);
        assert!(per_question_benefit(&CategoryCounts::default(), &spec, &DivergenceSpec::js()).is_err());
    }
}
