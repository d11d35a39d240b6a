//! Multi-criteria analysis of the candidate measures: a staged score
//! matrix with eliminations, sums, and configurable importance weights.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::report::{Cell, Table};

/// Importance label of a criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Importance {
    Critical,
    Important,
    Helpful,
}

impl Importance {
    pub fn name(&self) -> &'static str {
        match self {
            Importance::Critical => "critical",
            Importance::Important => "important",
            Importance::Helpful => "helpful",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "critical" => Ok(Importance::Critical),
            "important" => Ok(Importance::Important),
            "helpful" => Ok(Importance::Helpful),
            other => Err(Error::InvalidTable(format!(
                "unknown importance `{other}`, expected critical, important or helpful"
            ))),
        }
    }
}

/// Elimination stage a criterion belongs to: criterion 1 alone, criteria
/// 2..5 together, and criteria 6..9 together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    One,
    TwoToFive,
    SixToNine,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::One, Stage::TwoToFive, Stage::SixToNine];

    pub fn name(&self) -> &'static str {
        match self {
            Stage::One => "1",
            Stage::TwoToFive => "2-5",
            Stage::SixToNine => "6-9",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "1" => Ok(Stage::One),
            "2-5" => Ok(Stage::TwoToFive),
            "6-9" => Ok(Stage::SixToNine),
            other => Err(Error::InvalidTable(format!(
                "unknown stage `{other}`, expected 1, 2-5 or 6-9"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub name: String,
    pub importance: Importance,
    pub stage: Stage,
}

/// One score cell: an integer in [0, 5], possibly kept only for comparison
/// after the measure was eliminated (rendered in parentheses).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Score {
    pub value: u8,
    pub comparison_only: bool,
}

/// The staged score matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaTable {
    pub measures: Vec<String>,
    pub criteria: Vec<Criterion>,
    /// scores[criterion][measure]; `None` marks an absent cell.
    pub scores: Vec<Vec<Option<Score>>>,
    /// Stage whose conclusion eliminated the measure, if any.
    pub eliminated_at: Vec<Option<Stage>>,
}

impl CriteriaTable {
    pub fn validate(&self) -> Result<()> {
        if self.measures.is_empty() || self.criteria.is_empty() {
            return Err(Error::InvalidTable("table needs at least one measure and one criterion".into()));
        }
        if self.scores.len() != self.criteria.len() || self.eliminated_at.len() != self.measures.len() {
            return Err(Error::InvalidTable("matrix dimensions do not match the labels".into()));
        }
        for (ci, row) in self.scores.iter().enumerate() {
            if row.len() != self.measures.len() {
                return Err(Error::InvalidTable(format!(
                    "criterion `{}` has {} cells for {} measures",
                    self.criteria[ci].name,
                    row.len(),
                    self.measures.len()
                )));
            }
            for (mi, cell) in row.iter().enumerate() {
                if let Some(score) = cell {
                    if score.value > 5 {
                        return Err(Error::InvalidTable(format!(
                            "score {} out of [0, 5] for `{}` x `{}`",
                            score.value, self.criteria[ci].name, self.measures[mi]
                        )));
                    }
                    // once eliminated, later cells may exist only for comparison
                    if let Some(stage) = self.eliminated_at[mi] {
                        if self.criteria[ci].stage > stage && !score.comparison_only {
                            return Err(Error::InvalidTable(format!(
                                "`{}` was eliminated after stage {} but scores `{}`",
                                self.measures[mi],
                                stage.name(),
                                self.criteria[ci].name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Last stage with criteria in this table.
    fn final_stage(&self) -> Stage {
        self.criteria.iter().map(|c| c.stage).max().expect("validated non-empty")
    }

    /// True when the measure still participates in the given stage.
    fn alive_during(&self, measure: usize, stage: Stage) -> bool {
        match self.eliminated_at[measure] {
            None => true,
            Some(s) => s >= stage,
        }
    }

    /// Reads the table from CSV with header `criterion,importance,stage,<m1>,...`.
    /// Blank cells are absent scores; parenthesized values are
    /// comparison-only.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let file = crate::error::open_file(path)?;
        Self::from_csv_reader(file, &path.display().to_string())
    }

    pub fn from_csv_reader<R: Read>(reader: R, name: &str) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let headers = rdr.headers()?.clone();
        let head: Vec<&str> = headers.iter().collect();
        if head.len() < 4 || head[0] != "criterion" || head[1] != "importance" || head[2] != "stage" {
            return Err(Error::BadFile {
                path: name.into(),
                reason: "expected header `criterion,importance,stage,<measure...>`".into(),
            });
        }
        let measures: Vec<String> = head[3..].iter().map(|s| s.to_string()).collect();
        let mut criteria = Vec::new();
        let mut scores = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let row = i + 2;
            let cell_err = |column: &str, reason: String| Error::MalformedRow {
                path: name.into(),
                row,
                column: column.into(),
                reason,
            };
            criteria.push(Criterion {
                name: rec.get(0).unwrap_or("").to_string(),
                importance: Importance::parse(rec.get(1).unwrap_or(""))
                    .map_err(|e| cell_err("importance", e.to_string()))?,
                stage: Stage::parse(rec.get(2).unwrap_or(""))
                    .map_err(|e| cell_err("stage", e.to_string()))?,
            });
            let mut score_row = Vec::new();
            for (mi, m) in measures.iter().enumerate() {
                let text = rec.get(3 + mi).unwrap_or("").trim();
                score_row.push(parse_score(text).map_err(|e| cell_err(m, e.to_string()))?);
            }
            scores.push(score_row);
        }
        let eliminated_at = derive_eliminations(&measures, &criteria, &scores);
        let table = CriteriaTable { measures, criteria, scores, eliminated_at };
        table.validate()?;
        Ok(table)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("criterion,importance,stage");
        for m in &self.measures {
            out.push(',');
            out.push_str(m);
        }
        out.push('\n');
        for (c, row) in self.criteria.iter().zip(&self.scores) {
            out.push_str(&format!("{},{},{}", c.name, c.importance.name(), c.stage.name()));
            for cell in row {
                out.push(',');
                match cell {
                    Some(Score { value, comparison_only: false }) => out.push_str(&value.to_string()),
                    Some(Score { value, comparison_only: true }) => out.push_str(&format!("({value})")),
                    None => {}
                }
            }
            out.push('\n');
        }
        out
    }

    /// Scores plus stage-sum rows and the winner, ready for rendering.
    pub fn to_report_table(&self) -> Table {
        let mut t = Table::new("multi-criteria analysis".to_string(), "criterion".to_string(), self.measures.clone());
        for (c, row) in self.criteria.iter().zip(&self.scores) {
            let cells = row
                .iter()
                .map(|cell| match cell {
                    Some(Score { value, comparison_only: false }) => Cell::Int(*value as i64),
                    Some(Score { value, comparison_only: true }) => Cell::Text(format!("({value})")),
                    None => Cell::Empty,
                })
                .collect();
            t.push_row(format!("{} [{}]", c.name, c.importance.name()), cells);
        }
        let sums_15 = sums_through_stage(self, Stage::TwoToFive);
        t.push_row(
            "sum 1-5".to_string(),
            sums_15.iter().map(|s| s.map_or(Cell::Empty, Cell::Int)).collect(),
        );
        let sums_69 = stage_sums(self, Stage::SixToNine).unwrap_or_else(|_| vec![None; self.measures.len()]);
        let cum = sums_through_stage(self, Stage::SixToNine);
        let cells = sums_69
            .iter()
            .zip(&cum)
            .map(|(s, c)| match (s, c) {
                (Some(s), Some(c)) => Cell::Text(format!("{s} ({c})")),
                _ => Cell::Empty,
            })
            .collect();
        t.push_row("sum 6-9 (1-9)".to_string(), cells);
        t
    }
}

fn parse_score(text: &str) -> Result<Option<Score>> {
    if text.is_empty() {
        return Ok(None);
    }
    let (body, comparison_only) = match text.strip_prefix('(') {
        Some(rest) => match rest.strip_suffix(')') {
            Some(core) => (core, true),
            None => return Err(Error::InvalidTable(format!("unbalanced parentheses in `{text}`"))),
        },
        None => (text, false),
    };
    let value: u8 = body
        .parse()
        .map_err(|_| Error::InvalidTable(format!("`{text}` is not a score in [0, 5]")))?;
    if value > 5 {
        return Err(Error::InvalidTable(format!("score {value} out of [0, 5]")));
    }
    Ok(Some(Score { value, comparison_only }))
}

/// A measure counts as eliminated after the last stage in which it has any
/// counted (non-comparison) score, unless that is the table's final stage.
fn derive_eliminations(
    measures: &[String],
    criteria: &[Criterion],
    scores: &[Vec<Option<Score>>],
) -> Vec<Option<Stage>> {
    let final_stage = criteria.iter().map(|c| c.stage).max().unwrap_or(Stage::One);
    (0..measures.len())
        .map(|mi| {
            let last = criteria
                .iter()
                .zip(scores)
                .filter(|(_, row)| matches!(row[mi], Some(s) if !s.comparison_only))
                .map(|(c, _)| c.stage)
                .max();
            match last {
                Some(stage) if stage < final_stage => Some(stage),
                _ => None,
            }
        })
        .collect()
}

/// The built-in analysis table: nine criteria scoring nine measures, with
/// `kl@0.3` eliminated after the boundedness test (its later scores kept
/// for comparison only) and the conditional-entropy and Minkowski columns
/// eliminated after criteria 1-5.
pub fn reference_table() -> CriteriaTable {
    let measures: Vec<String> = [
        "kl@0.3", "js", "H(P|Q)", "new:1", "new:2", "ncm:1", "ncm:2", "mink:2", "mink:200",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let c = |name: &str, importance: Importance, stage: Stage| Criterion {
        name: name.into(),
        importance,
        stage,
    };
    let criteria = vec![
        c("1. Boundedness", Importance::Critical, Stage::One),
        c("2. Number of PMFs", Importance::Important, Stage::TwoToFive),
        c("3. Entropic measures", Importance::Important, Stage::TwoToFive),
        c("4. Curve shapes (k=1)", Importance::Helpful, Stage::TwoToFive),
        c("5. Curve shapes (k=2)", Importance::Helpful, Stage::TwoToFive),
        c("6. Scenario: good and bad", Importance::Helpful, Stage::SixToNine),
        c("7. Scenario: A B C D", Importance::Helpful, Stage::SixToNine),
        c("8. Case study: volume visualization", Importance::Important, Stage::SixToNine),
        c("9. Case study: metro maps", Importance::Important, Stage::SixToNine),
    ];
    let n = |v: u8| Some(Score { value: v, comparison_only: false });
    let g = |v: u8| Some(Score { value: v, comparison_only: true });
    let x: Option<Score> = None;
    let scores = vec![
        vec![n(0), n(5), n(5), n(5), n(5), n(5), n(5), n(3), n(3)],
        vec![g(5), n(5), n(2), n(5), n(5), n(5), n(5), n(5), n(5)],
        vec![g(5), n(5), n(5), n(5), n(5), n(5), n(5), n(1), n(1)],
        vec![g(5), n(5), n(1), n(2), n(4), n(2), n(4), n(3), n(3)],
        vec![g(5), n(4), n(1), n(3), n(5), n(3), n(5), n(2), n(3)],
        vec![x, n(3), x, n(5), n(4), n(5), n(4), x, x],
        vec![x, n(4), x, n(5), n(3), n(2), n(1), x, x],
        vec![x, n(5), x, n(1), n(5), n(5), n(5), x, x],
        vec![x, n(3), x, n(1), n(5), n(3), n(3), x, x],
    ];
    let eliminated_at = vec![
        Some(Stage::One),
        None,
        Some(Stage::TwoToFive),
        None,
        None,
        None,
        None,
        Some(Stage::TwoToFive),
        Some(Stage::TwoToFive),
    ];
    let table = CriteriaTable { measures, criteria, scores, eliminated_at };
    table.validate().expect("built-in table is valid");
    table
}

/// Integer sums over one stage's criteria, per measure; `None` for measures
/// no longer alive during that stage or without counted scores there.
pub fn stage_sums(table: &CriteriaTable, stage: Stage) -> Result<Vec<Option<i64>>> {
    table.validate()?;
    if !table.criteria.iter().any(|c| c.stage == stage) {
        return Err(Error::InvalidTable(format!("table has no stage {} criteria", stage.name())));
    }
    Ok((0..table.measures.len())
        .map(|mi| {
            if !table.alive_during(mi, stage) {
                return None;
            }
            let mut sum = 0i64;
            let mut any = false;
            for (c, row) in table.criteria.iter().zip(&table.scores) {
                if c.stage != stage {
                    continue;
                }
                match row[mi] {
                    Some(s) if !s.comparison_only => {
                        sum += s.value as i64;
                        any = true;
                    }
                    _ => return None,
                }
            }
            any.then_some(sum)
        })
        .collect())
}

/// Sums over all criteria up to and including the given stage, for measures
/// alive during it. With `Stage::TwoToFive` this is the printed criteria
/// 1-5 sum row; with `Stage::SixToNine` the cumulative 1-9 sums.
pub fn sums_through_stage(table: &CriteriaTable, stage: Stage) -> Vec<Option<i64>> {
    (0..table.measures.len())
        .map(|mi| {
            if !table.alive_during(mi, stage) {
                return None;
            }
            let mut sum = 0i64;
            for (c, row) in table.criteria.iter().zip(&table.scores) {
                if c.stage > stage {
                    continue;
                }
                match row[mi] {
                    Some(s) if !s.comparison_only => sum += s.value as i64,
                    _ => return None,
                }
            }
            Some(sum)
        })
        .collect()
}

/// The measure with the highest final-stage sum; ties break by column
/// order.
pub fn winner(table: &CriteriaTable) -> Result<String> {
    let sums = stage_sums(table, table.final_stage())?;
    let best = sums
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.map(|v| (i, v)))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .ok_or_else(|| Error::InvalidTable("no measure survives to the final stage".into()))?;
    Ok(table.measures[best.0].clone())
}

/// Importance weights for the weighted ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights {
    map: BTreeMap<Importance, f64>,
}

impl Weights {
    pub fn unit() -> Self {
        let mut map = BTreeMap::new();
        map.insert(Importance::Critical, 1.0);
        map.insert(Importance::Important, 1.0);
        map.insert(Importance::Helpful, 1.0);
        Weights { map }
    }

    pub fn set(&mut self, importance: Importance, weight: f64) -> Result<()> {
        if !weight.is_finite() || weight <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "weight for {} must be positive, got {weight}",
                importance.name()
            )));
        }
        self.map.insert(importance, weight);
        Ok(())
    }

    pub fn get(&self, importance: Importance) -> Option<f64> {
        self.map.get(&importance).copied()
    }

    /// Parses `critical=4,important=2,helpful=1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut weights = Weights::unit();
        for part in text.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected name=weight, got `{part}`")))?;
            let importance = Importance::parse(key.trim())
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let weight: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("`{value}` is not a number")))?;
            weights.set(importance, weight)?;
        }
        Ok(weights)
    }
}

/// Measures that survive every elimination, ranked by importance-weighted
/// score sum (descending); ties break by column order. Comparison-only
/// cells never contribute.
pub fn weighted_rank(table: &CriteriaTable, weights: &Weights) -> Result<Vec<(String, f64)>> {
    table.validate()?;
    for c in &table.criteria {
        if weights.get(c.importance).is_none() {
            return Err(Error::InvalidArgument(format!(
                "missing weight for importance `{}`",
                c.importance.name()
            )));
        }
    }
    let mut ranked: Vec<(usize, String, f64)> = Vec::new();
    for (mi, label) in table.measures.iter().enumerate() {
        if table.eliminated_at[mi].is_some() {
            continue;
        }
        let mut total = 0.0;
        for (c, row) in table.criteria.iter().zip(&table.scores) {
            if let Some(s) = row[mi] {
                if !s.comparison_only {
                    total += weights.get(c.importance).expect("checked") * s.value as f64;
                }
            }
        }
        ranked.push((mi, label.clone(), total));
    }
    ranked.sort_by(|a, b| b.2.partial_cmp(&a.2).expect("finite").then(a.0.cmp(&b.0)));
    Ok(ranked.into_iter().map(|(_, label, total)| (label, total)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_sums_and_winner() {
        let t = reference_table();
        let sums = sums_through_stage(&t, Stage::TwoToFive);
        assert_eq!(
            sums,
            vec![
                None,
                Some(24),
                Some(14),
                Some(20),
                Some(24),
                Some(20),
                Some(24),
                Some(14),
                Some(15)
            ]
        );
        let late = stage_sums(&t, Stage::SixToNine).unwrap();
        assert_eq!(late, vec![None, Some(15), None, Some(12), Some(17), Some(15), Some(13), None, None]);
        let cumulative = sums_through_stage(&t, Stage::SixToNine);
        assert_eq!(
            cumulative,
            vec![None, Some(39), None, Some(32), Some(41), Some(35), Some(37), None, None]
        );
        assert_eq!(winner(&t).unwrap(), "new:2");
    }

    #[test]
    fn eliminations_are_monotone() {
        let t = reference_table();
        for (mi, stage) in t.eliminated_at.iter().enumerate() {
            if let Some(stage) = stage {
                for later in Stage::ALL.iter().filter(|s| *s > stage) {
                    let sums = stage_sums(&t, *later).unwrap();
                    assert!(sums[mi].is_none(), "{} resurfaced at {}", t.measures[mi], later.name());
                }
            }
        }
    }

    #[test]
    fn csv_round_trip_preserves_the_table() {
        let t = reference_table();
        let csv = t.to_csv();
        let back = CriteriaTable::from_csv_reader(csv.as_bytes(), "mem").unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn unit_weights_match_sum_ranking() {
        let t = reference_table();
        let ranked = weighted_rank(&t, &Weights::unit()).unwrap();
        assert_eq!(ranked[0].0, "new:2");
        assert_eq!(ranked[0].1, 41.0);
        let names: Vec<&str> = ranked.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, vec!["new:2", "js", "ncm:2", "ncm:1", "new:1"]);
    }

    #[test]
    fn weighted_ranking_with_importance_emphasis() {
        // frozen from the weighted-sum oracle: 4/2/1 weights
        let t = reference_table();
        let w = Weights::parse("critical=4,important=2,helpful=1").unwrap();
        let ranked = weighted_rank(&t, &w).unwrap();
        let expect = [("new:2", 76.0), ("js", 72.0), ("ncm:2", 70.0), ("ncm:1", 68.0), ("new:1", 59.0)];
        for ((name, total), (ename, etotal)) in ranked.iter().zip(expect) {
            assert_eq!(name, ename);
            assert_eq!(*total, etotal);
        }
    }

    #[test]
    fn single_measure_table_ranks_itself() {
        let t = CriteriaTable {
            measures: vec!["js".into()],
            criteria: vec![Criterion {
                name: "only".into(),
                importance: Importance::Helpful,
                stage: Stage::One,
            }],
            scores: vec![vec![Some(Score { value: 4, comparison_only: false })]],
            eliminated_at: vec![None],
        };
        let ranked = weighted_rank(&t, &Weights::unit()).unwrap();
        assert_eq!(ranked, vec![("js".to_string(), 4.0)]);
        assert_eq!(winner(&t).unwrap(), "js");
    }

    #[test]
    fn all_zero_table_sums_to_zero() {
        let t = CriteriaTable {
            measures: vec!["a".into(), "b".into()],
            criteria: vec![
                Criterion { name: "c1".into(), importance: Importance::Helpful, stage: Stage::One },
                Criterion { name: "c2".into(), importance: Importance::Helpful, stage: Stage::One },
            ],
            scores: vec![
                vec![Some(Score { value: 0, comparison_only: false }); 2],
                vec![Some(Score { value: 0, comparison_only: false }); 2],
            ],
            eliminated_at: vec![None, None],
        };
        assert_eq!(stage_sums(&t, Stage::One).unwrap(), vec![Some(0), Some(0)]);
        assert!(stage_sums(&t, Stage::SixToNine).is_err());
    }

    #[test]
    fn missing_weight_is_rejected() {
        let t = reference_table();
        let mut w = Weights::unit();
        w.map.remove(&Importance::Critical);
        assert!(weighted_rank(&t, &w).is_err());
        assert!(Weights::parse("critical=0").is_err());
        assert!(Weights::parse("weird=1").is_err());
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let mut t = reference_table();
        t.scores[0][1] = Some(Score { value: 6, comparison_only: false });
        assert!(t.validate().is_err());

        let mut t = reference_table();
        // a counted score after elimination is inconsistent
        t.scores[8][0] = Some(Score { value: 3, comparison_only: false });
        assert!(t.validate().is_err());
    }
}
