//! Survey ingestion and analysis.
//!
//! Two data sets are supported: the metro-map walking-time survey (sixteen
//! surveyees across two sites, twelve questions each) and the volume
//! visualization survey (ten surveyees, eight graded multiple-choice
//! questions plus two self-ranks). Fixture files transcribing both data
//! sets ship with the repo under `fixtures/survey/`.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::measures::DivergenceSpec;
use crate::scenarios::{
    categorize_answer, london_category_benefits, per_question_benefit, AnswerCategory,
    CategoryCounts, LondonPmfSpec,
};

/// Which survey a file contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurveyKind {
    London,
    Volvis,
}

impl SurveyKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "london" => Ok(SurveyKind::London),
            "volvis" => Ok(SurveyKind::Volvis),
            other => Err(Error::InvalidArgument(format!(
                "unknown survey kind `{other}`, expected london or volvis"
            ))),
        }
    }
}

/// Survey site.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Kcl,
    Ou,
}

impl Group {
    pub fn name(&self) -> &'static str {
        match self {
            Group::Kcl => "KCL",
            Group::Ou => "OU",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        match text {
            "KCL" => Some(Group::Kcl),
            "OU" => Some(Group::Ou),
            _ => None,
        }
    }
}

/// How long a surveyee has lived with a metro system or in London.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Residence {
    Never,
    Days,
    Weeks,
    Months,
    OneToFiveYears,
    OverFiveYears,
}

impl Residence {
    pub fn name(&self) -> &'static str {
        match self {
            Residence::Never => "never",
            Residence::Days => "days",
            Residence::Weeks => "weeks",
            Residence::Months => "months",
            Residence::OneToFiveYears => "1-5yr",
            Residence::OverFiveYears => ">5yr",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        match text {
            "never" => Some(Residence::Never),
            "days" => Some(Residence::Days),
            "weeks" => Some(Residence::Weeks),
            "months" => Some(Residence::Months),
            "1-5yr" => Some(Residence::OneToFiveYears),
            ">5yr" => Some(Residence::OverFiveYears),
            _ => None,
        }
    }
}

/// A stop-counting question (Q5..Q8): two station lookups, then a count.
#[derive(Debug, Clone, PartialEq)]
pub struct CountQuestion {
    pub lookup1_s: f64,
    pub lookup2_s: f64,
    pub answer: u32,
    pub time_s: f64,
}

/// An interchange-identification question (Q9..Q12).
#[derive(Debug, Clone, PartialEq)]
pub struct StationQuestion {
    pub answer: String,
    pub time_s: f64,
}

/// One surveyee's row in the walking-time survey.
#[derive(Debug, Clone, PartialEq)]
pub struct LondonRecord {
    pub surveyee: String,
    pub group: Group,
    /// Walking-time estimates in minutes, Q1..Q4.
    pub walk_answers: [u32; 4],
    /// Response times in seconds, Q1..Q4.
    pub walk_times: [f64; 4],
    pub counts: [CountQuestion; 4],
    pub stations: [StationQuestion; 4],
    pub metro_residence: Residence,
    pub london_residence: Residence,
}

/// Grading of a volume-visualization answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Grade {
    MostAppropriate,
    Acceptable,
    Incorrect,
}

impl Grade {
    pub fn name(&self) -> &'static str {
        match self {
            Grade::MostAppropriate => "most-appropriate",
            Grade::Acceptable => "acceptable",
            Grade::Incorrect => "incorrect",
        }
    }
}

/// An answer letter with its grading mark, as transcribed: `(D)` is a most
/// appropriate answer, `(a)` an acceptable one, and a bare letter an
/// incorrect one (case preserved).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkedAnswer {
    pub letter: char,
    pub bracketed: bool,
}

impl MarkedAnswer {
    pub fn parse(text: &str) -> Result<Self> {
        let (letter, bracketed) = if let Some(inner) = text.strip_prefix('(') {
            match inner.strip_suffix(')') {
                Some(core) => (core, true),
                None => return Err(Error::InvalidArgument(format!("unbalanced brackets in `{text}`"))),
            }
        } else {
            (text, false)
        };
        let mut chars = letter.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if matches!(c.to_ascii_uppercase(), 'A'..='D') => {
                Ok(MarkedAnswer { letter: c, bracketed })
            }
            _ => Err(Error::InvalidArgument(format!(
                "`{text}` is not an answer letter in A-D (optionally bracketed)"
            ))),
        }
    }

    pub fn grade(&self) -> Grade {
        match (self.bracketed, self.letter.is_ascii_uppercase()) {
            (true, true) => Grade::MostAppropriate,
            (true, false) => Grade::Acceptable,
            (false, _) => Grade::Incorrect,
        }
    }

    /// The marked form, e.g. `(D)`, `(a)` or `c`.
    pub fn marked(&self) -> String {
        if self.bracketed {
            format!("({})", self.letter)
        } else {
            self.letter.to_string()
        }
    }
}

/// A 1..5 self-rank; the transcription allows a range like `4-5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfRank {
    Single(u8),
    Range(u8, u8),
}

impl SelfRank {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("`{text}` is not a rank in 1..5 (or a range like 4-5)"));
        let one = |s: &str| -> Result<u8> {
            let v: u8 = s.parse().map_err(|_| bad())?;
            if (1..=5).contains(&v) {
                Ok(v)
            } else {
                Err(bad())
            }
        };
        match text.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (one(a)?, one(b)?);
                if a >= b {
                    return Err(bad());
                }
                Ok(SelfRank::Range(a, b))
            }
            None => Ok(SelfRank::Single(one(text)?)),
        }
    }

    pub fn render(&self) -> String {
        match self {
            SelfRank::Single(v) => v.to_string(),
            SelfRank::Range(a, b) => format!("{a}-{b}"),
        }
    }
}

/// One surveyee's row in the volume visualization survey.
#[derive(Debug, Clone, PartialEq)]
pub struct VolVisRecord {
    pub surveyee: String,
    pub answers: [MarkedAnswer; 8],
    pub imaging_rank: SelfRank,
    pub rendering_rank: SelfRank,
}

/// Records of either survey.
#[derive(Debug, Clone)]
pub enum SurveyRecords {
    London(Vec<LondonRecord>),
    Volvis(Vec<VolVisRecord>),
}

pub const LONDON_HEADER: &str = "surveyee,group,q1_ans,q1_t,q2_ans,q2_t,q3_ans,q3_t,q4_ans,q4_t,q5_t1,q5_t2,q5_ans,q5_t,q6_t1,q6_t2,q6_ans,q6_t,q7_t1,q7_t2,q7_ans,q7_t,q8_t1,q8_t2,q8_ans,q8_t,q9_ans,q9_t,q10_ans,q10_t,q11_ans,q11_t,q12_ans,q12_t,metro_res,london_res";

pub const VOLVIS_HEADER: &str = "surveyee,q1,q2,q3,q4,q5,q6,q7,q8,q9_rank,q10_rank";

/// Walking-time estimate peaks per question, minutes (Q1..Q4).
pub const DEFAULT_XIS: [u32; 4] = [20, 17, 32, 45];

/// Correct stop counts for Q5..Q8.
pub const EXPECTED_STOP_COUNTS: [u32; 4] = [10, 9, 7, 6];

/// Correct interchange stations for Q9..Q12.
pub const EXPECTED_STATIONS: [&str; 4] = ["P", "LB", "WP", "FP"];

/// Parses a survey file of the given kind.
pub fn parse_survey(path: &Path, kind: SurveyKind) -> Result<SurveyRecords> {
    let file = crate::error::open_file(path)?;
    let name = path.display().to_string();
    match kind {
        SurveyKind::London => Ok(SurveyRecords::London(parse_london_reader(file, &name)?)),
        SurveyKind::Volvis => Ok(SurveyRecords::Volvis(parse_volvis_reader(file, &name)?)),
    }
}

pub fn parse_london_csv(path: &Path) -> Result<Vec<LondonRecord>> {
    let file = crate::error::open_file(path)?;
    parse_london_reader(file, &path.display().to_string())
}

pub fn parse_volvis_csv(path: &Path) -> Result<Vec<VolVisRecord>> {
    let file = crate::error::open_file(path)?;
    parse_volvis_reader(file, &path.display().to_string())
}

struct RowReader<'a> {
    path: &'a str,
    row: usize,
    columns: &'a [&'a str],
    record: csv::StringRecord,
}

impl<'a> RowReader<'a> {
    fn field(&self, col: usize) -> Result<&str> {
        self.record.get(col).ok_or_else(|| self.err(col, "missing field"))
    }

    fn err(&self, col: usize, reason: impl Into<String>) -> Error {
        Error::MalformedRow {
            path: self.path.into(),
            row: self.row,
            column: self.columns.get(col).copied().unwrap_or("?").into(),
            reason: reason.into(),
        }
    }

    fn answer(&self, col: usize) -> Result<u32> {
        let text = self.field(col)?;
        let v: u32 = text
            .trim()
            .parse()
            .map_err(|_| self.err(col, format!("`{text}` is not an integer")))?;
        if v < 1 {
            return Err(self.err(col, "answers must be at least 1"));
        }
        Ok(v)
    }

    fn time(&self, col: usize) -> Result<f64> {
        let text = self.field(col)?;
        let v: f64 = text
            .trim()
            .parse()
            .map_err(|_| self.err(col, format!("`{text}` is not a number")))?;
        if !v.is_finite() || v <= 0.0 {
            return Err(self.err(col, "times must be positive"));
        }
        Ok(v)
    }
}

fn check_header(
    rdr: &mut csv::Reader<impl Read>,
    path: &str,
    expected: &str,
) -> Result<()> {
    let headers = rdr.headers()?.iter().collect::<Vec<_>>().join(",");
    if headers != expected {
        return Err(Error::BadFile {
            path: path.into(),
            reason: format!("unexpected header; expected `{expected}`"),
        });
    }
    Ok(())
}

pub fn parse_london_reader<R: Read>(reader: R, path: &str) -> Result<Vec<LondonRecord>> {
    let columns: Vec<&str> = LONDON_HEADER.split(',').collect();
    let mut rdr = csv::Reader::from_reader(reader);
    check_header(&mut rdr, path, LONDON_HEADER)?;
    let mut records = Vec::new();
    let mut seen = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let r = RowReader { path, row: i + 2, columns: &columns, record: rec };
        let surveyee = r.field(0)?.to_string();
        if surveyee.is_empty() {
            return Err(r.err(0, "empty surveyee id"));
        }
        if let Some(prev) = seen.insert(surveyee.clone(), i + 2) {
            return Err(r.err(0, format!("duplicate surveyee id (first seen on row {prev})")));
        }
        let group = Group::parse(r.field(1)?)
            .ok_or_else(|| r.err(1, format!("`{}` is not KCL or OU", r.field(1).unwrap_or(""))))?;
        let mut walk_answers = [0u32; 4];
        let mut walk_times = [0f64; 4];
        for q in 0..4 {
            walk_answers[q] = r.answer(2 + 2 * q)?;
            walk_times[q] = r.time(3 + 2 * q)?;
        }
        let count_q = |base: usize| -> Result<CountQuestion> {
            Ok(CountQuestion {
                lookup1_s: r.time(base)?,
                lookup2_s: r.time(base + 1)?,
                answer: r.answer(base + 2)?,
                time_s: r.time(base + 3)?,
            })
        };
        let counts = [count_q(10)?, count_q(14)?, count_q(18)?, count_q(22)?];
        let station_q = |base: usize| -> Result<StationQuestion> {
            let answer = r.field(base)?.to_string();
            if answer.is_empty() {
                return Err(r.err(base, "empty station answer"));
            }
            Ok(StationQuestion { answer, time_s: r.time(base + 1)? })
        };
        let stations = [station_q(26)?, station_q(28)?, station_q(30)?, station_q(32)?];
        let residence = |col: usize| -> Result<Residence> {
            Residence::parse(r.field(col)?).ok_or_else(|| {
                r.err(col, format!("`{}` is not a residence tag", r.field(col).unwrap_or("")))
            })
        };
        records.push(LondonRecord {
            surveyee,
            group,
            walk_answers,
            walk_times,
            counts,
            stations,
            metro_residence: residence(34)?,
            london_residence: residence(35)?,
        });
    }
    if records.is_empty() {
        return Err(Error::BadFile { path: path.into(), reason: "no survey rows".into() });
    }
    Ok(records)
}

pub fn parse_volvis_reader<R: Read>(reader: R, path: &str) -> Result<Vec<VolVisRecord>> {
    let columns: Vec<&str> = VOLVIS_HEADER.split(',').collect();
    let mut rdr = csv::Reader::from_reader(reader);
    check_header(&mut rdr, path, VOLVIS_HEADER)?;
    let mut records = Vec::new();
    let mut seen = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let r = RowReader { path, row: i + 2, columns: &columns, record: rec };
        let surveyee = r.field(0)?.to_string();
        if surveyee.is_empty() {
            return Err(r.err(0, "empty surveyee id"));
        }
        if let Some(prev) = seen.insert(surveyee.clone(), i + 2) {
            return Err(r.err(0, format!("duplicate surveyee id (first seen on row {prev})")));
        }
        let mut answers = Vec::with_capacity(8);
        for q in 0..8 {
            let text = r.field(1 + q)?;
            answers.push(MarkedAnswer::parse(text).map_err(|e| r.err(1 + q, e.to_string()))?);
        }
        let rank = |col: usize| -> Result<SelfRank> {
            SelfRank::parse(r.field(col)?).map_err(|e| r.err(col, e.to_string()))
        };
        records.push(VolVisRecord {
            surveyee,
            answers: answers.try_into().expect("eight answers"),
            imaging_rank: rank(9)?,
            rendering_rank: rank(10)?,
        });
    }
    if records.is_empty() {
        return Err(Error::BadFile { path: path.into(), reason: "no survey rows".into() });
    }
    Ok(records)
}

/// Serializes records back to the CSV schema; parsing the output yields the
/// same records.
pub fn london_to_csv(records: &[LondonRecord]) -> String {
    let mut out = String::from(LONDON_HEADER);
    out.push('\n');
    for r in records {
        let mut fields: Vec<String> = vec![r.surveyee.clone(), r.group.name().into()];
        for q in 0..4 {
            fields.push(r.walk_answers[q].to_string());
            fields.push(r.walk_times[q].to_string());
        }
        for c in &r.counts {
            fields.push(c.lookup1_s.to_string());
            fields.push(c.lookup2_s.to_string());
            fields.push(c.answer.to_string());
            fields.push(c.time_s.to_string());
        }
        for s in &r.stations {
            fields.push(s.answer.clone());
            fields.push(s.time_s.to_string());
        }
        fields.push(r.metro_residence.name().into());
        fields.push(r.london_residence.name().into());
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn volvis_to_csv(records: &[VolVisRecord]) -> String {
    let mut out = String::from(VOLVIS_HEADER);
    out.push('\n');
    for r in records {
        let mut fields: Vec<String> = vec![r.surveyee.clone()];
        fields.extend(r.answers.iter().map(|a| a.marked()));
        fields.push(r.imaging_rank.render());
        fields.push(r.rendering_rank.render());
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Mean/min/max of the walking-time answers and the mean response time for
/// one question (1..=4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuestionStats {
    pub mean: f64,
    pub min: u32,
    pub max: u32,
    pub mean_time_s: f64,
}

pub fn question_stats(records: &[LondonRecord], question: usize) -> Result<QuestionStats> {
    check_question(question)?;
    if records.is_empty() {
        return Err(Error::InvalidArgument("no records".into()));
    }
    let q = question - 1;
    let n = records.len() as f64;
    let answers = records.iter().map(|r| r.walk_answers[q]);
    Ok(QuestionStats {
        mean: answers.clone().map(|a| a as f64).sum::<f64>() / n,
        min: answers.clone().min().expect("non-empty"),
        max: answers.max().expect("non-empty"),
        mean_time_s: records.iter().map(|r| r.walk_times[q]).sum::<f64>() / n,
    })
}

fn check_question(question: usize) -> Result<()> {
    if !(1..=4).contains(&question) {
        return Err(Error::InvalidArgument(format!(
            "walking-time questions are 1..=4, got {question}"
        )));
    }
    Ok(())
}

/// Manual category assignments for boundary answers, keyed by (question,
/// answer in minutes).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    map: BTreeMap<(usize, u32), AnswerCategory>,
}

impl Overrides {
    pub fn insert(&mut self, question: usize, answer: u32, category: AnswerCategory) {
        self.map.insert((question, answer), category);
    }

    pub fn get(&self, question: usize, answer: u32) -> Option<AnswerCategory> {
        self.map.get(&(question, answer)).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// The boundary categorization used by the reference aggregates: the
    /// answer 30 counts as close for questions 2 and 3 (strict banding puts
    /// it at wild-guess and spot-on respectively).
    pub fn reference() -> Self {
        let mut o = Overrides::default();
        o.insert(2, 30, AnswerCategory::Close);
        o.insert(3, 30, AnswerCategory::Close);
        o
    }

    /// Reads overrides from CSV with header `question,answer,category`.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let name = path.display().to_string();
        let mut rdr = csv::Reader::from_reader(crate::error::open_file(path)?);
        check_header(&mut rdr, &name, "question,answer,category")?;
        let mut out = Overrides::default();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let row = i + 2;
            let err = |column: &str, reason: String| Error::MalformedRow {
                path: name.clone(),
                row,
                column: column.into(),
                reason,
            };
            let question: usize = rec
                .get(0)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| err("question", "expected an integer in 1..=4".into()))?;
            check_question(question)?;
            let answer: u32 = rec
                .get(1)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| err("answer", "expected an integer".into()))?;
            let category = AnswerCategory::parse(rec.get(2).unwrap_or(""))
                .map_err(|e| err("category", e.to_string()))?;
            out.insert(question, answer, category);
        }
        Ok(out)
    }
}

/// An answer whose applied category differs from strict banding.
#[derive(Debug, Clone, PartialEq)]
pub struct CategoryDeviation {
    pub surveyee: String,
    pub question: usize,
    pub answer: u32,
    pub strict: AnswerCategory,
    pub applied: AnswerCategory,
}

/// Categorizes one answer, applying any override; returns the category used
/// and the strict-band category it replaced, when they differ.
pub fn categorize_with_overrides(
    question: usize,
    answer: u32,
    spec: &LondonPmfSpec,
    overrides: &Overrides,
) -> Result<(AnswerCategory, Option<AnswerCategory>)> {
    check_question(question)?;
    let strict = categorize_answer(answer, spec)?;
    match overrides.get(question, answer) {
        Some(applied) if applied != strict => Ok((applied, Some(strict))),
        _ => Ok((strict, None)),
    }
}

/// Band counts for one question over a record set, with the deviations the
/// overrides introduced.
pub fn question_category_counts(
    records: &[LondonRecord],
    question: usize,
    xi: u32,
    overrides: &Overrides,
) -> Result<(CategoryCounts, Vec<CategoryDeviation>)> {
    check_question(question)?;
    let spec = LondonPmfSpec::new(xi)?;
    let mut counts = CategoryCounts::default();
    let mut deviations = Vec::new();
    for r in records {
        let answer = r.walk_answers[question - 1];
        let (applied, strict) = categorize_with_overrides(question, answer, &spec, overrides)?;
        counts.add(applied);
        if let Some(strict) = strict {
            deviations.push(CategoryDeviation {
                surveyee: r.surveyee.clone(),
                question,
                answer,
                strict,
                applied,
            });
        }
    }
    Ok((counts, deviations))
}

/// Mean benefit over the four walking-time questions for one surveyee.
pub fn surveyee_benefit(
    record: &LondonRecord,
    xis: &[u32; 4],
    measure: &DivergenceSpec,
    overrides: &Overrides,
) -> Result<f64> {
    let mut total = 0.0;
    for (q, &xi) in xis.iter().enumerate() {
        let spec = LondonPmfSpec::new(xi)?;
        let (category, _) = categorize_with_overrides(q + 1, record.walk_answers[q], &spec, overrides)?;
        let benefits = london_category_benefits(&spec, measure)?;
        total += benefits[match category {
            AnswerCategory::SpotOn => 0,
            AnswerCategory::Close => 1,
            AnswerCategory::WildGuess => 2,
        }];
    }
    Ok(total / 4.0)
}

/// Categories of one surveyee's four answers.
pub fn surveyee_categories(
    record: &LondonRecord,
    xis: &[u32; 4],
    overrides: &Overrides,
) -> Result<[AnswerCategory; 4]> {
    let mut out = [AnswerCategory::WildGuess; 4];
    for (q, &xi) in xis.iter().enumerate() {
        let spec = LondonPmfSpec::new(xi)?;
        (out[q], _) = categorize_with_overrides(q + 1, record.walk_answers[q], &spec, overrides)?;
    }
    Ok(out)
}

/// Average benefit of one question divided by its mean response time.
pub fn question_cost_benefit(
    records: &[LondonRecord],
    question: usize,
    xi: u32,
    measure: &DivergenceSpec,
    overrides: &Overrides,
) -> Result<f64> {
    let (counts, _) = question_category_counts(records, question, xi, overrides)?;
    let spec = LondonPmfSpec::new(xi)?;
    let avg = per_question_benefit(&counts, &spec, measure)?;
    let mean_time = question_stats(records, question)?.mean_time_s;
    Ok(avg / mean_time)
}

/// Summary of the stop-counting questions Q5..Q8: correct answers and mean
/// times.
#[derive(Debug, Clone, PartialEq)]
pub struct CountQuestionSummary {
    pub expected: u32,
    pub correct: usize,
    pub mean_lookup1_s: f64,
    pub mean_lookup2_s: f64,
    pub mean_time_s: f64,
}

pub fn stop_count_summary(records: &[LondonRecord]) -> Result<[CountQuestionSummary; 4]> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("no records".into()));
    }
    let n = records.len() as f64;
    let mut out = Vec::with_capacity(4);
    for (q, &expected) in EXPECTED_STOP_COUNTS.iter().enumerate() {
        out.push(CountQuestionSummary {
            expected,
            correct: records.iter().filter(|r| r.counts[q].answer == expected).count(),
            mean_lookup1_s: records.iter().map(|r| r.counts[q].lookup1_s).sum::<f64>() / n,
            mean_lookup2_s: records.iter().map(|r| r.counts[q].lookup2_s).sum::<f64>() / n,
            mean_time_s: records.iter().map(|r| r.counts[q].time_s).sum::<f64>() / n,
        });
    }
    Ok(out.try_into().expect("four questions"))
}

/// Summary of the interchange questions Q9..Q12.
#[derive(Debug, Clone, PartialEq)]
pub struct StationQuestionSummary {
    pub expected: &'static str,
    pub correct: usize,
    pub mean_time_s: f64,
}

pub fn station_summary(records: &[LondonRecord]) -> Result<[StationQuestionSummary; 4]> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("no records".into()));
    }
    let n = records.len() as f64;
    let mut out = Vec::with_capacity(4);
    for (q, &expected) in EXPECTED_STATIONS.iter().enumerate() {
        out.push(StationQuestionSummary {
            expected,
            correct: records.iter().filter(|r| r.stations[q].answer == expected).count(),
            mean_time_s: records.iter().map(|r| r.stations[q].time_s).sum::<f64>() / n,
        });
    }
    Ok(out.try_into().expect("four questions"))
}

/// Tally of one volume-visualization question: counts per marked answer,
/// ordered most-appropriate, acceptable, incorrect, then by letter.
#[derive(Debug, Clone, PartialEq)]
pub struct QuestionTally {
    /// (display letter, grade, count)
    pub counts: Vec<(String, Grade, usize)>,
    /// Totals by grade: most appropriate, acceptable, incorrect.
    pub grade_totals: [usize; 3],
}

/// Per-question answer tallies for the volume visualization survey.
pub fn volvis_summary(records: &[VolVisRecord]) -> Result<Vec<QuestionTally>> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("no records".into()));
    }
    let mut out = Vec::with_capacity(8);
    for q in 0..8 {
        let mut counts: BTreeMap<(Grade, char), usize> = BTreeMap::new();
        for r in records {
            let a = r.answers[q];
            *counts.entry((a.grade(), a.letter)).or_insert(0) += 1;
        }
        let mut grade_totals = [0usize; 3];
        for (&(grade, _), &c) in &counts {
            grade_totals[match grade {
                Grade::MostAppropriate => 0,
                Grade::Acceptable => 1,
                Grade::Incorrect => 2,
            }] += c;
        }
        out.push(QuestionTally {
            counts: counts
                .into_iter()
                .map(|((grade, letter), c)| (letter.to_string(), grade, c))
                .collect(),
            grade_totals,
        });
    }
    Ok(out)
}
