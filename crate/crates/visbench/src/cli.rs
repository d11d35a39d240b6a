//! Command-line front end. The binary is a thin wrapper around
//! [`run_with_writers`]; every subcommand delegates to the library and
//! prints deterministic output for identical inputs.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::benefit::{benefit_bounded, benefit_kl, cost_benefit_ratio, TransformCase};
use crate::error::{Error, Result};
use crate::measures::{
    candidate_measures, divergence, DivergenceSpec, MeasureFamily, Pmf,
};
use crate::mcda::{weighted_rank, winner, CriteriaTable, Weights};
use crate::report::{
    env_precision, stacked_bar_svg, validate_precision, BarGroup, Cell, OutputFormat, Table,
};
use crate::reproduce::{reproduce, write_reports, FixtureSource};
use crate::scenarios::{
    abcd_scenario, enumerate_grid_paths, good_bad_scenario, isosurface_tables,
    london_benefit_table, london_pmf, mip_arteries_tables, mip_q, mip_qprime,
    scenario_divergence_table, Direction, DivergenceTable, LondonPmfSpec, PathRules,
};
use crate::survey::{
    parse_survey, question_category_counts, question_stats, station_summary, stop_count_summary,
    surveyee_benefit, volvis_summary, LondonRecord, Overrides, SurveyKind, SurveyRecords,
    VolVisRecord, DEFAULT_XIS,
};

/// How a command should present its result.
#[derive(Debug, Clone, Copy)]
pub struct ReportRequest {
    pub format: OutputFormat,
    pub precision: usize,
}

#[derive(Parser)]
#[command(
    name = "visbench",
    version,
    about = "Bounded divergence measures and cost-benefit analysis of lossy depictions",
    disable_help_subcommand = true
)]
struct Cli {
    /// Decimal places for printed numbers (0..=12); overrides VISBENCH_PRECISION.
    #[arg(long, global = true)]
    precision: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shannon entropy of a PMF file, in bits.
    Entropy {
        /// PMF CSV with header index,label,probability.
        #[arg(long)]
        pmf: PathBuf,
    },
    /// Divergence between two PMF files.
    Divergence {
        /// Measure spelling: kl, js, new:<k>, ncm:<k>, mink:<k>, optional @<scale>.
        #[arg(long)]
        measure: String,
        /// First PMF (the reconstruction or answer side).
        #[arg(long)]
        p: PathBuf,
        /// Second PMF (the ground-truth side).
        #[arg(long)]
        q: PathBuf,
        /// Print the per-letter decomposition instead of just the total.
        #[arg(long)]
        decompose: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Benefit of a transform case described by a key=value manifest.
    Benefit {
        /// Manifest with input=, output= and recon= PMF paths.
        manifest: PathBuf,
        /// Measure for the potential-distortion term; kl uses the unbounded formula.
        #[arg(long, default_value = "new:2")]
        measure: String,
        /// Optional cost; adds the cost-benefit ratio.
        #[arg(long)]
        cost: Option<f64>,
        /// Unit label for the cost, carried through to the report.
        #[arg(long, default_value = "seconds")]
        cost_unit: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Built-in scenario reproductions.
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
    /// Survey ingestion and analysis.
    Survey {
        #[command(subcommand)]
        command: SurveyCommand,
    },
    /// Multi-criteria analysis table, sums and ranking.
    Mcda {
        /// Importance weights, e.g. critical=4,important=2,helpful=1.
        #[arg(long)]
        weights: Option<String>,
        /// Criteria table CSV; defaults to the built-in table.
        #[arg(long)]
        table: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate metro paths on an n x n grid.
    GridPaths {
        #[arg(long)]
        n: u32,
        /// Maximum turn angle at joints, in degrees.
        #[arg(long, default_value_t = 90.0)]
        max_turn: f64,
        /// Comma-separated directions from e,ne,se,n,s.
        #[arg(long, default_value = "e,ne,se")]
        directions: String,
        /// Cap on the number of turns that use the full angle budget.
        #[arg(long)]
        max_sharp_turns: Option<usize>,
        /// Allow directions that do not advance x.
        #[arg(long)]
        non_monotone: bool,
        /// Drop the requirement that joints sit on grid points.
        #[arg(long)]
        joints_anywhere: bool,
        /// Print every path encoding, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Recompute all built-in tables and write per-dataset check reports.
    Reproduce {
        /// Output directory for the report CSVs.
        #[arg(long)]
        out: PathBuf,
        /// Alternate directory with london_kcl.csv, london_ou.csv, volvis.csv.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// List scenario names.
    List,
    /// Run one scenario and print its tables.
    Run {
        /// One of: good-bad, abcd, mip-arteries, mip-arteries-qprime, isosurface, london.
        name: String,
        /// Estimate peak for the london scenario (minutes).
        #[arg(long, default_value_t = 20)]
        xi: u32,
        /// Measures to tabulate; defaults to the five candidates.
        #[arg(long)]
        measure: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Summarize a survey file.
    Analyze {
        /// london or volvis.
        #[arg(long)]
        kind: String,
        /// Survey CSV file.
        #[arg(long)]
        file: PathBuf,
        /// Category override CSV with header question,answer,category.
        #[arg(long)]
        overrides: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// csv, markdown or svg-bars.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn request(&self, precision: usize) -> Result<ReportRequest> {
        Ok(ReportRequest { format: OutputFormat::parse(&self.format)?, precision })
    }
}

/// Entry point used by the binary and by tests. Returns the process exit
/// status: 0 on success, 1 on validation errors, 2 on I/O errors.
pub fn run_with_writers<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let precision = match cli.precision {
        Some(p) => validate_precision(p)?,
        None => env_precision()?,
    };
    match cli.command {
        Command::Entropy { pmf } => {
            let p = Pmf::read_csv(&pmf)?;
            writeln!(stdout, "{}", crate::report::format_number(p.entropy(), precision))?;
            Ok(())
        }
        Command::Divergence { measure, p, q, decompose, output } => {
            let request = output.request(precision)?;
            let spec = DivergenceSpec::parse(&measure)?;
            let p = Pmf::read_csv(&p)?;
            let q = Pmf::read_csv(&q)?;
            let result = divergence(&spec, &p, &q)?;
            match request.format {
                OutputFormat::SvgBars => {
                    let group = BarGroup {
                        label: spec.label(),
                        segments: p
                            .labels()
                            .iter()
                            .cloned()
                            .zip(result.per_letter.iter().copied())
                            .collect(),
                    };
                    emit(&output.out, stdout, &stacked_bar_svg("divergence", &[group], precision))
                }
                _ if decompose => {
                    let mut t = Table::new("divergence".to_string(), "letter".to_string(), vec![spec.label()]);
                    for (label, v) in p.labels().iter().zip(&result.per_letter) {
                        t.push_row(label.clone(), vec![Cell::Num(*v)]);
                    }
                    t.push_row("total", vec![Cell::Num(result.total)]);
                    emit(&output.out, stdout, &t.render(request.format, precision)?)
                }
                _ => emit(
                    &output.out,
                    stdout,
                    &format!("{}\n", crate::report::format_number(result.total, precision)),
                ),
            }
        }
        Command::Benefit { manifest, measure, cost, cost_unit, output } => {
            let request = output.request(precision)?;
            let spec = DivergenceSpec::parse(&measure)?;
            let case = TransformCase::read_manifest(&manifest)?;
            let result = if spec.family == MeasureFamily::Kl {
                benefit_kl(&case)?
            } else {
                benefit_bounded(&case, &spec)?
            };
            let mut t = Table::new("benefit".to_string(), "quantity".to_string(), vec!["value".into()]);
            t.push_row("measure", vec![Cell::Text(spec.label())]);
            t.push_row("alphabet compression", vec![Cell::Num(result.ac)]);
            t.push_row("potential distortion", vec![Cell::Num(result.pd)]);
            t.push_row("benefit", vec![Cell::Num(result.benefit)]);
            t.push_row("max input entropy", vec![Cell::Num(result.hmax)]);
            if let Some(cost) = cost {
                t.push_row(format!("cost ({cost_unit})"), vec![Cell::Num(cost)]);
                t.push_row(
                    format!("cost-benefit ratio (bits/{cost_unit})"),
                    vec![Cell::Num(cost_benefit_ratio(&result, cost)?)],
                );
            }
            emit(&output.out, stdout, &t.render(request.format, precision)?)
        }
        Command::Scenario { command } => match command {
            ScenarioCommand::List => {
                for name in SCENARIOS {
                    writeln!(stdout, "{name}")?;
                }
                Ok(())
            }
            ScenarioCommand::Run { name, xi, measure, output } => {
                let request = output.request(precision)?;
                let measures = parse_measures(&measure)?;
                let text = run_scenario(&name, xi, &measures, request)?;
                emit(&output.out, stdout, &text)
            }
        },
        Command::Survey { command } => match command {
            SurveyCommand::Analyze { kind, file, overrides, output } => {
                let request = output.request(precision)?;
                let kind = SurveyKind::parse(&kind)?;
                let overrides = match overrides {
                    Some(path) => Overrides::read_csv(&path)?,
                    None => Overrides::default(),
                };
                let records = parse_survey(&file, kind)?;
                let text = match records {
                    SurveyRecords::London(records) => analyze_london(&records, &overrides, request)?,
                    SurveyRecords::Volvis(records) => analyze_volvis(&records, request)?,
                };
                emit(&output.out, stdout, &text)
            }
        },
        Command::Mcda { weights, table, output } => {
            let request = output.request(precision)?;
            let table = match table {
                Some(path) => CriteriaTable::read_csv(&path)?,
                None => crate::mcda::reference_table(),
            };
            let mut text = table.to_report_table().render(request.format, precision)?;
            text.push('\n');
            let mut result = Table::new("result".to_string(), "quantity".to_string(), vec!["value".into()]);
            result.push_row("winner", vec![Cell::Text(winner(&table)?)]);
            text.push_str(&result.render(request.format, precision)?);
            if let Some(weights) = weights {
                let weights = Weights::parse(&weights)?;
                let ranked = weighted_rank(&table, &weights)?;
                let mut t = Table::new("weighted ranking".to_string(), "measure".to_string(), vec!["weighted sum".into()]);
                for (name, total) in ranked {
                    t.push_row(name, vec![Cell::Num(total)]);
                }
                text.push('\n');
                text.push_str(&t.render(request.format, precision)?);
            }
            emit(&output.out, stdout, &text)
        }
        Command::GridPaths { n, max_turn, directions, max_sharp_turns, non_monotone, joints_anywhere, list } => {
            let directions = directions
                .split(',')
                .map(|d| Direction::parse(d.trim()))
                .collect::<Result<Vec<_>>>()?;
            let rules = PathRules {
                directions,
                max_turn_deg: max_turn,
                joints_on_grid: !joints_anywhere,
                monotone_x: !non_monotone,
                max_sharp_turns,
            };
            let result = enumerate_grid_paths(n, &rules)?;
            writeln!(stdout, "{}", result.count)?;
            if list {
                for path in &result.paths {
                    writeln!(stdout, "{path}")?;
                }
            }
            Ok(())
        }
        Command::Reproduce { out, fixtures } => {
            let source = match fixtures {
                Some(dir) => FixtureSource::Dir(dir),
                None => FixtureSource::Embedded,
            };
            let report = reproduce(&source)?;
            let written = write_reports(&report, &out)?;
            for (path, dataset) in written.iter().zip(report.datasets.iter().map(Some).chain([None])) {
                match dataset {
                    Some(d) => writeln!(stdout, "wrote {} ({} checks, {} failures)", path.display(), d.checks.len(), d.failures())?,
                    None => writeln!(stdout, "wrote {}", path.display())?,
                }
            }
            writeln!(stdout, "total: {} checks, {} failures", report.total_checks(), report.failures())?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!("{} reproduction checks failed", report.failures())))
            }
        }
    }
}

const SCENARIOS: [&str; 6] = [
    "good-bad",
    "abcd",
    "mip-arteries",
    "mip-arteries-qprime",
    "isosurface",
    "london",
];

fn parse_measures(texts: &[String]) -> Result<Vec<DivergenceSpec>> {
    if texts.is_empty() {
        return Ok(candidate_measures());
    }
    texts.iter().map(|t| DivergenceSpec::parse(t)).collect()
}

fn run_scenario(
    name: &str,
    xi: u32,
    measures: &[DivergenceSpec],
    request: ReportRequest,
) -> Result<String> {
    let mut sections: Vec<String> = Vec::new();
    let render_div = |t: &DivergenceTable| -> Result<String> {
        match request.format {
            OutputFormat::SvgBars => Ok(t.to_svg(request.precision)),
            f => t.to_table().render(f, request.precision),
        }
    };
    let render_table = |t: &Table| t.render(request.format, request.precision);
    match name {
        "good-bad" => {
            let t = scenario_divergence_table(&good_bad_scenario(), measures)?;
            sections.push(render_div(&t)?);
        }
        "abcd" => {
            let t = scenario_divergence_table(&abcd_scenario(), measures)?;
            sections.push(render_div(&t)?);
        }
        "mip-arteries" | "mip-arteries-qprime" => {
            let q = if name == "mip-arteries" { mip_q() } else { mip_qprime() };
            let tables = mip_arteries_tables(&q, measures)?;
            sections.push(render_div(&tables.divergence)?);
            if request.format != OutputFormat::SvgBars {
                sections.push(render_table(&tables.benefit)?);
            }
        }
        "isosurface" => {
            let t = isosurface_tables(measures)?;
            let mut head = Table::new("alphabet".to_string(), "quantity".to_string(), vec!["value".into()]);
            head.push_row("entropy", vec![Cell::Num(crate::scenarios::isosurface_pmf().entropy())]);
            if request.format != OutputFormat::SvgBars {
                sections.push(render_table(&head)?);
            }
            sections.push(render_div(&t)?);
        }
        "london" => {
            let spec = LondonPmfSpec::new(xi)?;
            let q = london_pmf(&spec)?;
            let mut head = Table::new("alphabet".to_string(), "quantity".to_string(), vec!["value".into()]);
            head.push_row("xi", vec![Cell::Int(xi as i64)]);
            head.push_row("entropy", vec![Cell::Num(q.entropy())]);
            let table = london_benefit_table(&spec, measures)?;
            if request.format == OutputFormat::SvgBars {
                return Err(Error::InvalidArgument(
                    "the london tables carry no per-letter decomposition; use csv or markdown".into(),
                ));
            }
            sections.push(render_table(&head)?);
            sections.push(render_table(&table)?);
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown scenario `{other}`; names: {}",
                SCENARIOS.join(", ")
            )))
        }
    }
    Ok(sections.join("\n"))
}

fn analyze_london(
    records: &[LondonRecord],
    overrides: &Overrides,
    request: ReportRequest,
) -> Result<String> {
    let measures = candidate_measures();
    let measure_cols: Vec<String> = measures.iter().map(|m| m.label()).collect();
    let mut sections = Vec::new();

    let mut stats = Table::new(
        "walking-time questions".to_string(),
        "question".to_string(),
        vec!["mean".into(), "min".into(), "max".into(), "mean time (s)".into()],
    );
    for q in 1..=4 {
        let s = question_stats(records, q)?;
        stats.push_row(
            format!("Q{q}"),
            vec![Cell::Num(s.mean), Cell::Int(s.min as i64), Cell::Int(s.max as i64), Cell::Num(s.mean_time_s)],
        );
    }
    sections.push(stats.render(request.format, request.precision)?);

    let mut counts_table = Table::new(
        "answer bands".to_string(),
        "question".to_string(),
        vec!["spot-on".into(), "close".into(), "wild-guess".into(), "deviations from strict bands".into()],
    );
    for q in 1..=4 {
        let (counts, deviations) = question_category_counts(records, q, DEFAULT_XIS[q - 1], overrides)?;
        let noted: Vec<String> = deviations
            .iter()
            .map(|d| format!("{} {}->{}", d.surveyee, d.strict.name(), d.applied.name()))
            .collect();
        counts_table.push_row(
            format!("Q{q}"),
            vec![
                Cell::Int(counts.spot_on as i64),
                Cell::Int(counts.close as i64),
                Cell::Int(counts.wild_guess as i64),
                if noted.is_empty() { Cell::Empty } else { Cell::Text(noted.join("; ")) },
            ],
        );
    }
    sections.push(counts_table.render(request.format, request.precision)?);

    let mut benefit_table = Table::new(
        "average benefit per question".to_string(),
        "question".to_string(),
        measure_cols.clone(),
    );
    let mut ratio_table = Table::new(
        "cost-benefit ratio per question (bits/second)".to_string(),
        "question".to_string(),
        measure_cols.clone(),
    );
    for q in 1..=4 {
        let xi = DEFAULT_XIS[q - 1];
        let spec = LondonPmfSpec::new(xi)?;
        let (counts, _) = question_category_counts(records, q, xi, overrides)?;
        let mean_time = question_stats(records, q)?.mean_time_s;
        let mut benefit_row = Vec::new();
        let mut ratio_row = Vec::new();
        for m in &measures {
            let b = crate::scenarios::per_question_benefit(&counts, &spec, m)?;
            benefit_row.push(Cell::Num(b));
            ratio_row.push(Cell::Num(b / mean_time));
        }
        benefit_table.push_row(format!("Q{q}"), benefit_row);
        ratio_table.push_row(format!("Q{q}"), ratio_row);
    }
    sections.push(benefit_table.render(request.format, request.precision)?);
    sections.push(ratio_table.render(request.format, request.precision)?);

    let mut per_surveyee = Table::new(
        "average benefit per surveyee".to_string(),
        "surveyee".to_string(),
        measure_cols,
    );
    for r in records {
        let mut row = Vec::new();
        for m in &measures {
            row.push(Cell::Num(surveyee_benefit(r, &DEFAULT_XIS, m, overrides)?));
        }
        per_surveyee.push_row(r.surveyee.clone(), row);
    }
    sections.push(per_surveyee.render(request.format, request.precision)?);

    let stops = stop_count_summary(records)?;
    let mut lookup = Table::new(
        "stop-counting questions".to_string(),
        "question".to_string(),
        vec!["expected".into(), "correct".into(), "mean time (s)".into()],
    );
    for (i, s) in stops.iter().enumerate() {
        lookup.push_row(
            format!("Q{}", i + 5),
            vec![Cell::Int(s.expected as i64), Cell::Int(s.correct as i64), Cell::Num(s.mean_time_s)],
        );
    }
    let stations = station_summary(records)?;
    for (i, s) in stations.iter().enumerate() {
        lookup.push_row(
            format!("Q{}", i + 9),
            vec![Cell::Text(s.expected.into()), Cell::Int(s.correct as i64), Cell::Num(s.mean_time_s)],
        );
    }
    sections.push(lookup.render(request.format, request.precision)?);

    Ok(sections.join("\n"))
}

fn analyze_volvis(records: &[VolVisRecord], request: ReportRequest) -> Result<String> {
    let tallies = volvis_summary(records)?;
    let mut sections = Vec::new();
    let mut t = Table::new(
        "answer tallies".to_string(),
        "question".to_string(),
        vec!["answers".into(), "most appropriate".into(), "acceptable".into(), "incorrect".into()],
    );
    for (qi, tally) in tallies.iter().enumerate() {
        let answers: Vec<String> = tally.counts.iter().map(|(l, _, c)| format!("{l}:{c}")).collect();
        t.push_row(
            format!("Q{}", qi + 1),
            vec![
                Cell::Text(answers.join(" ")),
                Cell::Int(tally.grade_totals[0] as i64),
                Cell::Int(tally.grade_totals[1] as i64),
                Cell::Int(tally.grade_totals[2] as i64),
            ],
        );
    }
    sections.push(t.render(request.format, request.precision)?);

    let mut ranks = Table::new(
        "self-ranks".to_string(),
        "surveyee".to_string(),
        vec!["imaging".into(), "rendering".into()],
    );
    for r in records {
        ranks.push_row(
            r.surveyee.clone(),
            vec![Cell::Text(r.imaging_rank.render()), Cell::Text(r.rendering_rank.render())],
        );
    }
    sections.push(ranks.render(request.format, request.precision)?);
    Ok(sections.join("\n"))
}

fn emit(target: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match target {
        Some(path) => write_file(path, text),
        None => {
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::WriteFailed {
        path: path.to_path_buf(),
        source,
    })
}
