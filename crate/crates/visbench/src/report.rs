//! Tabular output: CSV, Markdown, and stacked-bar SVG.

use crate::error::{Error, Result};

/// Output format for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Markdown,
    SvgBars,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "svg-bars" | "svg" => Ok(OutputFormat::SvgBars),
            other => Err(Error::InvalidArgument(format!(
                "unknown format `{other}`, expected csv, markdown or svg-bars"
            ))),
        }
    }
}

/// Default number of decimal places, overridable via `VISBENCH_PRECISION`
/// or a `--precision` flag.
pub const DEFAULT_PRECISION: usize = 3;

/// Reads the precision from the environment, falling back to the default.
pub fn env_precision() -> Result<usize> {
    match std::env::var("VISBENCH_PRECISION") {
        Ok(v) => validate_precision(v.trim().parse::<usize>().map_err(|_| {
            Error::InvalidArgument(format!("VISBENCH_PRECISION=`{v}` is not an integer"))
        })?),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

pub fn validate_precision(p: usize) -> Result<usize> {
    if p > 12 {
        return Err(Error::InvalidArgument(format!("precision {p} out of range [0, 12]")));
    }
    Ok(p)
}

/// Formats a number at the given precision. Rust's float formatting rounds
/// the exact binary value to nearest with ties to even, which is the
/// round-half-even behaviour required for reproducible output.
pub fn format_number(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.precision$}");
    // avoid "-0.000"
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn render(&self, precision: usize) -> String {
        match self {
            Cell::Num(x) => format_number(*x, precision),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub label: String,
    pub cells: Vec<Cell>,
}

/// A titled table with labelled rows and columns.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    /// Header of the row-label column.
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn new<S: Into<String>>(title: S, corner: S, columns: Vec<String>) -> Self {
        Table { title: title.into(), corner: corner.into(), columns, rows: Vec::new() }
    }

    pub fn push_row<S: Into<String>>(&mut self, label: S, cells: Vec<Cell>) {
        self.rows.push(Row { label: label.into(), cells });
    }

    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::new();
        out.push_str(&csv_line(
            std::iter::once(self.corner.as_str()).chain(self.columns.iter().map(String::as_str)),
        ));
        for row in &self.rows {
            let rendered: Vec<String> = row.cells.iter().map(|c| c.render(precision)).collect();
            out.push_str(&csv_line(
                std::iter::once(row.label.as_str()).chain(rendered.iter().map(String::as_str)),
            ));
        }
        out
    }

    pub fn to_markdown(&self, precision: usize) -> String {
        let md = |s: &str| s.replace('|', "\\|");
        let mut out = format!("**{}**\n\n", md(&self.title));
        let columns: Vec<String> = self.columns.iter().map(|c| md(c)).collect();
        out.push_str(&format!("| {} | {} |\n", md(&self.corner), columns.join(" | ")));
        out.push_str(&format!("|---|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.rows {
            let rendered: Vec<String> = row.cells.iter().map(|c| md(&c.render(precision))).collect();
            out.push_str(&format!("| {} | {} |\n", md(&row.label), rendered.join(" | ")));
        }
        out
    }

    pub fn render(&self, format: OutputFormat, precision: usize) -> Result<String> {
        match format {
            OutputFormat::Csv => Ok(self.to_csv(precision)),
            OutputFormat::Markdown => Ok(self.to_markdown(precision)),
            OutputFormat::SvgBars => Err(Error::InvalidArgument(format!(
                "table `{}` carries no per-letter decomposition; svg-bars is not available for it",
                self.title
            ))),
        }
    }
}

fn csv_line<'a, I: Iterator<Item = &'a str>>(fields: I) -> String {
    let quoted: Vec<String> = fields.map(csv_field).collect();
    let mut line = quoted.join(",");
    line.push('\n');
    line
}

fn csv_field(f: &str) -> String {
    if f.contains(',') || f.contains('"') || f.contains('\n') {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// One stacked bar: a label and the per-letter contributions it stacks.
#[derive(Debug, Clone)]
pub struct BarGroup {
    pub label: String,
    /// (letter, contribution) pairs; the bar total is their sum.
    pub segments: Vec<(String, f64)>,
}

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
];

/// Emits a stacked bar chart. Positive contributions stack upward from the
/// baseline and negative ones downward, so the signed segment heights always
/// sum to the bar's reported total; every segment carries its value in a
/// `data-value` attribute.
pub fn stacked_bar_svg(title: &str, groups: &[BarGroup], precision: usize) -> String {
    let bar_w = 46.0;
    let gap = 26.0;
    let left = 60.0;
    let top = 40.0;
    let plot_h = 260.0;
    let width = left + groups.len() as f64 * (bar_w + gap) + 30.0;

    let mut max_pos: f64 = 0.0;
    let mut max_neg: f64 = 0.0;
    for g in groups {
        let pos: f64 = g.segments.iter().map(|(_, v)| v.max(0.0)).sum();
        let neg: f64 = g.segments.iter().map(|(_, v)| (-v).max(0.0)).sum();
        max_pos = max_pos.max(pos);
        max_neg = max_neg.max(neg);
    }
    let span = (max_pos + max_neg).max(f64::MIN_POSITIVE);
    let scale = plot_h / span;
    let baseline = top + max_pos * scale;
    let height = top + plot_h + 50.0;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" font-family=\"sans-serif\" font-size=\"11\">\n"
    ));
    svg.push_str(&format!("  <title>{}</title>\n", xml_escape(title)));
    svg.push_str(&format!("  <text x=\"{left}\" y=\"20\" font-size=\"13\">{}</text>\n", xml_escape(title)));
    svg.push_str(&format!(
        "  <line x1=\"{:.1}\" y1=\"{baseline:.2}\" x2=\"{:.1}\" y2=\"{baseline:.2}\" stroke=\"#444\"/>\n",
        left - 8.0,
        width - 20.0
    ));

    for (gi, g) in groups.iter().enumerate() {
        let x = left + gi as f64 * (bar_w + gap);
        let total: f64 = g.segments.iter().map(|(_, v)| v).sum();
        let mut up = baseline;
        let mut down = baseline;
        svg.push_str(&format!("  <g class=\"bar\" data-label=\"{}\" data-total=\"{}\">\n", xml_escape(&g.label), total));
        for (si, (letter, v)) in g.segments.iter().enumerate() {
            if *v == 0.0 {
                continue;
            }
            let h = v.abs() * scale;
            let y = if *v >= 0.0 {
                up -= h;
                up
            } else {
                let y = down;
                down += h;
                y
            };
            let color = PALETTE[si % PALETTE.len()];
            svg.push_str(&format!(
                "    <rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{bar_w}\" height=\"{h:.2}\" fill=\"{color}\" data-letter=\"{}\" data-value=\"{v}\"><title>{}: {}</title></rect>\n",
                xml_escape(letter),
                xml_escape(letter),
                format_number(*v, precision)
            ));
        }
        svg.push_str(&format!(
            "    <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            x + bar_w / 2.0,
            (up - 6.0).min(baseline - 6.0),
            format_number(total, precision)
        ));
        svg.push_str(&format!(
            "    <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            x + bar_w / 2.0,
            top + plot_h + 20.0,
            xml_escape(&g.label)
        ));
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.7583, 3), "0.758");
        assert_eq!(format_number(-1.0842, 3), "-1.084");
        assert_eq!(format_number(f64::INFINITY, 3), "inf");
        assert_eq!(format_number(f64::NEG_INFINITY, 3), "-inf");
        assert_eq!(format_number(-1e-9, 3), "0.000");
        assert_eq!(format_number(2.0, 0), "2");
        // ties round to even on the exact binary value
        assert_eq!(format_number(0.125, 2), "0.12");
        assert_eq!(format_number(0.375, 2), "0.38");
    }

    #[test]
    fn csv_and_markdown_rendering() {
        let mut t = Table::new("demo", "answer", vec!["js".into(), "new:2".into()]);
        t.push_row("A", vec![Cell::Num(0.7583), Cell::Num(0.8327)]);
        t.push_row("B, or so", vec![Cell::Num(0.0639), Cell::Empty]);
        let csv = t.to_csv(3);
        assert_eq!(
            csv,
            "answer,js,new:2\nA,0.758,0.833\n\"B, or so\",0.064,\n"
        );
        let md = t.to_markdown(3);
        assert!(md.contains("| A | 0.758 | 0.833 |"));
        assert!(md.starts_with("**demo**"));
    }

    #[test]
    fn svg_segments_sum_to_totals() {
        let groups = vec![
            BarGroup { label: "UC".into(), segments: vec![("good".into(), 0.0024), ("bad".into(), 0.0073)] },
            BarGroup { label: "OC".into(), segments: vec![("good".into(), 0.0021), ("bad".into(), -0.0123)] },
        ];
        let svg = stacked_bar_svg("t", &groups, 3);
        for g in &groups {
            let total: f64 = g.segments.iter().map(|(_, v)| v).sum();
            let mut seen = 0.0;
            let block = svg
                .split(&format!("data-label=\"{}\"", g.label))
                .nth(1)
                .unwrap()
                .split("</g>")
                .next()
                .unwrap();
            for part in block.split("data-value=\"").skip(1) {
                seen += part.split('"').next().unwrap().parse::<f64>().unwrap();
            }
            assert!((seen - total).abs() < 1e-12, "group {}: {seen} vs {total}", g.label);
        }
    }
}
