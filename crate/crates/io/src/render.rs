use std::fmt::Write as _;
use std::str::FromStr;

use litigacost_core::analysis::{RegimeComparison, SweepSeries};
use litigacost_core::{
    evaluate, format_fixed4, Currency, DisputeScenario, Evaluation, Fraction, MonetaryAmount,
    PolicyConfig,
};
use rust_decimal::Decimal;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format {other:?}, expected table, csv or json"
            )),
        }
    }
}

pub const CSV_COLUMNS: [&str; 10] = [
    "id",
    "currency",
    "claim",
    "confirmation",
    "c_fr",
    "tc",
    "tc_fraction",
    "plaintiff_action",
    "defendant_action",
    "implausible",
];

/// One evaluated scenario. Serialized flat: identifying fields, then the
/// cost result and recommendation fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluationRecord {
    pub id: String,
    pub currency: Currency,
    pub claim: MonetaryAmount,
    pub confirmation: Fraction,
    #[serde(flatten)]
    pub evaluation: Evaluation,
}

impl EvaluationRecord {
    pub fn new(s: &DisputeScenario, p: &PolicyConfig) -> Self {
        EvaluationRecord {
            id: s.id().to_string(),
            currency: s.currency(),
            claim: s.claim(),
            confirmation: s.confirmation(),
            evaluation: evaluate(s, p),
        }
    }

    fn csv_row(&self) -> [String; 10] {
        let e = &self.evaluation;
        [
            self.id.clone(),
            self.currency.to_string(),
            self.claim.format_major(),
            self.confirmation.to_string(),
            e.cost.risk_coefficient.to_string(),
            e.cost.tc.format_major(),
            format_fixed4(e.cost.tc_fraction_of_claim),
            debug_name(&e.recommendation.plaintiff_action),
            debug_name(&e.recommendation.defendant_action),
            e.recommendation.implausible.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BreakEvenReport {
    pub scenario_id: String,
    #[serde(serialize_with = "ser_fixed4")]
    pub target_tc_fraction: Decimal,
    pub confirmation: Fraction,
}

fn ser_fixed4<S: Serializer>(v: &Decimal, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_fixed4(*v))
}

fn debug_name<T: std::fmt::Debug>(v: &T) -> String {
    format!("{v:?}")
}

fn csv_text<const N: usize>(
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv of UTF-8 fields")
}

fn table_text<const N: usize>(
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> String {
    let rows: Vec<[String; N]> = rows.into_iter().collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    line(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for row in &rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn json_text<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("results serialize");
    text.push('\n');
    text
}

pub fn render_evaluations(records: &[EvaluationRecord], format: Format) -> String {
    match format {
        Format::Json => json_text(records),
        Format::Csv => csv_text(CSV_COLUMNS, records.iter().map(EvaluationRecord::csv_row)),
        Format::Table => table_text(CSV_COLUMNS, records.iter().map(EvaluationRecord::csv_row)),
    }
}

/// Sweep points use the evaluation columns, one row per grid point.
pub fn render_sweep(s: &DisputeScenario, series: &SweepSeries, format: Format) -> String {
    let coefficient = litigacost_core::transaction_cost(s)
        .risk_coefficient
        .to_string();
    let rows = series.points.iter().map(|pt| {
        [
            series.scenario_id.clone(),
            s.currency().to_string(),
            s.claim().format_major(),
            pt.parameter_value.to_string(),
            coefficient.clone(),
            pt.tc.format_major(),
            format_fixed4(pt.tc_fraction),
            debug_name(&pt.plaintiff_action),
            debug_name(&pt.defendant_action),
            pt.implausible.to_string(),
        ]
    });
    match format {
        Format::Json => json_text(series),
        Format::Csv => csv_text(CSV_COLUMNS, rows),
        Format::Table => table_text(CSV_COLUMNS, rows),
    }
}

const COMPARISON_COLUMNS: [&str; 9] = [
    "scenario_id",
    "before",
    "after",
    "c_fr_before",
    "c_fr_after",
    "tc_before",
    "tc_after",
    "delta",
    "verdict",
];

pub fn render_comparison(c: &RegimeComparison, format: Format) -> String {
    let row = [
        c.scenario_id.clone(),
        c.before.clone(),
        c.after.clone(),
        c.risk_coefficient_before.to_string(),
        c.risk_coefficient_after.to_string(),
        c.tc_before.format_major(),
        c.tc_after.format_major(),
        c.delta.format_major(),
        debug_name(&c.verdict),
    ];
    match format {
        Format::Json => json_text(c),
        Format::Csv => csv_text(COMPARISON_COLUMNS, [row]),
        Format::Table => table_text(COMPARISON_COLUMNS, [row]),
    }
}

const BREAK_EVEN_COLUMNS: [&str; 3] = ["scenario_id", "target_tc_fraction", "confirmation"];

pub fn render_break_even(r: &BreakEvenReport, format: Format) -> String {
    let row = [
        r.scenario_id.clone(),
        format_fixed4(r.target_tc_fraction),
        r.confirmation.to_string(),
    ];
    match format {
        Format::Json => json_text(r),
        Format::Csv => csv_text(BREAK_EVEN_COLUMNS, [row]),
        Format::Table => table_text(BREAK_EVEN_COLUMNS, [row]),
    }
}
