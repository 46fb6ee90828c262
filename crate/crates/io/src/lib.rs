//! Scenario files in, tables / CSV / JSON out.

mod document;
mod issue;
mod render;

pub use document::{
    parse_policy_file, parse_raw_scenario, parse_scenario_file, LoadedDocument, PolicyOverrides,
    RawScenario, ScenarioDocument, SCHEMA_VERSION,
};
pub use issue::{Issue, IssueCode};
pub use render::{
    render_break_even, render_comparison, render_evaluations, render_sweep, BreakEvenReport,
    EvaluationRecord, Format, CSV_COLUMNS,
};
