//! What-if analysis on top of the cost model: sweeps, break-even solving,
//! exhaustive indicator enumeration and regime comparison.

mod breakeven;
mod indicator_space;
mod regime;
mod sweep;

pub use breakeven::break_even_fraction;
pub use indicator_space::{enumerate_indicator_space, IndicatorRow};
pub use regime::{
    builtin_presets, compare_regimes, find_preset, RegimeComparison, RegimePreset, Verdict,
};
pub use sweep::{sweep_confirmation, SweepPoint, SweepSeries, MAX_SWEEP_STEPS};
