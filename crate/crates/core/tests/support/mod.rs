//! Independent re-implementation of the cost formulas on plain integers,
//! used as an oracle by the property and acceptance suites.

#![allow(dead_code)]

use litigacost_core::{Currency, MonetaryAmount, RiskIndicators, ScenarioInput};
use proptest::prelude::*;
use rust_decimal::Decimal;

/// Confirmation shares are drawn on a 10^-4 grid.
pub const SHARE_DENOM: i64 = 10_000;

/// Below this claim (in minor units) whole-cent rounding of T_d moves the
/// cost function in steps coarser than 10^-4 of the share, so the share cannot
/// be recovered from the cost to that precision.
pub const MIN_ROUND_TRIP_CLAIM: i64 = 100_000;

#[derive(Debug, Clone)]
pub struct RawCase {
    pub claim: i64,
    pub share_bp: i64,
    pub t_d_override: Option<i64>,
    pub plaintiff_trial: i64,
    pub defendant_trial: i64,
    pub plaintiff_settle: i64,
    pub defendant_settle: i64,
    /// z, kb, t_long, y, ka, t_short
    pub bits: [u8; 6],
}

pub fn bits_from_index(i: u8) -> [u8; 6] {
    let z = i & 1;
    let kb = (i >> 1) & 1;
    let t_long = (i >> 2) & 1;
    let y = (i >> 3) & 1;
    [z, kb, t_long, y, 1 - kb, 1 - t_long]
}

pub fn indicators_from_bits(b: [u8; 6]) -> RiskIndicators {
    RiskIndicators {
        z: b[0] == 1,
        kb: b[1] == 1,
        t_long: b[2] == 1,
        y: b[3] == 1,
        ka: b[4] == 1,
        t_short: b[5] == 1,
    }
}

pub fn naive_coefficient(b: [u8; 6]) -> i64 {
    (b[0] as i64 + b[1] as i64 + b[2] as i64) - (b[3] as i64 + b[4] as i64 + b[5] as i64)
}

/// `num / den` rounded half-to-even, `den > 0`.
pub fn div_round_half_even(num: i128, den: i128) -> i128 {
    let q = num.div_euclid(den);
    let r = num.rem_euclid(den);
    match (2 * r).cmp(&den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q % 2 == 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

impl RawCase {
    pub fn t_d(&self) -> i64 {
        self.t_d_override.unwrap_or_else(|| {
            div_round_half_even(
                self.claim as i128 * self.share_bp as i128,
                SHARE_DENOM as i128,
            ) as i64
        })
    }

    pub fn naive_tc(&self) -> i64 {
        let margin = (self.claim - self.t_d()) - (self.plaintiff_trial + self.defendant_trial);
        margin * naive_coefficient(self.bits)
    }

    /// tc / claim on the 10^-4 grid, half-to-even.
    pub fn naive_tc_fraction_bp(&self) -> i64 {
        div_round_half_even(
            self.naive_tc() as i128 * SHARE_DENOM as i128,
            self.claim as i128,
        ) as i64
    }

    pub fn naive_settlement_gain(&self) -> i64 {
        (self.claim - self.t_d()) + (self.plaintiff_settle + self.defendant_settle)
    }

    pub fn share(&self) -> Decimal {
        Decimal::new(self.share_bp, 4)
    }

    pub fn scaled(&self, factor: i64) -> RawCase {
        RawCase {
            claim: self.claim * factor,
            t_d_override: self.t_d_override.map(|v| v * factor),
            plaintiff_trial: self.plaintiff_trial * factor,
            defendant_trial: self.defendant_trial * factor,
            plaintiff_settle: self.plaintiff_settle * factor,
            defendant_settle: self.defendant_settle * factor,
            ..self.clone()
        }
    }

    pub fn to_input(&self, id: &str) -> ScenarioInput {
        let eur = |m: i64| MonetaryAmount::from_minor(m, Currency::EUR);
        ScenarioInput {
            id: id.to_string(),
            claim: eur(self.claim),
            confirmation: self.share(),
            t_d_override: self.t_d_override.map(eur),
            plaintiff_trial_cost: eur(self.plaintiff_trial),
            defendant_trial_cost: eur(self.defendant_trial),
            plaintiff_settle_cost: eur(self.plaintiff_settle),
            defendant_settle_cost: eur(self.defendant_settle),
            indicators: indicators_from_bits(self.bits),
        }
    }
}

/// Valid random scenarios; claims up to 10^8 major units.
pub fn raw_case(with_override: bool) -> impl Strategy<Value = RawCase> {
    (1i64..=10_000_000_000, 0i64..=SHARE_DENOM, 0u8..16)
        .prop_flat_map(move |(claim, share_bp, idx)| {
            let override_strategy = if with_override {
                proptest::option::of(0i64..=claim).boxed()
            } else {
                Just(None).boxed()
            };
            (
                Just(claim),
                Just(share_bp),
                override_strategy,
                0i64..=claim / 2,
                0i64..=claim / 2,
                0i64..=claim,
                0i64..=claim,
                Just(bits_from_index(idx)),
            )
        })
        .prop_map(
            |(claim, share_bp, t_d_override, pt, dt, ps, ds, bits)| RawCase {
                claim,
                share_bp,
                t_d_override,
                plaintiff_trial: pt,
                defendant_trial: dt,
                plaintiff_settle: ps,
                defendant_settle: ds,
                bits,
            },
        )
}

/// The scenario both hypotheses share, at a confirmation share in basis points.
pub fn hypothesis_case(share_bp: i64) -> RawCase {
    RawCase {
        claim: 10_000_000,
        share_bp,
        t_d_override: None,
        plaintiff_trial: 900_000,
        defendant_trial: 900_000,
        plaintiff_settle: 900_000,
        defendant_settle: 900_000,
        bits: [1, 1, 1, 1, 0, 0],
    }
}
