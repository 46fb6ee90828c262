//! Exact monetary amounts held as signed integer minor units.

use std::fmt;
use std::str::FromStr;

use rust_decimal::Decimal;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Minor units per major unit. Every supported currency uses two decimal places.
pub const MINOR_PER_MAJOR: i64 = 100;

/// Largest magnitude accepted for a single scenario amount (10^14 major units).
///
/// Keeps every intermediate of the cost model well inside `i64`.
pub const MAX_ABS_MINOR_UNITS: i64 = 10_000_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoneyError {
    #[error("currency mismatch: {left} vs {right}")]
    CurrencyMismatch { left: Currency, right: Currency },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid currency code {0:?}, expected three uppercase ASCII letters")]
    InvalidCurrency(String),
    #[error("invalid amount {0:?}")]
    InvalidAmount(String),
    #[error("amount {0:?} has more than two decimal places")]
    TooPrecise(String),
}

/// ISO-4217 style three letter code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Currency([u8; 3]);

impl Currency {
    pub const EUR: Currency = Currency(*b"EUR");

    pub fn as_str(&self) -> &str {
        // constructed only from ASCII uppercase
        std::str::from_utf8(&self.0).expect("currency code is ASCII")
    }
}

impl FromStr for Currency {
    type Err = MoneyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 || !bytes.iter().all(u8::is_ascii_uppercase) {
            return Err(MoneyError::InvalidCurrency(s.to_string()));
        }
        Ok(Currency([bytes[0], bytes[1], bytes[2]]))
    }
}

impl fmt::Display for Currency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Currency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Currency({})", self.as_str())
    }
}

impl Serialize for Currency {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// A signed amount of money in minor units (cents).
///
/// Amounts only combine when their currencies match. On the wire an amount is
/// a decimal string in major units with exactly two places, e.g. `"4000.00"`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonetaryAmount {
    minor_units: i64,
    currency: Currency,
}

impl MonetaryAmount {
    pub const fn from_minor(minor_units: i64, currency: Currency) -> Self {
        MonetaryAmount {
            minor_units,
            currency,
        }
    }

    pub fn from_major(major_units: i64, currency: Currency) -> Result<Self, MoneyError> {
        major_units
            .checked_mul(MINOR_PER_MAJOR)
            .map(|m| Self::from_minor(m, currency))
            .ok_or(MoneyError::Overflow)
    }

    pub fn zero(currency: Currency) -> Self {
        Self::from_minor(0, currency)
    }

    /// Parses a decimal string in major units ("100000.00", "-12.5", "7").
    /// More than two decimal places is rejected rather than rounded.
    pub fn parse_major(text: &str, currency: Currency) -> Result<Self, MoneyError> {
        let trimmed = text.trim();
        let value = Decimal::from_str_exact(trimmed)
            .map_err(|_| MoneyError::InvalidAmount(text.to_string()))?;
        let value = value.normalize();
        if value.scale() > 2 {
            return Err(MoneyError::TooPrecise(text.to_string()));
        }
        let minor = value
            .checked_mul(Decimal::from(MINOR_PER_MAJOR))
            .ok_or(MoneyError::Overflow)?;
        let minor: i64 = minor.try_into().map_err(|_| MoneyError::Overflow)?;
        Ok(Self::from_minor(minor, currency))
    }

    pub fn minor_units(&self) -> i64 {
        self.minor_units
    }

    pub fn currency(&self) -> Currency {
        self.currency
    }

    pub fn is_positive(&self) -> bool {
        self.minor_units > 0
    }

    pub fn is_negative(&self) -> bool {
        self.minor_units < 0
    }

    /// The amount as an exact decimal in major units.
    pub fn to_major_decimal(&self) -> Decimal {
        Decimal::new(self.minor_units, 2)
    }

    fn same_currency(&self, other: &Self) -> Result<(), MoneyError> {
        if self.currency == other.currency {
            Ok(())
        } else {
            Err(MoneyError::CurrencyMismatch {
                left: self.currency,
                right: other.currency,
            })
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, MoneyError> {
        self.same_currency(&other)?;
        self.minor_units
            .checked_add(other.minor_units)
            .map(|m| Self::from_minor(m, self.currency))
            .ok_or(MoneyError::Overflow)
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, MoneyError> {
        self.same_currency(&other)?;
        self.minor_units
            .checked_sub(other.minor_units)
            .map(|m| Self::from_minor(m, self.currency))
            .ok_or(MoneyError::Overflow)
    }

    pub fn checked_scale(self, factor: i64) -> Result<Self, MoneyError> {
        self.minor_units
            .checked_mul(factor)
            .map(|m| Self::from_minor(m, self.currency))
            .ok_or(MoneyError::Overflow)
    }

    /// `share × self`, rounded half-to-even to whole minor units.
    pub fn mul_fraction_round_half_even(self, share: Decimal) -> Result<Self, MoneyError> {
        let exact = Decimal::from(self.minor_units)
            .checked_mul(share)
            .ok_or(MoneyError::Overflow)?;
        let rounded =
            exact.round_dp_with_strategy(0, rust_decimal::RoundingStrategy::MidpointNearestEven);
        let minor: i64 = rounded.try_into().map_err(|_| MoneyError::Overflow)?;
        Ok(Self::from_minor(minor, self.currency))
    }

    /// Major-unit decimal string with exactly two places.
    pub fn format_major(&self) -> String {
        let sign = if self.minor_units < 0 { "-" } else { "" };
        let abs = self.minor_units.unsigned_abs();
        let per = MINOR_PER_MAJOR as u64;
        format!("{sign}{}.{:02}", abs / per, abs % per)
    }
}

impl fmt::Display for MonetaryAmount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.format_major(), self.currency)
    }
}

impl fmt::Debug for MonetaryAmount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MonetaryAmount({} {})",
            self.format_major(),
            self.currency
        )
    }
}

impl Serialize for MonetaryAmount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format_major())
    }
}
