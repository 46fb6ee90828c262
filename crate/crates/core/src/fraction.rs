use std::fmt;

use rust_decimal::Decimal;
use serde::{Serialize, Serializer};

/// A share in `[0, 1]`, kept as an exact decimal.
///
/// Displayed and serialized with four decimal places.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(Decimal);

impl Fraction {
    pub const ZERO: Fraction = Fraction(Decimal::ZERO);
    pub const ONE: Fraction = Fraction(Decimal::ONE);

    /// Returns `None` outside `[0, 1]`.
    pub fn new(value: Decimal) -> Option<Self> {
        (value >= Decimal::ZERO && value <= Decimal::ONE).then_some(Fraction(value))
    }

    /// Convenience for literals: `Fraction::from_parts(8, 1)` is 0.8.
    pub fn from_parts(mantissa: i64, scale: u32) -> Option<Self> {
        Self::new(Decimal::new(mantissa, scale))
    }

    pub fn value(&self) -> Decimal {
        self.0
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_fixed4(self.0))
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({})", self.0)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_fixed4(self.0))
    }
}

/// Rounds half-to-even to four places and always prints all four.
pub fn format_fixed4(value: Decimal) -> String {
    let mut rounded = round4(value);
    rounded.rescale(4);
    rounded.to_string()
}

pub(crate) fn round4(value: Decimal) -> Decimal {
    value.round_dp_with_strategy(4, rust_decimal::RoundingStrategy::MidpointNearestEven)
}

/// Serde helper for plain decimals that must print with four places.
pub(crate) mod fixed4 {
    use rust_decimal::Decimal;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Decimal, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&super::format_fixed4(*value))
    }
}
