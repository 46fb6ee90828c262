//! The six binary determinants of the litigation risk coefficient.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// Presence (`true`) or absence (`false`) of each institutional condition.
///
/// The predictability pair `kb`/`ka` and the duration pair `t_long`/`t_short`
/// must each have exactly one member set. On the wire every bit is `0` or `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RiskIndicators {
    /// Forensic accounting expertise is likely incompetent or dishonest.
    #[serde(with = "bit")]
    pub z: bool,
    /// Court outcomes are not predictable or uniform.
    #[serde(with = "bit")]
    pub kb: bool,
    /// Trial lasts over one year.
    #[serde(with = "bit")]
    pub t_long: bool,
    /// Preliminary precautionary measures are in place.
    #[serde(with = "bit")]
    pub y: bool,
    /// Court outcomes are predictable and uniform.
    #[serde(with = "bit")]
    pub ka: bool,
    /// Trial lasts under one year.
    #[serde(with = "bit")]
    pub t_short: bool,
}

/// Which side of the predictability pair is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predictability {
    Absent,
    Present,
}

/// Which side of the duration pair is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrialDuration {
    OverOneYear,
    UnderOneYear,
}

impl RiskIndicators {
    /// Builds an indicator set that satisfies both pair constraints by construction.
    pub fn from_states(
        expertise_unreliable: bool,
        predictability: Predictability,
        duration: TrialDuration,
        precautionary_measures: bool,
    ) -> Self {
        RiskIndicators {
            z: expertise_unreliable,
            kb: predictability == Predictability::Absent,
            t_long: duration == TrialDuration::OverOneYear,
            y: precautionary_measures,
            ka: predictability == Predictability::Present,
            t_short: duration == TrialDuration::UnderOneYear,
        }
    }

    /// All sixteen valid combinations, in a fixed order.
    pub fn all_valid() -> Vec<RiskIndicators> {
        let mut out = Vec::with_capacity(16);
        for z in [true, false] {
            for predictability in [Predictability::Absent, Predictability::Present] {
                for duration in [TrialDuration::OverOneYear, TrialDuration::UnderOneYear] {
                    for y in [true, false] {
                        out.push(Self::from_states(z, predictability, duration, y));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.kb == self.ka {
            return Err(ModelError::InvalidIndicators(
                "exactly one of kb and ka must be set".into(),
            ));
        }
        if self.t_long == self.t_short {
            return Err(ModelError::InvalidIndicators(
                "exactly one of t_long and t_short must be set".into(),
            ));
        }
        Ok(())
    }
}

pub(crate) mod bit {
    use serde::de::{self, Deserializer, Unexpected, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(value: &bool, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(u8::from(*value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<bool, D::Error> {
        struct BitVisitor;

        impl Visitor<'_> for BitVisitor {
            type Value = bool;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("0 or 1")
            }

            fn visit_bool<E: de::Error>(self, v: bool) -> Result<bool, E> {
                Ok(v)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<bool, E> {
                match v {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(E::invalid_value(Unexpected::Unsigned(v), &self)),
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<bool, E> {
                match v {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(E::invalid_value(Unexpected::Signed(v), &self)),
                }
            }
        }

        deserializer.deserialize_any(BitVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_distinct_valid_sets() {
        let all = RiskIndicators::all_valid();
        assert_eq!(all.len(), 16);
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), 16);
        assert!(all.iter().all(|i| i.validate().is_ok()));
    }

    #[test]
    fn pair_constraints() {
        let mut ind = RiskIndicators::all_valid()[0];
        ind.ka = true;
        ind.kb = true;
        assert!(ind.validate().is_err());
        let mut ind = RiskIndicators::all_valid()[0];
        ind.t_long = false;
        ind.t_short = false;
        assert!(ind.validate().is_err());
    }

    #[test]
    fn wire_format_is_bits() {
        let ind = RiskIndicators::from_states(
            true,
            Predictability::Absent,
            TrialDuration::OverOneYear,
            true,
        );
        let json = serde_json::to_string(&ind).unwrap();
        assert_eq!(
            json,
            r#"{"z":1,"kb":1,"t_long":1,"y":1,"ka":0,"t_short":0}"#
        );
        let back: RiskIndicators = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ind);
        assert!(serde_json::from_str::<RiskIndicators>(
            r#"{"z":2,"kb":1,"t_long":1,"y":1,"ka":0,"t_short":0}"#
        )
        .is_err());
    }
}
