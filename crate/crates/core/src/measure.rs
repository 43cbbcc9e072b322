//! The explicit "undefined" marker carried by metric values.

use std::fmt;

/// A metric value, or the reason it could not be computed.
///
/// Degenerate inputs (zero denominators, empty sets) produce
/// [`Measure::Undefined`] instead of NaN or a silent zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Value(f64),
    Undefined(&'static str),
}

impl Measure {
    /// `num / den`, undefined with `reason` when `den` is zero.
    pub fn ratio(num: f64, den: f64, reason: &'static str) -> Self {
        if den == 0.0 {
            Measure::Undefined(reason)
        } else {
            Measure::Value(num / den)
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Measure::Value(v) => Some(v),
            Measure::Undefined(_) => None,
        }
    }

    pub fn reason(self) -> Option<&'static str> {
        match self {
            Measure::Value(_) => None,
            Measure::Undefined(r) => Some(r),
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, Measure::Value(_))
    }

    pub fn map(self, f: impl FnOnce(f64) -> f64) -> Self {
        match self {
            Measure::Value(v) => Measure::Value(f(v)),
            u => u,
        }
    }

    /// Unwraps the value, panicking with the undefined reason.
    #[track_caller]
    pub fn unwrap(self) -> f64 {
        match self {
            Measure::Value(v) => v,
            Measure::Undefined(r) => panic!("measure is undefined: {r}"),
        }
    }
}

impl From<f64> for Measure {
    fn from(v: f64) -> Self {
        Measure::Value(v)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Value(v) => write!(f, "{v}"),
            Measure::Undefined(r) => write!(f, "undefined ({r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_denominator_is_undefined() {
        assert_eq!(Measure::ratio(1.0, 0.0, "x"), Measure::Undefined("x"));
        assert_eq!(Measure::ratio(0.0, 0.0, "x").value(), None);
        assert_eq!(Measure::ratio(1.0, 4.0, "x").value(), Some(0.25));
    }

    #[test]
    fn map_preserves_undefined() {
        assert_eq!(Measure::Undefined("r").map(|v| v + 1.0).reason(), Some("r"));
        assert_eq!(Measure::Value(1.0).map(|v| v * 3.0), Measure::Value(3.0));
    }
}
