use alloc::boxed::Box;
use core::fmt;

/// Errors raised by the model, the crossing finders and the sweep engine.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input was nonpositive, NaN or infinite where the model requires a
    /// strictly positive finite value.
    InvalidParameter {
        /// Name of the offending field or argument.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// A search interval with `lo >= hi` or a nonpositive endpoint.
    InvalidInterval {
        /// Lower endpoint.
        lo: f64,
        /// Upper endpoint.
        hi: f64,
    },
    /// An intermediate quantity left the range of `f64`.
    Overflow {
        /// Which quantity overflowed.
        what: &'static str,
    },
    /// A closed-form solve produced no admissible value.
    NoSolution {
        /// Which solve failed.
        what: &'static str,
    },
    /// A failure at one point of a sweep.
    AtPoint {
        /// Index of the series being evaluated.
        series: usize,
        /// Abscissa being evaluated.
        abscissa: f64,
        /// The underlying failure.
        source: Box<Error>,
    },
    /// A sweep spec that cannot be run as given.
    InvalidSweep {
        /// Human-readable reason.
        reason: &'static str,
    },
}

/// Shorthand result type.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, value } => {
                write!(f, "invalid parameter `{name}`: {value} (must be positive and finite)")
            }
            Error::InvalidInterval { lo, hi } => {
                write!(f, "invalid interval [{lo}, {hi}]: need 0 < lo < hi, both finite")
            }
            Error::Overflow { what } => write!(f, "numeric overflow while computing {what}"),
            Error::NoSolution { what } => write!(f, "no admissible solution for {what}"),
            Error::AtPoint { series, abscissa, source } => {
                write!(f, "series {series}, abscissa {abscissa}: {source}")
            }
            Error::InvalidSweep { reason } => write!(f, "invalid sweep: {reason}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::AtPoint { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}

impl Error {
    /// True for failures of the numerics rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        match self {
            Error::Overflow { .. } | Error::NoSolution { .. } => true,
            Error::AtPoint { source, .. } => source.is_numeric(),
            _ => false,
        }
    }
}

/// Rejects anything that is not a strictly positive finite number.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter { name, value })
    }
}
