//! Sign-change location by grid scan followed by bisection.
//!
//! A function is sampled on a grid; every adjacent pair of samples with
//! different sign classes brackets a crossing, which is then refined by
//! bisection. A sample equal to zero counts as nonnegative, so a root that
//! lands exactly on a grid point is still bracketed by its neighbours.
//! Several roots inside one grid cell are not resolved.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default number of grid points for bracketing.
pub const DEFAULT_GRID_POINTS: usize = 512;
/// Default bisection tolerance, relative to the width of the bracketing cell.
pub const DEFAULT_RELATIVE_TOL: f64 = 1e-10;
const DEFAULT_MAX_ITERATIONS: u32 = 200;

/// Direction of the sign change, in increasing abscissa.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CrossingSide {
    /// Negative below the crossing, nonnegative above.
    NegativeToPositive,
    /// Nonnegative below the crossing, negative above.
    PositiveToNegative,
}

/// One located sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossingResult {
    /// Midpoint of the final bracket.
    pub location: f64,
    /// Lower end of the final bracket.
    pub bracket_lo: f64,
    /// Upper end of the final bracket.
    pub bracket_hi: f64,
    /// Half-width of the final bracket; the root is within this distance of
    /// `location`.
    pub achieved_tolerance: f64,
    /// Direction of the sign change.
    pub side: CrossingSide,
}

/// When bisection stops.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CrossingTolerance {
    /// Stop once the bracket is no wider than this, in abscissa units.
    Absolute(f64),
    /// Stop once the bracket is no wider than this fraction of the grid cell
    /// it started from.
    RelativeToBracket(f64),
}

impl CrossingTolerance {
    fn width_for(self, cell_width: f64) -> f64 {
        match self {
            CrossingTolerance::Absolute(t) => t,
            CrossingTolerance::RelativeToBracket(r) => r * cell_width,
        }
    }

    fn validate(self) -> Result<()> {
        let (name, v) = match self {
            CrossingTolerance::Absolute(t) => ("tol", t),
            CrossingTolerance::RelativeToBracket(r) => ("relative_tol", r),
        };
        crate::error::positive(name, v).map(|_| ())
    }
}

/// Grid density and stopping rule for a crossing search.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanConfig {
    /// Number of log-spaced grid points (at least 2).
    pub points: usize,
    /// Bisection stopping rule.
    pub tolerance: CrossingTolerance,
    /// Hard cap on bisection steps per crossing.
    pub max_iterations: u32,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            points: DEFAULT_GRID_POINTS,
            tolerance: CrossingTolerance::RelativeToBracket(DEFAULT_RELATIVE_TOL),
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl ScanConfig {
    /// Default grid with an absolute tolerance.
    pub fn absolute(tol: f64) -> Self {
        ScanConfig { tolerance: CrossingTolerance::Absolute(tol), ..Self::default() }
    }
}

/// `count` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    check_interval(lo, hi)?;
    if count < 2 {
        return Err(Error::InvalidSweep { reason: "grid needs at least 2 points" });
    }
    let (a, b) = (libm::log(lo), libm::log(hi));
    let last = (count - 1) as f64;
    Ok((0..count)
        .map(|i| match i {
            0 => lo,
            i if i == count - 1 => hi,
            i => libm::exp(a + (b - a) * (i as f64) / last),
        })
        .collect())
}

pub(crate) fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi {
        Ok(())
    } else {
        Err(Error::InvalidInterval { lo, hi })
    }
}

#[inline]
fn is_negative(v: f64) -> bool {
    v < 0.0
}

/// Scans `[lo, hi]` on a log grid and refines every sign change of `f`.
///
/// Crossings come back in ascending order. An interval without a sign change
/// yields an empty list.
pub fn find_crossings<F>(lo: f64, hi: f64, config: &ScanConfig, mut f: F) -> Result<Vec<CrossingResult>>
where
    F: FnMut(f64) -> Result<f64>,
{
    config.tolerance.validate()?;
    let grid = log_grid(lo, hi, config.points)?;
    let mut values = Vec::with_capacity(grid.len());
    for &x in &grid {
        let v = f(x)?;
        if v.is_nan() {
            return Err(Error::NoSolution { what: "crossing scan (NaN sample)" });
        }
        values.push(v);
    }

    let mut out = Vec::new();
    for i in 1..grid.len() {
        let (neg_lo, neg_hi) = (is_negative(values[i - 1]), is_negative(values[i]));
        if neg_lo == neg_hi {
            continue;
        }
        let width = config.tolerance.width_for(grid[i] - grid[i - 1]);
        out.push(bisect(grid[i - 1], grid[i], neg_lo, width, config.max_iterations, &mut f)?);
    }
    Ok(out)
}

fn bisect<F>(
    mut lo: f64,
    mut hi: f64,
    neg_lo: bool,
    width: f64,
    max_iterations: u32,
    f: &mut F,
) -> Result<CrossingResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    for _ in 0..max_iterations {
        if hi - lo <= width {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if is_negative(f(mid)?) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(CrossingResult {
        location: lo + 0.5 * (hi - lo),
        bracket_lo: lo,
        bracket_hi: hi,
        achieved_tolerance: 0.5 * (hi - lo),
        side: if neg_lo { CrossingSide::NegativeToPositive } else { CrossingSide::PositiveToNegative },
    })
}
