//! Grids, series and the serial sweep engine.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cell::UnitCellParams;
use crate::constants::PhysicalConstants;
use crate::error::{positive, Error, Result};
use crate::response::{Handedness, ResponseModel};
use crate::thermal::{CothConvention, ThermalFockState};

/// Default number of sweep points per series.
pub const DEFAULT_SWEEP_POINTS: usize = 256;

/// Which variable runs along the abscissa.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Axis {
    /// Angular frequency, rad/s.
    Omega,
    /// Temperature, kelvin.
    Temperature,
}

impl Axis {
    /// Default grid: log 256 points over `[0.5e9, 5e9]` rad/s, or linear 256
    /// points over `[5, 300]` K.
    pub fn default_grid(self) -> Grid {
        match self {
            Axis::Omega => Grid { lo: 0.5e9, hi: 5e9, count: DEFAULT_SWEEP_POINTS, spacing: Spacing::Log },
            Axis::Temperature => Grid { lo: 5.0, hi: 300.0, count: DEFAULT_SWEEP_POINTS, spacing: Spacing::Linear },
        }
    }
}

/// Point spacing of a [`Grid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Spacing {
    /// Equal steps.
    Linear,
    /// Equal ratios.
    Log,
}

/// Closed interval sampled at `count` points, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Grid {
    /// First point.
    pub lo: f64,
    /// Last point.
    pub hi: f64,
    /// Number of points, at least 2.
    pub count: usize,
    /// Spacing rule.
    pub spacing: Spacing,
}

impl Grid {
    /// Checks `0 < lo < hi` and `count >= 2`.
    pub fn validate(&self) -> Result<()> {
        crate::crossing::check_interval(self.lo, self.hi)?;
        if self.count < 2 {
            return Err(Error::InvalidSweep { reason: "grid count must be at least 2" });
        }
        Ok(())
    }

    /// The sample points in ascending order.
    pub fn points(&self) -> Result<Vec<f64>> {
        self.validate()?;
        match self.spacing {
            Spacing::Log => crate::crossing::log_grid(self.lo, self.hi, self.count),
            Spacing::Linear => {
                let last = (self.count - 1) as f64;
                Ok((0..self.count)
                    .map(|i| match i {
                        0 => self.lo,
                        i if i == self.count - 1 => self.hi,
                        i => self.lo + (self.hi - self.lo) * (i as f64) / last,
                    })
                    .collect())
            }
        }
    }
}

/// The single quantity one curve of a sweep fixes.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SeriesOverride {
    /// Temperature, kelvin. Only valid on the omega axis.
    Temperature(f64),
    /// Field photon number.
    PhotonNumber(u32),
    /// Current variance, A².
    Fluctuation(f64),
}

impl SeriesOverride {
    /// Label used in the `series` column of the output.
    pub fn label(&self) -> String {
        match self {
            SeriesOverride::Temperature(t) => format!("T={t}K"),
            SeriesOverride::PhotonNumber(n) => format!("n={n}"),
            SeriesOverride::Fluctuation(f) => format!("fluct={f}"),
        }
    }

    /// `state` with this override applied.
    pub fn apply(&self, state: &ThermalFockState) -> ThermalFockState {
        match *self {
            SeriesOverride::Temperature(temperature) => ThermalFockState { temperature, ..*state },
            SeriesOverride::PhotonNumber(n) => ThermalFockState { n, ..*state },
            SeriesOverride::Fluctuation(current_fluctuation) => ThermalFockState { current_fluctuation, ..*state },
        }
    }

    fn validate(&self, axis: Axis) -> Result<()> {
        match *self {
            SeriesOverride::Temperature(_) if axis == Axis::Temperature => {
                Err(Error::InvalidSweep { reason: "temperature series override on a temperature axis" })
            }
            SeriesOverride::Temperature(t) => positive("temperature", t).map(|_| ()),
            SeriesOverride::Fluctuation(f) => positive("current_fluctuation", f).map(|_| ()),
            SeriesOverride::PhotonNumber(_) => Ok(()),
        }
    }
}

/// Fully resolved description of a sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepSpec {
    /// Cell parameters, including the cell length actually used.
    pub params: UnitCellParams,
    /// Base state; each series overrides one of its fields and the axis
    /// overrides another.
    pub state: ThermalFockState,
    /// Angular frequency used on the temperature axis, rad/s.
    pub omega: f64,
    /// Abscissa variable.
    pub axis: Axis,
    /// Abscissa grid.
    pub grid: Grid,
    /// One entry per curve.
    pub series: Vec<SeriesOverride>,
    /// Constants, convention and classification tolerances.
    pub model: ResponseModel,
}

impl SweepSpec {
    /// Checks every sweep invariant.
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.grid.validate()?;
        if self.series.is_empty() {
            return Err(Error::InvalidSweep { reason: "at least one series is required" });
        }
        for s in &self.series {
            s.validate(self.axis)?;
        }
        match self.axis {
            Axis::Omega => positive("temperature", self.state.temperature)?,
            Axis::Temperature => positive("omega", self.omega)?,
        };
        positive("current_fluctuation", self.state.current_fluctuation)?;
        Ok(())
    }

    /// Evaluates one `(series, abscissa)` pair.
    pub fn evaluate_point(&self, series_index: usize, label: &str, abscissa: f64) -> Result<SweepRecord> {
        let series =
            self.series.get(series_index).ok_or(Error::InvalidSweep { reason: "series index out of range" })?;
        let mut state = series.apply(&self.state);
        let omega = match self.axis {
            Axis::Omega => abscissa,
            Axis::Temperature => {
                state.temperature = abscissa;
                self.omega
            }
        };
        let tag = |e: Error| Error::AtPoint { series: series_index, abscissa, source: Box::new(e) };
        let r = self.model.evaluate(&self.params, &state, omega).map_err(tag)?;
        Ok(SweepRecord {
            series: String::from(label),
            abscissa,
            epsilon_eff: r.epsilon_eff,
            mu_eff: r.mu_eff,
            handedness: r.handedness,
        })
    }

    /// Series labels in order.
    pub fn labels(&self) -> Vec<String> {
        self.series.iter().map(SeriesOverride::label).collect()
    }
}

/// One evaluated point.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepRecord {
    /// Label of the curve this point belongs to.
    pub series: String,
    /// Angular frequency (rad/s) or temperature (K).
    pub abscissa: f64,
    /// Effective permittivity, farads.
    pub epsilon_eff: f64,
    /// Effective permeability, henries.
    pub mu_eff: f64,
    /// Sign class.
    pub handedness: Handedness,
}

/// Provenance recorded with every sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepMetadata {
    /// Constants used.
    pub constants: PhysicalConstants,
    /// `coth` convention used.
    pub convention: CothConvention,
    /// Version of this crate.
    pub tool_version: String,
}

impl SweepMetadata {
    /// Metadata for a sweep run with `model`.
    pub fn for_model(model: &ResponseModel) -> Self {
        SweepMetadata {
            constants: model.constants,
            convention: model.convention,
            tool_version: String::from(crate::VERSION),
        }
    }
}

/// Records ordered by series, then ascending abscissa.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepResult {
    /// The spec that produced the records.
    pub spec: SweepSpec,
    /// `series.len() × grid.count` records.
    pub records: Vec<SweepRecord>,
    /// Provenance.
    pub metadata: SweepMetadata,
}

/// Evaluates every `(series, grid point)` pair in order on the current
/// thread.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let points = spec.grid.points()?;
    let mut records = Vec::with_capacity(points.len() * spec.series.len());
    for (i, label) in spec.labels().iter().enumerate() {
        for &x in &points {
            records.push(spec.evaluate_point(i, label, x)?);
        }
    }
    Ok(SweepResult { spec: spec.clone(), records, metadata: SweepMetadata::for_model(&spec.model) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> SweepSpec {
        SweepSpec {
            params: UnitCellParams::new(250e-6, 6.50e-3, 9.0e-3, 350e-12, 1.7e-6).unwrap(),
            state: ThermalFockState::new(1, 170.0, 1.0).unwrap(),
            omega: 2.9e9,
            axis: Axis::Temperature,
            grid: Grid { lo: 5.0, hi: 300.0, count: 2, spacing: Spacing::Linear },
            series: alloc::vec![SeriesOverride::PhotonNumber(1)],
            model: ResponseModel::default(),
        }
    }

    #[test]
    fn two_points_one_series() {
        let r = run_sweep(&spec()).unwrap();
        assert_eq!(r.records.len(), 2);
        assert_eq!(r.records[0].abscissa, 5.0);
        assert_eq!(r.records[1].abscissa, 300.0);
        assert_eq!(r.records[0].series, "n=1");
    }

    #[test]
    fn linear_grid_is_evenly_spaced() {
        let g = Grid { lo: 5.0, hi: 300.0, count: 256, spacing: Spacing::Linear }.points().unwrap();
        assert_eq!(g.len(), 256);
        assert_eq!(*g.last().unwrap(), 300.0);
        assert!(g.windows(2).all(|w| ((w[1] - w[0]) - 295.0 / 255.0).abs() < 1e-12));
    }

    #[test]
    fn rejects_invalid_specs() {
        let mut s = spec();
        s.series.clear();
        assert!(run_sweep(&s).is_err());

        let mut s = spec();
        s.series = alloc::vec![SeriesOverride::Temperature(5.0)];
        assert!(run_sweep(&s).is_err());

        let mut s = spec();
        s.grid.count = 1;
        assert!(run_sweep(&s).is_err());

        let mut s = spec();
        s.grid.hi = 1.0;
        assert!(run_sweep(&s).is_err());
    }

    #[test]
    fn errors_are_tagged_with_the_point() {
        let mut s = spec();
        s.params.z0 = 1e-200;
        s.state.current_fluctuation = 1e-300;
        match run_sweep(&s) {
            Err(Error::AtPoint { series: 0, abscissa, .. }) => assert_eq!(abscissa, 5.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn labels() {
        assert_eq!(SeriesOverride::Temperature(85.0).label(), "T=85K");
        assert_eq!(SeriesOverride::Fluctuation(1.5).label(), "fluct=1.5");
        assert_eq!(SeriesOverride::Fluctuation(1.0).label(), "fluct=1");
    }
}
