//! Built-in unit cells for the three reference parameter studies.
//!
//! | preset | C_l    | L_l     | C_r    | L_r    | study                                    |
//! |--------|--------|---------|--------|--------|------------------------------------------|
//! | fig2   | 148 μF | 595 μH  | 35 mF  | 480 pH | ω sweep, T ∈ {5, 35, 85, 150} K, n = 5, ⟨(Δi)²⟩ = 25 |
//! | fig3   | 250 μF | 6.50 mH | 9.0 mF | 350 pH | T sweep at 2.9e9 rad/s, n ∈ {1, 3, 6, 10}, ⟨(Δi)²⟩ = 1 |
//! | fig4   | 550 μF | 1.00 mH | 45 mF  | 600 pH | T sweep at 2.9e9 rad/s, ⟨(Δi)²⟩ ∈ {1, 1.5, 3, 4.5}, n = 1 |
//!
//! The cell length `z₀` is not part of the element set. Each preset fixes it
//! by requiring `ε = 0` at one anchor:
//!
//! * fig2: `T = 85 K`, `ω = 3e9 rad/s` (n = 5, ⟨(Δi)²⟩ = 25);
//! * fig3: `T = 170 K`, `ω = 2.9e9 rad/s` (n = 1, ⟨(Δi)²⟩ = 1);
//! * fig4: `T = 300 K`, `ω = 2.9e9 rad/s` (n = 1, ⟨(Δi)²⟩ = 1).

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::cell::{UnitCellParams, DEFAULT_Z0};
use crate::error::{Error, Result};
use crate::response::{CalibrationAnchor, ResponseModel};
use crate::sweep::{Axis, Grid, SeriesOverride, SweepSpec};
use crate::thermal::ThermalFockState;

/// Reference angular frequency of the temperature studies, rad/s.
pub const STUDY_OMEGA: f64 = 2.9e9;

/// Name of a built-in preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Preset {
    /// Frequency study at four temperatures.
    Fig2,
    /// Temperature study at four photon numbers.
    Fig3,
    /// Temperature study at four current variances.
    Fig4,
}

impl Preset {
    /// All presets.
    pub const ALL: [Preset; 3] = [Preset::Fig2, Preset::Fig3, Preset::Fig4];

    /// Lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
        }
    }

    /// The four lumped elements, with the placeholder cell length
    /// [`DEFAULT_Z0`].
    pub fn elements(self) -> UnitCellParams {
        let (c_l, l_l, c_r, l_r) = match self {
            Preset::Fig2 => (148e-6, 595e-6, 35e-3, 480e-12),
            Preset::Fig3 => (250e-6, 6.50e-3, 9.0e-3, 350e-12),
            Preset::Fig4 => (550e-6, 1.00e-3, 45e-3, 600e-12),
        };
        UnitCellParams { c_l, l_l, c_r, l_r, z0: DEFAULT_Z0 }
    }

    /// Default state. Its temperature is the anchor temperature.
    pub fn default_state(self) -> ThermalFockState {
        let (n, temperature, current_fluctuation) = match self {
            Preset::Fig2 => (5, 85.0, 25.0),
            Preset::Fig3 => (1, 170.0, 1.0),
            Preset::Fig4 => (1, 300.0, 1.0),
        };
        ThermalFockState { n, temperature, current_fluctuation }
    }

    /// Point at which `ε` is required to vanish for this preset.
    pub fn anchor(self) -> CalibrationAnchor {
        match self {
            Preset::Fig2 => CalibrationAnchor { omega: 3e9, temperature: 85.0 },
            Preset::Fig3 => CalibrationAnchor { omega: STUDY_OMEGA, temperature: 170.0 },
            Preset::Fig4 => CalibrationAnchor { omega: STUDY_OMEGA, temperature: 300.0 },
        }
    }

    /// Sweep axis.
    pub fn axis(self) -> Axis {
        match self {
            Preset::Fig2 => Axis::Omega,
            Preset::Fig3 | Preset::Fig4 => Axis::Temperature,
        }
    }

    /// One override per plotted curve.
    pub fn series(self) -> Vec<SeriesOverride> {
        match self {
            Preset::Fig2 => [5.0, 35.0, 85.0, 150.0].into_iter().map(SeriesOverride::Temperature).collect(),
            Preset::Fig3 => [1, 3, 6, 10].into_iter().map(SeriesOverride::PhotonNumber).collect(),
            Preset::Fig4 => [1.0, 1.5, 3.0, 4.5].into_iter().map(SeriesOverride::Fluctuation).collect(),
        }
    }

    /// `z₀` that puts the `ε` zero on this preset's anchor, for the given
    /// element values.
    pub fn calibrate(self, elements: &UnitCellParams, model: &ResponseModel) -> Result<f64> {
        model.calibrate_z0(elements, &self.default_state(), self.anchor())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(Preset::Fig2),
            "fig3" => Ok(Preset::Fig3),
            "fig4" => Ok(Preset::Fig4),
            _ => Err(Error::InvalidSweep { reason: "unknown preset (expected fig2, fig3 or fig4)" }),
        }
    }
}

/// A preset with its calibrated cell and sweep defaults.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PresetDefinition {
    /// Which preset.
    pub preset: Preset,
    /// Elements with calibrated `z₀`.
    pub params: UnitCellParams,
    /// Default state.
    pub state: ThermalFockState,
    /// Frequency of the temperature studies (anchor frequency for fig2).
    pub omega: f64,
    /// Calibration anchor.
    pub anchor: CalibrationAnchor,
    /// Sweep axis.
    pub axis: Axis,
    /// Default grid.
    pub grid: Grid,
    /// Default curves.
    pub series: Vec<SeriesOverride>,
}

impl PresetDefinition {
    /// The preset's default sweep.
    pub fn sweep_spec(&self, model: ResponseModel) -> SweepSpec {
        SweepSpec {
            params: self.params,
            state: self.state,
            omega: self.omega,
            axis: self.axis,
            grid: self.grid,
            series: self.series.clone(),
            model,
        }
    }
}

/// Resolves a preset, calibrating `z₀` with `model`'s constants and
/// convention.
pub fn builtin_preset(preset: Preset, model: &ResponseModel) -> Result<PresetDefinition> {
    let elements = preset.elements();
    let z0 = preset.calibrate(&elements, model)?;
    let anchor = preset.anchor();
    Ok(PresetDefinition {
        preset,
        params: elements.with_z0(z0),
        state: preset.default_state(),
        omega: anchor.omega,
        anchor,
        axis: preset.axis(),
        grid: preset.axis().default_grid(),
        series: preset.series(),
    })
}

/// Searches `[lo, hi]` in the natural variable of `preset`, returning one
/// crossing list per series (frequency for fig2, temperature otherwise).
pub fn preset_crossings(
    def: &PresetDefinition,
    model: &ResponseModel,
    lo: f64,
    hi: f64,
    scan: &crate::crossing::ScanConfig,
) -> Result<Vec<Vec<crate::crossing::CrossingResult>>> {
    let mut out = vec![];
    for s in &def.series {
        let state = s.apply(&def.state);
        let found = match def.axis {
            Axis::Omega => model.find_epsilon_zero_in_omega(&def.params, &state, lo, hi, scan)?,
            Axis::Temperature => {
                model.find_epsilon_zero_in_temperature(&def.params, &state, def.omega, lo, hi, scan)?
            }
        };
        out.push(found);
    }
    Ok(out)
}
