//! Thermal-quantum response of a mesoscopic composite right/left-handed
//! transmission-line (CRLH-TL) unit cell.
//!
//! The crate evaluates the effective permittivity `ε` and permeability `μ`
//! of a single CRLH-TL unit cell when the travelling current field sits in a
//! thermal Fock state, classifies the handedness of the cell, and locates the
//! frequency and temperature at which `ε` changes sign.
//!
//! Everything here is pure arithmetic on `f64` values. The crate is
//! `no_std` and only needs `alloc` for crossing lists and sweep records;
//! file formats, parallel sweeps and the command line live in the `crlh`
//! companion crate.
//!
//! ```
//! use crlh_core::{ResponseModel, ThermalFockState, UnitCellParams};
//!
//! let params = UnitCellParams::new(250e-6, 6.50e-3, 9.0e-3, 350e-12, 1.0e-6).unwrap();
//! let state = ThermalFockState::new(1, 200.0, 1.0).unwrap();
//! let model = ResponseModel::default();
//! let response = model.evaluate(&params, &state, 2.9e9).unwrap();
//! assert!(response.mu_eff < 0.0);
//! ```

#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cell;
pub mod constants;
pub mod crossing;
pub mod dispersion;
mod error;
pub mod preset;
pub mod response;
pub mod sweep;
pub mod thermal;

pub use cell::{classical_epsilon, classical_mu, derive_cell_quantities, DerivedCellQuantities, UnitCellParams};
pub use constants::PhysicalConstants;
pub use crossing::{CrossingResult, CrossingSide, CrossingTolerance, ScanConfig};
pub use dispersion::{beta, DispersionPoint, Regime};
pub use error::{Error, Result};
pub use preset::{builtin_preset, preset_crossings, Preset, PresetDefinition};
pub use response::{calibrate_z0, CalibrationAnchor, Handedness, MaterialResponse, ResponseModel};
pub use sweep::{run_sweep, Axis, Grid, SeriesOverride, Spacing, SweepMetadata, SweepRecord, SweepResult, SweepSpec};
pub use thermal::{
    bogoliubov_params, coth, current_fluctuation_thermal, thermal_factor, thermal_photon_number, BogoliubovParams,
    CothConvention, ThermalFockState,
};

/// Version string recorded in sweep metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
