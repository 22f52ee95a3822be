//! Lumped-element description of one CRLH-TL unit cell and its classical
//! (non-thermal) effective permittivity and permeability.
//!
//! The cell has a series capacitor `C_l` and series inductance `L_r`, and a
//! shunt inductance `L_l` and shunt capacitor `C_r`. Effective `ε` and `μ`
//! are reported at circuit level, in farads and henries per cell.

use crate::error::{positive, Result};

/// Cell length used when nothing else fixes it, in meters.
pub const DEFAULT_Z0: f64 = 1.0e-6;

/// The four lumped elements of the unit cell plus its length.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UnitCellParams {
    /// Series capacitor `C_l`, farads.
    pub c_l: f64,
    /// Shunt inductance `L_l`, henries.
    pub l_l: f64,
    /// Shunt capacitor `C_r`, farads.
    pub c_r: f64,
    /// Series inductance `L_r`, henries.
    pub l_r: f64,
    /// Length of one unit cell, meters.
    pub z0: f64,
}

impl UnitCellParams {
    /// Builds a validated parameter set.
    pub fn new(c_l: f64, l_l: f64, c_r: f64, l_r: f64, z0: f64) -> Result<Self> {
        let p = UnitCellParams { c_l, l_l, c_r, l_r, z0 };
        p.validate()?;
        Ok(p)
    }

    /// Checks that every field is strictly positive and finite.
    pub fn validate(&self) -> Result<()> {
        positive("c_l", self.c_l)?;
        positive("l_l", self.l_l)?;
        positive("c_r", self.c_r)?;
        positive("l_r", self.l_r)?;
        positive("z0", self.z0)?;
        Ok(())
    }

    /// Same elements, different cell length.
    pub fn with_z0(self, z0: f64) -> Self {
        UnitCellParams { z0, ..self }
    }
}

/// Resonances and couplings that follow from the four elements.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DerivedCellQuantities {
    /// `1/√(L_r C_r)`, rad/s.
    pub omega_r: f64,
    /// `1/√(L_l C_l)`, rad/s.
    pub omega_l: f64,
    /// `L_r C_l + L_l C_r`, s².
    pub k_coupling: f64,
    /// `C_r + C_l`, farads.
    pub c_total: f64,
}

/// Computes `ω_r`, `ω_l`, `k` and the total capacitance `C`.
pub fn derive_cell_quantities(params: &UnitCellParams) -> Result<DerivedCellQuantities> {
    params.validate()?;
    Ok(DerivedCellQuantities {
        omega_r: 1.0 / libm::sqrt(params.l_r * params.c_r),
        omega_l: 1.0 / libm::sqrt(params.l_l * params.c_l),
        k_coupling: params.l_r * params.c_l + params.l_l * params.c_r,
        c_total: params.c_r + params.c_l,
    })
}

/// Classical effective permittivity `C_r − 1/(ω² L_l)`, farads.
pub fn classical_epsilon(params: &UnitCellParams, omega: f64) -> Result<f64> {
    params.validate()?;
    let omega = positive("omega", omega)?;
    Ok(params.c_r - 1.0 / (omega * omega * params.l_l))
}

/// Classical effective permeability `L_r − 1/(ω² C_l)`, henries.
pub fn classical_mu(params: &UnitCellParams, omega: f64) -> Result<f64> {
    params.validate()?;
    let omega = positive("omega", omega)?;
    Ok(params.l_r - 1.0 / (omega * omega * params.c_l))
}
