//! The dimensionless CRLH dispersion quantity
//! `β² = (ω/ω_r)² + (ω_l/ω)² − k ω_l²` and its regime.

use crate::cell::{derive_cell_quantities, UnitCellParams};
use crate::error::{positive, Error, Result};

/// Default dead zone for [`Regime::BandEdge`], relative to the sum of the
/// magnitudes of the three terms of `β²`.
pub const DEFAULT_EDGE_TOL: f64 = 1e-9;

/// Sign of `β²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Regime {
    /// `β² > 0`.
    Propagating,
    /// `β² < 0`.
    Evanescent,
    /// `|β²|` inside the edge dead zone.
    BandEdge,
}

/// `β²` at one frequency together with its classification.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DispersionPoint {
    /// The argument of the square root.
    pub beta_squared: f64,
    /// Classification of `beta_squared`.
    pub regime: Regime,
    /// `√|β²|`.
    pub beta_magnitude: f64,
}

/// Evaluates `β²` at angular frequency `omega`.
///
/// `edge_tol` is relative: `|β²| ≤ edge_tol · ((ω/ω_r)² + (ω_l/ω)² + k ω_l²)`
/// is reported as a band edge.
pub fn beta(params: &UnitCellParams, omega: f64, edge_tol: f64) -> Result<DispersionPoint> {
    let d = derive_cell_quantities(params)?;
    let omega = positive("omega", omega)?;
    if !(edge_tol >= 0.0 && edge_tol.is_finite()) {
        return Err(Error::InvalidParameter { name: "edge_tol", value: edge_tol });
    }
    let high = (omega / d.omega_r) * (omega / d.omega_r);
    let low = (d.omega_l / omega) * (d.omega_l / omega);
    let coupling = d.k_coupling * d.omega_l * d.omega_l;
    let beta_squared = high + low - coupling;
    if !beta_squared.is_finite() {
        return Err(Error::Overflow { what: "beta_squared" });
    }
    let scale = high + low + coupling;
    let regime = if beta_squared.abs() <= edge_tol * scale {
        Regime::BandEdge
    } else if beta_squared > 0.0 {
        Regime::Propagating
    } else {
        Regime::Evanescent
    };
    Ok(DispersionPoint { beta_squared, regime, beta_magnitude: libm::sqrt(beta_squared.abs()) })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::cell::DEFAULT_Z0;

    #[test]
    fn symmetric_cell_sits_on_band_edge() {
        let p = UnitCellParams::new(1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        let b = beta(&p, 1.0, DEFAULT_EDGE_TOL).unwrap();
        assert_eq!(b.beta_squared, 0.0);
        assert_eq!(b.regime, Regime::BandEdge);
        assert_eq!(b.beta_magnitude, 0.0);
    }

    #[test]
    fn fig2_at_2_9e9_is_propagating() {
        let p = UnitCellParams::new(148e-6, 595e-6, 35e-3, 480e-12, DEFAULT_Z0).unwrap();
        let b = beta(&p, 2.9e9, DEFAULT_EDGE_TOL).unwrap();
        // mpmath, 50 digits
        let expected = 141_287_763.513_512_706_79;
        assert!(((b.beta_squared - expected) / expected).abs() < 1e-12);
        assert_eq!(b.regime, Regime::Propagating);
    }

    #[test]
    fn evanescent_between_the_resonances() {
        // unbalanced cell: ω_se = 1/√(L_r C_l) = 1, ω_sh = 1/√(L_l C_r) = 0.5
        let p = UnitCellParams::new(1.0, 4.0, 1.0, 1.0, 1.0).unwrap();
        let b = beta(&p, 0.7, DEFAULT_EDGE_TOL).unwrap();
        assert!(b.beta_squared < 0.0);
        assert_eq!(b.regime, Regime::Evanescent);
        assert!((b.beta_magnitude * b.beta_magnitude + b.beta_squared).abs() < 1e-15);
    }

    #[test]
    fn grows_above_the_band_edge() {
        let p = UnitCellParams::new(148e-6, 595e-6, 35e-3, 480e-12, DEFAULT_Z0).unwrap();
        let mut w = 1e6;
        while w < 1e12 {
            let a = beta(&p, w, 0.0).unwrap().beta_squared;
            let b = beta(&p, 2.0 * w, 0.0).unwrap().beta_squared;
            assert!(b > a);
            w *= 3.0;
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = UnitCellParams::new(1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!(beta(&p, 0.0, 1e-9).is_err());
        assert!(beta(&p, 1.0, -1.0).is_err());
        assert!(beta(&p, 1.0, f64::NAN).is_err());
    }
}
