//! Physical constants.

/// The two constants the thermal model depends on.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values (`k_b` is exact in the 2019 SI).
    pub const CODATA: PhysicalConstants = PhysicalConstants { hbar: 1.054_571_817e-34, k_b: 1.380_649e-23 };

    /// `ħω / (k_B T)`.
    pub fn quantum_ratio(&self, omega: f64, temperature: f64) -> f64 {
        self.hbar * omega / (self.k_b * temperature)
    }

    pub(crate) fn validate(&self) -> crate::Result<()> {
        crate::error::positive("hbar", self.hbar)?;
        crate::error::positive("k_b", self.k_b)?;
        Ok(())
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_values() {
        let c = PhysicalConstants::default();
        assert_eq!(c.hbar, 1.054571817e-34);
        assert_eq!(c.k_b, 1.380649e-23);
    }

    #[test]
    fn ratio_is_ln2_at_matching_temperature() {
        let c = PhysicalConstants::CODATA;
        let omega = 1.0e10;
        let t = c.hbar * omega / (c.k_b * core::f64::consts::LN_2);
        assert!((c.quantum_ratio(omega, t) - core::f64::consts::LN_2).abs() < 1e-15);
    }
}
