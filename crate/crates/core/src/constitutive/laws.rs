use std::fmt;
use std::str::FromStr;

use crate::constitutive::deformation::DeformationState;
use crate::constitutive::moduli::ElasticModuli;
use crate::constitutive::strain::{StrainConvention, StrainState};
use crate::constitutive::stress::StressState;
use crate::error::{Error, Result};
use crate::tensor::SymTensor3;

/// Allowed `|tr log V|` for states fed to an incompressible material.
pub const VOLUME_CONSTRAINT_TOL: f64 = 1e-10;

/// The three stress laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StressLaw {
    /// Small-strain Hooke law in Swainger strains.
    Hooke,
    /// Cauchy stress linear in `log V`; not hyperelastic.
    Cauchy1928,
    /// Kirchhoff stress linear in `log V`; derives from the quadratic Hencky energy.
    Kirchhoff1929,
}

impl StressLaw {
    pub fn evaluate(self, d: &DeformationState, moduli: &ElasticModuli) -> Result<StressState> {
        match self {
            StressLaw::Hooke => {
                let e = StrainState::from_stretches(
                    StrainConvention::Swainger,
                    d.principal_stretches(),
                )?;
                let s = hooke_stress(&e, moduli)?;
                Ok(StressState::from_cauchy(
                    s.cauchy(),
                    d.axes(),
                    d.volume_ratio(),
                    moduli,
                ))
            }
            StressLaw::Cauchy1928 => cauchy_stress_1928(d, moduli),
            StressLaw::Kirchhoff1929 => kirchhoff_stress_1929(d, moduli),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StressLaw::Hooke => "hooke",
            StressLaw::Cauchy1928 => "cauchy1928",
            StressLaw::Kirchhoff1929 => "kirchhoff1929",
        }
    }
}

impl fmt::Display for StressLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StressLaw {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "hooke" => Ok(StressLaw::Hooke),
            "cauchy1928" => Ok(StressLaw::Cauchy1928),
            "kirchhoff1929" => Ok(StressLaw::Kirchhoff1929),
            other => Err(format!("unknown stress law '{other}'")),
        }
    }
}

fn check_volume_constraint(log_strains: &[f64; 3]) -> Result<()> {
    let trace: f64 = log_strains.iter().sum();
    if trace.abs() > VOLUME_CONSTRAINT_TOL {
        return Err(Error::VolumeConstraint { trace });
    }
    Ok(())
}

/// `2G (ε_i - ε) + 3K ε`, the principal response shared by both finite laws.
pub(crate) fn linear_response(eps: [f64; 3], moduli: &ElasticModuli) -> Result<[f64; 3]> {
    let g2 = 2.0 * moduli.shear();
    let mean = (eps[0] + eps[1] + eps[2]) / 3.0;
    let d0 = eps[0] - mean;
    let d1 = eps[1] - mean;
    let dev = [d0, d1, -(d0 + d1)];
    match moduli.bulk() {
        Some(k) => Ok(dev.map(|d| g2 * d + 3.0 * k * mean)),
        None => {
            check_volume_constraint(&eps)?;
            Ok(dev.map(|d| g2 * d))
        }
    }
}

fn linear_response_tensor(log_v: SymTensor3, moduli: &ElasticModuli) -> Result<SymTensor3> {
    let (dev, mean) = log_v.dev_sph_split();
    let dev_part = dev * (2.0 * moduli.shear());
    match moduli.bulk() {
        Some(k) => Ok(dev_part + SymTensor3::identity() * (3.0 * k * mean)),
        None => {
            let trace = 3.0 * mean;
            if trace.abs() > VOLUME_CONSTRAINT_TOL {
                return Err(Error::VolumeConstraint { trace });
            }
            Ok(dev_part)
        }
    }
}

/// Small-strain Hooke law `S_i = 2G {e_i + (3k - 1) e}` on Swainger strains.
///
/// Strains of other conventions are converted first. For an incompressible material only
/// the deviatoric part `2G (e_i - e)` is returned; set the pressure with
/// [`StressState::with_mean_cauchy`].
pub fn hooke_stress(strain: &StrainState, moduli: &ElasticModuli) -> Result<StressState> {
    let sw = strain.convert(StrainConvention::Swainger)?;
    let e = sw.principal();
    let mean = sw.mean();
    let g2 = 2.0 * moduli.shear();
    let cauchy = match moduli.k() {
        Some(k) => e.map(|ei| g2 * (ei + (3.0 * k - 1.0) * mean)),
        None => e.map(|ei| g2 * (ei - mean)),
    };
    let volume_ratio = 1.0 / e.iter().map(|ei| 1.0 - ei).product::<f64>();
    Ok(StressState::from_cauchy(
        cauchy,
        sw.axes(),
        volume_ratio,
        moduli,
    ))
}

/// Cauchy stress law `S_i = 2G ln{ λ_i Δ^(k - 1/3) }`, i.e. `σ = 2G log V + Λ tr(log V) 1`.
///
/// The mean stress is `K ln Δ`. The stored-work of this law depends on the loading path.
pub fn cauchy_stress_1928(d: &DeformationState, moduli: &ElasticModuli) -> Result<StressState> {
    let cauchy = linear_response(d.principal_log_strains(), moduli)?;
    Ok(StressState::from_cauchy(
        cauchy,
        d.axes(),
        d.volume_ratio(),
        moduli,
    ))
}

/// Cauchy stress of the 1928 law evaluated directly from the tensor `log V`.
pub fn cauchy_stress_1928_tensor(
    d: &DeformationState,
    moduli: &ElasticModuli,
) -> Result<SymTensor3> {
    linear_response_tensor(d.log_strain(), moduli)
}

/// Kirchhoff stress law `T_i = 2G {ε_i + (3k - 1) ε}`, `T = 3K ε`.
///
/// Cauchy stresses follow as `S_i = T_i / Δ`. At `Δ = 1` this coincides with
/// [`cauchy_stress_1928`].
pub fn kirchhoff_stress_1929(d: &DeformationState, moduli: &ElasticModuli) -> Result<StressState> {
    let kirchhoff = linear_response(d.principal_log_strains(), moduli)?;
    Ok(StressState::from_kirchhoff(
        kirchhoff,
        d.axes(),
        d.volume_ratio(),
        moduli,
    ))
}

/// Kirchhoff stress of the 1929 law evaluated directly from the tensor `log V`.
pub fn kirchhoff_stress_1929_tensor(
    d: &DeformationState,
    moduli: &ElasticModuli,
) -> Result<SymTensor3> {
    linear_response_tensor(d.log_strain(), moduli)
}

/// Quadratic Hencky energy per unit reference volume,
/// `A = G Σ(ε_i - ε)² + (9K/2) ε²`.
pub fn hencky_energy(d: &DeformationState, moduli: &ElasticModuli) -> Result<f64> {
    hencky_energy_from_log_strains(d.principal_log_strains(), moduli)
}

pub fn hencky_energy_from_log_strains(eps: [f64; 3], moduli: &ElasticModuli) -> Result<f64> {
    let mean = (eps[0] + eps[1] + eps[2]) / 3.0;
    let shear_part = moduli.shear() * eps.iter().map(|e| (e - mean).powi(2)).sum::<f64>();
    match moduli.bulk() {
        Some(k) => Ok(shear_part + 4.5 * k * mean * mean),
        None => {
            check_volume_constraint(&eps)?;
            Ok(shear_part)
        }
    }
}

/// The same energy written as `G ‖dev log V‖² + (K/2) (tr log V)²`.
pub fn hencky_energy_tensorial(d: &DeformationState, moduli: &ElasticModuli) -> Result<f64> {
    let log_v = d.log_strain();
    let (dev, mean) = log_v.dev_sph_split();
    let shear_part = moduli.shear() * dev.ddot(&dev);
    let trace = 3.0 * mean;
    match moduli.bulk() {
        Some(k) => Ok(shear_part + 0.5 * k * trace * trace),
        None => {
            if trace.abs() > VOLUME_CONSTRAINT_TOL {
                return Err(Error::VolumeConstraint { trace });
            }
            Ok(shear_part)
        }
    }
}

/// Logarithmic strains that the 1929 law maps to the given principal Kirchhoff stresses.
pub fn log_strains_from_kirchhoff(t: [f64; 3], moduli: &ElasticModuli) -> [f64; 3] {
    let (e, nu) = (moduli.young(), moduli.poisson());
    [
        (t[0] - nu * (t[1] + t[2])) / e,
        (t[1] - nu * (t[2] + t[0])) / e,
        (t[2] - nu * (t[0] + t[1])) / e,
    ]
}
