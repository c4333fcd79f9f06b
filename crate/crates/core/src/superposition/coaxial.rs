//! Finite superposition when the principal axes stay fixed.
//!
//! Along fixed axes the Swainger strains compose multiplicatively,
//! `1 - e'_i = (1 - e_i)(1 - Δe_i)`, so the logarithmic strains simply add. Because both
//! finite laws are linear in the logarithmic strain, the stress increment depends on the
//! strain increment alone.

use crate::constitutive::laws::linear_response;
use crate::constitutive::{ElasticModuli, StrainConvention};
use crate::error::Result;

/// A coaxial strain increment together with the stress increment it produces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoaxialIncrement {
    /// Swainger increments `Δe_i`.
    pub delta_strain: [f64; 3],
    /// Cauchy stress increments `ΔS_i`.
    pub delta_stress: [f64; 3],
}

fn swainger_to_log(e: [f64; 3]) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (o, v) in out.iter_mut().zip(e) {
        *o = StrainConvention::Swainger.to_logarithmic(v)?;
    }
    Ok(out)
}

/// Composes a prior Swainger strain with a further increment along the same axes.
pub fn compose_coaxial(e: [f64; 3], delta: [f64; 3]) -> Result<[f64; 3]> {
    swainger_to_log(e)?;
    swainger_to_log(delta)?;
    let mut out = [0.0; 3];
    for i in 0..3 {
        out[i] = e[i] + delta[i] - e[i] * delta[i];
    }
    Ok(out)
}

/// Composition in logarithmic form is plain addition.
pub fn compose_coaxial_log(eps: [f64; 3], delta: [f64; 3]) -> [f64; 3] {
    [eps[0] + delta[0], eps[1] + delta[1], eps[2] + delta[2]]
}

/// `ΔS_i = -2G ln[(1 - Δe_i) Π_j (1 - Δe_j)^(k - 1/3)]`.
pub fn stress_increment_coaxial(
    delta: [f64; 3],
    moduli: &ElasticModuli,
) -> Result<CoaxialIncrement> {
    let delta_log = swainger_to_log(delta)?;
    Ok(CoaxialIncrement {
        delta_strain: delta,
        delta_stress: linear_response(delta_log, moduli)?,
    })
}

/// First-order (incremental Hooke) form `ΔS_i = 2G {Δe_i + (k - 1/3)(Δe_1 + Δe_2 + Δe_3)}`.
///
/// Incompressible materials return the deviatoric part only.
pub fn incremental_hooke(delta: [f64; 3], moduli: &ElasticModuli) -> [f64; 3] {
    let g2 = 2.0 * moduli.shear();
    let sum: f64 = delta.iter().sum();
    match moduli.k() {
        Some(k) => delta.map(|d| g2 * (d + (k - 1.0 / 3.0) * sum)),
        None => delta.map(|d| g2 * (d - sum / 3.0)),
    }
}
