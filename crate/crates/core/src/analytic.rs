//! Closed-form solutions: the rod in simple tension or compression, the membrane under
//! equal biaxial tension, and the thin inflated balloon.

use serde::Serialize;

use crate::constitutive::ElasticModuli;
use crate::error::{ensure_finite, Error, Result};

/// Wall ratio `h/R` above which the thin-wall balloon solution is flagged.
pub const THIN_WALL_LIMIT: f64 = 0.05;

/// `s·e^s - (e^s - 1) = Σ_{n≥2} (n-1) sⁿ/n!`, the shape of the uniaxial and biaxial energies.
pub(crate) fn energy_shape(s: f64) -> f64 {
    if s.abs() < 0.5 {
        let mut term = s;
        let mut sum = 0.0;
        for n in 2..40 {
            term *= s / n as f64;
            let add = (n - 1) as f64 * term;
            sum += add;
            if add.abs() <= 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        s * s.exp() - s.exp_m1()
    }
}

/// Rod stretched along its axis with free lateral surfaces.
///
/// `lambda` is `∂w/∂z` referred to the final state, so the axial stretch is `1/(1-λ)` and
/// the Swainger axial strain equals `λ`. The lateral parameter `x` gives the lateral
/// stretch `1/(1+x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RodSolution {
    pub lambda: f64,
    pub lateral: f64,
    pub axial_stretch: f64,
    pub lateral_stretch: f64,
    /// Axial Cauchy stress `S_z`.
    pub axial_stress: f64,
    /// Secant modulus `S_z/λ`; equals `E` in the limit `λ → 0`.
    pub secant_modulus: f64,
    /// Stored energy per unit reference volume.
    pub energy: f64,
}

impl RodSolution {
    /// Principal stretches ordered (lateral, lateral, axial).
    pub fn stretches(&self) -> [f64; 3] {
        [
            self.lateral_stretch,
            self.lateral_stretch,
            self.axial_stretch,
        ]
    }

    /// `S_z / (E λ)`.
    pub fn secant_ratio(&self, moduli: &ElasticModuli) -> f64 {
        self.secant_modulus / moduli.young()
    }
}

/// `S_z = -E ln(1-λ)` and `x = (1-λ)^(-1/m) - 1`.
pub fn rod(lambda: f64, moduli: &ElasticModuli) -> Result<RodSolution> {
    ensure_finite(&[lambda], "rod parameter")?;
    if lambda >= 1.0 {
        return Err(Error::Domain {
            param: "lambda",
            value: lambda,
            constraint: "must be < 1 (lambda = 1 is infinite extension)",
        });
    }
    let e = moduli.young();
    let nu = moduli.poisson();
    let log_axial = -(-lambda).ln_1p();
    let stress = e * log_axial;
    let secant_ratio = if lambda == 0.0 {
        1.0
    } else {
        log_axial / lambda
    };
    Ok(RodSolution {
        lambda,
        lateral: (nu * log_axial).exp_m1(),
        axial_stretch: log_axial.exp(),
        lateral_stretch: (-nu * log_axial).exp(),
        axial_stress: stress,
        secant_modulus: e * secant_ratio,
        energy: rod_energy(stress, moduli)?,
    })
}

/// `A = (9K²/E)·{1 + e^(S_z/3K)(S_z/3K - 1)}`, or `S_z²/(2E)` for an incompressible rod.
pub fn rod_energy(axial_stress: f64, moduli: &ElasticModuli) -> Result<f64> {
    ensure_finite(&[axial_stress], "axial stress")?;
    let e = moduli.young();
    Ok(match moduli.bulk() {
        None => axial_stress * axial_stress / (2.0 * e),
        Some(k) => 9.0 * k * k / e * energy_shape(axial_stress / (3.0 * k)),
    })
}

/// Membrane under equal biaxial tension with a stress-free thickness direction.
///
/// `x` is the in-plane parameter (in-plane stretch `1/(1-x)`); `lambda` is the thickness
/// parameter (thickness stretch `1/(1+λ)`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MembraneSolution {
    pub x: f64,
    pub lambda: f64,
    pub in_plane_stretch: f64,
    pub thickness_stretch: f64,
    /// `S_r = S_φ`.
    pub in_plane_stress: f64,
    pub energy: f64,
}

impl MembraneSolution {
    /// Principal stretches ordered (radial, hoop, thickness).
    pub fn stretches(&self) -> [f64; 3] {
        [
            self.in_plane_stretch,
            self.in_plane_stretch,
            self.thickness_stretch,
        ]
    }
}

/// `λ = (1-x)^(-2/(m-1)) - 1` and `S_r = -(E m/(m-1)) ln(1-x)`.
pub fn membrane(x: f64, moduli: &ElasticModuli) -> Result<MembraneSolution> {
    ensure_finite(&[x], "membrane parameter")?;
    if x >= 1.0 {
        return Err(Error::Domain {
            param: "x",
            value: x,
            constraint: "must be < 1",
        });
    }
    let nu = moduli.poisson();
    let log_in_plane = -(-x).ln_1p();
    let exponent = 2.0 * nu / (1.0 - nu);
    let stress = moduli.biaxial_modulus() * log_in_plane;
    Ok(MembraneSolution {
        x,
        lambda: (exponent * log_in_plane).exp_m1(),
        in_plane_stretch: log_in_plane.exp(),
        thickness_stretch: (-exponent * log_in_plane).exp(),
        in_plane_stress: stress,
        energy: membrane_energy(stress, moduli)?,
    })
}

/// `A = (E m(m-1)/(2(m-2)²))·{1 + e^(2S_r/3K)(2S_r/3K - 1)}`, or `(1-ν) S_r²/E` when
/// incompressible.
pub fn membrane_energy(in_plane_stress: f64, moduli: &ElasticModuli) -> Result<f64> {
    ensure_finite(&[in_plane_stress], "in-plane stress")?;
    let e = moduli.young();
    let nu = moduli.poisson();
    Ok(match moduli.bulk() {
        None => (1.0 - nu) * in_plane_stress * in_plane_stress / e,
        Some(k) => {
            9.0 * k * k * (1.0 - nu) / (2.0 * e) * energy_shape(2.0 * in_plane_stress / (3.0 * k))
        }
    })
}

/// Thin spherical balloon inflated from radius `R` to `ρR`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BalloonSolution {
    pub ratio: f64,
    pub thickness: f64,
    pub radius: f64,
    pub current_radius: f64,
    pub current_thickness: f64,
    /// Membrane stress `S_l`.
    pub stress: f64,
    /// Excess pressure `p`.
    pub pressure: f64,
}

/// `p = 2E (h/R) (m/(m-1)) ln ρ / ρ^((m+1)/(m-1))`, `S_l = (E m/(m-1)) ln ρ` and
/// `h_x = h ρ^(-2/(m-1))`.
pub fn balloon(
    ratio: f64,
    thickness: f64,
    radius: f64,
    moduli: &ElasticModuli,
) -> Result<BalloonSolution> {
    ensure_finite(&[ratio, thickness, radius], "balloon geometry")?;
    for (param, value) in [("rho", ratio), ("h", thickness), ("R", radius)] {
        if value <= 0.0 {
            return Err(Error::Domain {
                param,
                value,
                constraint: "must be > 0",
            });
        }
    }
    let wall = thickness / radius;
    if wall > THIN_WALL_LIMIT {
        log::warn!("h/R = {wall} exceeds {THIN_WALL_LIMIT}; the thin-wall solution is approximate");
    }
    let nu = moduli.poisson();
    let ln_rho = ratio.ln();
    let stress = moduli.biaxial_modulus() * ln_rho;
    let pressure_exponent = (1.0 + nu) / (1.0 - nu);
    Ok(BalloonSolution {
        ratio,
        thickness,
        radius,
        current_radius: ratio * radius,
        current_thickness: thickness * (-2.0 * nu / (1.0 - nu) * ln_rho).exp(),
        stress,
        pressure: 2.0 * wall * stress * (-pressure_exponent * ln_rho).exp(),
    })
}

/// Inflation ratio of the pressure maximum, `ρ* = e^((m-1)/(m+1))`.
pub fn balloon_peak_ratio(moduli: &ElasticModuli) -> f64 {
    let nu = moduli.poisson();
    ((1.0 - nu) / (1.0 + nu)).exp()
}
