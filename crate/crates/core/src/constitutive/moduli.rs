use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bulk-to-shear ratio above which the volumetric term is flagged as badly conditioned.
pub const NEAR_INCOMPRESSIBLE_RATIO: f64 = 1e4;

/// How the lateral contraction is specified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PoissonInput {
    /// Lateral contraction number `m = 1/ν`; `f64::INFINITY` means `ν = 0`.
    LateralContraction(f64),
    /// Poisson's ratio `ν`.
    PoissonRatio(f64),
    /// The `m → 2` limit: volume is constrained and the mean stress becomes an input.
    Incompressible,
}

/// Isotropic elastic constants with all derived quantities computed once.
///
/// For a compressible material
///
/// ```text
/// k = (m + 1) / (3 (m - 2)),   K = 2 G k,   E = 2 G (1 + 1/m),
/// 3 K = E m / (m - 2),         Λ = K - 2 G / 3
/// ```
///
/// The incompressible limit carries no bulk modulus at all (`bulk()` is `None`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElasticModuli {
    shear: f64,
    poisson: f64,
    lateral_contraction: f64,
    k: Option<f64>,
    bulk: Option<f64>,
    young: f64,
    lame: Option<f64>,
}

impl ElasticModuli {
    /// Derives the full parameter set from the shear modulus and one contraction parameter.
    pub fn derive(shear: f64, input: PoissonInput) -> Result<Self> {
        if !(shear > 0.0 && shear.is_finite()) {
            return Err(Error::Domain {
                param: "G",
                value: shear,
                constraint: "shear modulus must be positive and finite",
            });
        }
        let moduli = match input {
            PoissonInput::LateralContraction(m) => {
                if m.is_nan() || m <= 2.0 {
                    return Err(Error::UnsupportedRegime {
                        param: "m",
                        value: m,
                        reason: "m must exceed 2; use the incompressible flag for m = 2",
                    });
                }
                if m.is_infinite() {
                    Self::compressible(shear, 0.0, f64::INFINITY, 1.0 / 3.0)
                } else {
                    Self::compressible(shear, 1.0 / m, m, (m + 1.0) / (3.0 * (m - 2.0)))
                }
            }
            PoissonInput::PoissonRatio(nu) => {
                if !(0.0..0.5).contains(&nu) {
                    return Err(Error::UnsupportedRegime {
                        param: "nu",
                        value: nu,
                        reason: "Poisson's ratio must lie in [0, 1/2); use the incompressible flag for 1/2",
                    });
                }
                let m = if nu == 0.0 { f64::INFINITY } else { 1.0 / nu };
                Self::compressible(shear, nu, m, (1.0 + nu) / (3.0 * (1.0 - 2.0 * nu)))
            }
            PoissonInput::Incompressible => ElasticModuli {
                shear,
                poisson: 0.5,
                lateral_contraction: 2.0,
                k: None,
                bulk: None,
                young: 3.0 * shear,
                lame: None,
            },
        };
        if moduli.is_near_incompressible() {
            log::warn!(
                "K/G = {:.3e} exceeds {:.0e}: volumetric response is badly conditioned",
                moduli.bulk_to_shear(),
                NEAR_INCOMPRESSIBLE_RATIO
            );
        }
        Ok(moduli)
    }

    /// Shorthand for `derive(g, LateralContraction(m))`.
    pub fn from_shear_and_m(shear: f64, m: f64) -> Result<Self> {
        Self::derive(shear, PoissonInput::LateralContraction(m))
    }

    fn compressible(shear: f64, poisson: f64, m: f64, k: f64) -> Self {
        let bulk = 2.0 * shear * k;
        ElasticModuli {
            shear,
            poisson,
            lateral_contraction: m,
            k: Some(k),
            bulk: Some(bulk),
            young: 2.0 * shear * (1.0 + poisson),
            lame: Some(bulk - 2.0 * shear / 3.0),
        }
    }

    /// Shear modulus `G`.
    pub fn shear(&self) -> f64 {
        self.shear
    }

    /// Poisson's ratio `ν = 1/m`.
    pub fn poisson(&self) -> f64 {
        self.poisson
    }

    /// Lateral contraction number `m` (infinite when `ν = 0`, 2 when incompressible).
    pub fn lateral_contraction(&self) -> f64 {
        self.lateral_contraction
    }

    /// The dimensionless ratio `k = K / 2G`.
    pub fn k(&self) -> Option<f64> {
        self.k
    }

    /// Bulk modulus `K`.
    pub fn bulk(&self) -> Option<f64> {
        self.bulk
    }

    /// `1/K`, zero in the incompressible limit.
    pub fn inverse_bulk(&self) -> f64 {
        self.bulk.map_or(0.0, |k| 1.0 / k)
    }

    /// Young's modulus `E`.
    pub fn young(&self) -> f64 {
        self.young
    }

    /// First Lamé parameter `Λ = K - 2G/3`.
    pub fn lame(&self) -> Option<f64> {
        self.lame
    }

    pub fn is_incompressible(&self) -> bool {
        self.bulk.is_none()
    }

    /// `K/G`; infinite for the incompressible flag.
    pub fn bulk_to_shear(&self) -> f64 {
        self.bulk.map_or(f64::INFINITY, |k| k / self.shear)
    }

    pub fn is_near_incompressible(&self) -> bool {
        !self.is_incompressible() && self.bulk_to_shear() > NEAR_INCOMPRESSIBLE_RATIO
    }

    /// `E m / (m - 1) = E / (1 - ν)`, the in-plane modulus of an equibiaxially stretched membrane.
    pub fn biaxial_modulus(&self) -> f64 {
        self.young / (1.0 - self.poisson)
    }
}
