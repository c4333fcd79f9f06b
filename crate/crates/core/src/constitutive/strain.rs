use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{SymTensor3, Tensor3};

/// The four principal strain measures, each a function of the principal stretch `λ`.
///
/// | convention    | value               | domain     |
/// |---------------|---------------------|------------|
/// | `Swainger`    | `1 - 1/λ`           | `e < 1`    |
/// | `Engineering` | `λ - 1`             | `e > -1`   |
/// | `Almansi`     | `(1 - 1/λ²) / 2`    | `e < 1/2`  |
/// | `Logarithmic` | `ln λ`              | any        |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrainConvention {
    Swainger,
    Engineering,
    Almansi,
    Logarithmic,
}

impl StrainConvention {
    pub const ALL: [StrainConvention; 4] = [
        StrainConvention::Swainger,
        StrainConvention::Engineering,
        StrainConvention::Almansi,
        StrainConvention::Logarithmic,
    ];

    /// Converts one principal value of this convention to the logarithmic strain.
    pub fn to_logarithmic(self, value: f64) -> Result<f64> {
        if !value.is_finite() {
            return Err(Error::NonFinite { what: "strain" });
        }
        match self {
            StrainConvention::Swainger if value >= 1.0 => Err(Error::Domain {
                param: "swainger strain",
                value,
                constraint: "must be < 1",
            }),
            StrainConvention::Engineering if value <= -1.0 => Err(Error::Domain {
                param: "engineering strain",
                value,
                constraint: "must be > -1",
            }),
            StrainConvention::Almansi if value >= 0.5 => Err(Error::Domain {
                param: "almansi strain",
                value,
                constraint: "must be < 1/2",
            }),
            StrainConvention::Swainger => Ok(-(-value).ln_1p()),
            StrainConvention::Engineering => Ok(value.ln_1p()),
            StrainConvention::Almansi => Ok(-0.5 * (-2.0 * value).ln_1p()),
            StrainConvention::Logarithmic => Ok(value),
        }
    }

    /// Converts a logarithmic strain into this convention.
    pub fn from_logarithmic(self, eps: f64) -> f64 {
        match self {
            StrainConvention::Swainger => -(-eps).exp_m1(),
            StrainConvention::Engineering => eps.exp_m1(),
            StrainConvention::Almansi => -0.5 * (-2.0 * eps).exp_m1(),
            StrainConvention::Logarithmic => eps,
        }
    }

    /// Strain of this convention for a principal stretch.
    pub fn from_stretch(self, stretch: f64) -> Result<f64> {
        Ok(self.from_logarithmic(stretch_to_log(stretch)?))
    }

    pub fn name(self) -> &'static str {
        match self {
            StrainConvention::Swainger => "swainger",
            StrainConvention::Engineering => "engineering",
            StrainConvention::Almansi => "almansi",
            StrainConvention::Logarithmic => "logarithmic",
        }
    }
}

impl fmt::Display for StrainConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrainConvention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "swainger" => Ok(StrainConvention::Swainger),
            "engineering" => Ok(StrainConvention::Engineering),
            "almansi" => Ok(StrainConvention::Almansi),
            "logarithmic" | "log" | "hencky" => Ok(StrainConvention::Logarithmic),
            other => Err(format!("unknown strain convention '{other}'")),
        }
    }
}

pub(crate) fn stretch_to_log(stretch: f64) -> Result<f64> {
    if !(stretch > 0.0 && stretch.is_finite()) {
        return Err(Error::Domain {
            param: "stretch",
            value: stretch,
            constraint: "principal stretch must be positive and finite",
        });
    }
    Ok(stretch.ln())
}

/// A strain measured in one convention.
///
/// Principal values are always present. When built from a full tensor, the tensor is kept
/// and the principal values are its eigenvalues in descending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrainState {
    convention: StrainConvention,
    principal: [f64; 3],
    tensor: Option<SymTensor3>,
}

impl StrainState {
    /// Principal strains along the fixed coordinate axes.
    pub fn new(convention: StrainConvention, principal: [f64; 3]) -> Result<Self> {
        for v in principal {
            convention.to_logarithmic(v)?;
        }
        Ok(StrainState {
            convention,
            principal,
            tensor: None,
        })
    }

    /// A full strain tensor of the given convention.
    pub fn from_tensor(convention: StrainConvention, tensor: SymTensor3) -> Result<Self> {
        let es = tensor.eigen()?;
        for v in es.values {
            convention.to_logarithmic(v)?;
        }
        Ok(StrainState {
            convention,
            principal: es.values,
            tensor: Some(tensor),
        })
    }

    pub fn from_stretches(convention: StrainConvention, stretches: [f64; 3]) -> Result<Self> {
        let mut principal = [0.0; 3];
        for (p, s) in principal.iter_mut().zip(stretches) {
            *p = convention.from_stretch(s)?;
        }
        Ok(StrainState {
            convention,
            principal,
            tensor: None,
        })
    }

    pub fn convention(&self) -> StrainConvention {
        self.convention
    }

    pub fn principal(&self) -> [f64; 3] {
        self.principal
    }

    pub fn tensor(&self) -> Option<SymTensor3> {
        self.tensor
    }

    /// Mean of the principal values.
    pub fn mean(&self) -> f64 {
        self.principal.iter().sum::<f64>() / 3.0
    }

    /// Principal axes as the columns of a rotation; the identity for axis-aligned states.
    pub fn axes(&self) -> Tensor3 {
        match self.tensor {
            Some(t) => t
                .eigen()
                .map(|es| es.vectors)
                .unwrap_or(Tensor3::identity()),
            None => Tensor3::identity(),
        }
    }

    pub fn logarithmic_principal(&self) -> [f64; 3] {
        // domain already validated at construction
        self.principal
            .map(|v| self.convention.to_logarithmic(v).unwrap_or(f64::NAN))
    }

    pub fn stretches(&self) -> [f64; 3] {
        self.logarithmic_principal().map(f64::exp)
    }

    /// Re-expresses the same deformation in another convention.
    ///
    /// Conversions pass through the logarithmic strain using `ln_1p`/`exp_m1`, so round trips
    /// are accurate to a few ulps even for tiny strains.
    pub fn convert(&self, target: StrainConvention) -> Result<StrainState> {
        if target == self.convention {
            return Ok(*self);
        }
        let source = self.convention;
        let principal = self
            .principal
            .map(|v| target.from_logarithmic(source.to_logarithmic(v).unwrap_or(f64::NAN)));
        let tensor = match self.tensor {
            Some(t) => {
                let es = t.eigen()?;
                let mut mapped = [0.0; 3];
                for (m, v) in mapped.iter_mut().zip(es.values) {
                    *m = target.from_logarithmic(source.to_logarithmic(v)?);
                }
                Some(es.assemble(mapped))
            }
            None => None,
        };
        Ok(StrainState {
            convention: target,
            principal,
            tensor,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use StrainConvention::*;

    #[test]
    fn undeformed_is_zero_everywhere() {
        let s = StrainState::new(Logarithmic, [0.0; 3]).unwrap();
        for c in StrainConvention::ALL {
            assert_eq!(s.convert(c).unwrap().principal(), [0.0; 3]);
        }
    }

    #[test]
    fn log_to_almansi() {
        let s = StrainState::new(Logarithmic, [0.1; 3]).unwrap();
        let a = s.convert(Almansi).unwrap();
        for v in a.principal() {
            assert_relative_eq!(v, 0.5 * (1.0 - (-0.2f64).exp()), max_relative = 1e-15);
            assert_relative_eq!(v, 0.090_634_623_461_009_08, max_relative = 1e-14);
        }
    }

    #[test]
    fn stretch_of_two() {
        let expected = [
            (Swainger, 0.5),
            (Engineering, 1.0),
            (Almansi, 0.375),
            (Logarithmic, std::f64::consts::LN_2),
        ];
        for (c, v) in expected {
            let s = StrainState::from_stretches(c, [2.0, 1.0, 1.0]).unwrap();
            assert_relative_eq!(s.principal()[0], v, max_relative = 1e-15);
            assert_relative_eq!(s.stretches()[0], 2.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn out_of_domain_values() {
        assert!(matches!(
            StrainState::new(Swainger, [1.0, 0.0, 0.0]),
            Err(Error::Domain { .. })
        ));
        assert!(StrainState::new(Almansi, [0.0, 0.5, 0.0]).is_err());
        assert!(StrainState::new(Engineering, [0.0, 0.0, -1.0]).is_err());
        assert!(StrainState::new(Logarithmic, [-50.0, 0.0, 60.0]).is_ok());
        assert!(StrainState::new(Logarithmic, [f64::NAN, 0.0, 0.0]).is_err());
        assert!(StrainState::from_stretches(Swainger, [0.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn tensor_conversion_preserves_axes() {
        let q = Tensor3::rotation([1.0, 1.0, 0.0], 0.4);
        let eps = SymTensor3::diag([0.3, -0.1, 0.05]).rotate(&q);
        let s = StrainState::from_tensor(Logarithmic, eps).unwrap();
        let a = s.convert(Almansi).unwrap();
        let expected =
            SymTensor3::diag([0.3, -0.1, 0.05].map(|e| Almansi.from_logarithmic(e))).rotate(&q);
        assert!((a.tensor().unwrap() - expected).norm() < 1e-15);
        let back = a.convert(Logarithmic).unwrap();
        assert!((back.tensor().unwrap() - eps).norm() < 1e-15);
    }

    #[test]
    fn parse_convention() {
        assert_eq!("Almansi".parse::<StrainConvention>(), Ok(Almansi));
        assert_eq!("hencky".parse::<StrainConvention>(), Ok(Logarithmic));
        assert!("green".parse::<StrainConvention>().is_err());
    }
}
