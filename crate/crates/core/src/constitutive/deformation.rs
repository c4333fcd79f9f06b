use crate::constitutive::strain::{stretch_to_log, StrainState};
use crate::error::{ensure_finite, Error, Result};
use crate::tensor::{SymTensor3, Tensor3};

/// Kinematics of a homogeneous deformation: gradient, left stretch, principal stretches and
/// volume ratio.
///
/// Principal values are stored in the order of the columns of `axes()`. States built from
/// principal stretches keep the caller's axis order; states built from a general gradient
/// order them by decreasing stretch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationState {
    gradient: Tensor3,
    stretch: SymTensor3,
    log_strain: SymTensor3,
    axes: Tensor3,
    stretches: [f64; 3],
    log_strains: [f64; 3],
    volume_ratio: f64,
}

impl DeformationState {
    /// Decomposes a deformation gradient with positive determinant.
    pub fn from_gradient(f: Tensor3) -> Result<Self> {
        ensure_finite(&f.to_row_vec(), "deformation gradient")?;
        let det = f.det();
        if det <= 0.0 {
            return Err(Error::NotOrientationPreserving { det });
        }
        let es = f.left_gram().eigen()?;
        if let Some((index, &value)) = es.values.iter().enumerate().find(|(_, v)| **v <= 0.0) {
            return Err(Error::NonPositiveEigenvalue { index, value });
        }
        let log_strains = es.values.map(|b| 0.5 * b.ln());
        Ok(DeformationState {
            gradient: f,
            stretch: es.compose(f64::sqrt),
            log_strain: es.assemble(log_strains),
            axes: es.vectors,
            stretches: es.values.map(f64::sqrt),
            log_strains,
            volume_ratio: det,
        })
    }

    /// Coaxial deformation `F = diag(λ₁, λ₂, λ₃)`.
    pub fn from_stretches(stretches: [f64; 3]) -> Result<Self> {
        let mut log_strains = [0.0; 3];
        for (e, s) in log_strains.iter_mut().zip(stretches) {
            *e = stretch_to_log(s)?;
        }
        Ok(Self::coaxial(stretches, log_strains))
    }

    /// Coaxial deformation with principal logarithmic strains `ε_i = ln λ_i`.
    pub fn from_log_strains(log_strains: [f64; 3]) -> Result<Self> {
        ensure_finite(&log_strains, "logarithmic strain")?;
        Ok(Self::coaxial(log_strains.map(f64::exp), log_strains))
    }

    /// Deformation described by a strain state of any convention.
    ///
    /// Tensor-valued states give the symmetric (rotation-free) gradient `F = V`.
    pub fn from_strain(strain: &StrainState) -> Result<Self> {
        match strain.tensor() {
            None => Self::from_log_strains(strain.logarithmic_principal()),
            Some(_) => {
                let log = strain.convert(crate::StrainConvention::Logarithmic)?;
                let v = log.tensor().expect("tensor kept by conversion").exp_sym()?;
                Self::from_gradient(v.to_tensor())
            }
        }
    }

    fn coaxial(stretches: [f64; 3], log_strains: [f64; 3]) -> Self {
        DeformationState {
            gradient: Tensor3::diag(stretches),
            stretch: SymTensor3::diag(stretches),
            log_strain: SymTensor3::diag(log_strains),
            axes: Tensor3::identity(),
            stretches,
            log_strains,
            volume_ratio: stretches[0] * stretches[1] * stretches[2],
        }
    }

    pub fn gradient(&self) -> Tensor3 {
        self.gradient
    }

    /// Left stretch `V`.
    pub fn left_stretch(&self) -> SymTensor3 {
        self.stretch
    }

    /// Hencky strain tensor `log V`.
    pub fn log_strain(&self) -> SymTensor3 {
        self.log_strain
    }

    /// Principal directions, one per column.
    pub fn axes(&self) -> Tensor3 {
        self.axes
    }

    pub fn principal_stretches(&self) -> [f64; 3] {
        self.stretches
    }

    pub fn principal_log_strains(&self) -> [f64; 3] {
        self.log_strains
    }

    /// Mean logarithmic strain `ε = (ε₁ + ε₂ + ε₃)/3 = ln(Δ)/3`.
    pub fn mean_log_strain(&self) -> f64 {
        self.log_strains.iter().sum::<f64>() / 3.0
    }

    /// Volume ratio `Δ = det F`.
    pub fn volume_ratio(&self) -> f64 {
        self.volume_ratio
    }
}
