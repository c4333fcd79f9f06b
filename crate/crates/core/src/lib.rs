//! Finite-strain elasticity kernels built on the logarithmic (Hencky) strain.

pub mod analytic;
pub mod constitutive;
pub mod error;
pub mod superposition;
pub mod tensor;
pub mod verify;
pub mod work;

pub use constitutive::{
    DeformationState, ElasticModuli, PoissonInput, StrainConvention, StrainState, StressLaw,
    StressState,
};
pub use error::{Error, Result};
pub use tensor::{left_stretch, EigenSystem, SymTensor3, Tensor3};
