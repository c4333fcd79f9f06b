//! Elastic moduli, strain conventions, kinematics and the stress laws.

pub mod deformation;
pub mod laws;
pub mod moduli;
pub mod strain;
pub mod stress;

pub use deformation::DeformationState;
pub use laws::{
    cauchy_stress_1928, cauchy_stress_1928_tensor, hencky_energy, hencky_energy_from_log_strains,
    hencky_energy_tensorial, hooke_stress, kirchhoff_stress_1929, kirchhoff_stress_1929_tensor,
    log_strains_from_kirchhoff, StressLaw, VOLUME_CONSTRAINT_TOL,
};
pub use moduli::{ElasticModuli, PoissonInput, NEAR_INCOMPRESSIBLE_RATIO};
pub use strain::{StrainConvention, StrainState};
pub use stress::StressState;
