//! Superposition of finite deformations: coaxial composition, Almansi strain and its series
//! in the reduced stresses, the strain rate update and the corotational stress rate.

pub mod almansi;
pub mod coaxial;
pub mod kinematics;
pub mod rate;

pub use almansi::{
    almansi_from_displacement, reduced_stress_from_almansi, strain_from_reduced_stress_adaptive,
    strain_from_reduced_stress_closed, strain_from_reduced_stress_series,
    DisplacementGradientField, SeriesStrain, SERIES_MAX_TERMS, SERIES_TERM_TOL,
};
pub use coaxial::{
    compose_coaxial, compose_coaxial_log, incremental_hooke, stress_increment_coaxial,
    CoaxialIncrement,
};
pub use kinematics::{
    corotational_derivative, linearized_superposition_rate, RateConvention, ReducedStressRate,
    VelocityGradient, ANTISYMMETRY_TOL,
};
pub use rate::{
    integrate_strain_rate, strain_rate, strain_rate_update, Integrator, StrainTrajectory,
};
